//! Squarefree divisor complexes: the faces record which generator subsets
//! can be subtracted from a semigroup element while staying inside the
//! semigroup. Their reduced homology carries the graded Betti numbers of
//! the corresponding toric ideal.

use crate::membership::{AffineEngine, AffineSemigroup, GradedEngine, MembershipGrid};
use crate::semigroup::ShiftedCurve;
use crate::simplicial::SimplicialComplex;

/// Divisor complex of `v` in a general `N^m` semigroup, on the vertices
/// `1..=n'` (one per generator). A subset is a face iff subtracting its
/// generators from `v` stays componentwise nonnegative and in the
/// semigroup.
pub fn delta_v(grid: &MembershipGrid, v: &[u64]) -> SimplicialComplex {
    let n = grid.generators().len();
    let universe = vertex_range_mask(1, n);
    SimplicialComplex::from_oracle(universe, |mask| grid.contains_minus(v, mask))
}

/// One-shot version of [`delta_v`] building its own membership table.
pub fn delta_v_of(sg: &AffineSemigroup, v: &[u64]) -> SimplicialComplex {
    let grid = MembershipGrid::build(sg, v);
    delta_v(&grid, v)
}

/// Divisor complex of the degree `(l, r)` of the homogenized curve
/// semigroup, on the vertices `0..=n` (vertex 0 is the homogenizing
/// generator).
pub fn delta_lr(engine: &GradedEngine, l: u32, r: u64) -> SimplicialComplex {
    let universe = vertex_range_mask(0, engine.vertex_count() - 1);
    SimplicialComplex::from_oracle(universe, |mask| engine.representable(l, r, mask))
}

/// One-shot version of [`delta_lr`].
pub fn delta_lr_of(sc: &ShiftedCurve, l: u32, r: u64) -> SimplicialComplex {
    let mut engine = GradedEngine::new(sc);
    engine.ensure(r);
    delta_lr(&engine, l, r)
}

/// Divisor complex of the affine degree `m`, on the vertices `1..=n`.
pub fn delta_m(engine: &AffineEngine, m: u64) -> SimplicialComplex {
    let universe = vertex_range_mask(1, engine.vertex_count());
    SimplicialComplex::from_oracle(universe, |mask| engine.representable(m, mask))
}

/// One-shot version of [`delta_m`].
pub fn delta_m_of(sc: &ShiftedCurve, m: u64) -> SimplicialComplex {
    let mut engine = AffineEngine::new(sc);
    engine.ensure(m);
    delta_m(&engine, m)
}

fn vertex_range_mask(lo: usize, hi: usize) -> u16 {
    let mut m = 0u16;
    for v in lo..=hi {
        m |= 1 << v;
    }
    m
}

/// Cheap acyclicity pre-filter applied before any rank computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Triviality {
    /// The whole vertex set is a face; the complex is a simplex.
    FullSimplex,
    /// The complex is a cone with the given apex, hence acyclic.
    ConeAt(usize),
    /// Homology must be computed.
    Unknown,
}

pub fn quick_triviality(cx: &SimplicialComplex) -> Triviality {
    if cx.contains(cx.universe()) {
        return Triviality::FullSimplex;
    }
    for apex in 0..crate::simplicial::MAX_VERTICES {
        if cx.universe() & (1 << apex) != 0 && cx.is_cone(apex) {
            return Triviality::ConeAt(apex);
        }
    }
    Triviality::Unknown
}
