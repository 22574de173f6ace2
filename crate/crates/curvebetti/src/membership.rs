//! Representability engines for the three semigroups in play: the
//! homogenized curve semigroup (pairs `(l, r)` of total degree and first
//! coordinate), the affine curve semigroup (scalar degrees `m`), and
//! general small `N^m` semigroups such as the one realizing the
//! homogeneous-part ideal.
//!
//! All queries reduce to table lookups against dynamic-programming tables
//! that are built (or extended) up front with `ensure`; afterwards the
//! engines are read-only and safe to query from many threads.

use crate::semigroup::ShiftedCurve;
use crate::{Error, Result};

/// A finitely generated additive subsemigroup of `N^m`, given by its
/// generator vectors. Generators must be distinct and nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSemigroup {
    ambient_dim: usize,
    generators: Vec<Vec<u64>>,
}

impl AffineSemigroup {
    pub fn new(ambient_dim: usize, generators: Vec<Vec<u64>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidInput("semigroup needs generators".into()));
        }
        for g in &generators {
            if g.len() != ambient_dim {
                return Err(Error::InvalidInput(format!(
                    "generator {g:?} does not have dimension {ambient_dim}"
                )));
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::InvalidInput("zero generator not allowed".into()));
            }
        }
        let mut seen = generators.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != generators.len() {
            return Err(Error::InvalidInput("duplicate generators".into()));
        }
        Ok(AffineSemigroup {
            ambient_dim,
            generators,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }
}

/// The `N^2`-semigroup generated by `(a_i, 1)`. Its toric ideal is the
/// ideal generated by the homogeneous elements of the curve ideal, which is
/// the same for every shift.
pub fn homog_part_semigroup(curve: &crate::CurveSequence) -> AffineSemigroup {
    let gens = curve
        .exponents()
        .iter()
        .map(|&a| vec![a, 1])
        .collect::<Vec<_>>();
    AffineSemigroup::new(2, gens).expect("curve exponents are distinct and positive")
}

/// Boolean membership table for an [`AffineSemigroup`] over the box
/// `[0, bound]`, built by coin-style reachability in each coordinate box
/// cell.
#[derive(Debug, Clone)]
pub struct MembershipGrid {
    generators: Vec<Vec<u64>>,
    bound: Vec<u64>,
    strides: Vec<usize>,
    table: Vec<bool>,
}

impl MembershipGrid {
    pub fn build(sg: &AffineSemigroup, bound: &[u64]) -> Self {
        assert_eq!(bound.len(), sg.ambient_dim());
        let mut strides = vec![0usize; bound.len()];
        let mut size = 1usize;
        for (i, &b) in bound.iter().enumerate().rev() {
            strides[i] = size;
            size *= b as usize + 1;
        }
        let mut grid = MembershipGrid {
            generators: sg.generators().to_vec(),
            bound: bound.to_vec(),
            strides,
            table: vec![false; size],
        };
        grid.table[0] = true;
        // row-major sweep: every cell only looks at smaller cells
        let mut point = vec![0u64; bound.len()];
        for idx in 1..size {
            let mut rem = idx;
            for (i, &s) in grid.strides.iter().enumerate() {
                point[i] = (rem / s) as u64;
                rem %= s;
            }
            grid.table[idx] = grid.generators.iter().any(|g| {
                g.iter().zip(&point).all(|(&gi, &pi)| gi <= pi)
                    && grid.table[idx
                        - g.iter()
                            .zip(&grid.strides)
                            .map(|(&gi, &s)| gi as usize * s)
                            .sum::<usize>()]
            });
        }
        grid
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    /// Membership of `v`; panics if `v` exceeds the built bound.
    pub fn contains(&self, v: &[u64]) -> bool {
        assert!(
            v.iter().zip(&self.bound).all(|(&vi, &bi)| vi <= bi),
            "query {v:?} outside built bound {:?}",
            self.bound
        );
        let idx: usize = v
            .iter()
            .zip(&self.strides)
            .map(|(&vi, &s)| vi as usize * s)
            .sum();
        self.table[idx]
    }

    /// Membership of `v` minus the generators indexed by `forced`
    /// (1-based bitmask); false when the difference leaves `N^m`.
    pub fn contains_minus(&self, v: &[u64], forced: u16) -> bool {
        let mut target = v.to_vec();
        for i in 0..self.generators.len() {
            if forced & (1 << (i + 1)) != 0 {
                for (t, &g) in target.iter_mut().zip(&self.generators[i]) {
                    match t.checked_sub(g) {
                        Some(x) => *t = x,
                        None => return false,
                    }
                }
            }
        }
        self.contains(&target)
    }
}

/// Membership engine for the homogenized curve semigroup. An element is a
/// pair `(l, r)`: `l` counts generators, `r` is the first coordinate, and
/// solutions are vectors `y` with `y_0 k + sum y_i b_i = r`, `|y| = l`.
///
/// Queries peel the weight-`k` generator (at most `r / k` copies) and then
/// ask whether the residue is reachable with at most the remaining budget
/// of offset coins; the zero offset of the last vertex absorbs any unused
/// budget, so a min-coin table over the nonzero offsets decides.
#[derive(Debug, Clone)]
pub struct GradedEngine {
    weight: u64,
    offsets: Vec<u64>,
    min_coins: Vec<u32>,
}

impl GradedEngine {
    pub fn new(sc: &ShiftedCurve) -> Self {
        GradedEngine {
            weight: sc.weight(),
            offsets: sc.base().offsets().to_vec(),
            min_coins: vec![0],
        }
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() + 1
    }

    /// Extend the min-coin table so that first coordinates up to `r_max`
    /// can be queried. Must not run concurrently with queries.
    pub fn ensure(&mut self, r_max: u64) {
        let coins = &self.offsets[..self.offsets.len() - 1];
        let old = self.min_coins.len();
        let want = r_max as usize + 1;
        if want <= old {
            return;
        }
        self.min_coins.resize(want, u32::MAX);
        for x in old..want {
            let mut best = u32::MAX;
            for &c in coins {
                let c = c as usize;
                if c <= x && self.min_coins[x - c] != u32::MAX {
                    best = best.min(self.min_coins[x - c] + 1);
                }
            }
            self.min_coins[x] = best;
        }
    }

    /// True iff some solution `y` of total size `l` and value `r` has
    /// `y_i >= 1` for every vertex `i` in the `forced` bitmask
    /// (vertex 0 is the homogenizing generator).
    pub fn representable(&self, l: u32, r: u64, forced: u16) -> bool {
        let Some((budget, rest)) = self.strip_forced(l, r, forced) else {
            return false;
        };
        let lo = u64::from(forced & 1 != 0);
        let hi = (rest / self.weight).min(budget);
        (lo..=hi).any(|y0| self.coin_reachable(rest - y0 * self.weight, budget - y0))
    }

    /// Like [`representable`](Self::representable) but with the count of
    /// the weight-`k` generator pinned to exactly `y0`; `forced` may only
    /// name vertices `1..=n`.
    pub fn representable_with_weight_count(&self, l: u32, r: u64, y0: u64, forced: u16) -> bool {
        debug_assert_eq!(forced & 1, 0);
        let Some((budget, rest)) = self.strip_forced(l, r, forced) else {
            return false;
        };
        y0 <= budget
            && y0 * self.weight <= rest
            && self.coin_reachable(rest - y0 * self.weight, budget - y0)
    }

    fn strip_forced(&self, l: u32, r: u64, forced: u16) -> Option<(u64, u64)> {
        let mut budget = l as u64;
        let mut rest = r;
        for i in 1..=self.offsets.len() {
            if forced & (1 << i) != 0 {
                rest = rest.checked_sub(self.offsets[i - 1])?;
                budget = budget.checked_sub(1)?;
            }
        }
        Some((budget, rest))
    }

    fn coin_reachable(&self, value: u64, budget: u64) -> bool {
        let v = value as usize;
        assert!(
            v < self.min_coins.len(),
            "query {value} beyond built bound {}",
            self.min_coins.len() - 1
        );
        let need = self.min_coins[v];
        need != u32::MAX && u64::from(need) <= budget
    }
}

/// Membership engine for the affine curve semigroup generated by the
/// shifted exponents `a_i + j = k - b_i`.
#[derive(Debug, Clone)]
pub struct AffineEngine {
    degrees: Vec<u64>,
    reachable: Vec<bool>,
}

impl AffineEngine {
    pub fn new(sc: &ShiftedCurve) -> Self {
        let degrees = (1..=sc.len()).map(|i| sc.affine_degree(i)).collect();
        AffineEngine {
            degrees,
            reachable: vec![true],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn ensure(&mut self, m_max: u64) {
        let old = self.reachable.len();
        let want = m_max as usize + 1;
        if want <= old {
            return;
        }
        self.reachable.resize(want, false);
        for x in old..want {
            self.reachable[x] = self.degrees.iter().any(|&g| {
                let g = g as usize;
                g <= x && self.reachable[x - g]
            });
        }
    }

    /// True iff `m` minus the forced degrees is a nonnegative combination
    /// of the shifted exponents. `forced` is a 1-based vertex bitmask.
    pub fn representable(&self, m: u64, forced: u16) -> bool {
        let mut rest = m;
        for i in 1..=self.degrees.len() {
            if forced & (1 << i) != 0 {
                match rest.checked_sub(self.degrees[i - 1]) {
                    Some(x) => rest = x,
                    None => return false,
                }
            }
        }
        let v = rest as usize;
        assert!(
            v < self.reachable.len(),
            "query {m} beyond built bound {}",
            self.reachable.len() - 1
        );
        self.reachable[v]
    }
}

/// One-shot graded membership query; builds a throwaway table sized to `r`.
pub fn graded_representable(sc: &ShiftedCurve, l: u32, r: u64, forced: u16) -> bool {
    let mut engine = GradedEngine::new(sc);
    engine.ensure(r);
    engine.representable(l, r, forced)
}

/// One-shot affine membership query; builds a throwaway table sized to `m`.
pub fn affine_representable(sc: &ShiftedCurve, m: u64, forced: u16) -> bool {
    let mut engine = AffineEngine::new(sc);
    engine.ensure(m);
    engine.representable(m, forced)
}
