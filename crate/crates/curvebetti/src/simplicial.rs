//! Finite simplicial complexes on at most 16 vertices, stored as
//! bitmask face sets, with exact reduced-homology dimensions over the
//! rationals or a prime field.
//!
//! Faces are `u16` masks (bit `i` = vertex `i`); the face list is sorted
//! and downward closed. Rational ranks are computed fraction-free over the
//! integers (128-bit, with a big-integer fallback), prime-field ranks by
//! modular elimination, so every homology dimension is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::{Error, Result};

pub const MAX_VERTICES: usize = 16;

/// Coefficient field for homology: the rationals, or `GF(p)` for a prime
/// `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if p < 2 || !is_prime(p) || p > (1 << 31) - 1 {
            return Err(Error::InvalidInput(format!(
                "{p} is not a prime below 2^31"
            )));
        }
        Ok(FieldSpec::Prime(p))
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    let p = p as u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "q" || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("p:") {
            let p: u32 = p
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad field spec {s:?}")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::InvalidInput(format!(
            "bad field spec {s:?} (expected \"q\" or \"p:<prime>\")"
        )))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

/// A downward-closed set of faces over a fixed vertex universe.
///
/// The void complex (no faces at all, not even the empty face) is allowed
/// and distinct from the complex `{∅}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    universe: u16,
    faces: Vec<u16>,
}

impl SimplicialComplex {
    pub fn void(universe: u16) -> Self {
        SimplicialComplex {
            universe,
            faces: Vec::new(),
        }
    }

    /// Build from a membership oracle assumed downward closed. Masks are
    /// enumerated from the full universe downward; once a face answers
    /// true, all its subsets are marked without further queries.
    pub fn from_oracle(universe: u16, is_face: impl Fn(u16) -> bool) -> Self {
        let mut marked = vec![false; universe as usize + 1];
        let mut any = false;
        let mut s = universe;
        loop {
            if !marked[s as usize] && is_face(s) {
                any = true;
                let mut t = s;
                loop {
                    marked[t as usize] = true;
                    if t == 0 {
                        break;
                    }
                    t = (t - 1) & s;
                }
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & universe;
        }
        if !any {
            return SimplicialComplex::void(universe);
        }
        let faces = (0..=universe).filter(|&m| marked[m as usize]).collect();
        SimplicialComplex { universe, faces }
    }

    /// Build the downward closure of the given facets; redundant facets are
    /// absorbed. The universe is the union of the listed vertices.
    pub fn from_facets<T: AsRef<[usize]>>(facets: &[T]) -> Result<Self> {
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            let mut m: u16 = 0;
            for &v in f.as_ref() {
                if v >= MAX_VERTICES {
                    return Err(Error::InvalidVertex(v));
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        let universe = masks.iter().fold(0, |u, &m| u | m);
        if masks.is_empty() {
            return Ok(SimplicialComplex::void(0));
        }
        let mut marked = vec![false; universe as usize + 1];
        for &m in &masks {
            let mut t = m;
            loop {
                marked[t as usize] = true;
                if t == 0 {
                    break;
                }
                t = (t - 1) & m;
            }
        }
        let faces = (0..=universe).filter(|&m| marked[m as usize]).collect();
        Ok(SimplicialComplex { universe, faces })
    }

    pub fn universe(&self) -> u16 {
        self.universe
    }

    pub fn faces(&self) -> &[u16] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, mask: u16) -> bool {
        self.faces.binary_search(&mask).is_ok()
    }

    /// Dimension of the largest face; `None` for the void complex, `-1`
    /// for `{∅}`.
    pub fn dim(&self) -> Option<i32> {
        self.faces.iter().map(|m| m.count_ones() as i32 - 1).max()
    }

    /// Maximal faces, in ascending mask order.
    pub fn facets(&self) -> Vec<u16> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| {
                let mut rest = self.universe & !f;
                while rest != 0 {
                    let v = rest & rest.wrapping_neg();
                    if self.contains(f | v) {
                        return false;
                    }
                    rest &= rest - 1;
                }
                true
            })
            .collect()
    }

    /// Facets as sorted vertex lists (the JSON serialization of a complex).
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets().iter().map(|&m| mask_vertices(m)).collect()
    }

    /// True iff joining `apex` to any face stays inside the complex; cones
    /// are acyclic, so this is the cheapest homology short-circuit.
    pub fn is_cone(&self, apex: usize) -> bool {
        let bit = 1u16 << apex;
        if self.universe & bit == 0 || self.is_void() {
            return false;
        }
        self.faces.iter().all(|&f| self.contains(f | bit))
    }

    /// Remove every face containing `v` (and `v` from the universe).
    pub fn delete_vertex(&self, v: usize) -> Self {
        let bit = 1u16 << v;
        SimplicialComplex {
            universe: self.universe & !bit,
            faces: self
                .faces
                .iter()
                .copied()
                .filter(|&f| f & bit == 0)
                .collect(),
        }
    }

    /// Witness for the double-cone shape: every facet containing `zero_v`
    /// contains `top_v`, and every facet omitting `zero_v` contains
    /// `one_v`.
    pub fn double_cone_witness(&self, zero_v: usize, one_v: usize, top_v: usize) -> bool {
        let zero = 1u16 << zero_v;
        let one = 1u16 << one_v;
        let top = 1u16 << top_v;
        self.facets().iter().all(|&f| {
            if f & zero != 0 {
                f & top != 0
            } else {
                f & one != 0
            }
        })
    }
}

pub fn mask_vertices(mask: u16) -> Vec<usize> {
    (0..MAX_VERTICES)
        .filter(|&v| mask & (1 << v) != 0)
        .collect()
}

/// Reduced homology dimensions indexed from `-1`: `dims[0]` is the
/// dimension of the degree `-1` group, `dims[i + 1]` of degree `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyVector {
    dims: Vec<u32>,
}

impl HomologyVector {
    pub fn new(dims: Vec<u32>) -> Self {
        HomologyVector { dims }
    }

    pub fn h(&self, i: i32) -> u32 {
        let idx = i + 1;
        if idx < 0 {
            return 0;
        }
        self.dims.get(idx as usize).copied().unwrap_or(0)
    }

    /// True if some group in degree `>= 0` is nonzero; the degree `-1`
    /// group (nonzero only for `{∅}`) never contributes a Betti number.
    pub fn has_homology(&self) -> bool {
        self.dims.len() > 1 && self.dims[1..].iter().any(|&d| d != 0)
    }

    /// Nonzero groups in degree `>= 0` as `(degree, dimension)` pairs.
    pub fn nonzero(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &d)| d != 0)
            .map(|(idx, &d)| (idx as u32 - 1, d))
    }

    pub fn eq_from_zero(&self, other: &HomologyVector) -> bool {
        let len = self.dims.len().max(other.dims.len()) as i32 - 1;
        (0..=len.max(0)).all(|i| self.h(i) == other.h(i))
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }
}

/// Exact reduced homology of the augmented chain complex. The void complex
/// has no groups at all; `{∅}` has a single one-dimensional group in
/// degree `-1`.
pub fn reduced_homology(cx: &SimplicialComplex, field: FieldSpec) -> HomologyVector {
    if cx.is_void() {
        return HomologyVector::new(Vec::new());
    }
    let top = cx.dim().unwrap();
    // levels[d + 1] = faces of dimension d, already in ascending mask order
    let mut levels: Vec<Vec<u16>> = vec![Vec::new(); (top + 2) as usize];
    for &f in cx.faces() {
        levels[f.count_ones() as usize].push(f);
    }
    // ranks[d] = rank of the boundary map from dimension d to d - 1
    let mut ranks = vec![0usize; (top + 2) as usize];
    for d in 0..=top {
        let matrix = boundary_matrix(&levels[d as usize], &levels[(d + 1) as usize]);
        ranks[(d + 1) as usize] = rank(&matrix, field);
    }
    let mut dims = Vec::with_capacity((top + 2) as usize);
    for d in -1..=top {
        let count = levels[(d + 1) as usize].len();
        let boundary_out = ranks[(d + 1) as usize];
        let boundary_in = if d < top { ranks[(d + 2) as usize] } else { 0 };
        dims.push((count - boundary_out - boundary_in) as u32);
    }
    HomologyVector::new(dims)
}

// Boundary matrix from the faces in `cols` (dimension d) to those in
// `rows` (dimension d - 1); removing the s-th smallest vertex carries
// sign (-1)^s.
fn boundary_matrix(rows: &[u16], cols: &[u16]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; cols.len()]; rows.len()];
    for (j, &g) in cols.iter().enumerate() {
        let mut sign = 1i64;
        let mut rest = g;
        while rest != 0 {
            let v = rest & rest.wrapping_neg();
            let sub = g & !v;
            let i = rows
                .binary_search(&sub)
                .expect("complex is downward closed");
            m[i][j] = sign;
            sign = -sign;
            rest &= rest - 1;
        }
    }
    m
}

fn rank(matrix: &[Vec<i64>], field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => {
            rank_fraction_free(matrix).unwrap_or_else(|| rank_fraction_free_bigint(matrix))
        }
        FieldSpec::Prime(p) => rank_mod_p(matrix, p as u64),
    }
}

// One-step fraction-free elimination: every division by the previous pivot
// is exact, so the rank over the rationals is computed entirely in
// integers. Returns None if 128-bit arithmetic overflows.
fn rank_fraction_free(matrix: &[Vec<i64>]) -> Option<usize> {
    if matrix.is_empty() || matrix[0].is_empty() {
        return Some(0);
    }
    let mut m: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev: i128 = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows)
            .filter(|&i| m[i][col] != 0)
            .min_by_key(|&i| m[i][col].abs());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let a = m[rank][col].checked_mul(m[i][j])?;
                let b = m[i][col].checked_mul(m[rank][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    Some(rank)
}

fn rank_fraction_free_bigint(matrix: &[Vec<i64>]) -> usize {
    if matrix.is_empty() || matrix[0].is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::from(1);
    let zero = BigInt::from(0);
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| m[i][col] != zero) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = (&m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][col] = zero.clone();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    if matrix.is_empty() || matrix[0].is_empty() {
        return 0;
    }
    let reduce = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| reduce(x)).collect())
        .collect();
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = mod_inverse(m[rank][col], p);
        for x in m[rank][col..].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let factor = row[col];
                for (x, &pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = (*x + (p - factor) * pv) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
