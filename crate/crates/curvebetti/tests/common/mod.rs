#![allow(dead_code)] // each test target uses its own subset of the oracles

//! Brute-force reference implementations shared by the property and
//! acceptance suites. Everything here stays independent of the library's
//! DP tables and rank computations: membership is decided by exhaustive
//! composition enumeration and homology by an incremental GF(2) pairing.

use std::collections::{BTreeSet, HashMap};

use curvebetti::simplicial::SimplicialComplex;
use rand::rngs::StdRng;
use rand::Rng;

/// Conductor by scanning reachability up to a safe bound.
pub fn brute_conductor(gens: &[u64]) -> u64 {
    let max = *gens.iter().max().unwrap();
    let bound = (max * max + max).max(4) as usize;
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    for x in 1..=bound {
        reach[x] = gens
            .iter()
            .any(|&g| g as usize <= x && reach[x - g as usize]);
    }
    match (0..=bound).rev().find(|&x| !reach[x]) {
        Some(frobenius) => frobenius as u64 + 1,
        None => 0,
    }
}

/// Least reachable element per residue class mod `m`, by upward scan.
pub fn brute_apery(gens: &[u64], m: u64) -> Vec<u64> {
    let c = brute_conductor(gens);
    let bound = (c + 2 * m) as usize;
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    for x in 1..=bound {
        reach[x] = gens
            .iter()
            .any(|&g| g as usize <= x && reach[x - g as usize]);
    }
    (0..m)
        .map(|res| {
            (0..=bound as u64)
                .find(|&x| x % m == res && reach[x as usize])
                .expect("bound covers every residue class")
        })
        .collect()
}

// Exhaustive composition search: does `sum_i y_i coins[i] = value` with
// `sum y_i = count` and `y_i >= 1` for every i in the forced mask?
fn compositions_exist(coins: &[u64], idx: usize, count: u64, value: u64, forced: u16) -> bool {
    if idx == coins.len() {
        return count == 0 && value == 0;
    }
    let lo = u64::from(forced & (1 << idx) != 0);
    let mut hi = count;
    if let Some(q) = value.checked_div(coins[idx]) {
        hi = hi.min(q);
    }
    if lo > hi {
        return false;
    }
    (lo..=hi).any(|y| compositions_exist(coins, idx + 1, count - y, value - y * coins[idx], forced))
}

/// Oracle for graded membership on the homogenized semigroup: vertex 0 is
/// the weight generator, vertices `1..=n` the offsets.
pub fn brute_graded(weight: u64, offsets: &[u64], l: u32, r: u64, forced: u16) -> bool {
    let mut coins = Vec::with_capacity(offsets.len() + 1);
    coins.push(weight);
    coins.extend_from_slice(offsets);
    compositions_exist(&coins, 0, u64::from(l), r, forced)
}

/// Oracle for affine membership; `degrees` are the shifted exponents and
/// `forced` is a 1-based vertex mask.
pub fn brute_affine(degrees: &[u64], m: u64, forced: u16) -> bool {
    // no count constraint: bound each coin by m / coin
    fn go(degrees: &[u64], idx: usize, value: u64, forced: u16) -> bool {
        if idx == degrees.len() {
            return value == 0;
        }
        let lo = u64::from(forced & (1 << (idx + 1)) != 0);
        let hi = value / degrees[idx];
        if lo > hi {
            return false;
        }
        (lo..=hi).any(|y| go(degrees, idx + 1, value - y * degrees[idx], forced))
    }
    go(degrees, 0, m, forced)
}

/// Reduced GF(2) homology by incremental boundary reduction over the
/// faces in filtration order (dimension, then mask). Returns dimensions
/// indexed from degree -1, like `HomologyVector::dims`.
pub fn gf2_homology(cx: &SimplicialComplex) -> Vec<u32> {
    if cx.is_void() {
        return Vec::new();
    }
    let mut faces: Vec<u16> = cx.faces().to_vec();
    faces.sort_by_key(|f| (f.count_ones(), *f));
    let index: HashMap<u16, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut columns: Vec<BTreeSet<usize>> = Vec::with_capacity(faces.len());
    let mut owner: HashMap<usize, usize> = HashMap::new();
    let mut is_creator = vec![false; faces.len()];
    for (j, &face) in faces.iter().enumerate() {
        let mut col: BTreeSet<usize> = BTreeSet::new();
        let mut rest = face;
        while rest != 0 {
            let v = rest & rest.wrapping_neg();
            col.insert(index[&(face & !v)]);
            rest &= rest - 1;
        }
        while let Some(&low) = col.iter().next_back() {
            let Some(&other) = owner.get(&low) else {
                break;
            };
            col = col.symmetric_difference(&columns[other]).copied().collect();
        }
        if let Some(&low) = col.iter().next_back() {
            owner.insert(low, j);
            is_creator[low] = false;
        } else {
            is_creator[j] = true;
        }
        columns.push(col);
    }
    let top = faces.last().unwrap().count_ones() as usize;
    let mut dims = vec![0u32; top + 1];
    for (j, &face) in faces.iter().enumerate() {
        if is_creator[j] {
            dims[face.count_ones() as usize] += 1;
        }
    }
    dims
}

/// Reduced Euler characteristic straight from the face counts.
pub fn reduced_euler(cx: &SimplicialComplex) -> i64 {
    cx.faces()
        .iter()
        .map(|f| if f.count_ones() % 2 == 0 { -1i64 } else { 1 })
        .sum()
}

pub fn random_complex(rng: &mut StdRng, max_vertices: usize) -> SimplicialComplex {
    let v = rng.gen_range(1..=max_vertices);
    let facet_count = rng.gen_range(1..=6);
    let facets: Vec<Vec<usize>> = (0..facet_count)
        .map(|_| {
            let size = rng.gen_range(1..=v);
            let mut f: Vec<usize> = (0..v).filter(|_| rng.gen_bool(0.6)).collect();
            if f.is_empty() {
                f.push(rng.gen_range(0..v));
            }
            f.truncate(size);
            f
        })
        .collect();
    SimplicialComplex::from_facets(&facets).unwrap()
}

pub fn random_coprime_gens(rng: &mut StdRng) -> Vec<u64> {
    loop {
        let count = rng.gen_range(1..=4);
        let mut gens: Vec<u64> = (0..count).map(|_| rng.gen_range(1..=60)).collect();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().copied().fold(0, gcd);
        if g == 1 {
            return gens;
        }
    }
}

pub fn random_curve(rng: &mut StdRng, max_top: u64) -> curvebetti::CurveSequence {
    loop {
        let n = rng.gen_range(2..=5);
        let mut a: BTreeSet<u64> = BTreeSet::new();
        while a.len() < n {
            a.insert(rng.gen_range(1..=max_top));
        }
        let a: Vec<u64> = a.into_iter().collect();
        if let Ok(curve) = curvebetti::CurveSequence::new(&a) {
            return curve;
        }
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}
