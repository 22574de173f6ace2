//! Numerical-semigroup arithmetic and the scalar constants attached to a
//! monomial curve: the offset vector, its gcd, the conductor of the offset
//! semigroup, and the threshold beyond which the periodicity statements are
//! guaranteed.

use crate::{Error, Result};

/// A strictly increasing sequence of positive exponents `a_1 < ... < a_n`
/// (the parametrization exponents of a monomial curve) together with the
/// derived constants used everywhere else:
///
/// * `offsets[i] = a_n - a_{i+1}` (strictly decreasing, last entry 0),
/// * `offset_gcd` = gcd of the nonzero offsets,
/// * `conductor` of the numerical semigroup generated by the nonzero
///   offsets divided by their gcd,
/// * `margin` = sum of offsets + n + gcd, the slack term of the high-degree
///   window width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSequence {
    exponents: Vec<u64>,
    offsets: Vec<u64>,
    offset_gcd: u64,
    conductor: u64,
    margin: u64,
}

impl CurveSequence {
    pub fn new(exponents: &[u64]) -> Result<Self> {
        if exponents.len() < 2 {
            return Err(Error::InvalidSequence(format!(
                "need at least 2 exponents, got {}",
                exponents.len()
            )));
        }
        if exponents[0] == 0 {
            return Err(Error::InvalidSequence("exponents must be positive".into()));
        }
        if exponents.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence(format!(
                "exponents must be strictly increasing, got {exponents:?}"
            )));
        }
        let n = exponents.len();
        let top = exponents[n - 1];
        let offsets: Vec<u64> = exponents.iter().map(|&a| top - a).collect();
        let offset_gcd = offsets[..n - 1].iter().copied().fold(0, gcd);
        let reduced: Vec<u64> = offsets[..n - 1].iter().map(|&b| b / offset_gcd).collect();
        let conductor = conductor(&reduced)?;
        let margin = offsets.iter().sum::<u64>() + n as u64 + offset_gcd;
        Ok(CurveSequence {
            exponents: exponents.to_vec(),
            offsets,
            offset_gcd,
            conductor,
            margin,
        })
    }

    /// Number of exponents `n`.
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn offsets(&self) -> &[u64] {
        &self.offsets
    }

    /// Offset of vertex `i` (1-based), i.e. `a_n - a_i`.
    pub fn offset(&self, i: usize) -> u64 {
        self.offsets[i - 1]
    }

    pub fn offset_gcd(&self) -> u64 {
        self.offset_gcd
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn margin(&self) -> u64 {
        self.margin
    }

    /// The largest offset `a_n - a_1`, which is also the eventual period of
    /// the Betti numbers under shifting.
    pub fn period(&self) -> u64 {
        self.offsets[0]
    }

    /// `conductor * gcd + margin`: width of the window that confines the
    /// first coordinate of high-degree contributors.
    pub fn window_width(&self) -> u64 {
        self.offset_gcd * self.conductor + self.margin
    }

    /// Two-exponent sequences have a single nonzero offset; the offset
    /// semigroup degenerates to all multiples of it (conductor 0).
    pub fn is_degenerate(&self) -> bool {
        self.exponents.len() == 2
    }

    pub fn shift(&self, shift: u64) -> Result<ShiftedCurve> {
        ShiftedCurve::new(self.clone(), shift)
    }

    /// Row shift of the high-degree block per period: `d / gcd(d, a_n + j)`.
    pub fn row_shift_for(&self, shift: u64) -> u64 {
        let weight = self.exponents[self.exponents.len() - 1] + shift;
        self.offset_gcd / gcd(self.offset_gcd, weight)
    }
}

/// A curve together with a positive shift `j`. All exponents move to
/// `a_i + j`; the homogenized semigroup lives on generator weight
/// `k = a_n + j` and its high-degree block moves by `e = d / gcd(d, k)`
/// rows per period.
#[derive(Debug, Clone)]
pub struct ShiftedCurve {
    base: CurveSequence,
    shift: u64,
    weight: u64,
    row_shift: u64,
}

impl ShiftedCurve {
    pub fn new(base: CurveSequence, shift: u64) -> Result<Self> {
        if shift == 0 {
            return Err(Error::InvalidInput("shift must be at least 1".into()));
        }
        let weight = base.exponents[base.exponents.len() - 1] + shift;
        let row_shift = base.offset_gcd / gcd(base.offset_gcd, weight);
        Ok(ShiftedCurve {
            base,
            shift,
            weight,
            row_shift,
        })
    }

    pub fn base(&self) -> &CurveSequence {
        &self.base
    }

    pub fn shift(&self) -> u64 {
        self.shift
    }

    /// Common coordinate sum `k = a_n + j` of the homogenized generators.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// `e = d / gcd(d, k)`; equals `d / gcd(d, k + period)` as well since
    /// the gcd divides the period.
    pub fn row_shift(&self) -> u64 {
        self.row_shift
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Shifted exponent `a_i + j`, the degree of the affine variable `x_i`.
    pub fn affine_degree(&self, i: usize) -> u64 {
        self.weight - self.base.offset(i)
    }
}

/// A representation `u = t * b_1 + sum w_i b_i` with the coin part confined
/// to the window `[d*c, d*c + b_1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub multiplier: u64,
    pub counts: Vec<u64>,
}

impl Representation {
    pub fn value(&self, curve: &CurveSequence) -> u64 {
        let b1 = curve.period();
        self.multiplier * b1
            + self
                .counts
                .iter()
                .zip(curve.offsets())
                .map(|(&w, &b)| w * b)
                .sum::<u64>()
    }

    pub fn count_sum(&self) -> u64 {
        self.counts.iter().sum()
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

/// Least `c` such that every integer `>= c` is a nonnegative combination of
/// `gens`. Computed from the Apéry set with respect to the smallest
/// generator.
pub fn conductor(gens: &[u64]) -> Result<u64> {
    let apery = apery_set(
        gens,
        *gens
            .iter()
            .min()
            .ok_or_else(|| Error::InvalidInput("conductor needs at least one generator".into()))?,
    )?;
    let max = apery.iter().max().copied().unwrap_or(0);
    let m = apery.len() as u64;
    Ok((max + 1).saturating_sub(m))
}

/// For each residue class mod `m`, the least semigroup element in that
/// class, computed by round-robin shortest-path relaxation over the residue
/// graph. `m` itself must lie in the semigroup.
pub fn apery_set(gens: &[u64], m: u64) -> Result<Vec<u64>> {
    if gens.is_empty() {
        return Err(Error::InvalidInput("empty generator list".into()));
    }
    if gens.contains(&0) {
        return Err(Error::InvalidInput("generators must be positive".into()));
    }
    if m == 0 {
        return Err(Error::InvalidInput("apery modulus must be positive".into()));
    }
    let g = gens.iter().copied().fold(0, gcd);
    if g != 1 {
        return Err(Error::NotCoprime { gcd: g });
    }
    if !reachable_scan(gens, m) {
        return Err(Error::InvalidInput(format!(
            "apery modulus {m} is not in the semigroup"
        )));
    }
    let mu = m as usize;
    let mut dist = vec![u64::MAX; mu];
    dist[0] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for res in 0..mu {
            if dist[res] == u64::MAX {
                continue;
            }
            for &g in gens {
                let to = ((res as u64 + g) % m) as usize;
                let cand = dist[res] + g;
                if cand < dist[to] {
                    dist[to] = cand;
                    changed = true;
                }
            }
        }
    }
    Ok(dist)
}

// Bounded reachability used only to validate the Apéry modulus.
fn reachable_scan(gens: &[u64], target: u64) -> bool {
    let t = target as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for x in 1..=t {
        reach[x] = gens
            .iter()
            .any(|&g| g as usize <= x && reach[x - g as usize]);
    }
    reach[t]
}

/// Split `u` as `t * b_1 + v` with the coin part `v` in `[d*c, d*c + b_1)`,
/// then decompose `v` over the offsets. The multiplier is the largest `t`
/// keeping `v >= d*c`; the counts come from a largest-index-first search
/// (smallest coins tried with the highest multiplicity first).
pub fn represent(curve: &CurveSequence, u: u64) -> Result<Representation> {
    let d = curve.offset_gcd();
    let dc = d * curve.conductor();
    let b1 = curve.period();
    if !u.is_multiple_of(d) {
        return Err(Error::NotRepresentable {
            value: u,
            reason: format!("not divisible by the offset gcd {d}"),
        });
    }
    if u < dc {
        return Err(Error::NotRepresentable {
            value: u,
            reason: format!("below the representable window start {dc}"),
        });
    }
    let multiplier = (u - dc) / b1;
    let coin_part = u - multiplier * b1;
    let coins = &curve.offsets()[..curve.len() - 1];
    let mut counts = vec![0u64; coins.len()];
    let found = decompose_descending(coin_part, coins, coins.len(), &mut counts);
    debug_assert!(
        found,
        "window value {coin_part} must decompose over {coins:?}"
    );
    if !found {
        return Err(Error::NotRepresentable {
            value: u,
            reason: "window decomposition failed".into(),
        });
    }
    Ok(Representation { multiplier, counts })
}

// Try coins from the largest index (smallest value) down, highest count
// first; returns the first complete decomposition found.
fn decompose_descending(value: u64, coins: &[u64], idx: usize, counts: &mut [u64]) -> bool {
    if idx == 0 {
        return value == 0;
    }
    let coin = coins[idx - 1];
    let max_count = value / coin;
    for count in (0..=max_count).rev() {
        counts[idx - 1] = count;
        if decompose_descending(value - count * coin, coins, idx - 1, counts) {
            return true;
        }
    }
    counts[idx - 1] = 0;
    false
}

/// The shift threshold `N`: the maximum of `b_1 * (n + reg)` and
/// `b_1 * b_2 * ((d*c + b_1) / b_{n-1} + margin)`, evaluated exactly over
/// rationals and rounded up. Shifts strictly above it are in the guaranteed
/// regime of the periodicity statements.
pub fn periodicity_threshold(curve: &CurveSequence, reg_j: u32) -> u64 {
    let n = curve.len();
    let b = curve.offsets();
    let b1 = b[0] as u128;
    let b2 = b[1] as u128;
    let b_last = b[n - 2] as u128;
    let dc = (curve.offset_gcd() * curve.conductor()) as u128;
    let margin = curve.margin() as u128;
    let first = b1 * (n as u128 + reg_j as u128);
    // b1*b2*((dc + b1)/b_last + margin) as a single ceiling division
    let numer = b1 * b2 * (dc + b1 + margin * b_last);
    let second = numer.div_ceil(b_last);
    first.max(second) as u64
}
