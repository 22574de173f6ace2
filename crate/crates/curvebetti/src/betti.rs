//! Betti table assembly: sum reduced-homology dimensions of divisor
//! complexes over all degrees of the relevant semigroup.
//!
//! Projective tables come in two modes. `Scan` enumerates every degree up
//! to an adaptive cap and is valid for any shift; `Rigorous` is for shifts
//! above the periodicity threshold, where the high-degree block is
//! confined to a provable window in `(l, r)` and enumeration outside a
//! widened copy of that window is unnecessary. Any homology found in the
//! widening margin but outside the window aborts the run: it would mean
//! the confinement statements failed.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::divisor::{delta_lr, delta_m, delta_v, quick_triviality, Triviality};
use crate::membership::{homog_part_semigroup, AffineEngine, GradedEngine, MembershipGrid};
use crate::semigroup::{periodicity_threshold, ShiftedCurve};
use crate::simplicial::{reduced_homology, FieldSpec, HomologyVector};
use crate::{CurveSequence, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    /// Degrees are total degrees `l` of the homogenized ideal.
    Standard,
    /// Degrees are semigroup degrees `m` of the affine ideal.
    Semigroup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitKind {
    /// The split row is `n + reg`; entries are high iff their degree
    /// exceeds it. Only valid above the periodicity threshold.
    Rigorous,
    /// The split row is an empty table row separating two nonzero blocks;
    /// entries are high iff their row (degree minus column) exceeds it.
    Empirical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    pub kind: SplitKind,
    pub row: u64,
}

/// Entries of one block of a table: counts keyed by `(degree, index)`.
pub type BlockEntries = BTreeMap<(u64, u32), u64>;

/// Sparse Betti table: positive counts keyed by `(degree, homological
/// index)`, plus an optional split marker separating the low block (shared
/// with the homogeneous-part ideal) from the high block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    grading: Grading,
    entries: BTreeMap<(u64, u32), u64>,
    split: Option<Split>,
}

impl BettiTable {
    pub fn new(grading: Grading) -> Self {
        BettiTable {
            grading,
            entries: BTreeMap::new(),
            split: None,
        }
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn split(&self) -> Option<Split> {
        self.split
    }

    pub fn set_split(&mut self, split: Option<Split>) {
        self.split = split;
    }

    pub fn add(&mut self, index: u32, degree: u64, count: u64) {
        if count == 0 {
            return;
        }
        debug_assert!(
            self.grading == Grading::Semigroup || u64::from(index) < degree,
            "ideal tables have no entry with index {index} >= degree {degree}"
        );
        *self.entries.entry((degree, index)).or_insert(0) += count;
    }

    pub fn get(&self, index: u32, degree: u64) -> u64 {
        self.entries.get(&(degree, index)).copied().unwrap_or(0)
    }

    /// Entries sorted by `(degree, index)`.
    pub fn entries(&self) -> impl Iterator<Item = (u64, u32, u64)> + '_ {
        self.entries.iter().map(|(&(d, i), &v)| (d, i, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Total Betti number per homological index.
    pub fn column_totals(&self) -> BTreeMap<u32, u64> {
        let mut totals = BTreeMap::new();
        for (&(_, i), &v) in &self.entries {
            *totals.entry(i).or_insert(0) += v;
        }
        totals
    }

    /// Castelnuovo-Mumford regularity: the largest `degree - index`.
    pub fn reg(&self) -> Result<i64> {
        self.entries
            .keys()
            .map(|&(d, i)| d as i64 - i as i64)
            .max()
            .ok_or(Error::EmptyTable)
    }

    fn is_high(&self, degree: u64, index: u32) -> bool {
        match self.split {
            None => false,
            Some(Split {
                kind: SplitKind::Rigorous,
                row,
            }) => degree > row,
            Some(Split {
                kind: SplitKind::Empirical,
                row,
            }) => degree - u64::from(index) > row,
        }
    }

    /// Partition entries into the low and high blocks declared by the
    /// split; everything is low when no split is set.
    pub fn blocks(&self) -> (BlockEntries, BlockEntries) {
        let mut low = BTreeMap::new();
        let mut high = BTreeMap::new();
        for (&(d, i), &v) in &self.entries {
            if self.is_high(d, i) {
                high.insert((d, i), v);
            } else {
                low.insert((d, i), v);
            }
        }
        (low, high)
    }

    /// First empty row lying strictly between two nonzero rows, if any.
    pub fn detect_empirical_split(&self) -> Option<Split> {
        let rows: std::collections::BTreeSet<u64> = self
            .entries
            .keys()
            .map(|&(d, i)| d - u64::from(i))
            .collect();
        let (&lo, &hi) = (rows.iter().next()?, rows.iter().next_back()?);
        (lo..=hi)
            .find(|row| !rows.contains(row) && rows.iter().any(|&r| r > *row))
            .map(|row| Split {
                kind: SplitKind::Empirical,
                row,
            })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries()
            .map(|(d, i, v)| serde_json::json!({"deg": d, "i": i, "value": v}))
            .collect();
        serde_json::json!({
            "grading": match self.grading { Grading::Standard => "standard", Grading::Semigroup => "semigroup" },
            "split_row": self.split.map(|s| s.row),
            "entries": entries,
        })
    }

    /// Text layout with column index `i` across and row index
    /// `degree - i` down, a dash for zero. Semigroup-graded tables are
    /// printed as an entry list instead since their degrees are sparse.
    pub fn render_text(&self) -> String {
        if self.is_empty() {
            return "(empty table)\n".to_string();
        }
        match self.grading {
            Grading::Standard => self.render_grid(),
            Grading::Semigroup => self.render_list(),
        }
    }

    fn render_grid(&self) -> String {
        let max_i = self.entries.keys().map(|&(_, i)| i).max().unwrap();
        let rows: Vec<u64> = {
            let lo = self
                .entries
                .keys()
                .map(|&(d, i)| d - u64::from(i))
                .min()
                .unwrap();
            let hi = self
                .entries
                .keys()
                .map(|&(d, i)| d - u64::from(i))
                .max()
                .unwrap();
            (lo..=hi).collect()
        };
        let cell = |row: u64, i: u32| -> String {
            let v = self.get(i, row + u64::from(i));
            if v == 0 {
                "-".to_string()
            } else {
                v.to_string()
            }
        };
        let mut widths = Vec::new();
        for i in 0..=max_i {
            let w = rows
                .iter()
                .map(|&r| cell(r, i).len())
                .chain(std::iter::once(i.to_string().len()))
                .max()
                .unwrap();
            widths.push(w);
        }
        let label_width = rows.iter().map(|r| r.to_string().len()).max().unwrap() + 1;
        let mut out = String::new();
        out.push_str(&" ".repeat(label_width));
        for (i, w) in widths.iter().enumerate() {
            out.push_str(&format!("  {:>w$}", i, w = w));
        }
        out.push('\n');
        for &row in &rows {
            out.push_str(&format!("{:>w$}:", row, w = label_width - 1));
            for (i, w) in widths.iter().enumerate() {
                out.push_str(&format!("  {:>w$}", cell(row, i as u32), w = w));
            }
            out.push('\n');
        }
        out
    }

    fn render_list(&self) -> String {
        let mut out = String::from("    i          deg  value\n");
        for (d, i, v) in self.entries() {
            out.push_str(&format!("{:>5}  {:>11}  {:>5}\n", i, d, v));
        }
        out
    }
}

/// Record of one degree with nonzero homology, with its block assignment.
#[derive(Debug, Clone)]
pub struct LedgerEntry {
    pub l: u32,
    pub r: u64,
    pub homology: HomologyVector,
    pub high: bool,
}

/// All degrees that contributed to a projective table, in `(l, r)` order.
#[derive(Debug, Clone, Default)]
pub struct DegreeLedger {
    pub entries: Vec<LedgerEntry>,
    pub rigorous: bool,
}

impl DegreeLedger {
    pub fn high_entries(&self) -> impl Iterator<Item = &LedgerEntry> {
        self.entries.iter().filter(|e| e.high)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|e| {
                let nonneg = e.homology.dims().len().saturating_sub(1);
                let h: Vec<u32> = (0..nonneg as i32).map(|i| e.homology.h(i)).collect();
                serde_json::json!({
                    "l": e.l,
                    "r": e.r,
                    "h": h,
                    "block": if e.high { "high" } else { "low" },
                })
            })
            .collect();
        serde_json::json!(entries)
    }
}

/// Enumeration strategy for [`betti_projective`].
#[derive(Debug, Clone, Copy)]
pub enum ProjectiveMode {
    /// Full enumeration up to an adaptive (or explicit) degree cap.
    Scan { l_max: Option<u32> },
    /// Windowed high-block enumeration; requires the weight `a_n + j` to
    /// exceed the periodicity threshold for the given regularity.
    Rigorous { reg_j: u32, buffer: Option<u64> },
}

/// Default widening applied around the provable high-degree window.
pub fn default_buffer(curve: &CurveSequence) -> u64 {
    curve.window_width()
}

/// Graded Betti table of the homogenized shifted ideal, together with the
/// ledger of contributing degrees.
pub fn betti_projective(
    sc: &ShiftedCurve,
    field: FieldSpec,
    mode: ProjectiveMode,
) -> Result<(BettiTable, DegreeLedger)> {
    match mode {
        ProjectiveMode::Scan { l_max } => scan_projective(sc, field, l_max),
        ProjectiveMode::Rigorous { reg_j, buffer } => rigorous_projective(sc, field, reg_j, buffer),
    }
}

fn evaluate_graded(
    engine: &GradedEngine,
    l: u32,
    r: u64,
    field: FieldSpec,
) -> Option<HomologyVector> {
    if !engine.representable(l, r, 0) {
        return None;
    }
    let cx = delta_lr(engine, l, r);
    match quick_triviality(&cx) {
        Triviality::FullSimplex | Triviality::ConeAt(_) => None,
        Triviality::Unknown => {
            let hv = reduced_homology(&cx, field);
            hv.has_homology().then_some(hv)
        }
    }
}

// All first coordinates achievable in total degree l: a window for each
// possible count of the weight generator.
fn degree_candidates(l: u32, weight: u64, period: u64) -> Vec<u64> {
    let mut rs = Vec::new();
    for y0 in 0..=u64::from(l) {
        let lo = y0 * weight;
        let hi = lo + (u64::from(l) - y0) * period;
        rs.extend(lo..=hi);
    }
    rs.sort_unstable();
    rs.dedup();
    rs
}

fn batch_evaluate(
    engine: &GradedEngine,
    l: u32,
    candidates: &[u64],
    field: FieldSpec,
) -> Vec<(u64, HomologyVector)> {
    let opts: Vec<Option<HomologyVector>> = candidates
        .par_iter()
        .map(|&r| evaluate_graded(engine, l, r, field))
        .collect();
    candidates
        .iter()
        .zip(opts)
        .filter_map(|(&r, hv)| hv.map(|hv| (r, hv)))
        .collect()
}

fn scan_projective(
    sc: &ShiftedCurve,
    field: FieldSpec,
    l_max: Option<u32>,
) -> Result<(BettiTable, DegreeLedger)> {
    let n = sc.len() as u32;
    let weight = sc.weight();
    let period = sc.base().period();
    let mut engine = GradedEngine::new(sc);
    let mut table = BettiTable::new(Grading::Standard);
    let mut raw = Vec::new();
    let mut best_row: u64 = 1;
    let mut l = 0u32;
    loop {
        let target = 16.max(4 * (n + best_row as u32));
        let stop = l_max.unwrap_or(target);
        if l > stop {
            if let Some(cap) = l_max {
                if cap < target {
                    return Err(Error::ScanTruncated {
                        reached: cap,
                        needed: target,
                    });
                }
            }
            break;
        }
        let candidates = degree_candidates(l, weight, period);
        engine.ensure(u64::from(l) * weight);
        for (r, hv) in batch_evaluate(&engine, l, &candidates, field) {
            for (i, dim) in hv.nonzero() {
                table.add(i, u64::from(l), u64::from(dim));
                best_row = best_row.max(u64::from(l) - u64::from(i));
            }
            raw.push((l, r, hv));
        }
        l += 1;
    }
    table.set_split(table.detect_empirical_split());
    let entries = raw
        .into_iter()
        .map(|(l, r, homology)| {
            let high = match table.split() {
                Some(split) => homology
                    .nonzero()
                    .all(|(i, _)| u64::from(l) - u64::from(i) > split.row),
                None => false,
            };
            LedgerEntry {
                l,
                r,
                homology,
                high,
            }
        })
        .collect();
    Ok((
        table,
        DegreeLedger {
            entries,
            rigorous: false,
        },
    ))
}

/// Largest `l` compatible with the confinement bound
/// `l < r/b_1 + (d c + b_1)/b_{n-1} + n`, as an exact integer.
pub fn confinement_cap(sc: &ShiftedCurve, r: u64) -> u32 {
    let curve = sc.base();
    let n = curve.len() as u128;
    let b1 = curve.period() as u128;
    let b_last = curve.offsets()[curve.len() - 2] as u128;
    let dc = (curve.offset_gcd() * curve.conductor()) as u128;
    let numer = r as u128 * b_last + (dc + b1) * b1 + n * b1 * b_last;
    // strict inequality: largest integer below numer / (b1 * b_last)
    ((numer - 1) / (b1 * b_last)) as u32
}

fn rigorous_projective(
    sc: &ShiftedCurve,
    field: FieldSpec,
    reg_j: u32,
    buffer: Option<u64>,
) -> Result<(BettiTable, DegreeLedger)> {
    let curve = sc.base();
    let n = curve.len() as u32;
    let weight = sc.weight();
    let period = curve.period();
    let threshold = periodicity_threshold(curve, reg_j);
    if weight <= threshold {
        return Err(Error::WindowBreach {
            l: 0,
            r: 0,
            detail: format!(
                "rigorous mode needs weight {weight} above the threshold {threshold}; use scan mode"
            ),
        });
    }
    let split_row = u64::from(n + reg_j);
    let gcd = curve.offset_gcd();
    let row_shift = sc.row_shift();
    let width = curve.window_width();
    let buf = buffer.unwrap_or_else(|| default_buffer(curve));

    let mut engine = GradedEngine::new(sc);
    let mut table = BettiTable::new(Grading::Standard);
    let mut entries = Vec::new();

    // low block: every achievable degree up to the split row
    for l in 0..=(n + reg_j) {
        let candidates = degree_candidates(l, weight, period);
        engine.ensure(u64::from(l) * weight);
        for (r, hv) in batch_evaluate(&engine, l, &candidates, field) {
            for (i, dim) in hv.nonzero() {
                table.add(i, u64::from(l), u64::from(dim));
            }
            entries.push(LedgerEntry {
                l,
                r,
                homology: hv,
                high: false,
            });
        }
    }

    // high block: r confined to [e k, e k + width), widened by the buffer;
    // l confined per r, widened by n extra rows
    let window_lo = row_shift * weight;
    let window_hi = window_lo + width;
    let scan_lo = window_lo.saturating_sub(buf);
    let scan_hi = window_hi + buf;
    let extra_rows = n;
    engine.ensure(scan_hi - 1);
    let l_hi = confinement_cap(sc, scan_hi - 1) + extra_rows;
    for l in (n + reg_j + 1)..=l_hi {
        let candidates: Vec<u64> = (scan_lo..scan_hi)
            .filter(|&r| l <= confinement_cap(sc, r) + extra_rows)
            .collect();
        for (r, hv) in batch_evaluate(&engine, l, &candidates, field) {
            let inside = r >= window_lo
                && r < window_hi
                && r % gcd == 0
                && u64::from(l) * period >= r
                && l <= confinement_cap(sc, r);
            if !inside {
                return Err(Error::WindowBreach {
                    l,
                    r,
                    detail: format!(
                        "nontrivial homology outside the confinement window [{window_lo}, {window_hi}) at shift {}",
                        sc.shift()
                    ),
                });
            }
            for (i, dim) in hv.nonzero() {
                table.add(i, u64::from(l), u64::from(dim));
            }
            entries.push(LedgerEntry {
                l,
                r,
                homology: hv,
                high: true,
            });
        }
    }

    table.set_split(Some(Split {
        kind: SplitKind::Rigorous,
        row: split_row,
    }));
    Ok((
        table,
        DegreeLedger {
            entries,
            rigorous: true,
        },
    ))
}

/// Betti table of the affine (dehomogenized) ideal. Candidate semigroup
/// degrees are the dehomogenizations `l k - r` of the ledger degrees: the
/// projective resolution dehomogenizes to a resolution of the affine
/// ideal, so no other degree can carry a Betti number.
pub fn betti_affine(
    sc: &ShiftedCurve,
    field: FieldSpec,
    ledger: &DegreeLedger,
) -> Result<BettiTable> {
    let weight = sc.weight();
    if ledger.rigorous {
        // distinct high-block degrees must stay distinct after
        // dehomogenization
        let mut seen: BTreeMap<u64, (u32, u64)> = BTreeMap::new();
        for e in ledger.high_entries() {
            let m = u64::from(e.l) * weight - e.r;
            if let Some((pl, pr)) = seen.insert(m, (e.l, e.r)) {
                return Err(Error::WindowBreach {
                    l: e.l,
                    r: e.r,
                    detail: format!(
                        "affine degree {m} collides with the one from (l = {pl}, r = {pr})"
                    ),
                });
            }
        }
    }
    let degrees: Vec<u64> = {
        let set: std::collections::BTreeSet<u64> = ledger
            .entries
            .iter()
            .map(|e| u64::from(e.l) * weight - e.r)
            .collect();
        set.into_iter().collect()
    };
    let mut engine = AffineEngine::new(sc);
    if let Some(&max) = degrees.last() {
        engine.ensure(max);
    }
    let opts: Vec<Option<HomologyVector>> = degrees
        .par_iter()
        .map(|&m| {
            if !engine.representable(m, 0) {
                return None;
            }
            let cx = delta_m(&engine, m);
            match quick_triviality(&cx) {
                Triviality::FullSimplex | Triviality::ConeAt(_) => None,
                Triviality::Unknown => {
                    let hv = reduced_homology(&cx, field);
                    hv.has_homology().then_some(hv)
                }
            }
        })
        .collect();
    let mut table = BettiTable::new(Grading::Semigroup);
    for (&m, hv) in degrees.iter().zip(opts) {
        if let Some(hv) = hv {
            for (i, dim) in hv.nonzero() {
                table.add(i, m, u64::from(dim));
            }
        }
    }
    Ok(table)
}

/// Betti table and regularity of the ideal generated by the homogeneous
/// elements of the curve ideal, realized as the toric ideal of the
/// semigroup generated by `(a_i, 1)`. Returns regularity 0 for a zero
/// ideal (possible only for degenerate two-term sequences).
pub fn betti_j(
    curve: &CurveSequence,
    field: FieldSpec,
    l_cap: Option<u32>,
) -> Result<(BettiTable, u32)> {
    let sg = homog_part_semigroup(curve);
    let a = curve.exponents();
    let a_top = a[a.len() - 1];
    let mut table = BettiTable::new(Grading::Standard);
    let mut best_reg: u64 = 0;
    let mut grid_cap = 0u32;
    let mut grid: Option<MembershipGrid> = None;
    let mut l = 2u32;
    loop {
        let target = 32.max(4 * best_reg as u32);
        let stop = l_cap.unwrap_or(target);
        if l > stop {
            if let Some(cap) = l_cap {
                if cap < target {
                    return Err(Error::ScanTruncated {
                        reached: cap,
                        needed: target,
                    });
                }
            }
            break;
        }
        if grid.is_none() || grid_cap < l {
            grid_cap = stop.max(l);
            grid = Some(MembershipGrid::build(
                &sg,
                &[u64::from(grid_cap) * a_top, u64::from(grid_cap)],
            ));
        }
        let g = grid.as_ref().unwrap();
        let degrees: Vec<u64> = (u64::from(l) * a[0]..=u64::from(l) * a_top).collect();
        let opts: Vec<Option<HomologyVector>> = degrees
            .par_iter()
            .map(|&s| {
                let v = [s, u64::from(l)];
                if !g.contains(&v) {
                    return None;
                }
                let cx = delta_v(g, &v);
                match quick_triviality(&cx) {
                    Triviality::FullSimplex | Triviality::ConeAt(_) => None,
                    Triviality::Unknown => {
                        let hv = reduced_homology(&cx, field);
                        hv.has_homology().then_some(hv)
                    }
                }
            })
            .collect();
        for hv in opts.into_iter().flatten() {
            for (i, dim) in hv.nonzero() {
                table.add(i, u64::from(l), u64::from(dim));
                best_reg = best_reg.max(u64::from(l) - u64::from(i));
            }
        }
        l += 1;
    }
    let reg = table.reg().map(|r| r as u32).unwrap_or(0);
    Ok((table, reg))
}

/// Number of minimal generators in the high block: the count of
/// inhomogeneous generators of the affine ideal. Requires a split.
pub fn mu_prime(table: &BettiTable) -> Result<u64> {
    let split = table
        .split()
        .ok_or_else(|| Error::InvalidInput("table has no split row; mu' is undefined".into()))?;
    Ok(table
        .entries()
        .filter(|&(d, i, _)| i == 0 && d > split.row)
        .map(|(_, _, v)| v)
        .sum())
}

/// Convenience wrapper: rigorous projective run followed by the high-block
/// generator count.
pub fn mu_prime_rigorous(sc: &ShiftedCurve, field: FieldSpec, reg_j: u32) -> Result<u64> {
    let (table, _) = betti_projective(
        sc,
        field,
        ProjectiveMode::Rigorous {
            reg_j,
            buffer: None,
        },
    )?;
    mu_prime(&table)
}
