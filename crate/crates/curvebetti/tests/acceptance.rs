//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its runtime (run with `-- --nocapture` to see them).
//!
//! Criterion 2 appears twice. `criterion_2_golden_complexes_as_stated`
//! pins the facet lists exactly as given by the upstream fixture; that
//! fixture is internally inconsistent (summing homology over all r
//! reproduces the golden tables of criterion 1 only with the corrected
//! facet lists), so the as-stated assertion fails and is kept failing on
//! purpose. `criterion_2_golden_complexes_verified` asserts the facet
//! lists confirmed by exhaustive composition enumeration, plus the
//! double-cone witnesses and homology contributions.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use curvebetti::betti::{betti_affine, betti_j, betti_projective, BettiTable, ProjectiveMode};
use curvebetti::divisor::delta_lr_of;
use curvebetti::membership::{affine_representable, graded_representable};
use curvebetti::semigroup::{apery_set, conductor, periodicity_threshold};
use curvebetti::simplicial::{reduced_homology, FieldSpec};
use curvebetti::verify::{
    bresinsky_mu_check, check_affine_equality, check_deletion, check_double_cone,
    check_main_periodicity, check_shift,
};
use curvebetti::CurveSequence;

const GF32003: FieldSpec = FieldSpec::Prime(32003);

fn fixture_curve() -> CurveSequence {
    CurveSequence::new(&[1, 2, 3, 7, 10]).unwrap()
}

fn entry_map(entries: &[(u32, u64, u64)]) -> BTreeMap<(u64, u32), u64> {
    entries.iter().map(|&(i, d, v)| ((d, i), v)).collect()
}

// the two golden tables: (index, degree, value)
fn golden_shift_49() -> BTreeMap<(u64, u32), u64> {
    entry_map(&[
        (0, 2, 1),
        (0, 3, 6),
        (1, 4, 8),
        (1, 5, 2),
        (2, 5, 1),
        (2, 6, 4),
        (0, 7, 2),
        (3, 7, 1),
        (0, 8, 1),
        (1, 8, 1),
        (1, 9, 11),
        (2, 10, 13),
        (3, 11, 3),
        (3, 12, 1),
    ])
}

fn golden_shift_58() -> BTreeMap<(u64, u32), u64> {
    entry_map(&[
        (0, 2, 1),
        (0, 3, 6),
        (1, 4, 8),
        (1, 5, 2),
        (2, 5, 1),
        (2, 6, 4),
        (3, 7, 1),
        (0, 8, 2),
        (0, 9, 1),
        (1, 9, 1),
        (1, 10, 11),
        (2, 11, 13),
        (3, 12, 3),
        (3, 13, 1),
    ])
}

fn table_entries(table: &BettiTable) -> BTreeMap<(u64, u32), u64> {
    table.entries().map(|(d, i, v)| ((d, i), v)).collect()
}

fn scan_table(shift: u64, field: FieldSpec) -> BettiTable {
    let sc = fixture_curve().shift(shift).unwrap();
    betti_projective(&sc, field, ProjectiveMode::Scan { l_max: None })
        .unwrap()
        .0
}

#[test]
fn criterion_1_golden_tables() {
    let start = Instant::now();
    for field in [FieldSpec::Rationals, GF32003] {
        for (shift, golden, reg) in [(49, golden_shift_49(), 9), (58, golden_shift_58(), 10)] {
            let table = scan_table(shift, field);
            assert_eq!(
                table_entries(&table),
                golden,
                "table mismatch at shift {shift} over {field}"
            );
            assert_eq!(table.reg().unwrap(), reg);
            // sanity: an ideal table never has an entry with index >= degree
            assert!(table.entries().all(|(d, i, _)| u64::from(i) < d));
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "golden tables took {elapsed:?}");
    println!(
        "PASS criterion 1: golden tables at shifts 49 and 58 over q and p:32003 ({elapsed:?})"
    );
}

#[test]
fn criterion_2_golden_complexes_as_stated() {
    let sc = fixture_curve().shift(49).unwrap();
    let low = delta_lr_of(&sc, 9, 73);
    let high = delta_lr_of(&sc, 10, 83);
    assert!(low.double_cone_witness(0, 1, 5));
    assert!(high.double_cone_witness(0, 1, 5));
    let stated_low = vec![
        vec![0, 2, 4, 5],
        vec![0, 3, 5],
        vec![1, 2, 4],
        vec![1, 3, 4],
    ];
    let stated_high = vec![
        vec![0, 1, 4, 5],
        vec![0, 1, 2, 3, 5],
        vec![0, 3, 4, 5],
        vec![1, 2, 4],
        vec![1, 3, 4],
    ];
    let sort = |mut v: Vec<Vec<usize>>| {
        v.sort();
        v
    };
    // Known to fail: the upstream fixture omits the facet {1,2,3} of the
    // first complex (witness y = (0,2,6,1,0,0)) and miscopies the second;
    // criterion_2_golden_complexes_verified holds the oracle-confirmed
    // lists.
    assert_eq!(
        sort(low.facet_lists()),
        sort(stated_low),
        "the first example complex differs from the stated facet list"
    );
    assert_eq!(
        sort(high.facet_lists()),
        sort(stated_high),
        "the second example complex differs from the stated facet list"
    );
    println!("PASS criterion 2 (as stated): example facet lists reproduced");
}

#[test]
fn criterion_2_golden_complexes_verified() {
    let start = Instant::now();
    let curve = fixture_curve();
    let sc = curve.shift(49).unwrap();
    for (l, r, expected_facets, nonzero) in [
        (
            9u32,
            73u64,
            vec![
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![1, 3, 4],
                vec![0, 3, 5],
                vec![0, 2, 4, 5],
            ],
            (1u32, 1u32), // H~_1 = 1
        ),
        (
            10,
            83,
            vec![
                vec![1, 2, 4],
                vec![0, 1, 2, 3, 5],
                vec![0, 1, 4, 5],
                vec![0, 2, 3, 4, 5],
            ],
            (2, 1), // H~_2 = 1
        ),
    ] {
        let cx = delta_lr_of(&sc, l, r);
        // cross-check every face against the composition-enumeration oracle
        let universe = cx.universe();
        let expected_faces: Vec<u16> = (0..=universe)
            .filter(|&m| {
                m & !universe == 0 && common::brute_graded(sc.weight(), curve.offsets(), l, r, m)
            })
            .collect();
        assert_eq!(cx.faces(), expected_faces.as_slice());
        assert_eq!(cx.facet_lists(), expected_facets);
        assert!(cx.double_cone_witness(0, 1, 5));
        let h = reduced_homology(&cx, FieldSpec::Rationals);
        assert_eq!(h.h(nonzero.0 as i32), nonzero.1);
        assert_eq!(common::gf2_homology(&cx)[nonzero.0 as usize + 1], nonzero.1);
    }
    println!(
        "PASS criterion 2 (verified): oracle-confirmed facet lists, double-cone witnesses and homology ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_3_bresinsky_regularity() {
    let start = Instant::now();
    let curve = CurveSequence::new(&[12, 15, 20, 23]).unwrap();
    for field in [FieldSpec::Rationals, GF32003] {
        let (_, reg) = betti_j(&curve, field, None).unwrap();
        assert_eq!(reg, 8);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60);
    println!("PASS criterion 3: homogeneous-part regularity 8 for (12,15,20,23) ({elapsed:?})");
}

#[test]
fn criterion_4_bresinsky_sharpness() {
    let start = Instant::now();
    let mu_of = |j: u64| -> (bool, u64) {
        let report = bresinsky_mu_check(2, j, FieldSpec::Rationals).unwrap();
        let mu = report.params["mu_prime"].as_u64().unwrap();
        (report.is_pass(), mu)
    };
    let report = bresinsky_mu_check(2, 3176, FieldSpec::Rationals).unwrap();
    assert!(report.is_pass());
    assert_eq!(report.params["mu_prime"], 11);
    // in the sharp case every generator sits in one degree: q + 2h + 1
    let expected_degree = report.params["quotient"].as_u64().unwrap() + 5;
    let generator_degrees: Vec<u64> = report.params["ledger"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["block"] == "high" && e["h"][0].as_u64().unwrap() > 0)
        .map(|e| e["l"].as_u64().unwrap())
        .collect();
    assert_eq!(generator_degrees.len(), 11);
    assert!(generator_degrees.iter().all(|&l| l == expected_degree));
    // two further residue classes below the sharp one
    for j in [3169, 3172, 3175] {
        let (pass, mu) = mu_of(j);
        assert!(pass, "sharpness check failed at shift {j}");
        assert!(mu <= 10, "mu' = {mu} exceeds 10 at shift {j}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 1800);
    println!("PASS criterion 4: mu' = 11 at shift 3176, mu' <= 10 at 3169/3172/3175 ({elapsed:?})");
}

#[test]
fn criterion_5_guaranteed_regime() {
    let start = Instant::now();
    let curve = fixture_curve();
    let field = FieldSpec::Rationals;
    let (_, reg_j) = betti_j(&curve, field, None).unwrap();
    assert_eq!(reg_j, 4);
    assert_eq!(periodicity_threshold(&curve, reg_j), 2736);
    let j = 2737;
    let shift = check_shift(&curve, j, field, reg_j, None).unwrap();
    assert!(shift.is_pass(), "{:?}", shift.witnesses);
    let affine = check_affine_equality(&curve, j, field, reg_j, None).unwrap();
    assert!(affine.is_pass(), "{:?}", affine.witnesses);
    let period = check_main_periodicity(&curve, j, 1, field, reg_j, None).unwrap();
    assert!(period.is_pass(), "{:?}", period.witnesses);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 1800);
    println!("PASS criterion 5: shift, affine-equality and periodicity checks at shift 2737 ({elapsed:?})");
}

#[test]
fn criterion_6a_homology_properties() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(601);
    let mut torsion_reports = 0;
    for case in 0..500 {
        let cx = common::random_complex(&mut rng, 7);
        let h_q = reduced_homology(&cx, FieldSpec::Rationals);
        let h_p = reduced_homology(&cx, GF32003);
        let oracle = common::gf2_homology(&cx);
        // Euler characteristic identity in both fields
        let euler = common::reduced_euler(&cx);
        for h in [&h_q, &h_p] {
            let alt: i64 = h
                .dims()
                .iter()
                .enumerate()
                .map(|(idx, &d)| if idx % 2 == 0 { -(d as i64) } else { d as i64 })
                .sum();
            assert_eq!(alt, euler, "Euler identity failed on case {case}");
        }
        // cones are acyclic
        if (0..7).any(|v| cx.is_cone(v)) {
            assert!(!h_q.has_homology());
            assert!(!h_p.has_homology());
        }
        // rational homology vs the independent GF(2) oracle: mismatches
        // must be genuine torsion, witnessed by the rank-based GF(2)
        // computation agreeing with the oracle
        let h_q_padded: Vec<u32> = (0..oracle.len())
            .map(|i| h_q.dims().get(i).copied().unwrap_or(0))
            .collect();
        if h_q_padded != oracle {
            let h_2 = reduced_homology(&cx, FieldSpec::Prime(2));
            let h_2_padded: Vec<u32> = (0..oracle.len())
                .map(|i| h_2.dims().get(i).copied().unwrap_or(0))
                .collect();
            assert_eq!(
                h_2_padded, oracle,
                "rank-based GF(2) homology disagrees with the incremental oracle on case {case}"
            );
            torsion_reports += 1;
            eprintln!(
                "torsion report (case {case}): rational dims {:?} vs GF(2) dims {:?}, facets {:?}",
                h_q.dims(),
                oracle,
                cx.facet_lists()
            );
        }
    }
    println!(
        "PASS criterion 6a: 500 random complexes (Euler, cone acyclicity, GF(2) oracle; {torsion_reports} torsion reports) ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_6b_membership_against_brute_force() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(602);
    for _ in 0..200 {
        let curve = common::random_curve(&mut rng, 30);
        let top = curve.exponents()[curve.len() - 1];
        let j = rng.gen_range(1..=(40 - top).max(1));
        let sc = curve.shift(j).unwrap();
        let n = curve.len();
        let all_vertices: u16 = (0..=n).map(|v| 1u16 << v).sum();
        for _ in 0..6 {
            let l = rng.gen_range(0..=8u32);
            let r = rng.gen_range(0..=u64::from(l) * sc.weight());
            let forced = rng.gen_range(0..=all_vertices) & all_vertices;
            assert_eq!(
                graded_representable(&sc, l, r, forced),
                common::brute_graded(sc.weight(), curve.offsets(), l, r, forced),
                "graded mismatch: seq {:?}, j={j}, (l,r)=({l},{r}), forced={forced:#b}",
                curve.exponents()
            );
        }
        let degrees: Vec<u64> = (1..=n).map(|i| sc.affine_degree(i)).collect();
        let affine_vertices: u16 = (1..=n).map(|v| 1u16 << v).sum();
        for _ in 0..4 {
            let m = rng.gen_range(0..=300u64);
            let forced = rng.gen_range(0..=affine_vertices) & affine_vertices;
            assert_eq!(
                affine_representable(&sc, m, forced),
                common::brute_affine(&degrees, m, forced),
                "affine mismatch: seq {:?}, j={j}, m={m}, forced={forced:#b}",
                curve.exponents()
            );
        }
    }
    println!(
        "PASS criterion 6b: 200 random instances, graded and affine membership match brute force ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_6c_conductor_and_apery() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(603);
    for _ in 0..100 {
        let gens = common::random_coprime_gens(&mut rng);
        assert_eq!(
            conductor(&gens).unwrap(),
            common::brute_conductor(&gens),
            "conductor mismatch for {gens:?}"
        );
        let m = *gens.iter().min().unwrap();
        let apery = apery_set(&gens, m).unwrap();
        assert_eq!(apery.len() as u64, m);
        assert_eq!(
            apery,
            common::brute_apery(&gens, m),
            "apery mismatch for {gens:?}"
        );
        for (res, &x) in apery.iter().enumerate() {
            assert_eq!(x % m, res as u64);
        }
    }
    println!(
        "PASS criterion 6c: 100 random generator sets, conductor and apery sets match brute force ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_6d_window_confinement_above_threshold() {
    let start = Instant::now();
    let field = FieldSpec::Rationals;

    // fixture curve in the guaranteed regime: window confinement, double
    // cone, vertex-0 deletion, and affine-degree distinctness must all
    // hold with zero breaches
    let curve = fixture_curve();
    let (_, reg_j) = betti_j(&curve, field, None).unwrap();
    let j = 2737;
    let cone = check_double_cone(&curve, j, field, reg_j, None).unwrap();
    assert!(cone.is_pass(), "{:?}", cone.witnesses);
    let deletion = check_deletion(&curve, j, field, reg_j, None).unwrap();
    assert!(deletion.is_pass(), "{:?}", deletion.witnesses);
    let sc = curve.shift(j).unwrap();
    let (_, ledger) = betti_projective(
        &sc,
        field,
        ProjectiveMode::Rigorous {
            reg_j,
            buffer: None,
        },
    )
    .unwrap();
    // distinctness of dehomogenized degrees is enforced inside betti_affine
    betti_affine(&sc, field, &ledger).unwrap();

    // a curve with offset gcd 6 and row shift 2, also above its threshold
    let curve = CurveSequence::new(&[2, 8, 14]).unwrap();
    assert_eq!(curve.offset_gcd(), 6);
    let (_, reg_j) = betti_j(&curve, field, None).unwrap();
    let j = periodicity_threshold(&curve, reg_j) + 1;
    let sc = curve.shift(j).unwrap();
    assert!(sc.row_shift() > 1, "want a nontrivial row shift");
    for report in [
        check_shift(&curve, j, field, reg_j, None).unwrap(),
        check_double_cone(&curve, j, field, reg_j, None).unwrap(),
        check_deletion(&curve, j, field, reg_j, None).unwrap(),
        check_affine_equality(&curve, j, field, reg_j, None).unwrap(),
    ] {
        assert!(report.is_pass(), "{}: {:?}", report.check, report.witnesses);
    }
    println!(
        "PASS criterion 6d: window confinement, double-cone, deletion and distinctness hold above the threshold ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_7_determinism_across_thread_counts() {
    let start = Instant::now();
    let artifacts = || -> String {
        let mut out = String::new();
        // criterion 1 artifacts
        for field in [FieldSpec::Rationals, GF32003] {
            for shift in [49u64, 58] {
                out.push_str(&scan_table(shift, field).to_json().to_string());
                out.push('\n');
            }
        }
        // criterion 2 artifacts
        let sc = fixture_curve().shift(49).unwrap();
        for (l, r) in [(9u32, 73u64), (10, 83)] {
            out.push_str(&serde_json::to_string(&delta_lr_of(&sc, l, r).facet_lists()).unwrap());
            out.push('\n');
        }
        // criterion 3 artifact
        let bres = CurveSequence::new(&[12, 15, 20, 23]).unwrap();
        let (table, reg) = betti_j(&bres, FieldSpec::Rationals, None).unwrap();
        out.push_str(&format!("{reg} {}\n", table.to_json()));
        // criterion 4 artifacts
        for j in [3176u64, 3169] {
            let report = bresinsky_mu_check(2, j, FieldSpec::Rationals).unwrap();
            out.push_str(&report.to_json().to_string());
            out.push('\n');
        }
        // criterion 5 artifacts
        let curve = fixture_curve();
        let (_, reg_j) = betti_j(&curve, FieldSpec::Rationals, None).unwrap();
        for report in [
            check_shift(&curve, 2737, FieldSpec::Rationals, reg_j, None).unwrap(),
            check_affine_equality(&curve, 2737, FieldSpec::Rationals, reg_j, None).unwrap(),
            check_main_periodicity(&curve, 2737, 1, FieldSpec::Rationals, reg_j, None).unwrap(),
        ] {
            out.push_str(&report.to_json().to_string());
            out.push('\n');
        }
        out
    };
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(artifacts);
    let many = rayon::ThreadPoolBuilder::new()
        .num_threads(16)
        .build()
        .unwrap()
        .install(artifacts);
    assert_eq!(single, many, "outputs differ between 1 and 16 threads");
    println!(
        "PASS criterion 7: byte-identical JSON artifacts with 1 and 16 threads ({:?})",
        start.elapsed()
    );
}
