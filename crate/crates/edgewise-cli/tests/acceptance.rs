//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test -p edgewise-cli --test acceptance -- --nocapture`
//! to see the lines; a failing criterion fails its test.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use edgewise::catalog;
use edgewise::cm::{replay_witness, Analyzer, EdgewiseLevel, Route, Witness};
use edgewise::complex::{order_complex, SimplicialComplex};
use edgewise::homology::{is_acyclic, reduced_betti, FieldSpec};
use edgewise::lattice::{lattice_classes, lattice_structure};
use edgewise::poset::{bits, Interval};
use edgewise::sample::{
    has_no_three_element_interval, random_graded_poset, random_poset, random_rank1_poset,
    CounterRng, SamplerParams,
};
use edgewise::shelling::{
    is_edgewise_strongly_shellable, is_shellable, verify_shelling, DEFAULT_SHELLING_BUDGET,
};

use edgewise_cli::format::{parse_certificate, replay_certificate};
use edgewise_cli::search::{run_search, Question, SearchOptions};

fn pass(number: u32, label: &str) {
    println!("criterion {number:02} ({label}): PASS");
}

fn both_fields() -> [FieldSpec; 2] {
    [FieldSpec::Rationals, FieldSpec::PrimeField(2)]
}

/// Faces of a complex as label sets, for set-level comparisons.
fn face_set(complex: &SimplicialComplex) -> BTreeSet<BTreeSet<String>> {
    complex
        .face_label_sets()
        .into_iter()
        .map(|f| f.into_iter().collect())
        .collect()
}

#[test]
fn criterion_01_gorenstein_star_lattices_are_edgewise_strongly_cm() {
    let start = Instant::now();
    let lattices = [
        ("boolean(3)", catalog::boolean(3)),
        ("boolean(4)", catalog::boolean(4)),
        ("square", catalog::ngon(4)),
        ("tetrahedron", catalog::tetrahedron()),
        ("octahedron", catalog::octahedron()),
        ("cube", catalog::cube()),
    ];
    for field in both_fields() {
        let analyzer = Analyzer::new(field.clone());
        for (name, lattice) in &lattices {
            let proper = lattice.proper_part().unwrap();
            let verdict = analyzer
                .is_edgewise_k_cm(&proper, EdgewiseLevel::Strong)
                .unwrap();
            assert!(verdict.holds, "{name} over {field}: {:?}", verdict.witness);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    pass(1, "face lattices edgewise strongly CM over Q and GF(2)");
}

#[test]
fn criterion_02_connectivity_table() {
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    for n in 1..=6 {
        assert_eq!(analyzer.edgewise_connectivity(&catalog::chain(n)), 1);
    }
    assert_eq!(analyzer.edgewise_connectivity(&catalog::fig1()), 2);
    let b3bar = catalog::boolean(3).proper_part().unwrap();
    assert_eq!(analyzer.edgewise_connectivity(&b3bar), 2);
    let b4bar = catalog::boolean(4).proper_part().unwrap();
    assert_eq!(analyzer.edgewise_connectivity(&b4bar), 3);
    pass(2, "connectivity: chains 1, fig1 2, proper B3 2, proper B4 3");
}

#[test]
fn criterion_03_sec5_counterexample_end_to_end() {
    let lattice = catalog::sec5_lattice();
    assert!(lattice_structure(&lattice).is_lattice);
    let proper = lattice.proper_part().unwrap();

    let analyzer = Analyzer::new(FieldSpec::Rationals);
    assert!(analyzer.is_k_cm(&proper, 2).unwrap().holds);

    let b = proper.index_of("b").unwrap();
    let bcd = proper.index_of("bcd").unwrap();
    let removed = proper.remove_interval_edges(b, bcd).unwrap();
    let above_b = removed.induced(removed.up_mask(b) & !(1 << b));
    assert_eq!(above_b.grading(), (true, Some(1)));
    assert!(!above_b.is_hasse_connected());

    let verdict = analyzer
        .is_edgewise_k_cm(&proper, EdgewiseLevel::Strong)
        .unwrap();
    assert!(!verdict.holds);
    match verdict.witness.as_ref().unwrap() {
        Witness::IntervalRemovalBreaks { lo, hi, .. } => {
            assert_eq!((lo.as_str(), hi.as_str()), ("b", "bcd"));
        }
        w => panic!("unexpected witness {w:?}"),
    }
    assert!(replay_witness(
        &proper,
        &FieldSpec::Rationals,
        verdict.witness.as_ref().unwrap()
    ));
    pass(3, "face-lattice counterexample: 2-CM, fails strong at [b, bcd]");
}

#[test]
fn criterion_04_stacked_antichains_are_kcm_but_not_edgewise_kcm() {
    let analyzer = Analyzer::new(FieldSpec::Rationals);

    let two_levels = catalog::stacked_antichains(2, 3);
    assert!(analyzer.is_k_cm(&two_levels, 3).unwrap().holds);
    let verdict = analyzer
        .is_edgewise_k_cm(&two_levels, EdgewiseLevel::K(3))
        .unwrap();
    assert!(!verdict.holds);
    // A rank-one poset has no rank-two closed interval, so here the failure
    // is the rank requirement itself.
    assert_eq!(
        verdict.witness,
        Some(Witness::RankTooSmall {
            required: 2,
            found: 1
        })
    );

    // The interval mechanism appears one level up: the witness is a
    // rank-two interval containing a minimal or maximal element.
    let three_levels = catalog::stacked_antichains(3, 3);
    assert!(analyzer.is_k_cm(&three_levels, 3).unwrap().holds);
    let verdict = analyzer
        .is_edgewise_k_cm(&three_levels, EdgewiseLevel::K(3))
        .unwrap();
    assert!(!verdict.holds);
    match verdict.witness.as_ref().unwrap() {
        Witness::IntervalRemovalBreaks { lo, hi, .. } => {
            let ranks = three_levels.rank_function().unwrap();
            let lo_i = three_levels.index_of(lo).unwrap();
            let hi_i = three_levels.index_of(hi).unwrap();
            assert_eq!(ranks[hi_i] - ranks[lo_i], 2);
            let minimal = three_levels.minimal_mask() & (1 << lo_i) != 0;
            let maximal = three_levels.maximal_mask() & (1 << hi_i) != 0;
            assert!(minimal || maximal);
        }
        w => panic!("unexpected witness {w:?}"),
    }
    pass(4, "stacked antichains: k-CM holds, edgewise k-CM fails");
}

#[test]
fn criterion_05_remark36_instance() {
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    let q = catalog::remark36_q();

    assert!(analyzer
        .is_edgewise_k_cm(&q, EdgewiseLevel::K(2))
        .unwrap()
        .holds);

    for &(a, b) in q.covers() {
        let removed = q.remove_interval_edges(a, b).unwrap();
        assert_eq!(removed.grading(), (true, Some(2)));
        let complex = order_complex(&removed);
        let order = is_shellable(&complex, DEFAULT_SHELLING_BUDGET)
            .unwrap()
            .unwrap_or_else(|| panic!("edge ({}, {})", q.label(a), q.label(b)));
        assert!(verify_shelling(&complex, &order));
    }

    let verdict = analyzer.is_k_cm(&q, 2).unwrap();
    assert!(!verdict.holds);
    match verdict.witness.as_ref().unwrap() {
        Witness::DeletionBreaks { removed, .. } => {
            assert_eq!(removed, &vec!["a".to_owned()]);
        }
        w => panic!("unexpected witness {w:?}"),
    }
    pass(5, "remark36-q: edgewise 2-CM, not 2-CM at the apex");
}

#[test]
fn criterion_06_contrastar_equality_without_three_element_intervals() {
    let params = SamplerParams::desk(9);
    let mut accepted = 0u64;
    let mut stream = 0u64;
    while accepted < 200 {
        let mut rng = CounterRng::stream(1006, stream);
        stream += 1;
        let p = random_poset(&mut rng, &params);
        if !has_no_three_element_interval(&p) {
            continue;
        }
        accepted += 1;
        let delta = order_complex(&p);
        for &(a, b) in p.covers() {
            let removal = order_complex(&p.remove_interval_edges(a, b).unwrap());
            let cost = delta
                .contrastar(&[p.label(a), p.label(b)])
                .unwrap();
            assert_eq!(
                removal, cost,
                "poset {p:?}, edge ({}, {})",
                p.label(a),
                p.label(b)
            );
        }
    }
    pass(6, "edge removal equals contrastar on 200 filtered random posets");
}

#[test]
fn criterion_07_removal_complex_inside_contrastar_intersection() {
    let params = SamplerParams::desk(9);
    for stream in 0..200u64 {
        let mut rng = CounterRng::stream(1007, stream);
        let p = random_poset(&mut rng, &params);
        let delta = order_complex(&p);
        for a in 0..p.len() {
            for b in 0..p.len() {
                if !p.leq(a, b) {
                    continue;
                }
                let removal = order_complex(&p.remove_interval_edges(a, b).unwrap());
                let members: Vec<usize> =
                    bits(p.interval_mask(Interval::Closed { lo: a, hi: b }).unwrap()).collect();
                for x in &members {
                    for y in &members {
                        if !p.lt(*x, *y) {
                            continue;
                        }
                        let cost = delta
                            .contrastar(&[p.label(*x), p.label(*y)])
                            .unwrap();
                        for face in removal.face_label_sets() {
                            assert!(
                                cost.contains_face(&face),
                                "face {face:?} outside contrastar of ({}, {})",
                                p.label(*x),
                                p.label(*y)
                            );
                        }
                    }
                }
            }
        }
    }
    pass(7, "removal complex inside every contrastar, 200 random posets");
}

#[test]
fn criterion_08_contrastar_equality_on_relatively_atomic_lattices() {
    for (name, lattice) in [
        ("boolean(4)", catalog::boolean(4)),
        ("cube", catalog::cube()),
        ("partition(4)", catalog::partition(4)),
    ] {
        let classes = lattice_classes(&lattice).unwrap();
        assert!(classes.relatively_atomic, "{name}");
        let proper = lattice.proper_part().unwrap();
        let (graded, rank) = proper.grading();
        assert!(graded);
        let delta = order_complex(&proper);
        let delta_faces = face_set(&delta);
        for a in 0..proper.len() {
            for b in 0..proper.len() {
                if !proper.leq(a, b) {
                    continue;
                }
                let removed = proper.remove_interval_edges(a, b).unwrap();
                assert_eq!(removed.grading(), (true, rank), "{name} [{a}, {b}]");
                let removal_faces = face_set(&order_complex(&removed));
                let mut expected = delta_faces.clone();
                let members: Vec<usize> = bits(
                    proper
                        .interval_mask(Interval::Closed { lo: a, hi: b })
                        .unwrap(),
                )
                .collect();
                for x in &members {
                    for y in &members {
                        if proper.lt(*x, *y) {
                            let cost = delta
                                .contrastar(&[proper.label(*x), proper.label(*y)])
                                .unwrap();
                            let cost_faces = face_set(&cost);
                            expected.retain(|f| cost_faces.contains(f));
                        }
                    }
                }
                assert_eq!(
                    removal_faces, expected,
                    "{name} interval [{}, {}]",
                    proper.label(a),
                    proper.label(b)
                );
            }
        }
    }
    pass(8, "removal equals contrastar intersection on B4, cube, partition(4)");
}

#[test]
fn criterion_09_acyclicity_on_gorenstein_star_lattices() {
    for (name, lattice) in [
        ("boolean(4)", catalog::boolean(4)),
        ("octahedron", catalog::octahedron()),
    ] {
        let proper = lattice.proper_part().unwrap();
        let ranks = proper.rank_function().unwrap();
        for field in both_fields() {
            for a in 0..proper.len() {
                for b in 0..proper.len() {
                    if proper.lt(a, b) && ranks[b] > ranks[a] {
                        let removed = proper.remove_interval_edges(a, b).unwrap();
                        assert!(
                            is_acyclic(&order_complex(&removed), &field),
                            "{name} [{}, {}] over {field}",
                            proper.label(a),
                            proper.label(b)
                        );
                    }
                }
                let up = proper.induced(proper.full_mask() & !proper.up_mask(a));
                assert!(
                    is_acyclic(&order_complex(&up), &field),
                    "{name} minus up-set of {} over {field}",
                    proper.label(a)
                );
                let down = proper.induced(proper.full_mask() & !proper.down_mask(a));
                assert!(
                    is_acyclic(&order_complex(&down), &field),
                    "{name} minus down-set of {} over {field}",
                    proper.label(a)
                );
            }
        }
    }
    pass(9, "interval removals and principal-set deletions are acyclic");
}

#[test]
fn criterion_10_route_equivalence() {
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    for (name, p) in catalog::standard_instances() {
        if p.is_empty() {
            continue;
        }
        analyzer
            .is_cm(&p, Route::Both)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    let params = SamplerParams::desk(8);
    for stream in 0..500u64 {
        let mut rng = CounterRng::stream(1010, stream);
        let p = random_graded_poset(&mut rng, &params);
        analyzer
            .is_cm(&p, Route::Both)
            .unwrap_or_else(|e| panic!("stream {stream}: {e}"));
    }
    pass(10, "link and interval routes agree on catalog and 500 random posets");
}

#[test]
fn criterion_11_homology_oracle() {
    let from = |sets: &[&[&str]]| {
        let owned: Vec<Vec<String>> = sets
            .iter()
            .map(|s| s.iter().map(|v| v.to_string()).collect())
            .collect();
        SimplicialComplex::from_faces(&owned).unwrap()
    };
    for field in both_fields() {
        let s0 = from(&[&["a"], &["b"]]);
        let betti = reduced_betti(&s0, &field);
        assert_eq!(betti.get(0), 1);
        assert!(betti.iter_indexed().all(|(d, v)| d == 0 || v == 0));

        let six_cycle = order_complex(&catalog::boolean(3).proper_part().unwrap());
        let betti = reduced_betti(&six_cycle, &field);
        assert_eq!(betti.get(1), 1);
        assert!(betti.iter_indexed().all(|(d, v)| d == 1 || v == 0));

        let sphere = from(&[
            &["a", "b", "c"],
            &["a", "b", "d"],
            &["a", "c", "d"],
            &["b", "c", "d"],
        ]);
        let betti = reduced_betti(&sphere, &field);
        assert_eq!(betti.get(2), 1);
        assert!(betti.iter_indexed().all(|(d, v)| d == 2 || v == 0));

        let cone = from(&[&["apex", "a", "b"], &["apex", "b", "c"], &["apex", "d"]]);
        assert!(reduced_betti(&cone, &field).is_all_zero());

        // Euler-Poincaré on every catalog order complex.
        for (name, p) in catalog::standard_instances() {
            let complex = order_complex(&p);
            let betti = reduced_betti(&complex, &field);
            let chi_faces: i64 = complex
                .f_vector()
                .iter()
                .enumerate()
                .map(|(i, &c)| {
                    if (i as i64 - 1) % 2 == 0 {
                        c as i64
                    } else {
                        -(c as i64)
                    }
                })
                .sum();
            let chi_betti: i64 = betti
                .iter_indexed()
                .map(|(d, v)| if d % 2 == 0 { v as i64 } else { -(v as i64) })
                .sum();
            assert_eq!(chi_faces, chi_betti, "{name} over {field}");
        }
    }
    pass(11, "homology oracle values and Euler-Poincare identity");
}

#[test]
fn criterion_12_shelling_consistency() {
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    let gf2 = Analyzer::new(FieldSpec::PrimeField(2));
    for (name, p) in catalog::standard_instances() {
        if p.is_empty() {
            continue;
        }
        let complex = order_complex(&p);
        if !complex.is_pure() {
            continue;
        }
        if let Ok(Some(order)) = is_shellable(&complex, DEFAULT_SHELLING_BUDGET) {
            assert!(verify_shelling(&complex, &order), "{name}");
            assert!(
                analyzer.is_cm(&p, Route::IntervalCondition).unwrap().holds,
                "{name} shellable but not CM over Q"
            );
            assert!(
                gf2.is_cm(&p, Route::IntervalCondition).unwrap().holds,
                "{name} shellable but not CM over GF(2)"
            );
        }
    }
    for n in [3, 4] {
        let proper = catalog::boolean(n).proper_part().unwrap();
        let verdict = is_edgewise_strongly_shellable(&proper, DEFAULT_SHELLING_BUDGET).unwrap();
        assert!(verdict.holds, "boolean({n})");
    }
    pass(12, "shellings re-validate; shellable implies CM; B3, B4 strongly shellable");
}

#[test]
fn criterion_13_rank_one_cross_check() {
    // Independent graph-side oracles by breadth-first search.
    fn component_count(n: usize, edges: &[(usize, usize)], skip: Option<usize>) -> usize {
        let keep: Vec<usize> = (0..n).filter(|&v| Some(v) != skip).collect();
        let mut seen = vec![false; n];
        let mut components = 0;
        for &start in &keep {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for &(a, b) in edges {
                    for (x, y) in [(a, b), (b, a)] {
                        if x == v && Some(y) != skip && !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
        }
        components
    }
    let connected = |n: usize, edges: &[(usize, usize)], skip: Option<usize>| {
        component_count(n, edges, skip) == 1
    };

    let analyzer = Analyzer::new(FieldSpec::Rationals);
    let params = SamplerParams::desk(8);
    for stream in 0..200u64 {
        let mut rng = CounterRng::stream(1013, stream);
        let p = random_rank1_poset(&mut rng, &params);
        let n = p.len();
        let edges = p.covers().to_vec();

        let oracle_cm = connected(n, &edges, None);
        let oracle_2cm = oracle_cm
            && (0..n).all(|v| {
                let remaining: Vec<(usize, usize)> = edges
                    .iter()
                    .copied()
                    .filter(|&(a, b)| a != v && b != v)
                    .collect();
                connected(n, &remaining, Some(v)) && !remaining.is_empty()
            });
        let oracle_e2cm = oracle_cm
            && edges.iter().all(|&e| {
                let remaining: Vec<(usize, usize)> =
                    edges.iter().copied().filter(|&f| f != e).collect();
                connected(n, &remaining, None) && !remaining.is_empty()
            });

        assert_eq!(
            analyzer.is_cm(&p, Route::IntervalCondition).unwrap().holds,
            oracle_cm,
            "cm vs connected on stream {stream}: {p:?}"
        );
        assert_eq!(
            analyzer.is_k_cm(&p, 2).unwrap().holds,
            oracle_2cm,
            "2-cm vs 2-vertex-connected on stream {stream}: {p:?}"
        );
        assert_eq!(
            analyzer
                .is_edgewise_k_cm(&p, EdgewiseLevel::K(2))
                .unwrap()
                .holds,
            oracle_e2cm,
            "edgewise 2-cm vs 2-edge-connected on stream {stream}: {p:?}"
        );
    }
    pass(13, "rank-one verdicts match direct graph connectivity on 200 posets");
}

#[test]
fn criterion_14_search_harness() {
    let start = Instant::now();
    let dir = std::env::temp_dir().join(format!("edgewise-acceptance-{}", std::process::id()));
    let opts = SearchOptions {
        question: Question::MobiusNowhereZero,
        seed: 42,
        trials: 100,
        max_elements: 8,
        field: FieldSpec::Rationals,
        out_dir: dir.clone(),
        argv: vec!["search".into(), "mobius-nowhere-zero".into()],
    };
    let first = run_search(&opts).unwrap();
    let manifest_bytes = std::fs::read(dir.join("manifest.json")).unwrap();
    assert!(first.manifest.generated == 100);
    assert!(first.manifest.checked > 0, "filter passed nothing");
    assert_eq!(first.manifest.violations, 0);

    // Identical run, byte-identical manifest.
    let second = run_search(&opts).unwrap();
    let manifest_bytes_again = std::fs::read(dir.join("manifest.json")).unwrap();
    assert_eq!(manifest_bytes, manifest_bytes_again);
    assert_eq!(first.manifest, second.manifest);

    // The replay machinery itself, on a genuine violation: the sweep over
    // the geometric question includes the sec5 control, which fails.
    let sweep_dir = dir.join("geometric");
    let sweep = run_search(&SearchOptions {
        question: Question::GeometricStrongEcm,
        seed: 42,
        trials: 1,
        max_elements: 32,
        field: FieldSpec::Rationals,
        out_dir: sweep_dir.clone(),
        argv: vec!["search".into(), "geometric-strong-ecm".into()],
    })
    .unwrap();
    assert_eq!(sweep.manifest.violations, 1);
    assert!(sweep
        .manifest
        .instances
        .iter()
        .all(|i| i.holds == (i.name != "sec5-lattice")));
    let cert_text = std::fs::read_to_string(&sweep.certificate_paths[0]).unwrap();
    let cert = parse_certificate(&cert_text).unwrap();
    assert!(replay_certificate(&cert).unwrap());

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    std::fs::remove_dir_all(&dir).ok();
    pass(14, "search harness: reproducible manifest, certificates replay");
}
