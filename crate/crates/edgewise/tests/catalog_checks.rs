//! Cross-module checks of the catalog families: the structural facts each
//! generated instance is supposed to satisfy.

use edgewise::catalog;
use edgewise::cm::{Analyzer, EdgewiseLevel, Route, Witness};
use edgewise::complex::order_complex;
use edgewise::homology::FieldSpec;
use edgewise::lattice::{lattice_classes, mobius_function};
use edgewise::poset::Poset;
use edgewise::shelling::{is_shellable, DEFAULT_SHELLING_BUDGET};

#[test]
fn boolean_lattices_are_geometric_and_gorenstein_star() {
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    for n in 1..=4 {
        let b = catalog::boolean(n);
        let classes = lattice_classes(&b).unwrap();
        assert!(classes.geometric, "boolean({n})");
        let proper = b.proper_part().unwrap();
        if proper.is_empty() {
            continue;
        }
        let v = analyzer.is_gorenstein_star(&proper).unwrap();
        assert!(v.holds, "boolean({n}) proper part");
    }
}

#[test]
fn gorenstein_star_lattices_have_nowhere_zero_mobius_and_relative_atomicity() {
    for lattice in [
        catalog::boolean(3),
        catalog::boolean(4),
        catalog::ngon(4),
        catalog::ngon(5),
        catalog::tetrahedron(),
        catalog::octahedron(),
        catalog::cube(),
    ] {
        let (_, nowhere_zero) = mobius_function(&lattice);
        assert!(nowhere_zero);
        let classes = lattice_classes(&lattice).unwrap();
        assert!(classes.relatively_atomic);
    }
}

#[test]
fn gorenstein_star_proper_parts_have_sphere_betti_profile() {
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    for lattice in [catalog::boolean(3), catalog::boolean(4), catalog::octahedron()] {
        let proper = lattice.proper_part().unwrap();
        let complex = order_complex(&proper);
        let betti = analyzer.betti(&complex);
        assert_eq!(betti.top(), 1);
        assert!(betti
            .iter_indexed()
            .all(|(d, v)| d == complex.dim() || v == 0));
    }
}

#[test]
fn betti_vectors_agree_over_q_and_gf2_on_the_catalog() {
    let rational = Analyzer::new(FieldSpec::Rationals);
    let gf2 = Analyzer::new(FieldSpec::PrimeField(2));
    for (name, p) in catalog::standard_instances() {
        let complex = order_complex(&p);
        assert_eq!(
            rational.betti(&complex),
            gf2.betti(&complex),
            "betti mismatch between Q and GF(2) on {name}"
        );
    }
}

#[test]
fn fig2_standin_contract() {
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    let p = catalog::fig2_standin();
    assert!(analyzer
        .is_edgewise_k_cm(&p, EdgewiseLevel::K(2))
        .unwrap()
        .holds);
    let v = analyzer.is_k_cm(&p, 2).unwrap();
    assert!(!v.holds);
}

#[test]
fn remark36_q_ominus_every_edge_is_shellable_of_rank_two() {
    let q = catalog::remark36_q();
    for &(a, b) in q.covers() {
        let removed = q.remove_interval_edges(a, b).unwrap();
        assert_eq!(removed.grading(), (true, Some(2)));
        let complex = order_complex(&removed);
        let order = is_shellable(&complex, DEFAULT_SHELLING_BUDGET).unwrap();
        assert!(order.is_some(), "edge ({}, {})", q.label(a), q.label(b));
    }
}

#[test]
fn ordinal_sum_of_antichains_below_fig2_standin_is_not_edgewise_2_cm() {
    // Stacking two 2-element antichains under the glued-cycles poset breaks
    // edgewise double Cohen-Macaulayness, even though every summand has it.
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    let relabel = |p: &Poset, prefix: &str| -> Poset {
        Poset::from_cover_indices(
            p.labels().iter().map(|l| format!("{prefix}{l}")).collect(),
            p.covers().to_vec(),
        )
        .unwrap()
    };
    let low = relabel(&catalog::antichain(2), "p");
    let mid = relabel(&catalog::antichain(2), "q");
    // Every summand is edgewise strongly CM (the antichains trivially, the
    // glued-cycles poset with connectivity rank + 1 = 2).
    for summand in [&low, &mid, &catalog::fig2_standin()] {
        assert!(analyzer
            .is_edgewise_k_cm(summand, EdgewiseLevel::Strong)
            .unwrap()
            .holds);
    }
    let sum = low
        .ordinal_sum(&mid)
        .unwrap()
        .ordinal_sum(&catalog::fig2_standin())
        .unwrap();
    let v = analyzer.is_edgewise_k_cm(&sum, EdgewiseLevel::K(2)).unwrap();
    assert!(!v.holds);
    // The failure is an interval reaching the glue vertex from the level
    // below it.
    match v.witness.unwrap() {
        Witness::IntervalRemovalBreaks { hi, .. } => assert_eq!(hi, "a"),
        w => panic!("unexpected witness {w:?}"),
    }
}

#[test]
fn sec5_proper_part_is_2_cm() {
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    let proper = catalog::sec5_lattice().proper_part().unwrap();
    assert!(analyzer.is_k_cm(&proper, 2).unwrap().holds);
}

#[test]
fn shellable_catalog_posets_are_cm_over_every_field() {
    let fields = [
        FieldSpec::Rationals,
        FieldSpec::PrimeField(2),
        FieldSpec::PrimeField(3),
    ];
    for (name, p) in catalog::standard_instances() {
        if p.is_empty() {
            continue;
        }
        let complex = order_complex(&p);
        if !complex.is_pure() {
            continue;
        }
        if let Ok(Some(order)) = is_shellable(&complex, DEFAULT_SHELLING_BUDGET) {
            assert!(edgewise::shelling::verify_shelling(&complex, &order));
            for field in &fields {
                let analyzer = Analyzer::new(field.clone());
                assert!(
                    analyzer.is_cm(&p, Route::IntervalCondition).unwrap().holds,
                    "{name} is shellable but not CM over {field}"
                );
            }
        }
    }
}

#[test]
fn connectivity_respects_minimal_maximal_count() {
    // Edgewise k-CM for k >= 2 needs at least two minimal and two maximal
    // elements.
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    for (name, p) in catalog::standard_instances() {
        if p.is_empty() {
            continue;
        }
        let conn = analyzer.edgewise_connectivity(&p);
        if conn >= 2 {
            assert!(p.minimal_mask().count_ones() >= 2, "{name}");
            assert!(p.maximal_mask().count_ones() >= 2, "{name}");
        }
    }
}

#[test]
fn connectivity_nesting_and_strongness() {
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    for (name, p) in catalog::standard_instances() {
        if p.is_empty() {
            continue;
        }
        let conn = analyzer.edgewise_connectivity(&p);
        // Every level up to the connectivity holds, the next one fails.
        for k in 1..=conn {
            assert!(
                analyzer.is_edgewise_k_cm(&p, EdgewiseLevel::K(k)).unwrap().holds,
                "{name} at k={k}"
            );
        }
        if conn > 0 {
            assert!(!analyzer
                .is_edgewise_k_cm(&p, EdgewiseLevel::K(conn + 1))
                .unwrap()
                .holds);
            let (graded, rank) = p.grading();
            assert!(graded);
            let rank = rank.unwrap() as u32;
            assert!(conn <= rank + 1, "{name}");
            let strong = analyzer
                .is_edgewise_k_cm(&p, EdgewiseLevel::Strong)
                .unwrap()
                .holds;
            assert_eq!(strong, conn == rank + 1, "{name}");
        }
    }
}

#[test]
fn open_intervals_inherit_edgewise_connectivity() {
    // If P is edgewise k-CM, every nonempty open interval J of the bounded
    // extension is edgewise min(k, rank(J)+1)-CM.
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    for p in [
        catalog::fig1(),
        catalog::boolean(3).proper_part().unwrap(),
        catalog::boolean(4).proper_part().unwrap(),
        catalog::remark36_q(),
    ] {
        let k = analyzer.edgewise_connectivity(&p);
        assert!(k >= 1);
        let hat = p.add_bounds();
        for lo in 0..hat.len() {
            for hi in 0..hat.len() {
                if !hat.lt(lo, hi) {
                    continue;
                }
                let interval = hat
                    .interval(edgewise::poset::Interval::Open { lo, hi })
                    .unwrap();
                if interval.is_empty() {
                    continue;
                }
                let (graded, rank) = interval.grading();
                assert!(graded);
                let r = k.min(rank.unwrap() as u32 + 1);
                assert!(
                    analyzer
                        .is_edgewise_k_cm(&interval, EdgewiseLevel::K(r))
                        .unwrap()
                        .holds,
                    "interval ({}, {}) at r={r}",
                    hat.label(lo),
                    hat.label(hi)
                );
            }
        }
    }
}

#[test]
fn doubly_cm_of_positive_rank_implies_edgewise_doubly_cm() {
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    for (name, p) in catalog::standard_instances() {
        if p.is_empty() {
            continue;
        }
        let (graded, rank) = p.grading();
        if !graded || rank.unwrap_or(0) < 1 {
            continue;
        }
        if analyzer.is_k_cm(&p, 2).unwrap().holds {
            assert!(
                analyzer.is_edgewise_k_cm(&p, EdgewiseLevel::K(2)).unwrap().holds,
                "{name}"
            );
        }
    }
}

#[test]
fn every_false_verdict_replays_in_isolation() {
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    let mut replayed = 0;
    for (name, p) in catalog::standard_instances() {
        if p.is_empty() {
            continue;
        }
        let verdicts = [
            analyzer.is_cm(&p, Route::LinkCondition).unwrap(),
            analyzer.is_cm(&p, Route::IntervalCondition).unwrap(),
            analyzer.is_gorenstein_star(&p).unwrap(),
            analyzer.is_k_cm(&p, 2).unwrap(),
            analyzer.is_edgewise_k_cm(&p, EdgewiseLevel::K(2)).unwrap(),
            analyzer.is_edgewise_k_cm(&p, EdgewiseLevel::Strong).unwrap(),
        ];
        for v in verdicts {
            if !v.holds {
                let w = v.witness.expect("false verdicts carry witnesses");
                assert!(
                    edgewise::cm::replay_witness(&p, &FieldSpec::Rationals, &w),
                    "{name}, {}: witness does not replay: {w:?}",
                    v.property
                );
                replayed += 1;
            }
        }
    }
    assert!(replayed > 20, "sweep exercised only {replayed} witnesses");
}

#[test]
fn semimodular_lattice_equivalence_for_doubly_cm() {
    // On semimodular lattices: geometric <=> proper part 2-CM <=> proper
    // part edgewise 2-CM.
    let analyzer = Analyzer::new(FieldSpec::Rationals);
    for lattice in [
        catalog::boolean(3),
        catalog::boolean(4),
        catalog::partition(4),
        catalog::divisor(12),
    ] {
        let classes = lattice_classes(&lattice).unwrap();
        assert!(classes.semimodular);
        let proper = lattice.proper_part().unwrap();
        let two_cm = analyzer.is_k_cm(&proper, 2).unwrap().holds;
        let edgewise_two = analyzer
            .is_edgewise_k_cm(&proper, EdgewiseLevel::K(2))
            .unwrap()
            .holds;
        assert_eq!(classes.geometric, two_cm);
        assert_eq!(classes.geometric, edgewise_two);
    }
}
