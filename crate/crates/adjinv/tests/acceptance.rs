//! Acceptance gate: every headline capability exercised end to end against
//! exact expected values, one test per criterion. Shared sweeps are built
//! once and reused across criteria.

use adjinv::epsilon::format_epsilon;
use adjinv::verify::{run_sweep, ClassCounts, SweepConfig, SweepReport};
use adjinv::{ExceptionKind, RootPairClass, RootSystem, SplitDims};
use num_bigint::BigInt;
use once_cell::sync::Lazy;

/// Closed form vs tensor oracle, labels ≤ 2 with sum ≤ 3, per algebra.
static TENSOR_SWEEPS: Lazy<Vec<SweepReport>> = Lazy::new(|| {
    ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"]
        .iter()
        .map(|name| {
            let g = RootSystem::parse(name).unwrap();
            run_sweep(&g, &SweepConfig::default()).unwrap()
        })
        .collect()
});

/// Character oracles included, labels ≤ 1 with sum ≤ 2, per algebra.
static CHAR_SWEEPS: Lazy<Vec<SweepReport>> = Lazy::new(|| {
    ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]
        .iter()
        .map(|name| {
            let g = RootSystem::parse(name).unwrap();
            let config = SweepConfig {
                max_label: 1,
                max_sum: Some(2),
                char_oracles: true,
                ..SweepConfig::default()
            };
            run_sweep(&g, &config).unwrap()
        })
        .collect()
});

fn rs(spec: &str) -> RootSystem {
    RootSystem::parse(spec).unwrap()
}

fn epsilon_table(name: &str) -> Vec<(usize, String)> {
    let g = rs(name);
    let mut rows: Vec<(usize, String)> = g
        .weakly_orthogonal_pairs()
        .iter()
        .map(|(j, beta)| {
            let coords = g.epsilon_coords(beta).unwrap().expect("B/C/F factor");
            (j + 1, format_epsilon(&coords))
        })
        .collect();
    rows.sort();
    rows
}

fn owned(rows: &[(usize, &str)]) -> Vec<(usize, String)> {
    let mut out: Vec<(usize, String)> = rows.iter().map(|(j, s)| (*j, s.to_string())).collect();
    out.sort();
    out
}

#[test]
fn criterion_01_weakly_orthogonal_pairs_match_the_golden_tables() {
    // type B_n: the short node n against ±ε_i for i < n
    assert_eq!(epsilon_table("B2"), owned(&[(2, "e1"), (2, "-e1")]));
    assert_eq!(
        epsilon_table("B3"),
        owned(&[(3, "e1"), (3, "-e1"), (3, "e2"), (3, "-e2")])
    );
    assert_eq!(
        epsilon_table("B4"),
        owned(&[
            (4, "e1"),
            (4, "-e1"),
            (4, "e2"),
            (4, "-e2"),
            (4, "e3"),
            (4, "-e3"),
        ])
    );
    assert_eq!(
        epsilon_table("B5"),
        owned(&[
            (5, "e1"),
            (5, "-e1"),
            (5, "e2"),
            (5, "-e2"),
            (5, "e3"),
            (5, "-e3"),
            (5, "e4"),
            (5, "-e4"),
        ])
    );

    // type C_n: each short node j < n against ±(ε_j + ε_{j+1})
    assert_eq!(
        epsilon_table("C3"),
        owned(&[
            (1, "e1 + e2"),
            (1, "-e1 - e2"),
            (2, "e2 + e3"),
            (2, "-e2 - e3"),
        ])
    );
    assert_eq!(
        epsilon_table("C4"),
        owned(&[
            (1, "e1 + e2"),
            (1, "-e1 - e2"),
            (2, "e2 + e3"),
            (2, "-e2 - e3"),
            (3, "e3 + e4"),
            (3, "-e3 - e4"),
        ])
    );
    assert_eq!(
        epsilon_table("C5"),
        owned(&[
            (1, "e1 + e2"),
            (1, "-e1 - e2"),
            (2, "e2 + e3"),
            (2, "-e2 - e3"),
            (3, "e3 + e4"),
            (3, "-e3 - e4"),
            (4, "e4 + e5"),
            (4, "-e4 - e5"),
        ])
    );

    // F4: node 3 against ±ε_{1,2,3}, node 4 against ±(½Σε - ε_i), i ∈ {2,3,4}
    assert_eq!(
        epsilon_table("F4"),
        owned(&[
            (3, "e1"),
            (3, "-e1"),
            (3, "e2"),
            (3, "-e2"),
            (3, "e3"),
            (3, "-e3"),
            (4, "e1/2 - e2/2 + e3/2 + e4/2"),
            (4, "-e1/2 + e2/2 - e3/2 - e4/2"),
            (4, "e1/2 + e2/2 - e3/2 + e4/2"),
            (4, "-e1/2 - e2/2 + e3/2 - e4/2"),
            (4, "e1/2 + e2/2 + e3/2 - e4/2"),
            (4, "-e1/2 - e2/2 - e3/2 + e4/2"),
        ])
    );
    println!("[PASS] criterion 01: weakly orthogonal pair tables for B2-B5, C3-C5, F4");
}

#[test]
fn criterion_02_closed_form_equals_tensor_oracle_across_sweeps() {
    for report in TENSOR_SWEEPS.iter() {
        assert!(
            report.ok(),
            "{}: {:?}",
            report.algebra,
            report.failures
        );
        assert_eq!(report.pairs, report.weights * report.weights, "{}", report.algebra);
    }
    let pairs: usize = TENSOR_SWEEPS.iter().map(|r| r.pairs).sum();
    println!("[PASS] criterion 02: closed form = tensor oracle on {pairs} pairs across 9 algebras");
}

#[test]
fn criterion_03_every_structural_class_appears_and_anchors_hold() {
    let mut total = ClassCounts::default();
    for report in TENSOR_SWEEPS.iter() {
        let c = &report.class_counts;
        total.dual_equal += c.dual_equal;
        total.root_shift += c.root_shift;
        total.short_simple_exception += c.short_simple_exception;
        total.g2_at_zero += c.g2_at_zero;
        total.g2_at_one += c.g2_at_one;
        total.unrelated += c.unrelated;
    }
    assert!(total.dual_equal > 0);
    assert!(total.root_shift > 0);
    assert!(total.short_simple_exception > 0);
    assert!(total.g2_at_zero > 0);
    assert!(total.g2_at_one > 0);
    assert!(total.unrelated > 0);

    // pinned anchors, one per cancellation family
    let b3 = rs("B3");
    let mu = b3.weight(&[1, 0, 0]).unwrap();
    let nu = b3.weight(&[2, 0, 0]).unwrap();
    match b3.classify_pair(&mu, &nu).unwrap() {
        RootPairClass::RootShift { exception, .. } => {
            assert_eq!(exception, Some(ExceptionKind::ShortSimple { index: 2 }))
        }
        other => panic!("unexpected {other:?}"),
    }
    assert_eq!(b3.invariant_dim_closed(&mu, &nu).unwrap(), 0);

    let g2 = rs("G2");
    let mu = g2.weight(&[0, 1]).unwrap();
    let nu = g2.weight(&[1, 1]).unwrap();
    match g2.classify_pair(&mu, &nu).unwrap() {
        RootPairClass::RootShift { exception, .. } => {
            assert_eq!(exception, Some(ExceptionKind::G2AtZero))
        }
        other => panic!("unexpected {other:?}"),
    }
    assert_eq!(g2.invariant_dim_closed(&mu, &nu).unwrap(), 0);

    let mu = g2.weight(&[1, 0]).unwrap();
    let nu = g2.weight(&[0, 1]).unwrap();
    match g2.classify_pair(&mu, &nu).unwrap() {
        RootPairClass::RootShift { exception, .. } => {
            assert_eq!(exception, Some(ExceptionKind::G2AtOne))
        }
        other => panic!("unexpected {other:?}"),
    }
    assert_eq!(g2.invariant_dim_closed(&mu, &nu).unwrap(), 0);
    println!(
        "[PASS] criterion 03: all classes hit (short-simple {}, G2@0 {}, G2@1 {}) and anchors pinned",
        total.short_simple_exception, total.g2_at_zero, total.g2_at_one
    );
}

#[test]
fn criterion_04_split_agrees_with_the_character_oracle() {
    let mut splits = 0;
    for report in CHAR_SWEEPS.iter() {
        assert!(report.ok(), "{}: {:?}", report.algebra, report.failures);
        assert!(report.split_oracle_weights > 0, "{}", report.algebra);
        splits += report.split_oracle_weights;
    }

    // a denser grid on small algebras, closed vs oracle directly
    for name in ["A1", "A2", "B2", "G2"] {
        let g = rs(name);
        for labels in adjinv::verify::enumerate_dominant(g.rank(), 2, Some(3)) {
            let mu = g.weight(&labels).unwrap();
            if !g.is_self_dual(&mu).unwrap() {
                continue;
            }
            let closed = g.split_closed(&mu).unwrap();
            let oracle = g.split_oracle(&mu, adjinv::DEFAULT_CHAR_CAP).unwrap();
            assert_eq!(closed, oracle, "{name} {labels:?}");
            splits += 1;
        }
    }
    println!("[PASS] criterion 04: symmetric/alternating split = character oracle on {splits} weights");
}

#[test]
fn criterion_05_product_route_confirms_every_pair_under_cap() {
    let mut pairs = 0;
    for report in CHAR_SWEEPS.iter() {
        assert!(report.ok(), "{}: {:?}", report.algebra, report.failures);
        assert_eq!(report.skipped_over_cap, 0, "{}", report.algebra);
        assert_eq!(report.product_oracle_pairs, report.pairs, "{}", report.algebra);
        pairs += report.product_oracle_pairs;
    }
    assert!(pairs > 0);
    println!("[PASS] criterion 05: character-product oracle confirmed all {pairs} pairs");
}

#[test]
fn criterion_06_frobenius_schur_matches_characters_and_known_values() {
    for report in CHAR_SWEEPS.iter() {
        assert!(report.ok(), "{}: {:?}", report.algebra, report.failures);
        assert_eq!(report.fs_oracle_weights, report.weights, "{}", report.algebra);
        assert!(report.fundamental_fs_checked > 0, "{}", report.algebra);
    }

    // classical indicator values
    let fixed: [(&str, Vec<i64>, i64); 10] = [
        ("A1", vec![1], -1),
        ("A2", vec![1, 0], 0),
        ("B2", vec![0, 1], -1),
        ("B3", vec![0, 0, 1], 1),
        ("B4", vec![0, 0, 0, 1], 1),
        ("B5", vec![0, 0, 0, 0, 1], -1),
        ("C3", vec![1, 0, 0], -1),
        ("C3", vec![0, 0, 1], -1),
        ("D4", vec![0, 0, 0, 1], 1),
        ("E7", vec![0, 0, 0, 0, 0, 0, 1], -1),
    ];
    for (name, labels, expected) in &fixed {
        let g = rs(name);
        let mu = g.weight(labels).unwrap();
        assert_eq!(g.frobenius_schur(&mu).unwrap(), *expected, "{name} {labels:?}");
    }
    println!("[PASS] criterion 06: Frobenius-Schur = character oracle, spinor/symplectic table exact");
}

#[test]
fn criterion_07_indicator_determines_which_side_is_loaded() {
    let mut checked = 0;
    let mut sym_side = 0;
    let mut alt_side = 0;
    for name in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"] {
        let g = rs(name);
        for labels in adjinv::verify::enumerate_dominant(g.rank(), 2, Some(3)) {
            let mu = g.weight(&labels).unwrap();
            if !g.is_self_dual(&mu).unwrap() {
                continue;
            }
            let s = g.split_closed(&mu).unwrap();
            if s.total == 0 {
                continue;
            }
            let fs = g.frobenius_schur(&mu).unwrap();
            assert_eq!(fs == -1, s.sym > s.alt, "{name} {labels:?}: {s:?}, fs {fs}");
            checked += 1;
            if s.sym > s.alt {
                sym_side += 1;
            } else {
                alt_side += 1;
            }
        }
    }
    assert!(sym_side > 0 && alt_side > 0);
    println!(
        "[PASS] criterion 07: indicator picked the loaded side on {checked} weights ({sym_side} symmetric, {alt_side} alternating)"
    );
}

#[test]
fn criterion_08_e6_carries_invariants_on_both_sides() {
    let e6 = rs("E6");

    // ϖ2 + ϖ4: both invariants alternating
    let mu = e6.weight(&[0, 1, 0, 1, 0, 0]).unwrap();
    let s = e6.split_closed(&mu).unwrap();
    assert_eq!(s, SplitDims { total: 2, sym: 0, alt: 2 });
    assert!(e6.split_is_one_sided(&mu).unwrap());
    assert_eq!(e6.invariant_dim_adj(&mu, &mu).unwrap(), 2);

    // ϖ1 + ϖ6: one invariant on each side, the split is genuinely two-sided
    let mu = e6.weight(&[1, 0, 0, 0, 0, 1]).unwrap();
    let s = e6.split_closed(&mu).unwrap();
    assert_eq!(s, SplitDims { total: 2, sym: 1, alt: 1 });
    assert!(!e6.split_is_one_sided(&mu).unwrap());
    assert_eq!(e6.invariant_dim_adj(&mu, &mu).unwrap(), 2);
    // dim 650: small enough for the full character oracle
    let oracle = e6.split_oracle(&mu, adjinv::DEFAULT_CHAR_CAP).unwrap();
    assert_eq!(s, oracle);
    println!("[PASS] criterion 08: E6 anchors (0,2) and (1,1) exact, character oracle concurs");
}

#[test]
fn criterion_09_product_algebras_behave_componentwise() {
    for name in ["A1xA1", "A1xG2"] {
        let g = rs(name);
        let config = SweepConfig {
            max_label: 1,
            max_sum: None,
            char_oracles: true,
            ..SweepConfig::default()
        };
        let report = run_sweep(&g, &config).unwrap();
        assert!(report.ok(), "{name}: {:?}", report.failures);
        assert_eq!(report.skipped_over_cap, 0, "{name}");
    }

    let prod = rs("A1xA1");
    let mu = prod.weight(&[1, 1]).unwrap();
    assert_eq!(prod.invariant_dim_closed(&mu, &mu).unwrap(), 2);

    // cancellations localize in the factor the shift lives in
    let mixed = rs("A1xG2");
    let mu = mixed.weight(&[1, 1, 0]).unwrap();
    let cancelled = mixed.weight(&[1, 0, 1]).unwrap();
    assert_eq!(mixed.invariant_dim_closed(&mu, &cancelled).unwrap(), 0);
    let clean = mixed.weight(&[1, 1, 1]).unwrap();
    assert_eq!(mixed.invariant_dim_closed(&mu, &clean).unwrap(), 1);
    println!("[PASS] criterion 09: product algebras componentwise, G2 cancellation localizes");
}

#[test]
fn criterion_10_tensor_decompositions_conserve_dimension() {
    let cases: [(&str, Vec<i64>); 8] = [
        ("F4", vec![0, 0, 0, 1]),
        ("F4", vec![1, 0, 0, 0]),
        ("E6", vec![1, 0, 0, 0, 0, 0]),
        ("E7", vec![0, 0, 0, 0, 0, 0, 1]),
        ("E8", vec![0, 0, 0, 0, 0, 0, 0, 1]),
        ("D4", vec![0, 0, 1, 0]),
        ("C3", vec![1, 1, 1]),
        ("A1xB2", vec![1, 0, 1]),
    ];
    for (name, labels) in &cases {
        let g = rs(name);
        let mu = g.weight(labels).unwrap();
        let dec = g.adjoint_tensor(&mu).unwrap();
        let expected = BigInt::from(g.dimension() as u64) * g.weyl_dim(&mu).unwrap();
        assert_eq!(dec.total_dimension(&g).unwrap(), expected, "{name} {labels:?}");
    }
    println!("[PASS] criterion 10: dimension conservation across F4, E6, E7, E8, D4, C3, and products");
}
