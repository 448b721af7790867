//! For self-dual μ the invariants of g ⊗ V_μ ⊗ V_μ split across the
//! symmetric and antisymmetric squares of V_μ. The split is governed by
//! the opposition involution and the Frobenius-Schur indicator, and is
//! one-sided except when μ has positive labels on both swapped and fixed
//! nodes.

use adjinv::{RootSystem, SelfDuality, DEFAULT_CHAR_CAP};

fn show(g: &RootSystem, labels: &[i64], check_oracle: bool) -> adjinv::Result<()> {
    let mu = g.weight(labels)?;
    let s = g.split_closed(&mu)?;
    let fs = g.frobenius_schur(&mu)?;
    println!(
        "{:5} μ={:16} total {}  sym {}  alt {}  indicator {fs:+}{}",
        g.spec().to_string(),
        mu.to_string(),
        s.total,
        s.sym,
        s.alt,
        if g.split_is_one_sided(&mu)? { "  (one-sided)" } else { "" }
    );
    if check_oracle {
        let o = g.split_oracle(&mu, DEFAULT_CHAR_CAP)?;
        assert_eq!((s.sym, s.alt), (o.sym, o.alt));
    }
    Ok(())
}

fn main() -> adjinv::Result<()> {
    // su2: every module is self-dual, the indicator alternates with parity
    let a1 = RootSystem::parse("A1")?;
    for l in 1..=4 {
        show(&a1, &[l], true)?;
    }

    // adjoint modules: the invariant is the bracket, always antisymmetric
    for name in ["A2", "B2", "G2"] {
        let g = RootSystem::parse(name)?;
        let theta = g.adjoint_weights()[0].clone();
        show(&g, theta.labels(), true)?;
    }

    // E6: the opposition involution swaps nodes 1↔6 and 3↔5; weights with
    // positive labels on both a swapped pair and a fixed node populate
    // both sides of the split
    let e6 = RootSystem::parse("E6")?;
    show(&e6, &[0, 1, 0, 1, 0, 0], false)?;
    show(&e6, &[1, 0, 0, 0, 0, 1], false)?;

    // a non-self-dual weight has no split
    let a2 = RootSystem::parse("A2")?;
    let mu = a2.weight(&[1, 0])?;
    assert!(matches!(a2.self_duality(&mu)?, SelfDuality::NotSelfDual));
    assert!(a2.split_closed(&mu).is_err());
    println!("A2    μ=(1, 0): not self-dual, no split");
    Ok(())
}
