//! Weight multiplicities by Freudenthal's recursion, cross-checked against
//! the Weyl dimension formula: orbit sizes times multiplicities must add up
//! to the module's dimension.

use adjinv::{RootSystem, DEFAULT_CHAR_CAP};
use num_bigint::BigInt;

fn show(g: &RootSystem, labels: &[i64]) -> adjinv::Result<()> {
    let mu = g.weight(labels)?;
    let mults = g.freudenthal_weights(&mu)?;
    println!(
        "V{mu} of {} (dim {}), dominant weights and multiplicities:",
        g.spec(),
        g.weyl_dim(&mu)?
    );
    let mut total = BigInt::from(0);
    for (labels, mult) in &mults {
        let w = g.weight(labels)?;
        let orbit = g.weyl_orbit(&w, DEFAULT_CHAR_CAP)?.len();
        println!("  {w}: multiplicity {mult}, orbit size {orbit}");
        total += mult * BigInt::from(orbit as u64);
    }
    assert_eq!(total, g.weyl_dim(&mu)?);
    println!("  Σ orbit·mult = {total}\n");
    Ok(())
}

fn main() -> adjinv::Result<()> {
    let a2 = RootSystem::parse("A2")?;
    show(&a2, &[1, 1])?; // the adjoint of sl3: zero weight twice

    let g2 = RootSystem::parse("G2")?;
    show(&g2, &[0, 1])?;
    show(&g2, &[1, 1])?;

    let b3 = RootSystem::parse("B3")?;
    show(&b3, &[0, 0, 1])?; // spin: a single Weyl orbit

    // dimensions alone, for a few larger weights
    let e8 = RootSystem::parse("E8")?;
    for labels in [[1, 0, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 1]] {
        let mu = e8.weight(&labels)?;
        println!("dim V{mu} of E8 = {}", e8.weyl_dim(&mu)?);
    }
    Ok(())
}
