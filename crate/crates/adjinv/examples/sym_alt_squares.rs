//! Split the square of a character into its symmetric and antisymmetric
//! parts with the Adams operation, decompose both into irreducibles, and
//! check the dimension bookkeeping d(d±1)/2.

use adjinv::{RootSystem, DEFAULT_CHAR_CAP};
use num_bigint::BigInt;

fn show(g: &RootSystem, labels: &[i64]) -> adjinv::Result<()> {
    let mu = g.weight(labels)?;
    let chi = g.irreducible_character(&mu)?;
    let (sym, alt) = g.sym_alt_squares(&chi, DEFAULT_CHAR_CAP)?;

    let d = g.weyl_dim(&mu)?;
    println!("V{mu} of {} (dim {d}):", g.spec());
    for (name, part, expected) in [
        ("S²", &sym, &d * (&d + 1u8) / 2u8),
        ("Λ²", &alt, &d * (&d - 1u8) / 2u8),
    ] {
        let mut dim = BigInt::from(0);
        let pieces: Vec<String> = g
            .decompose_character(part)?
            .into_iter()
            .map(|(w, m)| {
                dim += g.weyl_dim(&w).unwrap() * BigInt::from(m);
                if m == 1 {
                    format!("V{w}")
                } else {
                    format!("{m}·V{w}")
                }
            })
            .collect();
        assert_eq!(dim, expected);
        println!("  {name}V{mu} = {}  (dim {dim})", pieces.join(" + "));
    }
    println!();
    Ok(())
}

fn main() -> adjinv::Result<()> {
    let a2 = RootSystem::parse("A2")?;
    show(&a2, &[1, 0])?; // S²3 = 6, Λ²3 = 3̄

    let g2 = RootSystem::parse("G2")?;
    show(&g2, &[1, 0])?;
    show(&g2, &[0, 1])?; // Λ²g ⊇ g: the structure constants

    let b2 = RootSystem::parse("B2")?;
    show(&b2, &[0, 1])?; // the symplectic spin module: Λ² contains the trivial
    Ok(())
}
