//! Decompose adj(g) ⊗ V_μ into irreducibles using shifted Weyl reflections
//! on the adjoint weight system, and read invariant dimensions off the
//! result.

use adjinv::RootSystem;
use num_bigint::BigInt;

fn show(g: &RootSystem, labels: &[i64]) -> adjinv::Result<()> {
    let mu = g.weight(labels)?;
    let dec = g.adjoint_tensor(&mu)?;
    println!(
        "g ⊗ V{mu} in {} ({} × {}):",
        g.spec(),
        g.dimension(),
        g.weyl_dim(&mu)?
    );
    for (labels, mult) in dec.iter() {
        let w = g.weight(labels)?;
        println!("  {mult} × V{w}  (dim {})", g.weyl_dim(&w)?);
    }
    let total = dec.total_dimension(g)?;
    let expected = BigInt::from(g.dimension() as u64) * g.weyl_dim(&mu)?;
    assert_eq!(total, expected);
    println!("  total {total} = {} × {}\n", g.dimension(), g.weyl_dim(&mu)?);
    Ok(())
}

fn main() -> adjinv::Result<()> {
    let g2 = RootSystem::parse("G2")?;
    show(&g2, &[1, 0])?; // the 7-dimensional module
    show(&g2, &[0, 1])?; // the adjoint itself

    let b3 = RootSystem::parse("B3")?;
    show(&b3, &[0, 0, 1])?; // the spin module

    let prod = RootSystem::parse("A1xA1")?;
    show(&prod, &[1, 1])?;

    // dim Inv(g ⊗ V_μ ⊗ V_ν) is the multiplicity of the dual of ν:
    // for μ = ν = adjoint this counts independent invariant 3-tensors
    // on g (the structure constants, plus one more for each extra factor)
    let mu = g2.weight(&[0, 1])?;
    println!(
        "dim Inv(g ⊗ g ⊗ g) for G2 = {}",
        g2.invariant_dim_adj(&mu, &mu)?
    );
    Ok(())
}
