//! Build root systems and inspect their combinatorial data: Cartan
//! matrices, positive roots, the opposition involution, and which
//! fundamental representations are self-dual.

use adjinv::RootSystem;

fn main() -> adjinv::Result<()> {
    for name in ["A2", "B3", "G2", "E6", "B3xG2"] {
        let g = RootSystem::parse(name)?;
        println!(
            "{}: rank {}, dimension {}, {} positive roots",
            g.spec(),
            g.rank(),
            g.dimension(),
            g.positive_roots().len()
        );
    }

    let g2 = RootSystem::parse("G2")?;
    println!("\nCartan matrix of G2 (row i = labels of α_i):");
    for row in g2.cartan() {
        println!("  {row:?}");
    }

    println!("\npositive roots of G2 (coordinates, labels, 6·|α|²):");
    for r in g2.positive_roots() {
        println!(
            "  {r}  labels {:?}  norm6 {}{}",
            r.labels(),
            r.norm6(),
            if r.is_long() { "  (long)" } else { "" }
        );
    }

    // ρ pairs to 1 against every simple coroot
    let rho = g2.rho();
    println!("\nρ of G2 = {rho}");

    // the opposition involution: -w0 acting on the nodes; A_n reverses the
    // diagram, E6 swaps its legs, most others are trivial
    for name in ["A3", "E6", "D4", "B3"] {
        let g = RootSystem::parse(name)?;
        let perm: Vec<usize> = g.opposition_perm().iter().map(|p| p + 1).collect();
        let self_dual: Vec<bool> = (0..g.rank())
            .map(|j| g.fundamental_self_dual(j))
            .collect::<adjinv::Result<_>>()?;
        println!("{name}: opposition {perm:?}, self-dual fundamentals {self_dual:?}");
    }
    Ok(())
}
