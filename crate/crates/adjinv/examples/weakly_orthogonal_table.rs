//! Enumerate the (short simple root, root) pairs that are orthogonal yet
//! not strongly orthogonal: (α_j, β) = 0 while β + α_j is still a root.
//! These exist only in types B, C, and F4, and they are exactly the data
//! behind the exceptional cancellations of the invariant-dimension formula.

use adjinv::epsilon::format_epsilon;
use adjinv::RootSystem;

fn main() -> adjinv::Result<()> {
    for name in ["A3", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"] {
        let g = RootSystem::parse(name)?;
        let pairs = g.weakly_orthogonal_pairs();
        println!("{name}: {} pairs", pairs.len());
        for (j, beta) in &pairs {
            let shown = match g.epsilon_coords(beta)? {
                Some(coords) => format_epsilon(&coords),
                None => beta.to_string(),
            };
            println!("  node {}: β = {shown}", j + 1);
        }
    }

    // the counts follow 2(n-1) for B_n and C_n, 12 for F4, 0 otherwise
    for (name, expected) in [("B5", 8), ("C6", 10), ("F4", 12), ("E7", 0)] {
        let g = RootSystem::parse(name)?;
        assert_eq!(g.weakly_orthogonal_pairs().len(), expected, "{name}");
    }
    println!("\npair counts match 2(n-1) / 12 / 0 by family");
    Ok(())
}
