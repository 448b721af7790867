//! The closed form for dim Inv(g ⊗ V_μ ⊗ V_ν) next to the decomposition
//! oracle it is verified against, one pair per structural case: the
//! diagonal case ν̄ = μ, a clean root shift, and each exceptional
//! cancellation where the naive count overshoots.

use adjinv::{ExceptionKind, RootPairClass, RootSystem};

fn show(g: &RootSystem, mu: &[i64], nu: &[i64], note: &str) -> adjinv::Result<()> {
    let mu = g.weight(mu)?;
    let nu = g.weight(nu)?;
    let closed = g.invariant_dim_closed(&mu, &nu)?;
    let oracle = g.invariant_dim_adj(&mu, &nu)?;
    assert_eq!(closed, oracle);

    let class = match g.classify_pair(&mu, &nu)? {
        RootPairClass::DualEqualsHighestWeight => "ν̄ = μ".to_string(),
        RootPairClass::RootShift { beta, exception } => match exception {
            None => format!("ν̄ = μ + {beta}"),
            Some(ExceptionKind::ShortSimple { index }) => {
                format!("ν̄ = μ + {beta}, cancelled at node {}", index + 1)
            }
            Some(ExceptionKind::G2AtZero) => format!("ν̄ = μ + {beta}, G2 label-0 case"),
            Some(ExceptionKind::G2AtOne) => format!("ν̄ = μ + {beta}, G2 label-1 case"),
        },
        RootPairClass::Unrelated => "ν̄ - μ not a root".to_string(),
    };
    println!(
        "{:6} μ={:10} ν={:10} dim {closed}  [{class}]  {note}",
        g.spec().to_string(),
        mu.to_string(),
        nu.to_string()
    );
    Ok(())
}

fn main() -> adjinv::Result<()> {
    let a2 = RootSystem::parse("A2")?;
    let b3 = RootSystem::parse("B3")?;
    let g2 = RootSystem::parse("G2")?;

    // diagonal: the answer counts nonzero labels of μ
    show(&a2, &[1, 1], &[1, 1], "adjoint: two Casimir-type invariants")?;
    show(&g2, &[2, 1], &[2, 1], "")?;

    // root shifts without cancellation give exactly 1
    show(&a2, &[2, 0], &[2, 1], "")?;
    show(&g2, &[1, 0], &[1, 1], "")?;

    // B/C/F exception: β weakly orthogonal to the short simple root α_j
    // with μ_j = 0 kills the naive contribution
    show(&b3, &[1, 0, 0], &[2, 0, 0], "short-root cancellation")?;
    show(&b3, &[1, 0, 1], &[2, 0, 1], "spin label on: no cancellation")?;

    // the two G2 families of cancellations
    show(&g2, &[0, 1], &[1, 1], "G2, first label 0")?;
    show(&g2, &[1, 0], &[0, 1], "G2, first label 1")?;

    // everything else: zero
    show(&a2, &[2, 0], &[0, 1], "")?;
    Ok(())
}
