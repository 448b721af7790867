//! Run the exhaustive small-weight verification sweep: every closed form
//! recomputed against the tensor-decomposition route, plus character
//! oracles on a smaller grid, with per-class coverage counters.

use adjinv::verify::{run_sweep, SweepConfig};
use adjinv::RootSystem;

fn main() -> adjinv::Result<()> {
    let mut all_ok = true;

    // closed form vs tensor route on labels ≤ 2, sum ≤ 3
    for name in ["A2", "B2", "B3", "C3", "G2", "A1xG2"] {
        let g = RootSystem::parse(name)?;
        let report = run_sweep(&g, &SweepConfig::default())?;
        let c = &report.class_counts;
        println!(
            "{name}: {} weights, {} pairs | dual-equal {}, root-shift {} \
             (+{} short-simple, {} G2@0, {} G2@1 cancelled), unrelated {} | {} failures",
            report.weights,
            report.pairs,
            c.dual_equal,
            c.root_shift,
            c.short_simple_exception,
            c.g2_at_zero,
            c.g2_at_one,
            c.unrelated,
            report.failures.len()
        );
        for f in &report.failures {
            println!("  disagreement: {f}");
        }
        all_ok &= report.ok();
    }

    // character oracles too, on a smaller grid
    let config = SweepConfig {
        max_label: 1,
        max_sum: Some(2),
        char_oracles: true,
        jobs: 2,
        ..SweepConfig::default()
    };
    for name in ["A2", "B2"] {
        let g = RootSystem::parse(name)?;
        let report = run_sweep(&g, &config)?;
        println!(
            "{name} with character oracles: {} products, {} indicators, {} splits | {} failures",
            report.product_oracle_pairs,
            report.fs_oracle_weights,
            report.split_oracle_weights,
            report.failures.len()
        );
        all_ok &= report.ok();
    }

    if !all_ok {
        std::process::exit(1);
    }
    println!("\nall sweeps clean");
    Ok(())
}
