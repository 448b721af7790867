//! Command-line front end: argument parsing and text/JSON rendering over
//! the library routines. Exit codes: 0 success, 1 a verification check
//! failed, 2 invalid usage or input, 3 size cap exceeded.

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::characters::DEFAULT_CHAR_CAP;
use crate::epsilon::format_epsilon;
use crate::error::{Error, Result};
use crate::report::{exact_value, Report};
use crate::root_system::{Root, RootSystem, Weight};
use crate::theorems::{ExceptionKind, RootPairClass, SelfDuality};
use crate::verify::{run_sweep, Sample, SweepConfig};

#[derive(Parser)]
#[command(
    name = "adjinv",
    version,
    about = "Invariants of adjoint ⊗ V_μ ⊗ V_ν for semisimple Lie algebras",
    after_help = "Exit codes: 0 success, 1 a verification check failed, \
                  2 invalid usage or input, 3 size cap exceeded."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct AlgebraArg {
    /// Algebra in Bourbaki naming, e.g. A2, B3, E8, or a product like B3xG2.
    #[arg(long)]
    algebra: String,
}

#[derive(Subcommand)]
enum Command {
    /// Root-system summary: rank, dimension, roots, duality data.
    Info {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// dim Inv(g ⊗ V_μ ⊗ V_ν) by the closed form, cross-checked against
    /// the tensor decomposition.
    Invariants {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Highest weight μ as comma-separated Dynkin labels, e.g. 1,0,2.
        #[arg(long)]
        mu: String,
        /// Highest weight ν, same format.
        #[arg(long)]
        nu: String,
    },
    /// Symmetric/alternating refinement of dim Inv(g ⊗ V_μ ⊗ V_μ) for
    /// self-dual μ.
    Split {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Highest weight μ as comma-separated Dynkin labels.
        #[arg(long)]
        mu: String,
        /// Size cap for the character-oracle cross-check.
        #[arg(long, default_value_t = DEFAULT_CHAR_CAP)]
        char_cap: u128,
    },
    /// Weakly orthogonal pairs (short simple root against a root) in
    /// ε-coordinates, the data behind the exceptional cancellations.
    Table1 {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Sweep dominant weights, cross-checking the closed forms against the
    /// tensor and character oracles.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Upper bound on each Dynkin label.
        #[arg(long, default_value_t = 2)]
        max_label: i64,
        /// Upper bound on the label sum per weight; negative = unbounded.
        #[arg(long, default_value_t = 3)]
        sum: i64,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Size cap per character computation.
        #[arg(long, default_value_t = DEFAULT_CHAR_CAP)]
        char_cap: u128,
        /// Check only this many randomly chosen pairs.
        #[arg(long)]
        sample: Option<usize>,
        /// Seed for --sample.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decompose g ⊗ V_μ, or V_μ ⊗ V_ν when --nu is given.
    Decompose {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Highest weight μ as comma-separated Dynkin labels.
        #[arg(long)]
        mu: String,
        /// Second factor; without it the first factor is the adjoint.
        #[arg(long)]
        nu: Option<String>,
        /// Size cap for the weight-system expansion.
        #[arg(long, default_value_t = DEFAULT_CHAR_CAP)]
        char_cap: u128,
    },
    /// Frobenius-Schur indicator of V_μ.
    Fs {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Highest weight μ as comma-separated Dynkin labels.
        #[arg(long)]
        mu: String,
        /// Size cap for the character-oracle cross-check.
        #[arg(long, default_value_t = DEFAULT_CHAR_CAP)]
        char_cap: u128,
    },
}

struct Output {
    report: Report,
    text: Vec<String>,
}

/// Parses arguments from the process environment, runs one command, prints
/// the response, and returns the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.report).expect("report serializes")
                );
            } else {
                for line in &out.text {
                    println!("{line}");
                }
                for c in &out.report.checks {
                    let tag = if c.passed { "[ok]" } else { "[FAIL]" };
                    println!("{tag} {}: {}", c.name, c.detail);
                }
            }
            i32::from(!out.report.all_passed())
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SizeCapExceeded { .. } => 3,
                _ => 2,
            }
        }
    }
}

fn dispatch(command: &Command) -> Result<Output> {
    match command {
        Command::Info { algebra } => info(&RootSystem::parse(&algebra.algebra)?),
        Command::Invariants { algebra, mu, nu } => {
            let rs = RootSystem::parse(&algebra.algebra)?;
            let mu = parse_weight(&rs, mu)?;
            let nu = parse_weight(&rs, nu)?;
            invariants(&rs, &mu, &nu)
        }
        Command::Split { algebra, mu, char_cap } => {
            let rs = RootSystem::parse(&algebra.algebra)?;
            let mu = parse_weight(&rs, mu)?;
            split(&rs, &mu, *char_cap)
        }
        Command::Table1 { algebra } => table1(&RootSystem::parse(&algebra.algebra)?),
        Command::Verify { algebra, max_label, sum, jobs, char_cap, sample, seed } => {
            let rs = RootSystem::parse(&algebra.algebra)?;
            let config = SweepConfig {
                max_label: *max_label,
                max_sum: (*sum >= 0).then_some(*sum),
                char_cap: *char_cap,
                char_oracles: true,
                jobs: (*jobs).max(1),
                sample: sample.map(|count| Sample { seed: *seed, count }),
            };
            verify(&rs, &config)
        }
        Command::Decompose { algebra, mu, nu, char_cap } => {
            let rs = RootSystem::parse(&algebra.algebra)?;
            let mu = parse_weight(&rs, mu)?;
            let nu = nu.as_ref().map(|s| parse_weight(&rs, s)).transpose()?;
            decompose(&rs, &mu, nu.as_ref(), *char_cap)
        }
        Command::Fs { algebra, mu, char_cap } => {
            let rs = RootSystem::parse(&algebra.algebra)?;
            let mu = parse_weight(&rs, mu)?;
            fs(&rs, &mu, *char_cap)
        }
    }
}

fn parse_weight(rs: &RootSystem, s: &str) -> Result<Weight> {
    let inner = s
        .trim()
        .trim_start_matches(['[', '('])
        .trim_end_matches([']', ')']);
    let labels = inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidSpec(format!("bad weight component {t:?} in {s:?}")))
        })
        .collect::<Result<Vec<i64>>>()?;
    rs.weight(&labels)
}

fn beta_display(rs: &RootSystem, beta: &Root) -> Result<String> {
    Ok(match rs.epsilon_coords(beta)? {
        Some(coords) => format_epsilon(&coords),
        None => beta.to_string(),
    })
}

fn info(rs: &RootSystem) -> Result<Output> {
    let mut report = Report::new("info", &rs.spec().to_string());
    report.inputs = serde_json::json!({});

    let factors: Vec<serde_json::Value> = rs
        .factors()
        .iter()
        .map(|f| {
            serde_json::json!({
                "type": f.ty.to_string(),
                "rank": f.ty.rank(),
                "dimension": f.ty.dimension(),
            })
        })
        .collect();
    let opposition: Vec<usize> = rs.opposition_perm().iter().map(|&p| p + 1).collect();
    let self_dual: Vec<bool> = (0..rs.rank())
        .map(|j| rs.fundamental_self_dual(j))
        .collect::<Result<_>>()?;
    report.result = serde_json::json!({
        "rank": rs.rank(),
        "dimension": rs.dimension(),
        "positive_roots": rs.positive_roots().len(),
        "factors": factors,
        "opposition": opposition,
        "self_dual_fundamentals": self_dual,
    });
    let conserved = rs.dimension() == rs.rank() + 2 * rs.positive_roots().len();
    report.check(
        "dimension equals rank plus root count",
        conserved,
        format!(
            "{} = {} + 2·{}",
            rs.dimension(),
            rs.rank(),
            rs.positive_roots().len()
        ),
    );

    let mut text = vec![
        format!("algebra {}", rs.spec()),
        format!(
            "rank {}, dimension {}, positive roots {}",
            rs.rank(),
            rs.dimension(),
            rs.positive_roots().len()
        ),
        format!(
            "opposition involution on nodes: {}",
            opposition
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ),
    ];
    for (f, theta) in rs.factors().iter().zip(rs.highest_roots()) {
        text.push(format!(
            "factor {} (dim {}), highest root at {}",
            f.ty,
            f.ty.dimension(),
            theta.as_weight()
        ));
    }
    Ok(Output { report, text })
}

fn class_json(rs: &RootSystem, class: &RootPairClass) -> Result<serde_json::Value> {
    Ok(match class {
        RootPairClass::DualEqualsHighestWeight => {
            serde_json::json!({"kind": "dual-equals-highest-weight"})
        }
        RootPairClass::RootShift { beta, exception } => {
            let exception = match exception {
                None => serde_json::Value::Null,
                Some(ExceptionKind::ShortSimple { index }) => {
                    serde_json::json!({"kind": "short-simple", "node": index + 1})
                }
                Some(ExceptionKind::G2AtZero) => serde_json::json!({"kind": "g2-at-zero"}),
                Some(ExceptionKind::G2AtOne) => serde_json::json!({"kind": "g2-at-one"}),
            };
            serde_json::json!({
                "kind": "root-shift",
                "beta_coords": beta.coords(),
                "beta": beta_display(rs, beta)?,
                "exception": exception,
            })
        }
        RootPairClass::Unrelated => serde_json::json!({"kind": "unrelated"}),
    })
}

fn class_text(rs: &RootSystem, class: &RootPairClass) -> Result<String> {
    Ok(match class {
        RootPairClass::DualEqualsHighestWeight => {
            "ν̄ = μ: the invariant dimension counts the nonzero labels of μ".to_string()
        }
        RootPairClass::RootShift { beta, exception } => {
            let note = match exception {
                None => "no cancellation".to_string(),
                Some(ExceptionKind::ShortSimple { index }) => format!(
                    "cancellation against short simple root at node {}",
                    index + 1
                ),
                Some(ExceptionKind::G2AtZero) => "G2 cancellation at label 0".to_string(),
                Some(ExceptionKind::G2AtOne) => "G2 cancellation at label 1".to_string(),
            };
            format!("ν̄ = μ + β with β = {} ({note})", beta_display(rs, beta)?)
        }
        RootPairClass::Unrelated => "ν̄ - μ is not a root: invariant dimension 0".to_string(),
    })
}

fn invariants(rs: &RootSystem, mu: &Weight, nu: &Weight) -> Result<Output> {
    let mut report = Report::new("invariants", &rs.spec().to_string());
    report.inputs = serde_json::json!({"mu": mu.labels(), "nu": nu.labels()});

    let closed = rs.invariant_dim_closed(mu, nu)?;
    let class = rs.classify_pair(mu, nu)?;
    let dec = rs.adjoint_tensor(mu)?;
    let nubar = rs.dual(nu)?;
    let oracle = dec.multiplicity(&nubar)?;

    report.result = serde_json::json!({
        "dim": closed,
        "class": class_json(rs, &class)?,
        "dim_v_mu": exact_value(&rs.weyl_dim(mu)?),
        "dim_v_nu": exact_value(&rs.weyl_dim(nu)?),
    });
    report.check(
        "closed form matches tensor decomposition",
        closed == oracle,
        format!("{closed} vs {oracle}"),
    );

    let text = vec![
        format!("dim Inv(g ⊗ V{mu} ⊗ V{nu}) = {closed}  [{}]", rs.spec()),
        class_text(rs, &class)?,
    ];
    Ok(Output { report, text })
}

fn split(rs: &RootSystem, mu: &Weight, char_cap: u128) -> Result<Output> {
    let mut report = Report::new("split", &rs.spec().to_string());
    report.inputs = serde_json::json!({"mu": mu.labels()});

    let dims = rs.split_closed(mu)?;
    let fs = rs.frobenius_schur(mu)?;
    let one_sided = rs.split_is_one_sided(mu)?;
    let oracle = match rs.split_oracle(mu, char_cap) {
        Err(Error::SizeCapExceeded { .. }) => None,
        other => Some(other?),
    };
    report.result = serde_json::json!({
        "total": dims.total,
        "sym": dims.sym,
        "alt": dims.alt,
        "frobenius_schur": fs,
        "one_sided": one_sided,
        "oracle_checked": oracle.is_some(),
    });
    if let Some(o) = oracle {
        report.check(
            "split matches character oracle",
            (dims.sym, dims.alt) == (o.sym, o.alt),
            format!("({}, {}) vs ({}, {})", dims.sym, dims.alt, o.sym, o.alt),
        );
        if dims.total > 0 {
            report.check(
                "indicator matches the dominant side",
                (fs == -1) == (dims.sym > dims.alt),
                format!("indicator {fs}, sym {}, alt {}", dims.sym, dims.alt),
            );
        }
    }
    let text = vec![
        format!(
            "dim Inv(g ⊗ V{mu} ⊗ V{mu}) = {}  [{}]",
            dims.total,
            rs.spec()
        ),
        format!(
            "symmetric part {}, alternating part {}, indicator {fs}",
            dims.sym, dims.alt
        ),
    ];
    Ok(Output { report, text })
}

fn table1(rs: &RootSystem) -> Result<Output> {
    let mut report = Report::new("table1", &rs.spec().to_string());
    report.inputs = serde_json::json!({});

    let pairs = rs.weakly_orthogonal_pairs();
    let mut rows = Vec::new();
    let mut text = Vec::new();
    for (j, beta) in &pairs {
        let shown = beta_display(rs, beta)?;
        rows.push(serde_json::json!({
            "node": j + 1,
            "beta_coords": beta.coords(),
            "beta": shown,
        }));
        text.push(format!("node {}: β = {shown}", j + 1));
    }
    report.result = serde_json::json!({"count": pairs.len(), "pairs": rows});

    // per factor: B_n and C_n give 2(n-1) pairs, F4 gives 12, others none
    let expected: usize = rs
        .factors()
        .iter()
        .map(|f| match f.ty.family() {
            crate::algebra::Family::B | crate::algebra::Family::C => 2 * (f.ty.rank() - 1),
            crate::algebra::Family::F => 12,
            _ => 0,
        })
        .sum();
    report.check(
        "pair count matches closed formula",
        pairs.len() == expected,
        format!("{} vs {}", pairs.len(), expected),
    );
    text.insert(
        0,
        format!(
            "{} weakly orthogonal (node, root) pairs in {}",
            pairs.len(),
            rs.spec()
        ),
    );
    Ok(Output { report, text })
}

fn verify(rs: &RootSystem, config: &SweepConfig) -> Result<Output> {
    let mut report = Report::new("verify", &rs.spec().to_string());
    report.inputs = serde_json::json!({
        "max_label": config.max_label,
        "max_sum": config.max_sum,
        "char_cap": config.char_cap.to_string(),
        "jobs": config.jobs,
        "sample": config.sample.map(|s| serde_json::json!({"seed": s.seed, "count": s.count})),
    });

    let sweep = run_sweep(rs, config)?;
    let c = &sweep.class_counts;
    report.result = serde_json::json!({
        "weights": sweep.weights,
        "pairs": sweep.pairs,
        "classes": {
            "dual_equal": c.dual_equal,
            "root_shift": c.root_shift,
            "short_simple_exception": c.short_simple_exception,
            "g2_at_zero": c.g2_at_zero,
            "g2_at_one": c.g2_at_one,
            "unrelated": c.unrelated,
        },
        "self_dual_weights": sweep.self_dual_weights,
        "product_oracle_pairs": sweep.product_oracle_pairs,
        "fs_oracle_weights": sweep.fs_oracle_weights,
        "split_oracle_weights": sweep.split_oracle_weights,
        "fundamental_fs_checked": sweep.fundamental_fs_checked,
        "skipped_over_cap": sweep.skipped_over_cap,
        "failures": sweep.failures,
    });
    report.check(
        "sweep found no disagreements",
        sweep.ok(),
        format!("{} pairs, {} failures", sweep.pairs, sweep.failures.len()),
    );

    let mut text = vec![
        format!(
            "sweep over {}: {} weights, {} pairs",
            sweep.algebra, sweep.weights, sweep.pairs
        ),
        format!(
            "classes: dual-equal {}, root-shift {} (+{} short-simple, {} G2@0, {} G2@1 cancelled), unrelated {}",
            c.dual_equal, c.root_shift, c.short_simple_exception, c.g2_at_zero, c.g2_at_one, c.unrelated
        ),
        format!(
            "oracles: {} products, {} indicators, {} splits, {} fundamental indicators; {} skipped over cap",
            sweep.product_oracle_pairs,
            sweep.fs_oracle_weights,
            sweep.split_oracle_weights,
            sweep.fundamental_fs_checked,
            sweep.skipped_over_cap
        ),
    ];
    for f in &sweep.failures {
        text.push(format!("disagreement: {f}"));
    }
    Ok(Output { report, text })
}

fn decompose(
    rs: &RootSystem,
    mu: &Weight,
    nu: Option<&Weight>,
    char_cap: u128,
) -> Result<Output> {
    let mut report = Report::new("decompose", &rs.spec().to_string());
    report.inputs = serde_json::json!({
        "mu": mu.labels(),
        "nu": nu.map(Weight::labels),
    });

    let (dec, left_dim, left_name) = match nu {
        None => (
            rs.adjoint_tensor(mu)?,
            BigInt::from(rs.dimension() as u64),
            "g".to_string(),
        ),
        Some(nu) => (
            rs.tensor_product(nu, mu, char_cap)?,
            rs.weyl_dim(nu)?,
            format!("V{nu}"),
        ),
    };

    let mut terms: Vec<(Vec<i64>, i64)> = dec.iter().map(|(l, m)| (l.clone(), m)).collect();
    terms.sort_by_key(|(labels, _)| (rs.height_raw(labels), labels.clone()));

    let mut rows = Vec::new();
    let mut text = vec![format!(
        "{left_name} ⊗ V{mu} in {}: {} distinct summands",
        rs.spec(),
        terms.len()
    )];
    for (labels, mult) in &terms {
        let w = rs.weight(labels)?;
        let dim = rs.weyl_dim(&w)?;
        rows.push(serde_json::json!({
            "labels": labels,
            "multiplicity": mult,
            "dimension": exact_value(&dim),
        }));
        text.push(format!("  {mult} × V{w}  (dim {dim})"));
    }

    let total = dec.total_dimension(rs)?;
    let expected = left_dim * rs.weyl_dim(mu)?;
    report.result = serde_json::json!({
        "terms": rows,
        "distinct": terms.len(),
        "total_dimension": exact_value(&total),
    });
    report.check(
        "dimensions are conserved",
        total == expected,
        format!("{total} vs {expected}"),
    );
    text.push(format!("total dimension {total}"));
    Ok(Output { report, text })
}

fn fs(rs: &RootSystem, mu: &Weight, char_cap: u128) -> Result<Output> {
    let mut report = Report::new("fs", &rs.spec().to_string());
    report.inputs = serde_json::json!({"mu": mu.labels()});

    let duality = rs.self_duality(mu)?;
    let indicator = duality.indicator();
    let kind = match duality {
        SelfDuality::NotSelfDual => "not-self-dual",
        SelfDuality::Orthogonal => "orthogonal",
        SelfDuality::Symplectic => "symplectic",
    };
    let oracle = match rs.fs_oracle(mu, char_cap) {
        Err(Error::SizeCapExceeded { .. }) => None,
        other => Some(other?),
    };
    report.result = serde_json::json!({
        "indicator": indicator,
        "self_dual": duality != SelfDuality::NotSelfDual,
        "duality": kind,
        "oracle_checked": oracle.is_some(),
    });
    if let Some(o) = oracle {
        report.check(
            "indicator matches character oracle",
            indicator == o,
            format!("{indicator} vs {o}"),
        );
    }
    let text = vec![format!(
        "Frobenius-Schur indicator of V{mu} in {} = {indicator} ({kind})",
        rs.spec()
    )];
    Ok(Output { report, text })
}
