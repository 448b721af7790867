//! Exhaustive cross-checking over ranges of dominant weights: the closed
//! forms are recomputed against the tensor-decomposition route and, when
//! enabled, against full character arithmetic, with every disagreement
//! reported rather than summarized away.

use rayon::prelude::*;

use crate::characters::{VirtualCharacter, DEFAULT_CHAR_CAP};
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::theorems::{ExceptionKind, RootPairClass, SelfDuality};

/// Deterministic subsample of the pair grid.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Sample {
    pub seed: u64,
    pub count: usize,
}

/// What a sweep covers.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Upper bound on each Dynkin label.
    pub max_label: i64,
    /// Upper bound on the sum of labels per weight (`None` = unbounded).
    pub max_sum: Option<i64>,
    /// Size cap handed to every character-route computation.
    pub char_cap: u128,
    /// Also run the character oracles (products, squares, indicators).
    pub char_oracles: bool,
    /// Worker threads; 1 means fully sequential.
    pub jobs: usize,
    /// Check only a seeded random subset of pairs.
    pub sample: Option<Sample>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_label: 2,
            max_sum: Some(3),
            char_cap: DEFAULT_CHAR_CAP,
            char_oracles: false,
            jobs: 1,
            sample: None,
        }
    }
}

/// How many pairs fell into each branch of the closed form.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct ClassCounts {
    pub dual_equal: usize,
    pub root_shift: usize,
    pub short_simple_exception: usize,
    pub g2_at_zero: usize,
    pub g2_at_one: usize,
    pub unrelated: usize,
}

impl ClassCounts {
    fn absorb(&mut self, other: &ClassCounts) {
        self.dual_equal += other.dual_equal;
        self.root_shift += other.root_shift;
        self.short_simple_exception += other.short_simple_exception;
        self.g2_at_zero += other.g2_at_zero;
        self.g2_at_one += other.g2_at_one;
        self.unrelated += other.unrelated;
    }

    fn record(&mut self, class: &RootPairClass) {
        match class {
            RootPairClass::DualEqualsHighestWeight => self.dual_equal += 1,
            RootPairClass::RootShift { exception: None, .. } => self.root_shift += 1,
            RootPairClass::RootShift { exception: Some(ExceptionKind::ShortSimple { .. }), .. } => {
                self.short_simple_exception += 1
            }
            RootPairClass::RootShift { exception: Some(ExceptionKind::G2AtZero), .. } => {
                self.g2_at_zero += 1
            }
            RootPairClass::RootShift { exception: Some(ExceptionKind::G2AtOne), .. } => {
                self.g2_at_one += 1
            }
            RootPairClass::Unrelated => self.unrelated += 1,
        }
    }
}

/// Outcome of one sweep: coverage counters plus a full list of
/// disagreements (empty on success).
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub algebra: String,
    pub weights: usize,
    pub pairs: usize,
    pub class_counts: ClassCounts,
    pub self_dual_weights: usize,
    pub product_oracle_pairs: usize,
    pub fs_oracle_weights: usize,
    pub split_oracle_weights: usize,
    pub fundamental_fs_checked: usize,
    pub skipped_over_cap: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All label vectors with entries in `0..=max_label` and, when given, label
/// sum at most `max_sum`, in a fixed odometer order.
pub fn enumerate_dominant(rank: usize, max_label: i64, max_sum: Option<i64>) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    loop {
        let sum: i64 = cur.iter().sum();
        if max_sum.map_or(true, |m| sum <= m) {
            out.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == rank {
                return out;
            }
            cur[i] += 1;
            if cur[i] > max_label {
                cur[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// First `count` entries of a seeded Fisher-Yates shuffle of `0..total`,
/// sorted ascending. Stable across platforms by construction.
fn sample_indices(total: usize, sample: Sample) -> Vec<usize> {
    let count = sample.count.min(total);
    let mut indices: Vec<usize> = (0..total).collect();
    let mut state = sample.seed;
    for i in 0..count {
        let j = i + (splitmix64(&mut state) as usize) % (total - i);
        indices.swap(i, j);
    }
    let mut chosen = indices[..count].to_vec();
    chosen.sort_unstable();
    chosen
}

struct RowOutcome {
    pairs: usize,
    class_counts: ClassCounts,
    self_dual: bool,
    product_oracle_pairs: usize,
    fs_oracle_weights: usize,
    split_oracle_weights: usize,
    skipped_over_cap: usize,
    failures: Vec<String>,
}

fn check_row(
    rs: &RootSystem,
    weights: &[Vec<i64>],
    chars: Option<&[VirtualCharacter]>,
    mu_idx: usize,
    nu_indices: &[usize],
    config: &SweepConfig,
) -> Result<RowOutcome> {
    let name = rs.spec().to_string();
    let mut out = RowOutcome {
        pairs: 0,
        class_counts: ClassCounts::default(),
        self_dual: false,
        product_oracle_pairs: 0,
        fs_oracle_weights: 0,
        split_oracle_weights: 0,
        skipped_over_cap: 0,
        failures: Vec::new(),
    };
    let mu = rs.weight(&weights[mu_idx])?;
    let dec = rs.adjoint_tensor(&mu)?;

    // conservation: Σ mult·dim must equal dim g · dim V_μ
    let lhs = dec.total_dimension(rs)?;
    let rhs = num_bigint::BigInt::from(rs.dimension() as i64) * rs.weyl_dim(&mu)?;
    if lhs != rhs {
        out.failures.push(format!(
            "{name}: μ={mu}: adjoint tensor dimensions {lhs} ≠ {rhs}"
        ));
    }

    // μ̄ - μ lies in the root lattice but is never itself a root
    let mubar = rs.dual(&mu)?;
    let diff: Vec<i64> = mubar
        .labels()
        .iter()
        .zip(mu.labels())
        .map(|(a, b)| a - b)
        .collect();
    if rs.root_from_labels(&diff).is_some() {
        out.failures.push(format!("{name}: μ={mu}: μ̄ - μ is a root"));
    }

    for &nu_idx in nu_indices {
        let nu = rs.weight(&weights[nu_idx])?;
        out.pairs += 1;
        let class = rs.classify_pair(&mu, &nu)?;
        out.class_counts.record(&class);

        let closed = rs.invariant_dim_closed(&mu, &nu)?;
        let nubar = rs.dual(&nu)?;
        let oracle = dec.multiplicity(&nubar)?;
        if closed != oracle {
            out.failures.push(format!(
                "{name}: μ={mu} ν={nu}: closed {closed} ≠ tensor oracle {oracle}"
            ));
        }

        // symmetry of the closed form under swap and under duals
        let swapped = rs.invariant_dim_closed(&nu, &mu)?;
        if swapped != closed {
            out.failures.push(format!(
                "{name}: μ={mu} ν={nu}: closed {closed} ≠ swapped {swapped}"
            ));
        }
        let dualized = rs.invariant_dim_closed(&mubar, &nubar)?;
        if dualized != closed {
            out.failures.push(format!(
                "{name}: μ={mu} ν={nu}: closed {closed} ≠ dualized {dualized}"
            ));
        }

        if let Some(chars) = chars {
            let prod = match rs.char_product(&chars[mu_idx], &chars[nu_idx], config.char_cap) {
                Err(Error::SizeCapExceeded { .. }) => {
                    out.skipped_over_cap += 1;
                    continue;
                }
                other => other?,
            };
            let via_chars = rs.invariant_dim_in(&prod)?;
            out.product_oracle_pairs += 1;
            if via_chars != closed {
                out.failures.push(format!(
                    "{name}: μ={mu} ν={nu}: closed {closed} ≠ character oracle {via_chars}"
                ));
            }
        }
    }

    // Frobenius-Schur and the symmetric/alternating refinement, against
    // character oracles, for the diagonal
    let duality = rs.self_duality(&mu)?;
    out.self_dual = duality != SelfDuality::NotSelfDual;
    if let Some(chars) = chars {
        match rs.sym_alt_squares(&chars[mu_idx], config.char_cap) {
            Err(Error::SizeCapExceeded { .. }) => out.skipped_over_cap += 1,
            Err(e) => return Err(e),
            Ok((sym, alt)) => {
                let zero = rs.zero_weight();
                let fs_oracle = rs.irreducible_multiplicity(&sym, &zero)?
                    - rs.irreducible_multiplicity(&alt, &zero)?;
                out.fs_oracle_weights += 1;
                let fs = duality.indicator();
                if fs != fs_oracle {
                    out.failures.push(format!(
                        "{name}: μ={mu}: indicator {fs} ≠ character oracle {fs_oracle}"
                    ));
                }
                if out.self_dual {
                    let closed = rs.split_closed(&mu)?;
                    let sym_dim = rs.invariant_dim_in(&sym)?;
                    let alt_dim = rs.invariant_dim_in(&alt)?;
                    out.split_oracle_weights += 1;
                    if (closed.sym, closed.alt) != (sym_dim, alt_dim) {
                        out.failures.push(format!(
                            "{name}: μ={mu}: split ({}, {}) ≠ oracle ({sym_dim}, {alt_dim})",
                            closed.sym, closed.alt
                        ));
                    }
                    if closed.total > 0 && ((fs == -1) != (closed.sym > closed.alt)) {
                        out.failures.push(format!(
                            "{name}: μ={mu}: indicator {fs} inconsistent with split ({}, {})",
                            closed.sym, closed.alt
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Runs the sweep over all dominant weights within the configured bounds.
pub fn run_sweep(rs: &RootSystem, config: &SweepConfig) -> Result<SweepReport> {
    let weights = enumerate_dominant(rs.rank(), config.max_label, config.max_sum);
    let n = weights.len();

    // pair (i, j) has flat index i·n + j
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    match config.sample {
        None => {
            for i in 0..n {
                rows.push((i, (0..n).collect()));
            }
        }
        Some(sample) => {
            let chosen = sample_indices(n * n, sample);
            for flat in chosen {
                let (i, j) = (flat / n, flat % n);
                match rows.last_mut() {
                    Some((row, cols)) if *row == i => cols.push(j),
                    _ => rows.push((i, vec![j])),
                }
            }
        }
    }

    let chars: Option<Vec<VirtualCharacter>> = if config.char_oracles {
        let mut v = Vec::with_capacity(n);
        for w in &weights {
            v.push(rs.irreducible_character(&rs.weight(w)?)?);
        }
        Some(v)
    } else {
        None
    };

    let run = |(i, cols): &(usize, Vec<usize>)| -> Result<RowOutcome> {
        check_row(rs, &weights, chars.as_deref(), *i, cols, config)
    };
    let outcomes: Vec<RowOutcome> = if config.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .expect("worker pool");
        pool.install(|| rows.par_iter().map(run).collect::<Result<Vec<_>>>())?
    } else {
        rows.iter().map(run).collect::<Result<Vec<_>>>()?
    };

    let mut report = SweepReport {
        algebra: rs.spec().to_string(),
        weights: n,
        pairs: 0,
        class_counts: ClassCounts::default(),
        self_dual_weights: 0,
        product_oracle_pairs: 0,
        fs_oracle_weights: 0,
        split_oracle_weights: 0,
        fundamental_fs_checked: 0,
        skipped_over_cap: 0,
        failures: Vec::new(),
    };
    for o in outcomes {
        report.pairs += o.pairs;
        report.class_counts.absorb(&o.class_counts);
        report.self_dual_weights += usize::from(o.self_dual);
        report.product_oracle_pairs += o.product_oracle_pairs;
        report.fs_oracle_weights += o.fs_oracle_weights;
        report.split_oracle_weights += o.split_oracle_weights;
        report.skipped_over_cap += o.skipped_over_cap;
        report.failures.extend(o.failures);
    }

    // ϖ_i + ϖ̄_i is always self-dual with indicator +1
    for i in 0..rs.rank() {
        let w = rs.fundamental_weight(i)?;
        let wbar = rs.dual(&w)?;
        let labels: Vec<i64> = w
            .labels()
            .iter()
            .zip(wbar.labels())
            .map(|(a, b)| a + b)
            .collect();
        let fs = rs.frobenius_schur(&rs.weight(&labels)?)?;
        report.fundamental_fs_checked += 1;
        if fs != 1 {
            report.failures.push(format!(
                "{}: ϖ_{} + dual: indicator {fs} ≠ 1",
                report.algebra,
                i + 1
            ));
        }
    }
    Ok(report)
}
