//! Root systems in Bourbaki numbering: positive roots, fundamental weights,
//! exact pairings, and the block structure of semisimple products.
//!
//! Weights are handled in Dynkin-label coordinates `λ_j = ⟨λ, α_j^∨⟩`
//! throughout; root-basis coordinates are exact rationals recovered as
//! `C⁻ᵀ·labels` blockwise. The invariant form is normalized per simple
//! factor so that long roots have squared length 2, and is carried as the
//! integer matrix `6·(α_i, α_j)` so every inner product used downstream
//! stays in integer arithmetic.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_rational::Ratio;

use crate::algebra::{AlgebraSpec, SimpleType};
use crate::error::{Error, Result};

pub type Rat = Ratio<i64>;

/// An integral weight of a fixed semisimple algebra, in Dynkin labels.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight {
    labels: Vec<i64>,
    alg: AlgebraSpec,
}

impl Weight {
    pub(crate) fn from_labels(labels: Vec<i64>, alg: AlgebraSpec) -> Self {
        debug_assert_eq!(labels.len(), alg.rank());
        Weight { labels, alg }
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn algebra(&self) -> &AlgebraSpec {
        &self.alg
    }

    pub fn is_dominant(&self) -> bool {
        self.labels.iter().all(|&l| l >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// A root, stored in integer simple-root coordinates along with the derived
/// data used in pairings: Dynkin labels, integer coroot coordinates, the
/// scaled squared length `6·(α,α)`, and the factor it lives in.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Root {
    coords: Vec<i64>,
    labels: Vec<i64>,
    coroot: Vec<i64>,
    norm6: i64,
    factor: usize,
    long: bool,
    alg: AlgebraSpec,
}

impl Root {
    /// Integer coordinates in the simple-root basis (zero outside the
    /// root's factor).
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Dynkin labels `⟨α, α_j^∨⟩`.
    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// Integer coordinates of `α^∨` in the simple-coroot basis.
    pub fn coroot_coords(&self) -> &[i64] {
        &self.coroot
    }

    /// `6·(α, α)`: 12 for long roots, 6 for short roots in B/C/F, 4 in G2.
    pub fn norm6(&self) -> i64 {
        self.norm6
    }

    pub fn is_long(&self) -> bool {
        self.long
    }

    /// Index of the simple factor containing this root.
    pub fn factor(&self) -> usize {
        self.factor
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().sum::<i64>() > 0
    }

    pub fn negated(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|c| -c).collect(),
            labels: self.labels.iter().map(|l| -l).collect(),
            coroot: self.coroot.iter().map(|c| -c).collect(),
            norm6: self.norm6,
            factor: self.factor,
            long: self.long,
            alg: self.alg.clone(),
        }
    }

    /// The root as a weight of its algebra.
    pub fn as_weight(&self) -> Weight {
        Weight::from_labels(self.labels.clone(), self.alg.clone())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Position of one simple factor inside the global numbering.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FactorSlice {
    pub ty: SimpleType,
    pub offset: usize,
}

impl FactorSlice {
    pub fn indices(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.ty.rank()
    }
}

/// Immutable root-system data for a semisimple algebra.
pub struct RootSystem {
    spec: AlgebraSpec,
    rank: usize,
    factors: Vec<FactorSlice>,
    cartan: Vec<Vec<i64>>,
    norm6_simple: Vec<i64>,
    gram6: Vec<Vec<i64>>,
    cartan_inv_t: Vec<Vec<Rat>>,
    height_functional: Vec<Rat>,
    positive_roots: Vec<Root>,
    simple_root_index: Vec<usize>,
    root_by_labels: HashMap<Vec<i64>, Root>,
    rho: Weight,
    two_rho_check: Vec<i64>,
    highest_root_index: Vec<usize>,
    opposition_perm: Vec<usize>,
}

/// Positive roots of one simple factor, as local integer coordinate
/// vectors, generated by closing the simple roots under simple reflections.
fn simple_factor_positive_roots(ty: SimpleType) -> Vec<Vec<i64>> {
    let n = ty.rank();
    let cartan = ty.cartan();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for j in 0..n {
        let mut e = vec![0i64; n];
        e[j] = 1;
        seen.insert(e.clone());
        queue.push(e);
    }
    while let Some(c) = queue.pop() {
        for k in 0..n {
            let pairing: i64 = (0..n).map(|i| c[i] * cartan[i][k]).sum();
            if pairing == 0 {
                continue;
            }
            let mut r = c.clone();
            r[k] -= pairing;
            if seen.insert(r.clone()) {
                queue.push(r);
            }
        }
    }
    let mut positives: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|c| c.iter().all(|&x| x >= 0))
        .collect();
    positives.sort();
    assert_eq!(
        positives.len(),
        ty.positive_root_count(),
        "root closure for {ty} produced the wrong count"
    );
    positives
}

fn invert_rational(block: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = block.len();
    let mut a: Vec<Vec<Rat>> = block.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::from(1) } else { Rat::from(0) })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| a[r][col] != Rat::from(0))
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && a[r][col] != Rat::from(0) {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    inv
}

impl RootSystem {
    pub fn parse(spec: &str) -> Result<Self> {
        Ok(Self::new(spec.parse()?))
    }

    pub fn new(spec: AlgebraSpec) -> Self {
        let rank = spec.rank();
        let mut factors = Vec::new();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut norm6_simple = vec![0i64; rank];
        let mut offset = 0usize;
        let mut local_positives: Vec<Vec<Vec<i64>>> = Vec::new();
        for &ty in spec.factors() {
            factors.push(FactorSlice { ty, offset });
            let c = ty.cartan();
            let norms = ty.simple_norms6();
            for i in 0..ty.rank() {
                norm6_simple[offset + i] = norms[i];
                for j in 0..ty.rank() {
                    cartan[offset + i][offset + j] = c[i][j];
                }
            }
            local_positives.push(simple_factor_positive_roots(ty));
            offset += ty.rank();
        }

        // 6·(α_i, α_j) = cartan[i][j]·(α_j, α_j)·3 = cartan[i][j]·norm6[j]/2.
        let mut gram6 = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                let twice = cartan[i][j] * norm6_simple[j];
                assert_eq!(twice % 2, 0);
                gram6[i][j] = twice / 2;
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                assert_eq!(gram6[i][j], gram6[j][i], "form must be symmetric");
            }
        }

        let norm6_of = |coords: &[i64]| -> i64 {
            let mut s = 0i64;
            for i in 0..rank {
                if coords[i] == 0 {
                    continue;
                }
                for j in 0..rank {
                    s += coords[i] * coords[j] * gram6[i][j];
                }
            }
            s
        };

        let mut positive_roots: Vec<Root> = Vec::new();
        for (fi, slice) in factors.iter().enumerate() {
            for local in &local_positives[fi] {
                let mut coords = vec![0i64; rank];
                coords[slice.indices()].copy_from_slice(local);
                let labels: Vec<i64> = (0..rank)
                    .map(|j| (0..rank).map(|i| coords[i] * cartan[i][j]).sum())
                    .collect();
                let norm6 = norm6_of(&coords);
                let coroot: Vec<i64> = (0..rank)
                    .map(|k| {
                        let num = coords[k] * norm6_simple[k];
                        assert_eq!(num % norm6, 0, "coroot coordinates must be integral");
                        num / norm6
                    })
                    .collect();
                positive_roots.push(Root {
                    coords,
                    labels,
                    coroot,
                    norm6,
                    factor: fi,
                    long: norm6 == 12,
                    alg: spec.clone(),
                });
            }
        }
        for fi in 0..factors.len() {
            let max = positive_roots
                .iter()
                .filter(|r| r.factor == fi)
                .map(|r| r.norm6)
                .max()
                .unwrap();
            assert_eq!(max, 12, "long roots are normalized to squared length 2");
        }

        // C⁻ᵀ, blockwise; root coordinates of a weight are C⁻ᵀ·labels.
        let mut cartan_inv_t = vec![vec![Rat::from(0); rank]; rank];
        for slice in &factors {
            let n = slice.ty.rank();
            let block: Vec<Vec<Rat>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| Rat::from(cartan[slice.offset + i][slice.offset + j]))
                        .collect()
                })
                .collect();
            let inv = invert_rational(&block);
            for i in 0..n {
                for j in 0..n {
                    // stored entry [i][j] of C⁻ᵀ is C⁻¹[j][i]
                    cartan_inv_t[slice.offset + i][slice.offset + j] = inv[j][i];
                }
            }
        }
        let height_functional: Vec<Rat> = (0..rank)
            .map(|j| (0..rank).map(|i| cartan_inv_t[i][j]).sum())
            .collect();

        let mut root_by_labels = HashMap::new();
        for r in &positive_roots {
            root_by_labels.insert(r.labels.clone(), r.clone());
            let neg = r.negated();
            root_by_labels.insert(neg.labels.clone(), neg);
        }

        let simple_root_index: Vec<usize> = (0..rank)
            .map(|j| {
                positive_roots
                    .iter()
                    .position(|r| {
                        r.coords.iter().enumerate().all(|(i, &c)| c == i64::from(i == j))
                    })
                    .expect("simple roots are positive roots")
            })
            .collect();

        let mut two_rho_check = vec![0i64; rank];
        for r in &positive_roots {
            for j in 0..rank {
                two_rho_check[j] += r.coroot[j];
            }
        }

        let highest_root_index: Vec<usize> = (0..factors.len())
            .map(|fi| {
                let mut best: Option<usize> = None;
                for (idx, r) in positive_roots.iter().enumerate() {
                    if r.factor != fi {
                        continue;
                    }
                    match best {
                        None => best = Some(idx),
                        Some(b) => {
                            let hb: i64 = positive_roots[b].coords.iter().sum();
                            let hr: i64 = r.coords.iter().sum();
                            if hr > hb {
                                best = Some(idx);
                            }
                        }
                    }
                }
                best.expect("every factor has roots")
            })
            .collect();

        let rho = Weight::from_labels(vec![1; rank], spec.clone());

        let mut rs = RootSystem {
            spec,
            rank,
            factors,
            cartan,
            norm6_simple,
            gram6,
            cartan_inv_t,
            height_functional,
            positive_roots,
            simple_root_index,
            root_by_labels,
            rho,
            two_rho_check,
            highest_root_index,
            opposition_perm: Vec::new(),
        };
        rs.opposition_perm = (0..rank)
            .map(|i| {
                let mut labels = vec![0i64; rank];
                labels[i] = -1;
                crate::weyl::dominantize_raw(&rs.cartan, &mut labels);
                let j = labels.iter().position(|&l| l == 1).expect("ϖ̄ is fundamental");
                assert!(labels.iter().enumerate().all(|(k, &l)| l == i64::from(k == j)));
                j
            })
            .collect();
        rs
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dimension(&self) -> usize {
        self.spec.dimension()
    }

    pub fn factors(&self) -> &[FactorSlice] {
        &self.factors
    }

    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩`; row `i` is the label vector of `α_i`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix `(α_i, α_j)` of the simple roots, long roots normalized
    /// to squared length 2 per factor.
    pub fn bilinear_form(&self) -> Vec<Vec<Rat>> {
        self.gram6
            .iter()
            .map(|row| row.iter().map(|&x| Rat::new(x, 6)).collect())
            .collect()
    }

    pub(crate) fn gram6(&self) -> &[Vec<i64>] {
        &self.gram6
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// All roots: the positive roots followed by their negatives.
    pub fn all_roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive_roots
            .iter()
            .cloned()
            .chain(self.positive_roots.iter().map(Root::negated))
    }

    pub fn simple_root(&self, j: usize) -> Result<&Root> {
        let idx = *self
            .simple_root_index
            .get(j)
            .ok_or(Error::IndexOutOfRange { index: j, rank: self.rank })?;
        Ok(&self.positive_roots[idx])
    }

    /// Looks a label vector up in the root list.
    pub fn root_from_labels(&self, labels: &[i64]) -> Option<&Root> {
        self.root_by_labels.get(labels)
    }

    /// Highest root of each simple factor (the adjoint highest weights).
    pub fn highest_roots(&self) -> Vec<&Root> {
        self.highest_root_index
            .iter()
            .map(|&i| &self.positive_roots[i])
            .collect()
    }

    /// The adjoint highest weight of each simple factor, as weights of the
    /// full algebra.
    pub fn adjoint_weights(&self) -> Vec<Weight> {
        self.highest_roots().into_iter().map(Root::as_weight).collect()
    }

    pub fn weight(&self, labels: &[i64]) -> Result<Weight> {
        if labels.len() != self.rank {
            return Err(Error::MismatchedAlgebra(
                format!("a rank-{} weight", labels.len()),
                format!("{} (rank {})", self.spec, self.rank),
            ));
        }
        Ok(Weight::from_labels(labels.to_vec(), self.spec.clone()))
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::from_labels(vec![0; self.rank], self.spec.clone())
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        if i >= self.rank {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank });
        }
        let mut labels = vec![0i64; self.rank];
        labels[i] = 1;
        Ok(Weight::from_labels(labels, self.spec.clone()))
    }

    pub(crate) fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.algebra() == &self.spec {
            Ok(())
        } else {
            Err(Error::MismatchedAlgebra(
                w.algebra().to_string(),
                self.spec.to_string(),
            ))
        }
    }

    pub(crate) fn check_root(&self, r: &Root) -> Result<()> {
        if r.alg == self.spec {
            Ok(())
        } else {
            Err(Error::MismatchedAlgebra(r.alg.to_string(), self.spec.to_string()))
        }
    }

    /// `⟨λ, α^∨⟩`, exact.
    pub fn pairing(&self, lambda: &Weight, alpha: &Root) -> Result<i64> {
        self.check_weight(lambda)?;
        self.check_root(alpha)?;
        Ok(lambda
            .labels()
            .iter()
            .zip(&alpha.coroot)
            .map(|(l, c)| l * c)
            .sum())
    }

    /// `λ + α` as a weight.
    pub fn add_root(&self, lambda: &Weight, alpha: &Root) -> Result<Weight> {
        self.check_weight(lambda)?;
        self.check_root(alpha)?;
        let labels = lambda
            .labels()
            .iter()
            .zip(&alpha.labels)
            .map(|(l, a)| l + a)
            .collect();
        Ok(Weight::from_labels(labels, self.spec.clone()))
    }

    /// `⟨λ, 2ρ^∨⟩`: the pairing with the sum of all positive coroots.
    pub fn two_rho_check_pairing(&self, lambda: &Weight) -> Result<i64> {
        self.check_weight(lambda)?;
        Ok(lambda
            .labels()
            .iter()
            .zip(&self.two_rho_check)
            .map(|(l, c)| l * c)
            .sum())
    }

    /// Exact root-basis coordinates `C⁻ᵀ·labels` of a weight.
    pub fn root_coords(&self, lambda: &Weight) -> Result<Vec<Rat>> {
        self.check_weight(lambda)?;
        Ok(self.root_coords_raw(lambda.labels()))
    }

    pub(crate) fn root_coords_raw(&self, labels: &[i64]) -> Vec<Rat> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.cartan_inv_t[i][j] * Rat::from(labels[j]))
                    .sum()
            })
            .collect()
    }

    /// Sum of the root-basis coordinates of a weight; strictly refines the
    /// dominance order within one root-lattice coset.
    pub(crate) fn height_raw(&self, labels: &[i64]) -> Rat {
        labels
            .iter()
            .zip(&self.height_functional)
            .map(|(&l, h)| h * Rat::from(l))
            .sum()
    }

    /// The permutation `π` with `ϖ̄_i = ϖ_{π(i)}` induced by the opposition
    /// involution.
    pub fn opposition_perm(&self) -> &[usize] {
        &self.opposition_perm
    }

    /// Whether the fundamental weight `ϖ_j` is self-dual.
    pub fn fundamental_self_dual(&self, j: usize) -> Result<bool> {
        if j >= self.rank {
            return Err(Error::IndexOutOfRange { index: j, rank: self.rank });
        }
        Ok(self.opposition_perm[j] == j)
    }

    /// `6·(λ, μ)` for weights given by label vectors, via the root-lattice
    /// coordinates of one side.
    pub(crate) fn form6_weight_latvec(&self, labels: &[i64], coords: &[i64]) -> i64 {
        (0..self.rank)
            .map(|k| coords[k] * labels[k] * (self.norm6_simple[k] / 2))
            .sum()
    }

}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.spec)
    }
}
