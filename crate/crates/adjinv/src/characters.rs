//! Exact character arithmetic: Freudenthal weight multiplicities, the Weyl
//! dimension formula, products of Weyl-invariant characters, symmetric and
//! alternating squares, and decomposition into irreducibles.
//!
//! A `VirtualCharacter` stores a Weyl-invariant function on the weight
//! lattice by its values on dominant weights, with integer (possibly
//! negative) coefficients. Products expand supports into full Weyl orbits,
//! so every product-taking entry point carries an explicit size cap and
//! fails loudly with `SizeCapExceeded` instead of thrashing.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight};
use crate::weyl::dominantize_raw;

/// Default ceiling on expanded weight-set sizes in character products.
pub const DEFAULT_CHAR_CAP: u128 = 10_000_000;

/// Multiplicities of the dominant weights of an irreducible module, keyed
/// by Dynkin labels.
pub type WeightMultiplicityMap = BTreeMap<Vec<i64>, BigInt>;

/// A Weyl-invariant virtual character: integer coefficients on dominant
/// weights, each standing for its full orbit sum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualCharacter {
    alg: crate::algebra::AlgebraSpec,
    coeffs: BTreeMap<Vec<i64>, BigInt>,
}

impl VirtualCharacter {
    pub(crate) fn from_map(
        alg: crate::algebra::AlgebraSpec,
        mut coeffs: BTreeMap<Vec<i64>, BigInt>,
    ) -> Self {
        coeffs.retain(|_, c| !c.is_zero());
        VirtualCharacter { alg, coeffs }
    }

    pub fn algebra(&self) -> &crate::algebra::AlgebraSpec {
        &self.alg
    }

    /// Coefficient of the orbit of a dominant label vector (zero when
    /// absent).
    pub fn coeff(&self, labels: &[i64]) -> BigInt {
        self.coeffs.get(labels).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.alg != other.alg {
            return Err(Error::MismatchedAlgebra(
                self.alg.to_string(),
                other.alg.to_string(),
            ));
        }
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &other.coeffs {
            *coeffs.entry(k.clone()).or_insert_with(BigInt::zero) += c;
        }
        Ok(Self::from_map(self.alg.clone(), coeffs))
    }

    pub fn scaled(&self, k: i64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(l, c)| (l.clone(), c * BigInt::from(k)))
            .collect();
        Self::from_map(self.alg.clone(), coeffs)
    }
}

impl RootSystem {
    /// Dominant weight multiplicities of the irreducible with highest
    /// weight `μ`, by Freudenthal's recursion.
    pub fn freudenthal_weights(&self, mu: &Weight) -> Result<WeightMultiplicityMap> {
        self.check_weight(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        let rank = self.rank();
        let cartan = self.cartan();

        // Candidate dominant weights λ ≤ μ, found by closing under
        // subtraction of positive roots within the dominant chamber; every
        // cover in the dominance order on dominant weights is a
        // positive-root difference, so this reaches all of them. Each
        // candidate carries the root coordinates of β = μ - λ.
        let mut candidates: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        candidates.insert(mu.labels().to_vec(), vec![0; rank]);
        let mut frontier = vec![mu.labels().to_vec()];
        while let Some(lam) = frontier.pop() {
            let beta = candidates[&lam].clone();
            for alpha in self.positive_roots() {
                let next: Vec<i64> = lam
                    .iter()
                    .zip(alpha.labels())
                    .map(|(l, a)| l - a)
                    .collect();
                if next.iter().any(|&l| l < 0) || candidates.contains_key(&next) {
                    continue;
                }
                let nbeta: Vec<i64> = beta
                    .iter()
                    .zip(alpha.coords())
                    .map(|(b, a)| b + a)
                    .collect();
                candidates.insert(next.clone(), nbeta);
                frontier.push(next);
            }
        }

        // Freudenthal needs every m(λ + kα) before m(λ); β-height is
        // strictly smaller for those, so ascending height order works.
        let mut order: Vec<(Vec<i64>, Vec<i64>)> = candidates.into_iter().collect();
        order.sort_by_key(|(lam, beta)| (beta.iter().sum::<i64>(), lam.clone()));

        let mu_rho_labels: Vec<i64> = mu.labels().iter().map(|l| l + 1).collect();
        let gram6 = self.gram6();
        let norm6_of_coords = |coords: &[i64]| -> i64 {
            let mut s = 0;
            for (i, &ci) in coords.iter().enumerate() {
                if ci == 0 {
                    continue;
                }
                for (j, &cj) in coords.iter().enumerate() {
                    s += ci * cj * gram6[i][j];
                }
            }
            s
        };

        let mut mults: WeightMultiplicityMap = BTreeMap::new();
        for (lam, beta) in order {
            if beta.iter().all(|&b| b == 0) {
                mults.insert(lam, BigInt::from(1));
                continue;
            }
            // 6·(|μ+ρ|² - |λ+ρ|²) = 2·6(μ+ρ, β) - 6(β, β)
            let d6 = 2 * self.form6_weight_latvec(&mu_rho_labels, &beta) - norm6_of_coords(&beta);
            assert!(d6 > 0, "Freudenthal denominator must be positive");

            let mut num6 = BigInt::zero();
            for alpha in self.positive_roots() {
                let s6_step = alpha.norm6();
                let mut s6 = self.form6_weight_latvec(&lam, alpha.coords());
                let mut rem: Vec<i64> = beta
                    .iter()
                    .zip(alpha.coords())
                    .map(|(b, a)| b - a)
                    .collect();
                let mut up: Vec<i64> = lam
                    .iter()
                    .zip(alpha.labels())
                    .map(|(l, a)| l + a)
                    .collect();
                while rem.iter().all(|&r| r >= 0) {
                    s6 += s6_step;
                    let mut dom = up.clone();
                    dominantize_raw(cartan, &mut dom);
                    if let Some(m) = mults.get(&dom) {
                        num6 += m * BigInt::from(s6);
                    }
                    for (r, a) in rem.iter_mut().zip(alpha.coords()) {
                        *r -= a;
                    }
                    for (u, a) in up.iter_mut().zip(alpha.labels()) {
                        *u += a;
                    }
                }
            }
            let (q, r) = (num6 * BigInt::from(2)).div_rem(&BigInt::from(d6));
            assert!(r.is_zero(), "Freudenthal division must be exact");
            assert!(q.is_positive(), "weight multiplicities are positive");
            mults.insert(lam, q);
        }
        Ok(mults)
    }

    /// `dim V_μ` by the Weyl dimension formula, exactly.
    pub fn weyl_dim(&self, mu: &Weight) -> Result<BigInt> {
        self.check_weight(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for alpha in self.positive_roots() {
            let shifted: i64 = mu
                .labels()
                .iter()
                .zip(alpha.coroot_coords())
                .map(|(l, c)| (l + 1) * c)
                .sum();
            let base: i64 = alpha.coroot_coords().iter().sum();
            num *= BigInt::from(shifted);
            den *= BigInt::from(base);
        }
        let (q, r) = num.div_rem(&den);
        assert!(r.is_zero(), "Weyl dimension must be an integer");
        Ok(q)
    }

    /// The character of the irreducible with highest weight `μ`.
    pub fn irreducible_character(&self, mu: &Weight) -> Result<VirtualCharacter> {
        let map = self.freudenthal_weights(mu)?;
        Ok(VirtualCharacter::from_map(self.spec().clone(), map))
    }

    /// The character of the adjoint module: the sum of the irreducibles
    /// with the highest-root highest weights, one per simple factor.
    pub fn adjoint_character(&self) -> Result<VirtualCharacter> {
        let mut acc = VirtualCharacter::from_map(self.spec().clone(), BTreeMap::new());
        for theta in self.adjoint_weights() {
            acc = acc.add(&self.irreducible_character(&theta)?)?;
        }
        Ok(acc)
    }

    fn check_character(&self, a: &VirtualCharacter) -> Result<()> {
        if a.algebra() == self.spec() {
            Ok(())
        } else {
            Err(Error::MismatchedAlgebra(
                a.algebra().to_string(),
                self.spec().to_string(),
            ))
        }
    }

    /// Expands a character's dominant support into the full list of weights
    /// with coefficients, guarded by `cap`.
    fn expand_full(&self, a: &VirtualCharacter, cap: u128) -> Result<Vec<(Vec<i64>, BigInt)>> {
        let mut out = Vec::new();
        for (labels, c) in a.iter() {
            let orbit = self.weyl_orbit_raw(labels, cap)?;
            let size = out.len() as u128 + orbit.len() as u128;
            if size > cap {
                return Err(Error::SizeCapExceeded { size, cap });
            }
            out.extend(orbit.into_iter().map(|x| (x, c.clone())));
        }
        Ok(out)
    }

    /// Pointwise product of two characters. The work is the product of the
    /// expanded support sizes, which must stay within `cap`.
    pub fn char_product(
        &self,
        a: &VirtualCharacter,
        b: &VirtualCharacter,
        cap: u128,
    ) -> Result<VirtualCharacter> {
        self.check_character(a)?;
        self.check_character(b)?;
        let ea = self.expand_full(a, cap)?;
        let eb = self.expand_full(b, cap)?;
        let work = ea.len() as u128 * eb.len() as u128;
        if work > cap {
            return Err(Error::SizeCapExceeded { size: work, cap });
        }
        let rank = self.rank();
        let mut acc: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        let mut sum = vec![0i64; rank];
        for (x, cx) in &ea {
            for (y, cy) in &eb {
                let mut dominant = true;
                for i in 0..rank {
                    sum[i] = x[i] + y[i];
                    dominant &= sum[i] >= 0;
                }
                if dominant {
                    *acc.entry(sum.clone()).or_insert_with(BigInt::zero) += cx * cy;
                }
            }
        }
        Ok(VirtualCharacter::from_map(self.spec().clone(), acc))
    }

    /// The second Adams operation `χ(g) ↦ χ(g²)`: every dominant key is
    /// doubled, coefficients unchanged.
    pub fn char_double(&self, a: &VirtualCharacter) -> Result<VirtualCharacter> {
        self.check_character(a)?;
        let coeffs = a
            .iter()
            .map(|(l, c)| (l.iter().map(|x| 2 * x).collect(), c.clone()))
            .collect();
        Ok(VirtualCharacter::from_map(self.spec().clone(), coeffs))
    }

    /// Characters of the symmetric and alternating squares, via
    /// `sym² = (χ² + ψ²χ)/2` and `alt² = (χ² - ψ²χ)/2`.
    pub fn sym_alt_squares(
        &self,
        a: &VirtualCharacter,
        cap: u128,
    ) -> Result<(VirtualCharacter, VirtualCharacter)> {
        let sq = self.char_product(a, a, cap)?;
        let db = self.char_double(a)?;
        let mut sym: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        let mut alt: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        let keys: Vec<Vec<i64>> = sq
            .iter()
            .map(|(k, _)| k.clone())
            .chain(db.iter().map(|(k, _)| k.clone()))
            .collect();
        for k in keys {
            let s = sq.coeff(&k) + db.coeff(&k);
            let d = sq.coeff(&k) - db.coeff(&k);
            if !(&s % BigInt::from(2)).is_zero() {
                return Err(Error::NonIntegralCharacter(format!(
                    "odd coefficient at {k:?} when halving a square"
                )));
            }
            sym.insert(k.clone(), s / BigInt::from(2));
            alt.insert(k, d / BigInt::from(2));
        }
        Ok((
            VirtualCharacter::from_map(self.spec().clone(), sym),
            VirtualCharacter::from_map(self.spec().clone(), alt),
        ))
    }

    /// Writes a virtual character as an integer combination of irreducible
    /// characters, peeling repeatedly at the highest remaining key in
    /// (height, labels) order. Terms come back in peel order.
    pub fn decompose_character(&self, a: &VirtualCharacter) -> Result<Vec<(Weight, i64)>> {
        self.check_character(a)?;
        let mut work: BTreeMap<Vec<i64>, BigInt> = a.iter().map(|(k, c)| (k.clone(), c.clone())).collect();
        let mut memo: HashMap<Vec<i64>, WeightMultiplicityMap> = HashMap::new();
        let mut terms: Vec<(Weight, i64)> = Vec::new();
        while !work.is_empty() {
            let peel = work
                .keys()
                .max_by(|x, y| {
                    self.height_raw(x)
                        .cmp(&self.height_raw(y))
                        .then_with(|| x.cmp(y))
                })
                .unwrap()
                .clone();
            let c = work[&peel].clone();
            let c_i64 = c
                .to_i64()
                .expect("decomposition multiplicities fit in 64 bits");
            if !memo.contains_key(&peel) {
                let mu = self.weight(&peel)?;
                memo.insert(peel.clone(), self.freudenthal_weights(&mu)?);
            }
            for (k, m) in &memo[&peel] {
                let entry = work.entry(k.clone()).or_insert_with(BigInt::zero);
                *entry -= &c * m;
                if entry.is_zero() {
                    work.remove(k);
                }
            }
            assert!(!work.contains_key(&peel), "peeled key must vanish");
            terms.push((self.weight(&peel)?, c_i64));
        }
        Ok(terms)
    }

    /// Multiplicity of the irreducible `V_ν` in a virtual character.
    pub fn irreducible_multiplicity(&self, a: &VirtualCharacter, nu: &Weight) -> Result<i64> {
        self.check_weight(nu)?;
        if !nu.is_dominant() {
            return Err(Error::NotDominant(nu.to_string()));
        }
        Ok(self
            .decompose_character(a)?
            .into_iter()
            .find(|(w, _)| w == nu)
            .map(|(_, c)| c)
            .unwrap_or(0))
    }

    /// `dim Hom(g, M)` for the module with character `a`: the sum over
    /// simple factors of the multiplicity of the adjoint irreducible.
    pub fn invariant_dim_in(&self, a: &VirtualCharacter) -> Result<i64> {
        let terms = self.decompose_character(a)?;
        let mut total = 0i64;
        for theta in self.adjoint_weights() {
            total += terms
                .iter()
                .find(|(w, _)| *w == theta)
                .map(|(_, c)| *c)
                .unwrap_or(0);
        }
        Ok(total)
    }
}
