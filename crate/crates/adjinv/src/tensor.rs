//! Tensor-product decomposition by the shifted-dominantization rule: each
//! weight of one factor, shifted by the other factor's highest weight plus
//! ρ, either lands on a chamber wall and drops out or contributes its Weyl
//! sign to a dominant summand.
//!
//! The adjoint factor gets a dedicated fast path: its weight system is the
//! root list plus the zero weight with multiplicity `rank`, so no
//! Freudenthal pass or orbit expansion is needed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight};
use crate::weyl::to_dominant_shifted_raw;

/// A nonnegative integer combination of irreducible highest weights, keyed
/// by Dynkin labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    alg: crate::algebra::AlgebraSpec,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl Decomposition {
    pub fn algebra(&self) -> &crate::algebra::AlgebraSpec {
        &self.alg
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplicity of the irreducible with highest weight `nu`.
    pub fn multiplicity(&self, nu: &Weight) -> Result<i64> {
        if nu.algebra() != &self.alg {
            return Err(Error::MismatchedAlgebra(
                nu.algebra().to_string(),
                self.alg.to_string(),
            ));
        }
        Ok(self.terms.get(nu.labels()).copied().unwrap_or(0))
    }

    /// Total dimension `Σ mult·dim`, for conservation checks.
    pub fn total_dimension(&self, rs: &RootSystem) -> Result<BigInt> {
        let mut total = BigInt::from(0);
        for (labels, mult) in self.iter() {
            let w = rs.weight(labels)?;
            total += rs.weyl_dim(&w)? * BigInt::from(mult);
        }
        Ok(total)
    }
}

impl RootSystem {
    fn collect_decomposition(&self, acc: BTreeMap<Vec<i64>, i64>) -> Result<Decomposition> {
        for (k, &v) in &acc {
            if v < 0 {
                return Err(Error::InternalNegativeMultiplicity {
                    weight: format!("{k:?}"),
                    mult: v,
                });
            }
        }
        let mut terms = acc;
        terms.retain(|_, v| *v != 0);
        Ok(Decomposition { alg: self.spec().clone(), terms })
    }

    /// Decomposition of `g ⊗ V_μ`: one shifted-dominantization per root,
    /// plus `rank` copies of `V_μ` from the zero weights of `g`.
    pub fn adjoint_tensor(&self, mu: &Weight) -> Result<Decomposition> {
        self.check_weight(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        let cartan = self.cartan();
        let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        acc.insert(mu.labels().to_vec(), self.rank() as i64);
        for gamma in self.all_roots() {
            let mut delta: Vec<i64> = mu
                .labels()
                .iter()
                .zip(gamma.labels())
                .map(|(m, g)| m + g + 1)
                .collect();
            if let Some(sign) = to_dominant_shifted_raw(cartan, &mut delta) {
                for d in &mut delta {
                    *d -= 1;
                }
                *acc.entry(delta).or_insert(0) += sign;
            }
        }
        self.collect_decomposition(acc)
    }

    /// Decomposition of `V_λ ⊗ V_ν`, expanding the full weight system of
    /// `V_λ`. The expansion is guarded by `cap`.
    pub fn tensor_product(&self, lambda: &Weight, nu: &Weight, cap: u128) -> Result<Decomposition> {
        self.check_weight(lambda)?;
        self.check_weight(nu)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        if !nu.is_dominant() {
            return Err(Error::NotDominant(nu.to_string()));
        }
        let cartan = self.cartan();
        let weights = self.freudenthal_weights(lambda)?;
        let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        let mut expanded: u128 = 0;
        for (w, m) in &weights {
            let m = m.to_i64().expect("weight multiplicity fits in 64 bits");
            let orbit = self.weyl_orbit_raw(w, cap)?;
            expanded += orbit.len() as u128;
            if expanded > cap {
                return Err(Error::SizeCapExceeded { size: expanded, cap });
            }
            for x in orbit {
                let mut delta: Vec<i64> = nu
                    .labels()
                    .iter()
                    .zip(&x)
                    .map(|(n, xi)| n + xi + 1)
                    .collect();
                if let Some(sign) = to_dominant_shifted_raw(cartan, &mut delta) {
                    for d in &mut delta {
                        *d -= 1;
                    }
                    *acc.entry(delta).or_insert(0) += m * sign;
                }
            }
        }
        self.collect_decomposition(acc)
    }

    /// `dim Inv(g ⊗ V_μ ⊗ V_ν)`, read off as the multiplicity of `V_ν̄`
    /// in `g ⊗ V_μ`.
    pub fn invariant_dim_adj(&self, mu: &Weight, nu: &Weight) -> Result<i64> {
        let dec = self.adjoint_tensor(mu)?;
        let nubar = self.dual(nu)?;
        dec.multiplicity(&nubar)
    }

    /// The same invariant dimension computed through `V_μ ⊗ V_ν` instead:
    /// the total multiplicity of the adjoint irreducibles in the product,
    /// expanding the weight system of the smaller factor.
    pub fn adjoint_multiplicity_in_product(
        &self,
        mu: &Weight,
        nu: &Weight,
        cap: u128,
    ) -> Result<i64> {
        let (small, large) = if self.weyl_dim(mu)? <= self.weyl_dim(nu)? {
            (mu, nu)
        } else {
            (nu, mu)
        };
        let dec = self.tensor_product(small, large, cap)?;
        let mut total = 0i64;
        for theta in self.adjoint_weights() {
            total += dec.multiplicity(&theta)?;
        }
        Ok(total)
    }
}
