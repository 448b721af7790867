//! Closed forms for `dim Inv(g ⊗ V_μ ⊗ V_ν)` and for its refinement into
//! symmetric and alternating parts, together with the character-theoretic
//! oracles they are tested against.
//!
//! The dimension is nonzero only when `ν̄ = μ` (giving the number of
//! positive labels of `μ`) or when `ν̄ - μ` is a root (giving 1, except for
//! a short list of cancellations: a root weakly orthogonal to a short
//! simple root whose label vanishes in types B, C, F, and two sporadic
//! configurations in G2).

use crate::algebra::Family;
use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem, Weight};

/// Why a root-shift pair fails to contribute an invariant.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExceptionKind {
    /// `β` is weakly orthogonal to the short simple root `α_j` and
    /// `μ_j = 0` (types B, C, F).
    ShortSimple { index: usize },
    /// G2 with `μ`'s first label 0 and `β` one of `-(α1+α2)`, `2α1+α2`.
    G2AtZero,
    /// G2 with `μ`'s first label 1 and `β` one of `α1+α2`, `-(2α1+α2)`.
    G2AtOne,
}

/// Position of `(μ, ν)` relative to the closed form: `ν̄` equal to `μ`,
/// shifted from it by a root, or neither.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RootPairClass {
    DualEqualsHighestWeight,
    RootShift { beta: Root, exception: Option<ExceptionKind> },
    Unrelated,
}

/// Frobenius-Schur classification of an irreducible module.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SelfDuality {
    NotSelfDual,
    Orthogonal,
    Symplectic,
}

impl SelfDuality {
    pub fn indicator(self) -> i64 {
        match self {
            SelfDuality::NotSelfDual => 0,
            SelfDuality::Orthogonal => 1,
            SelfDuality::Symplectic => -1,
        }
    }
}

/// The invariant dimension `b` for a self-dual `μ`, split into the parts
/// living in the symmetric and alternating squares of `V_μ`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SplitDims {
    pub total: i64,
    pub sym: i64,
    pub alt: i64,
}

impl RootSystem {
    /// `(β, α) = 0` while `β + α` is still a root.
    pub fn weakly_orthogonal(&self, beta: &Root, alpha: &Root) -> Result<bool> {
        self.check_root(beta)?;
        self.check_root(alpha)?;
        let gram6 = self.gram6();
        let mut form6 = 0i64;
        for (i, &bi) in beta.coords().iter().enumerate() {
            if bi == 0 {
                continue;
            }
            for (j, &aj) in alpha.coords().iter().enumerate() {
                form6 += bi * aj * gram6[i][j];
            }
        }
        if form6 != 0 {
            return Ok(false);
        }
        let sum: Vec<i64> = beta
            .labels()
            .iter()
            .zip(alpha.labels())
            .map(|(b, a)| b + a)
            .collect();
        Ok(self.root_from_labels(&sum).is_some())
    }

    /// All pairs `(j, β)` with `α_j` a short simple root and `β` a root
    /// weakly orthogonal to it. Empty outside types B, C, F.
    pub fn weakly_orthogonal_pairs(&self) -> Vec<(usize, Root)> {
        let mut out: Vec<(usize, Root)> = Vec::new();
        for j in 0..self.rank() {
            let alpha = self.simple_root(j).expect("index in range").clone();
            if alpha.norm6() >= 12 {
                continue;
            }
            for beta in self.all_roots() {
                if self.weakly_orthogonal(&beta, &alpha).expect("same algebra") {
                    out.push((j, beta));
                }
            }
        }
        out.sort_by(|(j1, b1), (j2, b2)| j1.cmp(j2).then_with(|| b1.coords().cmp(b2.coords())));
        out
    }

    fn root_shift_exception(&self, mu: &Weight, beta: &Root) -> Option<ExceptionKind> {
        let slice = self.factors()[beta.factor()];
        match slice.ty.family() {
            Family::B | Family::C | Family::F => {
                for j in slice.indices() {
                    let alpha = self.simple_root(j).expect("index in range");
                    if alpha.norm6() < 12
                        && mu.labels()[j] == 0
                        && self.weakly_orthogonal(beta, alpha).expect("same algebra")
                    {
                        return Some(ExceptionKind::ShortSimple { index: j });
                    }
                }
                None
            }
            Family::G => {
                let o = slice.offset;
                let local = (beta.coords()[o], beta.coords()[o + 1]);
                match mu.labels()[o] {
                    0 if local == (-1, -1) || local == (2, 1) => Some(ExceptionKind::G2AtZero),
                    1 if local == (1, 1) || local == (-2, -1) => Some(ExceptionKind::G2AtOne),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    /// Classifies `(μ, ν)` by the position of `ν̄` relative to `μ`.
    pub fn classify_pair(&self, mu: &Weight, nu: &Weight) -> Result<RootPairClass> {
        self.check_weight(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        let nubar = self.dual(nu)?;
        if &nubar == mu {
            return Ok(RootPairClass::DualEqualsHighestWeight);
        }
        let diff: Vec<i64> = nubar
            .labels()
            .iter()
            .zip(mu.labels())
            .map(|(n, m)| n - m)
            .collect();
        Ok(match self.root_from_labels(&diff) {
            Some(beta) => {
                let beta = beta.clone();
                let exception = self.root_shift_exception(mu, &beta);
                RootPairClass::RootShift { beta, exception }
            }
            None => RootPairClass::Unrelated,
        })
    }

    /// `dim Inv(g ⊗ V_μ ⊗ V_ν)` in closed form: the number of positive
    /// labels of `μ` when `ν̄ = μ`, else 1 or 0 according to whether
    /// `ν̄ - μ` is a non-exceptional root.
    pub fn invariant_dim_closed(&self, mu: &Weight, nu: &Weight) -> Result<i64> {
        Ok(match self.classify_pair(mu, nu)? {
            RootPairClass::DualEqualsHighestWeight => {
                mu.labels().iter().filter(|&&l| l > 0).count() as i64
            }
            RootPairClass::RootShift { exception: None, .. } => 1,
            RootPairClass::RootShift { exception: Some(_), .. } => 0,
            RootPairClass::Unrelated => 0,
        })
    }

    /// Frobenius-Schur classification of `V_μ`: not self-dual, orthogonal,
    /// or symplectic, decided by the parity of `⟨μ, 2ρ^∨⟩`.
    pub fn self_duality(&self, mu: &Weight) -> Result<SelfDuality> {
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        if !self.is_self_dual(mu)? {
            return Ok(SelfDuality::NotSelfDual);
        }
        Ok(if self.two_rho_check_pairing(mu)? % 2 == 0 {
            SelfDuality::Orthogonal
        } else {
            SelfDuality::Symplectic
        })
    }

    /// The Frobenius-Schur indicator of `V_μ` in `{-1, 0, 1}`.
    pub fn frobenius_schur(&self, mu: &Weight) -> Result<i64> {
        Ok(self.self_duality(mu)?.indicator())
    }

    /// The indicator recomputed from characters: the multiplicity of the
    /// trivial module in `S²V_μ` minus its multiplicity in `Λ²V_μ`.
    pub fn fs_oracle(&self, mu: &Weight, cap: u128) -> Result<i64> {
        let chi = self.irreducible_character(mu)?;
        let (sym, alt) = self.sym_alt_squares(&chi, cap)?;
        let zero = self.zero_weight();
        Ok(self.irreducible_multiplicity(&sym, &zero)?
            - self.irreducible_multiplicity(&alt, &zero)?)
    }

    /// Closed form for the symmetric/alternating refinement of
    /// `dim Inv(g ⊗ V_μ ⊗ V_μ)` for self-dual `μ`: paired positive labels
    /// split evenly, fixed positive labels all land on one side, chosen by
    /// the Frobenius-Schur indicator.
    pub fn split_closed(&self, mu: &Weight) -> Result<SplitDims> {
        let duality = self.self_duality(mu)?;
        if duality == SelfDuality::NotSelfDual {
            return Err(Error::NotSelfDual(mu.to_string()));
        }
        let perm = self.opposition_perm();
        let mut swapped = 0i64;
        let mut fixed = 0i64;
        for (j, &l) in mu.labels().iter().enumerate() {
            if l > 0 {
                if perm[j] == j {
                    fixed += 1;
                } else {
                    swapped += 1;
                }
            }
        }
        assert_eq!(swapped % 2, 0, "non-fixed positive labels pair up");
        let half = swapped / 2;
        let (sym, alt) = match duality {
            SelfDuality::Symplectic => (half + fixed, half),
            _ => (half, half + fixed),
        };
        Ok(SplitDims { total: sym + alt, sym, alt })
    }

    /// The same refinement computed from characters: the adjoint
    /// multiplicities in `S²V_μ` and `Λ²V_μ`.
    pub fn split_oracle(&self, mu: &Weight, cap: u128) -> Result<SplitDims> {
        if self.self_duality(mu)? == SelfDuality::NotSelfDual {
            return Err(Error::NotSelfDual(mu.to_string()));
        }
        let chi = self.irreducible_character(mu)?;
        let (sym_sq, alt_sq) = self.sym_alt_squares(&chi, cap)?;
        let sym = self.invariant_dim_in(&sym_sq)?;
        let alt = self.invariant_dim_in(&alt_sq)?;
        Ok(SplitDims { total: sym + alt, sym, alt })
    }

    /// Whether every invariant for a self-dual `μ` lies on a single side
    /// of the symmetric/alternating split.
    pub fn split_is_one_sided(&self, mu: &Weight) -> Result<bool> {
        let s = self.split_closed(mu)?;
        Ok(s.sym.min(s.alt) == 0)
    }
}
