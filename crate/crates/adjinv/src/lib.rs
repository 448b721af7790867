//! Exact representation-theoretic computations for semisimple Lie algebras,
//! centred on the dimension of the invariant subspace of
//! `adj(g) ⊗ V_μ ⊗ V_ν` and its refinement under the symmetric/antisymmetric
//! splitting of `V ⊗ V`.
//!
//! Everything is exact: weights live in Dynkin-label coordinates over `i64`,
//! root coordinates are rationals recovered from the inverse Cartan
//! transpose, and character multiplicities use big integers. Two independent
//! computation routes are provided for every headline quantity:
//!
//! * closed-form evaluators driven by the structure of the root system
//!   ([`RootSystem::invariant_dim_closed`], [`RootSystem::split_closed`],
//!   [`RootSystem::frobenius_schur`]), and
//! * character-theoretic oracles (shifted-reflection tensor expansions in
//!   [`tensor`], Freudenthal multiplicities and plethysms in [`characters`])
//!   that the closed forms are verified against.
//!
//! # Examples
//!
//! The `examples/` directory is the guided tour; each file is runnable with
//! `cargo run --example <name>`:
//!
//! * `algebra_info` — building root systems, Cartan data, opposition.
//! * `adjoint_tensor` — decomposing `adj(g) ⊗ V_μ`.
//! * `weight_multiplicities` — Freudenthal tables and Weyl dimensions.
//! * `sym_alt_squares` — symmetric/antisymmetric squares of characters.
//! * `closed_form_vs_oracle` — the invariant-dimension formula against its
//!   decomposition oracles, exception cases included.
//! * `weakly_orthogonal_table` — the weak-orthogonality table for B/C/F.
//! * `split_dimensions` — `b`, `b_S`, `b_Λ` across representations,
//!   including the E6 case where both sides of the split are nonzero.
//! * `verify_sweep` — an exhaustive small-weight verification sweep.
//!
//! # Quick start
//!
//! ```
//! use adjinv::RootSystem;
//!
//! let g2 = RootSystem::parse("G2").unwrap();
//! let mu = g2.weight(&[1, 0]).unwrap();
//! // dim Inv(adj ⊗ V_μ ⊗ V_μ): μ is self-dual with one positive label.
//! assert_eq!(g2.invariant_dim_closed(&mu, &mu).unwrap(), 1);
//! ```

#![forbid(unsafe_code)]

pub mod algebra;
pub mod characters;
pub mod cli;
pub mod epsilon;
pub mod error;
pub mod report;
pub mod root_system;
pub mod tensor;
pub mod theorems;
pub mod verify;
pub mod weyl;

pub use algebra::{AlgebraSpec, Family, SimpleType};
pub use characters::{VirtualCharacter, WeightMultiplicityMap, DEFAULT_CHAR_CAP};
pub use error::{Error, Result};
pub use root_system::{Root, RootSystem, Weight};
pub use tensor::Decomposition;
pub use theorems::{ExceptionKind, RootPairClass, SelfDuality, SplitDims};
pub use weyl::DominantResult;
