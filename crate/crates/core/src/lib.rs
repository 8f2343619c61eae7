//! Exact fusion rings and conformal-block dimensions for `sl(r)` at level `l`,
//! together with the Young-diagram calculus of the conformal embedding
//! `sl(r) x sl(l) ⊂ sl(rl)` and numerical checks of rank-level duality.
//!
//! The crate is organised bottom-up:
//!
//! * [`weights`]: dominant weights, the truncated set `P_l(r)`, duals and the
//!   level-one identification with `Z/r`.
//! * [`young`]: Young diagrams of type `(r, l)` with transpose, dagger and the
//!   projection to dominant weights.
//! * [`reptheory`]: partitions, Weyl dimensions, Littlewood-Richardson
//!   coefficients, classical tensor products and Casimir norms.
//! * [`fusion`]: Kac-Walton fusion coefficients, conformal weights, the
//!   branching gap and a floating-point S-matrix oracle.
//! * [`blocks`]: conformal-block dimensions by sewing along a handle element.
//! * [`duality`]: branching summands, admissible triples and the
//!   dimension-level duality checks.
//!
//! All dimensions are exact big integers; floating point only appears in
//! [`fusion::oracle`].

pub mod blocks;
pub mod duality;
mod error;
pub mod fusion;
pub mod reptheory;
pub mod weights;
pub mod young;

pub use blocks::{block_dim, factorize_check, level1_dim_closed, CurveSpec};
pub use duality::{
    admissible, branching_summands, classify_alpha_component, skew_cauchy_check, AlphaComponent,
    BranchingSummand, Provenance, RankLevelPair, Report, Triple,
};
pub use error::{Error, Result};
pub use fusion::{branching_gap, conformal_weight, FusionContext};
pub use reptheory::{
    casimir_norm, exterior_power_dim, lr_coefficient, tensor_decompose, weyl_dim, Partition,
};
pub use weights::{enumerate_weights, level1_label, level1_weight, Weight};
pub use young::{enumerate_aff, YoungDiagram};
