//! Exact certification of temperedness and square-integrability criteria
//! for regular representations on reductive homogeneous spaces G/H.
//!
//! For a reductive pair (G, H) the restricted weights of 𝔤, 𝔥 and
//! 𝔮 = 𝔤/𝔥 under a maximal split abelian subspace 𝔞 ⊂ 𝔥 determine the
//! piecewise-linear functions ρ_V(Y) = ½ Σ_λ m_λ |λ(Y)| on 𝔞. This crate
//! builds those weight multisets for the classical families
//! SL(n,R)/∏SL(n_k,R), SL(n,R)/SO(p,q) and SO(p,q)/∏SO(p_k,q_k) (or from
//! raw weight data), then certifies the Benoist-Kobayashi-type inequalities
//!
//! * ρ_𝔤 ≤ 2ρ_𝔮 on 𝔞 (temperedness of L²(G/H)), and
//! * ρ_𝔤 < 2ρ_𝔮 on 𝔞 ∖ {0} (square integrability of L²(G/H)),
//!
//! globally and exactly, by evaluating on a finite set of test rays covering
//! the one-dimensional faces of the hyperplane arrangement cut out by the
//! weights. Verdicts carry exact witnesses or full per-ray certificates.
//! Discrete-series conclusions (Harish-Chandra's rank criterion, the
//! subset corollary under the strict inequality, and the exact SO(p,q)
//! block classification) sit on top.
//!
//! All arithmetic is exact; there is no floating point anywhere.

#![forbid(unsafe_code)]

pub mod classify;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod jsonnum;
pub mod report;
pub mod rho;
pub mod spec;
pub mod weights;

pub use error::{Error, Result};
pub use exact::{
    enumerate_test_rays, rank, LinearFunctional, RationalVector, RaySet, DEFAULT_RAY_CAP,
};
pub use rho::{
    decide_both, decide_strict, decide_tempered, rho_eval, CriterionVerdict, EngineOptions,
    RhoFunction, VerdictStatus,
};
pub use spec::{parse_spec, Ambient, PairSpec, Subgroup};
pub use weights::{
    build_generic, build_sl_blocks, build_so_blocks, build_so_in_sl, RestrictedPairData,
    WeightMultiset,
};
