//! Exact computations for weighted homogeneous complex surface singularities.
//!
//! * [`weights`]: weight vectors, normalization, weights of Brieskorn
//!   hypersurfaces.
//! * [`cyclic_quotient`]: invariant generators of `C^2 / mu_n`, their
//!   diagonal weights, and the perturbed action separating a lowest
//!   generator.
//! * [`link_topology`]: Seifert invariants of Brieskorn links.
//! * [`classify`]: conicalness and bi-Lipschitz verdicts with re-checkable
//!   certificates.
//! * [`cli`]: the `wsing` command-line front end.
//!
//! All arithmetic is exact. There is no floating point anywhere.

pub mod classify;
pub mod cli;
pub mod cyclic_quotient;
pub mod error;
pub mod exactnum;
pub mod link_topology;
pub mod weights;

pub use classify::{
    compare_weights, conical_cyclic, conical_from_weights, corollary_report, CompareKind,
    CompareVerdict, ConicalKind, ConicalVerdict, Mechanism,
};
pub use cyclic_quotient::{
    covering_data, diagonal_weights, invariant_monomials, lowest_generator, minimal_generators,
    separating_action, CoveringData, CyclicQuotient, GeneratorSet, InvariantMonomial,
    SeparatingAction,
};
pub use error::{Error, Result};
pub use exactnum::{cmp_ratio, Ratio};
pub use link_topology::{same_link, seifert_data, LinkComparison, SeifertData};
pub use weights::{brieskorn_weights, BrieskornTriple, WeightVector};
