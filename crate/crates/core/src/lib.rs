//! Exact factorization of binary distributions whose support is a
//! distributive lattice.
//!
//! A distribution on `m` binary variables is a vector `p ∈ Q^{2^[m]}`
//! indexed by subsets `S ⊆ [m]` (the variables equal to 1). When the
//! support of `p` is a *natural* distributive lattice `L = J(P)` and the
//! graph `G` contains the Hasse diagram of `P`, `p` factors according to
//! `G` exactly when it satisfies the pairwise Markov binomials of `G`.
//! [`factorize`] makes that constructive and returns a checkable
//! certificate, and failures come back as [`Error`] variants that name the
//! offending set or cover pair.
//!
//! ```
//! use hclattice::{factorize, order_ideals, verify_certificate, Graph, Poset};
//! use hclattice::oracle::lattice_distribution;
//!
//! let poset = Poset::from_covers(4, &[(2, 1), (2, 3), (4, 3)])?;
//! let lattice = order_ideals(&poset);
//! let g = Graph::cycle(4)?;
//! let p = lattice_distribution(&lattice, &g, 5)?;
//! let cert = factorize(&p, &g)?;
//! assert!(verify_certificate(&cert, &p, &g));
//! # Ok::<(), hclattice::Error>(())
//! ```
//!
//! All arithmetic is exact ([`Rational`] is an arbitrary-precision fraction).

pub mod ci;
pub mod combinat;
pub mod distribution;
pub mod error;
pub mod factorization;
pub mod hibi;
pub mod io;
pub mod oracle;
pub mod rng;
pub mod toric;

/// Largest supported ground set.
pub const MAX_GROUND: usize = 16;

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

pub use ci::{
    ci_binomials, eval_binomial, global_binomials, pairwise_binomials, pairwise_statements,
    satisfies_all, saturated_global_statements, Binomial, CIStatement, CheckReport,
};
pub use combinat::{
    comparability_graph, lattice_close, order_ideals, Cliques, DistributiveLattice, Graph, Poset,
    SubsetMask,
};
pub use distribution::Distribution;
pub use error::{Error, Result};
pub use factorization::{
    clique_closures, dimension_counts, factorize, to_standard_params, verify_certificate,
    CliqueClosureSet, FactorizationCertificate,
};
pub use hibi::{check_hibi_equality, hibi_generators, hibi_matrix, lattice_model_matrix};
pub use toric::{
    apply_param, in_toric_kernel, is_facial, is_feasible, matrix_ag, matrix_bg, realize_support,
    same_row_space, Faciality, Feasibility, LinearFunctional, ParamMatrix, ParamPoint, RowLabel,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    mod lattices {}
    #[doc = include_str!("../../../book/src/independence.md")]
    mod independence {}
    #[doc = include_str!("../../../book/src/parametrizations.md")]
    mod parametrizations {}
    #[doc = include_str!("../../../book/src/factorization.md")]
    mod factorization {}
    #[doc = include_str!("../../../book/src/hibi.md")]
    mod hibi {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
