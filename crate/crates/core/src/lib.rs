//! Systems of parameters on projective schemes over finite fields.
//!
//! The crate decides whether homogeneous polynomials `f_0, …, f_k` are
//! parameters on a closed subscheme `X ⊆ P^r_{F_q}` (the intersection
//! `X ∩ V(f_0, …, f_k)` has dimension `dim X - (k + 1)`, the empty set having
//! dimension `-1`), measures how often random tuples are parameters, and
//! compares those measurements with zeta-function and linear-subspace
//! predictions. It also builds effective Noether normalizations by random
//! search and checks unit-valued sections over `Z` and `F_q[t]` with Smith
//! normal forms.
//!
//! Modules, bottom up:
//!
//! - [`algebra`]: finite fields, extension embeddings, sparse polynomials.
//! - [`groebner`]: Buchberger bases, projective dimension, Hilbert functions.
//! - [`scheme`]: [`ProjScheme`] and the [`is_parameters`] predicate.
//! - [`counting`]: point counts, closed-point tallies, truncated zeta values,
//!   linear-subspace censuses.
//! - [`sieve`]: Monte Carlo and exhaustive probabilities and their predictions.
//! - [`noether`]: degree bounds and the search for a full system of parameters.
//! - [`pidlattice`]: Smith normal form over `Z` and `F_q[t]`, unit-in-image checks.
//! - [`idealfile`]: the line-oriented ideal file format.

pub mod algebra;
mod budget;
pub mod counting;
mod error;
pub mod groebner;
pub mod idealfile;
mod linalg;
pub mod noether;
mod parallel;
pub mod pidlattice;
pub mod scheme;
pub mod sieve;

pub use budget::Budget;
pub use error::{Error, Result};
pub use scheme::{is_parameters, ParamTuple, ProjScheme};

/// Book chapters, compiled as doc-tests so their snippets stay runnable.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/parameters.md")]
    mod parameters {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/sieve.md")]
    mod sieve {}
    #[doc = include_str!("../../../book/src/noether.md")]
    mod noether {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    mod lattices {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
