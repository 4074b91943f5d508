//! Combinatorics of almost reverse lexicographic (ARL) monomial ideals.
//!
//! The crate works entirely with exponent-vector monomials over a fixed
//! ambient ring `k[x_1, ..., x_n]` and provides:
//!
//! * the degree reverse lexicographic order on monomials and integer tuples
//!   ([`monomial`]),
//! * monomial ideals with canonical minimal generating sets, the `f_i`
//!   generator-degree functions, and the index sets that parameterize
//!   minimal generators by their largest variable ([`ideal`]),
//! * ARL checking by definition and by the finite pairwise criterion, and
//!   the generator-augmentation step that extends an ARL ideal by new
//!   last-variable generators ([`arl`]),
//! * exact Hilbert function evaluation by standard-monomial enumeration,
//!   with the structural identities relating Hilbert drops to generator
//!   counts ([`hilbert`]),
//! * the derived-sequence calculus (`h^(i)`, the descent degrees `r_i`,
//!   depth `D`, and the unimodal-at-each-tail predicate) ([`sequence`]),
//! * the synthesis algorithm that builds an ARL ideal realizing any
//!   unimodal-at-each-tail sequence as its Hilbert function ([`synthesis`]),
//! * exact truncated power-series arithmetic for Froberg sequences
//!   `|n; d_1, ..., d_m|` and their realization as ARL ideals ([`froberg`]).
//!
//! All arithmetic is exact; overflow in series coefficients is reported as
//! an error rather than wrapped.
//!
//! ```
//! use arl_core::{check_arl_definition, hilbert_values, synthesize, HilbertSeq, Tail};
//!
//! let h = HilbertSeq::new(vec![1, 2, 3, 2, 1, 0], Tail::Zero)?;
//! let (ideal, trace) = synthesize(&h, 16)?;
//! assert_eq!(ideal.to_string(), "(x1^3, x1^2*x2, x1*x2^3, x2^5)");
//! assert_eq!(trace.top_steps().len(), 3);
//! assert!(check_arl_definition(&ideal).is_arl);
//! assert_eq!(hilbert_values(&ideal, 6), vec![1, 2, 3, 2, 1, 0, 0]);
//! # Ok::<(), arl_core::Error>(())
//! ```

pub mod arl;
pub mod error;
pub mod froberg;
pub mod hilbert;
pub mod ideal;
pub mod monomial;
pub mod sequence;
pub mod synthesis;

#[cfg(test)]
mod test_fixtures;

pub use arl::{check_arl_criterion, check_arl_definition, ArlVerdict, AugmentationPlan};
pub use error::{Error, Result};
pub use froberg::{froberg_to_ideal, froberg_values, FroebergSpec, TailClass, TruncatedSeries};
pub use hilbert::{hilbert_function, hilbert_values};
pub use ideal::{FValue, LastGenerator, MonomialIdeal};
pub use monomial::Monomial;
pub use sequence::{HilbertSeq, Tail, TailAnalysis};
pub use synthesis::{synthesize, SynthesisTrace};
