//! Symbolic kernel for iterated skew (Ore) polynomial rings
//! `C[y_1; tau_1, delta_1] ... [y_n; tau_n, delta_n]` and their skew power
//! series completions.
//!
//! * [`scalar`]: exact rationals and the base ring `C` with its valuation.
//! * [`element`], [`presentation`]: normal-form polynomials and the Ore
//!   recursion for products, `tau_l` and `delta_l`.
//! * [`oracle`]: independent word-rewriting normal form.
//! * [`check`]: well-definedness and filtration hypothesis checks.
//! * [`completion`]: truncated series arithmetic, extended skew derivations,
//!   inversion, symbols and nilpotency probes.
//! * [`catalog`]: quantum matrices and Horton's `K_n`.
//! * [`parser`], [`config`], [`series_file`]: text formats.
//! * [`selftest`]: the seeded property suite behind `skew selftest`.
//!
//! Batch work runs on rayon with the default `parallel` feature and on a
//! plain iterator without it; see [`par::Exec`].

pub mod catalog;
pub mod check;
pub mod completion;
pub mod config;
pub mod element;
pub mod error;
pub mod oracle;
pub mod par;
pub mod parser;
pub mod presentation;
pub mod random;
pub mod scalar;
pub mod selftest;
pub mod series_file;

pub use completion::{Nilpotency, SeriesProbe, Symbol, TruncatedSeries};
pub use element::{monomial_degree, Element, Monomial};
pub use error::{Error, Result};
pub use par::Exec;
pub use presentation::{Presentation, PresentationBuilder, RuleSource};
pub use scalar::{BaseCoeff, BaseRingKind, Degree, Rational};
