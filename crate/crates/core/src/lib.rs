//! Solution concepts for finite abstract decision problems `(X, R)`.
//!
//! Given alternatives `0..n` and a dominance relation `R` (an edge `u v`
//! means "u dominates v"), this crate computes the core, the Schwartz set,
//! and enumerates Von Neumann–Morgenstern stable sets, generalized stable
//! sets, m-stable sets and w-stable sets. The w-stable family is read off
//! the contraction of `(X, R)`: a non-empty set is w-stable exactly when it
//! takes at most one alternative from each maximal strong component and
//! nothing else. The [`oracle`] module re-derives every concept by brute
//! force so the structural paths can be checked against the definitions.
//!
//! ```
//! use stableset::{DecisionProblem, solutions::Analysis};
//!
//! // a 3-cycle plus an isolated alternative
//! let p = DecisionProblem::new(4, [(0, 1), (1, 2), (2, 0)]).unwrap();
//! let a = Analysis::new(&p);
//! assert_eq!(a.count_w_stable().to_string(), "7");
//! assert_eq!(a.w_stable_sets(3).member_sets(), vec![vec![0], vec![0, 3], vec![1]]);
//! ```

pub mod cli;
pub mod contraction;
pub mod corpus;
pub mod error;
pub mod io;
mod lex;
pub mod oracle;
pub mod relation;
pub mod selftest;
pub mod solutions;
pub mod witness;

pub use contraction::{contraction, maximal_components, strong_components, Condensation, MaximalFamily};
pub use error::{Error, Result};
pub use relation::{transitive_closure, DecisionProblem, Reachability, StrictRelation};
pub use solutions::{Analysis, Concept, Enumeration, SolutionSet};
