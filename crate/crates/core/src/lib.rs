//! Analysis toolkit for finite non-degenerate symmetric set-theoretic
//! solutions of the quantum Yang-Baxter equation.
//!
//! The crate validates the defining axioms of a solution `(X, S)`, builds
//! the Garside structure of its structure monoid (complement tables, word
//! reversing, the divisor lattice of the Garside element `Δ`), computes
//! invariant subsets and standard parabolic subgroups, decides
//! decomposability and Δ-purity, searches for foldings, and exhaustively
//! enumerates small solutions up to isomorphism as an independent oracle
//! for all of the above.
//!
//! Entry points:
//! - [`solution::SolutionTable`]: the map `S` on index pairs, with the
//!   axiom checks and presentation conversions.
//! - [`garside::DivisorLattice`]: the `2^n` divisors of `Δ`, indexed by
//!   atom subsets on both sides, plus the word problem.
//! - [`parabolic`]: invariant subset / standard parabolic correspondence,
//!   orbits, Δ-classes.
//! - [`folding`]: Garside generating sets, induced solutions, foldings.
//! - [`census`]: exhaustive enumeration and brute-force oracles.
//! - [`document`] and [`report`]: the JSON interchange formats used by
//!   the `ybx` command-line tool.
//!
//! # Quick start
//!
//! ```
//! use ybx::garside::DivisorLattice;
//! use ybx::{fixtures, parabolic};
//!
//! // A five-element solution with two f-orbits.
//! let s = fixtures::two_orbit_five();
//! assert!(s.is_nondegenerate() && s.is_symmetric());
//!
//! // Its structure monoid has 2^5 divisors of Δ, and Δ = x1⁴x5.
//! let lat = DivisorLattice::build(&s).unwrap();
//! assert_eq!(lat.simple_count(), 32);
//! assert_eq!(lat.delta().word().to_one_based(), vec![1, 1, 1, 1, 5]);
//!
//! // Invariant subsets correspond to standard parabolic subgroups.
//! assert!(parabolic::verify_parabolic_correspondence(&s, &lat).unwrap());
//! assert!(parabolic::is_decomposable(&s).unwrap());
//! ```

pub mod census;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod folding;
pub mod garside;
pub mod mask;
pub mod parabolic;
pub mod perm;
pub mod report;
pub mod solution;

pub use error::{Error, Result};
