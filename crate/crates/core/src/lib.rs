//! Exact graph-extendibility values for Werner, isotropic and Brauer states.
//!
//! The crate has two halves that check each other:
//!
//! * closed-form values and exact one-dimensional dual solvers
//!   ([`extendibility`]), computed in rational arithmetic;
//! * independent numerical oracles built from the matrix action of
//!   permutations and Brauer diagrams on `(C^d)^{⊗n}` ([`diagram`],
//!   [`graphs`]) and diagonalized in floating point ([`spectral`]).
//!
//! Young diagram combinatorics live in [`partitions`].

pub mod budget;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod extendibility;
pub mod graphs;
pub mod operator;
pub mod partitions;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};

/// Exact rational scalar used for every operator entry and closed-form value.
pub type Rational = num_rational::Ratio<i128>;

/// Shorthand for building a [`Rational`] from a numerator and denominator.
pub fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

/// Shorthand for an integral [`Rational`].
pub fn int(value: i128) -> Rational {
    Rational::from_integer(value)
}
