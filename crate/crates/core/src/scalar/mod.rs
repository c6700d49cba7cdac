//! Exact coefficient arithmetic.
//!
//! Every number that appears in this crate is a finite sum of rational
//! multiples of square roots of square-free integers ([`RadicalSum`]), and
//! every quantity that depends on the deformation parameter is a truncated
//! formal power series in `h` with such coefficients ([`HSeries`]).

mod halfint;
mod numeric;
mod radical;
mod series;

pub use halfint::{HalfInt, ParseHalfIntError};
pub use numeric::{
    binomial, factorial, gen_binomial, int, rat, rising_even_product, square_free_split,
};
pub use radical::{radical_normalize, RadicalSum};
pub use series::HSeries;

use thiserror::Error;

/// Arbitrary precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Default truncation order for series computations.
pub const DEFAULT_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series is not divisible by h^{power}: coefficient of h^{index} is nonzero")]
    NotDivisible { power: usize, index: usize },
    #[error("cannot divide by h^{power} at truncation order {order}")]
    OrderUnderflow { power: usize, order: usize },
    #[error("expected a single-term radical, found {0}")]
    NotSingleTerm(String),
    #[error("division by zero")]
    DivisionByZero,
}
