//! A minimal interface shared by every noncommutative algebra in the crate.
//!
//! Closed-form builders (symplecton oscillator forms, plane bases, generating
//! functions) are written once against [`Algebra`] and evaluated in whichever
//! presentation the caller needs.

use crate::scalar::{HSeries, RadicalSum};

pub trait Algebra: Clone + PartialEq + std::fmt::Debug {
    /// Truncation order of the series coefficients.
    fn order(&self) -> usize;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn scaled(&self, c: &HSeries) -> Self;
    fn is_zero(&self) -> bool;

    fn scaled_radical(&self, c: &RadicalSum) -> Self {
        self.scaled(&HSeries::constant(self.order(), c.clone()))
    }

    fn scaled_int(&self, n: i64) -> Self {
        self.scaled(&HSeries::from_int(self.order(), n))
    }

    /// Multiplication by `h^k`.
    fn h_times(&self, k: usize) -> Self {
        self.scaled(&HSeries::monomial(self.order(), k, RadicalSum::one()))
    }

    fn scalar_like(&self, c: &HSeries) -> Self {
        self.one_like().scaled(c)
    }

    fn commutator(&self, rhs: &Self) -> Self {
        self.times(rhs).minus(&rhs.times(self))
    }

    fn pow(&self, n: usize) -> Self {
        let mut acc = self.one_like();
        for _ in 0..n {
            acc = acc.times(self);
        }
        acc
    }
}

/// Successive powers `x^0, x^1, ..., x^n`.
pub fn powers<T: Algebra>(x: &T, n: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(x.one_like());
    for k in 1..=n {
        let next = out[k - 1].times(x);
        out.push(next);
    }
    out
}

/// Product of a list of factors, left to right; `one` for an empty list.
pub fn product<T: Algebra>(one: &T, factors: impl IntoIterator<Item = T>) -> T {
    factors
        .into_iter()
        .fold(one.clone(), |acc, f| acc.times(&f))
}

/// Sum of a list of terms; `zero` for an empty list.
pub fn sum<T: Algebra>(zero: &T, terms: impl IntoIterator<Item = T>) -> T {
    terms.into_iter().fold(zero.clone(), |acc, t| acc.plus(&t))
}
