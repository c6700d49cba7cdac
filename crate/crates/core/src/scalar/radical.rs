use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use super::numeric::{gcd_u64, square_free_split, to_u64_radicand};
use super::{Rational, ScalarError};

/// A finite sum `sum q_r * sqrt(r)` over square-free radicands `r`.
///
/// Terms are sorted by radicand and never carry a zero coefficient; the
/// radicand `1` holds the rational part.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    terms: Vec<(u64, Rational)>,
}

/// `q * sqrt(n)` with the largest square factor of `n` pulled out.
pub fn radical_normalize(n: u64, q: Rational) -> RadicalSum {
    assert!(n >= 1, "radicand must be positive");
    let (s, r) = square_free_split(&BigUint::from(n));
    let coeff = q * Rational::from_integer(BigInt::from_biguint(Sign::Plus, s));
    RadicalSum::term(to_u64_radicand(&r), coeff)
}

impl RadicalSum {
    pub const fn zero() -> Self {
        RadicalSum { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::term(1, q)
    }

    /// Single term with an already square-free radicand.
    fn term(r: u64, q: Rational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            RadicalSum {
                terms: vec![(r, q)],
            }
        }
    }

    /// `sqrt(n)` for a positive integer.
    pub fn sqrt_int(n: u64) -> Self {
        radical_normalize(n, Rational::one())
    }

    /// `sqrt(q)` for a nonnegative rational, written as `sqrt(num*den)/den`.
    pub fn sqrt_rational(q: &Rational) -> Self {
        assert!(!q.is_negative(), "square root of negative rational {q}");
        if q.is_zero() {
            return Self::zero();
        }
        let num = q.numer().magnitude() * q.denom().magnitude();
        let (s, r) = square_free_split(&num);
        let coeff = Rational::new(BigInt::from_biguint(Sign::Plus, s), q.denom().clone());
        Self::term(to_u64_radicand(&r), coeff)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 1 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(u64, Rational)] {
        &self.terms
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(1, q)] => Some(q.clone()),
            _ => None,
        }
    }

    /// `(q, r)` if this is a single term `q * sqrt(r)`.
    pub fn as_single_term(&self) -> Option<(&Rational, u64)> {
        match self.terms.as_slice() {
            [(r, q)] => Some((q, *r)),
            _ => None,
        }
    }

    /// Inverse of a single-term radical: `1/(q sqrt r) = sqrt(r)/(q r)`.
    pub fn inverse_single(&self) -> Result<RadicalSum, ScalarError> {
        let (q, r) = self
            .as_single_term()
            .ok_or_else(|| ScalarError::NotSingleTerm(self.to_string()))?;
        let inv = (q * Rational::from_integer(BigInt::from(r))).recip();
        Ok(Self::term(r, inv))
    }

    /// Square of a single term, as a rational. Used for rendering prefactors.
    pub fn single_term_square(&self) -> Option<Rational> {
        self.as_single_term()
            .map(|(q, r)| q * q * Rational::from_integer(BigInt::from(r)))
    }

    pub fn scale(&self, q: &Rational) -> RadicalSum {
        if q.is_zero() {
            return Self::zero();
        }
        RadicalSum {
            terms: self.terms.iter().map(|(r, c)| (*r, c * q)).collect(),
        }
    }

    fn merge(&self, other: &RadicalSum, sign: bool) -> RadicalSum {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j >= other.terms.len()
                || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
            let take_right = i >= self.terms.len()
                || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let (r, q) = &other.terms[j];
                out.push((*r, if sign { q.clone() } else { -q }));
                j += 1;
            } else {
                let r = self.terms[i].0;
                let q = if sign {
                    &self.terms[i].1 + &other.terms[j].1
                } else {
                    &self.terms[i].1 - &other.terms[j].1
                };
                if !q.is_zero() {
                    out.push((r, q));
                }
                i += 1;
                j += 1;
            }
        }
        RadicalSum { terms: out }
    }

    fn product(&self, other: &RadicalSum) -> RadicalSum {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let ([(1, p)], [(1, q)]) = (self.terms.as_slice(), other.terms.as_slice()) {
            return Self::term(1, p * q);
        }
        let mut acc = RadicalSum::zero();
        for (r, p) in &self.terms {
            for (s, q) in &other.terms {
                let g = gcd_u64(*r, *s);
                let radicand = u128::from(r / g) * u128::from(s / g);
                let radicand = u64::try_from(radicand).expect("radicand overflow");
                let coeff = p * q * Rational::from_integer(BigInt::from(g));
                acc = acc.merge(&Self::term(radicand, coeff), true);
            }
        }
        acc
    }
}

impl Add for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        self.merge(rhs, true)
    }
}

impl Sub for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        self.merge(rhs, false)
    }
}

impl Mul for &RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: &RadicalSum) -> RadicalSum {
        self.product(rhs)
    }
}

impl Neg for &RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        RadicalSum {
            terms: self.terms.iter().map(|(r, q)| (*r, -q)).collect(),
        }
    }
}

impl Add for RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: RadicalSum) -> RadicalSum {
        &self + &rhs
    }
}

impl Sub for RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: RadicalSum) -> RadicalSum {
        &self - &rhs
    }
}

impl Mul for RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: RadicalSum) -> RadicalSum {
        &self * &rhs
    }
}

impl Neg for RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        -&self
    }
}

impl AddAssign<&RadicalSum> for RadicalSum {
    fn add_assign(&mut self, rhs: &RadicalSum) {
        *self = self.merge(rhs, true);
    }
}

impl From<Rational> for RadicalSum {
    fn from(q: Rational) -> Self {
        RadicalSum::from_rational(q)
    }
}

pub(crate) fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for RadicalSum {
    /// Canonical form `p/q*sqrt(r)` joined by ` + ` / ` - `, ascending radicand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (r, q)) in self.terms.iter().enumerate() {
            let mag = q.abs();
            if i == 0 {
                if q.is_negative() {
                    write!(f, "-")?;
                }
            } else if q.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*r, mag.is_one()) {
                (1, _) => write!(f, "{}", fmt_rational(&mag))?,
                (r, true) => write!(f, "sqrt({r})")?,
                (r, false) => write!(f, "{}*sqrt({r})", fmt_rational(&mag))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn normalize_examples() {
        assert_eq!(radical_normalize(8, int(1)), radical_normalize(2, int(2)));
        assert_eq!(
            radical_normalize(8, int(1)).as_single_term(),
            Some((&int(2), 2))
        );
        assert_eq!(
            radical_normalize(1, rat(3, 2)),
            RadicalSum::from_rational(rat(3, 2))
        );
        let s6 = radical_normalize(6, int(1));
        assert_eq!(&s6 * &s6, RadicalSum::from_int(6));
    }

    #[test]
    fn arithmetic_examples() {
        let s2 = RadicalSum::sqrt_int(2);
        let s3 = RadicalSum::sqrt_int(3);
        assert_eq!(&s2 + &s2, radical_normalize(2, int(2)));
        assert_eq!(&s2 * &s3, RadicalSum::sqrt_int(6));
        let one = RadicalSum::one();
        assert_eq!(&(&one + &s2) * &(&one - &s2), RadicalSum::from_int(-1));
    }

    #[test]
    fn sqrt_of_rational() {
        let half = RadicalSum::sqrt_rational(&rat(1, 2));
        assert_eq!(half.as_single_term(), Some((&rat(1, 2), 2)));
        assert_eq!(&half * &half, RadicalSum::from_rational(rat(1, 2)));
    }

    #[test]
    fn single_term_inverse() {
        let x = radical_normalize(3, rat(2, 5));
        assert!((&x * &x.inverse_single().unwrap()).is_one());
        assert!((&RadicalSum::one() + &RadicalSum::sqrt_int(2))
            .inverse_single()
            .is_err());
    }

    #[test]
    fn display() {
        let x = &RadicalSum::from_rational(rat(-1, 2)) + &radical_normalize(2, rat(3, 4));
        assert_eq!(x.to_string(), "-1/2 + 3/4*sqrt(2)");
        assert_eq!(RadicalSum::sqrt_int(6).to_string(), "sqrt(6)");
        assert_eq!(RadicalSum::zero().to_string(), "0");
    }

    fn small_radical() -> impl Strategy<Value = RadicalSum> {
        prop::collection::vec((1u64..12, -6i64..6, 1i64..4), 0..4).prop_map(|ts| {
            ts.into_iter().fold(RadicalSum::zero(), |acc, (r, p, q)| {
                &acc + &radical_normalize(r, rat(p, q))
            })
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_radical(), b in small_radical(), c in small_radical()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn normalize_squares(n in 1u64..=1000, p in -20i64..20, q in 1i64..20) {
            let x = radical_normalize(n, rat(p, q));
            let expected = RadicalSum::from_rational(rat(p, q) * rat(p, q) * int(n as i64));
            prop_assert_eq!(&x * &x, expected);
        }

        #[test]
        fn single_term_division(n in 1u64..500, p in 1i64..30, q in 1i64..30) {
            let x = radical_normalize(n, rat(p, q));
            prop_assert!((&x * &x.inverse_single().unwrap()).is_one());
        }
    }
}
