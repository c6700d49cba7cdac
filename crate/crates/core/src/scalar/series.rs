use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::{RadicalSum, Rational, ScalarError};

static ZERO: RadicalSum = RadicalSum::zero();

/// Truncated formal power series `c_0 + c_1 h + ... + c_H h^H`.
///
/// Coefficients past the last nonzero one are not stored; [`HSeries::coeff`]
/// reads them as zero up to the truncation order and never beyond it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HSeries {
    order: usize,
    coeffs: Vec<RadicalSum>,
}

impl HSeries {
    pub fn zero(order: usize) -> Self {
        HSeries {
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, RadicalSum::one())
    }

    pub fn constant(order: usize, c: RadicalSum) -> Self {
        Self::from_coeffs(order, vec![c])
    }

    pub fn from_rational(order: usize, q: Rational) -> Self {
        Self::constant(order, RadicalSum::from_rational(q))
    }

    pub fn from_int(order: usize, n: i64) -> Self {
        Self::constant(order, RadicalSum::from_int(n))
    }

    /// `c * h^k`, zero when `k` exceeds the truncation order.
    pub fn monomial(order: usize, k: usize, c: RadicalSum) -> Self {
        if k > order {
            return Self::zero(order);
        }
        let mut coeffs = vec![RadicalSum::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(order, coeffs)
    }

    /// The deformation parameter itself.
    pub fn h(order: usize) -> Self {
        Self::monomial(order, 1, RadicalSum::one())
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<RadicalSum>) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.last().is_some_and(RadicalSum::is_zero) {
            coeffs.pop();
        }
        HSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &RadicalSum {
        assert!(
            k <= self.order,
            "coefficient h^{k} beyond truncation order {}",
            self.order
        );
        self.coeffs.get(k).unwrap_or(&ZERO)
    }

    /// Stored coefficients (trailing zeros dropped).
    pub fn coeffs(&self) -> &[RadicalSum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Highest power with nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power with nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Value at `h = 0`.
    pub fn at_zero(&self) -> RadicalSum {
        self.coeff(0).clone()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.clone())
    }

    pub fn with_order(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot raise truncation order");
        self.truncate(order)
    }

    fn check(&self, rhs: &HSeries) -> Result<(), ScalarError> {
        if self.order == rhs.order {
            Ok(())
        } else {
            Err(ScalarError::OrderMismatch {
                left: self.order,
                right: rhs.order,
            })
        }
    }

    pub fn checked_add(&self, rhs: &HSeries) -> Result<HSeries, ScalarError> {
        self.check(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeffs.get(k).unwrap_or(&ZERO) + rhs.coeffs.get(k).unwrap_or(&ZERO))
            .collect();
        Ok(Self::from_coeffs(self.order, coeffs))
    }

    pub fn checked_sub(&self, rhs: &HSeries) -> Result<HSeries, ScalarError> {
        self.check(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeffs.get(k).unwrap_or(&ZERO) - rhs.coeffs.get(k).unwrap_or(&ZERO))
            .collect();
        Ok(Self::from_coeffs(self.order, coeffs))
    }

    /// Cauchy product truncated at the common order.
    pub fn checked_mul(&self, rhs: &HSeries) -> Result<HSeries, ScalarError> {
        self.check(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(self.order));
        }
        let n = (self.coeffs.len() + rhs.coeffs.len() - 1).min(self.order + 1);
        let mut coeffs = vec![RadicalSum::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(Self::from_coeffs(self.order, coeffs))
    }

    /// `s / h^k`, lowering the truncation order by `k`.
    pub fn divide_exact(&self, k: usize) -> Result<HSeries, ScalarError> {
        if k > self.order {
            return Err(ScalarError::OrderUnderflow {
                power: k,
                order: self.order,
            });
        }
        if let Some(index) = self.coeffs.iter().take(k).position(|c| !c.is_zero()) {
            return Err(ScalarError::NotDivisible { power: k, index });
        }
        let coeffs = self.coeffs.iter().skip(k).cloned().collect();
        Ok(Self::from_coeffs(self.order - k, coeffs))
    }

    /// Multiplication by `h^k` (keeps the order).
    pub fn shift(&self, k: usize) -> HSeries {
        let mut coeffs = vec![RadicalSum::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(self.order, coeffs)
    }

    pub fn scale(&self, c: &RadicalSum) -> HSeries {
        Self::from_coeffs(self.order, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn scale_rational(&self, q: &Rational) -> HSeries {
        Self::from_coeffs(self.order, self.coeffs.iter().map(|x| x.scale(q)).collect())
    }

    /// If the series is `c h^k` for a single power, returns `(k, c)`.
    pub fn as_monomial(&self) -> Option<(usize, &RadicalSum)> {
        let k = self.valuation()?;
        (k + 1 == self.coeffs.len()).then(|| (k, &self.coeffs[k]))
    }

    /// Array indexed by h-power of term arrays `[num, den, radicand]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..=self.order)
                .map(|k| {
                    Value::Array(
                        self.coeff(k)
                            .terms()
                            .iter()
                            .map(|(r, q)| json!([big_json(q.numer()), big_json(q.denom()), r]))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

fn big_json(n: &num_bigint::BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

impl Add for &HSeries {
    type Output = HSeries;
    fn add(self, rhs: &HSeries) -> HSeries {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &HSeries {
    type Output = HSeries;
    fn sub(self, rhs: &HSeries) -> HSeries {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &HSeries {
    type Output = HSeries;
    fn mul(self, rhs: &HSeries) -> HSeries {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &HSeries {
    type Output = HSeries;
    fn neg(self) -> HSeries {
        HSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for HSeries {
    /// `c0 + c1*h + ... (mod h^{H+1})`; zero coefficients are skipped.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let body = if c.terms().len() > 1 {
                format!("({c})")
            } else {
                c.to_string()
            };
            match k {
                0 => write!(f, "{body}")?,
                1 => write!(f, "{body}*h")?,
                _ => write!(f, "{body}*h^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " (mod h^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, radical_normalize, rat};
    use proptest::prelude::*;

    fn poly(order: usize, cs: &[i64]) -> HSeries {
        HSeries::from_coeffs(order, cs.iter().map(|&c| RadicalSum::from_int(c)).collect())
    }

    #[test]
    fn geometric_identity() {
        let a = poly(2, &[1, -1]);
        let b = poly(2, &[1, 1, 1]);
        assert!((&a * &b).is_one());
    }

    #[test]
    fn truncation() {
        let h = HSeries::h(1);
        assert!((&h * &h).is_zero());
    }

    #[test]
    fn radical_sum() {
        let s2 = RadicalSum::sqrt_int(2);
        let a = HSeries::from_coeffs(3, vec![RadicalSum::one(), s2.clone()]);
        let b = HSeries::from_coeffs(3, vec![RadicalSum::one(), -&s2]);
        assert_eq!(&a + &b, HSeries::from_int(3, 2));
    }

    #[test]
    fn order_mismatch() {
        let e = HSeries::one(2).checked_mul(&HSeries::one(3)).unwrap_err();
        assert_eq!(e, ScalarError::OrderMismatch { left: 2, right: 3 });
    }

    #[test]
    fn exact_division() {
        let s = poly(4, &[0, 1, 1]);
        let q = s.divide_exact(1).unwrap();
        assert_eq!(q, poly(3, &[1, 1]));
        assert!(matches!(
            poly(4, &[1, 1]).divide_exact(1),
            Err(ScalarError::NotDivisible { power: 1, index: 0 })
        ));
        assert_eq!(HSeries::zero(4).divide_exact(2).unwrap(), HSeries::zero(2));
    }

    #[test]
    fn display_and_json() {
        let s = HSeries::from_coeffs(
            2,
            vec![
                RadicalSum::one(),
                RadicalSum::zero(),
                radical_normalize(2, rat(1, 2)),
            ],
        );
        assert_eq!(s.to_string(), "1 + 1/2*sqrt(2)*h^2 (mod h^3)");
        assert_eq!(s.to_json().to_string(), "[[[1,1,1]],[],[[1,2,2]]]");
        assert_eq!(HSeries::zero(0).to_string(), "0 (mod h^1)");
    }

    #[test]
    fn monomial_beyond_order() {
        assert!(HSeries::monomial(2, 3, RadicalSum::one()).is_zero());
        assert_eq!(
            HSeries::monomial(3, 2, RadicalSum::from_int(5)).as_monomial(),
            Some((2, &RadicalSum::from_int(5)))
        );
        let _ = int(0);
    }

    proptest! {
        #[test]
        fn mul_matches_polynomial_product(
            a in prop::collection::vec(-5i64..5, 0..6),
            b in prop::collection::vec(-5i64..5, 0..6),
            order in 0usize..8,
        ) {
            let mut full = vec![0i64; a.len() + b.len()];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    full[i + j] += x * y;
                }
            }
            prop_assert_eq!(&poly(order, &a) * &poly(order, &b), poly(order, &full));
        }
    }
}
