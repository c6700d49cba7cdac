//! The terminating hypergeometric expression of `P_j^m` in the number
//! operator `N = a abar`.

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::scalar::{factorial, rat, HSeries, RadicalSum, Rational};
use crate::weyl::WeylElement;

use super::classical::validate;
use super::{SymplectonError, SymplectonLabel};

/// Which power of two multiplies the hypergeometric expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperPrefactor {
    /// `2^{-(j+m)}`, as printed.
    Printed,
    /// `2^{-(j-m)}`, the power that reproduces the defining sum.
    Corrected,
}

/// Dense univariate polynomial in `N` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
struct NPoly(Vec<Rational>);

impl NPoly {
    fn constant(c: Rational) -> Self {
        NPoly(vec![c]).trimmed()
    }

    /// `N + c`.
    fn linear(c: Rational) -> Self {
        NPoly(vec![c, Rational::one()])
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, rhs: &NPoly) -> NPoly {
        if self.is_zero() || rhs.is_zero() {
            return NPoly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (k, b) in rhs.0.iter().enumerate() {
                out[i + k] += a * b;
            }
        }
        NPoly(out).trimmed()
    }

    fn add(&self, rhs: &NPoly) -> NPoly {
        let n = self.0.len().max(rhs.0.len());
        let get = |p: &NPoly, i: usize| p.0.get(i).cloned().unwrap_or_else(Rational::zero);
        NPoly((0..n).map(|i| get(self, i) + get(rhs, i)).collect()).trimmed()
    }

    /// Quotient and remainder of long division.
    fn div_rem(&self, d: &NPoly) -> (NPoly, NPoly) {
        let mut rem = self.0.clone();
        let dd = d.0.len() - 1;
        let lead = d.0[dd].clone();
        if rem.len() <= dd {
            return (NPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            for (k, dk) in d.0.iter().enumerate() {
                rem[i + k] -= &c * dk;
            }
            quot[i] = c;
        }
        (NPoly(quot).trimmed(), NPoly(rem).trimmed())
    }

    /// `prod_{i=0}^{n-1} (s N + c + i)` for `s = +-1`.
    fn pochhammer(sign: i64, c: i64, n: i64) -> NPoly {
        let mut acc = NPoly::constant(Rational::one());
        for i in 0..n {
            let f = NPoly(vec![
                Rational::from_integer((c + i).into()),
                Rational::from_integer(sign.into()),
            ]);
            acc = acc.mul(&f);
        }
        acc
    }
}

/// The hypergeometric sum as a polynomial in `N`, before the prefactor and
/// the trailing `abar^{-2m}`:
/// `(N+j-m)!/(N-2m)! * 2F1(-N+2m, -j+m; -N-j+m; -1)`.
fn hypergeometric_polynomial(label: SymplectonLabel) -> Result<NPoly, SymplectonError> {
    let lo = (label.j - label.m).int();
    let hi = (label.j + label.m).int();
    let two_m = label.m.twice() as i64;
    // (N+j-m)!/(N-2m)! = prod_{i=1}^{j+m} (N - 2m + i)
    let mut lead = NPoly::constant(Rational::one());
    for i in 1..=hi {
        lead = lead.mul(&NPoly::linear(Rational::from_integer((i - two_m).into())));
    }
    let mut acc = NPoly(Vec::new());
    for n in 0..=lo {
        // (-N+2m)_n (-j+m)_n (-1)^n / (n! (-N-j+m)_n)
        let a_n = NPoly::pochhammer(-1, two_m, n);
        let b_n: Rational = (0..n)
            .map(|i| Rational::from_integer((i - lo).into()))
            .product();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let scalar =
            b_n * Rational::from_integer(sign.into()) / Rational::from_integer(factorial(n as u64));
        let num = lead.mul(&a_n).mul(&NPoly::constant(scalar));
        let den = NPoly::pochhammer(-1, -lo, n);
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(SymplectonError::NonPolynomial { label });
        }
        acc = acc.add(&q);
    }
    Ok(acc)
}

/// `P_j^m` for `m <= 0` from the hypergeometric expression, with `N` placed
/// to the left of `abar^{-2m}`.
pub fn hypergeometric_form(
    label: SymplectonLabel,
    prefactor: HyperPrefactor,
    order: usize,
) -> Result<WeylElement, SymplectonError> {
    validate(label)?;
    if label.m.twice() > 0 {
        return Err(SymplectonError::PositiveWeight(label));
    }
    let poly = hypergeometric_polynomial(label)?;
    let (j, m) = (label.j, label.m);
    let power = match prefactor {
        HyperPrefactor::Printed => (j + m).int(),
        HyperPrefactor::Corrected => (j - m).int(),
    };
    let radicand = Rational::new(
        factorial(j.twice() as u64),
        factorial((j + m).int() as u64) * factorial((j - m).int() as u64),
    );
    let c = RadicalSum::sqrt_rational(&radicand).scale(&rat(1, 1 << power));
    let n_op = WeylElement::a(order).times(&WeylElement::abar(order));
    let mut acc = WeylElement::zero(order);
    let mut n_pow = WeylElement::one(order);
    for coeff in &poly.0 {
        if !coeff.is_zero() {
            acc = acc.plus(&n_pow.scaled(&HSeries::from_rational(order, coeff.clone())));
        }
        n_pow = n_pow.times(&n_op);
    }
    let tail = WeylElement::abar(order).pow((-m.twice()) as usize);
    Ok(acc.times(&tail).scaled_radical(&c))
}

/// `P_j^m` for any weight: `m <= 0` directly, `m > 0` through
/// `P_j^m = (-1)^{j+m} P_j^{-m}(abar, -a)`.
pub fn hypergeometric_any(
    label: SymplectonLabel,
    prefactor: HyperPrefactor,
    order: usize,
) -> Result<WeylElement, SymplectonError> {
    if label.m.twice() <= 0 {
        return hypergeometric_form(label, prefactor, order);
    }
    let mirror = SymplectonLabel {
        j: label.j,
        m: -label.m,
    };
    let swapped = hypergeometric_form(mirror, prefactor, order)?.symplectic_swap();
    Ok(if (label.j + label.m).int() % 2 == 0 {
        swapped
    } else {
        swapped.scaled_int(-1)
    })
}

/// The simplified sum `sum_n C(j-m, n) prod_{i=1}^{j+m} (N - 2m - n + i)` that
/// the hypergeometric polynomial reduces to.
#[cfg(test)]
fn simplified_polynomial(label: SymplectonLabel) -> NPoly {
    let lo = (label.j - label.m).int();
    let hi = (label.j + label.m).int();
    let two_m = label.m.twice() as i64;
    let mut acc = NPoly(Vec::new());
    for n in 0..=lo {
        let mut t = NPoly::constant(Rational::from_integer(crate::scalar::binomial(lo, n)));
        for i in 1..=hi {
            t = t.mul(&NPoly::linear(Rational::from_integer(
                (i - two_m - n).into(),
            )));
        }
        acc = acc.add(&t);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::HalfInt;
    use crate::symplecton::{classical_symplecton, Form};

    fn lbl(tj: i32, tm: i32) -> SymplectonLabel {
        SymplectonLabel::new(HalfInt::from_twice(tj), HalfInt::from_twice(tm)).unwrap()
    }

    #[test]
    fn reduces_to_simplified_sum() {
        for tj in 0..=6 {
            for tm in (-tj..=0).step_by(2) {
                let l = lbl(tj, tm);
                assert_eq!(
                    hypergeometric_polynomial(l).unwrap(),
                    simplified_polynomial(l),
                    "{l}"
                );
            }
        }
    }

    #[test]
    fn examples() {
        let f = |tj, tm| hypergeometric_form(lbl(tj, tm), HyperPrefactor::Corrected, 1).unwrap();
        assert_eq!(f(1, -1), WeylElement::abar(1));
        assert_eq!(f(2, -2), WeylElement::abar(1).pow(2));
        assert_eq!(f(2, 0), classical_symplecton(lbl(2, 0), Form::A, 1));
    }

    #[test]
    fn all_weights_match_defining_sum() {
        for l in SymplectonLabel::all_up_to(HalfInt::from_int(2)) {
            let h = hypergeometric_any(l, HyperPrefactor::Corrected, 0).unwrap();
            assert_eq!(h, classical_symplecton(l, Form::A, 0), "{l}");
        }
    }

    #[test]
    fn printed_prefactor_doubles_spin_half() {
        let p = hypergeometric_form(lbl(1, -1), HyperPrefactor::Printed, 1).unwrap();
        assert_eq!(p, WeylElement::abar(1).scaled_int(2));
    }

    #[test]
    fn rejects_positive_weight() {
        assert!(matches!(
            hypergeometric_form(lbl(2, 2), HyperPrefactor::Corrected, 1),
            Err(SymplectonError::PositiveWeight(_))
        ));
    }
}
