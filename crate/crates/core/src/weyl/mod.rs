//! The boson algebra `[abar, a] = 1` in normal order, the twist exponentials
//! `e^{m sigma} = (1 + h a^2)^{-m}`, and the covariant h-oscillator.

mod decompose;
mod osc;
mod poly;

use std::fmt;

use serde_json::Value;

pub use decompose::{assemble_symplecton_basis, decompose_symplecton_basis, SymplectonCoeffs};
pub use osc::{from_oscillator, osc_exp_m_sigma, to_oscillator, OscElement};
pub(crate) use poly::series_body as series_text;
pub use poly::OrderedPoly;

use crate::algebra::{powers, Algebra};
use crate::scalar::{binomial, factorial, gen_binomial, HSeries, HalfInt, RadicalSum, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("pivot for monomial a^{p} abar^{q} is not a single-term radical")]
    Pivot { p: u32, q: u32 },
}

/// Element of the boson algebra written as `sum c_{pq} a^p abar^q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement(OrderedPoly);

impl WeylElement {
    pub fn zero(order: usize) -> Self {
        WeylElement(OrderedPoly::zero(order))
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 0, HSeries::one(order))
    }

    pub fn a(order: usize) -> Self {
        Self::monomial(order, 1, 0, HSeries::one(order))
    }

    pub fn abar(order: usize) -> Self {
        Self::monomial(order, 0, 1, HSeries::one(order))
    }

    /// `c a^p abar^q`.
    pub fn monomial(order: usize, p: u32, q: u32, c: HSeries) -> Self {
        WeylElement(OrderedPoly::monomial(order, p, q, c))
    }

    pub fn scalar(c: HSeries) -> Self {
        Self::monomial(c.order(), 0, 0, c)
    }

    pub fn from_poly(poly: OrderedPoly) -> Self {
        WeylElement(poly)
    }

    pub fn poly(&self) -> &OrderedPoly {
        &self.0
    }

    pub fn coeff(&self, p: u32, q: u32) -> HSeries {
        self.0.coeff(p, q)
    }

    pub fn truncate(&self, order: usize) -> Self {
        WeylElement(self.0.truncate(order))
    }

    /// The `h^k` coefficient as an element with constant coefficients.
    pub fn h_slice(&self, k: usize) -> Self {
        WeylElement(self.0.h_slice(k))
    }

    /// The classical limit `h -> 0`.
    pub fn at_h_zero(&self) -> Self {
        self.h_slice(0)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, WeylError> {
        if self.order() != rhs.order() {
            return Err(WeylError::OrderMismatch(self.order(), rhs.order()));
        }
        Ok(self.times(rhs))
    }

    pub fn checked_commutator(&self, rhs: &Self) -> Result<Self, WeylError> {
        if self.order() != rhs.order() {
            return Err(WeylError::OrderMismatch(self.order(), rhs.order()));
        }
        Ok(self.commutator(rhs))
    }

    /// Evaluates the polynomial with `a`, `abar` replaced by images in any
    /// algebra (images are multiplied in the order `a^p abar^q`).
    pub fn eval_in<T: Algebra>(&self, a_img: &T, abar_img: &T) -> T {
        let max_p = self.0.terms().keys().map(|k| k.0).max().unwrap_or(0);
        let max_q = self.0.terms().keys().map(|k| k.1).max().unwrap_or(0);
        let ap = powers(a_img, max_p as usize);
        let bp = powers(abar_img, max_q as usize);
        let mut acc = a_img.zero_like();
        for (&(p, q), c) in self.0.terms() {
            let c = c.with_order(a_img.order());
            let term = ap[p as usize].times(&bp[q as usize]).scaled(&c);
            acc = acc.plus(&term);
        }
        acc
    }

    /// The substitution `a -> abar`, `abar -> -a`, re-normal-ordered.
    pub fn symplectic_swap(&self) -> Self {
        let order = self.order();
        let mut out = OrderedPoly::zero(order);
        for (&(p, q), c) in self.0.terms() {
            // abar^p (-a)^q
            let c = if q % 2 == 1 { -c } else { c.clone() };
            for (k, w) in product_weights(p, q) {
                out.add_term(q - k, p - k, c.scale_rational(&Rational::from_integer(w)));
            }
        }
        WeylElement(out)
    }

    pub fn render(&self) -> String {
        self.0.render("a", "abar")
    }

    pub fn to_json(&self) -> Value {
        self.0.to_json()
    }
}

/// Weights `C(q,k) C(r,k) k!` of `abar^q a^r = sum_k w_k a^{r-k} abar^{q-k}`.
fn product_weights(q: u32, r: u32) -> Vec<(u32, num_bigint::BigInt)> {
    (0..=q.min(r))
        .map(|k| {
            let w =
                binomial(q as i64, k as i64) * binomial(r as i64, k as i64) * factorial(k as u64);
            (k, w)
        })
        .collect()
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Algebra for WeylElement {
    fn order(&self) -> usize {
        self.0.order()
    }

    fn zero_like(&self) -> Self {
        Self::zero(self.order())
    }

    fn one_like(&self) -> Self {
        Self::one(self.order())
    }

    fn plus(&self, rhs: &Self) -> Self {
        WeylElement(self.0.plus(&rhs.0))
    }

    fn minus(&self, rhs: &Self) -> Self {
        WeylElement(self.0.minus(&rhs.0))
    }

    fn times(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "truncation order mismatch");
        let mut out = OrderedPoly::zero(self.order());
        for (&(p, q), c1) in self.0.terms() {
            for (&(r, s), c2) in rhs.0.terms() {
                let c = c1 * c2;
                if c.is_zero() {
                    continue;
                }
                for (k, w) in product_weights(q, r) {
                    out.add_term(
                        p + r - k,
                        q + s - k,
                        c.scale_rational(&Rational::from_integer(w)),
                    );
                }
            }
        }
        WeylElement(out)
    }

    fn scaled(&self, c: &HSeries) -> Self {
        WeylElement(self.0.scaled(c))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// `e^{m sigma} = (1 + h a^2)^{-m}` truncated at `h^order`.
pub fn exp_m_sigma(m: HalfInt, order: usize) -> WeylElement {
    let alpha = -m.to_rational();
    let mut out = OrderedPoly::zero(order);
    for n in 0..=order {
        let g = gen_binomial(&alpha, n);
        out.add_term(
            2 * n as u32,
            0,
            HSeries::monomial(order, n, RadicalSum::from_rational(g)),
        );
    }
    WeylElement(out)
}

/// The boson realization `J0 = (a abar + abar a)/2`, `J+ = -a^2/2`,
/// `J- = abar^2/2`.
pub fn sl2_generators(order: usize) -> [WeylElement; 3] {
    let half = |n: i64| HSeries::from_rational(order, Rational::new(n.into(), 2.into()));
    let j0 =
        WeylElement::monomial(order, 1, 1, HSeries::one(order)).plus(&WeylElement::scalar(half(1)));
    let jp = WeylElement::monomial(order, 2, 0, half(-1));
    let jm = WeylElement::monomial(order, 0, 2, half(1));
    [j0, jp, jm]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn q(n: i64, d: i64) -> HSeries {
        HSeries::from_rational(4, rat(n, d))
    }

    #[test]
    fn defining_commutator() {
        let a = WeylElement::a(4);
        let b = WeylElement::abar(4);
        let ba = b.times(&a);
        assert_eq!(
            ba,
            WeylElement::monomial(4, 1, 1, q(1, 1)).plus(&WeylElement::one(4))
        );
        assert_eq!(a.times(&b), WeylElement::monomial(4, 1, 1, q(1, 1)));
        assert_eq!(b.commutator(&a), WeylElement::one(4));
        let n = a.times(&b);
        let nn = n.times(&n);
        let expected = WeylElement::monomial(4, 2, 2, q(1, 1)).plus(&n);
        assert_eq!(nn, expected);
        assert!(n.commutator(&n).is_zero());
    }

    #[test]
    fn j0_commutator() {
        let [j0, _, _] = sl2_generators(3);
        let a2 = WeylElement::monomial(3, 2, 0, HSeries::one(3));
        assert_eq!(j0.commutator(&a2), a2.scaled_int(2));
    }

    #[test]
    fn sl2_relations() {
        let [j0, jp, jm] = sl2_generators(2);
        assert_eq!(jp.commutator(&jm), j0);
        assert_eq!(j0.commutator(&jp), jp.scaled_int(2));
        assert_eq!(j0.commutator(&jm), jm.scaled_int(-2));
    }

    #[test]
    fn exp_sigma_examples() {
        let h = |k: usize, n: i64, d: i64| {
            HSeries::monomial(2, k, RadicalSum::from_rational(rat(n, d)))
        };
        let e = exp_m_sigma(HalfInt::from_int(-1), 2);
        let expected = WeylElement::one(2).plus(&WeylElement::monomial(2, 2, 0, h(1, 1, 1)));
        assert_eq!(e, expected);
        let e = exp_m_sigma(HalfInt::ONE, 2);
        let expected = WeylElement::one(2)
            .plus(&WeylElement::monomial(2, 2, 0, h(1, -1, 1)))
            .plus(&WeylElement::monomial(2, 4, 0, h(2, 1, 1)));
        assert_eq!(e, expected);
        let e = exp_m_sigma(HalfInt::HALF, 1);
        let expected = WeylElement::one(1).plus(&WeylElement::monomial(
            1,
            2,
            0,
            HSeries::monomial(1, 1, RadicalSum::from_rational(rat(-1, 2))),
        ));
        assert_eq!(e, expected);
    }

    #[test]
    fn exp_sigma_inverse_pairs() {
        for t in -4..=4 {
            let m = HalfInt::from_twice(t);
            let prod = exp_m_sigma(m, 5).times(&exp_m_sigma(-m, 5));
            assert_eq!(prod, WeylElement::one(5), "m = {m}");
        }
    }

    #[test]
    fn swap_is_order_four() {
        let x =
            WeylElement::monomial(4, 2, 1, q(1, 1)).plus(&WeylElement::monomial(4, 0, 3, q(3, 2)));
        let s = x.symplectic_swap();
        let s4 = s.symplectic_swap().symplectic_swap().symplectic_swap();
        assert_eq!(s4, x);
        // a -> abar, abar -> -a sends abar a to -a abar
        let ba = WeylElement::abar(4).times(&WeylElement::a(4));
        assert_eq!(
            ba.symplectic_swap(),
            WeylElement::monomial(4, 1, 1, q(-1, 1))
        );
    }

    #[test]
    fn rendering() {
        let x = WeylElement::monomial(2, 1, 1, q(1, 1).truncate(2)).plus(&WeylElement::one(2));
        assert_eq!(x.render(), "a * abar + 1");
        let y = WeylElement::monomial(2, 2, 0, HSeries::h(2).scale_rational(&rat(-1, 2)));
        assert_eq!(y.render(), "(-1/2*h) * a^2");
        assert_eq!(WeylElement::zero(2).render(), "0");
    }
}
