use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;

use super::poly::OrderedPoly;
use super::{exp_m_sigma, WeylElement};
use crate::algebra::Algebra;
use crate::scalar::{gen_binomial, rat, HSeries, RadicalSum, Rational};

/// Element of the covariant h-oscillator algebra `[abar_h, a_h] = 1 - h a_h^2`
/// in normal order `a_h^p abar_h^q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OscElement(OrderedPoly);

/// Normal form of `abar^q a^r`: monomial `(p', q')` with an integer
/// polynomial in `h` (index = power of h).
type Reorder = Vec<((u32, u32), Vec<BigInt>)>;

fn reorder_cache() -> &'static Mutex<HashMap<(u32, u32), Arc<Reorder>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<Reorder>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `abar a^r = a^r abar + r a^{r-1} - r h a^{r+1}`, iterated.
fn reorder(q: u32, r: u32) -> Arc<Reorder> {
    if let Some(hit) = reorder_cache().lock().unwrap().get(&(q, r)) {
        return hit.clone();
    }
    let result: Reorder = if q == 0 {
        vec![((r, 0), vec![BigInt::from(1)])]
    } else {
        let mut acc: BTreeMap<(u32, u32), Vec<BigInt>> = BTreeMap::new();
        let add = |acc: &mut BTreeMap<(u32, u32), Vec<BigInt>>,
                   src: &Reorder,
                   scale: i64,
                   shift: usize,
                   extra_q: u32| {
            for ((p, qq), poly) in src.iter() {
                let slot = acc.entry((*p, qq + extra_q)).or_default();
                if slot.len() < poly.len() + shift {
                    slot.resize(poly.len() + shift, BigInt::zero());
                }
                for (i, c) in poly.iter().enumerate() {
                    slot[i + shift] += c * scale;
                }
            }
        };
        // abar^q a^r = abar^{q-1} (a^r abar + r a^{r-1} - r h a^{r+1})
        add(&mut acc, &reorder(q - 1, r), 1, 0, 1);
        if r > 0 {
            add(&mut acc, &reorder(q - 1, r - 1), r as i64, 0, 0);
            add(&mut acc, &reorder(q - 1, r + 1), -(r as i64), 1, 0);
        }
        acc.into_iter()
            .filter_map(|(k, mut v)| {
                while v.last().is_some_and(|c| c.is_zero()) {
                    v.pop();
                }
                (!v.is_empty()).then_some((k, v))
            })
            .collect()
    };
    let arc = Arc::new(result);
    reorder_cache().lock().unwrap().insert((q, r), arc.clone());
    arc
}

fn int_poly_series(order: usize, poly: &[BigInt]) -> HSeries {
    let coeffs = poly
        .iter()
        .take(order + 1)
        .map(|c| RadicalSum::from_rational(Rational::from_integer(c.clone())))
        .collect();
    HSeries::from_coeffs(order, coeffs)
}

impl OscElement {
    pub fn zero(order: usize) -> Self {
        OscElement(OrderedPoly::zero(order))
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 0, HSeries::one(order))
    }

    pub fn a_h(order: usize) -> Self {
        Self::monomial(order, 1, 0, HSeries::one(order))
    }

    pub fn abar_h(order: usize) -> Self {
        Self::monomial(order, 0, 1, HSeries::one(order))
    }

    pub fn monomial(order: usize, p: u32, q: u32, c: HSeries) -> Self {
        OscElement(OrderedPoly::monomial(order, p, q, c))
    }

    pub fn scalar(c: HSeries) -> Self {
        Self::monomial(c.order(), 0, 0, c)
    }

    pub fn from_poly(poly: OrderedPoly) -> Self {
        OscElement(poly)
    }

    pub fn poly(&self) -> &OrderedPoly {
        &self.0
    }

    pub fn coeff(&self, p: u32, q: u32) -> HSeries {
        self.0.coeff(p, q)
    }

    pub fn truncate(&self, order: usize) -> Self {
        OscElement(self.0.truncate(order))
    }

    pub fn h_slice(&self, k: usize) -> Self {
        OscElement(self.0.h_slice(k))
    }

    pub fn render(&self) -> String {
        self.0.render("a_h", "abar_h")
    }

    pub fn to_json(&self) -> Value {
        self.0.to_json()
    }
}

impl fmt::Display for OscElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Algebra for OscElement {
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
        OscElement(self.0.plus(&rhs.0))
    }

    fn minus(&self, rhs: &Self) -> Self {
        OscElement(self.0.minus(&rhs.0))
    }

    fn times(&self, rhs: &Self) -> Self {
        let order = self.order();
        assert_eq!(order, rhs.order(), "truncation order mismatch");
        let mut out = OrderedPoly::zero(order);
        for (&(p, q), c1) in self.0.terms() {
            for (&(r, s), c2) in rhs.0.terms() {
                let c = c1 * c2;
                if c.is_zero() {
                    continue;
                }
                for ((pp, qq), poly) in reorder(q, r).iter() {
                    out.add_term(p + pp, qq + s, &c * &int_poly_series(order, poly));
                }
            }
        }
        OscElement(out)
    }

    fn scaled(&self, c: &HSeries) -> Self {
        OscElement(self.0.scaled(c))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// `(1 + c x)^alpha` as a series in `h`, for `x` a power of one generator.
fn binomial_in<T: Algebra>(one: &T, x: &T, c: &Rational, alpha: &Rational) -> T {
    let order = one.order();
    let mut acc = one.zero_like();
    let mut xp = one.clone();
    for n in 0..=order {
        let coeff = gen_binomial(alpha, n) * num_traits::pow(c.clone(), n);
        let term = xp.scaled(&HSeries::monomial(
            order,
            n,
            RadicalSum::from_rational(coeff),
        ));
        acc = acc.plus(&term);
        xp = xp.times(x);
    }
    acc
}

/// Rewrites a boson polynomial in the covariant oscillators:
/// `a = a_h (1 - h a_h^2)^{-1/2}`, `abar = abar_h (1 - h a_h^2)^{1/2}`.
pub fn to_oscillator(w: &WeylElement) -> OscElement {
    let order = w.order();
    let one = OscElement::one(order);
    let x = OscElement::monomial(order, 2, 0, HSeries::one(order));
    let neg = rat(-1, 1);
    let a_img = OscElement::a_h(order).times(&binomial_in(&one, &x, &neg, &rat(-1, 2)));
    let abar_img = OscElement::abar_h(order).times(&binomial_in(&one, &x, &neg, &rat(1, 2)));
    w.eval_in(&a_img, &abar_img)
}

/// `e^{m sigma} = (1 - h a_h^2)^m` in the oscillator algebra.
pub fn osc_exp_m_sigma(m: crate::scalar::HalfInt, order: usize) -> OscElement {
    let one = OscElement::one(order);
    let x = OscElement::monomial(order, 2, 0, HSeries::one(order));
    binomial_in(&one, &x, &rat(-1, 1), &m.to_rational())
}

/// Inverse of [`to_oscillator`]: `a_h = a e^{sigma/2}`, `abar_h = abar e^{-sigma/2}`.
pub fn from_oscillator(o: &OscElement) -> WeylElement {
    let order = o.order();
    let a_img = WeylElement::a(order).times(&exp_m_sigma(crate::scalar::HalfInt::HALF, order));
    let abar_img =
        WeylElement::abar(order).times(&exp_m_sigma(-crate::scalar::HalfInt::HALF, order));
    let max_p = o.poly().terms().keys().map(|k| k.0).max().unwrap_or(0);
    let max_q = o.poly().terms().keys().map(|k| k.1).max().unwrap_or(0);
    let ap = crate::algebra::powers(&a_img, max_p as usize);
    let bp = crate::algebra::powers(&abar_img, max_q as usize);
    let mut acc = WeylElement::zero(order);
    for (&(p, q), c) in o.poly().terms() {
        acc = acc.plus(&ap[p as usize].times(&bp[q as usize]).scaled(c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::HalfInt;

    #[test]
    fn oscillator_relation() {
        let o = 5;
        let a = OscElement::a_h(o);
        let b = OscElement::abar_h(o);
        let lhs = b.commutator(&a);
        let rhs = OscElement::one(o).minus(&OscElement::monomial(o, 2, 0, HSeries::h(o)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn oscillator_associative() {
        let o = 4;
        let a = OscElement::a_h(o);
        let b = OscElement::abar_h(o);
        let x = b.times(&b).plus(&a);
        let y = b.times(&a).times(&b);
        let z = a.plus(&b.times(&b).times(&b));
        assert_eq!(x.times(&y).times(&z), x.times(&y.times(&z)));
    }

    #[test]
    fn displayed_oscillator_examples() {
        let o = 6;
        // a^2 e^{sigma} = a_h^2
        let w =
            WeylElement::monomial(o, 2, 0, HSeries::one(o)).times(&exp_m_sigma(HalfInt::ONE, o));
        assert_eq!(
            to_oscillator(&w),
            OscElement::monomial(o, 2, 0, HSeries::one(o))
        );
        // abar^2 e^{-sigma} = abar_h^2 + h abar_h a_h
        let w =
            WeylElement::monomial(o, 0, 2, HSeries::one(o)).times(&exp_m_sigma(-HalfInt::ONE, o));
        let b = OscElement::abar_h(o);
        let expected = b.times(&b).plus(&b.times(&OscElement::a_h(o)).h_times(1));
        assert_eq!(to_oscillator(&w), expected);
        // e^{sigma} = 1 - h a_h^2
        let e = to_oscillator(&exp_m_sigma(HalfInt::ONE, o));
        assert_eq!(
            e,
            OscElement::one(o).minus(&OscElement::monomial(o, 2, 0, HSeries::h(o)))
        );
    }

    #[test]
    fn round_trip() {
        let o = 6;
        let a = WeylElement::a(o);
        assert_eq!(from_oscillator(&to_oscillator(&a)), a);
        let w = WeylElement::abar(o).times(&a).times(&WeylElement::abar(o));
        assert_eq!(from_oscillator(&to_oscillator(&w)), w);
    }

    #[test]
    fn sigma_conjugation() {
        let o = 5;
        let ep = to_oscillator(&exp_m_sigma(HalfInt::ONE, o));
        let em = to_oscillator(&exp_m_sigma(-HalfInt::ONE, o));
        let a = OscElement::a_h(o);
        let b = OscElement::abar_h(o);
        assert_eq!(ep.times(&a).times(&em), a);
        assert_eq!(ep.times(&b).times(&em), b.plus(&a.h_times(1).scaled_int(2)));
    }
}
