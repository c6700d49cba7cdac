//! h-symplecta: the boson form `P_j^m e^{m sigma}` and the two closed forms in
//! the covariant oscillators.

use std::collections::BTreeMap;

use crate::algebra::{product, Algebra};
use crate::scalar::{factorial, HSeries, HalfInt, Rational};
use crate::weyl::{
    decompose_symplecton_basis, exp_m_sigma, OscElement, SymplectonCoeffs, WeylElement, WeylError,
};

use super::classical::{prefactor, validate};
use super::{classical_symplecton, Form, SymplectonError, SymplectonLabel};

/// Which oscillator expression to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OscForm {
    /// Grown from the `abar^{j-m-s} a^{j+m} abar^s` sum.
    A,
    /// Grown from the `a^s abar^{j-m} a^{j+m-s}` sum.
    B,
}

/// `P_j^m e^{m sigma}` in the boson algebra, truncated at `order`.
pub fn h_symplecton_weyl(
    label: SymplectonLabel,
    order: usize,
) -> Result<WeylElement, SymplectonError> {
    validate(label)?;
    Ok(classical_symplecton(label, Form::A, order).times(&exp_m_sigma(label.m, order)))
}

/// `abar_h + k h a_h`.
fn shifted<T: Algebra>(a_h: &T, abar_h: &T, k: i64) -> T {
    if k == 0 {
        abar_h.clone()
    } else {
        abar_h.plus(&a_h.h_times(1).scaled_int(k))
    }
}

/// The h-symplecton in any algebra containing images of `a_h`, `abar_h`.
pub fn oscillator_form<T: Algebra>(
    label: SymplectonLabel,
    form: OscForm,
    a_h: &T,
    abar_h: &T,
) -> T {
    let (j, m) = (label.j, label.m);
    let lo = (j - m).int();
    let hi = (j + m).int();
    let two_m = m.twice() as i64;
    let one = a_h.one_like();
    let mut acc = a_h.zero_like();
    match form {
        OscForm::A => {
            let k = prefactor(j, lo);
            for s in 0..=lo {
                let w = Rational::new(1.into(), factorial(s as u64) * factorial((lo - s) as u64));
                let left = product(&one, (0..lo - s).map(|i| shifted(a_h, abar_h, i)));
                // (abar_h - (2m+s) h a_h) ... (abar_h - (2m+1) h a_h)
                let right = product(
                    &one,
                    (1..=s).rev().map(|i| shifted(a_h, abar_h, -(two_m + i))),
                );
                let term = left.times(&a_h.pow(hi as usize)).times(&right);
                acc = acc.plus(&term.scaled_radical(&k.scale(&w)));
            }
        }
        OscForm::B => {
            let k = prefactor(j, hi);
            for s in 0..=hi {
                let w = Rational::new(1.into(), factorial(s as u64) * factorial((hi - s) as u64));
                let mid = product(&one, (0..lo).map(|i| shifted(a_h, abar_h, i - s)));
                let term = a_h
                    .pow(s as usize)
                    .times(&mid)
                    .times(&a_h.pow((hi - s) as usize));
                acc = acc.plus(&term.scaled_radical(&k.scale(&w)));
            }
        }
    }
    acc
}

/// The oscillator form in the series oscillator algebra.
pub fn h_symplecton_osc(
    label: SymplectonLabel,
    form: OscForm,
    order: usize,
) -> Result<OscElement, SymplectonError> {
    validate(label)?;
    Ok(oscillator_form(
        label,
        form,
        &OscElement::a_h(order),
        &OscElement::abar_h(order),
    ))
}

/// Expansion `w = sum c_{jm} P~_j^m` in the h-symplecton family, solved one
/// power of `h` at a time with the classical decomposition at each order.
pub fn decompose_h_symplecton_basis(w: &WeylElement) -> Result<SymplectonCoeffs, WeylError> {
    let order = w.order();
    let mut rem = w.clone();
    let mut coeffs: BTreeMap<(HalfInt, HalfInt), Vec<crate::scalar::RadicalSum>> = BTreeMap::new();
    let mut cache: BTreeMap<(HalfInt, HalfInt), WeylElement> = BTreeMap::new();
    for k in 0..=order {
        let slice = rem.h_slice(k);
        if slice.is_zero() {
            continue;
        }
        for ((j, m), c) in decompose_symplecton_basis(&slice)? {
            let c0 = c.at_zero();
            let entry = coeffs
                .entry((j, m))
                .or_insert_with(|| vec![crate::scalar::RadicalSum::zero(); order + 1]);
            entry[k] = &entry[k] + &c0;
            let p = cache
                .entry((j, m))
                .or_insert_with(|| {
                    h_symplecton_weyl(SymplectonLabel { j, m }, order).expect("valid label")
                })
                .clone();
            let scale = HSeries::monomial(order, k, c0);
            rem = rem.minus(&p.scaled(&scale));
        }
    }
    debug_assert!(rem.is_zero());
    Ok(coeffs
        .into_iter()
        .map(|(k, v)| (k, HSeries::from_coeffs(order, v)))
        .filter(|(_, v)| !v.is_zero())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, RadicalSum};
    use crate::weyl::to_oscillator;

    fn lbl(tj: i32, tm: i32) -> SymplectonLabel {
        SymplectonLabel::new(HalfInt::from_twice(tj), HalfInt::from_twice(tm)).unwrap()
    }

    #[test]
    fn printed_examples() {
        let o = 4;
        let a = OscElement::a_h(o);
        let b = OscElement::abar_h(o);
        let osc = |tj, tm| h_symplecton_osc(lbl(tj, tm), OscForm::A, o).unwrap();
        assert_eq!(osc(1, 1), a);
        assert_eq!(osc(1, -1), b);
        assert_eq!(osc(2, 2), a.times(&a));
        assert_eq!(osc(2, -2), b.times(&b).plus(&b.times(&a).h_times(1)));
        let p10 = b
            .times(&a)
            .plus(&a.times(&b))
            .minus(&a.times(&a).h_times(1));
        assert_eq!(
            osc(2, 0),
            p10.scaled_radical(&RadicalSum::sqrt_rational(&rat(1, 2)))
        );
        // the spin-1/2 raising entry is a e^{sigma/2}
        let w = h_symplecton_weyl(lbl(1, 1), o).unwrap();
        assert_eq!(w, WeylElement::a(o).times(&exp_m_sigma(HalfInt::HALF, o)));
        assert_eq!(to_oscillator(&w), a);
    }

    #[test]
    fn forms_agree_and_match_boson_form() {
        let o = 4;
        for l in SymplectonLabel::all_up_to(HalfInt::from_int(2)) {
            let a = h_symplecton_osc(l, OscForm::A, o).unwrap();
            let b = h_symplecton_osc(l, OscForm::B, o).unwrap();
            assert_eq!(a, b, "{l}");
            let w = to_oscillator(&h_symplecton_weyl(l, o).unwrap());
            assert_eq!(a, w, "{l}");
        }
    }

    #[test]
    fn classical_limit() {
        for l in SymplectonLabel::all_up_to(HalfInt::from_int(3)) {
            let w = h_symplecton_weyl(l, 3).unwrap();
            assert_eq!(w.at_h_zero(), classical_symplecton(l, Form::A, 3), "{l}");
        }
    }

    #[test]
    fn h_decomposition_round_trip() {
        let o = 4;
        let x = h_symplecton_weyl(lbl(2, -2), o)
            .unwrap()
            .plus(&h_symplecton_weyl(lbl(1, 1), o).unwrap().h_times(2));
        let d = decompose_h_symplecton_basis(&x).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d[&(HalfInt::ONE, -HalfInt::ONE)], HSeries::one(o));
        assert_eq!(
            d[&(HalfInt::HALF, HalfInt::HALF)],
            HSeries::monomial(o, 2, RadicalSum::one())
        );
    }
}
