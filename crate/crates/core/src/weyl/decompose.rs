use std::collections::BTreeMap;

use super::poly::OrderedPoly;
use super::{WeylElement, WeylError};
use crate::scalar::{binomial, HSeries, HalfInt, RadicalSum, Rational};
use crate::symplecton::classical_terms;

/// Coefficients `c_{jm}` of an expansion `sum c_{jm} P_j^m`, keyed by `(j, m)`.
pub type SymplectonCoeffs = BTreeMap<(HalfInt, HalfInt), HSeries>;

/// Expands `w` in the classical symplecton basis by back-substitution on the
/// leading monomial `a^{j+m} abar^{j-m}` of each `P_j^m`.
pub fn decompose_symplecton_basis(w: &WeylElement) -> Result<SymplectonCoeffs, WeylError> {
    let mut rem = w.poly().clone();
    let mut out = SymplectonCoeffs::new();
    while let Some(((p, q), c)) = leading(&rem) {
        let j = HalfInt::from_twice((p + q) as i32);
        let m = HalfInt::from_twice(p as i32 - q as i32);
        let pivot =
            RadicalSum::sqrt_rational(&Rational::from_integer(binomial((p + q) as i64, p as i64)));
        let inv = pivot
            .inverse_single()
            .map_err(|_| WeylError::Pivot { p, q })?;
        let coef = c.scale(&inv);
        for ((pp, qq), v) in classical_terms(j, m).iter() {
            rem.add_term(*pp, *qq, -&coef.scale(v));
        }
        debug_assert!(rem.coeff(p, q).is_zero());
        out.insert((j, m), coef);
    }
    Ok(out)
}

/// `sum c_{jm} P_j^m`.
pub fn assemble_symplecton_basis(order: usize, coeffs: &SymplectonCoeffs) -> WeylElement {
    let mut out = OrderedPoly::zero(order);
    for (&(j, m), c) in coeffs {
        let c = c.with_order(order);
        for ((p, q), v) in classical_terms(j, m).iter() {
            out.add_term(*p, *q, c.scale(v));
        }
    }
    WeylElement::from_poly(out)
}

fn leading(poly: &OrderedPoly) -> Option<((u32, u32), HSeries)> {
    poly.canonical_terms()
        .first()
        .map(|(k, c)| (*k, (*c).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::scalar::rat;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let o = 3;
        let n = WeylElement::a(o).times(&WeylElement::abar(o));
        let d = decompose_symplecton_basis(&n).unwrap();
        let mut expected = SymplectonCoeffs::new();
        expected.insert(
            (HalfInt::ONE, HalfInt::ZERO),
            HSeries::constant(o, RadicalSum::sqrt_rational(&rat(1, 2))),
        );
        expected.insert(
            (HalfInt::ZERO, HalfInt::ZERO),
            HSeries::from_rational(o, rat(-1, 2)),
        );
        assert_eq!(d, expected);

        let a2 = WeylElement::monomial(o, 2, 0, HSeries::one(o));
        let d = decompose_symplecton_basis(&a2).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d[&(HalfInt::ONE, HalfInt::ONE)].is_one());

        let d = decompose_symplecton_basis(&WeylElement::one(o)).unwrap();
        assert!(d[&(HalfInt::ZERO, HalfInt::ZERO)].is_one());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn round_trip(entries in proptest::collection::vec((0i32..=6, 0i32..=6, -5i64..=5, 0usize..=2), 1..6)) {
            let o = 2;
            let mut coeffs = SymplectonCoeffs::new();
            for (tj, k, c, hp) in entries {
                let k = k.min(tj);
                let j = HalfInt::from_twice(tj);
                let m = HalfInt::from_twice(tj - 2 * k);
                if c == 0 { continue; }
                let s = HSeries::monomial(o, hp, RadicalSum::from_int(c));
                let entry = coeffs.entry((j, m)).or_insert_with(|| HSeries::zero(o));
                *entry = &*entry + &s;
            }
            coeffs.retain(|_, v| !v.is_zero());
            let w = assemble_symplecton_basis(o, &coeffs);
            prop_assert_eq!(decompose_symplecton_basis(&w).unwrap(), coeffs);
        }
    }
}
