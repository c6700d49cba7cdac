//! Generating functions `(xi x + eta y)^{2j}` for classical and h-symplecta.

use serde_json::json;

use crate::algebra::Algebra;
use crate::report::CheckResult;
use crate::scalar::{factorial, HalfInt, RadicalSum, Rational};
use crate::su2data::phi_basis;
use crate::weyl::{osc_exp_m_sigma, OscElement, WeylElement};

use super::hsym::{oscillator_form, OscForm};
use super::{classical_symplecton, Form, SymplectonLabel};

/// Coefficients of `(xi x + eta y)^n` with `xi`, `eta` central: entry `k` is the
/// coefficient of `xi^{n-k} eta^k`.
pub fn binomial_expansion<T: Algebra>(x: &T, y: &T, n: usize) -> Vec<T> {
    let mut c = vec![x.one_like()];
    for _ in 0..n {
        let mut next = vec![x.zero_like(); c.len() + 1];
        for (k, ck) in c.iter().enumerate() {
            next[k] = next[k].plus(&ck.times(x));
            next[k + 1] = next[k + 1].plus(&ck.times(y));
        }
        c = next;
    }
    c
}

/// `sqrt((2j)!)` times the coefficient of `Phi_{jm}`'s single monomial.
fn weight(j: HalfInt, m: HalfInt) -> RadicalSum {
    let phi = phi_basis(j, m);
    let (_, c) = phi.terms().iter().next().expect("monomial");
    let root = RadicalSum::sqrt_rational(&Rational::from_integer(factorial(j.twice() as u64)));
    &root * c
}

/// Labels `m` whose coefficient disagrees, for the classical generating
/// function in the boson algebra.
pub fn classical_generating_defects(j: HalfInt) -> Vec<HalfInt> {
    let (a, b) = (WeylElement::a(0), WeylElement::abar(0));
    let lhs = binomial_expansion(&a, &b, j.twice() as usize);
    j.projections()
        .filter(|&m| {
            let k = (j - m).int() as usize;
            let rhs = classical_symplecton(SymplectonLabel { j, m }, Form::A, 0)
                .scaled_radical(&weight(j, m));
            lhs[k] != rhs
        })
        .collect()
}

/// Same for `(xi a_h e^{-sigma/2} + eta abar_h e^{sigma/2})^{2j}
/// = sqrt((2j)!) sum Phi_{jm} P~_j^m e^{-m sigma}` in the oscillator algebra.
pub fn h_generating_defects(j: HalfInt, order: usize) -> Vec<HalfInt> {
    let a = OscElement::a_h(order);
    let b = OscElement::abar_h(order);
    let x = a.times(&osc_exp_m_sigma(-HalfInt::HALF, order));
    let y = b.times(&osc_exp_m_sigma(HalfInt::HALF, order));
    let lhs = binomial_expansion(&x, &y, j.twice() as usize);
    j.projections()
        .filter(|&m| {
            let k = (j - m).int() as usize;
            let p = oscillator_form(SymplectonLabel { j, m }, OscForm::A, &a, &b);
            let rhs = p
                .times(&osc_exp_m_sigma(-m, order))
                .scaled_radical(&weight(j, m));
            lhs[k] != rhs
        })
        .collect()
}

pub fn generating_function_check(j: HalfInt, order: usize) -> Vec<CheckResult> {
    let list = |v: Vec<HalfInt>| v.iter().map(|m| format!("m={m}")).collect::<Vec<_>>();
    let c = list(classical_generating_defects(j));
    let h = list(h_generating_defects(j, order));
    vec![
        CheckResult::new(
            "symplecton",
            "generating_function",
            "(xi a + eta abar)^{2j} = sqrt((2j)!) sum Phi_jm P_j^m",
            json!({ "j": j.to_string() }),
            c.is_empty(),
            c.join(", "),
        ),
        CheckResult::new(
            "symplecton",
            "h_generating_function",
            "(xi a_h e^{-sigma/2} + eta abar_h e^{sigma/2})^{2j} = sqrt((2j)!) sum Phi_jm P~_j^m e^{-m sigma}",
            json!({ "j": j.to_string(), "order": order }),
            h.is_empty(),
            h.join(", "),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn expansion_matches_binomial_for_commuting_inputs() {
        let x = WeylElement::a(0);
        let two_x = x.scaled_int(2);
        let c = binomial_expansion(&x, &two_x, 3);
        // (xi + 2 eta)^3 a^3
        let expected = [1, 6, 12, 8];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(c[k], x.pow(3).scaled_int(*e));
        }
    }

    #[test]
    fn spin_half_is_identity() {
        assert!(classical_generating_defects(HalfInt::HALF).is_empty());
        assert!(h_generating_defects(HalfInt::HALF, 4).is_empty());
    }

    #[test]
    fn spin_one_weights() {
        // sqrt(2!) / sqrt(1! 1!) for m = 0
        assert_eq!(weight(HalfInt::ONE, HalfInt::ZERO), RadicalSum::sqrt_int(2));
        assert_eq!(
            weight(HalfInt::ONE, HalfInt::ONE),
            RadicalSum::from_rational(rat(1, 1))
        );
    }

    #[test]
    fn both_forms_up_to_spin_three_halves() {
        for tj in 1..=3 {
            let j = HalfInt::from_twice(tj);
            assert!(
                classical_generating_defects(j).is_empty(),
                "classical 2j = {tj}"
            );
            assert!(h_generating_defects(j, 5).is_empty(), "h 2j = {tj}");
        }
    }
}
