//! Adjoint action of the Jordanian generators on the boson algebra.

use crate::algebra::Algebra;
use crate::report::CheckResult;
use crate::reps::{antipode_word, coproduct, Letter};
use crate::scalar::{rat, HSeries, HalfInt, RadicalSum, Rational};
use crate::weyl::{exp_m_sigma, sl2_generators, WeylElement};

use super::hsym::h_symplecton_weyl;
use super::SymplectonLabel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    J0,
    Jp,
    Jm,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::J0, Generator::Jp, Generator::Jm];

    pub fn name(self) -> &'static str {
        match self {
            Generator::J0 => "J0",
            Generator::Jp => "J+",
            Generator::Jm => "J-",
        }
    }

    fn letter(self) -> Letter {
        match self {
            Generator::J0 => Letter::J0,
            Generator::Jp => Letter::Jp,
            Generator::Jm => Letter::Jm,
        }
    }
}

fn e(k: i64, order: usize) -> WeylElement {
    exp_m_sigma(HalfInt::from_int(k as i32), order)
}

/// `ad X (t)` from the closed operator expressions:
/// `ad J0 (t) = [J0, t] e^{-sigma}`, `ad J+ (t) = e^{-sigma} [J+ e^{sigma}, t]`,
/// `ad J- (t) = [J- + h J0 + (h/2) J0^2, t] e^{-sigma} - h [J0, t] e^{-2 sigma}
///  - (h/2) [J0, [J0, t]] e^{-2 sigma}`.
pub fn adjoint_action(x: Generator, t: &WeylElement) -> WeylElement {
    let o = t.order();
    let [j0, jp, jm] = sl2_generators(o);
    match x {
        Generator::J0 => j0.commutator(t).times(&e(-1, o)),
        Generator::Jp => e(-1, o).times(&jp.times(&e(1, o)).commutator(t)),
        Generator::Jm => {
            let half_h = HSeries::h(o).scale_rational(&rat(1, 2));
            let shifted = jm.plus(&j0.h_times(1)).plus(&j0.times(&j0).scaled(&half_h));
            let c0 = j0.commutator(t);
            let c00 = j0.commutator(&c0);
            let tail = c0.h_times(1).plus(&c00.scaled(&half_h)).times(&e(-2, o));
            shifted.commutator(t).times(&e(-1, o)).minus(&tail)
        }
    }
}

fn eval_word(w: &[Letter], order: usize) -> WeylElement {
    let [j0, jp, jm] = sl2_generators(order);
    w.iter().fold(WeylElement::one(order), |acc, l| {
        let f = match l {
            Letter::J0 => j0.clone(),
            Letter::Jp => jp.clone(),
            Letter::Jm => jm.clone(),
            Letter::Exp(k) => e(*k, order),
        };
        acc.times(&f)
    })
}

/// `ad X (t) = sum X_(1) t S(X_(2))` from the coproduct and antipode tables.
pub fn adjoint_via_hopf(x: Generator, t: &WeylElement) -> WeylElement {
    let o = t.order();
    let mut acc = WeylElement::zero(o);
    for (c, left, right) in coproduct(x.letter(), o) {
        let l = eval_word(&left, o);
        for (c2, s) in antipode_word(&right, o) {
            let term = l.times(t).times(&eval_word(&s, o));
            acc = acc.plus(&term.scaled(&(&c * &c2)));
        }
    }
    acc
}

/// Expected image `c P~_j^{m'}` of `ad X (P~_j^m)`, or `None` when it vanishes.
fn target(x: Generator, label: SymplectonLabel) -> Option<(RadicalSum, HalfInt)> {
    let (j, m) = (label.j.to_rational(), label.m.to_rational());
    let one = Rational::from_integer(1.into());
    let (c, dm) = match x {
        Generator::J0 => (
            RadicalSum::from_rational(&m * Rational::from_integer(2.into())),
            HalfInt::ZERO,
        ),
        Generator::Jp => (
            RadicalSum::sqrt_rational(&((&j - &m) * (&j + &m + &one))),
            HalfInt::ONE,
        ),
        Generator::Jm => (
            RadicalSum::sqrt_rational(&((&j + &m) * (&j - &m + &one))),
            -HalfInt::ONE,
        ),
    };
    (!c.is_zero()).then_some((c, label.m + dm))
}

/// The defining relations of the h-symplecta of spin `j` under the adjoint
/// action, computed by the closed expressions and by the Hopf tables.
pub fn tensor_operator_check(j: HalfInt, order: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for m in j.projections() {
        let label = SymplectonLabel { j, m };
        let t = h_symplecton_weyl(label, order).expect("valid label");
        for x in Generator::ALL {
            let got = adjoint_action(x, &t);
            let expected = match target(x, label) {
                Some((c, m2)) => h_symplecton_weyl(SymplectonLabel { j, m: m2 }, order)
                    .expect("valid label")
                    .scaled_radical(&c),
                None => WeylElement::zero(order),
            };
            let hopf = adjoint_via_hopf(x, &t);
            let detail = match (got == expected, hopf == got) {
                (true, true) => String::new(),
                (false, _) => format!("ad {} deviates: {}", x.name(), got.minus(&expected)),
                (true, false) => "closed form and Hopf-table route disagree".to_string(),
            };
            out.push(CheckResult::new(
                "symplecton",
                &format!("tensor_operator_{}", x.name()),
                "ad X(P~_j^m) = D(X) P~_j^m",
                serde_json::json!({ "j": j.to_string(), "m": m.to_string(), "order": order }),
                detail.is_empty(),
                detail,
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplecton::{classical_symplecton, Form};

    fn lbl(tj: i32, tm: i32) -> SymplectonLabel {
        SymplectonLabel::new(HalfInt::from_twice(tj), HalfInt::from_twice(tm)).unwrap()
    }

    #[test]
    fn examples_at_spin_one() {
        let o = 5;
        let p11 = h_symplecton_weyl(lbl(2, 2), o).unwrap();
        let p10 = h_symplecton_weyl(lbl(2, 0), o).unwrap();
        assert_eq!(adjoint_action(Generator::J0, &p11), p11.scaled_int(2));
        assert!(adjoint_action(Generator::Jp, &p11).is_zero());
        assert_eq!(
            adjoint_action(Generator::Jm, &p11),
            p10.scaled_radical(&RadicalSum::sqrt_int(2))
        );
    }

    #[test]
    fn classical_limit_is_commutator() {
        let o = 3;
        let [j0, jp, jm] = sl2_generators(o);
        let t = classical_symplecton(lbl(3, 1), Form::A, o);
        for (x, g) in Generator::ALL.iter().zip([j0, jp, jm]) {
            assert_eq!(
                adjoint_action(*x, &t).at_h_zero(),
                g.commutator(&t).at_h_zero()
            );
        }
    }

    #[test]
    fn routes_agree_on_generic_element() {
        let o = 4;
        let a = WeylElement::a(o);
        let b = WeylElement::abar(o);
        let t = a.times(&b).times(&b).plus(&a.pow(3).h_times(1));
        for x in Generator::ALL {
            assert_eq!(
                adjoint_action(x, &t),
                adjoint_via_hopf(x, &t),
                "{}",
                x.name()
            );
        }
    }

    #[test]
    fn relations_up_to_spin_three_halves() {
        for tj in 1..=3 {
            for r in tensor_operator_check(HalfInt::from_twice(tj), 4) {
                assert!(r.pass, "{}", r.text_line());
            }
        }
    }
}
