use serde_json::json;

use crate::algebra::Algebra;
use crate::report::CheckResult;
use crate::scalar::HalfInt;
use crate::weyl::{osc_exp_m_sigma, to_oscillator, OscElement};

use super::{
    classical_symplecton, generating_function_check, h_symplecton_osc, h_symplecton_weyl,
    hypergeometric_any, prop3_and_j1_checks, symmetry_check, tensor_operator_check, Form,
    HyperPrefactor, OscForm, SymplectonLabel,
};

const SUITE: &str = "symplecton";

fn label_params(l: SymplectonLabel) -> serde_json::Value {
    json!({ "j": l.j.to_string(), "m": l.m.to_string() })
}

/// Closed forms, symmetry and hypergeometric form of the classical symplecta.
pub fn classical_checks(max_spin: HalfInt) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for l in SymplectonLabel::all_up_to(max_spin) {
        let a = classical_symplecton(l, Form::A, 0);
        out.push(CheckResult::new(
            SUITE,
            "closed_forms_agree",
            "sum abar^{j-m-s} a^{j+m} abar^s = sum a^s abar^{j-m} a^{j+m-s}",
            label_params(l),
            a == classical_symplecton(l, Form::B, 0),
            "",
        ));
        out.push(CheckResult::new(
            SUITE,
            "symmetry",
            "P_j^m(abar, -a) = (-1)^{j-m} P_j^{-m}(a, abar)",
            label_params(l),
            symmetry_check(l),
            "",
        ));
        let hyper = hypergeometric_any(l, HyperPrefactor::Corrected, 0);
        let (ok, detail) = match &hyper {
            Ok(h) => (*h == a, String::new()),
            Err(e) => (false, e.to_string()),
        };
        out.push(CheckResult::new(
            SUITE,
            "hypergeometric",
            "2^{-(j-m)} sqrt(..) (N+j-m)!/(N-2m)! 2F1(-N+2m, -j+m; -N-j+m; -1) abar^{-2m}",
            label_params(l),
            ok,
            detail,
        ));
    }
    out
}

/// Boson and oscillator presentations of the h-symplecta.
pub fn h_symplecton_checks(max_spin: HalfInt, order: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for l in SymplectonLabel::all_up_to(max_spin) {
        let w = h_symplecton_weyl(l, order).expect("valid label");
        let a = h_symplecton_osc(l, OscForm::A, order).expect("valid label");
        let b = h_symplecton_osc(l, OscForm::B, order).expect("valid label");
        let mut p = label_params(l);
        p["order"] = json!(order);
        out.push(CheckResult::new(
            SUITE,
            "classical_limit",
            "P~_j^m = P_j^m at h = 0",
            p.clone(),
            w.at_h_zero() == classical_symplecton(l, Form::A, order),
            "",
        ));
        out.push(CheckResult::new(
            SUITE,
            "oscillator_forms_agree",
            "P~ oscillator form A = form B",
            p.clone(),
            a == b,
            "",
        ));
        out.push(CheckResult::new(
            SUITE,
            "oscillator_matches_boson",
            "P~(a_h, abar_h) = P_j^m e^{m sigma}",
            p,
            to_oscillator(&w) == a,
            "",
        ));
    }
    out
}

/// The displayed low-spin oscillator expressions and the oscillator relations.
pub fn oscillator_examples(order: usize) -> Vec<CheckResult> {
    let a = OscElement::a_h(order);
    let b = OscElement::abar_h(order);
    let osc = |tj: i32, tm: i32| {
        let l =
            SymplectonLabel::new(HalfInt::from_twice(tj), HalfInt::from_twice(tm)).expect("valid");
        to_oscillator(&h_symplecton_weyl(l, order).expect("valid"))
    };
    let s = crate::scalar::RadicalSum::sqrt_rational(&crate::scalar::rat(1, 2));
    let p10 = b
        .times(&a)
        .plus(&a.times(&b))
        .minus(&a.times(&a).h_times(1))
        .scaled_radical(&s);
    let conj = |m: HalfInt, x: &OscElement| {
        osc_exp_m_sigma(m, order)
            .times(x)
            .times(&osc_exp_m_sigma(-m, order))
    };
    let checks = [
        ("P~_{1/2}^{1/2} = a e^{sigma/2} = a_h", osc(1, 1) == a),
        (
            "P~_{1/2}^{-1/2} = abar e^{-sigma/2} = abar_h",
            osc(1, -1) == b,
        ),
        ("P~_1^1 = a_h^2", osc(2, 2) == a.pow(2)),
        (
            "P~_1^0 = (abar_h a_h + a_h abar_h - h a_h^2)/sqrt2",
            osc(2, 0) == p10,
        ),
        (
            "P~_1^{-1} = abar_h^2 + h abar_h a_h",
            osc(2, -2) == b.pow(2).plus(&b.times(&a).h_times(1)),
        ),
        (
            "[abar_h, a_h] = 1 - h a_h^2",
            b.commutator(&a) == OscElement::one(order).minus(&a.pow(2).h_times(1)),
        ),
        (
            "e^sigma + h a_h^2 = 1",
            to_oscillator(&crate::weyl::exp_m_sigma(HalfInt::ONE, order))
                .plus(&a.pow(2).h_times(1))
                == OscElement::one(order),
        ),
        ("e^sigma a_h e^{-sigma} = a_h", conj(HalfInt::ONE, &a) == a),
        (
            "e^sigma abar_h e^{-sigma} = abar_h + 2h a_h",
            conj(HalfInt::ONE, &b) == b.plus(&a.h_times(1).scaled_int(2)),
        ),
    ];
    checks
        .into_iter()
        .map(|(name, ok)| {
            CheckResult::new(
                SUITE,
                "oscillator_example",
                name,
                json!({ "order": order }),
                ok,
                "",
            )
        })
        .collect()
}

/// Every symplecton check: classical forms and generating functions up to
/// `max_spin`, h-symplecta and adjoint relations up to `max_spin`, product-law
/// consequences up to `product_spin`.
pub fn symplecton_suite(
    max_spin: HalfInt,
    product_spin: HalfInt,
    order: usize,
    strict: bool,
) -> Vec<CheckResult> {
    let mut out = classical_checks(max_spin);
    out.extend(h_symplecton_checks(max_spin, order));
    if max_spin >= HalfInt::ONE {
        out.extend(oscillator_examples(order));
    }
    for j in HalfInt::spins_between(HalfInt::HALF, max_spin) {
        out.extend(tensor_operator_check(j, order));
    }
    for j in HalfInt::spins_between(HalfInt::HALF, max_spin) {
        let mut g = generating_function_check(j, order);
        if j > product_spin {
            g.pop();
        }
        out.extend(g);
    }
    if product_spin >= HalfInt::HALF {
        let mut p3 = prop3_and_j1_checks(product_spin, order, strict);
        if max_spin < HalfInt::ONE {
            p3.retain(|c| c.check != "spin_one");
        }
        out.extend(p3);
    }
    out
}
