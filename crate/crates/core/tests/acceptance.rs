//! One line per acceptance criterion. Every comparison is exact equality of
//! rational/radical coefficients, so the tolerance on each line is zero.

use jordanian::algebra::Algebra;
use jordanian::report::CheckResult;
use jordanian::reps::{
    embed_two, exact_order, flip, hopf_suite, ohn_suite, twist_closed_form, twist_oracle,
    twist_suite, universal_r, DoubleFactorialReading, Matrix,
};
use jordanian::scalar::{HSeries, HalfInt, RadicalSum};
use jordanian::slh2::{dfunction_checks, slh2_suite};
use jordanian::su2data::su2data_suite;
use jordanian::symplecton::{
    classical_checks, decompose_h_symplecton_basis, generating_function_check, h_symplecton_checks,
    h_symplecton_weyl, oscillator_examples, product_law_suite, tensor_operator_check,
    SymplectonLabel,
};
use jordanian::weyl::{SymplectonCoeffs, WeylElement};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

const H6: usize = 6;

fn half(t: i32) -> HalfInt {
    HalfInt::from_twice(t)
}

struct Outcome {
    pass: bool,
    detail: String,
}

/// Passes iff every check named in `names` passed and at least one ran.
fn from_checks(checks: &[CheckResult], names: &[&str]) -> Outcome {
    let chosen: Vec<&CheckResult> = checks
        .iter()
        .filter(|c| names.contains(&c.check.as_str()))
        .collect();
    let failed: Vec<String> = chosen
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.text_line())
        .collect();
    Outcome {
        pass: !chosen.is_empty() && failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} checks", chosen.len())
        } else {
            failed.join(" | ")
        },
    }
}

fn all(checks: &[CheckResult]) -> Outcome {
    let names: Vec<&str> = checks.iter().map(|c| c.check.as_str()).collect();
    from_checks(checks, &names)
}

fn criterion_1() -> Outcome {
    let spins: Vec<HalfInt> = (1..=5).map(half).collect();
    let mut bad = Vec::new();
    for &j1 in &spins {
        for &j2 in &spins {
            let order = exact_order(&[j1, j2]);
            if twist_closed_form(j1, j2, order, DoubleFactorialReading::Product)
                != twist_oracle(j1, j2, order)
            {
                bad.push(format!("({j1},{j2})"));
            }
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("25 spin pairs; mismatches: {}", bad.join(" ")),
    }
}

fn criterion_2() -> Outcome {
    from_checks(&twist_suite(half(5)), &["inverse_symmetry"])
}

fn criterion_3() -> Outcome {
    from_checks(
        &hopf_suite(HalfInt::ONE),
        &[
            "homomorphism",
            "coassociativity",
            "antipode_left",
            "antipode_right",
            "cocycle",
            "sigma_primitive",
        ],
    )
}

fn criterion_4() -> Outcome {
    let checks: Vec<CheckResult> = hopf_suite(HalfInt::ONE)
        .into_iter()
        .filter(|c| {
            let j = |k: &str| c.params[k].as_str().and_then(|s| s.parse::<HalfInt>().ok());
            c.check == "coupled_vectors" && j("j2") <= j("j1")
        })
        .collect();
    from_checks(&checks, &["coupled_vectors"])
}

fn criterion_5() -> Outcome {
    from_checks(&su2data_suite(half(3), false), &["recoupling_identity"])
}

fn criterion_6() -> Outcome {
    from_checks(&ohn_suite(half(4)), &["relations"])
}

fn criterion_7() -> Outcome {
    let checks = classical_checks(half(6));
    let mut out = from_checks(&checks, &["closed_forms_agree", "symmetry"]);
    let hyper: Vec<CheckResult> = classical_checks(half(4))
        .into_iter()
        .filter(|c| c.check == "hypergeometric")
        .collect();
    let h = from_checks(&hyper, &["hypergeometric"]);
    out.pass &= h.pass;
    out.detail = format!("{}; hypergeometric {}", out.detail, h.detail);
    out
}

fn criterion_8() -> Outcome {
    let mut checks = h_symplecton_checks(half(4), H6);
    for j in HalfInt::spins_between(HalfInt::HALF, half(4)) {
        checks.extend(tensor_operator_check(j, H6));
    }
    all(&checks)
}

fn criterion_9() -> Outcome {
    let mut checks = oscillator_examples(H6);
    checks.extend(
        slh2_suite(HalfInt::HALF, HalfInt::ZERO, H6)
            .into_iter()
            .filter(|c| c.check == "covariance"),
    );
    all(&checks)
}

/// Structural layers must hold; the displayed inner product and the
/// requirement that all ratios equal 1 are evaluated literally.
struct Criterion10 {
    structure: Outcome,
    inner_printed: Outcome,
    inner_calibrated: Outcome,
    ratios_one: Outcome,
}

fn criterion_10() -> Criterion10 {
    let checks = product_law_suite(half(3), H6, true);
    Criterion10 {
        structure: from_checks(
            &checks,
            &["intermediate_identity", "support", "ratio_table"],
        ),
        inner_printed: from_checks(&checks, &["inner_product_printed"]),
        inner_calibrated: from_checks(&checks, &["inner_product"]),
        ratios_one: from_checks(&checks, &["unit_ratios"]),
    }
}

fn criterion_11() -> Outcome {
    let mut checks = Vec::new();
    for j in HalfInt::spins_between(HalfInt::HALF, half(4)) {
        let mut g = generating_function_check(j, H6);
        if j > half(3) {
            g.retain(|c| c.check == "generating_function");
        }
        checks.extend(g);
    }
    all(&checks)
}

fn criterion_12() -> Outcome {
    from_checks(
        &slh2_suite(HalfInt::HALF, HalfInt::ZERO, H6),
        &[
            "confluence",
            "det_central",
            "antipode",
            "rtt",
            "rtt_generates_relations",
            "coproduct_relations",
            "counit_relations",
            "antipode_relations",
        ],
    )
}

fn criterion_13() -> Outcome {
    let checks = dfunction_checks(half(3), HalfInt::ONE);
    from_checks(
        &checks,
        &[
            "dfun_spin_half",
            "dfun_spin_one",
            "dfun_routes_agree",
            "dfun_coalgebra",
        ],
    )
}

fn r_half() -> Matrix {
    universal_r(
        HalfInt::HALF,
        HalfInt::HALF,
        exact_order(&[HalfInt::HALF; 3]),
    )
}

fn qybe_and_triangularity() -> bool {
    let r = r_half();
    let dims = [2, 2, 2];
    let (r12, r13, r23) = (
        embed_two(&r, &dims, 0, 1),
        embed_two(&r, &dims, 0, 2),
        embed_two(&r, &dims, 1, 2),
    );
    let qybe = &(&r12 * &r13) * &r23 == &(&r23 * &r13) * &r12;
    let p = flip(2, 2, r.order());
    let r21 = &(&p * &r) * &p;
    qybe && (&r21 * &r).is_identity()
}

/// Random integer combinations of h-symplecta with `j <= 3/2` and h-powers
/// up to 2, expanded in the boson algebra, decomposed back.
fn oracle_round_trip() -> Result<(), String> {
    let order = 4;
    let mut runner = TestRunner::new_with_rng(
        Config::with_cases(32),
        proptest::test_runner::TestRng::deterministic_rng(
            proptest::test_runner::RngAlgorithm::ChaCha,
        ),
    );
    let strategy = proptest::collection::vec((0i32..=3, 0i32..=3, -4i64..=4, 0usize..=2), 1..5);
    runner
        .run(&strategy, |entries| {
            let mut expected = SymplectonCoeffs::new();
            let mut w = WeylElement::zero(order);
            for (tj, k, c, hp) in entries {
                if c == 0 {
                    continue;
                }
                let j = half(tj);
                let m = half(tj - 2 * k.min(tj));
                let s = HSeries::monomial(order, hp, RadicalSum::from_int(c));
                let p = h_symplecton_weyl(SymplectonLabel { j, m }, order).unwrap();
                w = w.plus(&p.scaled(&s));
                let e = expected
                    .entry((j, m))
                    .or_insert_with(|| HSeries::zero(order));
                *e = &*e + &s;
            }
            expected.retain(|_, v| !v.is_zero());
            prop_assert_eq!(decompose_h_symplecton_basis(&w).unwrap(), expected);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn criterion_14() -> Outcome {
    let cgc = from_checks(&su2data_suite(half(6), false), &["cgc_orthogonality"]);
    let r = qybe_and_triangularity();
    let trip = oracle_round_trip();
    Outcome {
        pass: cgc.pass && r && trip.is_ok(),
        detail: format!(
            "CGC orthogonality {}; QYBE + R21 R = 1 on (1/2,1/2,1/2): {}; round trip 32 random cases: {}",
            cgc.detail,
            if r { "ok" } else { "FAILED" },
            trip.err().unwrap_or_else(|| "ok".into())
        ),
    }
}

fn line(n: usize, what: &str, o: &Outcome) -> String {
    format!(
        "criterion {n:>2}: {} [tolerance 0, exact] {what} -- {}",
        if o.pass { "PASS" } else { "FAIL" },
        o.detail
    )
}

fn main() {
    let rows: Vec<(usize, &str, Outcome)> = vec![
        (1, "twist closed form = exponential oracle, j1, j2 in 1/2..5/2", criterion_1()),
        (2, "F inverse symmetry, j1, j2 in 1/2..5/2", criterion_2()),
        (3, "twisted Hopf structure: homomorphism, coassociativity, antipode, cocycle, sigma primitive", criterion_3()),
        (4, "coupled bases raise/lower correctly for (1/2,1/2), (1,1/2), (1,1)", criterion_4()),
        (5, "recoupling identity with classical Racah W, a, b, c, e <= 3/2", criterion_5()),
        (6, "Ohn relations in spin-j reps, j <= 2", criterion_6()),
        (7, "symplecton closed forms and symmetry j <= 3, hypergeometric j <= 2", criterion_7()),
        (8, "h-symplecton adjoint relations and oscillator forms j <= 2 at H = 6", criterion_8()),
        (9, "printed oscillator examples, covariance, e^sigma = 1 - h a_h^2", criterion_9()),
    ];
    let mut lines: Vec<String> = rows.iter().map(|(n, w, o)| line(*n, w, o)).collect();

    let c10 = criterion_10();
    let pass10 = c10.structure.pass && c10.inner_printed.pass && c10.ratios_one.pass;
    lines.push(line(
        10,
        "product law: intermediate identity, triangle support, displayed inner product, ratios = 1",
        &Outcome {
            pass: pass10,
            detail: format!(
                "structure {}; displayed inner product {}; calibrated inner product {}; ratios = 1 {}",
                if c10.structure.pass { "PASS" } else { "FAIL" },
                if c10.inner_printed.pass { "PASS" } else { "FAIL" },
                if c10.inner_calibrated.pass { "PASS" } else { "FAIL" },
                if c10.ratios_one.pass { "PASS" } else { "FAIL" },
            ),
        },
    ));
    let rest: Vec<(usize, &str, Outcome)> = vec![
        (11, "generating functions: classical j <= 2, h-deformed j <= 3/2 at H = 6", criterion_11()),
        (12, "SL_h(2): confluence, det central, antipode, RTT, Hopf maps preserve relations", criterion_12()),
        (13, "d-functions: j = 1/2 is T, j = 1 displayed matrix, routes agree to 3/2, coalgebra j <= 1", criterion_13()),
        (14, "properties: CGC orthogonality j <= 3, QYBE and triangularity, oracle round trip", criterion_14()),
    ];
    lines.extend(rest.iter().map(|(n, w, o)| line(*n, w, o)));
    for l in &lines {
        println!("{l}");
    }

    for (n, _, o) in rows.iter().chain(rest.iter()) {
        assert!(o.pass, "criterion {n}: {}", o.detail);
    }
    // Criterion 10 cannot pass as stated: the displayed inner product and
    // unit ratios fail while every structural layer holds.
    assert!(c10.structure.pass, "{}", c10.structure.detail);
    assert!(c10.inner_calibrated.pass, "{}", c10.inner_calibrated.detail);
    assert!(!c10.inner_printed.pass);
    assert!(!c10.ratios_one.pass);
}
