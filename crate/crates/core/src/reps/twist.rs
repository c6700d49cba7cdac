use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use super::hopf::twisted_tensor;
use super::matrix::{embed_two, flip, Matrix};
use super::{exact_order, spin_params, spin_rep, Assignment};
use crate::report::CheckResult;
use crate::scalar::{
    binomial, factorial, rising_even_product, HSeries, HalfInt, RadicalSum, Rational,
};

/// How to read the double-factorial ratio `(2n + l - 2)!! / (l - 2)!!` in the
/// closed form of the twist for `m1 <= 0` (`l = -2 m1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DoubleFactorialReading {
    /// The product `l (l+2) ... (l+2n-2)`; zero for `l = 0`, `n > 0`.
    Product,
    /// Both double factorials evaluated separately with `k!! = 1` for `k <= 0`.
    Literal,
}

fn double_factorial(k: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut i = k;
    while i > 1 {
        acc *= BigInt::from(i);
        i -= 2;
    }
    acc
}

/// `F = exp(-J0 (x) sigma / 2)` on `V_{j1} (x) V_{j2}`, entry by entry from
/// `F_{k1 k2, m1 m2} = delta_{k1 m1} <k2| e^{-m1 sigma} |m2>`.
pub fn twist_oracle(j1: HalfInt, j2: HalfInt, order: usize) -> Matrix {
    let r2 = spin_rep(j2, order);
    let (d1, d2) = (j1.dim(), j2.dim());
    let mut out = Matrix::zero(d1 * d2, d1 * d2, order);
    for (i1, m1) in j1.projections().enumerate() {
        let e = r2.exp_sigma(&-m1.to_rational());
        for r in 0..d2 {
            for c in 0..d2 {
                out.set(i1 * d2 + r, i1 * d2 + c, e.get(r, c).clone());
            }
        }
    }
    out
}

/// `F` as the exponential of the nilpotent matrix `-J0 (x) sigma / 2`.
pub fn twist_exp(j1: HalfInt, j2: HalfInt, order: usize) -> Matrix {
    let r1 = spin_rep(j1, order);
    let r2 = spin_rep(j2, order);
    twist_exp_on(&r1, &r2)
}

pub(crate) fn twist_exp_on(a: &Assignment, b: &Assignment) -> Matrix {
    let x =
        a.j0.kron(&b.sigma())
            .scale_rational(&Rational::new((-1).into(), 2.into()));
    Matrix::exp_nilpotent(&x)
}

/// Closed-form entries of `F` as sums over binomials and double factorials.
pub fn twist_closed_form(
    j1: HalfInt,
    j2: HalfInt,
    order: usize,
    reading: DoubleFactorialReading,
) -> Matrix {
    let (d1, d2) = (j1.dim(), j2.dim());
    let ms2: Vec<HalfInt> = j2.projections().collect();
    let mut out = Matrix::zero(d1 * d2, d1 * d2, order);
    for (i1, m1) in j1.projections().enumerate() {
        for (c2, &m2) in ms2.iter().enumerate() {
            for (r2, &k2) in ms2.iter().enumerate().skip(c2) {
                let n = (k2 - m2).int();
                if n as usize > order {
                    continue;
                }
                let s = s_factor(j2, k2, m2);
                let coeff = if m1.twice() <= 0 {
                    let l = -m1.twice() as i64;
                    let ratio = match reading {
                        DoubleFactorialReading::Product => rising_even_product(l, n as usize),
                        DoubleFactorialReading::Literal => {
                            double_factorial(2 * n + l - 2) / double_factorial(l - 2)
                        }
                    };
                    Rational::new(ratio, factorial(n as u64))
                } else {
                    let l = m1.twice() as i64;
                    let mut acc = Rational::zero();
                    for t in 0..=(j2 - m2).int() {
                        let c = binomial(l, n - t);
                        if c.is_zero() {
                            continue;
                        }
                        let term = Rational::new(
                            c * rising_even_product(l, t as usize),
                            BigInt::from(2).pow(t as u32) * factorial(t as u64),
                        );
                        acc = if t % 2 == 0 { acc + term } else { acc - term };
                    }
                    acc * Rational::from_integer(BigInt::from(-2).pow(n as u32))
                };
                if coeff.is_zero() {
                    continue;
                }
                let v = HSeries::monomial(order, n as usize, s.scale(&coeff));
                out.set(i1 * d2 + r2, i1 * d2 + c2, v);
            }
        }
    }
    out
}

/// `sqrt((j-m)! (j+k)! / ((j+m)! (j-k)!))`, the norm picked up by `J+^{k-m}`.
fn s_factor(j: HalfInt, k: HalfInt, m: HalfInt) -> RadicalSum {
    let f = |x: HalfInt| factorial(x.int() as u64);
    RadicalSum::sqrt_rational(&Rational::new(f(j - m) * f(j + k), f(j + m) * f(j - k)))
}

/// `R = F_21 F^{-1}` on `V_{j1} (x) V_{j2}`.
pub fn universal_r(j1: HalfInt, j2: HalfInt, order: usize) -> Matrix {
    let (d1, d2) = (j1.dim(), j2.dim());
    let f = twist_oracle(j1, j2, order);
    let f_rev = twist_oracle(j2, j1, order);
    let f21 = &(&flip(d2, d1, order) * &f_rev) * &flip(d1, d2, order);
    let inv = f.inverse_unipotent().expect("twist is unipotent");
    &f21 * &inv
}

/// The R matrix of the quantum plane in the fundamental representation,
/// as printed: rows `[1, h, -h, h^2]`, `[0, 1, 0, h]`, `[0, 0, 1, -h]`,
/// `[0, 0, 0, 1]`.
pub fn printed_r_matrix(order: usize) -> Matrix {
    let h = |k: usize, c: i64| HSeries::monomial(order, k, RadicalSum::from_int(c));
    let mut r = Matrix::identity(4, order);
    r.set(0, 1, h(1, 1));
    r.set(0, 2, h(1, -1));
    r.set(0, 3, h(2, 1));
    r.set(1, 3, h(1, 1));
    r.set(2, 3, h(1, -1));
    r
}

/// Outcome of matching the computed fundamental R matrix to the printed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct REquivalence {
    /// Transformations applied to the computed matrix, in order; empty when
    /// no combination matched.
    pub transforms: Vec<&'static str>,
    pub matched: bool,
}

/// Searches combinations of basis reversal, transposition, `h -> -h`,
/// factor flip and inversion that send `R` on `V_1/2 (x) V_1/2` to the
/// printed matrix, smallest combinations first.
pub fn r_equivalence_search(order: usize) -> REquivalence {
    let half = HalfInt::HALF;
    let ours = universal_r(half, half, order);
    let target = printed_r_matrix(order);
    let sw = flip(2, 2, order);
    let moves: Vec<(&'static str, Box<dyn Fn(&Matrix) -> Matrix>)> = vec![
        (
            "reverse weight order",
            Box::new(|m: &Matrix| m.permute(&[3, 2, 1, 0])),
        ),
        ("transpose", Box::new(|m: &Matrix| m.transpose())),
        ("h -> -h", Box::new(|m: &Matrix| m.negate_h())),
        ("flip factors", Box::new(move |m: &Matrix| &(&sw * m) * &sw)),
        (
            "inverse",
            Box::new(|m: &Matrix| m.inverse_unipotent().expect("unipotent")),
        ),
    ];
    let n = moves.len();
    let mut subsets: Vec<u32> = (0..(1u32 << n)).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    for s in subsets {
        let mut m = ours.clone();
        let mut names = Vec::new();
        for (i, (name, f)) in moves.iter().enumerate() {
            if s & (1 << i) != 0 {
                m = f(&m);
                names.push(*name);
            }
        }
        if m == target {
            return REquivalence {
                transforms: names,
                matched: true,
            };
        }
    }
    REquivalence {
        transforms: Vec::new(),
        matched: false,
    }
}

/// Twist and R-matrix checks for spins up to `max_spin`.
pub fn twist_suite(max_spin: HalfInt) -> Vec<CheckResult> {
    const SUITE: &str = "twist";
    let mut out = Vec::new();
    let spins: Vec<HalfInt> = HalfInt::spins_between(HalfInt::HALF, max_spin).collect();
    for &j1 in &spins {
        for &j2 in &spins {
            let order = exact_order(&[j1, j2]);
            let params = spin_params(&[j1, j2]);
            let oracle = twist_oracle(j1, j2, order);
            let closed = twist_closed_form(j1, j2, order, DoubleFactorialReading::Product);
            out.push(CheckResult::new(
                SUITE,
                "closed_form",
                "closed-form twist entries vs matrix elements of e^{-m1 sigma}",
                params.clone(),
                closed == oracle,
                "",
            ));
            out.push(CheckResult::new(
                SUITE,
                "exponential",
                "F = exp(-J0 (x) sigma / 2)",
                params.clone(),
                twist_exp(j1, j2, order) == oracle,
                "",
            ));
            let inv = oracle.inverse_unipotent().expect("twist is unipotent");
            out.push(CheckResult::new(
                SUITE,
                "inverse_symmetry",
                "F_{-n,-m} = (F^{-1})_{m,n}",
                params.clone(),
                inverse_symmetry_holds(j1, j2, &oracle, &inv),
                "",
            ));
            let r = universal_r(j1, j2, order);
            let r_rev = universal_r(j2, j1, order);
            let (d1, d2) = (j1.dim(), j2.dim());
            let r21 = &(&flip(d2, d1, order) * &r_rev) * &flip(d1, d2, order);
            out.push(CheckResult::new(
                SUITE,
                "triangularity",
                "R_21 R = 1",
                params.clone(),
                (&r21 * &r).is_identity(),
                "",
            ));
            let (a, b) = (spin_rep(j1, order), spin_rep(j2, order));
            let delta = twisted_tensor(&a, &b);
            let delta_op_rev = twisted_tensor(&b, &a);
            let ok = delta
                .generators()
                .iter()
                .zip(delta_op_rev.generators())
                .all(|(x, y)| {
                    let y_op = &(&flip(d2, d1, order) * y) * &flip(d1, d2, order);
                    &r * *x == &y_op * &r
                });
            out.push(CheckResult::new(
                SUITE,
                "intertwiner",
                "R twisted-coproduct = opposite twisted-coproduct R",
                params,
                ok,
                "",
            ));
        }
    }
    if max_spin.twice() >= 1 {
        let small: Vec<HalfInt> = spins.iter().copied().filter(|j| j.twice() <= 2).collect();
        for &j3 in &small {
            let triple = [HalfInt::HALF, HalfInt::HALF, j3];
            let order = exact_order(&triple);
            let ok = qybe_holds(&triple, order);
            out.push(CheckResult::new(
                SUITE,
                "yang_baxter",
                "R12 R13 R23 = R23 R13 R12",
                spin_params(&triple),
                ok,
                "",
            ));
        }
        let eq = r_equivalence_search(6);
        let detail = if eq.matched {
            if eq.transforms.is_empty() {
                "identical".to_string()
            } else {
                format!("equal after: {}", eq.transforms.join(", "))
            }
        } else {
            "no basis or convention change matches".to_string()
        };
        out.push(CheckResult::new(
            SUITE,
            "printed_r_matrix",
            "fundamental R matrix vs the printed 4x4 matrix",
            json!({}),
            eq.matched,
            detail,
        ));
    }
    out
}

fn inverse_symmetry_holds(j1: HalfInt, j2: HalfInt, f: &Matrix, inv: &Matrix) -> bool {
    let (d1, d2) = (j1.dim(), j2.dim());
    let idx = |i1: usize, i2: usize| i1 * d2 + i2;
    // index of -m is d - 1 - index of m
    for n1 in 0..d1 {
        for n2 in 0..d2 {
            for m1 in 0..d1 {
                for m2 in 0..d2 {
                    let lhs = f.get(idx(d1 - 1 - n1, d2 - 1 - n2), idx(d1 - 1 - m1, d2 - 1 - m2));
                    let rhs = inv.get(idx(m1, m2), idx(n1, n2));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn qybe_holds(spins: &[HalfInt; 3], order: usize) -> bool {
    let dims: Vec<usize> = spins.iter().map(|j| j.dim()).collect();
    let r12 = embed_two(&universal_r(spins[0], spins[1], order), &dims, 0, 1);
    let r13 = embed_two(&universal_r(spins[0], spins[2], order), &dims, 0, 2);
    let r23 = embed_two(&universal_r(spins[1], spins[2], order), &dims, 1, 2);
    &(&r12 * &r13) * &r23 == &(&r23 * &r13) * &r12
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hi(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn closed_form_matches_oracle() {
        for t1 in 1..=5 {
            for t2 in 1..=5 {
                let (j1, j2) = (hi(t1), hi(t2));
                let order = exact_order(&[j1, j2]);
                let closed = twist_closed_form(j1, j2, order, DoubleFactorialReading::Product);
                assert_eq!(closed, twist_oracle(j1, j2, order), "{j1} {j2}");
            }
        }
    }

    #[test]
    fn literal_double_factorial_reading_fails_at_zero_weight() {
        let (j1, j2) = (hi(2), hi(1));
        let order = exact_order(&[j1, j2]);
        let literal = twist_closed_form(j1, j2, order, DoubleFactorialReading::Literal);
        let oracle = twist_oracle(j1, j2, order);
        assert_ne!(literal, oracle);
        // m1 = 0 block: index 1 of V_1, so rows and columns 2..4
        assert!(literal.get(3, 2).degree() == Some(1));
        assert!(oracle.get(3, 2).is_zero());
        // half-integer first spin never hits l = 0
        let j1 = hi(3);
        let order = exact_order(&[j1, j2]);
        assert_eq!(
            twist_closed_form(j1, j2, order, DoubleFactorialReading::Literal),
            twist_oracle(j1, j2, order)
        );
    }

    #[test]
    fn exp_route_matches_oracle() {
        for t1 in 1..=4 {
            for t2 in 1..=4 {
                let order = exact_order(&[hi(t1), hi(t2)]);
                assert_eq!(
                    twist_exp(hi(t1), hi(t2), order),
                    twist_oracle(hi(t1), hi(t2), order)
                );
            }
        }
    }

    #[test]
    fn fundamental_r_is_lower_triangular() {
        let r = universal_r(hi(1), hi(1), 4);
        let h = |k: usize, c: i64| HSeries::monomial(4, k, RadicalSum::from_int(c));
        assert_eq!(r.get(1, 0), &h(1, -1));
        assert_eq!(r.get(2, 0), &h(1, 1));
        assert_eq!(r.get(3, 0), &h(2, 1));
        assert_eq!(r.get(3, 1), &h(1, -1));
        assert_eq!(r.get(3, 2), &h(1, 1));
        assert!(r.get(0, 1).is_zero());
    }

    #[test]
    fn printed_r_is_weight_reversal() {
        let eq = r_equivalence_search(4);
        assert!(eq.matched);
        assert_eq!(eq.transforms, vec!["reverse weight order"]);
    }

    #[test]
    fn suite_passes_to_spin_one() {
        let results = twist_suite(HalfInt::ONE);
        for r in &results {
            assert!(r.pass, "{}", r.text_line());
        }
        assert!(results.len() > 10);
    }
}
