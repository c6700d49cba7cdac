//! Classical sl(2) coupling data: Clebsch-Gordan and Racah coefficients,
//! triangle functions, the monomial basis `Phi_{jm}` and the recoupling
//! identity relating two coupling orders of a triple product.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use serde_json::json;

use crate::report::CheckResult;
use crate::scalar::{factorial, rat, HalfInt, RadicalSum, Rational};

/// Labels of `C^{j1 j2 j}_{m1 m2 m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CouplingLabel {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j: HalfInt,
    pub m1: HalfInt,
    pub m2: HalfInt,
    pub m: HalfInt,
}

impl CouplingLabel {
    pub fn new(j1: HalfInt, j2: HalfInt, j: HalfInt, m1: HalfInt, m2: HalfInt, m: HalfInt) -> Self {
        CouplingLabel {
            j1,
            j2,
            j,
            m1,
            m2,
            m,
        }
    }
}

impl fmt::Display for CouplingLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<{},{};{},{}|{},{}>",
            self.j1, self.m1, self.j2, self.m2, self.j, self.m
        )
    }
}

/// `|a-b| <= c <= a+b` with `a+b+c` integral.
pub fn triangle(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    let (a, b, c) = (a.twice(), b.twice(), c.twice());
    a >= 0 && b >= 0 && c >= 0 && c <= a + b && c >= (a - b).abs() && (a + b + c) % 2 == 0
}

fn fact(n: i64) -> BigInt {
    factorial(n as u64)
}

/// `n!` as a rational, or `None` for negative arguments.
fn fact_checked(n: i64) -> Option<BigInt> {
    (n >= 0).then(|| fact(n))
}

/// Clebsch-Gordan coefficient in the Condon-Shortley convention, from
/// Racah's closed-form sum; zero outside the selection rules.
pub fn cgc(l: CouplingLabel) -> RadicalSum {
    let CouplingLabel {
        j1,
        j2,
        j,
        m1,
        m2,
        m,
    } = l;
    if m1 + m2 != m || !triangle(j1, j2, j) || !j1.admits(m1) || !j2.admits(m2) || !j.admits(m) {
        return RadicalSum::zero();
    }
    let i = |x: HalfInt| x.int();
    let radicand = Rational::new(
        BigInt::from(j.twice() + 1)
            * fact(i(j1 + j2 - j))
            * fact(i(j1 - j2 + j))
            * fact(i(j2 - j1 + j))
            * fact(i(j1 + m1))
            * fact(i(j1 - m1))
            * fact(i(j2 + m2))
            * fact(i(j2 - m2))
            * fact(i(j + m))
            * fact(i(j - m)),
        fact(i(j1 + j2 + j) + 1),
    );
    let mut sum = Rational::zero();
    for k in 0..=i(j1 + j2 - j) {
        let parts = [
            k,
            i(j1 + j2 - j) - k,
            i(j1 - m1) - k,
            i(j2 + m2) - k,
            i(j - j2 + m1) + k,
            i(j - j1 - m2) + k,
        ];
        if parts.iter().any(|&p| p < 0) {
            continue;
        }
        let den: BigInt = parts.iter().map(|&p| fact(p)).product();
        let sign = if k % 2 == 0 { 1 } else { -1 };
        sum += Rational::new(BigInt::from(sign), den);
    }
    RadicalSum::sqrt_rational(&radicand).scale(&sum)
}

/// `Delta(abc) = sqrt((a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!)`, squared.
fn delta_sq(a: HalfInt, b: HalfInt, c: HalfInt) -> Rational {
    let i = |x: HalfInt| x.int();
    Rational::new(
        fact(i(a + b - c)) * fact(i(a - b + c)) * fact(i(b + c - a)),
        fact(i(a + b + c) + 1),
    )
}

/// Racah coefficient `W(abcd; ef)` from its closed-form sum; zero unless
/// `(abe)`, `(cde)`, `(acf)`, `(bdf)` are all triads.
pub fn racah_w(
    a: HalfInt,
    b: HalfInt,
    c: HalfInt,
    d: HalfInt,
    e: HalfInt,
    f: HalfInt,
) -> RadicalSum {
    if !(triangle(a, b, e) && triangle(c, d, e) && triangle(a, c, f) && triangle(b, d, f)) {
        return RadicalSum::zero();
    }
    let i = |x: HalfInt| x.int();
    let pre = delta_sq(a, b, e) * delta_sq(c, d, e) * delta_sq(a, c, f) * delta_sq(b, d, f);
    let lo = [i(a + b + e), i(c + d + e), i(a + c + f), i(b + d + f)]
        .into_iter()
        .max()
        .unwrap();
    let hi = [i(a + b + c + d), i(a + d + e + f), i(b + c + e + f)]
        .into_iter()
        .min()
        .unwrap();
    let phase = i(a + b + c + d);
    let mut sum = Rational::zero();
    for k in lo..=hi {
        let den: Option<BigInt> = [
            k - i(a + b + e),
            k - i(c + d + e),
            k - i(a + c + f),
            k - i(b + d + f),
            i(a + b + c + d) - k,
            i(a + d + e + f) - k,
            i(b + c + e + f) - k,
        ]
        .iter()
        .map(|&p| fact_checked(p))
        .product();
        let Some(den) = den else { continue };
        let sign = if (k + phase) % 2 == 0 { 1 } else { -1 };
        sum += Rational::new(BigInt::from(sign) * fact(k + 1), den);
    }
    RadicalSum::sqrt_rational(&pre).scale(&sum)
}

/// Triangle function `nabla(abc)`; zero outside a triad.
pub fn nabla(a: HalfInt, b: HalfInt, c: HalfInt) -> RadicalSum {
    if !triangle(a, b, c) {
        return RadicalSum::zero();
    }
    let inv = delta_sq(a, b, c);
    RadicalSum::sqrt_rational(&(Rational::one() / inv))
}

/// `(nabla(k j j'), <k|j|j'>)` with `<k|j|j'> = 2^{k-j-j'} (2k+1)^{-1/2} nabla(k j j')`.
pub fn nabla_and_bracket(k: HalfInt, j: HalfInt, jp: HalfInt) -> (RadicalSum, RadicalSum) {
    if !triangle(k, j, jp) {
        return (RadicalSum::zero(), RadicalSum::zero());
    }
    let n = nabla(k, j, jp);
    let shift = (j + jp - k).int();
    let two = Rational::from_integer(BigInt::one() << shift as usize);
    let bracket = n.clone()
        * RadicalSum::sqrt_rational(&rat(1, (k.twice() + 1) as i64))
            .scale(&(Rational::one() / two));
    (n, bracket)
}

/// Commutative polynomial in `xi`, `eta`, keyed by `(xi power, eta power)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PhiPoly {
    terms: BTreeMap<(u32, u32), RadicalSum>,
}

impl PhiPoly {
    pub fn monomial(xi: u32, eta: u32, c: RadicalSum) -> Self {
        let mut out = PhiPoly::default();
        out.add_term(xi, eta, c);
        out
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), RadicalSum> {
        &self.terms
    }

    pub fn add_term(&mut self, xi: u32, eta: u32, c: RadicalSum) {
        let slot = self.terms.entry((xi, eta)).or_insert_with(RadicalSum::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&(xi, eta));
        }
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|(a, b)| a + b == degree)
    }
}

impl fmt::Display for PhiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(x, e), c)| {
                let mut fs = Vec::new();
                if !c.is_one() {
                    fs.push(format!("({c})"));
                }
                for (sym, n) in [("xi", x), ("eta", e)] {
                    match n {
                        0 => {}
                        1 => fs.push(sym.to_string()),
                        _ => fs.push(format!("{sym}^{n}")),
                    }
                }
                if fs.is_empty() {
                    "1".to_string()
                } else {
                    fs.join("*")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `Phi_{jm} = xi^{j+m} eta^{j-m} / sqrt((j+m)!(j-m)!)`.
pub fn phi_basis(j: HalfInt, m: HalfInt) -> PhiPoly {
    let p = (j + m).int();
    let q = (j - m).int();
    let c = RadicalSum::sqrt_rational(&Rational::new(BigInt::one(), fact(p) * fact(q)));
    PhiPoly::monomial(p as u32, q as u32, c)
}

/// Which argument order of `W` multiplies `sqrt((2d+1)(2f+1))` in the
/// recoupling identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RecouplingOrder {
    /// `W(a b c e; d f)`, the order displayed alongside the identity.
    AsDisplayed,
    /// `W(a b e c; d f)`, the order of the standard recoupling coefficient.
    Standard,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RacahIdentityReport {
    pub pass: bool,
    pub cases: usize,
    pub counterexample: Option<String>,
}

/// Checks, for every magnetic assignment and every intermediate `d`,
/// `sum_delta C^{d c e}_{delta gamma eps} C^{a b d}_{alpha beta delta}
///   = sum_{f, rho} C^{a f e}_{alpha rho eps} C^{b c f}_{beta gamma rho} sqrt((2d+1)(2f+1)) W`.
pub fn verify_racah_identity(
    a: HalfInt,
    b: HalfInt,
    c: HalfInt,
    e: HalfInt,
    order: RecouplingOrder,
) -> RacahIdentityReport {
    let mut cases = 0;
    let d_range: Vec<HalfInt> = spins_in_triangle(a, b);
    let f_range: Vec<HalfInt> = spins_in_triangle(b, c);
    for al in a.projections() {
        for be in b.projections() {
            for ga in c.projections() {
                let eps = al + be + ga;
                for &d in &d_range {
                    cases += 1;
                    let delta = al + be;
                    let lhs = cgc(CouplingLabel::new(d, c, e, delta, ga, eps))
                        * cgc(CouplingLabel::new(a, b, d, al, be, delta));
                    let mut rhs = RadicalSum::zero();
                    let rho = be + ga;
                    for &f in &f_range {
                        let w = match order {
                            RecouplingOrder::AsDisplayed => racah_w(a, b, c, e, d, f),
                            RecouplingOrder::Standard => racah_w(a, b, e, c, d, f),
                        };
                        if w.is_zero() {
                            continue;
                        }
                        let norm = RadicalSum::sqrt_int(((d.twice() + 1) * (f.twice() + 1)) as u64);
                        rhs += &(cgc(CouplingLabel::new(a, f, e, al, rho, eps))
                            * cgc(CouplingLabel::new(b, c, f, be, ga, rho))
                            * norm
                            * w);
                    }
                    if lhs != rhs {
                        return RacahIdentityReport {
                            pass: false,
                            cases,
                            counterexample: Some(format!(
                                "a={a} b={b} c={c} e={e} d={d} alpha={al} beta={be} gamma={ga}: lhs={lhs} rhs={rhs}"
                            )),
                        };
                    }
                }
            }
        }
    }
    RacahIdentityReport {
        pass: true,
        cases,
        counterexample: None,
    }
}

/// `|a-b|, ..., a+b`.
pub fn spins_in_triangle(a: HalfInt, b: HalfInt) -> Vec<HalfInt> {
    HalfInt::spins_between((a - b).abs(), a + b)
        .filter(|&c| triangle(a, b, c))
        .collect()
}

/// Checks `nabla(acf) nabla(bdf) = (2f+1) sum_e W(abcd;ef) nabla(abe) nabla(cde)`
/// for one assignment; returns `(lhs, rhs)`.
pub fn triangle_function_identity(
    a: HalfInt,
    b: HalfInt,
    c: HalfInt,
    d: HalfInt,
    f: HalfInt,
) -> (RadicalSum, RadicalSum) {
    let lhs = nabla(a, c, f) * nabla(b, d, f);
    let mut rhs = RadicalSum::zero();
    for e in spins_in_triangle(a, b) {
        let w = racah_w(a, b, c, d, e, f);
        rhs += &(w * nabla(a, b, e) * nabla(c, d, e));
    }
    (
        lhs,
        rhs.scale(&Rational::from_integer(BigInt::from(f.twice() + 1))),
    )
}

/// Coupled states built from `J+ psi = 0` in the top weight and repeated
/// lowering, independent of the closed-form sum. Keys are `(m1, m2)`.
pub fn cgc_by_lowering(
    j1: HalfInt,
    j2: HalfInt,
    j: HalfInt,
) -> BTreeMap<(HalfInt, HalfInt), RadicalSum> {
    let raise = |jj: HalfInt, m: HalfInt| {
        RadicalSum::sqrt_rational(&((jj - m).to_rational() * (jj + m + HalfInt::ONE).to_rational()))
    };
    let lower = |jj: HalfInt, m: HalfInt| {
        RadicalSum::sqrt_rational(&((jj + m).to_rational() * (jj - m + HalfInt::ONE).to_rational()))
    };
    // top weight m = j: components x_{m1} with m2 = j - m1
    let mut top: BTreeMap<HalfInt, RadicalSum> = BTreeMap::new();
    let m1s: Vec<HalfInt> = j1.projections().filter(|&m1| j2.admits(j - m1)).collect();
    let start = *m1s.last().unwrap();
    top.insert(start, RadicalSum::one());
    let mut prev = start;
    for &m1 in m1s.iter().rev().skip(1) {
        // coefficient of |m1+1, j-m1> in J+ psi: x_{m1} raise(j1,m1) + x_{m1+1} raise(j2, j-m1-1) = 0
        let x_next = &top[&prev];
        let num = -(x_next * &raise(j2, j - m1 - HalfInt::ONE));
        let den = raise(j1, m1).inverse_single().unwrap();
        top.insert(m1, num * den);
        prev = m1;
    }
    let norm_sq = top
        .values()
        .map(|x| x.single_term_square().unwrap())
        .fold(Rational::zero(), |a, b| a + b);
    let inv = RadicalSum::sqrt_rational(&norm_sq)
        .inverse_single()
        .unwrap();
    let mut state: BTreeMap<(HalfInt, HalfInt), RadicalSum> = top
        .into_iter()
        .map(|(m1, x)| ((m1, j - m1), x * inv.clone()))
        .collect();
    let mut out = state.clone();
    let mut m = j;
    while m > -j {
        let mut next: BTreeMap<(HalfInt, HalfInt), RadicalSum> = BTreeMap::new();
        for (&(m1, m2), x) in &state {
            if m1 > -j1 {
                *next
                    .entry((m1 - HalfInt::ONE, m2))
                    .or_insert_with(RadicalSum::zero) += &(x * &lower(j1, m1));
            }
            if m2 > -j2 {
                *next
                    .entry((m1, m2 - HalfInt::ONE))
                    .or_insert_with(RadicalSum::zero) += &(x * &lower(j2, m2));
            }
        }
        let inv = lower(j, m).inverse_single().unwrap();
        state = next
            .into_iter()
            .map(|(k, x)| (k, x * inv.clone()))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        out.extend(state.clone());
        m = m - HalfInt::ONE;
    }
    out
}

/// Every classical coupling check with spins up to `max_spin`; the
/// recoupling and triangle-function identities stop at `3/2`.
pub fn su2data_suite(max_spin: HalfInt, strict: bool) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let spins: Vec<HalfInt> = HalfInt::spins_between(HalfInt::HALF, max_spin).collect();
    for &j1 in &spins {
        for &j2 in spins.iter().filter(|&&j2| j2 <= j1) {
            let params = json!({ "j1": j1.to_string(), "j2": j2.to_string() });
            let js = spins_in_triangle(j1, j2);
            let mut bad = Vec::new();
            for &j in &js {
                for &jj in &js {
                    for m in j.projections().filter(|&m| jj.admits(m)) {
                        let mut s = RadicalSum::zero();
                        for m1 in j1.projections().filter(|&m1| j2.admits(m - m1)) {
                            s += &(cgc(CouplingLabel::new(j1, j2, j, m1, m - m1, m))
                                * cgc(CouplingLabel::new(j1, j2, jj, m1, m - m1, m)));
                        }
                        let ok = if j == jj { s.is_one() } else { s.is_zero() };
                        if !ok {
                            bad.push(format!("j={j} j'={jj} m={m}: {s}"));
                        }
                    }
                }
            }
            out.push(su2_check(
                "cgc_orthogonality",
                "sum_m1m2 C^{j1j2j}C^{j1j2j'} = delta_jj'",
                params.clone(),
                bad,
            ));

            let mut bad = Vec::new();
            for &j in &js {
                let oracle = cgc_by_lowering(j1, j2, j);
                for m1 in j1.projections() {
                    for m2 in j2.projections().filter(|&m2| j.admits(m1 + m2)) {
                        let expected = oracle
                            .get(&(m1, m2))
                            .cloned()
                            .unwrap_or_else(RadicalSum::zero);
                        if cgc(CouplingLabel::new(j1, j2, j, m1, m2, m1 + m2)) != expected {
                            bad.push(format!("j={j} m1={m1} m2={m2}"));
                        }
                    }
                }
            }
            out.push(su2_check(
                "cgc_lowering",
                "closed-form C = highest weight plus lowering",
                params,
                bad,
            ));
        }
    }
    let small: Vec<HalfInt> =
        HalfInt::spins_between(HalfInt::ZERO, max_spin.min(HalfInt::from_twice(3))).collect();
    if spins.is_empty() {
        return out;
    }
    let mut orders = vec![RecouplingOrder::Standard];
    if strict {
        orders.push(RecouplingOrder::AsDisplayed);
    }
    for order in orders {
        for &a in &small {
            for &b in &small {
                let mut cases = 0;
                let mut bad = Vec::new();
                for &c in &small {
                    for &e in &small {
                        let r = verify_racah_identity(a, b, c, e, order);
                        cases += r.cases;
                        bad.extend(r.counterexample);
                    }
                }
                let name = match order {
                    RecouplingOrder::Standard => "recoupling_identity",
                    RecouplingOrder::AsDisplayed => "recoupling_identity_displayed_order",
                };
                out.push(su2_check(
                    name,
                    "sum C C = sum_f C C sqrt((2d+1)(2f+1)) W",
                    json!({ "a": a.to_string(), "b": b.to_string(), "cases": cases }),
                    bad,
                ));
            }
        }
    }
    let mut bad = Vec::new();
    for &a in &small {
        for &b in &small {
            for &c in &small {
                for &d in &small {
                    for &f in &small {
                        let (l, r) = triangle_function_identity(a, b, c, d, f);
                        if l != r {
                            bad.push(format!("a={a} b={b} c={c} d={d} f={f}"));
                        }
                    }
                }
            }
        }
    }
    out.push(su2_check(
        "triangle_function_identity",
        "nabla(acf)nabla(bdf) = (2f+1) sum_e W nabla(abe)nabla(cde)",
        json!({ "max": small.last().map(|j| j.to_string()) }),
        bad,
    ));
    out
}

fn su2_check(
    check: &str,
    paper_ref: &str,
    params: serde_json::Value,
    bad: Vec<String>,
) -> CheckResult {
    CheckResult::new(
        "su2data",
        check,
        paper_ref,
        params,
        bad.is_empty(),
        bad.join("; "),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn c6(j1: i32, m1: i32, j2: i32, m2: i32, j: i32, m: i32) -> RadicalSum {
        cgc(CouplingLabel::new(h(j1), h(j2), h(j), h(m1), h(m2), h(m)))
    }

    #[test]
    fn cgc_examples() {
        assert!(c6(1, 1, 1, 1, 2, 2).is_one());
        assert_eq!(
            c6(1, -1, 1, 1, 0, 0),
            -RadicalSum::sqrt_rational(&rat(1, 2))
        );
        assert_eq!(c6(1, 1, 1, -1, 2, 0), RadicalSum::sqrt_rational(&rat(1, 2)));
        assert!(c6(1, 1, 1, 1, 2, 0).is_zero());
    }

    #[test]
    fn cgc_matches_lowering_oracle() {
        for t1 in 0..=6 {
            for t2 in 0..=6 {
                for j in spins_in_triangle(h(t1), h(t2)) {
                    let oracle = cgc_by_lowering(h(t1), h(t2), j);
                    for m1 in h(t1).projections() {
                        for m2 in h(t2).projections() {
                            let m = m1 + m2;
                            if !j.admits(m) {
                                continue;
                            }
                            let expected = oracle
                                .get(&(m1, m2))
                                .cloned()
                                .unwrap_or_else(RadicalSum::zero);
                            let got = cgc(CouplingLabel::new(h(t1), h(t2), j, m1, m2, m));
                            assert_eq!(
                                got,
                                expected,
                                "j1={} j2={} j={j} m1={m1} m2={m2}",
                                h(t1),
                                h(t2)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orthogonality() {
        for t1 in 0..=4 {
            for t2 in 0..=4 {
                let js = spins_in_triangle(h(t1), h(t2));
                for &j in &js {
                    for &jj in &js {
                        for m in j.projections().filter(|&m| jj.admits(m)) {
                            let mut s = RadicalSum::zero();
                            for m1 in h(t1).projections() {
                                let m2 = m - m1;
                                s += &(cgc(CouplingLabel::new(h(t1), h(t2), j, m1, m2, m))
                                    * cgc(CouplingLabel::new(h(t1), h(t2), jj, m1, m2, m)));
                            }
                            assert_eq!(s.is_one(), j == jj);
                            assert_eq!(s.is_zero(), j != jj);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn nabla_examples() {
        let (n, br) = nabla_and_bracket(h(2), h(1), h(1));
        assert_eq!(n, RadicalSum::sqrt_int(6));
        let (_, br0) = nabla_and_bracket(h(0), h(1), h(1));
        assert_eq!(br0, RadicalSum::sqrt_rational(&rat(1, 2)));
        assert!(nabla(h(0), h(0), h(0)).is_one());
        assert!(!br.is_zero());
        assert!(nabla_and_bracket(h(4), h(1), h(1)).0.is_zero());
    }

    #[test]
    fn racah_small_values() {
        // W(a a c c; 0 f) = (-1)^{a+c-f} / sqrt((2a+1)(2c+1))
        let w = racah_w(h(1), h(1), h(1), h(1), h(0), h(0));
        assert_eq!(w, RadicalSum::from_rational(rat(-1, 2)));
        assert!(racah_w(h(1), h(1), h(1), h(1), h(4), h(0)).is_zero());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(
            phi_basis(h(1), h(1)),
            PhiPoly::monomial(1, 0, RadicalSum::one())
        );
        assert_eq!(
            phi_basis(h(2), h(0)),
            PhiPoly::monomial(1, 1, RadicalSum::one())
        );
        assert_eq!(
            phi_basis(h(2), h(2)),
            PhiPoly::monomial(2, 0, RadicalSum::sqrt_rational(&rat(1, 2)))
        );
    }

    #[test]
    fn recoupling_identity_small() {
        let r = verify_racah_identity(h(1), h(1), h(1), h(1), RecouplingOrder::Standard);
        assert!(r.pass, "{r:?}");
        let r = verify_racah_identity(h(2), h(1), h(1), h(2), RecouplingOrder::Standard);
        assert!(r.pass, "{r:?}");
        let r = verify_racah_identity(h(1), h(1), h(1), h(7), RecouplingOrder::Standard);
        assert!(r.pass);
    }

    #[test]
    fn displayed_argument_order_fails() {
        let r = verify_racah_identity(h(0), h(1), h(0), h(1), RecouplingOrder::AsDisplayed);
        assert!(!r.pass);
        let r = verify_racah_identity(h(0), h(1), h(0), h(1), RecouplingOrder::Standard);
        assert!(r.pass);
    }

    #[test]
    fn suite_passes_to_spin_one() {
        let r = su2data_suite(h(2), false);
        assert!(r.iter().any(|c| c.check == "recoupling_identity"));
        for c in r {
            assert!(c.pass, "{}", c.text_line());
        }
        assert!(su2data_suite(HalfInt::ZERO, false).is_empty());
    }

    #[test]
    fn triangle_identity_small() {
        for (a, b, c, d, f) in [(1, 1, 1, 1, 2), (2, 1, 1, 2, 2), (1, 2, 2, 1, 1)] {
            let (l, r) = triangle_function_identity(h(a), h(b), h(c), h(d), h(f));
            assert_eq!(l, r, "{a} {b} {c} {d} {f}");
        }
    }
}
