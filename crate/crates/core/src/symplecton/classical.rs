use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::Algebra;
use crate::scalar::{binomial, factorial, rat, HSeries, HalfInt, RadicalSum, Rational};
use crate::weyl::{OrderedPoly, WeylElement};

use super::{SymplectonError, SymplectonLabel};

/// Which of the two defining sums to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// Sum of `abar^{j-m-s} a^{j+m} abar^s`, grown from `P_j^j = a^{2j}`.
    A,
    /// Sum of `a^s abar^{j-m} a^{j+m-s}`, grown from `P_j^{-j} = abar^{2j}`.
    B,
}

type Terms = Vec<((u32, u32), RadicalSum)>;

fn cache() -> &'static Mutex<HashMap<(i32, i32), Arc<Terms>>> {
    static CACHE: OnceLock<Mutex<HashMap<(i32, i32), Arc<Terms>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `2^{-n} sqrt((2j)! n! / (2j - n)!)`, the normalization in front of each form
/// with `n = j - m` (form A) or `n = j + m` (form B).
pub(crate) fn prefactor(j: HalfInt, n: i64) -> RadicalSum {
    let two_j = j.twice() as u64;
    let num = factorial(two_j) * factorial(n as u64);
    let den = factorial(two_j - n as u64);
    let root = RadicalSum::sqrt_rational(&Rational::new(num, den));
    root.scale(&rat(1, 1 << n))
}

/// Normal-ordered coefficients of `P_j^m` (form A), cached by label.
pub fn classical_terms(j: HalfInt, m: HalfInt) -> Arc<Terms> {
    let key = (j.twice(), m.twice());
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let terms: Terms = form_a_poly(j, m)
        .canonical_terms()
        .into_iter()
        .map(|(k, c)| (k, c.at_zero()))
        .collect();
    let arc = Arc::new(terms);
    cache().lock().unwrap().insert(key, arc.clone());
    arc
}

fn form_a_poly(j: HalfInt, m: HalfInt) -> OrderedPoly {
    let lo = (j - m).int();
    let hi = (j + m).int();
    let pre = prefactor(j, lo);
    let mut out = OrderedPoly::zero(0);
    for s in 0..=lo {
        let w = Rational::new(1.into(), factorial(s as u64) * factorial((lo - s) as u64));
        let c = pre.scale(&w);
        // abar^{lo-s} a^{hi} abar^s = sum_k C(lo-s,k) C(hi,k) k! a^{hi-k} abar^{lo-k}
        let n = lo - s;
        for k in 0..=n.min(hi) {
            let wk = binomial(n, k) * binomial(hi, k) * factorial(k as u64);
            let coeff = c.scale(&Rational::from_integer(wk));
            out.add_term(
                (hi - k) as u32,
                (lo - k) as u32,
                HSeries::constant(0, coeff),
            );
        }
    }
    out
}

/// The classical symplecton `P_j^m` expanded from either defining sum.
pub fn classical_symplecton(label: SymplectonLabel, form: Form, order: usize) -> WeylElement {
    let SymplectonLabel { j, m } = label;
    match form {
        Form::A => {
            let mut out = OrderedPoly::zero(order);
            for ((p, q), c) in classical_terms(j, m).iter() {
                out.add_term(*p, *q, HSeries::constant(order, c.clone()));
            }
            WeylElement::from_poly(out)
        }
        Form::B => {
            let lo = (j - m).int();
            let hi = (j + m).int();
            let pre = prefactor(j, hi);
            let a = WeylElement::a(order);
            let b = WeylElement::abar(order);
            let mid = b.pow(lo as usize);
            let mut acc = WeylElement::zero(order);
            for s in 0..=hi {
                let w = Rational::new(1.into(), factorial(s as u64) * factorial((hi - s) as u64));
                let term = a
                    .pow(s as usize)
                    .times(&mid)
                    .times(&a.pow((hi - s) as usize));
                acc = acc.plus(&term.scaled_radical(&pre.scale(&w)));
            }
            acc
        }
    }
}

/// Form A with the `1/(s!(j-m-s)!)` weights rescaled to binomials, written
/// without normal ordering, e.g. `(abar*a + a*abar)/sqrt(2)`.
pub fn defining_form_text(label: SymplectonLabel) -> String {
    let SymplectonLabel { j, m } = label;
    let lo = (j - m).int();
    let hi = (j + m).int();
    let mut words: Vec<(String, num_bigint::BigInt)> = Vec::new();
    for s in 0..=lo {
        let mut factors = Vec::new();
        push_power(&mut factors, "abar", lo - s);
        push_power(&mut factors, "a", hi);
        push_power(&mut factors, "abar", s);
        let word = if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        };
        let b = binomial(lo, s);
        match words.iter_mut().find(|(w, _)| *w == word) {
            Some(entry) => entry.1 += b,
            None => words.push((word, b)),
        }
    }
    // prefactor / (j-m)! = 2^{-(j-m)} sqrt(C(2j, j+m))
    let mut c = prefactor(j, lo).scale(&Rational::new(1.into(), factorial(lo as u64)));
    if words.len() == 1 {
        c = c.scale(&Rational::from_integer(words[0].1.clone()));
        words[0].1 = 1.into();
    }
    let rendered: Vec<String> = words
        .into_iter()
        .map(|(w, b)| if b == 1.into() { w } else { format!("{b}*{w}") })
        .collect();
    let body = if rendered.len() == 1 {
        rendered[0].clone()
    } else {
        format!("({})", rendered.join(" + "))
    };
    let sq = c
        .single_term_square()
        .expect("prefactor is a single radical");
    if c.is_one() {
        body
    } else if c.as_rational().is_none() && sq.numer() == &1.into() {
        format!("{body}/sqrt({})", sq.denom())
    } else {
        format!("{c}*{body}")
    }
}

fn push_power(out: &mut Vec<String>, sym: &str, n: i64) {
    match n {
        0 => {}
        1 => out.push(sym.to_string()),
        _ => out.push(format!("{sym}^{n}")),
    }
}

/// `P_j^m(abar, -a) = (-1)^{j-m} P_j^{-m}(a, abar)`, with the left side
/// re-normal-ordered.
pub fn symmetry_check(label: SymplectonLabel) -> bool {
    let lhs = classical_symplecton(label, Form::A, 0).symplectic_swap();
    let rhs = classical_symplecton(
        SymplectonLabel {
            j: label.j,
            m: -label.m,
        },
        Form::A,
        0,
    );
    let rhs = if (label.j - label.m).int() % 2 == 0 {
        rhs
    } else {
        rhs.scaled_int(-1)
    };
    lhs == rhs
}

pub(crate) fn validate(label: SymplectonLabel) -> Result<(), SymplectonError> {
    if label.j.admits(label.m) {
        Ok(())
    } else {
        Err(SymplectonError::InvalidLabel(label))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lbl(tj: i32, tm: i32) -> SymplectonLabel {
        SymplectonLabel::new(HalfInt::from_twice(tj), HalfInt::from_twice(tm)).unwrap()
    }

    #[test]
    fn low_spin_examples() {
        let o = 2;
        assert_eq!(
            classical_symplecton(lbl(1, -1), Form::A, o),
            WeylElement::abar(o)
        );
        assert_eq!(
            classical_symplecton(lbl(1, 1), Form::A, o),
            WeylElement::a(o)
        );
        let a2 = WeylElement::monomial(o, 2, 0, HSeries::one(o));
        assert_eq!(classical_symplecton(lbl(2, 2), Form::A, o), a2);
        let ba = WeylElement::abar(o).times(&WeylElement::a(o));
        let ab = WeylElement::a(o).times(&WeylElement::abar(o));
        let expected = ba
            .plus(&ab)
            .scaled_radical(&RadicalSum::sqrt_rational(&rat(1, 2)));
        assert_eq!(classical_symplecton(lbl(2, 0), Form::A, o), expected);
    }

    #[test]
    fn forms_agree() {
        for tj in 0..=6 {
            for tm in HalfInt::from_twice(tj).projections() {
                let l = lbl(tj, tm.twice());
                assert_eq!(
                    classical_symplecton(l, Form::A, 0),
                    classical_symplecton(l, Form::B, 0),
                    "{l:?}"
                );
            }
        }
    }

    #[test]
    fn symmetry_up_to_three() {
        for l in SymplectonLabel::all_up_to(HalfInt::from_int(3)) {
            assert!(symmetry_check(l), "{l}");
        }
    }

    #[test]
    fn defining_text() {
        assert_eq!(defining_form_text(lbl(2, 0)), "(abar*a + a*abar)/sqrt(2)");
        assert_eq!(defining_form_text(lbl(2, 2)), "a^2");
        assert_eq!(defining_form_text(lbl(1, -1)), "abar");
    }
}
