//! Symbolic words in `J0, J+, J-, e^{k sigma}` with the twisted coproduct and
//! antipode, evaluated in tensor products of spin representations.

use super::matrix::Matrix;
use super::twist::{twist_exp_on, twist_oracle};
use super::{exact_order, spin_params, spin_rep, Assignment};
use crate::report::CheckResult;
use crate::scalar::{HSeries, HalfInt, RadicalSum, Rational};
use crate::su2data::{cgc, CouplingLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    J0,
    Jp,
    Jm,
    /// `e^{k sigma}`.
    Exp(i64),
}

pub type Word = Vec<Letter>;

/// Linear combination of words.
pub type UElem = Vec<(HSeries, Word)>;

/// Linear combination of tensor products of words.
pub type Tensor = Vec<(HSeries, Word, Word)>;

fn c(order: usize, k: usize, num: i64, den: i64) -> HSeries {
    HSeries::monomial(
        order,
        k,
        RadicalSum::from_rational(Rational::new(num.into(), den.into())),
    )
}

/// The twisted coproduct of a generator.
pub fn coproduct(l: Letter, order: usize) -> Tensor {
    use Letter::*;
    let one = HSeries::one(order);
    match l {
        J0 => vec![
            (one.clone(), vec![J0], vec![Exp(1)]),
            (one, vec![], vec![J0]),
        ],
        Jp => vec![
            (one.clone(), vec![Jp], vec![]),
            (one, vec![Exp(-1)], vec![Jp]),
        ],
        Jm => vec![
            (one.clone(), vec![Jm], vec![Exp(1)]),
            (one, vec![], vec![Jm]),
            (c(order, 1, -1, 1), vec![J0], vec![Exp(1), J0]),
            // -(h/2) J0 (J0 + 2) (x) e^sigma (e^sigma - 1)
            (c(order, 1, -1, 2), vec![J0, J0], vec![Exp(2)]),
            (c(order, 1, 1, 2), vec![J0, J0], vec![Exp(1)]),
            (c(order, 1, -1, 1), vec![J0], vec![Exp(2)]),
            (c(order, 1, 1, 1), vec![J0], vec![Exp(1)]),
        ],
        Exp(k) => vec![(one, vec![Exp(k)], vec![Exp(k)])],
    }
}

/// The twisted antipode of a generator.
pub fn antipode(l: Letter, order: usize) -> UElem {
    use Letter::*;
    let neg = HSeries::from_int(order, -1);
    match l {
        J0 => vec![(neg, vec![J0, Exp(-1)])],
        Jp => vec![(neg, vec![Jp, Exp(1)])],
        Jm => vec![
            (neg, vec![Jm, Exp(-1)]),
            // -(h/2) J0^2 (e^{-sigma} + 1) e^{-sigma}
            (c(order, 1, -1, 2), vec![J0, J0, Exp(-2)]),
            (c(order, 1, -1, 2), vec![J0, J0, Exp(-1)]),
            // h J0 (e^{-sigma} - 1) e^{-sigma}
            (c(order, 1, 1, 1), vec![J0, Exp(-2)]),
            (c(order, 1, -1, 1), vec![J0, Exp(-1)]),
        ],
        Exp(k) => vec![(HSeries::one(order), vec![Exp(-k)])],
    }
}

/// Antipode of a word, as an anti-homomorphism.
pub(crate) fn antipode_word(w: &Word, order: usize) -> UElem {
    let mut acc: UElem = vec![(HSeries::one(order), vec![])];
    for &l in w.iter() {
        let s = antipode(l, order);
        let mut next = Vec::new();
        for (c1, w1) in &s {
            for (c2, w2) in &acc {
                let mut word = w1.clone();
                word.extend_from_slice(w2);
                next.push((c1 * c2, word));
            }
        }
        acc = next;
    }
    acc
}

pub fn eval_word(w: &[Letter], rep: &Assignment) -> Matrix {
    let mut acc = rep.identity();
    for l in w {
        let m = match l {
            Letter::J0 => rep.j0.clone(),
            Letter::Jp => rep.jp.clone(),
            Letter::Jm => rep.jm.clone(),
            Letter::Exp(k) => rep.exp_sigma_int(*k),
        };
        acc = &acc * &m;
    }
    acc
}

fn eval_elem(x: &UElem, rep: &Assignment) -> Matrix {
    let mut acc = Matrix::zero(rep.dim(), rep.dim(), rep.order());
    for (c, w) in x {
        acc = &acc + &eval_word(w, rep).scale(c);
    }
    acc
}

fn eval_tensor(t: &Tensor, a: &Assignment, b: &Assignment) -> Matrix {
    let mut acc = Matrix::zero(a.dim() * b.dim(), a.dim() * b.dim(), a.order());
    for (c, l, r) in t {
        acc = &acc + &eval_word(l, a).kron(&eval_word(r, b)).scale(c);
    }
    acc
}

/// Images of the generators on `A (x) B` under the twisted coproduct.
pub fn twisted_tensor(a: &Assignment, b: &Assignment) -> Assignment {
    let o = a.order();
    Assignment {
        j0: eval_tensor(&coproduct(Letter::J0, o), a, b),
        jp: eval_tensor(&coproduct(Letter::Jp, o), a, b),
        jm: eval_tensor(&coproduct(Letter::Jm, o), a, b),
    }
}

/// `m (S (x) id) Delta(x)` (or `m (id (x) S) Delta(x)` when `left` is false)
/// evaluated in `rep`.
fn antipode_contraction(l: Letter, rep: &Assignment, left: bool) -> Matrix {
    let o = rep.order();
    let mut acc = Matrix::zero(rep.dim(), rep.dim(), o);
    for (c, lw, rw) in coproduct(l, o) {
        let term = if left {
            &eval_elem(&antipode_word(&lw, o), rep) * &eval_word(&rw, rep)
        } else {
            &eval_word(&lw, rep) * &eval_elem(&antipode_word(&rw, o), rep)
        };
        acc = &acc + &term.scale(&c);
    }
    acc
}

fn counit(l: Letter, rep: &Assignment) -> Matrix {
    match l {
        Letter::Exp(_) => rep.identity(),
        _ => Matrix::zero(rep.dim(), rep.dim(), rep.order()),
    }
}

const GENERATORS: [Letter; 3] = [Letter::J0, Letter::Jp, Letter::Jm];

/// Hopf-algebra checks of the twisted structure for spins up to `max_spin`.
pub fn hopf_suite(max_spin: HalfInt) -> Vec<CheckResult> {
    const SUITE: &str = "hopf";
    let mut out = Vec::new();
    let spins: Vec<HalfInt> = HalfInt::spins_between(HalfInt::HALF, max_spin).collect();
    for &j in &spins {
        let order = exact_order(&[j]) + 2;
        let rep = spin_rep(j, order);
        let params = spin_params(&[j]);
        for left in [true, false] {
            let ok = GENERATORS
                .iter()
                .chain(&[Letter::Exp(1)])
                .all(|&l| antipode_contraction(l, &rep, left) == counit(l, &rep));
            out.push(CheckResult::new(
                SUITE,
                if left {
                    "antipode_left"
                } else {
                    "antipode_right"
                },
                if left {
                    "m(S (x) id) Delta = epsilon"
                } else {
                    "m(id (x) S) Delta = epsilon"
                },
                params.clone(),
                ok,
                "",
            ));
        }
    }
    for &j1 in &spins {
        for &j2 in &spins {
            let order = exact_order(&[j1, j2]);
            let (a, b) = (spin_rep(j1, order), spin_rep(j2, order));
            let params = spin_params(&[j1, j2]);
            let t = twisted_tensor(&a, &b);
            let defect = t.sl2_defect();
            out.push(CheckResult::new(
                SUITE,
                "homomorphism",
                "twisted coproduct preserves the sl(2) relations",
                params.clone(),
                defect.is_none(),
                defect.unwrap_or(""),
            ));
            let f = twist_oracle(j1, j2, order);
            let f_inv = f.inverse_unipotent().expect("twist is unipotent");
            let cl = a.classical_tensor(&b);
            let ok = t
                .generators()
                .iter()
                .zip(cl.generators())
                .all(|(x, y)| **x == &(&f * y) * &f_inv);
            out.push(CheckResult::new(
                SUITE,
                "twist_conjugation",
                "twisted coproduct = F Delta F^{-1}",
                params.clone(),
                ok,
                "",
            ));
            let e_sigma_ok = t.exp_sigma_int(1) == a.exp_sigma_int(1).kron(&b.exp_sigma_int(1));
            let sigma_ok =
                t.sigma() == &a.sigma().kron(&b.identity()) + &a.identity().kron(&b.sigma());
            out.push(CheckResult::new(
                SUITE,
                "sigma_primitive",
                "Delta sigma = sigma (x) 1 + 1 (x) sigma",
                params.clone(),
                e_sigma_ok && sigma_ok,
                "",
            ));
            out.push(CheckResult::new(
                SUITE,
                "coupled_vectors",
                "F applied to classically coupled vectors spans irreducible blocks",
                params,
                coupled_vectors_hold(j1, j2, order, &t, &f),
                "",
            ));
        }
    }
    let small: Vec<HalfInt> = spins.iter().copied().filter(|j| j.twice() <= 2).collect();
    for &j1 in &small {
        for &j2 in &small {
            for &j3 in &small {
                if j1.twice() + j2.twice() + j3.twice() > 4 {
                    continue;
                }
                let triple = [j1, j2, j3];
                let order = exact_order(&triple);
                let reps: Vec<Assignment> = triple.iter().map(|&j| spin_rep(j, order)).collect();
                let params = spin_params(&triple);
                let left = twisted_tensor(&twisted_tensor(&reps[0], &reps[1]), &reps[2]);
                let right = twisted_tensor(&reps[0], &twisted_tensor(&reps[1], &reps[2]));
                out.push(CheckResult::new(
                    SUITE,
                    "coassociativity",
                    "(Delta (x) id) Delta = (id (x) Delta) Delta",
                    params.clone(),
                    left == right,
                    "",
                ));
                out.push(CheckResult::new(
                    SUITE,
                    "cocycle",
                    "F_12 (Delta (x) id)(F) = F_23 (id (x) Delta)(F)",
                    params,
                    cocycle_holds(&reps),
                    "",
                ));
            }
        }
    }
    out
}

fn cocycle_holds(reps: &[Assignment]) -> bool {
    let (a, b, c) = (&reps[0], &reps[1], &reps[2]);
    let f12 = twist_exp_on(a, b).kron(&c.identity());
    let f23 = a.identity().kron(&twist_exp_on(b, c));
    let ab = a.classical_tensor(b);
    let bc = b.classical_tensor(c);
    let lhs = &f12 * &twist_exp_on(&ab, c);
    let rhs = &f23 * &twist_exp_on(a, &bc);
    lhs == rhs
}

fn coupled_vectors_hold(
    j1: HalfInt,
    j2: HalfInt,
    order: usize,
    t: &Assignment,
    f: &Matrix,
) -> bool {
    let d2 = j2.dim();
    let dim = j1.dim() * d2;
    let lo = (j1.twice() - j2.twice()).abs();
    for tj in (lo..=(j1.twice() + j2.twice())).step_by(2) {
        let j = HalfInt::from_twice(tj);
        let vecs: Vec<Matrix> = j
            .projections()
            .map(|m| {
                let mut v = Matrix::zero(dim, 1, order);
                for (i1, m1) in j1.projections().enumerate() {
                    for (i2, m2) in j2.projections().enumerate() {
                        let cg = cgc(CouplingLabel::new(j1, j2, j, m1, m2, m));
                        if !cg.is_zero() {
                            v.set(i1 * d2 + i2, 0, HSeries::constant(order, cg));
                        }
                    }
                }
                f * &v
            })
            .collect();
        let basis = spin_rep(j, order);
        for (i, v) in vecs.iter().enumerate() {
            for (op, img) in [(&t.j0, &basis.j0), (&t.jp, &basis.jp), (&t.jm, &basis.jm)] {
                let lhs = op * v;
                let mut rhs = Matrix::zero(dim, 1, order);
                for (k, w) in vecs.iter().enumerate() {
                    let coeff = img.get(k, i);
                    if !coeff.is_zero() {
                        rhs = &rhs + &w.scale(coeff);
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_half_pair_is_homomorphic() {
        let h = HalfInt::HALF;
        let order = exact_order(&[h, h]);
        let t = twisted_tensor(&spin_rep(h, order), &spin_rep(h, order));
        assert_eq!(t.sl2_defect(), None);
    }

    #[test]
    fn antipode_of_exp_is_inverse() {
        let w = vec![Letter::Exp(1), Letter::J0];
        let s = antipode_word(&w, 2);
        // S(e^sigma J0) = S(J0) S(e^sigma) = -J0 e^{-sigma} e^{-sigma}
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].1, vec![Letter::J0, Letter::Exp(-1), Letter::Exp(-1)]);
    }

    #[test]
    fn suite_passes_to_spin_one() {
        for r in hopf_suite(HalfInt::ONE) {
            assert!(r.pass, "{}", r.text_line());
        }
    }
}
