//! Finite-dimensional representations of sl(2) and the Jordanian twist acting
//! on them: the twist matrix, the universal R matrix, the twisted Hopf
//! structure and the map to the Ohn generators.

mod hopf;
mod matrix;
mod ohn;
mod twist;

use serde_json::json;

pub(crate) use hopf::antipode_word;
pub use hopf::{
    antipode, coproduct, eval_word, hopf_suite, twisted_tensor, Letter, Tensor, UElem, Word,
};
pub use matrix::{embed_two, flip, Matrix};
pub use ohn::{ohn_defects, ohn_generators, ohn_suite, OhnGenerators};
pub use twist::{
    printed_r_matrix, r_equivalence_search, twist_closed_form, twist_exp, twist_oracle,
    twist_suite, universal_r, DoubleFactorialReading, REquivalence,
};

use crate::report::CheckResult;
use crate::scalar::{HSeries, HalfInt, RadicalSum, Rational};

/// Images of `J0`, `J+`, `J-` on some vector space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub j0: Matrix,
    pub jp: Matrix,
    pub jm: Matrix,
}

impl Assignment {
    pub fn dim(&self) -> usize {
        self.j0.rows()
    }

    pub fn order(&self) -> usize {
        self.j0.order()
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.dim(), self.order())
    }

    pub fn generators(&self) -> [&Matrix; 3] {
        [&self.j0, &self.jp, &self.jm]
    }

    /// `e^{k sigma} = (1 - 2h J+)^{-k}`.
    pub fn exp_sigma(&self, k: &Rational) -> Matrix {
        let c = HSeries::from_int(self.order(), -2).shift(1);
        Matrix::binomial_power(&self.jp, &c, &-k)
    }

    pub fn exp_sigma_int(&self, k: i64) -> Matrix {
        self.exp_sigma(&Rational::from_integer(k.into()))
    }

    /// `sigma = -ln(1 - 2h J+)`.
    pub fn sigma(&self) -> Matrix {
        let x = self.jp.scale(&HSeries::from_int(self.order(), 2).shift(1));
        Matrix::neg_log_one_minus(&x)
    }

    /// The undeformed coproduct `X (x) 1 + 1 (x) X`.
    pub fn classical_tensor(&self, rhs: &Assignment) -> Assignment {
        let (i1, i2) = (self.identity(), rhs.identity());
        let lift = |a: &Matrix, b: &Matrix| &a.kron(&i2) + &i1.kron(b);
        Assignment {
            j0: lift(&self.j0, &rhs.j0),
            jp: lift(&self.jp, &rhs.jp),
            jm: lift(&self.jm, &rhs.jm),
        }
    }

    /// Defect of the sl(2) relations `[J0, J+-] = +-2 J+-`, `[J+, J-] = J0`;
    /// `None` when all three hold.
    pub fn sl2_defect(&self) -> Option<&'static str> {
        if self.j0.commutator(&self.jp) != self.jp.scale_rational(&Rational::from_integer(2.into()))
        {
            return Some("[J0, J+] != 2 J+");
        }
        if self.j0.commutator(&self.jm)
            != self.jm.scale_rational(&Rational::from_integer((-2).into()))
        {
            return Some("[J0, J-] != -2 J-");
        }
        if self.jp.commutator(&self.jm) != self.j0 {
            return Some("[J+, J-] != J0");
        }
        None
    }

    pub fn truncate(&self, order: usize) -> Assignment {
        Assignment {
            j0: self.j0.truncate(order),
            jp: self.jp.truncate(order),
            jm: self.jm.truncate(order),
        }
    }
}

/// Spin-`j` representation on `|j m>`, `m` ascending:
/// `J0 |m> = 2m |m>`, `J+ |m> = sqrt((j-m)(j+m+1)) |m+1>`.
pub fn spin_rep(j: HalfInt, order: usize) -> Assignment {
    let d = j.dim();
    let ms: Vec<HalfInt> = j.projections().collect();
    let ladder = |n: Rational| HSeries::constant(order, RadicalSum::sqrt_rational(&n));
    let mut j0 = Matrix::zero(d, d, order);
    let mut jp = Matrix::zero(d, d, order);
    let mut jm = Matrix::zero(d, d, order);
    let jr = j.to_rational();
    for (i, &m) in ms.iter().enumerate() {
        let mr = m.to_rational();
        j0.set(i, i, HSeries::from_int(order, m.twice() as i64));
        if i + 1 < d {
            jp.set(
                i + 1,
                i,
                ladder((&jr - &mr) * (&jr + &mr + Rational::from_integer(1.into()))),
            );
        }
        if i > 0 {
            jm.set(
                i - 1,
                i,
                ladder((&jr + &mr) * (&jr - &mr + Rational::from_integer(1.into()))),
            );
        }
    }
    Assignment { j0, jp, jm }
}

/// Truncation order at which every operator built from the twist on a tensor
/// product of the given spins is an exact polynomial in `h`.
///
/// Each power of `h` comes with one unit of raised weight, so the `h`-degree
/// of any entry is bounded by the total weight span.
pub fn exact_order(spins: &[HalfInt]) -> usize {
    spins.iter().map(|j| j.twice() as usize).sum::<usize>() + 4
}

/// Every check of the representation-theoretic layer for spins up to `max_spin`.
pub fn reps_checks(max_spin: HalfInt) -> Vec<CheckResult> {
    let mut out = twist_suite(max_spin);
    out.extend(hopf_suite(max_spin));
    out.extend(ohn_suite(max_spin));
    out
}

pub(crate) fn spin_params(spins: &[HalfInt]) -> serde_json::Value {
    let names = ["j1", "j2", "j3"];
    let mut map = serde_json::Map::new();
    for (n, j) in names.iter().zip(spins) {
        map.insert(n.to_string(), json!(j.to_string()));
    }
    serde_json::Value::Object(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_reps_satisfy_sl2() {
        for t in 0..=6 {
            let r = spin_rep(HalfInt::from_twice(t), 2);
            assert_eq!(r.sl2_defect(), None, "2j = {t}");
        }
    }

    #[test]
    fn spin_half_exp_sigma() {
        let r = spin_rep(HalfInt::HALF, 3);
        // J+ squares to zero, so e^{k sigma} = 1 + 2k h J+
        let e = r.exp_sigma_int(3);
        let expected = &r.identity() + &r.jp.scale(&HSeries::from_int(3, 6).shift(1));
        assert_eq!(e, expected);
        assert_eq!(r.sigma(), r.jp.scale(&HSeries::from_int(3, 2).shift(1)));
    }

    #[test]
    fn exp_sigma_is_exp_of_sigma() {
        for t in 1..=5 {
            let r = spin_rep(HalfInt::from_twice(t), 8);
            for k in [-2i64, -1, 1, 3] {
                let via_exp = Matrix::exp_nilpotent(
                    &r.sigma().scale_rational(&Rational::from_integer(k.into())),
                );
                assert_eq!(r.exp_sigma_int(k), via_exp);
            }
        }
    }

    #[test]
    fn unipotent_inverse() {
        let r = spin_rep(HalfInt::from_int(2), 6);
        let e = r.exp_sigma_int(1);
        let inv = e.inverse_unipotent().unwrap();
        assert!((&e * &inv).is_identity());
        assert_eq!(inv, r.exp_sigma_int(-1));
    }

    #[test]
    fn embedding_matches_kron() {
        let r = spin_rep(HalfInt::HALF, 2);
        let op = r.jp.kron(&r.j0);
        let id = r.identity();
        let dims = [2, 2, 2];
        assert_eq!(embed_two(&op, &dims, 0, 1), op.kron(&id));
        assert_eq!(embed_two(&op, &dims, 1, 2), id.kron(&op));
        let f = flip(2, 2, 2);
        let swapped = &(&f * &op) * &f;
        assert_eq!(swapped, r.j0.kron(&r.jp));
    }
}
