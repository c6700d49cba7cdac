use super::matrix::Matrix;
use super::{spin_params, spin_rep, Assignment};
use crate::report::CheckResult;
use crate::scalar::{HSeries, HalfInt, Rational};

/// Images of the Ohn generators `H, X, Y` in a representation. The series
/// order drops by one relative to the input because `X = sigma / 2h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OhnGenerators {
    pub h: Matrix,
    pub x: Matrix,
    pub y: Matrix,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `H = e^{-sigma/2} J0`, `X = sigma / 2h`,
/// `Y = e^{-sigma/2} (J- + (h/2) J0^2) - (h/8) e^{sigma/2} (e^{-sigma} - 1)`.
pub fn ohn_generators(rep: &Assignment) -> OhnGenerators {
    let o = rep.order();
    let hh = HSeries::h(o);
    let e_mhalf = rep.exp_sigma(&q(-1, 2));
    let e_half = rep.exp_sigma(&q(1, 2));
    let h = &e_mhalf * &rep.j0;
    let x = rep
        .sigma()
        .scale_rational(&q(1, 2))
        .divide_exact(1)
        .expect("sigma is divisible by h");
    let inner = &rep.jm + &(&rep.j0 * &rep.j0).scale(&hh.scale_rational(&q(1, 2)));
    let tail =
        (&e_half * &(&rep.exp_sigma_int(-1) - &rep.identity())).scale(&hh.scale_rational(&q(1, 8)));
    let y = &(&e_mhalf * &inner) - &tail;
    let lower = o - 1;
    OhnGenerators {
        h: h.truncate(lower),
        x,
        y: y.truncate(lower),
    }
}

/// `sinh(hX)` and `cosh(hX)` as terminating series in the nilpotent `hX`.
fn sinh_cosh(hx: &Matrix) -> (Matrix, Matrix) {
    let n = hx.rows();
    let o = hx.order();
    let mut sinh = Matrix::zero(n, n, o);
    let mut cosh = Matrix::identity(n, o);
    let mut term = Matrix::identity(n, o);
    for k in 1.. {
        term = (&term * hx).scale_rational(&q(1, k));
        if term.is_zero() {
            break;
        }
        if k % 2 == 1 {
            sinh = &sinh + &term;
        } else {
            cosh = &cosh + &term;
        }
    }
    (sinh, cosh)
}

/// Which of the three defining relations fail, if any.
pub fn ohn_defects(g: &OhnGenerators) -> Vec<&'static str> {
    let o = g.x.order();
    let hx = g.x.scale(&HSeries::h(o));
    let (sinh, cosh) = sinh_cosh(&hx);
    let mut bad = Vec::new();
    if g.x.commutator(&g.y) != g.h {
        bad.push("[X, Y] = H");
    }
    // 2 sinh(hX) / h; one order is lost in the division
    let lhs = g.h.commutator(&g.x).truncate(o - 1);
    let rhs = sinh
        .scale_rational(&q(2, 1))
        .divide_exact(1)
        .expect("sinh(hX) is divisible by h");
    if lhs != rhs {
        bad.push("[H, X] = 2 sinh(hX) / h");
    }
    let rhs = -&(&(&g.y * &cosh) + &(&cosh * &g.y));
    if g.h.commutator(&g.y) != rhs {
        bad.push("[H, Y] = -(Y cosh hX + cosh hX Y)");
    }
    bad
}

/// The Ohn relations in every spin representation up to `max_spin`.
pub fn ohn_suite(max_spin: HalfInt) -> Vec<CheckResult> {
    HalfInt::spins_between(HalfInt::ZERO, max_spin)
        .map(|j| {
            let order = j.twice() as usize + 4;
            let g = ohn_generators(&spin_rep(j, order));
            let bad = ohn_defects(&g);
            CheckResult::new(
                "ohn",
                "relations",
                "[X,Y] = H, [H,X] = 2 sinh(hX)/h, [H,Y] = -(Y cosh hX + cosh hX Y)",
                spin_params(&[j]),
                bad.is_empty(),
                bad.join("; "),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_limit() {
        // at h = 0: H = J0, X = J+, Y = J-
        let rep = spin_rep(HalfInt::ONE, 5);
        let g = ohn_generators(&rep);
        assert_eq!(g.h.at_h_zero(), rep.j0.truncate(4).at_h_zero());
        assert_eq!(g.x.at_h_zero(), rep.jp.truncate(4));
        assert_eq!(g.y.at_h_zero(), rep.jm.truncate(4));
    }

    #[test]
    fn relations_hold() {
        for r in ohn_suite(HalfInt::from_int(2)) {
            assert!(r.pass, "{}", r.text_line());
        }
    }
}
