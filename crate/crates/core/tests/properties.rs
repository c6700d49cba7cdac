use jordanian::algebra::Algebra;
use jordanian::reps::{embed_two, exact_order, flip, universal_r};
use jordanian::scalar::{HSeries, HalfInt, RadicalSum};
use jordanian::slh2::{coproduct, sl_h2, NCElement, NC_ORDER};
use jordanian::su2data::{cgc, spins_in_triangle, CouplingLabel};
use proptest::prelude::*;

fn half(t: i32) -> HalfInt {
    HalfInt::from_twice(t)
}

fn group_element(word: &[u8], c: i64) -> NCElement {
    NCElement::from_word(
        &sl_h2(),
        word.to_vec(),
        HSeries::constant(NC_ORDER, RadicalSum::from_int(c)),
    )
}

fn group_poly() -> impl Strategy<Value = NCElement> {
    proptest::collection::vec((proptest::collection::vec(0u8..4, 0..3), -3i64..=3), 1..3).prop_map(
        |terms| {
            terms.iter().fold(NCElement::zero(&sl_h2()), |acc, (w, c)| {
                acc.plus(&group_element(w, *c))
            })
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cgc_rows_are_orthonormal(t1 in 0i32..=6, t2 in 0i32..=6, a in 0usize..7, b in 0usize..7, k in 0i32..=12) {
        let (j1, j2) = (half(t1), half(t2));
        let js = spins_in_triangle(j1, j2);
        let (j, jj) = (js[a % js.len()], js[b % js.len()]);
        let lo = j.min(jj);
        let m = half(-lo.twice() + 2 * (k % (lo.twice() + 1)));
        let mut s = RadicalSum::zero();
        for m1 in j1.projections().filter(|&m1| j2.admits(m - m1)) {
            s += &(cgc(CouplingLabel::new(j1, j2, j, m1, m - m1, m))
                * cgc(CouplingLabel::new(j1, j2, jj, m1, m - m1, m)));
        }
        prop_assert_eq!(s.is_one(), j == jj);
        prop_assert_eq!(s.is_zero(), j != jj);
    }

    #[test]
    fn r_is_triangular(t1 in 1i32..=3, t2 in 1i32..=3) {
        let (j1, j2) = (half(t1), half(t2));
        let (d1, d2) = (j1.dim(), j2.dim());
        let order = exact_order(&[j1, j2]);
        let r = universal_r(j1, j2, order);
        let r21 = &(&flip(d2, d1, order) * &universal_r(j2, j1, order)) * &flip(d1, d2, order);
        prop_assert!((&r21 * &r).is_identity());
    }

    #[test]
    fn slh2_product_is_associative(a in group_poly(), b in group_poly(), c in group_poly()) {
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
    }

    #[test]
    fn coproduct_is_multiplicative(a in group_poly(), b in group_poly()) {
        prop_assert_eq!(coproduct(&a.times(&b)), coproduct(&a).times(&coproduct(&b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn yang_baxter(t in proptest::collection::vec(1i32..=2, 3)) {
        let spins = [half(t[0]), half(t[1]), half(t[2])];
        let order = exact_order(&spins);
        let dims: Vec<usize> = spins.iter().map(|j| j.dim()).collect();
        let r12 = embed_two(&universal_r(spins[0], spins[1], order), &dims, 0, 1);
        let r13 = embed_two(&universal_r(spins[0], spins[2], order), &dims, 0, 2);
        let r23 = embed_two(&universal_r(spins[1], spins[2], order), &dims, 1, 2);
        prop_assert_eq!(&(&r12 * &r13) * &r23, &(&r23 * &r13) * &r12);
    }
}
