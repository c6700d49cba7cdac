//! Irreducible bases on the quantum h-plane and the d-functions of SL_h(2),
//! computed from the plane and from the h-symplecta.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{product, Algebra};
use crate::scalar::{factorial, HSeries, HalfInt, RadicalSum, Rational};
use crate::symplecton::{oscillator_form, OscForm, SymplectonLabel};

use super::algebras::{mixed_oscillator, mixed_plane, plane, sl_h2, tensor_square, GROUP};
use super::hopf::{coproduct_images, counit_images, primed, tensor_embeddings, CovarianceTarget};
use super::presentation::{NCElement, Presentation};
use super::Slh2Error;

/// The two product forms of the plane basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PlaneForm {
    /// `c xi^{j+m} (eta - h(j+m) xi) ... (eta - h(2m+1) xi)`
    XiLeft,
    /// `c eta (eta + h xi) ... (eta + (j-m-1) h xi) xi^{j+m}`
    EtaLeft,
}

fn plane_norm(j: HalfInt, m: HalfInt) -> RadicalSum {
    let d = factorial((j + m).int() as u64) * factorial((j - m).int() as u64);
    RadicalSum::sqrt_rational(&Rational::new(1.into(), d))
}

fn check_label(j: HalfInt, m: HalfInt) -> Result<(), Slh2Error> {
    if j < HalfInt::ZERO || !j.admits(m) {
        return Err(Slh2Error::InvalidLabel {
            j: j.to_string(),
            m: m.to_string(),
        });
    }
    Ok(())
}

/// `Phi~_{jm}` in any algebra containing images of `xi_h` and `eta_h`.
pub fn plane_form<T: Algebra>(j: HalfInt, m: HalfInt, form: PlaneForm, xi: &T, eta: &T) -> T {
    let (hi, lo) = ((j + m).int(), (j - m).int());
    let one = xi.one_like();
    let factor = |i: i64| eta.plus(&xi.h_times(1).scaled_int(i));
    let body = match form {
        PlaneForm::XiLeft => {
            let two_m = m.twice() as i64;
            xi.pow(hi as usize)
                .times(&product(&one, (two_m + 1..=hi).rev().map(|i| factor(-i))))
        }
        PlaneForm::EtaLeft => product(&one, (0..lo).map(factor)).times(&xi.pow(hi as usize)),
    };
    body.scaled_radical(&plane_norm(j, m))
}

/// `Phi~_{jm}(xi_h, eta_h)` in the h-plane.
pub fn plane_basis(j: HalfInt, m: HalfInt, form: PlaneForm) -> Result<NCElement, Slh2Error> {
    check_label(j, m)?;
    let p = plane();
    let xi = NCElement::generator(&p, "xi")?;
    let eta = NCElement::generator(&p, "eta")?;
    Ok(plane_form(j, m, form, &xi, &eta))
}

/// Which irreducible basis the d-function is read off from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DRoute {
    Plane,
    Symplecton,
}

/// `d~^j_{km}` with entries in SL_h(2), `entries[k][m]` for `k`, `m` ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct DMatrix {
    pub j: HalfInt,
    pub entries: Vec<Vec<NCElement>>,
}

impl DMatrix {
    pub fn entry(&self, k: HalfInt, m: HalfInt) -> &NCElement {
        &self.entries[self.j.index_of(k)][self.j.index_of(m)]
    }

    pub fn at_h_zero(&self) -> DMatrix {
        DMatrix {
            j: self.j,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(NCElement::at_h_zero).collect())
                .collect(),
        }
    }

    /// Entrywise counit.
    pub fn counit(&self) -> Vec<Vec<HSeries>> {
        let k = super::algebras::scalars();
        let eps = counit_images();
        self.entries
            .iter()
            .map(|r| r.iter().map(|e| e.map_hom(&k, &eps).coeff(&[])).collect())
            .collect()
    }

    /// Rows of rendered entries.
    pub fn render(&self) -> String {
        let mut out = format!("d^{} (rows k, columns m, ascending)\n", self.j);
        for (a, k) in self.j.projections().enumerate() {
            for (b, m) in self.j.projections().enumerate() {
                out.push_str(&format!("  [{k}, {m}] {}\n", self.entries[a][b]));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "j": self.j.to_string(),
            "basis_order": self.j.projections().map(|m| m.to_string()).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|r| r.iter().map(NCElement::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Group part of the terms of `e` whose module part is exactly `module`, as an
/// element of SL_h(2). Module generators are the first `n_module` letters.
fn module_coefficient(
    e: &NCElement,
    module: &[u8],
    n_module: u8,
    group: &Arc<Presentation>,
) -> NCElement {
    let mut acc = NCElement::zero(group);
    for (w, c) in e.terms() {
        let split = w.iter().position(|g| *g >= n_module).unwrap_or(w.len());
        if &w[..split] == module {
            let rest = w[split..].iter().map(|g| g - n_module).collect();
            acc = acc.plus(&NCElement::from_word(group, rest, c.clone()));
        }
    }
    acc
}

/// Solves `image_m = sum_k basis_k d_{km}` column by column. The pivot word of
/// `basis_k` occurs only in `basis_{k'}` with `k' <= k`, with an `h`-free
/// coefficient in `basis_k`, so the system is triangular.
fn solve(
    j: HalfInt,
    mixed: &Arc<Presentation>,
    basis: &[NCElement],
    pivots: &[Vec<u8>],
    images: &[NCElement],
) -> Result<DMatrix, Slh2Error> {
    let group = sl_h2();
    let n_module = 2u8;
    let embed: Vec<NCElement> = GROUP
        .iter()
        .map(|g| NCElement::generator(mixed, g).expect("group generator"))
        .collect();
    let mut inverse_pivots = Vec::new();
    for (k, (b, w)) in j.projections().zip(basis.iter().zip(pivots)) {
        let c = b.coeff(w);
        let inv = match c.as_monomial() {
            Some((0, r)) => r.inverse_single().ok(),
            _ => None,
        };
        inverse_pivots.push(inv.ok_or_else(|| Slh2Error::SingularPivot {
            j: j.to_string(),
            k: k.to_string(),
        })?);
    }
    let dim = j.dim();
    let mut entries = vec![vec![NCElement::zero(&group); dim]; dim];
    for (col, m) in j.projections().enumerate() {
        let mut residual = images[col].clone();
        for row in 0..dim {
            let d = module_coefficient(&residual, &pivots[row], n_module, &group)
                .scaled_radical(&inverse_pivots[row]);
            residual = residual.minus(&basis[row].times(&d.map_hom(mixed, &embed)));
            entries[row][col] = d;
        }
        if !residual.is_zero() {
            return Err(Slh2Error::Residual {
                j: j.to_string(),
                m: m.to_string(),
                residual: residual.render(),
            });
        }
    }
    Ok(DMatrix { j, entries })
}

fn word(parts: &[(u8, i64)]) -> Vec<u8> {
    parts
        .iter()
        .flat_map(|(g, n)| std::iter::repeat_n(*g, *n as usize))
        .collect()
}

/// `d~^j` by substituting `(g1', g2') = (g1, g2) T` into the irreducible
/// basis of the chosen route and expanding in the unprimed basis.
pub fn dfunction(j: HalfInt, route: DRoute) -> Result<DMatrix, Slh2Error> {
    if j < HalfInt::ZERO {
        return Err(Slh2Error::InvalidLabel {
            j: j.to_string(),
            m: "-".into(),
        });
    }
    match route {
        DRoute::Plane => {
            let p = mixed_plane();
            let (eta, xi) = (
                NCElement::generator(&p, "eta")?,
                NCElement::generator(&p, "xi")?,
            );
            let (xi1, eta1) = primed(CovarianceTarget::Plane);
            let basis: Vec<_> = j
                .projections()
                .map(|k| plane_form(j, k, PlaneForm::EtaLeft, &xi, &eta))
                .collect();
            let images: Vec<_> = j
                .projections()
                .map(|m| plane_form(j, m, PlaneForm::EtaLeft, &xi1, &eta1))
                .collect();
            let pivots: Vec<_> = j
                .projections()
                .map(|k| word(&[(0, (j - k).int()), (1, (j + k).int())]))
                .collect();
            solve(j, &p, &basis, &pivots, &images)
        }
        DRoute::Symplecton => {
            let p = mixed_oscillator();
            let (a, abar) = (
                NCElement::generator(&p, "a")?,
                NCElement::generator(&p, "abar")?,
            );
            let (a1, abar1) = primed(CovarianceTarget::Oscillator);
            let lbl = |m| SymplectonLabel { j, m };
            let basis: Vec<_> = j
                .projections()
                .map(|k| oscillator_form(lbl(k), OscForm::A, &a, &abar))
                .collect();
            let images: Vec<_> = j
                .projections()
                .map(|m| oscillator_form(lbl(m), OscForm::A, &a1, &abar1))
                .collect();
            let pivots: Vec<_> = j
                .projections()
                .map(|k| word(&[(0, (j + k).int()), (1, (j - k).int())]))
                .collect();
            solve(j, &p, &basis, &pivots, &images)
        }
    }
}

/// Entries `(k, m)` where `Delta(d_km) != sum_n d_kn (x) d_nm`.
pub fn coalgebra_defects(d: &DMatrix) -> Vec<(HalfInt, HalfInt)> {
    let t = tensor_square();
    let delta = coproduct_images();
    let (e1, e2) = tensor_embeddings();
    let first: Vec<Vec<NCElement>> = d
        .entries
        .iter()
        .map(|r| r.iter().map(|x| x.map_hom(&t, &e1)).collect())
        .collect();
    let second: Vec<Vec<NCElement>> = d
        .entries
        .iter()
        .map(|r| r.iter().map(|x| x.map_hom(&t, &e2)).collect())
        .collect();
    let dim = d.j.dim();
    let mut out = Vec::new();
    for (a, k) in d.j.projections().enumerate() {
        for (b, m) in d.j.projections().enumerate() {
            let lhs = d.entries[a][b].map_hom(&t, &delta);
            let rhs = (0..dim).fold(NCElement::zero(&t), |acc, n| {
                acc.plus(&first[a][n].times(&second[n][b]))
            });
            if lhs != rhs {
                out.push((k, m));
            }
        }
    }
    out
}

/// Commutative polynomial in `x, y, v, u` (exponent vector in that order).
pub type CommPoly = BTreeMap<[u32; 4], RadicalSum>;

fn comm_add(p: &mut CommPoly, e: [u32; 4], c: RadicalSum) {
    let s = match p.remove(&e) {
        Some(old) => &old + &c,
        None => c,
    };
    if !s.is_zero() {
        p.insert(e, s);
    }
}

/// Classical `d^j_{km}` of SL(2) with commuting entries: expand
/// `Phi_jm(xi x + eta v, xi u + eta y)` and eliminate `uv = xy - 1`.
pub fn classical_dfunction(j: HalfInt) -> Vec<Vec<CommPoly>> {
    // polynomials in (xi, eta | x, y, v, u) as maps (xi power, eta power) -> CommPoly
    type Mixed = BTreeMap<(u32, u32), CommPoly>;
    let mul = |p: &Mixed, q: &Mixed| {
        let mut out = Mixed::new();
        for ((a1, b1), c1) in p {
            for ((a2, b2), c2) in q {
                let slot = out.entry((a1 + a2, b1 + b2)).or_default();
                for (e1, r1) in c1 {
                    for (e2, r2) in c2 {
                        comm_add(slot, std::array::from_fn(|i| e1[i] + e2[i]), r1 * r2);
                    }
                }
            }
        }
        out
    };
    let lin = |xi_coeff: [u32; 4], eta_coeff: [u32; 4]| {
        let mut m = Mixed::new();
        m.entry((1, 0))
            .or_default()
            .insert(xi_coeff, RadicalSum::one());
        m.entry((0, 1))
            .or_default()
            .insert(eta_coeff, RadicalSum::one());
        m
    };
    let xi1 = lin([1, 0, 0, 0], [0, 0, 1, 0]);
    let eta1 = lin([0, 0, 0, 1], [0, 1, 0, 0]);
    let mut one = Mixed::new();
    one.entry((0, 0))
        .or_default()
        .insert([0; 4], RadicalSum::one());
    let dim = j.dim();
    let mut d = vec![vec![CommPoly::new(); dim]; dim];
    for (b, m) in j.projections().enumerate() {
        let mut p = one.clone();
        for _ in 0..(j + m).int() {
            p = mul(&p, &xi1);
        }
        for _ in 0..(j - m).int() {
            p = mul(&p, &eta1);
        }
        for (a, k) in j.projections().enumerate() {
            let Some(c) = p.get(&(((j + k).int()) as u32, ((j - k).int()) as u32)) else {
                continue;
            };
            // Phi_jm(xi', eta') = sum_k Phi_jk d_km, Phi_jk = xi^{j+k} eta^{j-k} c_jk
            let scale =
                &plane_norm(j, m) * &plane_norm(j, k).inverse_single().expect("nonzero norm");
            let mut entry = CommPoly::new();
            for (e, r) in c {
                comm_add(&mut entry, *e, r * &scale);
            }
            d[a][b] = eliminate_uv(entry);
        }
    }
    d
}

fn eliminate_uv(mut p: CommPoly) -> CommPoly {
    loop {
        let Some((e, c)) = p
            .iter()
            .find(|(e, _)| e[2] > 0 && e[3] > 0)
            .map(|(e, c)| (*e, c.clone()))
        else {
            return p;
        };
        p.remove(&e);
        let base = [e[0], e[1], e[2] - 1, e[3] - 1];
        comm_add(
            &mut p,
            [base[0] + 1, base[1] + 1, base[2], base[3]],
            c.clone(),
        );
        comm_add(&mut p, base, -&c);
    }
}

/// `NCElement` in SL_h(2) with commuting letters, read at `h = 0`.
pub fn commutative_image(e: &NCElement) -> CommPoly {
    let mut p = CommPoly::new();
    for (w, c) in e.terms() {
        let mut exp = [0u32; 4];
        for g in w {
            exp[*g as usize] += 1;
        }
        comm_add(&mut p, exp, c.at_zero());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    const H: HalfInt = HalfInt::HALF;

    fn el(text: &str) -> NCElement {
        NCElement::parse(&sl_h2(), text).unwrap()
    }

    #[test]
    fn plane_examples() {
        let p = plane();
        let g = |s: &str| NCElement::parse(&p, s).unwrap();
        assert_eq!(plane_basis(H, H, PlaneForm::EtaLeft).unwrap(), g("xi"));
        assert_eq!(plane_basis(H, -H, PlaneForm::XiLeft).unwrap(), g("eta"));
        assert_eq!(
            plane_basis(HalfInt::ONE, HalfInt::ZERO, PlaneForm::XiLeft).unwrap(),
            g("eta*xi")
        );
        assert!(plane_basis(H, HalfInt::ONE, PlaneForm::XiLeft).is_err());
    }

    #[test]
    fn spin_half_is_t() {
        for route in [DRoute::Plane, DRoute::Symplecton] {
            let d = dfunction(H, route).unwrap();
            assert_eq!(d.entry(H, H), &el("x"));
            assert_eq!(d.entry(H, -H), &el("u"));
            assert_eq!(d.entry(-H, H), &el("v"));
            assert_eq!(d.entry(-H, -H), &el("y"));
        }
    }
}
