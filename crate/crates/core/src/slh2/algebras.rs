//! The presentations used in this crate: SL_h(2) with and without the
//! determinant rule, the quantum matrices M_h(2), the tensor square of SL_h(2),
//! the h-oscillator, the quantum h-plane, and the two mixed algebras in which
//! the group coacts on a module algebra.
//!
//! Group generators are ordered `x < y < v < u`; twice-weights are
//! `0, 0, 2, -2`. Module generators come first in the mixed algebras and
//! commute with the group generators.

use std::sync::{Arc, OnceLock};

use super::presentation::{Presentation, PresentationBuilder};
use super::Slh2Error;

pub const GROUP: [&str; 4] = ["x", "y", "v", "u"];
const GROUP_WEIGHTS: [i32; 4] = [0, 0, 2, -2];

/// How the constant in `[u, x] = h(1 - x^2)`, `[u, y] = h(1 - y^2)` is treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Det {
    /// `uv` eliminated by `detT = 1`, `vu` by `[v, u]` combined with it.
    Imposed,
    /// The six relations as displayed, nothing else.
    Absent,
    /// `1` replaced by `detT`: homogeneous quadratic relations.
    Homogenized,
}

/// Adds the commutation relations of SL_h(2) on generators named `g`
/// (in the order x, y, v, u).
fn group_rules(b: PresentationBuilder, g: [&str; 4], det: Det) -> PresentationBuilder {
    let [x, y, v, u] = g;
    let one = match det {
        Det::Homogenized => format!("({x}*{y} - {u}*{v} - h*{x}*{v})"),
        _ => "1".to_string(),
    };
    let b = b
        .rule(y, x, &format!("{x}*{y} - h*{x}*{v} + h*{y}*{v}"))
        .rule(v, x, &format!("{x}*{v} + h*{v}^2"))
        .rule(v, y, &format!("{y}*{v} + h*{v}^2"))
        .rule(u, x, &format!("{x}*{u} + h*{one} - h*{x}^2"))
        .rule(u, y, &format!("{y}*{u} + h*{one} - h*{y}^2"));
    match det {
        Det::Imposed => b.rule(u, v, &format!("{x}*{y} - h*{x}*{v} - 1")).rule(
            v,
            u,
            &format!("{x}*{y} - 1 + h*{v}*{y}"),
        ),
        _ => b.rule(u, v, &format!("{v}*{u} - h*{x}*{v} - h*{v}*{y}")),
    }
}

fn group_gens(names: [&'static str; 4]) -> Vec<(&'static str, i32)> {
    names.iter().copied().zip(GROUP_WEIGHTS).collect()
}

macro_rules! cached {
    ($name:ident, $build:expr) => {
        fn $name() -> &'static Result<Arc<Presentation>, Slh2Error> {
            static CELL: OnceLock<Result<Arc<Presentation>, Slh2Error>> = OnceLock::new();
            CELL.get_or_init(|| $build)
        }
    };
}

cached!(
    sl_h2_det_cell,
    group_rules(
        PresentationBuilder::new("SL_h(2)", &group_gens(GROUP)),
        GROUP,
        Det::Imposed
    )
    .build()
);
cached!(
    sl_h2_plain_cell,
    group_rules(
        PresentationBuilder::new("SL_h(2) without det", &group_gens(GROUP)),
        GROUP,
        Det::Absent
    )
    .build()
);
cached!(
    matrices_cell,
    group_rules(
        PresentationBuilder::new("M_h(2)", &group_gens(GROUP)),
        GROUP,
        Det::Homogenized
    )
    .build()
);
cached!(
    scalars_cell,
    PresentationBuilder::new("scalars", &[]).build()
);
cached!(tensor_cell, {
    let c1 = ["x1", "y1", "v1", "u1"];
    let c2 = ["x2", "y2", "v2", "u2"];
    let mut gens = group_gens(c1);
    gens.extend(group_gens(c2));
    let b = PresentationBuilder::new("SL_h(2) (x) SL_h(2)", &gens);
    let b = group_rules(group_rules(b, c1, Det::Imposed), c2, Det::Imposed);
    b.commuting(&c2, &c1).build()
});
cached!(
    oscillator_cell,
    PresentationBuilder::new("h-oscillator", &[("a", 1), ("abar", -1)])
        .rule("abar", "a", "a*abar + 1 - h*a^2")
        .build()
);
cached!(
    plane_cell,
    PresentationBuilder::new("h-plane", &[("eta", -1), ("xi", 1)])
        .rule("xi", "eta", "eta*xi + h*xi^2")
        .build()
);
cached!(mixed_oscillator_cell, {
    let mut gens = vec![("a", 1), ("abar", -1)];
    gens.extend(group_gens(GROUP));
    let b = PresentationBuilder::new("h-oscillator (x) SL_h(2)", &gens).rule(
        "abar",
        "a",
        "a*abar + 1 - h*a^2",
    );
    group_rules(b, GROUP, Det::Imposed)
        .commuting(&GROUP, &["a", "abar"])
        .build()
});
cached!(mixed_plane_cell, {
    let mut gens = vec![("eta", -1), ("xi", 1)];
    gens.extend(group_gens(GROUP));
    let b =
        PresentationBuilder::new("h-plane (x) SL_h(2)", &gens).rule("xi", "eta", "eta*xi + h*xi^2");
    group_rules(b, GROUP, Det::Imposed)
        .commuting(&GROUP, &["eta", "xi"])
        .build()
});

fn get(r: &'static Result<Arc<Presentation>, Slh2Error>) -> Arc<Presentation> {
    match r {
        Ok(p) => p.clone(),
        Err(e) => panic!("bundled presentation failed its construction checks: {e}"),
    }
}

/// SL_h(2) with `detT = 1` imposed.
pub fn sl_h2() -> Arc<Presentation> {
    get(sl_h2_det_cell())
}

/// SL_h(2) from the six commutation relations alone.
pub fn sl_h2_without_det() -> Result<Arc<Presentation>, Slh2Error> {
    sl_h2_plain_cell().clone()
}

/// The quantum matrices: the six relations with `1` replaced by `detT`.
/// SL_h(2) is the quotient by `detT = 1`.
pub fn quantum_matrices() -> Arc<Presentation> {
    get(matrices_cell())
}

/// The ground ring, target of the counit.
pub fn scalars() -> Arc<Presentation> {
    get(scalars_cell())
}

/// Two commuting copies of SL_h(2) (with determinant rules), generators
/// `x1 y1 v1 u1 x2 y2 v2 u2`.
pub fn tensor_square() -> Arc<Presentation> {
    get(tensor_cell())
}

pub fn oscillator() -> Arc<Presentation> {
    get(oscillator_cell())
}

pub fn plane() -> Arc<Presentation> {
    get(plane_cell())
}

/// Generators `a abar x y v u`.
pub fn mixed_oscillator() -> Arc<Presentation> {
    get(mixed_oscillator_cell())
}

/// Generators `eta xi x y v u`.
pub fn mixed_plane() -> Arc<Presentation> {
    get(mixed_plane_cell())
}

/// Every bundled presentation with the result of its construction checks.
pub fn all_presentations() -> Vec<(&'static str, Result<Arc<Presentation>, Slh2Error>)> {
    vec![
        ("SL_h(2)", sl_h2_det_cell().clone()),
        ("SL_h(2) without det", sl_h2_plain_cell().clone()),
        ("M_h(2)", matrices_cell().clone()),
        ("SL_h(2) (x) SL_h(2)", tensor_cell().clone()),
        ("h-oscillator", oscillator_cell().clone()),
        ("h-plane", plane_cell().clone()),
        ("h-oscillator (x) SL_h(2)", mixed_oscillator_cell().clone()),
        ("h-plane (x) SL_h(2)", mixed_plane_cell().clone()),
    ]
}
