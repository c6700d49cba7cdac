//! `compute` subcommand: one object, rendered as text or JSON.

use clap::Subcommand;
use serde_json::{json, Value};
use thiserror::Error;

use jordanian::reps::{
    exact_order, twist_closed_form, universal_r, DoubleFactorialReading, Matrix,
};
use jordanian::scalar::HalfInt;
use jordanian::slh2::{dfunction, plane_basis, DRoute, PlaneForm};
use jordanian::su2data::{cgc, racah_w, triangle, CouplingLabel};
use jordanian::symplecton::{
    classical_symplecton, defining_form_text, h_symplecton_osc, h_symplecton_weyl, Form, OscForm,
    SymplectonLabel,
};
use jordanian::verify::RunConfig;

use crate::Format;

#[derive(Subcommand, Debug)]
pub enum Object {
    /// Classical symplecton P_j^m in the boson algebra
    Symplecton {
        #[arg(long, allow_hyphen_values = true)]
        j: HalfInt,
        #[arg(long, allow_hyphen_values = true)]
        m: HalfInt,
    },
    /// h-symplecton in the boson and oscillator algebras, truncated at -H
    HSymplecton {
        #[arg(long, allow_hyphen_values = true)]
        j: HalfInt,
        #[arg(long, allow_hyphen_values = true)]
        m: HalfInt,
    },
    /// Twist matrix F on V_j1 (x) V_j2 (basis m ascending, first factor slow)
    Fmatrix {
        #[arg(long, allow_hyphen_values = true)]
        j1: HalfInt,
        #[arg(long, allow_hyphen_values = true)]
        j2: HalfInt,
    },
    /// R = F_21 F^-1 on V_j1 (x) V_j2
    Rmatrix {
        #[arg(long, allow_hyphen_values = true)]
        j1: HalfInt,
        #[arg(long, allow_hyphen_values = true)]
        j2: HalfInt,
    },
    /// Clebsch-Gordan coefficients C^{j1 j2 j}_{m1 m2 m}
    Cgc {
        #[arg(long, allow_hyphen_values = true)]
        j1: HalfInt,
        #[arg(long, allow_hyphen_values = true)]
        j2: HalfInt,
        #[arg(long, allow_hyphen_values = true)]
        j: HalfInt,
    },
    /// Racah coefficient W(abcd;ef)
    Racah {
        #[arg(allow_hyphen_values = true, num_args = 6, value_names = ["A", "B", "C", "D", "E", "F"])]
        spins: Vec<HalfInt>,
    },
    /// SL_h(2) d-function matrix of spin j
    Dfun {
        #[arg(long, allow_hyphen_values = true)]
        j: HalfInt,
    },
    /// Basis element of the quantum h-plane
    PlaneBasis {
        #[arg(long, allow_hyphen_values = true)]
        j: HalfInt,
        #[arg(long, allow_hyphen_values = true)]
        m: HalfInt,
    },
}

#[derive(Debug, Error)]
pub enum ComputeError {
    #[error("spin {0} must be nonnegative")]
    NegativeSpin(HalfInt),
    #[error("spins {0}, {1}, {2} do not form a triad")]
    NotTriad(HalfInt, HalfInt, HalfInt),
    #[error("{0}")]
    Invalid(String),
}

fn spin(j: HalfInt) -> Result<HalfInt, ComputeError> {
    if j < HalfInt::ZERO {
        Err(ComputeError::NegativeSpin(j))
    } else {
        Ok(j)
    }
}

fn label(j: HalfInt, m: HalfInt) -> Result<SymplectonLabel, ComputeError> {
    SymplectonLabel::new(spin(j)?, m).map_err(|e| ComputeError::Invalid(e.to_string()))
}

fn matrix_out(name: &str, j1: HalfInt, j2: HalfInt, m: &Matrix, format: Format) -> String {
    match format {
        Format::Text => format!("{name} on V_{j1} (x) V_{j2}\n{m}"),
        Format::Json => pretty(json!({
            "object": name,
            "j1": j1.to_string(),
            "j2": j2.to_string(),
            "entries": m.to_json(),
        })),
    }
}

fn pretty(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("json")
}

pub fn run(object: &Object, cfg: &RunConfig, format: Format) -> Result<String, ComputeError> {
    let order = cfg.order;
    Ok(match object {
        Object::Symplecton { j, m } => {
            let l = label(*j, *m)?;
            let p = classical_symplecton(l, Form::A, 0);
            match format {
                Format::Text => format!("{}\n= {}", defining_form_text(l), p.render()),
                Format::Json => pretty(json!({
                    "object": "symplecton",
                    "j": j.to_string(),
                    "m": m.to_string(),
                    "defining": defining_form_text(l),
                    "normal_order": p.to_json(),
                })),
            }
        }
        Object::HSymplecton { j, m } => {
            let l = label(*j, *m)?;
            let weyl =
                h_symplecton_weyl(l, order).map_err(|e| ComputeError::Invalid(e.to_string()))?;
            let osc = h_symplecton_osc(l, OscForm::A, order)
                .map_err(|e| ComputeError::Invalid(e.to_string()))?;
            match format {
                Format::Text => format!("boson: {}\noscillator: {}", weyl.render(), osc.render()),
                Format::Json => pretty(json!({
                    "object": "h-symplecton",
                    "j": j.to_string(),
                    "m": m.to_string(),
                    "order": order,
                    "boson": weyl.to_json(),
                    "oscillator": osc.to_json(),
                })),
            }
        }
        Object::Fmatrix { j1, j2 } => {
            let (j1, j2) = (spin(*j1)?, spin(*j2)?);
            let f = twist_closed_form(
                j1,
                j2,
                exact_order(&[j1, j2]),
                DoubleFactorialReading::Product,
            );
            matrix_out("F", j1, j2, &f, format)
        }
        Object::Rmatrix { j1, j2 } => {
            let (j1, j2) = (spin(*j1)?, spin(*j2)?);
            let r = universal_r(j1, j2, exact_order(&[j1, j2]));
            matrix_out("R", j1, j2, &r, format)
        }
        Object::Cgc { j1, j2, j } => {
            let (j1, j2, j) = (spin(*j1)?, spin(*j2)?, spin(*j)?);
            if !triangle(j1, j2, j) {
                return Err(ComputeError::NotTriad(j1, j2, j));
            }
            let mut rows = Vec::new();
            for m1 in j1.projections() {
                for m2 in j2.projections().filter(|&m2| j.admits(m1 + m2)) {
                    let c = cgc(CouplingLabel::new(j1, j2, j, m1, m2, m1 + m2));
                    rows.push((m1, m2, c));
                }
            }
            match format {
                Format::Text => rows
                    .iter()
                    .map(|(m1, m2, c)| format!("C^{{{j1} {j2} {j}}}_{{{m1} {m2} {}}} = {c}", *m1 + *m2))
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Json => pretty(Value::Array(
                    rows.iter()
                        .map(|(m1, m2, c)| {
                            json!({
                                "labels": { "j1": j1.to_string(), "j2": j2.to_string(), "j": j.to_string(),
                                            "m1": m1.to_string(), "m2": m2.to_string(), "m": (*m1 + *m2).to_string() },
                                "value": c.to_string(),
                            })
                        })
                        .collect(),
                )),
            }
        }
        Object::Racah { spins } => {
            for &s in spins {
                spin(s)?;
            }
            let [a, b, c, d, e, f] = <[HalfInt; 6]>::try_from(spins.as_slice())
                .map_err(|_| ComputeError::Invalid("racah needs six spins".into()))?;
            let w = racah_w(a, b, c, d, e, f);
            let labels: Vec<String> = spins.iter().map(|s| s.to_string()).collect();
            match format {
                Format::Text => format!("W({a} {b} {c} {d}; {e} {f}) = {w}"),
                Format::Json => pretty(json!([{
                    "labels": labels,
                    "value": w.to_string(),
                }])),
            }
        }
        Object::Dfun { j } => {
            let d = dfunction(spin(*j)?, DRoute::Plane)
                .map_err(|e| ComputeError::Invalid(e.to_string()))?;
            match format {
                Format::Text => d.render().trim_end().to_string(),
                Format::Json => pretty(d.to_json()),
            }
        }
        Object::PlaneBasis { j, m } => {
            let e = plane_basis(spin(*j)?, *m, PlaneForm::XiLeft)
                .map_err(|e| ComputeError::Invalid(e.to_string()))?;
            match format {
                Format::Text => e.render(),
                Format::Json => pretty(json!({
                    "object": "plane-basis",
                    "j": j.to_string(),
                    "m": m.to_string(),
                    "terms": e.to_json(),
                })),
            }
        }
    })
}
