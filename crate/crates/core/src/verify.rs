//! Named verification suites and the configuration they run under.

use rayon::prelude::*;
use thiserror::Error;

use crate::report::CheckResult;
use crate::reps::{hopf_suite, ohn_suite, twist_suite};
use crate::scalar::HalfInt;
use crate::slh2::slh2_suite;
use crate::su2data::su2data_suite;
use crate::symplecton::{product_law_suite, symplecton_suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Truncation order in `h` for series-valued checks.
    pub order: usize,
    pub max_spin: HalfInt,
    /// Spin bound for product-law checks, which grow fastest.
    pub product_spin: HalfInt,
    /// Treat calibration constants and displayed-but-failing forms as failures.
    pub strict: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order: 8,
            max_spin: HalfInt::from_int(2),
            product_spin: HalfInt::from_twice(3),
            strict: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite '{0}' (try list-suites)")]
    UnknownSuite(String),
}

/// Suite names with one-line descriptions, in run order.
pub const SUITES: [(&str, &str); 7] = [
    (
        "su2data",
        "Clebsch-Gordan orthogonality and recursion, Racah recoupling, triangle functions",
    ),
    (
        "twist",
        "twist matrix closed form vs exponential, inverse symmetry, R matrix",
    ),
    (
        "hopf",
        "twisted coproduct, coassociativity, antipode, cocycle, coupled bases",
    ),
    ("ohn", "Ohn generators from the twisted sl(2) generators"),
    (
        "symplecton",
        "classical and h-deformed symplecta, adjoint action, generating functions",
    ),
    (
        "product-law",
        "product of h-symplecta, triangle support, inner product, ratio table",
    ),
    (
        "slh2",
        "SL_h(2) presentation, Hopf structure, RTT, covariance, d-functions",
    ),
];

/// Expands `all` and rejects unknown names; keeps first occurrences in the
/// given order.
pub fn resolve_suites(names: &[String]) -> Result<Vec<&'static str>, VerifyError> {
    let mut out: Vec<&'static str> = Vec::new();
    for n in names {
        let add: Vec<&'static str> = if n == "all" {
            SUITES.iter().map(|s| s.0).collect()
        } else {
            vec![SUITES
                .iter()
                .map(|s| s.0)
                .find(|s| s == n)
                .ok_or_else(|| VerifyError::UnknownSuite(n.clone()))?]
        };
        for s in add {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Runs one named suite. A zero spin bound leaves every spin range empty and
/// yields no checks.
pub fn run_suite(name: &str, cfg: &RunConfig) -> Result<Vec<CheckResult>, VerifyError> {
    let spin = cfg.max_spin;
    let product_spin = cfg.product_spin.min(spin);
    if !SUITES.iter().any(|s| s.0 == name) {
        return Err(VerifyError::UnknownSuite(name.to_string()));
    }
    if spin == HalfInt::ZERO {
        return Ok(Vec::new());
    }
    Ok(match name {
        "su2data" => su2data_suite(spin, cfg.strict),
        "twist" => twist_suite(spin),
        "hopf" => hopf_suite(spin),
        "ohn" => ohn_suite(spin),
        "symplecton" => symplecton_suite(spin, product_spin, cfg.order, cfg.strict),
        "product-law" => product_law_suite(product_spin, cfg.order, cfg.strict),
        "slh2" => slh2_suite(spin, spin, cfg.order),
        _ => unreachable!(),
    })
}

/// Runs the suites concurrently on the current rayon pool and concatenates
/// their results in the order given.
pub fn run_suites(names: &[&str], cfg: &RunConfig) -> Result<Vec<CheckResult>, VerifyError> {
    let parts: Result<Vec<Vec<CheckResult>>, VerifyError> =
        names.par_iter().map(|n| run_suite(n, cfg)).collect();
    Ok(parts?.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_all_and_dedups() {
        let s = resolve_suites(&["slh2".into(), "all".into()]).unwrap();
        assert_eq!(s[0], "slh2");
        assert_eq!(s.len(), SUITES.len());
        assert!(resolve_suites(&["nope".into()]).is_err());
    }

    #[test]
    fn zero_spin_is_empty() {
        let cfg = RunConfig {
            max_spin: HalfInt::ZERO,
            ..RunConfig::default()
        };
        let names = resolve_suites(&["all".into()]).unwrap();
        assert!(run_suites(&names, &cfg).unwrap().is_empty());
    }
}
