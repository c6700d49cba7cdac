use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::scalar::HSeries;

/// Normal-ordered polynomial in two generators `g^p gbar^q` with series
/// coefficients. Shared storage for the boson and h-oscillator algebras; the
/// multiplication rule lives with each wrapper.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPoly {
    order: usize,
    terms: BTreeMap<(u32, u32), HSeries>,
}

impl OrderedPoly {
    pub fn zero(order: usize) -> Self {
        OrderedPoly {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(order: usize, p: u32, q: u32, c: HSeries) -> Self {
        let mut out = Self::zero(order);
        out.add_term(p, q, c);
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), HSeries> {
        &self.terms
    }

    pub fn coeff(&self, p: u32, q: u32) -> HSeries {
        self.terms
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| HSeries::zero(self.order))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: u32, q: u32, c: HSeries) {
        assert_eq!(c.order(), self.order, "coefficient order mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry((p, q)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "truncation order mismatch");
        let mut out = self.clone();
        for (&(p, q), c) in &rhs.terms {
            out.add_term(p, q, c.clone());
        }
        out
    }

    pub fn negated(&self) -> Self {
        OrderedPoly {
            order: self.order,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }

    pub fn scaled(&self, c: &HSeries) -> Self {
        let mut out = Self::zero(self.order);
        for (&(p, q), x) in &self.terms {
            out.add_term(p, q, x * c);
        }
        out
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (&(p, q), c) in &self.terms {
            out.add_term(p, q, c.truncate(order));
        }
        out
    }

    /// Coefficient of `h^k` as a polynomial with constant coefficients.
    pub fn h_slice(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order);
        for (&(p, q), c) in &self.terms {
            out.add_term(p, q, HSeries::constant(self.order, c.coeff(k).clone()));
        }
        out
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(p, q)| p + q).max()
    }

    /// Terms in canonical order: descending total degree, then descending
    /// power of the left generator.
    pub fn canonical_terms(&self) -> Vec<((u32, u32), &HSeries)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c)).collect();
        v.sort_by(|(a, _), (b, _)| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        v
    }

    pub fn render(&self, left: &str, right: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((p, q), c)) in self.canonical_terms().into_iter().enumerate() {
            let (neg, coeff) = coeff_text(c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if let Some(cs) = coeff {
                factors.push(cs);
            }
            factors.extend(power_text(left, p));
            factors.extend(power_text(right, q));
            if factors.is_empty() {
                factors.push("1".to_string());
            }
            out.push_str(&factors.join(" * "));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.canonical_terms()
                .into_iter()
                .map(|((p, q), c)| json!({"p": p, "q": q, "coeff": c.to_json()}))
                .collect(),
        )
    }
}

fn power_text(sym: &str, n: u32) -> Option<String> {
    match n {
        0 => None,
        1 => Some(sym.to_string()),
        _ => Some(format!("{sym}^{n}")),
    }
}

/// Sign and magnitude text for a coefficient; `None` magnitude means 1.
pub(crate) fn coeff_text(c: &HSeries) -> (bool, Option<String>) {
    if let Some((0, r)) = c.as_monomial() {
        if let Some((q, rad)) = r.as_single_term() {
            let neg = q < &num_traits::Zero::zero();
            let mag = if neg { -r } else { r.clone() };
            if rad == 1 && mag.is_one() {
                return (neg, None);
            }
            return (neg, Some(mag.to_string()));
        }
    }
    let body = series_body(c);
    (false, Some(format!("({body})")))
}

/// Series text without the truncation suffix.
pub(crate) fn series_body(c: &HSeries) -> String {
    let full = c.to_string();
    match full.rfind(" (mod h^") {
        Some(i) => full[..i].to_string(),
        None => full,
    }
}
