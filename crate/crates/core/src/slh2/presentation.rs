//! Finitely presented algebras with quadratic rewriting rules and their
//! normal forms.
//!
//! Every rule rewrites a two-letter word `ab` with `a > b` (or a word the
//! presentation declares reducible) into a combination of shorter words, of
//! two-letter words smaller in degree-lexicographic order, and of words carrying
//! extra powers of `h`. Each generator carries a weight, `h` has weight `-1`
//! and every rule is weight-homogeneous, so the power of `h` in any term is
//! bounded by its degree. Ordering terms by (degree, fewer `h`, deglex) is then
//! a well-order that every rewriting step decreases, and the diamond lemma
//! reduces uniqueness of normal forms to the overlaps `abc` checked in
//! [`Presentation::critical_pairs`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::scalar::{HSeries, RadicalSum};

use super::free::{FreePoly, Word};
use super::Slh2Error;

/// Truncation order of the coefficient series. Normal forms never come near
/// it (see the module docs); [`coeff_mul`] refuses to drop a term silently.
pub const NC_ORDER: usize = 32;

fn coeff_mul(a: &HSeries, b: &HSeries) -> HSeries {
    if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
        assert!(
            da + db <= NC_ORDER,
            "h-degree {} exceeds the exact range",
            da + db
        );
    }
    a * b
}

type Terms = BTreeMap<Word, HSeries>;

fn add_into(map: &mut Terms, w: Word, c: HSeries) {
    if c.is_zero() {
        return;
    }
    match map.remove(&w) {
        Some(old) => {
            let s = &old + &c;
            if !s.is_zero() {
                map.insert(w, s);
            }
        }
        None => {
            map.insert(w, c);
        }
    }
}

/// Builder collecting generators and rules as text.
pub struct PresentationBuilder {
    name: String,
    gens: Vec<String>,
    twice_weights: Vec<i32>,
    rules: Vec<(String, String, String)>,
}

impl PresentationBuilder {
    /// Generators in normal order with twice their weights.
    pub fn new(name: &str, gens: &[(&str, i32)]) -> Self {
        PresentationBuilder {
            name: name.to_string(),
            gens: gens.iter().map(|(g, _)| g.to_string()).collect(),
            twice_weights: gens.iter().map(|(_, w)| *w).collect(),
            rules: Vec::new(),
        }
    }

    /// `first second -> rhs`.
    pub fn rule(mut self, first: &str, second: &str, rhs: &str) -> Self {
        self.rules
            .push((first.to_string(), second.to_string(), rhs.to_string()));
        self
    }

    /// `g m -> m g` for every `g` in `late` and `m` in `early`.
    pub fn commuting(mut self, late: &[&str], early: &[&str]) -> Self {
        for g in late {
            for m in early {
                self.rules
                    .push((g.to_string(), m.to_string(), format!("{m}*{g}")));
            }
        }
        self
    }

    /// Validates the rules (homogeneity, decrease) and checks every overlap.
    pub fn build(self) -> Result<Arc<Presentation>, Slh2Error> {
        let n = self.gens.len();
        let names: Vec<&str> = self.gens.iter().map(String::as_str).collect();
        let index = |g: &str| {
            names
                .iter()
                .position(|x| *x == g)
                .map(|i| i as u8)
                .ok_or_else(|| Slh2Error::Parse {
                    text: g.to_string(),
                    pos: 0,
                    msg: "unknown generator".into(),
                })
        };
        let mut rules = vec![None; n * n];
        let mut relations = Vec::new();
        for (a, b, rhs) in &self.rules {
            let (a, b) = (index(a)?, index(b)?);
            let poly = FreePoly::parse(rhs, &names)?;
            let lhs = vec![a, b];
            let lhs_weight = weight(&self.twice_weights, &lhs);
            let mut terms = Terms::new();
            for (w, k, c) in poly.terms() {
                let label = || format!("{}{} -> {rhs}", names[a as usize], names[b as usize]);
                if weight(&self.twice_weights, w) - 2 * k as i32 != lhs_weight {
                    return Err(Slh2Error::Inhomogeneous {
                        presentation: self.name.clone(),
                        rule: label(),
                    });
                }
                let smaller = w.len() < 2 || (w.len() == 2 && (k > 0 || *w < lhs));
                if !smaller {
                    return Err(Slh2Error::NotDecreasing {
                        presentation: self.name.clone(),
                        rule: label(),
                    });
                }
                add_into(
                    &mut terms,
                    w.clone(),
                    HSeries::monomial(NC_ORDER, k, c.clone()),
                );
            }
            let slot = &mut rules[a as usize * n + b as usize];
            if slot.is_some() {
                return Err(Slh2Error::DuplicateRule {
                    presentation: self.name.clone(),
                    word: format!("{}{}", names[a as usize], names[b as usize]),
                });
            }
            *slot = Some(terms.into_iter().collect());
            relations.push((lhs, poly));
        }
        let p = Arc::new(Presentation {
            name: self.name,
            gens: self.gens,
            twice_weights: self.twice_weights,
            rules,
            relations,
        });
        if let Some(bad) = p.critical_pairs().into_iter().find(|c| !c.resolves()) {
            return Err(Slh2Error::NonConfluent {
                presentation: p.name.clone(),
                overlap: bad.overlap,
                difference: bad.left.minus(&bad.right).render(),
            });
        }
        Ok(p)
    }
}

fn weight(tw: &[i32], w: &[u8]) -> i32 {
    w.iter().map(|g| tw[*g as usize]).sum()
}

pub struct Presentation {
    name: String,
    gens: Vec<String>,
    twice_weights: Vec<i32>,
    rules: Vec<Option<Vec<(Word, HSeries)>>>,
    relations: Vec<(Word, FreePoly)>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presentation({})", self.name)
    }
}

/// Both resolutions of an overlap `abc`.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub overlap: String,
    pub left: NCElement,
    pub right: NCElement,
}

impl CriticalPair {
    pub fn resolves(&self) -> bool {
        self.left == self.right
    }
}

impl Presentation {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.gens
    }

    pub fn generator_index(&self, g: &str) -> Option<u8> {
        self.gens.iter().position(|x| x == g).map(|i| i as u8)
    }

    pub fn twice_weight(&self, g: u8) -> i32 {
        self.twice_weights[g as usize]
    }

    /// Each rule as the relation `lhs - rhs` in the free algebra.
    pub fn relations(&self) -> Vec<FreePoly> {
        self.relations
            .iter()
            .map(|(lhs, rhs)| FreePoly::term(lhs.clone(), 0, RadicalSum::one()).minus(rhs))
            .collect()
    }

    fn rule(&self, a: u8, b: u8) -> Option<&[(Word, HSeries)]> {
        self.rules[a as usize * self.gens.len() + b as usize].as_deref()
    }

    fn first_redex(&self, w: &[u8]) -> Option<usize> {
        w.windows(2).position(|p| self.rule(p[0], p[1]).is_some())
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.first_redex(w).is_none()
    }

    fn normalize(&self, mut work: Terms) -> Terms {
        let mut done = Terms::new();
        while let Some((w, c)) = work.pop_last() {
            match self.first_redex(&w) {
                None => add_into(&mut done, w, c),
                Some(i) => {
                    for (rw, rc) in self.rule(w[i], w[i + 1]).expect("redex") {
                        let mut nw = Vec::with_capacity(w.len() + rw.len());
                        nw.extend_from_slice(&w[..i]);
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(&w[i + 2..]);
                        add_into(&mut work, nw, coeff_mul(&c, rc));
                    }
                }
            }
        }
        done
    }

    /// Overlaps `abc` where both `ab` and `bc` are reducible, resolved both ways.
    pub fn critical_pairs(self: &Arc<Self>) -> Vec<CriticalPair> {
        let n = self.gens.len() as u8;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let Some(r1) = self.rule(a, b) else { continue };
                for c in 0..n {
                    let Some(r2) = self.rule(b, c) else { continue };
                    let mut left = Terms::new();
                    for (w, k) in r1 {
                        let mut nw = w.clone();
                        nw.push(c);
                        add_into(&mut left, nw, k.clone());
                    }
                    let mut right = Terms::new();
                    for (w, k) in r2 {
                        let mut nw = vec![a];
                        nw.extend_from_slice(w);
                        add_into(&mut right, nw, k.clone());
                    }
                    out.push(CriticalPair {
                        overlap: [a, b, c]
                            .iter()
                            .map(|g| self.gens[*g as usize].as_str())
                            .collect::<Vec<_>>()
                            .join(""),
                        left: NCElement {
                            pres: self.clone(),
                            terms: self.normalize(left),
                        },
                        right: NCElement {
                            pres: self.clone(),
                            terms: self.normalize(right),
                        },
                    });
                }
            }
        }
        out
    }

    pub fn render_word(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let g = &self.gens[w[i] as usize];
            parts.push(if j - i == 1 {
                g.clone()
            } else {
                format!("{g}^{}", j - i)
            });
            i = j;
        }
        parts.join("*")
    }
}

/// Element of a presented algebra in normal form.
#[derive(Clone)]
pub struct NCElement {
    pres: Arc<Presentation>,
    terms: Terms,
}

impl PartialEq for NCElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.pres, &other.pres) && self.terms == other.terms
    }
}

impl fmt::Debug for NCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.pres.name, self.render())
    }
}

impl fmt::Display for NCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl NCElement {
    pub fn zero(p: &Arc<Presentation>) -> Self {
        NCElement {
            pres: p.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(p: &Arc<Presentation>) -> Self {
        Self::scalar(p, HSeries::one(NC_ORDER))
    }

    pub fn scalar(p: &Arc<Presentation>, c: HSeries) -> Self {
        let mut terms = Terms::new();
        add_into(&mut terms, Vec::new(), c.truncate(NC_ORDER));
        NCElement {
            pres: p.clone(),
            terms,
        }
    }

    pub fn generator(p: &Arc<Presentation>, g: &str) -> Result<Self, Slh2Error> {
        let i = p.generator_index(g).ok_or_else(|| Slh2Error::Parse {
            text: g.to_string(),
            pos: 0,
            msg: "unknown generator".into(),
        })?;
        Ok(Self::from_word(p, vec![i], HSeries::one(NC_ORDER)))
    }

    /// Normal form of `c w`.
    pub fn from_word(p: &Arc<Presentation>, w: Word, c: HSeries) -> Self {
        let mut terms = Terms::new();
        add_into(&mut terms, w, c);
        NCElement {
            pres: p.clone(),
            terms: p.normalize(terms),
        }
    }

    pub fn from_free(p: &Arc<Presentation>, f: &FreePoly) -> Self {
        let mut terms = Terms::new();
        for (w, k, c) in f.terms() {
            add_into(
                &mut terms,
                w.clone(),
                HSeries::monomial(NC_ORDER, k, c.clone()),
            );
        }
        NCElement {
            pres: p.clone(),
            terms: p.normalize(terms),
        }
    }

    /// Parses and normal-orders an expression in the generators.
    pub fn parse(p: &Arc<Presentation>, text: &str) -> Result<Self, Slh2Error> {
        let names: Vec<&str> = p.gens.iter().map(String::as_str).collect();
        Ok(Self::from_free(p, &FreePoly::parse(text, &names)?))
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    /// Normal words with their coefficients.
    pub fn terms(&self) -> &BTreeMap<Word, HSeries> {
        &self.terms
    }

    pub fn coeff(&self, w: &[u8]) -> HSeries {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| HSeries::zero(NC_ORDER))
    }

    pub fn at_h_zero(&self) -> Self {
        let mut terms = Terms::new();
        for (w, c) in &self.terms {
            add_into(
                &mut terms,
                w.clone(),
                HSeries::constant(NC_ORDER, c.at_zero()),
            );
        }
        NCElement {
            pres: self.pres.clone(),
            terms,
        }
    }

    /// Highest power of `h` in any coefficient.
    pub fn max_h_power(&self) -> usize {
        self.terms
            .values()
            .filter_map(HSeries::degree)
            .max()
            .unwrap_or(0)
    }

    fn eval_word(
        target: &Arc<Presentation>,
        w: &[u8],
        images: &[NCElement],
        reverse: bool,
    ) -> NCElement {
        let one = NCElement::one(target);
        let mut acc = one;
        let letters: Box<dyn Iterator<Item = &u8>> = if reverse {
            Box::new(w.iter().rev())
        } else {
            Box::new(w.iter())
        };
        for g in letters {
            acc = acc.times(&images[*g as usize]);
        }
        acc
    }

    /// Image under the algebra map sending generator `i` to `images[i]`.
    pub fn map_hom(&self, target: &Arc<Presentation>, images: &[NCElement]) -> NCElement {
        self.map_with(target, images, false)
    }

    /// Image under the anti-homomorphism sending generator `i` to `images[i]`.
    pub fn map_antihom(&self, target: &Arc<Presentation>, images: &[NCElement]) -> NCElement {
        self.map_with(target, images, true)
    }

    fn map_with(
        &self,
        target: &Arc<Presentation>,
        images: &[NCElement],
        reverse: bool,
    ) -> NCElement {
        let mut acc = NCElement::zero(target);
        for (w, c) in &self.terms {
            acc = acc.plus(&Self::eval_word(target, w, images, reverse).scaled(c));
        }
        acc
    }

    /// Same map applied to a free polynomial, e.g. a defining relation.
    pub fn free_image(
        f: &FreePoly,
        target: &Arc<Presentation>,
        images: &[NCElement],
        reverse: bool,
    ) -> NCElement {
        let mut acc = NCElement::zero(target);
        for (w, k, c) in f.terms() {
            let coeff = HSeries::monomial(NC_ORDER, k, c.clone());
            acc = acc.plus(&Self::eval_word(target, w, images, reverse).scaled(&coeff));
        }
        acc
    }

    /// Terms expanded by power of `h`: `(k, word, c)` for `c h^k word`, sorted by
    /// power of `h`, then descending degree, then word.
    pub fn expanded_terms(&self) -> Vec<(usize, Word, RadicalSum)> {
        let mut v: Vec<(usize, Word, RadicalSum)> = self
            .terms
            .iter()
            .flat_map(|(w, c)| {
                c.coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| !r.is_zero())
                    .map(move |(k, r)| (k, w.clone(), r.clone()))
            })
            .collect();
        v.sort_by(|a, b| {
            (a.0, std::cmp::Reverse(a.1.len()), &a.1).cmp(&(
                b.0,
                std::cmp::Reverse(b.1.len()),
                &b.1,
            ))
        });
        v
    }

    /// Canonical text, e.g. `x^2 + h*x*v`.
    pub fn render(&self) -> String {
        let terms = self.expanded_terms();
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, w, c)) in terms.iter().enumerate() {
            let (neg, mag) = match c.as_single_term() {
                Some((q, _)) if q < &num_traits::Zero::zero() => (true, -c),
                _ => (false, c.clone()),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !mag.is_one() {
                factors.push(if mag.terms().len() > 1 {
                    format!("({mag})")
                } else {
                    mag.to_string()
                });
            }
            match k {
                0 => {}
                1 => factors.push("h".to_string()),
                _ => factors.push(format!("h^{k}")),
            }
            if !w.is_empty() || factors.is_empty() {
                factors.push(self.pres.render_word(w));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// `[[word, coeff], ...]` with `coeff` a polynomial in `h`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.expanded_terms()
                .into_iter()
                .map(|(k, w, c)| {
                    let coeff = match k {
                        0 => c.to_string(),
                        1 => format!("({c})*h"),
                        _ => format!("({c})*h^{k}"),
                    };
                    json!([self.pres.render_word(&w), coeff])
                })
                .collect(),
        )
    }
}

impl Algebra for NCElement {
    fn order(&self) -> usize {
        NC_ORDER
    }

    fn zero_like(&self) -> Self {
        Self::zero(&self.pres)
    }

    fn one_like(&self) -> Self {
        Self::one(&self.pres)
    }

    fn plus(&self, rhs: &Self) -> Self {
        assert!(
            Arc::ptr_eq(&self.pres, &rhs.pres),
            "elements of different presentations"
        );
        let mut terms = self.terms.clone();
        for (w, c) in &rhs.terms {
            add_into(&mut terms, w.clone(), c.clone());
        }
        NCElement {
            pres: self.pres.clone(),
            terms,
        }
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.scaled(&HSeries::from_int(NC_ORDER, -1)))
    }

    fn times(&self, rhs: &Self) -> Self {
        assert!(
            Arc::ptr_eq(&self.pres, &rhs.pres),
            "elements of different presentations"
        );
        let mut work = Terms::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                add_into(&mut work, w, coeff_mul(c1, c2));
            }
        }
        NCElement {
            pres: self.pres.clone(),
            terms: self.pres.normalize(work),
        }
    }

    fn scaled(&self, c: &HSeries) -> Self {
        let c = if c.order() == NC_ORDER {
            c.clone()
        } else {
            HSeries::from_coeffs(NC_ORDER, c.coeffs().to_vec())
        };
        let mut terms = Terms::new();
        for (w, d) in &self.terms {
            add_into(&mut terms, w.clone(), coeff_mul(d, &c));
        }
        NCElement {
            pres: self.pres.clone(),
            terms,
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane() -> Arc<Presentation> {
        PresentationBuilder::new("plane", &[("eta", -1), ("xi", 1)])
            .rule("xi", "eta", "eta*xi + h*xi^2")
            .build()
            .unwrap()
    }

    #[test]
    fn single_rule_normal_form() {
        let p = plane();
        let e = NCElement::parse(&p, "xi*eta").unwrap();
        assert_eq!(e.render(), "eta*xi + h*xi^2");
        // xi eta^2 = eta^2 xi + 2h eta xi^2 + 2h^2 xi^3
        let e2 = NCElement::parse(&p, "xi*eta^2").unwrap();
        assert_eq!(
            e2,
            NCElement::parse(&p, "eta^2*xi + 2*h*eta*xi^2 + 2*h^2*xi^3").unwrap()
        );
    }

    #[test]
    fn rejects_increasing_rule() {
        let r = PresentationBuilder::new("bad", &[("a", 0), ("b", 0)])
            .rule("b", "a", "b*b")
            .build();
        assert!(matches!(r, Err(Slh2Error::NotDecreasing { .. })));
        let r = PresentationBuilder::new("bad", &[("a", 1), ("b", -1)])
            .rule("b", "a", "a*b + h")
            .build();
        assert!(matches!(r, Err(Slh2Error::Inhomogeneous { .. })));
    }

    #[test]
    fn detects_non_confluence() {
        let ok = PresentationBuilder::new("ok", &[("a", 0), ("b", 0), ("c", 0)])
            .rule("b", "a", "a*b")
            .rule("c", "b", "b*c + a")
            .rule("c", "a", "a*c")
            .build();
        assert!(ok.is_ok());
        // commutators violating the Jacobi identity
        let bad = PresentationBuilder::new("bad", &[("a", 0), ("b", 0), ("c", 0)])
            .rule("b", "a", "a*b + b")
            .rule("c", "b", "b*c + a")
            .rule("c", "a", "a*c")
            .build();
        assert!(matches!(bad, Err(Slh2Error::NonConfluent { .. })));
    }
}
