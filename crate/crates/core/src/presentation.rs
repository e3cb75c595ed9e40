//! Iterated Ore extensions `C[y_1; tau_1, delta_1] ... [y_n; tau_n, delta_n]`.
//!
//! Each level `l` carries a skew derivation `(tau_l, delta_l)` of the ring
//! generated by `y_1 .. y_{l-1}`. `tau_l` scales each earlier generator by a
//! nonzero rational; `delta_l(y_j)` is an arbitrary normal-form polynomial in
//! earlier generators. Both maps act trivially on `C`.
//!
//! Products are computed by the structural recursion: an element of `R_l` is
//! a polynomial in `y_l` over `R_{l-1}`, and `y_l r = tau_l(r) y_l + delta_l(r)`
//! moves `y_l` past any `r` in `R_{l-1}`.

use std::fmt;

use dashmap::DashMap;

use crate::element::{Element, Monomial};
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::parser;
use crate::scalar::{BaseCoeff, BaseRingKind, Degree, Rational};

/// Reserved name of the central variable of `k[[t]]`.
pub const CENTRAL_VAR: &str = "t";

#[derive(Default)]
struct Caches {
    products: DashMap<(Monomial, Monomial), Element>,
    deltas: DashMap<(usize, Monomial), Element>,
}

impl Caches {
    fn clear(&self) {
        self.products.clear();
        self.deltas.clear();
    }
}

/// An iterated Ore extension, immutable once built.
///
/// Internally memoises monomial products and derivation values; the caches
/// are invisible to callers.
pub struct Presentation {
    names: Vec<String>,
    base: BaseRingKind,
    /// `tau[l][j]` for `j < l`: `tau_l(y_j) = tau[l][j] * y_j`.
    tau: Vec<Vec<Rational>>,
    /// `delta[l][j]` for `j < l`: `delta_l(y_j)`, supported on `y_0 .. y_{l-1}`.
    delta: Vec<Vec<Element>>,
    caches: Caches,
}

impl Clone for Presentation {
    fn clone(&self) -> Self {
        Presentation {
            names: self.names.clone(),
            base: self.base,
            tau: self.tau.clone(),
            delta: self.delta.clone(),
            caches: Caches::default(),
        }
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.base == other.base
            && self.tau == other.tau
            && self.delta == other.delta
    }
}

impl Eq for Presentation {}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("names", &self.names)
            .field("base", &self.base)
            .field("tau", &self.tau)
            .field("delta", &self.delta)
            .finish()
    }
}

impl Presentation {
    pub fn builder(base: BaseRingKind, names: Vec<String>) -> PresentationBuilder {
        PresentationBuilder::new(base, names)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn base(&self) -> BaseRingKind {
        self.base
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn tau_scalar(&self, level: usize, j: usize) -> &Rational {
        &self.tau[level][j]
    }

    pub fn delta_rule(&self, level: usize, j: usize) -> &Element {
        &self.delta[level][j]
    }

    /// True when every `delta_l(y_j)` has filtration degree at least 2, so
    /// multiplication and the skew derivations never lower degree. Truncated
    /// arithmetic relies on this to skip products that cannot survive.
    pub fn is_filtered(&self) -> bool {
        self.delta
            .iter()
            .flatten()
            .all(|d| d.min_degree() >= Degree::Finite(2))
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.nvars(), self.base)
    }

    pub fn one(&self) -> Element {
        Element::one(self.nvars(), self.base)
    }

    pub fn generator(&self, index: usize) -> Element {
        Element::generator(self.nvars(), self.base, index)
    }

    pub fn scalar(&self, r: Rational) -> Element {
        Element::scalar(self.nvars(), self.base, r)
    }

    pub fn constant(&self, c: BaseCoeff) -> Element {
        Element::constant(self.nvars(), c)
    }

    pub fn clear_caches(&self) {
        self.caches.clear();
    }

    pub(crate) fn check_element(&self, a: &Element) -> Result<()> {
        if a.nvars() != self.nvars() || a.base() != self.base {
            Err(Error::PresentationMismatch)
        } else {
            Ok(())
        }
    }

    fn check_support(&self, level: usize, a: &Element) -> Result<()> {
        self.check_element(a)?;
        match a.max_generator() {
            Some(g) if g >= level => Err(Error::Support {
                level: self.names[level].clone(),
                generator: self.names[g].clone(),
            }),
            _ => Ok(()),
        }
    }

    /// `tau_level(a)` for `a` supported on generators below `level`.
    pub fn apply_tau(&self, level: usize, a: &Element) -> Result<Element> {
        self.check_support(level, a)?;
        Ok(self.tau_unchecked(level, a))
    }

    /// `delta_level(a)` for `a` supported on generators below `level`.
    pub fn apply_delta(&self, level: usize, a: &Element) -> Result<Element> {
        self.check_support(level, a)?;
        Ok(self.delta_unchecked(level, a))
    }

    /// Exact product in normal form.
    pub fn nf_mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.mul_with(a, b, Exec::default())
    }

    /// Exact product in normal form with an explicit execution strategy.
    pub fn mul_with(&self, a: &Element, b: &Element, exec: Exec) -> Result<Element> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.mul_elements(a, b, exec, None))
    }

    /// Scalar factor `tau_level(y^m) = scalar * y^m`.
    pub(crate) fn tau_monomial_scalar(&self, level: usize, m: &Monomial) -> Rational {
        m.exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(Rational::one(), |acc, (j, &e)| &acc * &self.tau[level][j].pow(e))
    }

    pub(crate) fn tau_unchecked(&self, level: usize, a: &Element) -> Element {
        let mut out = self.zero();
        for (m, c) in a.terms() {
            out.add_term(m.clone(), &c.scale(&self.tau_monomial_scalar(level, m)));
        }
        out
    }

    pub(crate) fn delta_unchecked(&self, level: usize, a: &Element) -> Element {
        let mut out = self.zero();
        for (m, c) in a.terms() {
            out.add_scaled(&self.delta_monomial(level, m), c);
        }
        out
    }

    /// Leibniz recursion on `y_j * rest`, `j` the first generator present:
    /// `delta(y_j rest) = tau(y_j) delta(rest) + delta(y_j) rest`.
    fn delta_monomial(&self, level: usize, m: &Monomial) -> Element {
        let Some(j) = m.first_var() else {
            return self.zero();
        };
        let key = (level, m.clone());
        if let Some(hit) = self.caches.deltas.get(&key) {
            return hit.clone();
        }
        let rest = m.with_exponent(j, m.exponents()[j] - 1);
        let yj = Monomial::generator(self.nvars(), j);

        let delta_rest = self.delta_monomial(level, &rest);
        let mut out = self.mul_monomial_element(&yj, &delta_rest);
        out = out.scale_rational(&self.tau[level][j]);
        let tail = self.mul_element_monomial(&self.delta[level][j], &rest);
        out.add_assign(&tail);

        self.caches.deltas.insert(key, out.clone());
        out
    }

    fn mul_monomial_element(&self, m: &Monomial, b: &Element) -> Element {
        let mut out = self.zero();
        for (mb, c) in b.terms() {
            out.add_scaled(&self.monomial_product(m, mb), c);
        }
        out
    }

    fn mul_element_monomial(&self, a: &Element, m: &Monomial) -> Element {
        let mut out = self.zero();
        for (ma, c) in a.terms() {
            out.add_scaled(&self.monomial_product(ma, m), c);
        }
        out
    }

    /// Sum of all term products. With `cap`, pairs whose degrees already add
    /// past the cap are skipped and the result is truncated; only valid for a
    /// filtered presentation.
    pub(crate) fn mul_elements(
        &self,
        a: &Element,
        b: &Element,
        exec: Exec,
        cap: Option<u32>,
    ) -> Element {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let (a_pieces, b_pieces) = match cap {
            Some(_) => (pieces(a), pieces(b)),
            None => (plain_pieces(a), plain_pieces(b)),
        };
        let row = |(ma, ca, da): &(Monomial, BaseCoeff, u32)| {
            let mut acc = self.zero();
            for (mb, cb, db) in &b_pieces {
                if let Some(cap) = cap {
                    if da + db > cap {
                        continue;
                    }
                }
                let coeff = ca.mul_unchecked(cb);
                if coeff.is_zero() {
                    continue;
                }
                acc.add_scaled(&self.monomial_product(ma, mb), &coeff);
            }
            acc
        };
        let exec = if a_pieces.len() * b_pieces.len() >= par::PARALLEL_THRESHOLD {
            exec
        } else {
            Exec::Sequential
        };
        let rows = par::map(exec, &a_pieces, row);
        let mut out = self.zero();
        for r in &rows {
            out.add_assign(r);
        }
        match cap {
            Some(cap) => out.truncate(cap),
            None => out,
        }
    }

    /// `y^a * y^b` in normal form.
    pub(crate) fn monomial_product(&self, a: &Monomial, b: &Monomial) -> Element {
        let one = || BaseCoeff::one(self.base);
        let Some(h) = a.last_var() else {
            return Element::term(one(), b.clone());
        };
        match b.first_var() {
            None => return Element::term(one(), a.clone()),
            Some(first) if h <= first => return Element::term(one(), a.concat(b)),
            _ => {}
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.caches.products.get(&key) {
            return hit.clone();
        }

        // a = prefix * y_h^k with prefix below h; b = low * y_h^e * high.
        let k = a.exponents()[h];
        let prefix = a.with_exponent(h, 0);
        let (low, e, high) = b.split_at(h);
        let expansion = self.ore_power(h, k, &low);

        let mut out = self.zero();
        for (i, coeff) in expansion.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let left = self.mul_monomial_element(&prefix, coeff);
            for (m, c) in left.terms() {
                let placed = m.with_exponent(h, i as u32 + e).concat(&high);
                out.add_term(placed, c);
            }
        }

        self.caches.products.insert(key, out.clone());
        out
    }

    /// Coefficients `r_i` in `R_{h-1}` with `y_h^k * y^low = sum_i r_i y_h^i`.
    fn ore_power(&self, h: usize, k: u32, low: &Monomial) -> Vec<Element> {
        let mut coeffs = vec![Element::term(BaseCoeff::one(self.base), low.clone())];
        for _ in 0..k {
            let mut next = vec![self.zero(); coeffs.len() + 1];
            for (i, r) in coeffs.iter().enumerate() {
                if r.is_zero() {
                    continue;
                }
                next[i + 1].add_assign(&self.tau_unchecked(h, r));
                next[i].add_assign(&self.delta_unchecked(h, r));
            }
            coeffs = next;
        }
        coeffs
    }
}

fn plain_pieces(a: &Element) -> Vec<(Monomial, BaseCoeff, u32)> {
    a.terms().map(|(m, c)| (m.clone(), c.clone(), 0)).collect()
}

/// Terms split by t-power, tagged with their filtration degree.
fn pieces(a: &Element) -> Vec<(Monomial, BaseCoeff, u32)> {
    let base = a.base();
    let mut out = Vec::new();
    for (m, c) in a.terms() {
        for (e, r) in c.terms() {
            out.push((
                m.clone(),
                BaseCoeff::monomial(base, r.clone(), e),
                e + m.total_degree(),
            ));
        }
    }
    out
}

/// Source of a `delta_l(y_j)` rule before it has been normalised.
#[derive(Clone, Debug)]
pub enum RuleSource {
    /// Sum of coefficient times generator word, words in any order.
    Words(Vec<(BaseCoeff, Vec<usize>)>),
    /// Expression in the parser grammar.
    Expr(String),
}

/// Assembles a [`Presentation`] level by level. Rules may be written out of
/// normal order; each is normalised with the rules of strictly lower levels.
#[derive(Clone, Debug)]
pub struct PresentationBuilder {
    base: BaseRingKind,
    names: Vec<String>,
    tau: Vec<(usize, usize, Rational)>,
    delta: Vec<(usize, usize, RuleSource)>,
}

impl PresentationBuilder {
    pub fn new(base: BaseRingKind, names: Vec<String>) -> Self {
        PresentationBuilder {
            base,
            names,
            tau: Vec::new(),
            delta: Vec::new(),
        }
    }

    /// `tau_level(y_j) = scalar * y_j`; unset entries default to 1.
    pub fn tau(mut self, level: usize, j: usize, scalar: Rational) -> Self {
        self.tau.push((level, j, scalar));
        self
    }

    pub fn delta(mut self, level: usize, j: usize, rule: RuleSource) -> Self {
        self.delta.push((level, j, rule));
        self
    }

    pub fn delta_expr(self, level: usize, j: usize, src: impl Into<String>) -> Self {
        self.delta(level, j, RuleSource::Expr(src.into()))
    }

    pub fn build(self) -> Result<Presentation> {
        let n = self.names.len();
        validate_names(&self.names)?;
        let mut p = Presentation {
            names: self.names,
            base: self.base,
            tau: (0..n).map(|l| vec![Rational::one(); l]).collect(),
            delta: (0..n)
                .map(|l| vec![Element::zero(n, self.base); l])
                .collect(),
            caches: Caches::default(),
        };
        let check_pair = |l: usize, j: usize| {
            if l >= n || j >= l {
                Err(Error::Config(format!(
                    "rule index ({l}, {j}) must satisfy j < l < {n}"
                )))
            } else {
                Ok(())
            }
        };
        for (l, j, s) in self.tau {
            check_pair(l, j)?;
            if s.is_zero() {
                return Err(Error::InvalidParams(format!(
                    "tau[{}]({}) must be nonzero",
                    p.names[l], p.names[j]
                )));
            }
            p.tau[l][j] = s;
        }
        let mut rules: Vec<Vec<Option<RuleSource>>> = (0..n).map(|l| vec![None; l]).collect();
        for (l, j, r) in self.delta {
            check_pair(l, j)?;
            rules[l][j] = Some(r);
        }
        for (l, level_rules) in rules.into_iter().enumerate() {
            for (j, rule) in level_rules.into_iter().enumerate() {
                let Some(rule) = rule else { continue };
                let value = match rule {
                    RuleSource::Words(words) => eval_words(&p, &words)?,
                    RuleSource::Expr(src) => parser::parse_element(&src, &p)?,
                };
                if let Some(g) = value.max_generator().filter(|&g| g >= l) {
                    return Err(Error::Support {
                        level: p.names[l].clone(),
                        generator: p.names[g].clone(),
                    });
                }
                p.delta[l][j] = value;
            }
        }
        p.caches.clear();
        Ok(p)
    }
}

fn validate_names(names: &[String]) -> Result<()> {
    for (i, name) in names.iter().enumerate() {
        let mut chars = name.chars();
        let ok = chars
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::Config(format!("invalid generator name {name:?}")));
        }
        if name == CENTRAL_VAR {
            return Err(Error::Config(
                "\"t\" is reserved for the central variable".into(),
            ));
        }
        if names[..i].contains(name) {
            return Err(Error::Config(format!("duplicate generator name {name:?}")));
        }
    }
    Ok(())
}

/// Multiply out generator words left to right through `nf_mul`.
pub fn eval_words(p: &Presentation, words: &[(BaseCoeff, Vec<usize>)]) -> Result<Element> {
    let mut out = p.zero();
    for (c, word) in words {
        if c.kind() != p.base() {
            return Err(Error::KindMismatch(c.kind(), p.base()));
        }
        let mut acc = p.constant(c.clone());
        for &g in word {
            if g >= p.nvars() {
                return Err(Error::Config(format!("generator index {g} out of range")));
            }
            acc = p.mul_elements(&acc, &p.generator(g), Exec::Sequential, None);
        }
        out.add_assign(&acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: BaseRingKind = BaseRingKind::Field;

    fn names(ns: &[&str]) -> Vec<String> {
        ns.iter().map(|s| s.to_string()).collect()
    }

    /// Quantum plane `y2 y1 = q y1 y2`.
    fn quantum_plane(q: i64) -> Presentation {
        Presentation::builder(F, names(&["y1", "y2"]))
            .tau(1, 0, Rational::from(q))
            .build()
            .unwrap()
    }

    /// First Weyl algebra style `y2 y1 = y1 y2 + 1`.
    fn weyl() -> Presentation {
        Presentation::builder(F, names(&["y1", "y2"]))
            .delta_expr(1, 0, "1")
            .build()
            .unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn quantum_plane_powers() {
        let p = quantum_plane(2);
        let y1 = p.generator(0);
        let y2 = p.generator(1);
        let prod = p.nf_mul(&y2, &y1).unwrap();
        assert_eq!(prod, Element::term(BaseCoeff::scalar(F, Rational::from(2)), mono(&[1, 1])));
        // y2^2 y1^3 = 2^6 y1^3 y2^2
        let a = Element::term(BaseCoeff::one(F), mono(&[0, 2]));
        let b = Element::term(BaseCoeff::one(F), mono(&[3, 0]));
        assert_eq!(
            p.nf_mul(&a, &b).unwrap(),
            Element::term(BaseCoeff::scalar(F, Rational::from(64)), mono(&[3, 2]))
        );
    }

    #[test]
    fn weyl_commutator() {
        let p = weyl();
        let y1 = p.generator(0);
        let y2 = p.generator(1);
        // y2 y1^2 = y1^2 y2 + 2 y1
        let y1sq = p.nf_mul(&y1, &y1).unwrap();
        let got = p.nf_mul(&y2, &y1sq).unwrap();
        let mut want = Element::term(BaseCoeff::one(F), mono(&[2, 1]));
        want.add_term(mono(&[1, 0]), &BaseCoeff::scalar(F, Rational::from(2)));
        assert_eq!(got, want);
        assert!(!p.is_filtered());
    }

    #[test]
    fn unit_laws_and_support_errors() {
        let p = quantum_plane(3);
        let a = p.generator(1).try_add(&p.generator(0)).unwrap();
        assert_eq!(p.nf_mul(&p.one(), &a).unwrap(), a);
        assert_eq!(p.nf_mul(&a, &p.one()).unwrap(), a);
        assert_eq!(p.apply_tau(1, &p.one()).unwrap(), p.one());
        assert!(p.apply_delta(1, &p.one()).unwrap().is_zero());
        assert!(matches!(p.apply_tau(1, &p.generator(1)), Err(Error::Support { .. })));
        assert!(matches!(p.apply_delta(0, &p.generator(0)), Err(Error::Support { .. })));
        let other = Element::one(3, F);
        assert_eq!(p.nf_mul(&other, &a), Err(Error::PresentationMismatch));
    }

    #[test]
    fn builder_rejects_bad_input() {
        assert!(Presentation::builder(F, names(&["y1", "y1"])).build().is_err());
        assert!(Presentation::builder(F, names(&["t"])).build().is_err());
        assert!(Presentation::builder(F, names(&["1y"])).build().is_err());
        let zero_tau = Presentation::builder(F, names(&["a", "b"]))
            .tau(1, 0, Rational::zero())
            .build();
        assert!(matches!(zero_tau, Err(Error::InvalidParams(_))));
        let upward = Presentation::builder(F, names(&["a", "b", "c"]))
            .delta_expr(1, 0, "c")
            .build();
        assert!(matches!(upward, Err(Error::Support { .. })));
        let bad_index = Presentation::builder(F, names(&["a", "b"])).tau(0, 1, Rational::one()).build();
        assert!(bad_index.is_err());
    }

    #[test]
    fn rules_are_normalised_with_lower_levels() {
        // c b a with b a = 2 a b; delta_c(a) given as "b a" must become 2 a b.
        let p = Presentation::builder(F, names(&["a", "b", "c"]))
            .tau(1, 0, Rational::from(2))
            .delta(2, 0, RuleSource::Words(vec![(BaseCoeff::one(F), vec![1, 0])]))
            .build()
            .unwrap();
        assert_eq!(
            p.delta_rule(2, 0),
            &Element::term(BaseCoeff::scalar(F, Rational::from(2)), mono(&[1, 1, 0]))
        );
    }

    #[test]
    fn sequential_and_parallel_products_agree() {
        let p = weyl();
        let mut a = p.zero();
        for i in 0..6u32 {
            for j in 0..6u32 {
                a.add_term(mono(&[i, j]), &BaseCoeff::scalar(F, Rational::from(i64::from(i + 2 * j + 1))));
            }
        }
        let seq = p.mul_with(&a, &a, Exec::Sequential).unwrap();
        p.clear_caches();
        let par = p.mul_with(&a, &a, Exec::Parallel).unwrap();
        assert_eq!(seq, par);
    }
}
