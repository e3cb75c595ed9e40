//! Normal-form polynomials `sum c_i y_1^{i_1} ... y_n^{i_n}` over the base ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{BaseCoeff, BaseRingKind, Degree, Rational};

/// Exponent vector of a normal-form monomial `y_1^{i_1} ... y_n^{i_n}`.
///
/// Ordered graded-lexicographically: lower total degree first, and within a
/// degree the lexicographically larger vector first (so `y1` sorts before `y2`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn generator(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = 1;
        m
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Lowest generator index with a positive exponent.
    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    /// Highest generator index with a positive exponent.
    pub fn last_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    /// Product of two monomials whose generators are already in order, i.e.
    /// every generator of `self` precedes every generator of `other`.
    pub(crate) fn concat(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn with_exponent(&self, index: usize, exp: u32) -> Monomial {
        let mut m = self.clone();
        m.0[index] = exp;
        m
    }

    /// Split into the parts strictly below, at, and strictly above `index`.
    pub(crate) fn split_at(&self, index: usize) -> (Monomial, u32, Monomial) {
        let n = self.0.len();
        let mut low = vec![0; n];
        let mut high = vec![0; n];
        low[..index].copy_from_slice(&self.0[..index]);
        high[index + 1..].copy_from_slice(&self.0[index + 1..]);
        (Monomial(low), self.0[index], Monomial(high))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Filtration degree `s(c, i) = val(c) + i_1 + ... + i_n` of a monomial.
pub fn monomial_degree(c: &BaseCoeff, m: &Monomial) -> Result<u32> {
    match c.val() {
        Degree::Finite(v) => Ok(v + m.total_degree()),
        Degree::Infinite => Err(Error::ZeroMonomial),
    }
}

/// A polynomial of `R_n` in normal form. The zero element has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    nvars: usize,
    base: BaseRingKind,
    terms: BTreeMap<Monomial, BaseCoeff>,
}

impl Element {
    pub fn zero(nvars: usize, base: BaseRingKind) -> Self {
        Element {
            nvars,
            base,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, base: BaseRingKind) -> Self {
        Self::constant(nvars, BaseCoeff::one(base))
    }

    pub fn constant(nvars: usize, c: BaseCoeff) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn scalar(nvars: usize, base: BaseRingKind, r: Rational) -> Self {
        Self::constant(nvars, BaseCoeff::scalar(base, r))
    }

    pub fn generator(nvars: usize, base: BaseRingKind, index: usize) -> Self {
        Self::term(BaseCoeff::one(base), Monomial::generator(nvars, index))
    }

    pub fn term(c: BaseCoeff, m: Monomial) -> Self {
        let mut out = Self::zero(m.nvars(), c.kind());
        out.add_term(m, &c);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn base(&self) -> BaseRingKind {
        self.base
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BaseCoeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BaseCoeff {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| BaseCoeff::zero(self.base))
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> BaseCoeff {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &BaseCoeff) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.nvars(), self.nvars);
        match self.terms.get_mut(&m) {
            Some(slot) => {
                slot.add_assign_unchecked(c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub(crate) fn add_assign(&mut self, other: &Element) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &Element, c: &BaseCoeff) {
        if c.is_one() {
            return self.add_assign(other);
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), &c.mul_unchecked(d));
        }
    }

    pub(crate) fn check_compatible(&self, other: &Element) -> Result<()> {
        if self.nvars != other.nvars || self.base != other.base {
            Err(Error::PresentationMismatch)
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            nvars: self.nvars,
            base: self.base,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Multiply by a central coefficient of `C`.
    pub fn scale(&self, c: &BaseCoeff) -> Element {
        let mut out = Element::zero(self.nvars, self.base);
        out.add_scaled(self, c);
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Element {
        self.scale(&BaseCoeff::scalar(self.base, r.clone()))
    }

    /// Filtration degree of the lowest monomial; infinite for zero.
    pub fn min_degree(&self) -> Degree {
        self.terms
            .iter()
            .filter_map(|(m, c)| c.val().finite().map(|v| v + m.total_degree()))
            .min()
            .map_or(Degree::Infinite, Degree::Finite)
    }

    /// Highest filtration degree reached by any `t^k y^i` piece.
    pub fn max_degree(&self) -> Degree {
        self.terms
            .iter()
            .filter_map(|(m, c)| c.terms().map(|(e, _)| e).last().map(|e| e + m.total_degree()))
            .max()
            .map_or(Degree::Infinite, Degree::Finite)
    }

    /// Regroup into homogeneous strata `F_k`. Over `k[[t]]` each coefficient is
    /// split by t-power, so every piece `r t^e y^i` lands in stratum `e + |i|`.
    pub fn strata(&self) -> BTreeMap<u32, Element> {
        let mut out: BTreeMap<u32, Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            for (e, r) in c.terms() {
                let d = e + m.total_degree();
                out.entry(d)
                    .or_insert_with(|| Element::zero(self.nvars, self.base))
                    .add_term(m.clone(), &BaseCoeff::monomial(self.base, r.clone(), e));
            }
        }
        out
    }

    /// Drop every piece of filtration degree above `order`.
    pub fn truncate(&self, order: u32) -> Element {
        let mut out = Element::zero(self.nvars, self.base);
        for (m, c) in &self.terms {
            let deg = m.total_degree();
            if deg > order {
                continue;
            }
            let kept = c.truncate_t(order - deg);
            if !kept.is_zero() {
                out.terms.insert(m.clone(), kept);
            }
        }
        out
    }

    /// Highest generator index occurring in the element.
    pub fn max_generator(&self) -> Option<usize> {
        self.terms.keys().filter_map(Monomial::last_var).max()
    }

    /// True if every monomial uses only generators with index `< level`.
    pub fn supported_below(&self, level: usize) -> bool {
        self.max_generator().is_none_or(|g| g < level)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
