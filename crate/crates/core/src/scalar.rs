//! Exact rational scalars and the base ring `C`.
//!
//! Two base rings are modelled: a field `k = Q` (maximal ideal zero) and the
//! truncated power series ring `k[[t]] / t^{T+1}` in one central variable,
//! whose maximal ideal is `(t)`. Coefficients carry their ring kind so that
//! mixing the two is caught at runtime.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `a` or `a/b` with an optional leading sign.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Syntax {
            pos: 0,
            msg: format!("invalid rational literal {s:?}"),
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational((self.0).$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Which complete local ring plays the role of `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseRingKind {
    /// `C = k`, maximal ideal zero.
    Field,
    /// `C = k[[t]]` truncated above `t^order`, maximal ideal `(t)`.
    CentralSeries(u32),
}

impl BaseRingKind {
    /// Largest t-exponent kept, `0` for a field.
    pub fn t_cap(self) -> u32 {
        match self {
            BaseRingKind::Field => 0,
            BaseRingKind::CentralSeries(order) => order,
        }
    }
}

impl fmt::Display for BaseRingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRingKind::Field => write!(f, "field"),
            BaseRingKind::CentralSeries(order) => write!(f, "central-series:{order}"),
        }
    }
}

impl FromStr for BaseRingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "field" {
            return Ok(BaseRingKind::Field);
        }
        if let Some(order) = s.strip_prefix("central-series:") {
            if let Ok(order) = order.trim().parse() {
                return Ok(BaseRingKind::CentralSeries(order));
            }
        }
        Err(Error::Config(format!(
            "unknown base ring {s:?} (expected \"field\" or \"central-series:<T>\")"
        )))
    }
}

/// A filtration degree or valuation: a natural number, or infinity for zero.
///
/// `Finite(_) < Infinite`, and addition is absorbing in `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    Finite(u32),
    Infinite,
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Degree::Infinite)
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::Infinite,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::Infinite => write!(f, "inf"),
        }
    }
}

/// An element of the base ring `C`: a polynomial in `t` with rational
/// coefficients, truncated according to its [`BaseRingKind`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BaseCoeff {
    kind: BaseRingKind,
    terms: BTreeMap<u32, Rational>,
}

impl BaseCoeff {
    pub fn zero(kind: BaseRingKind) -> Self {
        BaseCoeff {
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(kind: BaseRingKind) -> Self {
        Self::scalar(kind, Rational::one())
    }

    pub fn scalar(kind: BaseRingKind, r: Rational) -> Self {
        Self::monomial(kind, r, 0)
    }

    /// `r * t^exp`; zero if the exponent exceeds the truncation.
    pub fn monomial(kind: BaseRingKind, r: Rational, exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() && exp <= kind.t_cap() {
            terms.insert(exp, r);
        }
        BaseCoeff { kind, terms }
    }

    /// The central variable `t`. Fails over a field, where `t` does not exist.
    pub fn t(kind: BaseRingKind) -> Result<Self> {
        match kind {
            BaseRingKind::Field => Err(Error::Config(
                "the central variable t is not available over a field".into(),
            )),
            BaseRingKind::CentralSeries(_) => Ok(Self::monomial(kind, Rational::one(), 1)),
        }
    }

    pub fn kind(&self) -> BaseRingKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(Rational::is_one)
    }

    /// `(t-exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(e, r)| (*e, r))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `t^0`.
    pub fn constant(&self) -> Rational {
        self.terms.get(&0).cloned().unwrap_or_else(Rational::zero)
    }

    /// The rational value when the coefficient lies in `k` (no positive t-powers).
    pub fn as_scalar(&self) -> Option<Rational> {
        match self.terms.keys().next_back() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.constant()),
            Some(_) => None,
        }
    }

    /// Largest `k` with `self` in `m^k`; infinite for zero.
    pub fn val(&self) -> Degree {
        match self.terms.keys().next() {
            Some(&e) => Degree::Finite(e),
            None => Degree::Infinite,
        }
    }

    fn check_kind(&self, other: &BaseCoeff) -> Result<()> {
        if self.kind == other.kind {
            Ok(())
        } else {
            Err(Error::KindMismatch(self.kind, other.kind))
        }
    }

    pub fn try_add(&self, other: &BaseCoeff) -> Result<BaseCoeff> {
        self.check_kind(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn try_mul(&self, other: &BaseCoeff) -> Result<BaseCoeff> {
        self.check_kind(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &BaseCoeff) {
        for (e, r) in &other.terms {
            let slot = self.terms.entry(*e).or_insert_with(Rational::zero);
            *slot = &*slot + r;
            if slot.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &BaseCoeff) -> BaseCoeff {
        let cap = self.kind.t_cap();
        let mut terms: BTreeMap<u32, Rational> = BTreeMap::new();
        for (e1, r1) in &self.terms {
            for (e2, r2) in &other.terms {
                let e = e1 + e2;
                if e > cap {
                    break;
                }
                let slot = terms.entry(e).or_insert_with(Rational::zero);
                *slot = &*slot + &(r1 * r2);
            }
        }
        terms.retain(|_, r| !r.is_zero());
        BaseCoeff {
            kind: self.kind,
            terms,
        }
    }

    pub fn scale(&self, r: &Rational) -> BaseCoeff {
        if r.is_zero() {
            return BaseCoeff::zero(self.kind);
        }
        BaseCoeff {
            kind: self.kind,
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    /// The inverse of a unit of `C`, exact modulo the truncation.
    pub fn inv(&self) -> Result<BaseCoeff> {
        if self.val() != Degree::Finite(0) {
            return Err(Error::NonUnit(format!(
                "{} has valuation {} in the base ring",
                self.to_expr(),
                self.val()
            )));
        }
        let cap = self.kind.t_cap();
        let c0_inv = self.constant().recip().expect("unit has nonzero constant");
        let coeff = |k: u32| self.terms.get(&k).cloned().unwrap_or_else(Rational::zero);
        // d_0 = 1/c_0, d_k = -(1/c_0) * sum_{i=1..k} c_i d_{k-i}
        let mut inv: Vec<Rational> = vec![c0_inv.clone()];
        for k in 1..=cap {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc = &acc + &(&coeff(i) * &inv[(k - i) as usize]);
            }
            inv.push(-(&c0_inv * &acc));
        }
        let terms = inv
            .into_iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(e, r)| (e as u32, r))
            .collect();
        Ok(BaseCoeff {
            kind: self.kind,
            terms,
        })
    }

    /// Keep only the t-terms whose exponent is at most `max_exp`.
    pub(crate) fn truncate_t(&self, max_exp: u32) -> BaseCoeff {
        BaseCoeff {
            kind: self.kind,
            terms: self
                .terms
                .range(..=max_exp)
                .map(|(e, r)| (*e, r.clone()))
                .collect(),
        }
    }

    /// Canonical textual form in the expression grammar, e.g. `3/2`, `t^2`, `1 - 2*t`.
    pub fn to_expr(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, r)) in self.terms.iter().enumerate() {
            let neg = r.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = r.abs();
            match *e {
                0 => out.push_str(&mag.to_string()),
                e => {
                    if !mag.is_one() {
                        out.push_str(&format!("{mag}*"));
                    }
                    out.push('t');
                    if e > 1 {
                        out.push_str(&format!("^{e}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for BaseCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}

impl fmt::Display for BaseCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl Neg for &BaseCoeff {
    type Output = BaseCoeff;
    fn neg(self) -> BaseCoeff {
        BaseCoeff {
            kind: self.kind,
            terms: self.terms.iter().map(|(e, r)| (*e, -r)).collect(),
        }
    }
}

impl Add for &BaseCoeff {
    type Output = BaseCoeff;
    fn add(self, rhs: &BaseCoeff) -> BaseCoeff {
        self.try_add(rhs).expect("base ring kind mismatch")
    }
}

impl Sub for &BaseCoeff {
    type Output = BaseCoeff;
    fn sub(self, rhs: &BaseCoeff) -> BaseCoeff {
        self.try_add(&-rhs).expect("base ring kind mismatch")
    }
}

impl Mul for &BaseCoeff {
    type Output = BaseCoeff;
    fn mul(self, rhs: &BaseCoeff) -> BaseCoeff {
        self.try_mul(rhs).expect("base ring kind mismatch")
    }
}

impl PartialOrd for BaseCoeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BaseCoeff {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const CS5: BaseRingKind = BaseRingKind::CentralSeries(5);

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn poly(kind: BaseRingKind, coeffs: &[(u32, i64)]) -> BaseCoeff {
        let mut out = BaseCoeff::zero(kind);
        for &(e, c) in coeffs {
            out.add_assign_unchecked(&BaseCoeff::monomial(kind, Rational::from(c), e));
        }
        out
    }

    #[test]
    fn rational_lowest_terms() {
        let r = q(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("-3/2".parse::<Rational>().unwrap(), r);
        assert_eq!("4/2".parse::<Rational>().unwrap().to_string(), "2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn valuation() {
        let f = BaseRingKind::Field;
        assert_eq!(BaseCoeff::scalar(f, q(3, 2)).val(), Degree::Finite(0));
        assert_eq!(poly(CS5, &[(2, 1), (3, 1)]).val(), Degree::Finite(2));
        assert_eq!(BaseCoeff::zero(f).val(), Degree::Infinite);
    }

    #[test]
    fn arithmetic_and_truncation() {
        let k = BaseRingKind::CentralSeries(2);
        let t = BaseCoeff::t(k).unwrap();
        assert_eq!(&t * &t, poly(k, &[(2, 1)]));
        assert!((&(&t * &t) * &t).is_zero());
        let half = BaseCoeff::scalar(BaseRingKind::Field, q(1, 2));
        assert!((&half + &half).is_one());
        assert!(BaseCoeff::t(BaseRingKind::Field).is_err());
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let a = BaseCoeff::one(BaseRingKind::Field);
        let b = BaseCoeff::one(CS5);
        assert!(matches!(a.try_add(&b), Err(Error::KindMismatch(..))));
        assert!(matches!(a.try_mul(&b), Err(Error::KindMismatch(..))));
    }

    #[test]
    fn inverse() {
        let two = BaseCoeff::scalar(BaseRingKind::Field, q(2, 1));
        assert_eq!(two.inv().unwrap(), BaseCoeff::scalar(BaseRingKind::Field, q(1, 2)));
        let k = BaseRingKind::CentralSeries(3);
        let one_minus_t = poly(k, &[(0, 1), (1, -1)]);
        assert_eq!(
            one_minus_t.inv().unwrap(),
            poly(k, &[(0, 1), (1, 1), (2, 1), (3, 1)])
        );
        assert!(matches!(
            BaseCoeff::t(k).unwrap().inv(),
            Err(Error::NonUnit(_))
        ));
        assert!(matches!(BaseCoeff::zero(k).inv(), Err(Error::NonUnit(_))));
    }

    #[test]
    fn printing() {
        assert_eq!(poly(CS5, &[(0, 1), (1, -2), (3, 1)]).to_expr(), "1 - 2*t + t^3");
        assert_eq!(poly(CS5, &[(2, -1)]).to_expr(), "-t^2");
        assert_eq!(BaseCoeff::zero(CS5).to_expr(), "0");
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn coeff() -> impl Strategy<Value = BaseCoeff> {
        proptest::collection::vec((0u32..=5, small_rational()), 0..4).prop_map(|ts| {
            let mut out = BaseCoeff::zero(CS5);
            for (e, r) in ts {
                out.add_assign_unchecked(&BaseCoeff::monomial(CS5, r, e));
            }
            out
        })
    }

    fn unit() -> impl Strategy<Value = BaseCoeff> {
        (coeff(), small_rational().prop_filter("nonzero", |r| !r.is_zero())).prop_map(
            |(c, r)| {
                let mut c = c;
                let c0 = c.constant();
                c.add_assign_unchecked(&BaseCoeff::scalar(CS5, &r - &c0));
                c
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn valuation_is_additive_up_to_truncation(a in coeff(), b in coeff()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let expected = a.val() + b.val();
            let got = (&a * &b).val();
            match expected {
                Degree::Finite(d) if d <= 5 => prop_assert_eq!(got, expected),
                _ => prop_assert!(got.is_infinite()),
            }
        }

        #[test]
        fn valuation_of_sum_is_at_least_min(a in coeff(), b in coeff()) {
            prop_assert!((&a + &b).val() >= a.val().min(b.val()));
        }

        #[test]
        fn inverse_round_trips(u in unit()) {
            let inv = u.inv().unwrap();
            prop_assert!((&u * &inv).is_one());
            prop_assert!((&inv * &u).is_one());
        }
    }
}
