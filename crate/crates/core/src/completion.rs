//! Skew power series completion at `m_n = m + <y_1, .., y_n>`, handled through
//! its finite truncations.
//!
//! A [`TruncatedSeries`] of order `N` stands for a coset modulo everything of
//! filtration degree above `N`. Arithmetic on truncations is exact provided
//! the presentation is filtered (see [`Presentation::is_filtered`]): then no
//! product or derivation lowers degree, so discarded tails never feed back.

use std::collections::BTreeMap;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::presentation::Presentation;
use crate::scalar::{BaseRingKind, Degree};

/// Working order used by probes and property suites unless overridden.
pub const DEFAULT_ORDER: u32 = 8;

/// A representative of a coset of `S_n / (degree > order)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    body: Element,
    order: u32,
}

impl TruncatedSeries {
    /// Truncate `body` to `order`. Over `k[[t]]/t^{T+1}` the order may not
    /// exceed `T`, otherwise constant tails lost to the base truncation would
    /// still be visible.
    pub fn new(body: Element, order: u32) -> Result<Self> {
        if let BaseRingKind::CentralSeries(cap) = body.base() {
            if order > cap {
                return Err(Error::OrderExceedsBase { order, cap });
            }
        }
        Ok(TruncatedSeries {
            body: body.truncate(order),
            order,
        })
    }

    pub fn body(&self) -> &Element {
        &self.body
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn into_body(self) -> Element {
        self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Lower the order; raising it is impossible.
    pub fn truncate(&self, order: u32) -> Result<Self> {
        if order > self.order {
            return Err(Error::OrderRaise {
                requested: order,
                available: self.order,
            });
        }
        Ok(TruncatedSeries {
            body: self.body.truncate(order),
            order,
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        same_order(self, other)?;
        Ok(TruncatedSeries {
            body: self.body.try_add(&other.body)?,
            order: self.order,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        same_order(self, other)?;
        Ok(TruncatedSeries {
            body: self.body.try_sub(&other.body)?,
            order: self.order,
        })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            body: self.body.neg(),
            order: self.order,
        }
    }

    pub fn min_degree(&self) -> Degree {
        self.body.min_degree()
    }
}

fn same_order(f: &TruncatedSeries, g: &TruncatedSeries) -> Result<()> {
    if f.order != g.order {
        Err(Error::OrderMismatch(f.order, g.order))
    } else {
        Ok(())
    }
}

/// Truncate a polynomial to a series of the given order.
pub fn truncate(a: &Element, order: u32) -> Result<TruncatedSeries> {
    TruncatedSeries::new(a.clone(), order)
}

/// Lowest nonzero homogeneous stratum, the principal symbol in `gr`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbol {
    pub degree: u32,
    pub form: Element,
}

pub fn symbol(a: &Element) -> Result<Symbol> {
    a.strata()
        .into_iter()
        .next()
        .map(|(degree, form)| Symbol { degree, form })
        .ok_or(Error::ZeroElement)
}

/// Outcome of iterating a polynomial derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    /// Smallest `k` with `delta^k(a) = 0`.
    Nilpotent(u32),
    NotNilpotentUpTo(u32),
}

/// `min_degree(delta_hat^k(f))` for `k = 1..=K` at the working order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesProbe {
    pub order: u32,
    pub iterates: Vec<Degree>,
}

impl SeriesProbe {
    pub fn nonzero_count(&self) -> usize {
        self.iterates.iter().filter(|d| !d.is_infinite()).count()
    }

    /// True if every probed iterate is nonzero.
    pub fn all_nonzero(&self) -> bool {
        self.nonzero_count() == self.iterates.len()
    }
}

impl Presentation {
    pub fn series(&self, a: &Element, order: u32) -> Result<TruncatedSeries> {
        self.check_element(a)?;
        TruncatedSeries::new(a.clone(), order)
    }

    pub fn series_one(&self, order: u32) -> Result<TruncatedSeries> {
        TruncatedSeries::new(self.one(), order)
    }

    /// Product modulo degree above the common order.
    pub fn ts_mul(&self, f: &TruncatedSeries, g: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.ts_mul_with(f, g, Exec::default())
    }

    pub fn ts_mul_with(
        &self,
        f: &TruncatedSeries,
        g: &TruncatedSeries,
        exec: Exec,
    ) -> Result<TruncatedSeries> {
        same_order(f, g)?;
        self.check_element(&f.body)?;
        self.check_element(&g.body)?;
        let body = if self.is_filtered() {
            self.mul_elements(&f.body, &g.body, exec, Some(f.order))
        } else {
            self.mul_elements(&f.body, &g.body, exec, None).truncate(f.order)
        };
        Ok(TruncatedSeries {
            body,
            order: f.order,
        })
    }

    /// Extension of `tau_level` to series, stratum by stratum.
    pub fn hat_tau(&self, level: usize, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.hat_map(level, f, |a| self.tau_unchecked(level, a))
    }

    /// Extension of `delta_level` to series, stratum by stratum.
    pub fn hat_delta(&self, level: usize, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.hat_map(level, f, |a| self.delta_unchecked(level, a))
    }

    fn hat_map<F>(&self, level: usize, f: &TruncatedSeries, map: F) -> Result<TruncatedSeries>
    where
        F: Fn(&Element) -> Element + Sync + Send,
    {
        // Validates support and presentation on the whole body once.
        self.apply_tau(level, &f.body)?;
        let strata: Vec<Element> = f.body.strata().into_values().collect();
        let images = par::map(Exec::default(), &strata, |s| map(s).truncate(f.order));
        let mut body = self.zero();
        for img in &images {
            body = body.try_add(img)?;
        }
        Ok(TruncatedSeries {
            body,
            order: f.order,
        })
    }

    /// Two-sided inverse of a series whose constant term is a unit of `C`.
    ///
    /// Writes `f = c (1 + w)` with `c` the constant term and sums the
    /// geometric series `c^{-1} sum_{k <= N} (-w)^k`.
    pub fn ts_invert(&self, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_element(&f.body)?;
        let c = f.body.constant_term();
        let c_inv = c.inv().map_err(|_| {
            Error::NonUnit(format!(
                "constant term {} is not a unit of the base ring",
                c.to_expr()
            ))
        })?;
        let order = f.order;
        let normalized = TruncatedSeries::new(f.body.scale(&c_inv), order)?;
        let minus_w = self.series_one(order)?.try_sub(&normalized)?;

        let mut sum = self.series_one(order)?;
        let mut power = self.series_one(order)?;
        for _ in 0..order {
            power = self.ts_mul(&power, &minus_w)?;
            if power.is_zero() {
                break;
            }
            sum = sum.try_add(&power)?;
        }
        TruncatedSeries::new(sum.body.scale(&c_inv), order)
    }

    /// `sum_{k <= order} y_g^k`, the geometric series in one generator.
    pub fn geometric_series(&self, generator: usize, order: u32) -> Result<TruncatedSeries> {
        let mut body = self.zero();
        let mut power = self.one();
        let y = self.generator(generator);
        for _ in 0..=order {
            body = body.try_add(&power)?;
            power = self.nf_mul(&power, &y)?;
        }
        TruncatedSeries::new(body, order)
    }

    /// Smallest `k <= bound` with `delta_level^k(a) = 0`.
    pub fn poly_nilpotency_probe(&self, level: usize, a: &Element, bound: u32) -> Result<Nilpotency> {
        let mut current = a.clone();
        if current.is_zero() {
            return Ok(Nilpotency::Nilpotent(0));
        }
        for k in 1..=bound {
            current = self.apply_delta(level, &current)?;
            if current.is_zero() {
                return Ok(Nilpotency::Nilpotent(k));
            }
        }
        Ok(Nilpotency::NotNilpotentUpTo(bound))
    }

    /// Iterate `delta_hat_level` on `f`, recording the degree of each iterate.
    pub fn series_nilpotency_probe(
        &self,
        level: usize,
        f: &TruncatedSeries,
        bound: u32,
    ) -> Result<SeriesProbe> {
        let mut current = f.clone();
        let mut iterates = Vec::with_capacity(bound as usize);
        for _ in 0..bound {
            current = self.hat_delta(level, &current)?;
            iterates.push(current.min_degree());
        }
        Ok(SeriesProbe {
            order: f.order,
            iterates,
        })
    }
}

/// Degree strata of a series, keyed by degree.
pub fn strata(f: &TruncatedSeries) -> BTreeMap<u32, Element> {
    f.body.strata()
}
