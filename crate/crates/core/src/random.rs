//! Seeded generators for property runs. A `(seed, stream, index)` triple
//! fully determines every sample, so parallel and sequential runs agree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::completion::TruncatedSeries;
use crate::element::{Element, Monomial};
use crate::presentation::Presentation;
use crate::scalar::{BaseCoeff, BaseRingKind, Rational};

pub type SampleRng = ChaCha8Rng;

/// Independent stream for sample `index` of property `stream`.
pub fn sample_rng(seed: u64, stream: u64, index: u64) -> SampleRng {
    let mixed = seed
        ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ index.wrapping_mul(0xD1B5_4A32_D192_ED03).rotate_left(17);
    ChaCha8Rng::seed_from_u64(mixed)
}

/// A coefficient among `±1, ±1/2, ±2`, times `t^k` (`k <= 1`) over `k[[t]]`.
pub fn coeff<R: Rng>(rng: &mut R, base: BaseRingKind) -> BaseCoeff {
    const CHOICES: [(i64, i64); 3] = [(1, 1), (1, 2), (2, 1)];
    let (n, d) = CHOICES[rng.random_range(0..CHOICES.len())];
    let sign = if rng.random_bool(0.5) { 1 } else { -1 };
    let exp = match base {
        BaseRingKind::Field => 0,
        BaseRingKind::CentralSeries(_) => u32::from(rng.random_bool(0.3)),
    };
    BaseCoeff::monomial(base, Rational::new(sign * n, d), exp)
}

/// Monomial of total degree exactly `degree` in generators `0..below`.
pub fn monomial_of_degree<R: Rng>(rng: &mut R, nvars: usize, below: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; nvars];
    if below > 0 {
        for _ in 0..degree {
            exps[rng.random_range(0..below)] += 1;
        }
    }
    Monomial::from_exponents(exps)
}

/// Up to `max_terms` random terms of degree `<= max_degree` in generators `0..below`.
pub fn element<R: Rng>(
    rng: &mut R,
    p: &Presentation,
    max_degree: u32,
    max_terms: usize,
    below: usize,
) -> Element {
    let below = below.min(p.nvars());
    let terms = rng.random_range(1..=max_terms);
    let mut out = p.zero();
    for _ in 0..terms {
        let degree = if below == 0 { 0 } else { rng.random_range(0..=max_degree) };
        let m = monomial_of_degree(rng, p.nvars(), below, degree);
        out = out
            .try_add(&Element::term(coeff(rng, p.base()), m))
            .expect("same algebra");
    }
    out
}

/// A nonzero random element.
pub fn nonzero_element<R: Rng>(
    rng: &mut R,
    p: &Presentation,
    max_degree: u32,
    max_terms: usize,
    below: usize,
) -> Element {
    loop {
        let e = element(rng, p, max_degree, max_terms, below);
        if !e.is_zero() {
            return e;
        }
    }
}

/// Sparse random series at `order`. With `unit`, the constant term is a
/// nonzero rational; otherwise it lies in the maximal ideal of `C`.
pub fn series<R: Rng>(
    rng: &mut R,
    p: &Presentation,
    order: u32,
    max_terms: usize,
    below: usize,
    unit: bool,
) -> TruncatedSeries {
    let mut body = element(rng, p, order, max_terms, below);
    let c0 = body.constant_term();
    body = body.try_sub(&p.constant(c0)).expect("same algebra");
    let one = Monomial::one(p.nvars());
    let constant = if unit {
        let mut c = coeff(rng, p.base());
        while c.val() != crate::scalar::Degree::Finite(0) {
            c = coeff(rng, p.base());
        }
        c
    } else {
        match p.base() {
            BaseRingKind::Field => BaseCoeff::zero(p.base()),
            BaseRingKind::CentralSeries(_) => {
                if rng.random_bool(0.5) {
                    BaseCoeff::monomial(p.base(), Rational::from(1 + rng.random_range(0..3i64)), 1)
                } else {
                    BaseCoeff::zero(p.base())
                }
            }
        }
    };
    body = body.try_add(&Element::term(constant, one)).expect("same algebra");
    p.series(&body, order).expect("order within base truncation")
}
