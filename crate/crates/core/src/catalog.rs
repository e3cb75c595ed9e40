//! Built-in families: multiparameter quantum matrices and Horton's `K_n`.
//!
//! Catalog algebras are named on the command line with a small spec syntax:
//!
//! ```text
//! qmat2                                  defaults, n = 2
//! qmat(3, lambda=2, p=[3, 1/2, 5])       p lists p_ij for i < j, row-major
//! kn2                                    defaults, n = 2
//! kn(2, P=[2, 5], Q=[3, 7], Gamma=[1])   Gamma lists gamma_ij for i < j
//! symplectic(2, P=[..], Q=[..], Gamma=[..])
//! euclidean(2, P=[..], Q=[..], Gamma=[..])
//! ```
//!
//! Every form also accepts `base=central-series:<T>` to build the algebra
//! over `k[[t]]/t^{T+1}` instead of `k`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::presentation::{Presentation, RuleSource};
use crate::scalar::{BaseCoeff, BaseRingKind, Rational};

/// `O_{lambda,p}(M_n(k))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumMatrixParams {
    pub n: usize,
    pub lambda: Rational,
    /// Full `n x n` matrix, `p[i][j]` 0-based.
    pub p: Vec<Vec<Rational>>,
}

impl QuantumMatrixParams {
    /// Build from the strictly upper triangle (row-major), completing the
    /// matrix by `p_ii = 1` and `p_ji = p_ij^{-1}`.
    pub fn from_upper(n: usize, lambda: Rational, upper: &[Rational]) -> Result<Self> {
        Ok(QuantumMatrixParams {
            n,
            lambda,
            p: antisymmetric_from_upper(n, upper, "p")?,
        })
    }

    /// `lambda = 2` and fixed generic-looking `p_ij`; `n = 2` gives `p_12 = 3`.
    pub fn defaults(n: usize) -> Self {
        let upper = default_upper(n);
        Self::from_upper(n, Rational::from(2), &upper).expect("defaults are valid")
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n == 0 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        if self.lambda.is_zero() || self.lambda.is_one() {
            return Err(Error::InvalidParams("lambda must be nonzero and different from 1".into()));
        }
        validate_antisymmetric(&self.p, n, "p")
    }

    pub fn generator_name(&self, i: usize, j: usize) -> String {
        if self.n <= 9 {
            format!("y{}{}", i + 1, j + 1)
        } else {
            format!("y{}_{}", i + 1, j + 1)
        }
    }
}

/// Horton's `K^{P,Q}_{n,Gamma}(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HortonParams {
    pub n: usize,
    pub p: Vec<Rational>,
    pub q: Vec<Rational>,
    /// Full `n x n` matrix, `gamma[i][j]` 0-based.
    pub gamma: Vec<Vec<Rational>>,
}

impl HortonParams {
    pub fn from_upper(n: usize, p: Vec<Rational>, q: Vec<Rational>, gamma_upper: &[Rational]) -> Result<Self> {
        Ok(HortonParams {
            n,
            p,
            q,
            gamma: antisymmetric_from_upper(n, gamma_upper, "Gamma")?,
        })
    }

    /// `n = 2` gives `P = (2, 5)`, `Q = (3, 7)`, `gamma_12 = 1`.
    pub fn defaults(n: usize) -> Self {
        const P: [i64; 6] = [2, 5, 11, 13, 23, 29];
        const Q: [i64; 6] = [3, 7, 17, 19, 31, 37];
        let gamma_upper = cycle(&[(1, 1), (2, 1), (1, 3), (5, 1), (1, 2), (3, 1)], n * (n - 1) / 2);
        Self::from_upper(
            n,
            (0..n).map(|i| Rational::from(P[i % P.len()] + 40 * (i / P.len()) as i64)).collect(),
            (0..n).map(|i| Rational::from(Q[i % Q.len()] + 40 * (i / Q.len()) as i64)).collect(),
            &gamma_upper,
        )
        .expect("defaults are valid")
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n == 0 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        if self.p.len() != n || self.q.len() != n {
            return Err(Error::InvalidParams(format!("P and Q must have {n} entries")));
        }
        for i in 0..n {
            if self.p[i].is_zero() || self.q[i].is_zero() {
                return Err(Error::InvalidParams(format!("p_{0} and q_{0} must be nonzero", i + 1)));
            }
            if self.p[i] == self.q[i] {
                return Err(Error::InvalidParams(format!("p_{0} must differ from q_{0}", i + 1)));
            }
        }
        validate_antisymmetric(&self.gamma, n, "Gamma")
    }

    fn x(i: usize) -> usize {
        2 * i
    }

    fn y(i: usize) -> usize {
        2 * i + 1
    }
}

fn cycle(values: &[(i64, i64)], count: usize) -> Vec<Rational> {
    (0..count)
        .map(|k| {
            let (a, b) = values[k % values.len()];
            Rational::new(a, b)
        })
        .collect()
}

fn default_upper(n: usize) -> Vec<Rational> {
    cycle(&[(3, 1), (1, 2), (5, 1), (2, 7), (1, 1), (4, 3)], n * (n.max(1) - 1) / 2)
}

#[allow(clippy::needless_range_loop)]
fn antisymmetric_from_upper(n: usize, upper: &[Rational], what: &str) -> Result<Vec<Vec<Rational>>> {
    let needed = n * n.saturating_sub(1) / 2;
    if upper.len() != needed {
        return Err(Error::InvalidParams(format!(
            "{what} needs {needed} upper-triangular entries, got {}",
            upper.len()
        )));
    }
    let mut m = vec![vec![Rational::one(); n]; n];
    let mut it = upper.iter();
    for i in 0..n {
        for j in i + 1..n {
            let v = it.next().expect("length checked").clone();
            let inv = v
                .recip()
                .ok_or_else(|| Error::InvalidParams(format!("{what}_{}{} must be nonzero", i + 1, j + 1)))?;
            m[i][j] = v;
            m[j][i] = inv;
        }
    }
    Ok(m)
}

#[allow(clippy::needless_range_loop)]
fn validate_antisymmetric(m: &[Vec<Rational>], n: usize, what: &str) -> Result<()> {
    if m.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParams(format!("{what} must be {n}x{n}")));
    }
    for i in 0..n {
        if !m[i][i].is_one() {
            return Err(Error::InvalidParams(format!("{what}_{0}{0} must be 1", i + 1)));
        }
        for j in 0..n {
            if m[i][j].is_zero() {
                return Err(Error::InvalidParams(format!("{what}_{}{} must be nonzero", i + 1, j + 1)));
            }
            if &m[i][j] * &m[j][i] != Rational::one() {
                return Err(Error::InvalidParams(format!(
                    "{what} must be multiplicatively antisymmetric at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// Quantum matrices with generators `y11, y12, .., ynn` in row-major order.
pub fn quantum_matrices(params: &QuantumMatrixParams) -> Result<Presentation> {
    quantum_matrices_over(params, BaseRingKind::Field)
}

pub fn quantum_matrices_over(params: &QuantumMatrixParams, base: BaseRingKind) -> Result<Presentation> {
    params.validate()?;
    let n = params.n;
    let idx = |i: usize, j: usize| i * n + j;
    let names = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| params.generator_name(i, j))
        .collect();
    let p = &params.p;
    let lambda = &params.lambda;
    let mut b = Presentation::builder(base, names);
    for l in 0..n {
        for m in 0..n {
            for i in 0..=l {
                for j in 0..n {
                    if idx(i, j) >= idx(l, m) {
                        continue;
                    }
                    let pp = &p[l][i] * &p[j][m];
                    // (i, j) precedes (l, m): either m > j, or i < l with m <= j.
                    let tau = if m > j { pp } else { lambda * &pp };
                    b = b.tau(idx(l, m), idx(i, j), tau);
                    if l > i && m > j {
                        let c = &(lambda - &Rational::one()) * &p[l][i];
                        b = b.delta(
                            idx(l, m),
                            idx(i, j),
                            RuleSource::Words(vec![(BaseCoeff::scalar(base, c), vec![idx(i, m), idx(l, j)])]),
                        );
                    }
                }
            }
        }
    }
    b.build()
}

/// Horton's algebra with generators `x1, y1, .., xn, yn` in that order.
pub fn horton_kn(params: &HortonParams) -> Result<Presentation> {
    horton_kn_over(params, BaseRingKind::Field)
}

pub fn horton_kn_over(params: &HortonParams, base: BaseRingKind) -> Result<Presentation> {
    params.validate()?;
    let n = params.n;
    let names = (1..=n)
        .flat_map(|i| [format!("x{i}"), format!("y{i}")])
        .collect();
    let (p, q, g) = (&params.p, &params.q, &params.gamma);
    let inv = |r: &Rational| r.recip().expect("validated nonzero");
    let x = HortonParams::x;
    let y = HortonParams::y;
    let mut b = Presentation::builder(base, names);
    for i in 0..n {
        for j in 0..i {
            // sigma_i on x_i's level
            b = b.tau(x(i), x(j), &(&inv(&q[j]) * &p[i]) * &g[i][j]);
            b = b.tau(x(i), y(j), &q[j] * &g[j][i]);
            // tau_i on y_i's level
            b = b.tau(y(i), x(j), &inv(&p[i]) * &g[j][i]);
            b = b.tau(y(i), y(j), g[i][j].clone());
        }
        b = b.tau(y(i), x(i), inv(&q[i]));
        if i > 0 {
            // delta_i(x_i) = -q_i^{-1} sum_{l<i} (q_l - p_l) y_l x_l, written out of order.
            let words = (0..i)
                .map(|l| {
                    let c = -(&inv(&q[i]) * &(&q[l] - &p[l]));
                    (BaseCoeff::scalar(base, c), vec![y(l), x(l)])
                })
                .collect();
            b = b.delta(y(i), x(i), RuleSource::Words(words));
        }
    }
    b.build()
}

/// Named specialisations of `K_n`. Their parameter values are not fixed here;
/// callers supply `P`, `Q` and `Gamma` explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HortonPreset {
    /// Coordinate ring of quantum symplectic space.
    QuantumSymplectic,
    /// Coordinate ring of quantum Euclidean `2n`-space.
    QuantumEuclidean,
}

impl HortonPreset {
    pub fn name(self) -> &'static str {
        match self {
            HortonPreset::QuantumSymplectic => "symplectic",
            HortonPreset::QuantumEuclidean => "euclidean",
        }
    }

    pub fn build(self, params: &HortonParams, base: BaseRingKind) -> Result<Presentation> {
        horton_kn_over(params, base)
    }
}

#[derive(Debug)]
struct CallSpec {
    name: String,
    n: Option<usize>,
    args: BTreeMap<String, Vec<Rational>>,
    base: BaseRingKind,
}

fn parse_call(spec: &str) -> Result<CallSpec> {
    let spec = spec.trim();
    let bad = |msg: &str| Error::Config(format!("bad algebra spec {spec:?}: {msg}"));
    let Some(open) = spec.find('(') else {
        // short form like qmat2 / kn3
        let split = spec.find(|c: char| c.is_ascii_digit()).ok_or_else(|| bad("missing size"))?;
        let n = spec[split..].parse().map_err(|_| bad("invalid size"))?;
        return Ok(CallSpec {
            name: spec[..split].to_string(),
            n: Some(n),
            args: BTreeMap::new(),
            base: BaseRingKind::Field,
        });
    };
    let inner = spec[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| bad("missing ')'"))?;
    let mut parts = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&inner[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&inner[start..]);
    let mut call = CallSpec {
        name: spec[..open].trim().to_string(),
        n: None,
        args: BTreeMap::new(),
        base: BaseRingKind::Field,
    };
    for (k, part) in parts.into_iter().map(str::trim).enumerate() {
        if part.is_empty() {
            continue;
        }
        match part.split_once('=') {
            None if k == 0 => call.n = Some(part.parse().map_err(|_| bad("invalid size"))?),
            None => return Err(bad("positional argument after the size")),
            Some((key, value)) => {
                let key = key.trim();
                let value = value.trim();
                if key == "base" {
                    call.base = value.parse()?;
                    continue;
                }
                let list = value
                    .strip_prefix('[')
                    .and_then(|v| v.strip_suffix(']'))
                    .unwrap_or(value);
                let values = list
                    .split(',')
                    .map(str::trim)
                    .filter(|v| !v.is_empty())
                    .map(str::parse)
                    .collect::<Result<Vec<Rational>>>()?;
                call.args.insert(key.to_string(), values);
            }
        }
    }
    Ok(call)
}

/// Build a catalog algebra from its spec string.
pub fn from_spec(spec: &str) -> Result<Presentation> {
    let call = parse_call(spec)?;
    let n = call
        .n
        .ok_or_else(|| Error::Config(format!("algebra spec {spec:?} is missing its size")))?;
    if n == 0 {
        return Err(Error::InvalidParams("n must be at least 1".into()));
    }
    let take = |key: &str| call.args.get(key).cloned();
    let known = |keys: &[&str]| -> Result<()> {
        match call.args.keys().find(|k| !keys.contains(&k.as_str())) {
            Some(k) => Err(Error::Config(format!("unknown parameter {k:?} in {spec:?}"))),
            None => Ok(()),
        }
    };
    match call.name.as_str() {
        "qmat" => {
            known(&["lambda", "p"])?;
            let mut params = QuantumMatrixParams::defaults(n);
            if let Some(l) = take("lambda") {
                params.lambda = single(l, "lambda")?;
            }
            if let Some(p) = take("p") {
                params.p = antisymmetric_from_upper(n, &p, "p")?;
            }
            quantum_matrices_over(&params, call.base)
        }
        "kn" | "k" => {
            known(&["P", "Q", "Gamma"])?;
            let mut params = HortonParams::defaults(n);
            if let Some(p) = take("P") {
                params.p = p;
            }
            if let Some(q) = take("Q") {
                params.q = q;
            }
            if let Some(g) = take("Gamma") {
                params.gamma = antisymmetric_from_upper(n, &g, "Gamma")?;
            }
            horton_kn_over(&params, call.base)
        }
        "symplectic" | "euclidean" => {
            known(&["P", "Q", "Gamma"])?;
            let preset = if call.name == "symplectic" {
                HortonPreset::QuantumSymplectic
            } else {
                HortonPreset::QuantumEuclidean
            };
            let missing = |k: &str| Error::Config(format!("{} requires {k}=[..]", preset.name()));
            let params = HortonParams::from_upper(
                n,
                take("P").ok_or_else(|| missing("P"))?,
                take("Q").ok_or_else(|| missing("Q"))?,
                &take("Gamma").ok_or_else(|| missing("Gamma"))?,
            )?;
            preset.build(&params, call.base)
        }
        other => Err(Error::Config(format!("unknown catalog algebra {other:?}"))),
    }
}

fn single(values: Vec<Rational>, what: &str) -> Result<Rational> {
    match <[Rational; 1]>::try_from(values) {
        Ok([v]) => Ok(v),
        Err(_) => Err(Error::Config(format!("{what} takes a single value"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::{check_setup, check_well_defined};
    use crate::element::Monomial;
    use crate::parser::{parse_element, print};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn qmat2_rules_match_the_displayed_formulas() {
        let p = quantum_matrices(&QuantumMatrixParams::defaults(2)).unwrap();
        assert_eq!(p.names(), ["y11", "y12", "y21", "y22"]);
        // l >= i and m > j: p_li p_jm
        assert_eq!(p.tau_scalar(1, 0), &q(3, 1)); // tau_12(y11) = p11 p12
        assert_eq!(p.tau_scalar(3, 0), &q(1, 1)); // tau_22(y11) = p21 p12
        // l > i and m <= j: lambda p_li p_jm
        assert_eq!(p.tau_scalar(2, 0), &q(2, 3)); // tau_21(y11) = lambda p21 p11
        assert_eq!(p.tau_scalar(3, 1), &q(2, 3)); // tau_22(y12) = lambda p21 p22
        assert_eq!(p.tau_scalar(2, 1), &q(2, 9)); // tau_21(y12) = lambda p21 p21
        assert_eq!(p.tau_scalar(3, 2), &q(3, 1)); // tau_22(y21) = p22 p12
        assert_eq!(print(p.delta_rule(3, 0), &p), "1/3*y12*y21");
        for (l, j) in [(1, 0), (2, 0), (2, 1), (3, 1), (3, 2)] {
            assert!(p.delta_rule(l, j).is_zero(), "delta[{l}][{j}]");
        }
    }

    #[test]
    fn qmat1_is_commutative_polynomials() {
        let p = quantum_matrices(&QuantumMatrixParams::defaults(1)).unwrap();
        assert_eq!(p.names(), ["y11"]);
        assert!(check_setup(&p).passed());
    }

    #[test]
    fn kn_rules() {
        let p = horton_kn(&HortonParams::defaults(2)).unwrap();
        assert_eq!(p.names(), ["x1", "y1", "x2", "y2"]);
        assert_eq!(p.tau_scalar(1, 0), &q(1, 3)); // tau_1(x1) = q1^-1
        assert_eq!(p.tau_scalar(3, 2), &q(1, 7)); // tau_2(x2) = q2^-1
        // delta_2(x2) = -q2^-1 (q1 - p1) y1 x1 = -1/7 * 1/3 x1 y1
        assert_eq!(print(p.delta_rule(3, 2), &p), "-1/21*x1*y1");
        let p1 = horton_kn(&HortonParams::defaults(1)).unwrap();
        assert_eq!(p1.tau_scalar(1, 0), &q(1, 3));
        assert!(p1.delta_rule(1, 0).is_zero());
    }

    #[test]
    fn tau_case_split_is_a_partition() {
        for n in 1..=4usize {
            for l in 0..n {
                for m in 0..n {
                    for i in 0..n {
                        for j in 0..n {
                            if (i, j) >= (l, m) {
                                continue;
                            }
                            let first = l >= i && m > j;
                            let second = l > i && m <= j;
                            assert!(first ^ second, "({i},{j}) < ({l},{m})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn catalog_algebras_pass_both_checkers() {
        let mut algebras = vec![];
        for n in 1..=3 {
            algebras.push(quantum_matrices(&QuantumMatrixParams::defaults(n)).unwrap());
            algebras.push(horton_kn(&HortonParams::defaults(n)).unwrap());
        }
        algebras.push(from_spec("qmat(2, lambda=-1/2, p=[1])").unwrap());
        algebras.push(from_spec("kn(2, P=[2,5], Q=[3,7], Gamma=[4/3])").unwrap());
        algebras.push(from_spec("qmat(2, base=central-series:6)").unwrap());
        for p in &algebras {
            let wd = check_well_defined(p);
            assert!(wd.passed(), "{:?}\n{}", p.names(), wd.render_text());
            let setup = check_setup(p);
            assert!(setup.passed(), "{:?}\n{}", p.names(), setup.render_text());
        }
    }

    #[test]
    fn spec_strings() {
        assert_eq!(from_spec("qmat2").unwrap(), quantum_matrices(&QuantumMatrixParams::defaults(2)).unwrap());
        assert_eq!(from_spec("qmat(2, lambda=2, p=[3])").unwrap(), from_spec("qmat2").unwrap());
        assert_eq!(from_spec("kn(2, P=[2,5], Q=[3,7], Gamma=[1])").unwrap(), from_spec("kn2").unwrap());
        assert!(matches!(from_spec("qmat(2, lambda=1)"), Err(Error::InvalidParams(_))));
        assert!(matches!(from_spec("kn(2, P=[3,5], Q=[3,7])"), Err(Error::InvalidParams(_))));
        assert!(from_spec("qmat(2, p=[3, 4])").is_err());
        assert!(from_spec("qmat(2, mu=3)").is_err());
        assert!(from_spec("nope3").is_err());
        assert!(from_spec("symplectic(2, P=[2,5])").is_err());
        assert!(from_spec("euclidean(2, P=[2,5], Q=[3,7], Gamma=[1])").is_ok());
        let cs = from_spec("kn(2, base=central-series:4)").unwrap();
        assert_eq!(cs.base(), BaseRingKind::CentralSeries(4));
    }

    #[test]
    fn params_validation() {
        let mut bad = QuantumMatrixParams::defaults(2);
        bad.p[1][0] = q(1, 1);
        assert!(matches!(quantum_matrices(&bad), Err(Error::InvalidParams(_))));
        let mut bad = HortonParams::defaults(2);
        bad.gamma[0][0] = q(2, 1);
        assert!(matches!(horton_kn(&bad), Err(Error::InvalidParams(_))));
        assert!(QuantumMatrixParams::from_upper(2, q(2, 1), &[q(0, 1)]).is_err());
    }

    #[test]
    fn y2_x2_in_k2() {
        let p = from_spec("kn2").unwrap();
        let prod = parse_element("y2*x2", &p).unwrap();
        assert_eq!(print(&prod, &p), "-1/21*x1*y1 + 1/7*x2*y2");
        let x2y2 = Monomial::from_exponents(vec![0, 0, 1, 1]);
        assert_eq!(prod.coeff(&x2y2).as_scalar(), Some(q(1, 7)));
    }
}
