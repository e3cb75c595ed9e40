//! Line-oriented series files.
//!
//! ```text
//! algebra = qmat2
//! order = 3
//! 1 ; 0 0 0 0
//! 1 ; 1 0 0 0
//! -1/2*t ; 0 1 1 0
//! ```
//!
//! The header gives the algebra reference (catalog spec or config path, kept
//! verbatim) and the truncation order. Each following line is one monomial:
//! its base-ring coefficient, `;`, then the exponent vector. Lines appear in
//! canonical monomial order. Blank lines and `#` comments are ignored on
//! input and never written.

use crate::completion::TruncatedSeries;
use crate::element::Monomial;
use crate::error::{Error, Result};
use crate::parser::parse_coeff;
use crate::presentation::Presentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesFile {
    pub algebra: String,
    pub series: TruncatedSeries,
}

pub fn write_series(algebra: &str, f: &TruncatedSeries) -> String {
    let mut out = format!("algebra = {algebra}\norder = {}\n", f.order());
    let mut terms: Vec<_> = f
        .body()
        .terms()
        .map(|(m, c)| (c.val().finite().unwrap_or(0) + m.total_degree(), m, c))
        .collect();
    terms.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(y.1)));
    for (_, m, c) in terms {
        let exps: Vec<String> = m.exponents().iter().map(u32::to_string).collect();
        out.push_str(&format!("{} ; {}\n", c.to_expr(), exps.join(" ")));
    }
    out
}

/// Read a series file; `p` must be the algebra the header refers to.
pub fn read_series(src: &str, p: &Presentation) -> Result<SeriesFile> {
    let mut algebra = None;
    let mut order = None;
    let mut body = p.zero();
    for (lineno, line) in src.lines().enumerate() {
        let line = line.trim();
        let err = |msg: String| Error::Config(format!("series file line {}: {msg}", lineno + 1));
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some((coeff, exps)) = line.split_once(';') {
            let exps = exps
                .split_whitespace()
                .map(|e| e.parse::<u32>().map_err(|_| err(format!("bad exponent {e:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if exps.len() != p.nvars() {
                return Err(err(format!("expected {} exponents, got {}", p.nvars(), exps.len())));
            }
            let c = parse_coeff(coeff.trim(), p)?;
            body.add_term(Monomial::from_exponents(exps), &c);
            continue;
        }
        match line.split_once('=') {
            Some((k, v)) if k.trim() == "algebra" => algebra = Some(v.trim().to_string()),
            Some((k, v)) if k.trim() == "order" => {
                order = Some(v.trim().parse::<u32>().map_err(|_| err(format!("bad order {v:?}")))?)
            }
            _ => return Err(err(format!("unrecognised line {line:?}"))),
        }
    }
    let algebra = algebra.ok_or_else(|| Error::Config("series file has no algebra header".into()))?;
    let order = order.ok_or_else(|| Error::Config("series file has no order header".into()))?;
    if body.max_degree().finite().is_some_and(|d| d > order) {
        return Err(Error::Config(format!("series file has terms above order {order}")));
    }
    Ok(SeriesFile {
        algebra,
        series: TruncatedSeries::new(body, order)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::from_spec;
    use crate::parser::parse_element;

    #[test]
    fn round_trip_is_bit_exact() {
        let p = from_spec("qmat(2, base=central-series:4)").unwrap();
        let a = parse_element("1 + y11 - 1/2*t*y12*y21 + (1 - t)*y22", &p).unwrap();
        let f = p.series(&a, 4).unwrap();
        let text = write_series("qmat(2, base=central-series:4)", &f);
        assert_eq!(
            text,
            "algebra = qmat(2, base=central-series:4)\norder = 4\n1 ; 0 0 0 0\n1 ; 1 0 0 0\n1 - t ; 0 0 0 1\n-1/2*t ; 0 1 1 0\n"
        );
        let back = read_series(&text, &p).unwrap();
        assert_eq!(back.series, f);
        assert_eq!(write_series(&back.algebra, &back.series), text);
    }

    #[test]
    fn zero_series_and_errors() {
        let p = from_spec("qmat2").unwrap();
        let f = p.series(&p.zero(), 3).unwrap();
        let text = write_series("qmat2", &f);
        assert_eq!(text, "algebra = qmat2\norder = 3\n");
        assert_eq!(read_series(&text, &p).unwrap().series, f);
        assert!(read_series("order = 3\n", &p).is_err());
        assert!(read_series("algebra = qmat2\norder = 3\n1 ; 0 0\n", &p).is_err());
        assert!(read_series("algebra = qmat2\norder = 1\n1 ; 2 0 0 0\n", &p).is_err());
        assert!(read_series("algebra = qmat2\nbogus\n", &p).is_err());
    }
}
