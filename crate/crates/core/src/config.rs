//! Presentation config files.
//!
//! ```toml
//! base = "field"                      # or "central-series:<T>"
//! generators = ["y11", "y12", "y21", "y22"]
//!
//! [tau.y22]                           # tau_{y22}(y11) = 1 * y11, ...
//! y11 = "1"
//! y12 = "2/3"
//!
//! [delta.y22]                         # delta_{y22}(y11) = ...
//! y11 = "1/3*y12*y21"
//! ```
//!
//! `tau` entries are rationals written as strings and default to `1`.
//! `delta` entries are expressions in the parser grammar over earlier
//! generators and default to `0`; they may be written in any order and are
//! normalised when the presentation is built.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::parser::print;
use crate::presentation::Presentation;
use crate::scalar::{BaseRingKind, Rational};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    base: String,
    generators: Vec<String>,
    #[serde(default)]
    tau: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    delta: BTreeMap<String, BTreeMap<String, String>>,
}

/// Parse a config file into a presentation.
pub fn from_toml(src: &str) -> Result<Presentation> {
    let raw: RawConfig = toml::from_str(src).map_err(|e| Error::Config(e.to_string()))?;
    let base: BaseRingKind = raw.base.parse()?;
    let index = |name: &str| {
        raw.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::Config(format!("unknown generator {name:?} in rule table")))
    };
    let mut builder = Presentation::builder(base, raw.generators.clone());
    for (level, entries) in &raw.tau {
        let l = index(level)?;
        for (on, value) in entries {
            let scalar: Rational = value.parse()?;
            builder = builder.tau(l, index(on)?, scalar);
        }
    }
    for (level, entries) in &raw.delta {
        let l = index(level)?;
        for (on, expr) in entries {
            builder = builder.delta_expr(l, index(on)?, expr.clone());
        }
    }
    builder.build()
}

/// Emit a config that [`from_toml`] reads back to an identical presentation.
/// Only non-default entries are written, in generator order.
pub fn to_toml(p: &Presentation) -> String {
    let mut out = String::new();
    out.push_str(&format!("base = \"{}\"\n", p.base()));
    let gens: Vec<String> = p.names().iter().map(|n| format!("\"{n}\"")).collect();
    out.push_str(&format!("generators = [{}]\n", gens.join(", ")));
    for l in 0..p.nvars() {
        let entries: Vec<String> = (0..l)
            .filter(|&j| !p.tau_scalar(l, j).is_one())
            .map(|j| format!("{} = \"{}\"", p.name(j), p.tau_scalar(l, j)))
            .collect();
        if !entries.is_empty() {
            out.push_str(&format!("\n[tau.{}]\n{}\n", p.name(l), entries.join("\n")));
        }
    }
    for l in 0..p.nvars() {
        let entries: Vec<String> = (0..l)
            .filter(|&j| !p.delta_rule(l, j).is_zero())
            .map(|j| format!("{} = \"{}\"", p.name(j), print(p.delta_rule(l, j), p)))
            .collect();
        if !entries.is_empty() {
            out.push_str(&format!("\n[delta.{}]\n{}\n", p.name(l), entries.join("\n")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::from_spec;
    use crate::check::{check_setup, Clause, Status};

    #[test]
    fn catalog_export_round_trips() {
        for spec in ["qmat2", "qmat3", "kn2", "kn3", "qmat(2, base=central-series:5)"] {
            let p = from_spec(spec).unwrap();
            let text = to_toml(&p);
            let back = from_toml(&text).unwrap();
            assert_eq!(back, p, "{spec}\n{text}");
            assert_eq!(to_toml(&back), text);
        }
    }

    #[test]
    fn qmat2_export_text() {
        let p = from_spec("qmat2").unwrap();
        let text = to_toml(&p);
        assert!(text.starts_with("base = \"field\"\ngenerators = [\"y11\", \"y12\", \"y21\", \"y22\"]\n"));
        assert!(text.contains("[delta.y22]\ny11 = \"1/3*y12*y21\"\n"));
    }

    #[test]
    fn custom_unit_derivation() {
        let src = r#"
            base = "field"
            generators = ["y1", "y2"]
            [delta.y2]
            y1 = "1"
        "#;
        let p = from_toml(src).unwrap();
        let report = check_setup(&p);
        assert_eq!(report.find(Clause::DeltaIntoIdeal, "y2").unwrap().status, Status::Fail);
    }

    #[test]
    fn out_of_order_rules_are_normalised() {
        let src = r#"
            base = "central-series:4"
            generators = ["a", "b", "c"]
            [tau.b]
            a = "1/2"
            [delta.c]
            a = "t*b*a"
        "#;
        let p = from_toml(src).unwrap();
        assert_eq!(print(p.delta_rule(2, 0), &p), "1/2*t*a*b");
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(from_toml("base = \"field\"").is_err());
        assert!(from_toml("base = \"ring\"\ngenerators = [\"a\"]").is_err());
        assert!(from_toml("base = \"field\"\ngenerators = [\"a\"]\n[tau.a]\nz = \"2\"").is_err());
        assert!(from_toml("base = \"field\"\ngenerators = [\"a\", \"b\"]\n[tau.b]\na = \"x\"").is_err());
        assert!(from_toml("base = \"field\"\ngenerators = [\"a\", \"b\"]\n[delta.a]\nb = \"1\"").is_err());
        assert!(from_toml("base = \"field\"\ngenerators = [\"a\"]\nextra = 1").is_err());
    }
}
