//! Consistency and hypothesis checks for presentations.
//!
//! [`check_well_defined`] verifies that each `(tau_l, delta_l)` respects the
//! commutation relations of the lower ring, so the generator rules extend to
//! a ring endomorphism and a left `tau_l`-derivation of `R_{l-1}`.
//!
//! [`check_setup`] verifies the filtration hypotheses at
//! `I_{l-1} = m + <y_1, .., y_{l-1}>`:
//!
//! * `tau_l(I) ⊆ I`
//! * `delta_l(R_{l-1}) ⊆ I`
//! * `delta_l(I) ⊆ I^2`
//!
//! Membership in `I^d` is decided by filtration degree (every monomial of
//! degree `>= d`). Because both maps act trivially on `C` and are determined by
//! the generator rules through multiplicativity and Leibniz, the conditions
//! reduce to degree bounds on `delta_l(y_j)`. Levels are certified in order; a
//! level is only examined once every lower level passed.

use std::fmt;

use crate::element::Element;
use crate::presentation::Presentation;
use crate::scalar::Degree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Clause {
    /// `tau_l` preserves the relations of `R_{l-1}`.
    TauRespectsRelations,
    /// `delta_l` preserves the relations of `R_{l-1}`.
    DeltaRespectsRelations,
    /// `tau_l(I) ⊆ I` with unit scalars.
    TauPreservesIdeal,
    /// `delta_l(R_{l-1}) ⊆ I`.
    DeltaIntoIdeal,
    /// `delta_l(I) ⊆ I^2`.
    DeltaIdealSquare,
}

impl Clause {
    pub fn key(self) -> &'static str {
        match self {
            Clause::TauRespectsRelations => "tau_relations",
            Clause::DeltaRespectsRelations => "delta_relations",
            Clause::TauPreservesIdeal => "tau_I_into_I",
            Clause::DeltaIntoIdeal => "delta_R_into_I",
            Clause::DeltaIdealSquare => "delta_I_into_I2",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Not examined because a lower level failed.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub clause: Clause,
    /// Name of the generator whose skew derivation is examined.
    pub level: String,
    pub status: Status,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| i.status == Status::Fail)
    }

    pub fn find(&self, clause: Clause, level: &str) -> Option<&CheckItem> {
        self.items
            .iter()
            .find(|i| i.clause == clause && i.level == level)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }

    /// One `key=value` line per item, frozen format.
    pub fn render_kv(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            out.push_str(&format!(
                "check.{}.{}={}",
                item.clause.key(),
                item.level,
                item.status
            ));
            if let Some(w) = &item.witness {
                out.push_str(&format!(" witness=\"{w}\""));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "check.result={}\n",
            if self.passed() { "pass" } else { "fail" }
        ));
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            out.push_str(&format!(
                "[{:^7}] {:<16} level {}",
                item.status.to_string(),
                item.clause.key(),
                item.level
            ));
            if let Some(w) = &item.witness {
                out.push_str(&format!(": {w}"));
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        out.push_str(&if failed == 0 {
            format!("all {} checks passed\n", self.items.len())
        } else {
            format!("{failed} of {} checks failed\n", self.items.len())
        });
        out
    }
}

fn item(clause: Clause, level: &str, failure: Option<String>) -> CheckItem {
    CheckItem {
        clause,
        level: level.to_string(),
        status: if failure.is_some() { Status::Fail } else { Status::Pass },
        witness: failure,
    }
}

/// Check that every level's rules respect the relations
/// `y_a y_b = tau_a(y_b) y_b y_a + delta_a(y_b)` of the lower ring.
pub fn check_well_defined(p: &Presentation) -> CheckReport {
    let mut report = CheckReport::default();
    for l in 0..p.nvars() {
        let level = p.name(l);
        let mut tau_fail = None;
        let mut delta_fail = None;
        'pairs: for a in 0..l {
            for b in 0..a {
                let (tau_w, delta_w) = relation_defects(p, l, a, b);
                if tau_fail.is_none() {
                    tau_fail = tau_w;
                }
                if delta_fail.is_none() {
                    delta_fail = delta_w;
                }
                if tau_fail.is_some() && delta_fail.is_some() {
                    break 'pairs;
                }
            }
        }
        report.items.push(item(Clause::TauRespectsRelations, level, tau_fail));
        report.items.push(item(Clause::DeltaRespectsRelations, level, delta_fail));
    }
    report
}

/// Apply `tau_l` and `delta_l` to both sides of the relation for `y_a y_b`.
fn relation_defects(
    p: &Presentation,
    l: usize,
    a: usize,
    b: usize,
) -> (Option<String>, Option<String>) {
    let ya = p.generator(a);
    let yb = p.generator(b);
    let rhs = {
        let swapped = p.nf_mul(&yb, &ya).expect("same algebra");
        swapped
            .scale_rational(p.tau_scalar(a, b))
            .try_add(p.delta_rule(a, b))
            .expect("same algebra")
    };
    let sa = p.tau_scalar(l, a);
    let sb = p.tau_scalar(l, b);
    let name = |g: usize| p.name(g);

    // tau(y_a y_b) = tau(y_a) tau(y_b) = sa sb (y_a y_b)
    let tau_lhs = rhs.scale_rational(&(sa * sb));
    let tau_rhs = p.apply_tau(l, &rhs).expect("supported below level");
    let tau_fail = (tau_lhs != tau_rhs).then(|| {
        format!(
            "tau[{}] on {}*{}: {} != {}",
            name(l),
            name(a),
            name(b),
            crate::parser::print(&tau_lhs, p),
            crate::parser::print(&tau_rhs, p)
        )
    });

    // delta(y_a y_b) = tau(y_a) delta(y_b) + delta(y_a) y_b
    let d_a = p.delta_rule(l, a);
    let d_b = p.delta_rule(l, b);
    let delta_lhs = p
        .nf_mul(&ya, d_b)
        .expect("same algebra")
        .scale_rational(sa)
        .try_add(&p.nf_mul(d_a, &yb).expect("same algebra"))
        .expect("same algebra");
    let delta_rhs = p.apply_delta(l, &rhs).expect("supported below level");
    let delta_fail = (delta_lhs != delta_rhs).then(|| {
        format!(
            "delta[{}] on {}*{}: {} != {}",
            name(l),
            name(a),
            name(b),
            crate::parser::print(&delta_lhs, p),
            crate::parser::print(&delta_rhs, p)
        )
    });
    (tau_fail, delta_fail)
}

fn degree_witness(p: &Presentation, l: usize, j: usize, d: &Element, need: u32) -> Option<String> {
    match d.min_degree() {
        Degree::Finite(k) if k < need => Some(format!(
            "delta[{}]({}) has degree {k}",
            p.name(l),
            p.name(j)
        )),
        _ => None,
    }
}

/// Check the filtration hypotheses level by level.
pub fn check_setup(p: &Presentation) -> CheckReport {
    let mut report = CheckReport::default();
    let mut lower_ok = true;
    let clauses = [
        Clause::TauPreservesIdeal,
        Clause::DeltaIntoIdeal,
        Clause::DeltaIdealSquare,
    ];
    for l in 0..p.nvars() {
        let level = p.name(l);
        if !lower_ok {
            for clause in clauses {
                report.items.push(CheckItem {
                    clause,
                    level: level.to_string(),
                    status: Status::Skipped,
                    witness: None,
                });
            }
            continue;
        }
        // tau_l(y_j) = s y_j with s a unit stays in I; tau fixes m pointwise.
        let tau_fail = (0..l).find(|&j| p.tau_scalar(l, j).is_zero()).map(|j| {
            format!("tau[{}]({}) is not a unit multiple", level, p.name(j))
        });
        // delta_l kills C, so delta_l(R) ⊆ I reduces to delta_l(y_j) ∈ I.
        let into_fail = (0..l).find_map(|j| degree_witness(p, l, j, p.delta_rule(l, j), 1));
        // delta_l(t) = 0 covers the m-part; the generators need degree >= 2.
        let square_fail = (0..l).find_map(|j| degree_witness(p, l, j, p.delta_rule(l, j), 2));

        lower_ok = tau_fail.is_none() && into_fail.is_none() && square_fail.is_none();
        report.items.push(item(Clause::TauPreservesIdeal, level, tau_fail));
        report.items.push(item(Clause::DeltaIntoIdeal, level, into_fail));
        report.items.push(item(Clause::DeltaIdealSquare, level, square_fail));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{BaseRingKind, Rational};

    fn two_gens() -> crate::presentation::PresentationBuilder {
        Presentation::builder(BaseRingKind::Field, vec!["y1".into(), "y2".into()])
    }

    #[test]
    fn unit_derivation_fails_the_ideal_clause() {
        let p = two_gens().delta_expr(1, 0, "1").build().unwrap();
        assert!(check_well_defined(&p).passed());
        let report = check_setup(&p);
        assert!(!report.passed());
        let item = report.find(Clause::DeltaIntoIdeal, "y2").unwrap();
        assert_eq!(item.status, Status::Fail);
        assert_eq!(item.witness.as_deref(), Some("delta[y2](y1) has degree 0"));
        assert!(report.render_kv().contains(
            "check.delta_R_into_I.y2=fail witness=\"delta[y2](y1) has degree 0\""
        ));
    }

    #[test]
    fn degree_one_derivation_passes_first_clause_only() {
        let p = Presentation::builder(
            BaseRingKind::Field,
            vec!["a".into(), "b".into(), "c".into()],
        )
        .delta_expr(2, 0, "b")
        .build()
        .unwrap();
        let report = check_setup(&p);
        assert_eq!(report.find(Clause::DeltaIntoIdeal, "c").unwrap().status, Status::Pass);
        assert_eq!(report.find(Clause::DeltaIdealSquare, "c").unwrap().status, Status::Fail);
    }

    #[test]
    fn failures_skip_higher_levels() {
        let p = Presentation::builder(
            BaseRingKind::Field,
            vec!["a".into(), "b".into(), "c".into()],
        )
        .delta_expr(1, 0, "1")
        .build()
        .unwrap();
        let report = check_setup(&p);
        assert_eq!(report.find(Clause::DeltaIntoIdeal, "c").unwrap().status, Status::Skipped);
    }

    #[test]
    fn inconsistent_tau_is_detected() {
        // b a = a b + a^2 forces tau_c(a)^2 = tau_c(a) tau_c(b) scalars.
        let p = Presentation::builder(
            BaseRingKind::Field,
            vec!["a".into(), "b".into(), "c".into()],
        )
        .delta_expr(1, 0, "a^2")
        .tau(2, 0, Rational::from(2))
        .tau(2, 1, Rational::from(3))
        .build()
        .unwrap();
        let report = check_well_defined(&p);
        assert_eq!(
            report.find(Clause::TauRespectsRelations, "c").unwrap().status,
            Status::Fail
        );
    }

    #[test]
    fn inconsistent_delta_is_detected() {
        // commuting a, b but delta_c(a) = b, delta_c(b) = a with tau = 1 on a and -1 on b
        let p = Presentation::builder(
            BaseRingKind::Field,
            vec!["a".into(), "b".into(), "c".into()],
        )
        .tau(2, 1, Rational::from(-1))
        .delta_expr(2, 0, "a")
        .build()
        .unwrap();
        let report = check_well_defined(&p);
        // delta(ba) = tau(b)delta(a) + delta(b)a = -b a, delta(ab) = tau(a)delta(b)+delta(a)b = a b
        assert_eq!(
            report.find(Clause::DeltaRespectsRelations, "c").unwrap().status,
            Status::Fail
        );
    }
}
