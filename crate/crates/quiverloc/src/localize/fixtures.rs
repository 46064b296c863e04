//! Two bundled quiver-with-relations fixtures whose localizations are
//! matrix rings over well-known algebras.
//!
//! `weyl4`: four vertices in a chain with a second arrow alongside each
//! `e_m`; inverting the `e`-arrows yields `M_4(R_1)` with `R_1` the first
//! Weyl algebra.
//!
//! `subtree4`: the inverted arrows form a maximal subtree rather than a
//! chain; the localization is `M_4(k<x,y : x^2, yx>)`.

use super::{LocalizeError, MatrixModel};
use crate::exactlin::Field;
use crate::freealg::{parse_presentation, NcPoly, Presentation};
use crate::localize::verify::{
    relation_kill_checks, sigma_invertibility_check, RelationKillReport, SigmaInvertReport,
};
use crate::quiver::{Arrow, PathPoly, QPath, Quiver};
use crate::rewrite::complete_truncated;

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub quiver: Quiver,
    pub relations: Vec<(String, PathPoly)>,
    pub sigma: Vec<String>,
    pub target: Presentation,
    pub model: MatrixModel,
}

#[derive(Debug, Clone)]
pub struct FixtureReport {
    pub kills: Vec<RelationKillReport>,
    pub sigma: SigmaInvertReport,
}

impl FixtureReport {
    pub fn all_ok(&self) -> bool {
        self.kills.iter().all(|k| k.verdict.is_zero()) && self.sigma.all_ok()
    }
}

impl Fixture {
    /// Runs the kill-checks for every relation against the target's
    /// rewriting system, plus the invertibility checks.
    pub fn verify(
        &self,
        degree_bound: usize,
        rule_budget: usize,
    ) -> Result<FixtureReport, LocalizeError> {
        let rs = complete_truncated(&self.target, degree_bound, rule_budget)?;
        let kills = relation_kill_checks(&self.model, &self.relations, &rs)?;
        let sigma = sigma_invertibility_check(&self.model, &self.sigma, &rs)?;
        Ok(FixtureReport { kills, sigma })
    }
}

/// Names and one-line descriptions of the bundled fixtures, including the
/// structure-constant fixture consumed by the Tor calculator.
pub fn fixture_names() -> Vec<(&'static str, &'static str)> {
    vec![
        (
            "weyl4",
            "4-vertex chain quiver localizing to M_4 over the first Weyl algebra",
        ),
        (
            "subtree4",
            "4-vertex quiver inverted along a maximal subtree, localizing to M_4(k<x,y : x^2, yx>)",
        ),
        (
            "dual_numbers",
            "k[eps]/(eps^2) as a structure-constant algebra for the Tor obstruction",
        ),
    ]
}

fn arrow(name: &str, tail: usize, head: usize) -> Arrow {
    Arrow {
        name: name.into(),
        tail,
        head,
    }
}

/// Builds one of the localization fixtures by name. `dual_numbers` is a
/// structure-constant fixture and lives with the Tor calculator.
pub fn builtin_fixture(name: &str) -> Result<Fixture, LocalizeError> {
    let field = Field::Q;
    match name {
        "weyl4" => {
            let quiver = Quiver::new(
                4,
                vec![
                    arrow("e1", 1, 2),
                    arrow("x1", 1, 2),
                    arrow("e2", 2, 3),
                    arrow("y2", 2, 3),
                    arrow("e3", 3, 4),
                    arrow("x3", 3, 4),
                ],
            )?;
            let p = |names: &[&str]| -> Result<PathPoly, LocalizeError> {
                let arrows = names
                    .iter()
                    .map(|n| quiver.arrow_index(n))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(PathPoly::path(field, QPath::from_arrows(&quiver, arrows)?))
            };
            let r1 = p(&["x1", "e2", "e3"])?.sub(&p(&["e1", "e2", "x3"])?);
            let r2 = p(&["x1", "y2", "e3"])?
                .sub(&p(&["e1", "y2", "x3"])?)
                .sub(&p(&["e1", "e2", "e3"])?);
            let target = parse_presentation("k<x,y | x*y - y*x - 1>", field)?;
            let x = NcPoly::gen(field, 0);
            let y = NcPoly::gen(field, 1);
            let one = NcPoly::one(field);
            let model = MatrixModel::new(
                quiver.clone(),
                field,
                vec![one.clone(), x.clone(), one.clone(), y, one, x],
            );
            Ok(Fixture {
                name: "weyl4".into(),
                description: fixture_names()[0].1.into(),
                quiver,
                relations: vec![("r1".into(), r1), ("r2".into(), r2)],
                sigma: vec!["e1".into(), "e2".into(), "e3".into()],
                target,
                model,
            })
        }
        "subtree4" => {
            let quiver = Quiver::new(
                4,
                vec![
                    arrow("e1", 1, 3),
                    arrow("x1", 1, 3),
                    arrow("e2", 2, 3),
                    arrow("y2", 2, 3),
                    arrow("e3", 3, 4),
                    arrow("x3", 3, 4),
                ],
            )?;
            let p = |names: &[&str]| -> Result<PathPoly, LocalizeError> {
                let arrows = names
                    .iter()
                    .map(|n| quiver.arrow_index(n))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(PathPoly::path(field, QPath::from_arrows(&quiver, arrows)?))
            };
            let r1 = p(&["e1", "x3"])?.sub(&p(&["x1", "e3"])?);
            let r2 = p(&["x1", "x3"])?;
            let r3 = p(&["y2", "x3"])?;
            let target = parse_presentation("k<x,y | x*x, y*x>", field)?;
            let x = NcPoly::gen(field, 0);
            let y = NcPoly::gen(field, 1);
            let one = NcPoly::one(field);
            let model = MatrixModel::new(
                quiver.clone(),
                field,
                vec![one.clone(), x.clone(), one.clone(), y, one, x],
            );
            Ok(Fixture {
                name: "subtree4".into(),
                description: fixture_names()[1].1.into(),
                quiver,
                relations: vec![("r1".into(), r1), ("r2".into(), r2), ("r3".into(), r3)],
                sigma: vec!["e1".into(), "e2".into(), "e3".into()],
                target,
                model,
            })
        }
        other => Err(LocalizeError::UnknownFixture(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Word;
    use crate::rewrite::Provenance;

    #[test]
    fn weyl4_relations_die_in_the_matrix_model() {
        let f = builtin_fixture("weyl4").unwrap();
        let report = f.verify(6, 10_000).unwrap();
        assert!(report.all_ok());
        assert_eq!(report.kills.len(), 2);
        // relation 1 cancels before rewriting: x*1*1 - 1*1*x at (1,4)
        assert_eq!(report.kills[0].entry, (1, 4));
        assert!(report.kills[0].raw.is_zero());
        // relation 2 reduces from x*y - y*x - 1 at (1,4)
        let raw = &report.kills[1].raw;
        assert_eq!(report.kills[1].entry, (1, 4));
        assert_eq!(raw.num_terms(), 3);
        assert!(!raw.coeff(&Word(vec![0, 1])).is_zero());
        assert!(report.kills[1].verdict.is_zero());
        assert_eq!(report.kills[1].verdict.provenance(), Provenance::Certified);
    }

    #[test]
    fn subtree4_relations_die_in_the_matrix_model() {
        let f = builtin_fixture("subtree4").unwrap();
        let report = f.verify(6, 10_000).unwrap();
        assert!(report.all_ok());
        assert_eq!(report.kills.len(), 3);
        // y2*x3 lands at entry (2,4) as y*x before rewriting
        assert_eq!(report.kills[2].entry, (2, 4));
        assert_eq!(report.kills[2].raw.num_terms(), 1);
        assert!(!report.kills[2].raw.coeff(&Word(vec![1, 0])).is_zero());
        // the inverted arrows reach vertex 4 through the subtree
        assert_eq!(report.sigma.composite_ok, Some(true));
    }

    #[test]
    fn unknown_fixture_is_an_error() {
        assert!(matches!(
            builtin_fixture("nope"),
            Err(LocalizeError::UnknownFixture(_))
        ));
    }
}
