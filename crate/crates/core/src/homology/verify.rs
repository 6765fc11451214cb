//! Checking relation suites against generator tables.

use serde::Serialize;

use crate::algebra::IntMatrix;
use crate::error::Result;
use crate::surface::{orientable_relations, relations_for, Relation, RelationFamily, Surface};

use super::table::GeneratorTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationStatus {
    Holds,
    Fails,
    /// Some letter has no image in the table.
    Skipped,
}

#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub relation: Relation,
    pub status: RelationStatus,
    /// `lhs - rhs` when the relation fails.
    pub defect: Option<IntMatrix>,
}

impl RelationCheck {
    pub fn family(&self) -> RelationFamily {
        self.relation.family
    }
}

/// Evaluates both sides of every relation of the table's surface.
pub fn verify_relations(table: &GeneratorTable) -> Result<Vec<RelationCheck>> {
    let rels = match table.surface {
        Surface::Orientable { genus } => orientable_relations(genus)?,
        Surface::Nonorientable { genus, boundary } => relations_for(genus, boundary)?,
        Surface::Piece { .. } => Vec::new(),
    };
    check_relations(table, rels)
}

pub fn check_relations(table: &GeneratorTable, rels: Vec<Relation>) -> Result<Vec<RelationCheck>> {
    rels.into_iter()
        .map(|relation| {
            if !(table.covers(&relation.lhs) && table.covers(&relation.rhs)) {
                return Ok(RelationCheck {
                    relation,
                    status: RelationStatus::Skipped,
                    defect: None,
                });
            }
            let lhs = table.eval(&relation.lhs)?;
            let rhs = table.eval(&relation.rhs)?;
            Ok(if lhs == rhs {
                RelationCheck {
                    relation,
                    status: RelationStatus::Holds,
                    defect: None,
                }
            } else {
                let defect = Some(&lhs - &rhs);
                RelationCheck {
                    relation,
                    status: RelationStatus::Fails,
                    defect,
                }
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{rep_table, RepName};

    #[test]
    fn psi_tables_satisfy_the_suite() {
        for (name, g) in [(RepName::Psi1, 5), (RepName::Psi2Prime, 6)] {
            let checks = verify_relations(&rep_table(name, g).unwrap()).unwrap();
            assert!(checks.iter().any(|c| c.status == RelationStatus::Holds));
            for c in &checks {
                match c.status {
                    RelationStatus::Holds => {}
                    RelationStatus::Skipped => {
                        // Only t_{ε_{g/2}} at even genus lacks an image.
                        assert!(c
                            .relation
                            .generators()
                            .any(|x| x == crate::surface::Generator::TEps(g / 2)));
                        assert_eq!(g % 2, 0);
                    }
                    RelationStatus::Fails => panic!("{name}: {}", c.relation),
                }
            }
        }
    }

    #[test]
    fn phi_suite() {
        let checks = verify_relations(&rep_table(RepName::Phi, 6).unwrap()).unwrap();
        assert!(checks.iter().all(|c| c.status == RelationStatus::Holds));
    }

    #[test]
    fn broken_table_reports_defect() {
        let mut t = rep_table(RepName::Psi1, 5).unwrap();
        let a1 = t
            .image(crate::surface::Generator::TDelta(1))
            .unwrap()
            .clone();
        t.insert(crate::surface::Generator::TDelta(3), a1).unwrap();
        let checks = verify_relations(&t).unwrap();
        let bad: Vec<_> = checks
            .iter()
            .filter(|c| c.status == RelationStatus::Fails)
            .collect();
        assert!(!bad.is_empty());
        assert!(bad
            .iter()
            .all(|c| c.defect.as_ref().is_some_and(|d| !d.is_zero())));
    }
}
