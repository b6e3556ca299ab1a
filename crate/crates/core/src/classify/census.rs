//! Symmetric subalgebras of the complex exceptional algebras, with dimensions.

use super::labels::{complex_type_dim, label_dims};
use crate::rootsys::TypeLabel;
use crate::satake::SatakeDb;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, Serialize)]
pub struct CensusEntry {
    pub subalgebra: String,
    pub dim: usize,
    /// Real form whose maximal compact subalgebra complexifies to `subalgebra`.
    pub real_form: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetricPairCensus {
    pub entries: BTreeMap<String, Vec<CensusEntry>>,
}

impl SymmetricPairCensus {
    pub fn builtin() -> Self {
        let mut entries: BTreeMap<String, Vec<CensusEntry>> = BTreeMap::new();
        for f in super::table_lines("census") {
            entries.entry(f[0].clone()).or_default().push(CensusEntry {
                subalgebra: f[1].clone(),
                dim: f[2].parse().expect("census dimension"),
                real_form: f[3].clone(),
            });
        }
        SymmetricPairCensus { entries }
    }

    pub fn dims(&self, algebra: &str) -> Vec<usize> {
        self.entries
            .get(algebra)
            .map(|v| v.iter().map(|e| e.dim).collect())
            .unwrap_or_default()
    }

    /// Problems found by the self-checks; empty when consistent.
    ///
    /// * the stated dimension is the sum of the summand dimensions;
    /// * it equals the maximal compact dimension of the named real form;
    /// * the named forms are exactly the noncompact forms in the Satake dataset.
    pub fn self_check(&self, db: &SatakeDb) -> Vec<String> {
        let mut problems = Vec::new();
        for (alg, list) in &self.entries {
            for e in list {
                match complex_type_dim(&e.subalgebra) {
                    Ok(x) if x == e.dim => {}
                    Ok(x) => problems.push(format!("{alg} {}: summands give {x}, stated {}", e.subalgebra, e.dim)),
                    Err(m) => problems.push(m),
                }
                match label_dims(&e.real_form) {
                    Ok(x) if x.compact == e.dim => {}
                    Ok(x) => problems.push(format!("{}: maximal compact {}, stated {}", e.real_form, x.compact, e.dim)),
                    Err(m) => problems.push(m),
                }
            }
            let t: TypeLabel = match alg.parse() {
                Ok(t) => t,
                Err(_) => {
                    problems.push(format!("bad type {alg}"));
                    continue;
                }
            };
            let mut from_db: Vec<String> = db
                .diagrams(t)
                .map(|v| {
                    v.into_iter()
                        .filter(|d| !d.is_compact())
                        .map(|d| d.real_form_name)
                        .collect()
                })
                .unwrap_or_default();
            let mut listed: Vec<String> = list.iter().map(|e| e.real_form.clone()).collect();
            from_db.sort();
            listed.sort();
            if from_db != listed {
                problems.push(format!("{alg}: census {listed:?} vs Satake data {from_db:?}"));
            }
        }
        problems
    }
}
