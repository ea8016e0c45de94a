//! The on-disk description of a complex.
//!
//! ```json
//! {
//!   "n": 1,
//!   "N": 2,
//!   "ring": "lambda-plus",
//!   "generators": [{"name": "x1", "degree": 1}, {"name": "x0", "degree": 0}],
//!   "differential": [{"from": "x0", "to": "x1", "monomial": "t"}]
//! }
//! ```

use serde::{Deserialize, Serialize};

use super::basis::{Generator, GradedBasis};
use super::pearl::{PearlComplex, RingMode};
use crate::rings::parse_laurent;
use crate::Result;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DifferentialEntry {
    pub from: String,
    pub to: String,
    pub monomial: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub n: i64,
    #[serde(rename = "N")]
    pub maslov: i64,
    pub ring: RingMode,
    pub generators: Vec<Generator>,
    pub differential: Vec<DifferentialEntry>,
}

pub fn complex_from_document(doc: &ComplexDocument) -> Result<PearlComplex> {
    let basis = GradedBasis::new(doc.generators.clone())?;
    let entries = doc
        .differential
        .iter()
        .map(|e| {
            parse_laurent(&e.monomial, -doc.maslov)
                .map(|elem| (e.from.clone(), e.to.clone(), elem))
        })
        .collect::<Result<Vec<_>>>()?;
    PearlComplex::new(basis, doc.n, doc.maslov, doc.ring, entries)
}

pub fn complex_to_document(c: &PearlComplex) -> ComplexDocument {
    let mut differential = Vec::new();
    for (from, _) in c.basis().iter() {
        for (to, _) in c.basis().iter() {
            let e = c.entry(to, from);
            if !e.is_zero() {
                differential.push(DifferentialEntry {
                    from: c.basis().name(from).to_string(),
                    to: c.basis().name(to).to_string(),
                    monomial: e.to_string(),
                });
            }
        }
    }
    ComplexDocument {
        n: c.dim_l(),
        maslov: c.maslov(),
        ring: c.ring_mode(),
        generators: c.basis().iter().map(|(_, g)| g.clone()).collect(),
        differential,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn document_round_trip() {
        let json = r#"{
            "n": 1, "N": 2, "ring": "lambda-plus",
            "generators": [{"name": "x1", "degree": 1}, {"name": "x0", "degree": 0}],
            "differential": [{"from": "x0", "to": "x1", "monomial": "t"}]
        }"#;
        let doc: ComplexDocument = serde_json::from_str(json).unwrap();
        let c = complex_from_document(&doc).unwrap();
        assert!(c.validate().is_valid());
        let doc2 = complex_to_document(&c);
        let c2 = complex_from_document(&doc2).unwrap();
        assert_eq!(c, c2);
    }
}
