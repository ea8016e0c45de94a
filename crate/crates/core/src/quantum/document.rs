//! On-disk description of a quantum structure.
//!
//! ```json
//! {
//!   "n": 2, "N": 2, "C_M": 3,
//!   "lagrangian_basis": [{"name": "m", "degree": 0}, ...],
//!   "ambient_basis": [{"name": "h^0", "degree": 4}, ...],
//!   "product": [{"x": "a", "y": "b", "result": [{"gen": "m", "monomial": "1"}]}],
//!   "action": [{"a": "h^1", "x": "w", "result": [...]}],
//!   "inclusion": [{"x": "m", "result": [...]}]
//! }
//! ```

use serde::{Deserialize, Serialize};

use super::structure::{QClass, QuantumStructure};
use crate::complexes::{Generator, GradedBasis};
use crate::rings::parse_laurent;
use crate::Result;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassTerm {
    pub gen: String,
    pub monomial: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductEntry {
    pub x: String,
    pub y: String,
    pub result: Vec<ClassTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ActionEntry {
    pub a: String,
    pub x: String,
    pub result: Vec<ClassTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InclusionEntry {
    pub x: String,
    pub result: Vec<ClassTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureDocument {
    pub n: i64,
    #[serde(rename = "N")]
    pub maslov: i64,
    #[serde(rename = "C_M", skip_serializing_if = "Option::is_none")]
    pub c_m: Option<i64>,
    pub lagrangian_basis: Vec<Generator>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ambient_basis: Option<Vec<Generator>>,
    pub product: Vec<ProductEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<ActionEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inclusion: Option<Vec<InclusionEntry>>,
}

fn class_from_terms(terms: &[ClassTerm], basis: &GradedBasis, vd: i64) -> Result<QClass> {
    let mut class = QClass::zero(basis.len(), vd);
    for term in terms {
        let idx = basis.index_of(&term.gen)?;
        let scalar = parse_laurent(&term.monomial, vd)?;
        let mut single = QClass::zero(basis.len(), vd);
        single.set_coeff(idx, scalar);
        class = class.add(&single)?;
    }
    Ok(class)
}

fn class_to_terms(class: &QClass, basis: &GradedBasis) -> Vec<ClassTerm> {
    (0..class.len())
        .filter(|&i| !class.coeff(i).is_zero())
        .map(|i| ClassTerm {
            gen: basis.name(i).to_string(),
            monomial: class.coeff(i).to_string(),
        })
        .collect()
}

pub fn structure_from_document(doc: &StructureDocument) -> Result<QuantumStructure> {
    let lag = GradedBasis::new(doc.lagrangian_basis.clone())?;
    let vd = -doc.maslov;
    let g = lag.len();
    let mut product = vec![vec![QClass::zero(g, vd); g]; g];
    for entry in &doc.product {
        let i = lag.index_of(&entry.x)?;
        let j = lag.index_of(&entry.y)?;
        product[i][j] = class_from_terms(&entry.result, &lag, vd)?;
    }
    let mut qs = QuantumStructure::new(lag.clone(), doc.n, doc.maslov, product)?;
    if let Some(amb_gens) = &doc.ambient_basis {
        let amb = GradedBasis::new(amb_gens.clone())?;
        qs = qs.with_ambient(amb.clone(), doc.c_m.unwrap_or(doc.n + 1));
        if let Some(action_entries) = &doc.action {
            let mut action = vec![vec![QClass::zero(g, vd); g]; amb.len()];
            for entry in action_entries {
                let a = amb.index_of(&entry.a)?;
                let i = lag.index_of(&entry.x)?;
                action[a][i] = class_from_terms(&entry.result, &lag, vd)?;
            }
            qs = qs.with_action(action)?;
        }
        if let Some(inclusion_entries) = &doc.inclusion {
            let mut inclusion = vec![QClass::zero(amb.len(), vd); g];
            for entry in inclusion_entries {
                let i = lag.index_of(&entry.x)?;
                inclusion[i] = class_from_terms(&entry.result, &amb, vd)?;
            }
            qs = qs.with_inclusion(inclusion)?;
        }
    }
    Ok(qs)
}

pub fn structure_to_document(qs: &QuantumStructure) -> StructureDocument {
    let lag = qs.lag_basis();
    let g = lag.len();
    let mut product = Vec::new();
    for i in 0..g {
        for j in 0..g {
            let entry = qs.product_entry(i, j);
            if !entry.is_zero() {
                product.push(ProductEntry {
                    x: lag.name(i).to_string(),
                    y: lag.name(j).to_string(),
                    result: class_to_terms(entry, lag),
                });
            }
        }
    }
    let ambient_basis = qs
        .amb_basis()
        .map(|b| b.iter().map(|(_, gen)| gen.clone()).collect());
    let action = if qs.has_action() {
        let amb = qs.amb_basis().unwrap();
        let mut entries = Vec::new();
        for a in 0..amb.len() {
            for i in 0..g {
                let entry = qs.action_entry(a, i).unwrap();
                if !entry.is_zero() {
                    entries.push(ActionEntry {
                        a: amb.name(a).to_string(),
                        x: lag.name(i).to_string(),
                        result: class_to_terms(entry, lag),
                    });
                }
            }
        }
        Some(entries)
    } else {
        None
    };
    let inclusion = if qs.has_inclusion() {
        let amb = qs.amb_basis().unwrap();
        let mut entries = Vec::new();
        for i in 0..g {
            let entry = qs.inclusion_entry(i).unwrap();
            if !entry.is_zero() {
                entries.push(InclusionEntry {
                    x: lag.name(i).to_string(),
                    result: class_to_terms(entry, amb),
                });
            }
        }
        Some(entries)
    } else {
        None
    };
    StructureDocument {
        n: qs.dim_l(),
        maslov: qs.maslov(),
        c_m: qs.c_m(),
        lagrangian_basis: lag.iter().map(|(_, gen)| gen.clone()).collect(),
        ambient_basis,
        product,
        action,
        inclusion,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn structure_document_round_trip() {
        let qs = presets::clifford_structure().structure;
        let doc = structure_to_document(&qs);
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let parsed: StructureDocument = serde_json::from_str(&text).unwrap();
        let qs2 = structure_from_document(&parsed).unwrap();
        let doc2 = structure_to_document(&qs2);
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            serde_json::to_string(&doc2).unwrap()
        );
    }
}
