//! Quantum operations as structure-constant data, with verification.
//!
//! The product, module action and inclusion are stored as tensors over a
//! chosen homology basis; they are inputs (they encode counts of geometric
//! configurations that cannot be derived algebraically), and everything this
//! module does is verify the identities they must satisfy and evaluate them
//! bilinearly.

mod ambient;
mod document;
mod duality;
mod specialization;
mod structure;

pub use ambient::{
    ambient_cpn, ambient_quadric, ambient_s2xs2, check_ambient_axioms,
    invertible_action_periodicity, AmbientModel, Certificate, InvertibleClass,
};
pub use document::{structure_from_document, structure_to_document, StructureDocument};
pub use duality::{check_incl_mod_identities, duality_build, DualityData};
pub use specialization::{specialization_compat, ClassicalTables};
pub use structure::{
    InclusionReport, ModuleAxiomReport, ProductAxiomReport, QClass, QuantumStructure,
};
