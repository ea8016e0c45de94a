//! Exact algebra for Lagrangian quantum homology.
//!
//! Everything here is computed over the two-element field or over graded
//! Laurent-type rings built on it, so all results are exact.  The crate is
//! organised around five areas:
//!
//! - [`rings`]: the coefficient rings — graded Laurent polynomials in one
//!   variable of negative degree, their nonnegative part, the positive
//!   disk-class semigroup ring, and the mixed two-variable ring used for
//!   intersection obstructions.
//! - [`complexes`]: pearl complexes (graded free modules with a degree `-1`
//!   differential whose entries are monomials), differential validation,
//!   homology over both ring modes, and the filtration spectral sequence.
//! - [`quantum`]: quantum product / module action / inclusion data given as
//!   structure constants, with verification of every identity they must
//!   satisfy, plus built-in ambient models.
//! - [`classify`]: enumeration of admissible differentials for a homology
//!   profile, periodicity and side-condition filters, the intersection
//!   obstruction decision and packing-inequality evaluation.
//! - [`torus`]: the enumerative invariants of monotone two-dimensional tori
//!   computed from disk-count tables.
//!
//! [`presets`] bundles the worked examples (the circle in the plane, real
//! projective spaces, the Clifford and split tori, sphere profiles in the
//! quadric) that the CLI and the test suites both consume.

pub mod classify;
pub mod complexes;
pub mod error;
pub mod gf2;
pub mod presets;
pub mod quantum;
pub mod report;
pub mod rings;
pub mod torus;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
