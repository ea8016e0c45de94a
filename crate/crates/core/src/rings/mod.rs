//! Coefficient rings: graded Laurent polynomials over the two-element field,
//! their nonnegative-exponent part, the positive disk-class semigroup ring,
//! and the mixed two-variable ring with the relation `t0^p = t1^q`.

mod disk;
mod laurent;
mod mixed;

pub use disk::{parse_disk_element, DiskClassElement, DiskClassRing};
pub use laurent::{
    gamma_embed, parse_laurent, specialize_sigma, GradedLaurent, HomogeneousDegree,
    PositiveLaurent, TERM_CAP,
};
pub use mixed::{mixed_pure_t1_test, parse_mixed, MixedLaurent, MixedRing};
