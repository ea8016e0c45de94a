//! The intersection obstruction from the mixed coefficient ring.
//!
//! A degree-zero cycle on the first Lagrangian includes into the ambient
//! homology as the point class plus corrections `a_i t0^i` with
//! `i N <= dim M`.  Acting on the second Lagrangian's unit cannot cancel the
//! invertible point-class term unless some correction lands in the other
//! variable's subring, i.e. `t0^i = t1^r`.  When no admissible `i` allows
//! that, the composition is forced to be nonzero and the Lagrangians must
//! intersect.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rings::mixed_pure_t1_test;
use crate::Result;

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ObstructionQuery {
    /// Dimension of the Lagrangians; the ambient manifold has dimension 2n.
    pub n: i64,
    /// Minimal Chern number of the ambient manifold.
    pub c_m: i64,
    pub maslov_l: i64,
    pub maslov_lp: i64,
}

impl ObstructionQuery {
    /// The projective-space case: minimal Chern number `n + 1`.
    pub fn cpn(n: i64, maslov_l: i64, maslov_lp: i64) -> Result<Self> {
        Self::custom(n, n + 1, maslov_l, maslov_lp)
    }

    pub fn custom(n: i64, c_m: i64, maslov_l: i64, maslov_lp: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidClass(format!(
                "Lagrangian dimension must be positive, got {n}"
            )));
        }
        for maslov in [maslov_l, maslov_lp] {
            if maslov < 2 {
                return Err(Error::InvalidClass(format!(
                    "minimal Maslov number must be at least 2, got {maslov}"
                )));
            }
            if (2 * c_m) % maslov != 0 {
                return Err(Error::NotMonotoneCompatible(format!(
                    "N = {maslov} does not divide 2 C_M = {}",
                    2 * c_m
                )));
            }
        }
        Ok(ObstructionQuery {
            n,
            c_m,
            maslov_l,
            maslov_lp,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ObstructionDecision {
    /// The composition cannot vanish: the Lagrangians must intersect.
    /// The certificate lists every checked `(i, i * N_L)` pair.
    Obstructed { checked: Vec<(i64, i64)> },
    /// Some correction term can cancel against the other subring.
    NotObstructed { witness: i64 },
}

/// Decides whether the degree argument forces a nonzero composition: it does
/// exactly when no `i` with `1 <= i N_L <= 2n` satisfies `t0^i = t1^r`,
/// i.e. `2 C_M | i N_L`.
pub fn intersection_obstruction(q: &ObstructionQuery) -> Result<ObstructionDecision> {
    let p = 2 * q.c_m / q.maslov_l;
    let mut checked = Vec::new();
    let mut i = 1;
    while i * q.maslov_l <= 2 * q.n {
        if mixed_pure_t1_test(i, p)? {
            return Ok(ObstructionDecision::NotObstructed { witness: i });
        }
        checked.push((i, i * q.maslov_l));
        i += 1;
    }
    Ok(ObstructionDecision::Obstructed { checked })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_space_is_always_obstructed() {
        // The correction exponents satisfy i N <= 2n < 2n + 2, so none is
        // divisible by 2 C_M = 2n + 2.
        for n in 1..=10 {
            let c_m = n + 1;
            let divisors: Vec<i64> = (2..=2 * c_m).filter(|d| (2 * c_m) % d == 0).collect();
            for &nl in &divisors {
                for &nlp in &divisors {
                    let q = ObstructionQuery::cpn(n, nl, nlp).unwrap();
                    let decision = intersection_obstruction(&q).unwrap();
                    assert!(
                        matches!(decision, ObstructionDecision::Obstructed { .. }),
                        "n = {n}, N_L = {nl}, N_L' = {nlp}"
                    );
                }
            }
        }
    }

    #[test]
    fn degenerate_dimension_rejected() {
        assert!(ObstructionQuery::cpn(0, 2, 2).is_err());
    }

    #[test]
    fn synthetic_ambient_with_small_chern_number() {
        // C_M = 2, N_L = 2, n = 3: i = 2 satisfies 2 C_M | i N_L within
        // i N_L <= 6.
        let q = ObstructionQuery::custom(3, 2, 2, 2).unwrap();
        assert_eq!(
            intersection_obstruction(&q).unwrap(),
            ObstructionDecision::NotObstructed { witness: 2 }
        );
    }
}
