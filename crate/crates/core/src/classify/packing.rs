//! Mixed packing inequalities, evaluated in exact rational arithmetic.
//!
//! Areas are measured in units of pi: a ball of radius `r` embedded
//! relatively contributes half its area `r^2 / 2`, an absolutely embedded
//! ball contributes `r^2`, and the total is compared against the capacity.

use num_rational::Ratio;

use crate::error::Error;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingDecision {
    /// The weighted area sum, in units of pi.
    pub lhs: Ratio<i64>,
    pub capacity: Ratio<i64>,
    pub satisfied: bool,
    /// `capacity - lhs`; zero at the boundary.
    pub slack: Ratio<i64>,
}

/// Evaluates the packing inequality for squared radii (in units of pi) of
/// relatively and absolutely embedded balls.
pub fn packing_bound(
    relative_sq: &[Ratio<i64>],
    absolute_sq: &[Ratio<i64>],
    capacity: Ratio<i64>,
) -> Result<PackingDecision> {
    let zero = Ratio::from_integer(0);
    if capacity <= zero {
        return Err(Error::InvalidClass(format!(
            "capacity must be positive, got {capacity}"
        )));
    }
    for r in relative_sq.iter().chain(absolute_sq) {
        if *r <= zero {
            return Err(Error::InvalidClass(format!(
                "squared radii must be positive, got {r}"
            )));
        }
    }
    let half = Ratio::new(1, 2);
    let lhs = relative_sq.iter().map(|r| r * half).sum::<Ratio<i64>>()
        + absolute_sq.iter().sum::<Ratio<i64>>();
    Ok(PackingDecision {
        lhs,
        capacity,
        satisfied: lhs <= capacity,
        slack: capacity - lhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn boundary_case_has_zero_slack() {
        // One absolute ball filling the capacity exactly.
        let d = packing_bound(&[], &[q(1, 2)], q(1, 2)).unwrap();
        assert!(d.satisfied);
        assert_eq!(d.slack, q(0, 1));
    }

    #[test]
    fn relative_ball_counts_half() {
        let d = packing_bound(&[q(2, 3)], &[], q(1, 3)).unwrap();
        assert!(d.satisfied);
        assert_eq!(d.slack, q(0, 1));
        let over = packing_bound(&[q(2, 3)], &[], q(1, 4)).unwrap();
        assert!(!over.satisfied);
    }

    #[test]
    fn three_ball_bound() {
        // Three relative balls against capacity 1: total squared radii up
        // to 2 fit.
        let d = packing_bound(&[q(2, 3), q(2, 3), q(2, 3)], &[], q(1, 1)).unwrap();
        assert!(d.satisfied);
        assert_eq!(d.lhs, q(1, 1));
    }

    #[test]
    fn invalid_inputs() {
        assert!(packing_bound(&[q(-1, 2)], &[], q(1, 1)).is_err());
        assert!(packing_bound(&[], &[], q(0, 1)).is_err());
    }
}
