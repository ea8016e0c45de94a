//! Virtual dimensions of the moduli configurations behind each operation.

use crate::error::Error;
use crate::Result;

/// The four configuration types and the indices entering each count.  The
/// Maslov value `mu` must be a nonnegative multiple of the minimal Maslov
/// number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimensionQuery {
    /// Trajectories contributing to the differential.
    Pearl { x: i64, y: i64, mu: i64 },
    /// Configurations contributing to the product; `n = dim L`.
    Product { x: i64, y: i64, z: i64, mu: i64, n: i64 },
    /// Configurations contributing to the module action; `n = dim L`.
    Module { a: i64, x: i64, y: i64, mu: i64, n: i64 },
    /// Configurations contributing to the inclusion.
    Inclusion { x: i64, a: i64, mu: i64 },
}

/// Evaluates the dimension formula for the query.
pub fn virtual_dimension(q: &DimensionQuery, maslov: i64) -> Result<i64> {
    let mu = match q {
        DimensionQuery::Pearl { mu, .. }
        | DimensionQuery::Product { mu, .. }
        | DimensionQuery::Module { mu, .. }
        | DimensionQuery::Inclusion { mu, .. } => *mu,
    };
    if mu < 0 || mu % maslov != 0 {
        return Err(Error::InvalidClass(format!(
            "Maslov value {mu} is not a nonnegative multiple of N = {maslov}"
        )));
    }
    Ok(match *q {
        DimensionQuery::Pearl { x, y, mu } => x - y + mu - 1,
        DimensionQuery::Product { x, y, z, mu, n } => x + y - z - n + mu,
        DimensionQuery::Module { a, x, y, mu, n } => a + x - y + mu - 2 * n,
        DimensionQuery::Inclusion { x, a, mu } => x - a + mu,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pearl_examples() {
        // Plain gradient line between consecutive indices.
        assert_eq!(
            virtual_dimension(&DimensionQuery::Pearl { x: 1, y: 0, mu: 0 }, 2).unwrap(),
            0
        );
        // The index-raising disk of the circle.
        assert_eq!(
            virtual_dimension(&DimensionQuery::Pearl { x: 0, y: 1, mu: 2 }, 2).unwrap(),
            0
        );
    }

    #[test]
    fn module_fundamental_action() {
        let n = 3;
        assert_eq!(
            virtual_dimension(
                &DimensionQuery::Module {
                    a: 2 * n,
                    x: n,
                    y: n,
                    mu: 0,
                    n
                },
                2
            )
            .unwrap(),
            0
        );
    }

    #[test]
    fn product_and_inclusion() {
        assert_eq!(
            virtual_dimension(
                &DimensionQuery::Product {
                    x: 1,
                    y: 1,
                    z: 0,
                    mu: 0,
                    n: 2
                },
                2
            )
            .unwrap(),
            0
        );
        assert_eq!(
            virtual_dimension(&DimensionQuery::Inclusion { x: 0, a: 2, mu: 2 }, 2).unwrap(),
            0
        );
    }

    #[test]
    fn invalid_maslov_value() {
        assert!(virtual_dimension(&DimensionQuery::Pearl { x: 0, y: 0, mu: 3 }, 2).is_err());
        assert!(virtual_dimension(&DimensionQuery::Pearl { x: 0, y: 0, mu: -2 }, 2).is_err());
    }
}
