//! Setting the variable to zero: comparison of the quantum tensors with the
//! classical intersection-theoretic tables.

use super::structure::QuantumStructure;
use crate::error::Error;
use crate::report::{Finding, Report};
use crate::Result;

/// Classical counterparts over GF(2): the intersection product on the
/// Lagrangian, the exterior intersection action of ambient classes, and the
/// classical inclusion.  Each table is optional; absent tables are skipped.
#[derive(Clone, Debug, Default)]
pub struct ClassicalTables {
    /// `intersection[i][j][k]`: coefficient of generator `k` in `x_i . x_j`.
    pub intersection: Option<Vec<Vec<Vec<bool>>>>,
    /// `action[a][i][k]`: coefficient of generator `k` in `h_a . x_i`.
    pub action: Option<Vec<Vec<Vec<bool>>>>,
    /// `inclusion[i][b]`: coefficient of ambient generator `b` in the
    /// classical image of `x_i`.
    pub inclusion: Option<Vec<Vec<bool>>>,
}

/// Applies the specialization (constant coefficient) to every tensor of the
/// structure and compares with the classical tables.  Errors when the
/// structure has negative exponents, i.e. is not expressible over the
/// nonnegative ring.
pub fn specialization_compat(
    qs: &QuantumStructure,
    classical: &ClassicalTables,
) -> Result<Report> {
    let g = qs.lag_basis().len();

    // Expressibility: every stored coefficient must be polynomial.
    let mut scan_ok = true;
    for i in 0..g {
        for j in 0..g {
            for k in 0..g {
                if !qs.product_entry(i, j).coeff(k).is_nonnegative() {
                    scan_ok = false;
                }
            }
        }
    }
    if qs.has_action() {
        let a_len = qs.require_ambient()?.len();
        for a in 0..a_len {
            for i in 0..g {
                for k in 0..g {
                    if !qs.action_entry(a, i)?.coeff(k).is_nonnegative() {
                        scan_ok = false;
                    }
                }
            }
        }
    }
    if !scan_ok {
        return Err(Error::Unsupported(
            "structure has negative exponents and no classical specialization".to_string(),
        ));
    }

    let mut report = Report::new();
    if let Some(intersection) = &classical.intersection {
        let mut ok = true;
        for i in 0..g {
            for j in 0..g {
                for k in 0..g {
                    let quantum_part = qs.product_entry(i, j).coeff(k).coefficient(0);
                    if quantum_part != intersection[i][j][k] {
                        ok = false;
                        report.note(format!(
                            "product {} . {} disagrees classically at {}",
                            qs.lag_basis().name(i),
                            qs.lag_basis().name(j),
                            qs.lag_basis().name(k)
                        ));
                    }
                }
            }
        }
        report.push(Finding::of(
            "product specializes to the intersection product",
            ok,
            "constant coefficients match",
        ));
    }
    if let (Some(action), true) = (&classical.action, qs.has_action()) {
        let a_len = qs.require_ambient()?.len();
        let mut ok = true;
        for a in 0..a_len {
            for i in 0..g {
                for k in 0..g {
                    if qs.action_entry(a, i)?.coeff(k).coefficient(0) != action[a][i][k] {
                        ok = false;
                    }
                }
            }
        }
        report.push(Finding::of(
            "action specializes to the exterior intersection",
            ok,
            "constant coefficients match",
        ));
    }
    if let (Some(inclusion), true) = (&classical.inclusion, qs.has_inclusion()) {
        let a_len = qs.require_ambient()?.len();
        let mut ok = true;
        for i in 0..g {
            for b in 0..a_len {
                if qs.inclusion_entry(i)?.coeff(b).coefficient(0) != inclusion[i][b] {
                    ok = false;
                }
            }
        }
        report.push(Finding::of(
            "inclusion specializes to the classical inclusion",
            ok,
            "constant coefficients match",
        ));
    }
    Ok(report)
}
