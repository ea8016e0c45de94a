//! Chain-map verification between pearl complexes.

use super::pearl::{laurent_mat_mul, PearlComplex};
use crate::rings::GradedLaurent;
use crate::Result;

#[derive(Clone, Debug, Default)]
pub struct ChainMapReport {
    /// Entries that are non-monomial or do not preserve degree.
    pub degree_violations: Vec<String>,
    /// `d' m = m d` as matrices over the Laurent ring.
    pub commutes: bool,
}

impl ChainMapReport {
    pub fn passes(&self) -> bool {
        self.degree_violations.is_empty() && self.commutes
    }
}

/// Checks that `m` (entries `m[to][from]`, target basis of `dst`, source
/// basis of `src`) is a degree-zero chain map `src -> dst`.
pub fn verify_chain_map(
    src: &PearlComplex,
    dst: &PearlComplex,
    m: &[Vec<GradedLaurent>],
) -> Result<ChainMapReport> {
    let mut report = ChainMapReport::default();
    let maslov = src.maslov();
    for (to, row) in m.iter().enumerate() {
        for (from, e) in row.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let dx = src.basis().degree(from);
            let dy = dst.basis().degree(to);
            match e.monomial_exponent() {
                None => report.degree_violations.push(format!(
                    "entry {} -> {} is not a monomial: {e}",
                    src.basis().name(from),
                    dst.basis().name(to)
                )),
                Some(k) => {
                    if dy - k * maslov != dx {
                        report.degree_violations.push(format!(
                            "entry {} -> {} = t^{k} has degree {}, expected 0",
                            src.basis().name(from),
                            dst.basis().name(to),
                            dy - k * maslov - dx
                        ));
                    }
                }
            }
        }
    }
    let src_diff: Vec<Vec<GradedLaurent>> = (0..src.basis().len())
        .map(|to| {
            (0..src.basis().len())
                .map(|from| src.entry(to, from).clone())
                .collect()
        })
        .collect();
    let dst_diff: Vec<Vec<GradedLaurent>> = (0..dst.basis().len())
        .map(|to| {
            (0..dst.basis().len())
                .map(|from| dst.entry(to, from).clone())
                .collect()
        })
        .collect();
    let lhs = laurent_mat_mul(&dst_diff, m)?;
    let rhs = laurent_mat_mul(m, &src_diff)?;
    report.commutes = lhs == rhs;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::basis::GradedBasis;
    use crate::complexes::pearl::RingMode;
    use crate::rings::parse_laurent;

    fn circle(names: [&str; 2]) -> PearlComplex {
        let basis = GradedBasis::from_pairs(&[(names[0], 1), (names[1], 0)]).unwrap();
        PearlComplex::new(
            basis,
            1,
            2,
            RingMode::LambdaPlus,
            vec![(
                names[1].to_string(),
                names[0].to_string(),
                parse_laurent("t", -2).unwrap(),
            )],
        )
        .unwrap()
    }

    fn identity_matrix(g: usize) -> Vec<Vec<GradedLaurent>> {
        (0..g)
            .map(|r| {
                (0..g)
                    .map(|c| {
                        if r == c {
                            GradedLaurent::one(-2)
                        } else {
                            GradedLaurent::zero(-2)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn identity_is_a_chain_map() {
        let c = circle(["x1", "x0"]);
        let report = verify_chain_map(&c, &c, &identity_matrix(2)).unwrap();
        assert!(report.passes());
    }

    #[test]
    fn differential_itself_fails_degree_check() {
        let c = circle(["x1", "x0"]);
        let d: Vec<Vec<GradedLaurent>> = (0..2)
            .map(|to| (0..2).map(|from| c.entry(to, from).clone()).collect())
            .collect();
        let report = verify_chain_map(&c, &c, &d).unwrap();
        assert!(!report.degree_violations.is_empty());
    }

    #[test]
    fn renaming_commutes() {
        let c = circle(["x1", "x0"]);
        let d = circle(["top", "bottom"]);
        let report = verify_chain_map(&c, &d, &identity_matrix(2)).unwrap();
        assert!(report.passes());
    }
}
