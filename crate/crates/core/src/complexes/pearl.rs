//! The pearl complex: a free graded module over the Laurent ring with a
//! degree `-1` differential.
//!
//! Grading forces every nonzero matrix entry to be a single monomial: the
//! entry from generator `x` to generator `y` can only be `t^k` with
//! `|y| = |x| - 1 + k N`.  Validation reports grading violations, `d^2 = 0`,
//! and the equivalent family of layer identities obtained by expanding the
//! differential in powers of `t`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::basis::GradedBasis;
use crate::error::Error;
use crate::gf2::BitMatrix;
use crate::rings::GradedLaurent;
use crate::Result;

/// Coefficients: full Laurent ring, or its nonnegative part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingMode {
    #[serde(rename = "lambda")]
    Lambda,
    #[serde(rename = "lambda-plus")]
    LambdaPlus,
}

impl std::fmt::Display for RingMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RingMode::Lambda => write!(f, "lambda"),
            RingMode::LambdaPlus => write!(f, "lambda-plus"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PearlComplex {
    basis: GradedBasis,
    n: i64,
    maslov: i64,
    ring: RingMode,
    /// `diff[to][from]` is the coefficient of generator `to` in `d(from)`.
    diff: Vec<Vec<GradedLaurent>>,
}

/// Outcome of validating a complex; a report, not an error.
#[derive(Clone, Debug, Default)]
pub struct DifferentialReport {
    /// Entries that are non-monomial or sit in the wrong degree.
    pub grading_violations: Vec<String>,
    /// Entries with exponents outside the ring mode.
    pub mode_violations: Vec<String>,
    pub d_squared_zero: bool,
    /// For every total power `k`, the sum of layer compositions vanishes.
    pub layer_identities: bool,
}

impl DifferentialReport {
    pub fn is_valid(&self) -> bool {
        self.grading_violations.is_empty()
            && self.mode_violations.is_empty()
            && self.d_squared_zero
            && self.layer_identities
    }

    pub fn first_failure(&self) -> Option<String> {
        if let Some(v) = self.grading_violations.first() {
            return Some(v.clone());
        }
        if let Some(v) = self.mode_violations.first() {
            return Some(v.clone());
        }
        if !self.d_squared_zero {
            return Some("d \u{2218} d != 0".to_string());
        }
        if !self.layer_identities {
            return Some("layer identities fail".to_string());
        }
        None
    }
}

impl PearlComplex {
    /// Builds a complex with the zero differential.
    pub fn with_zero_differential(
        basis: GradedBasis,
        n: i64,
        maslov: i64,
        ring: RingMode,
    ) -> Result<Self> {
        Self::new(basis, n, maslov, ring, Vec::new())
    }

    /// `entries` lists `(from, to, element)` triples by generator name.
    /// Shape and names are checked here; grading and `d^2 = 0` are the job
    /// of [`PearlComplex::validate`].
    pub fn new(
        basis: GradedBasis,
        n: i64,
        maslov: i64,
        ring: RingMode,
        entries: Vec<(String, String, GradedLaurent)>,
    ) -> Result<Self> {
        if maslov < 2 {
            return Err(Error::InvalidComplex(format!(
                "minimal Maslov number must be at least 2, got {maslov}"
            )));
        }
        if !basis.degrees_within(n) {
            return Err(Error::InvalidComplex(format!(
                "generator degrees must lie in [0, {n}]"
            )));
        }
        let g = basis.len();
        let mut diff = vec![vec![GradedLaurent::zero(-maslov); g]; g];
        for (from, to, elem) in entries {
            if elem.var_degree() != -maslov {
                return Err(Error::IncompatibleRing(format!(
                    "entry {from} -> {to} has variable degree {}, expected {}",
                    elem.var_degree(),
                    -maslov
                )));
            }
            let from_idx = basis.index_of(&from)?;
            let to_idx = basis.index_of(&to)?;
            diff[to_idx][from_idx] = diff[to_idx][from_idx].add(&elem)?;
        }
        Ok(PearlComplex {
            basis,
            n,
            maslov,
            ring,
            diff,
        })
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn dim_l(&self) -> i64 {
        self.n
    }

    pub fn maslov(&self) -> i64 {
        self.maslov
    }

    pub fn ring_mode(&self) -> RingMode {
        self.ring
    }

    /// Same complex viewed over the other coefficient ring.
    pub fn with_ring_mode(&self, ring: RingMode) -> PearlComplex {
        PearlComplex {
            ring,
            ..self.clone()
        }
    }

    pub fn entry(&self, to: usize, from: usize) -> &GradedLaurent {
        &self.diff[to][from]
    }

    pub fn is_zero_differential(&self) -> bool {
        self.diff.iter().flatten().all(|e| e.is_zero())
    }

    pub fn max_exponent(&self) -> i64 {
        self.diff
            .iter()
            .flatten()
            .filter_map(|e| e.max_exponent())
            .max()
            .unwrap_or(0)
    }

    /// Expands the differential into layer matrices over GF(2), keyed by the
    /// exponent: the layer `k` matrix maps degree `*` to `* - 1 + kN`.
    pub fn layers(&self) -> BTreeMap<i64, BitMatrix> {
        let g = self.basis.len();
        let mut layers: BTreeMap<i64, BitMatrix> = BTreeMap::new();
        for to in 0..g {
            for from in 0..g {
                for k in self.diff[to][from].support() {
                    layers
                        .entry(k)
                        .or_insert_with(|| BitMatrix::zeros(g, g))
                        .set(to, from, true);
                }
            }
        }
        layers
    }

    /// The layer list `[d_0, d_1, ..]`; fails in Lambda mode if negative
    /// exponents are present.
    pub fn split(&self) -> Result<Vec<BitMatrix>> {
        let layers = self.layers();
        if layers.keys().next().is_some_and(|&k| k < 0) {
            return Err(Error::SplitUndefined);
        }
        let g = self.basis.len();
        let max = layers.keys().last().copied().unwrap_or(0);
        let mut out = vec![BitMatrix::zeros(g, g); (max + 1) as usize];
        for (k, m) in layers {
            out[k as usize] = m;
        }
        Ok(out)
    }

    /// The exponent-zero layer, which plays the role of the underlying
    /// Morse differential.
    pub fn morse_matrix(&self) -> BitMatrix {
        let g = self.basis.len();
        self.layers()
            .remove(&0)
            .unwrap_or_else(|| BitMatrix::zeros(g, g))
    }

    /// Full validation: grading of every entry, ring-mode exponent range,
    /// `d^2 = 0` over the Laurent ring, and the layer identities
    /// (sum over `i + j = k` of `d_i d_j = 0`), computed independently.
    pub fn validate(&self) -> DifferentialReport {
        let mut report = DifferentialReport::default();
        let g = self.basis.len();
        for to in 0..g {
            for from in 0..g {
                let e = &self.diff[to][from];
                if e.is_zero() {
                    continue;
                }
                let (dy, dx) = (self.basis.degree(to), self.basis.degree(from));
                match e.monomial_exponent() {
                    None => report.grading_violations.push(format!(
                        "entry {} -> {} is not a monomial: {e}",
                        self.basis.name(from),
                        self.basis.name(to)
                    )),
                    Some(k) => {
                        if dy != dx - 1 + k * self.maslov {
                            report.grading_violations.push(format!(
                                "entry {} -> {} = t^{k} maps degree {dx} to degree {dy}, not degree {}",
                                self.basis.name(from),
                                self.basis.name(to),
                                dx - 1 + k * self.maslov
                            ));
                        }
                        if self.ring == RingMode::LambdaPlus && k < 0 {
                            report.mode_violations.push(format!(
                                "entry {} -> {} = t^{k} has a negative exponent",
                                self.basis.name(from),
                                self.basis.name(to)
                            ));
                        }
                    }
                }
            }
        }

        report.d_squared_zero = laurent_mat_mul(&self.diff, &self.diff)
            .map(|sq| sq.iter().flatten().all(|e| e.is_zero()))
            .unwrap_or(false);

        // Independent route: expand in layers and convolve over GF(2).
        let layers = self.layers();
        report.layer_identities = true;
        if let (Some(&lo), Some(&hi)) = (
            layers.keys().next(),
            layers.keys().last(),
        ) {
            for k in 2 * lo..=2 * hi {
                let mut acc = BitMatrix::zeros(g, g);
                for (&i, mi) in &layers {
                    let j = k - i;
                    if let Some(mj) = layers.get(&j) {
                        acc = acc.add(&mi.mul(mj));
                    }
                }
                if !acc.is_zero() {
                    report.layer_identities = false;
                    break;
                }
            }
        }
        report
    }

    /// Shorthand used by operations that require a valid complex.
    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidComplex(
                report.first_failure().unwrap_or_default(),
            ))
        }
    }
}

/// Product of matrices with Laurent entries; `None`-free but fallible on
/// ring mismatch (which cannot happen for entries built by `new`).
pub fn laurent_mat_mul(
    a: &[Vec<GradedLaurent>],
    b: &[Vec<GradedLaurent>],
) -> Result<Vec<Vec<GradedLaurent>>> {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let var_degree = a
        .iter()
        .flatten()
        .chain(b.iter().flatten())
        .map(|e| e.var_degree())
        .next()
        .unwrap_or(-2);
    let mut out = vec![vec![GradedLaurent::zero(var_degree); cols]; rows];
    for r in 0..rows {
        for c in 0..cols {
            let mut acc = GradedLaurent::zero(var_degree);
            for k in 0..inner {
                if a[r].len() != inner {
                    return Err(Error::BasisMismatch("ragged matrix".to_string()));
                }
                acc = acc.add(&a[r][k].mul(&b[k][c])?)?;
            }
            out[r][c] = acc;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse_laurent;

    /// The two-generator circle complex: `d(x0) = x1 t` with N = 2.
    pub fn circle(ring: RingMode) -> PearlComplex {
        let basis = GradedBasis::from_pairs(&[("x1", 1), ("x0", 0)]).unwrap();
        PearlComplex::new(
            basis,
            1,
            2,
            ring,
            vec![(
                "x0".to_string(),
                "x1".to_string(),
                parse_laurent("t", -2).unwrap(),
            )],
        )
        .unwrap()
    }

    #[test]
    fn circle_complex_is_valid() {
        let c = circle(RingMode::LambdaPlus);
        let report = c.validate();
        assert!(report.is_valid(), "{report:?}");
    }

    #[test]
    fn zero_differential_is_valid() {
        let basis = GradedBasis::from_pairs(&[("a", 0), ("b", 1), ("c", 2)]).unwrap();
        let c = PearlComplex::with_zero_differential(basis, 2, 2, RingMode::Lambda).unwrap();
        assert!(c.validate().is_valid());
    }

    #[test]
    fn degree_zero_entry_between_equal_degrees_is_invalid() {
        let basis = GradedBasis::from_pairs(&[("x", 1), ("y", 1)]).unwrap();
        let c = PearlComplex::new(
            basis,
            1,
            2,
            RingMode::Lambda,
            vec![(
                "x".to_string(),
                "y".to_string(),
                GradedLaurent::one(-2),
            )],
        )
        .unwrap();
        let report = c.validate();
        assert!(!report.grading_violations.is_empty());
        assert!(!report.is_valid());
    }

    #[test]
    fn split_of_circle() {
        let c = circle(RingMode::LambdaPlus);
        let layers = c.split().unwrap();
        assert_eq!(layers.len(), 2);
        assert!(layers[0].is_zero());
        // x0 is column 1, x1 is row 0.
        assert!(layers[1].get(0, 1));
        assert_eq!(layers[1].rank(), 1);
    }

    #[test]
    fn split_purely_morse() {
        let basis = GradedBasis::from_pairs(&[("y", 0), ("x", 1)]).unwrap();
        let c = PearlComplex::new(
            basis,
            1,
            2,
            RingMode::LambdaPlus,
            vec![("x".to_string(), "y".to_string(), GradedLaurent::one(-2))],
        )
        .unwrap();
        let layers = c.split().unwrap();
        assert_eq!(layers.len(), 1);
        assert_eq!(layers[0], c.morse_matrix());
    }

    #[test]
    fn split_exponent_bookkeeping() {
        // d(x) = y t^2 with N = 2, |x| = 0, |y| = 3.
        let basis = GradedBasis::from_pairs(&[("x", 0), ("y", 3)]).unwrap();
        let c = PearlComplex::new(
            basis,
            3,
            2,
            RingMode::LambdaPlus,
            vec![(
                "x".to_string(),
                "y".to_string(),
                GradedLaurent::monomial(-2, 2),
            )],
        )
        .unwrap();
        assert!(c.validate().is_valid());
        let layers = c.split().unwrap();
        assert_eq!(layers.len(), 3);
        assert!(layers[0].is_zero());
        assert!(layers[1].is_zero());
        assert!(layers[2].get(1, 0));
    }

    #[test]
    fn split_undefined_with_negative_exponents() {
        let basis = GradedBasis::from_pairs(&[("x", 0), ("y", 1)]).unwrap();
        // d(y) = x t^-1 would map degree 1 to degree 1 - 1 - 2 = wrong, so
        // build the degree-consistent variant: |y| = |x| - 1 - N needs
        // negative degrees; use Lambda mode and accept grading failure, we
        // only exercise the split error.
        let c = PearlComplex::new(
            basis,
            1,
            2,
            RingMode::Lambda,
            vec![(
                "y".to_string(),
                "x".to_string(),
                GradedLaurent::monomial(-2, -1),
            )],
        )
        .unwrap();
        assert!(matches!(c.split(), Err(Error::SplitUndefined)));
    }

    #[test]
    fn d_squared_detected() {
        // d(a) = b, d(b) = c with consecutive degrees: d^2(a) = c != 0.
        let basis = GradedBasis::from_pairs(&[("a", 2), ("b", 1), ("c", 0)]).unwrap();
        let c = PearlComplex::new(
            basis,
            2,
            2,
            RingMode::LambdaPlus,
            vec![
                ("a".to_string(), "b".to_string(), GradedLaurent::one(-2)),
                ("b".to_string(), "c".to_string(), GradedLaurent::one(-2)),
            ],
        )
        .unwrap();
        let report = c.validate();
        assert!(report.grading_violations.is_empty());
        assert!(!report.d_squared_zero);
        assert!(!report.layer_identities);
    }
}
