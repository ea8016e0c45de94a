//! Enumerative invariants of monotone two-dimensional tori.
//!
//! The input is a finite mod-2 table counting index-two holomorphic disks
//! through a point, indexed by the boundary class in an integral basis of
//! the first homology.  The structural constants of the quantum product are
//! mod-2 sums read off that table; only `alpha`, `beta` and the sum
//! `gamma' + gamma''` are basis-independent, and the secondary constant is
//! invariant exactly when that sum is one.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::complexes::GradedBasis;
use crate::error::Error;
use crate::quantum::{QClass, QuantumStructure};
use crate::report::{Finding, Report};
use crate::rings::GradedLaurent;
use crate::Result;

/// Finite-support mod-2 disk counts on the lattice of boundary classes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NuTable {
    entries: BTreeSet<(i64, i64)>,
}

impl NuTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from `(k, l, count)` triples; counts reduce mod 2.
    pub fn from_counts(counts: impl IntoIterator<Item = (i64, i64, u64)>) -> Self {
        let mut table = Self::new();
        for (k, l, c) in counts {
            if c % 2 == 1 {
                table.toggle(k, l);
            }
        }
        table
    }

    pub fn toggle(&mut self, k: i64, l: i64) {
        if !self.entries.remove(&(k, l)) {
            self.entries.insert((k, l));
        }
    }

    pub fn get(&self, k: i64, l: i64) -> bool {
        self.entries.contains(&(k, l))
    }

    pub fn support(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.entries.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Transposes the table, i.e. swaps the roles of the two basis circles.
    pub fn swapped(&self) -> NuTable {
        NuTable {
            entries: self.entries.iter().map(|&(k, l)| (l, k)).collect(),
        }
    }

    /// XOR of two tables.
    pub fn sum(&self, other: &NuTable) -> NuTable {
        let mut out = self.clone();
        for &(k, l) in &other.entries {
            out.toggle(k, l);
        }
        out
    }
}

/// Serialized form: `{"nu": [{"k": 1, "l": 0, "count": 1}, ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NuDocument {
    pub nu: Vec<NuDocumentEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NuDocumentEntry {
    pub k: i64,
    pub l: i64,
    pub count: u64,
}

impl NuTable {
    pub fn from_document(doc: &NuDocument) -> Self {
        Self::from_counts(doc.nu.iter().map(|e| (e.k, e.l, e.count)))
    }

    pub fn to_document(&self) -> NuDocument {
        NuDocument {
            nu: self
                .entries
                .iter()
                .map(|&(k, l)| NuDocumentEntry { k, l, count: 1 })
                .collect(),
        }
    }
}

/// The structural constants of the torus quantum product.  The individual
/// `gamma` constants depend on the choice of basis; only their sum does not,
/// which is why they are optional.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusQuantumData {
    pub alpha: bool,
    pub beta: bool,
    pub gamma1: Option<bool>,
    pub gamma2: Option<bool>,
    pub s1: bool,
    pub s2: Option<bool>,
}

impl TorusQuantumData {
    /// Full data from all four table coefficients.
    pub fn with_gammas(alpha: bool, beta: bool, gamma1: bool, gamma2: bool) -> Self {
        TorusQuantumData {
            alpha,
            beta,
            gamma1: Some(gamma1),
            gamma2: Some(gamma2),
            s1: gamma1 ^ gamma2,
            s2: Some((alpha & beta) ^ (gamma1 & gamma2)),
        }
    }

    pub fn gammas(&self) -> Result<(bool, bool)> {
        match (self.gamma1, self.gamma2) {
            (Some(g1), Some(g2)) => Ok((g1, g2)),
            _ => Err(Error::Unsupported(
                "operation needs both basis-dependent gamma constants".to_string(),
            )),
        }
    }
}

/// The three invariant sums read off a disk-count table: computed in the
/// integers and reduced mod 2 at the end.
pub fn invariants_from_nu(nu: &NuTable) -> TorusQuantumData {
    let mut alpha = 0i64;
    let mut beta = 0i64;
    let mut s1 = 0i64;
    for (k, l) in nu.support() {
        alpha += l * (l + 1) / 2;
        beta += k * (k + 1) / 2;
        s1 += k * l;
    }
    TorusQuantumData {
        alpha: alpha.rem_euclid(2) == 1,
        beta: beta.rem_euclid(2) == 1,
        gamma1: None,
        gamma2: None,
        s1: s1.rem_euclid(2) == 1,
        s2: None,
    }
}

/// The sixteen-entry product table on the basis `{m, a, b, w}` with degrees
/// `0, 1, 1, 2`, unit `w` and minimal Maslov number 2.
pub fn product_table(data: &TorusQuantumData) -> Result<QuantumStructure> {
    let (g1, g2) = data.gammas()?;
    let (alpha, beta) = (data.alpha, data.beta);
    let s1 = data.s1;
    let s2 = data.s2.expect("gammas imply the secondary constant");

    let basis = GradedBasis::from_pairs(&[("m", 0), ("a", 1), ("b", 1), ("w", 2)])?;
    let g = basis.len();
    let vd = -2;
    let idx = |name: &str| basis.index_of(name).unwrap();
    let (m, a, b, w) = (idx("m"), idx("a"), idx("b"), idx("w"));

    let class = |terms: &[(usize, i64, bool)]| {
        let mut c = QClass::zero(g, vd);
        for &(gen, exp, on) in terms {
            if on {
                c.set_coeff(gen, GradedLaurent::monomial(vd, exp));
            }
        }
        c
    };

    let mut product = vec![vec![QClass::zero(g, vd); g]; g];
    for i in 0..g {
        product[w][i] = QClass::basis_class(g, vd, i);
        product[i][w] = QClass::basis_class(g, vd, i);
    }
    product[a][a] = class(&[(w, 1, alpha)]);
    product[b][b] = class(&[(w, 1, beta)]);
    product[a][b] = class(&[(m, 0, true), (w, 1, g1)]);
    product[b][a] = class(&[(m, 0, true), (w, 1, g2)]);
    product[m][a] = class(&[(b, 1, alpha), (a, 1, g2)]);
    product[a][m] = class(&[(b, 1, alpha), (a, 1, g1)]);
    product[m][b] = class(&[(a, 1, beta), (b, 1, g1)]);
    product[b][m] = class(&[(a, 1, beta), (b, 1, g2)]);
    product[m][m] = class(&[(m, 1, s1), (w, 2, s2)]);

    QuantumStructure::new(basis, 2, 2, product)
}

/// Associativity on all basis triples, degree homogeneity, and the
/// commutativity profile: the commutator is controlled exactly by the
/// invariant sum of the gamma constants.
pub fn check_table(qs: &QuantumStructure, data: &TorusQuantumData) -> Result<Report> {
    let mut report = Report::new();
    let axioms = qs.check_product_axioms()?;
    report.push(Finding::of(
        "degree",
        axioms.degree_ok,
        "product has degree -2",
    ));
    report.push(Finding::of(
        "associative",
        axioms.associative,
        "all 64 basis triples",
    ));
    report.push(Finding::of("unital", axioms.unital, "unit is w"));
    let expected_commutative = !data.s1;
    report.push(Finding::of(
        "commutativity profile",
        axioms.commutative == expected_commutative,
        if axioms.commutative {
            "commutative"
        } else {
            "non-commutative"
        },
    ));
    Ok(report)
}

/// The change of basis replacing the degree-zero generator by its shift by
/// the unit: `alpha`, `beta` and `s1` are untouched; both gammas flip; the
/// secondary constant moves by `s1 + 1`.
pub fn basis_change_xi1(data: &TorusQuantumData) -> Result<TorusQuantumData> {
    let (g1, g2) = data.gammas()?;
    Ok(TorusQuantumData::with_gammas(
        data.alpha,
        data.beta,
        !g1,
        !g2,
    ))
}

/// Counts of disks through the vertices and through an embedded triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangleCounts {
    pub n_a: bool,
    pub n_b: bool,
    pub n_c: bool,
    pub n_delta: bool,
}

/// The triangle-count identities: the vertex counts sum to `s1`; when `s1`
/// is one the triangle count corrected by a product of vertex counts equals
/// the secondary constant; and the counts through the two vertex orders
/// always cancel mod 2.
pub fn triangle_identities(tc: &TriangleCounts, data: &TorusQuantumData) -> Result<Report> {
    let mut report = Report::new();
    let vertex_sum = tc.n_a ^ tc.n_b ^ tc.n_c;
    report.push(Finding::of(
        "vertex counts",
        vertex_sum == data.s1,
        format!(
            "n_A + n_B + n_C = {} and s1 = {}",
            vertex_sum as u8, data.s1 as u8
        ),
    ));
    if data.s1 {
        let s2 = data
            .s2
            .ok_or_else(|| Error::Unsupported("secondary constant not available".to_string()))?;
        let corrected = tc.n_delta ^ (tc.n_b & tc.n_c);
        report.push(Finding::of(
            "triangle count",
            corrected == s2,
            format!("n_D + n_B n_C = {} and s2 = {}", corrected as u8, s2 as u8),
        ));
        // The opposite-order count satisfies the same relation, so the total
        // number of index-four disks through the three points is even.
        let n_delta_reversed = s2 ^ (tc.n_c & tc.n_b);
        report.push(Finding::of(
            "evenness",
            tc.n_delta ^ n_delta_reversed == (tc.n_b & tc.n_c) ^ (tc.n_c & tc.n_b),
            "both vertex orders together count evenly",
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clifford_nu() -> NuTable {
        NuTable::from_counts([(1, 0, 1), (0, 1, 1), (-1, -1, 1)])
    }

    fn split_nu() -> NuTable {
        NuTable::from_counts([(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)])
    }

    #[test]
    fn invariants_of_standard_tables() {
        let c = invariants_from_nu(&clifford_nu());
        assert!(c.alpha && c.beta && c.s1);
        let s = invariants_from_nu(&split_nu());
        assert!(s.alpha && s.beta && !s.s1);
        let empty = invariants_from_nu(&NuTable::new());
        assert!(!empty.alpha && !empty.beta && !empty.s1);
    }

    #[test]
    fn invariants_additive_and_symmetric() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let mut t1 = NuTable::new();
            let mut t2 = NuTable::new();
            for _ in 0..rng.gen_range(0..6) {
                t1.toggle(rng.gen_range(-3..4), rng.gen_range(-3..4));
            }
            for _ in 0..rng.gen_range(0..6) {
                // Keep supports disjoint by shifting away.
                t2.toggle(rng.gen_range(5..9), rng.gen_range(-3..4));
            }
            let (i1, i2, isum) = (
                invariants_from_nu(&t1),
                invariants_from_nu(&t2),
                invariants_from_nu(&t1.sum(&t2)),
            );
            assert_eq!(isum.alpha, i1.alpha ^ i2.alpha);
            assert_eq!(isum.beta, i1.beta ^ i2.beta);
            assert_eq!(isum.s1, i1.s1 ^ i2.s1);
            // Transposition swaps the two primary invariants and fixes s1.
            let swapped = invariants_from_nu(&t1.swapped());
            assert_eq!(swapped.alpha, i1.beta);
            assert_eq!(swapped.beta, i1.alpha);
            assert_eq!(swapped.s1, i1.s1);
        }
    }

    #[test]
    fn all_sixteen_tables_are_associative() {
        for bits in 0..16u8 {
            let data = TorusQuantumData::with_gammas(
                bits & 1 != 0,
                bits & 2 != 0,
                bits & 4 != 0,
                bits & 8 != 0,
            );
            let qs = product_table(&data).unwrap();
            let report = check_table(&qs, &data).unwrap();
            assert!(report.passed(), "bits {bits}: {report:?}");
        }
    }

    #[test]
    fn purely_classical_table() {
        let data = TorusQuantumData::with_gammas(false, false, false, false);
        let qs = product_table(&data).unwrap();
        let a = qs.lag_class("a").unwrap();
        let b = qs.lag_class("b").unwrap();
        let m = qs.lag_class("m").unwrap();
        assert_eq!(qs.product_apply(&a, &b).unwrap(), m);
        assert!(qs.product_apply(&m, &m).unwrap().is_zero());
    }

    #[test]
    fn basis_change_behaviour() {
        // Invariant secondary constant when s1 = 1.
        let clifford = TorusQuantumData::with_gammas(true, true, true, false);
        assert_eq!(clifford.s2, Some(true));
        let changed = basis_change_xi1(&clifford).unwrap();
        assert_eq!(changed.s2, Some(true));
        assert_eq!(changed.s1, clifford.s1);

        // Not invariant when s1 = 0.
        let split = TorusQuantumData::with_gammas(false, false, false, false);
        assert_eq!(split.s2, Some(false));
        let changed = basis_change_xi1(&split).unwrap();
        assert_eq!(changed.s2, Some(true));

        // Involution over all sixteen tables, and the invariance profile.
        for bits in 0..16u8 {
            let data = TorusQuantumData::with_gammas(
                bits & 1 != 0,
                bits & 2 != 0,
                bits & 4 != 0,
                bits & 8 != 0,
            );
            let once = basis_change_xi1(&data).unwrap();
            assert_eq!(once.alpha, data.alpha);
            assert_eq!(once.beta, data.beta);
            assert_eq!(once.s1, data.s1);
            assert_eq!(once.s2 == data.s2, data.s1);
            assert_eq!(basis_change_xi1(&once).unwrap(), data);
        }
    }

    #[test]
    fn triangle_identity_examples() {
        let clifford = TorusQuantumData::with_gammas(true, true, true, false);
        let counts = TriangleCounts {
            n_a: true,
            n_b: true,
            n_c: true,
            n_delta: false,
        };
        assert!(triangle_identities(&counts, &clifford).unwrap().passed());

        let bad = TriangleCounts {
            n_a: true,
            n_b: false,
            n_c: false,
            n_delta: false,
        };
        let split = TorusQuantumData::with_gammas(true, true, false, false);
        assert!(!triangle_identities(&bad, &split).unwrap().passed());
    }

    #[test]
    fn nu_document_round_trip() {
        let doc: NuDocument =
            serde_json::from_str(r#"{"nu":[{"k":1,"l":0,"count":1},{"k":0,"l":1,"count":3}]}"#)
                .unwrap();
        let table = NuTable::from_document(&doc);
        assert!(table.get(1, 0));
        assert!(table.get(0, 1));
        let back = table.to_document();
        assert_eq!(NuTable::from_document(&back), table);
    }
}
