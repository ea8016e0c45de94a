//! Ambient quantum homology models.
//!
//! A model is a graded basis, optionally a full product table over the
//! Laurent ring (pushed through the embedding `s -> t^(2 C_M / N)`), and a
//! list of certified invertible classes.  Complex projective space and the
//! product of two spheres ship with complete verified tables; the quadric
//! ships only the facts actually certified (the point class is invertible),
//! with no invented table.

use super::structure::QClass;
use crate::complexes::{GradedBasis, Generator, HomologyResult};
use crate::error::Error;
use crate::report::{Finding, Report};
use crate::rings::GradedLaurent;
use crate::Result;

#[derive(Clone, Debug)]
pub enum Certificate {
    /// Inverse supplied and checked by multiplication.
    Verified(QClass),
    /// Known invertible, but no table is available to verify it here.
    Asserted,
}

#[derive(Clone, Debug)]
pub struct InvertibleClass {
    pub index: usize,
    pub certificate: Certificate,
}

#[derive(Clone, Debug)]
pub struct AmbientModel {
    pub name: String,
    pub basis: GradedBasis,
    /// Real dimension of the ambient manifold.
    pub dim: i64,
    pub c_m: i64,
    /// Minimal Maslov number of the Lagrangian ring the model is pushed to.
    pub maslov: i64,
    product: Option<Vec<Vec<QClass>>>,
    pub invertibles: Vec<InvertibleClass>,
}

impl AmbientModel {
    pub fn var_degree(&self) -> i64 {
        -self.maslov
    }

    pub fn has_product(&self) -> bool {
        self.product.is_some()
    }

    pub fn class(&self, name: &str) -> Result<QClass> {
        Ok(QClass::basis_class(
            self.basis.len(),
            self.var_degree(),
            self.basis.index_of(name)?,
        ))
    }

    pub fn product_entry(&self, i: usize, j: usize) -> Result<&QClass> {
        self.product
            .as_ref()
            .map(|t| &t[i][j])
            .ok_or_else(|| Error::Unsupported(format!("model `{}` has no product table", self.name)))
    }

    pub fn product_apply(&self, u: &QClass, v: &QClass) -> Result<QClass> {
        let g = self.basis.len();
        if u.len() != g || v.len() != g {
            return Err(Error::BasisMismatch(
                "ambient product arguments over wrong basis".to_string(),
            ));
        }
        let mut out = QClass::zero(g, self.var_degree());
        for i in 0..g {
            if u.coeff(i).is_zero() {
                continue;
            }
            for j in 0..g {
                if v.coeff(j).is_zero() {
                    continue;
                }
                let scalar = u.coeff(i).mul(v.coeff(j))?;
                out = out.add(&self.product_entry(i, j)?.scale(&scalar)?)?;
            }
        }
        Ok(out)
    }

    pub fn power(&self, base: &QClass, exp: u32) -> Result<QClass> {
        let top = self.basis.single_maximum(self.dim)?;
        let mut out = QClass::basis_class(self.basis.len(), self.var_degree(), top);
        for _ in 0..exp {
            out = self.product_apply(&out, base)?;
        }
        Ok(out)
    }

    pub fn invertible(&self, index: usize) -> Result<&InvertibleClass> {
        self.invertibles
            .iter()
            .find(|c| c.index == index)
            .ok_or_else(|| {
                Error::NotCertifiedInvertible(self.basis.name(index).to_string())
            })
    }
}

/// Projective space of complex dimension `n`: basis `h^0 ..= h^n` where
/// `h^j` is the codimension-`j` linear subspace class (so `h^0` is the
/// fundamental class and `h^n` the point class), with the product
/// `h^i * h^j = h^(i+j)` below the wrap and `h^0 t^(2(n+1)/N)` at it.
pub fn ambient_cpn(n: i64, maslov: i64) -> Result<AmbientModel> {
    let c_m = n + 1;
    if maslov < 1 || (2 * c_m) % maslov != 0 {
        return Err(Error::NotMonotoneCompatible(format!(
            "N = {maslov} does not divide 2 C_M = {}",
            2 * c_m
        )));
    }
    let e = 2 * c_m / maslov;
    let vd = -maslov;
    let basis = GradedBasis::new(
        (0..=n)
            .map(|j| Generator::new(format!("h^{j}"), 2 * n - 2 * j))
            .collect(),
    )?;
    let g = basis.len();
    let mut product = vec![vec![QClass::zero(g, vd); g]; g];
    for i in 0..=n {
        for j in 0..=n {
            let s = i + j;
            let entry = if s <= n {
                QClass::basis_class(g, vd, s as usize)
            } else {
                let mut c = QClass::zero(g, vd);
                c.set_coeff((s - n - 1) as usize, GradedLaurent::monomial(vd, e));
                c
            };
            product[i as usize][j as usize] = entry;
        }
    }
    // Every positive power of the hyperplane class is invertible:
    // h^j * h^(n+1-j) = h^0 t^e.
    let invertibles = (1..=n)
        .map(|j| {
            let mut inv = QClass::zero(g, vd);
            inv.set_coeff((n + 1 - j) as usize, GradedLaurent::monomial(vd, -e));
            InvertibleClass {
                index: j as usize,
                certificate: Certificate::Verified(inv),
            }
        })
        .collect();
    Ok(AmbientModel {
        name: format!("CP{n}"),
        basis,
        dim: 2 * n,
        c_m,
        maslov,
        product: Some(product),
        invertibles,
    })
}

/// The product of two spheres, for Lagrangians of dimension 2: fundamental
/// class, the two sphere factors, and the point class.
pub fn ambient_s2xs2(maslov: i64) -> Result<AmbientModel> {
    let c_m = 2;
    if maslov < 1 || (2 * c_m) % maslov != 0 {
        return Err(Error::NotMonotoneCompatible(format!(
            "N = {maslov} does not divide 2 C_M = {}",
            2 * c_m
        )));
    }
    let e = 2 * c_m / maslov;
    let vd = -maslov;
    let basis = GradedBasis::from_pairs(&[("[M]", 4), ("F1", 2), ("F2", 2), ("[pt]", 0)])?;
    let g = basis.len();
    let idx = |name: &str| basis.index_of(name).unwrap();
    let (m, f1, f2, pt) = (idx("[M]"), idx("F1"), idx("F2"), idx("[pt]"));
    let unit = |i: usize| QClass::basis_class(g, vd, i);
    let shifted = |i: usize, k: i64| {
        let mut c = QClass::zero(g, vd);
        c.set_coeff(i, GradedLaurent::monomial(vd, k));
        c
    };
    let mut product = vec![vec![QClass::zero(g, vd); g]; g];
    for i in 0..g {
        product[m][i] = unit(i);
        product[i][m] = unit(i);
    }
    // Each factor squares to the fundamental class times the sphere class.
    product[f1][f1] = shifted(m, e);
    product[f2][f2] = shifted(m, e);
    product[f1][f2] = unit(pt);
    product[f2][f1] = unit(pt);
    product[pt][f1] = shifted(f2, e);
    product[f1][pt] = shifted(f2, e);
    product[pt][f2] = shifted(f1, e);
    product[f2][pt] = shifted(f1, e);
    product[pt][pt] = shifted(m, 2 * e);
    let invertibles = vec![
        InvertibleClass {
            index: f1,
            certificate: Certificate::Verified(shifted(f1, -e)),
        },
        InvertibleClass {
            index: f2,
            certificate: Certificate::Verified(shifted(f2, -e)),
        },
        InvertibleClass {
            index: pt,
            certificate: Certificate::Verified(shifted(pt, -2 * e)),
        },
    ];
    Ok(AmbientModel {
        name: "S2xS2".to_string(),
        basis,
        dim: 4,
        c_m,
        maslov,
        product: Some(product),
        invertibles,
    })
}

/// The quadric of complex dimension `n`: for Lagrangians with trivial first
/// integral homology the minimal Maslov number is `2n`.  Only certified
/// facts are shipped: the point class is invertible.  No product table.
pub fn ambient_quadric(n: i64) -> Result<AmbientModel> {
    if n < 2 {
        return Err(Error::Unsupported(format!(
            "quadric model needs complex dimension at least 2, got {n}"
        )));
    }
    let basis = GradedBasis::new(vec![
        Generator::new("[Q]", 2 * n),
        Generator::new("[pt]", 0),
    ])?;
    let pt = basis.index_of("[pt]")?;
    Ok(AmbientModel {
        name: format!("Quadric{n}"),
        basis,
        dim: 2 * n,
        c_m: n,
        maslov: 2 * n,
        product: None,
        invertibles: vec![InvertibleClass {
            index: pt,
            certificate: Certificate::Asserted,
        }],
    })
}

/// Associativity, commutativity, unit and degree for a model with a table,
/// plus certificate verification for all declared invertibles.
pub fn check_ambient_axioms(model: &AmbientModel) -> Result<Report> {
    let mut report = Report::new();
    let g = model.basis.len();
    let vd = model.var_degree();
    if model.product.is_none() {
        for inv in &model.invertibles {
            report.push(Finding::pass(
                format!("invertible {}", model.basis.name(inv.index)),
                "asserted without a table",
            ));
        }
        report.note(format!("model `{}` carries no product table", model.name));
        return Ok(report);
    }

    let mut degree_ok = true;
    for i in 0..g {
        for j in 0..g {
            let expected = model.basis.degree(i) + model.basis.degree(j) - model.dim;
            let entry = model.product_entry(i, j)?;
            if !entry.is_zero() && entry.homogeneous_degree(&model.basis) != Some(expected) {
                degree_ok = false;
            }
        }
    }
    report.push(Finding::of(
        "degree",
        degree_ok,
        format!("product has degree -{}", model.dim),
    ));

    let cls = |i: usize| QClass::basis_class(g, vd, i);
    let mut associative = true;
    let mut commutative = true;
    for i in 0..g {
        for j in 0..g {
            if model.product_apply(&cls(i), &cls(j))? != model.product_apply(&cls(j), &cls(i))? {
                commutative = false;
            }
            for k in 0..g {
                let left = model.product_apply(&model.product_apply(&cls(i), &cls(j))?, &cls(k))?;
                let right =
                    model.product_apply(&cls(i), &model.product_apply(&cls(j), &cls(k))?)?;
                if left != right {
                    associative = false;
                }
            }
        }
    }
    report.push(Finding::of("associative", associative, "all basis triples"));
    report.push(Finding::of("commutative", commutative, "all basis pairs"));

    let top = model.basis.single_maximum(model.dim)?;
    let unit = cls(top);
    let mut unital = true;
    for i in 0..g {
        if model.product_apply(&unit, &cls(i))? != cls(i) {
            unital = false;
        }
    }
    report.push(Finding::of(
        "unital",
        unital,
        format!("unit is {}", model.basis.name(top)),
    ));

    for inv in &model.invertibles {
        match &inv.certificate {
            Certificate::Asserted => report.push(Finding::pass(
                format!("invertible {}", model.basis.name(inv.index)),
                "asserted",
            )),
            Certificate::Verified(inverse) => {
                let prod = model.product_apply(&cls(inv.index), inverse)?;
                report.push(Finding::of(
                    format!("invertible {}", model.basis.name(inv.index)),
                    prod == unit,
                    "product with certified inverse is the unit",
                ));
            }
        }
    }
    Ok(report)
}

/// An invertible ambient class of degree `q` acts as an isomorphism shifting
/// degree by `q - dim M`, so homology ranks must be invariant under that
/// shift.
pub fn invertible_action_periodicity(
    model: &AmbientModel,
    class_index: usize,
    hom: &HomologyResult,
) -> Result<Report> {
    model.invertible(class_index)?;
    let shift = model.basis.degree(class_index) - model.dim;
    let mut report = Report::new();
    let mut ok = true;
    for i in 0..hom.maslov {
        if hom.rank_at(i) != hom.rank_at(i + shift) {
            ok = false;
            report.note(format!(
                "rank({i}) = {} but rank({}) = {}",
                hom.rank_at(i),
                i + shift,
                hom.rank_at(i + shift)
            ));
        }
    }
    report.push(Finding::of(
        format!("periodicity under {}", model.basis.name(class_index)),
        ok,
        format!("degree shift {shift}"),
    ));
    Ok(report)
}
