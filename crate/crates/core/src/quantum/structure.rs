//! Classes over a graded basis and the quantum structure tensors.

use std::fmt;

use crate::complexes::GradedBasis;
use crate::error::Error;
use crate::rings::GradedLaurent;
use crate::Result;

/// An element of the free Laurent module on a basis: one coefficient per
/// generator.
#[derive(Clone, PartialEq, Eq)]
pub struct QClass {
    coeffs: Vec<GradedLaurent>,
}

impl QClass {
    pub fn zero(len: usize, var_degree: i64) -> Self {
        QClass {
            coeffs: vec![GradedLaurent::zero(var_degree); len],
        }
    }

    pub fn basis_class(len: usize, var_degree: i64, index: usize) -> Self {
        let mut c = Self::zero(len, var_degree);
        c.coeffs[index] = GradedLaurent::one(var_degree);
        c
    }

    pub fn from_coeffs(coeffs: Vec<GradedLaurent>) -> Self {
        QClass { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> &GradedLaurent {
        &self.coeffs[i]
    }

    pub fn set_coeff(&mut self, i: usize, value: GradedLaurent) {
        self.coeffs[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &QClass) -> Result<QClass> {
        if self.len() != other.len() {
            return Err(Error::BasisMismatch(format!(
                "classes over bases of size {} and {}",
                self.len(),
                other.len()
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(QClass { coeffs })
    }

    pub fn scale(&self, scalar: &GradedLaurent) -> Result<QClass> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mul(scalar))
            .collect::<Result<Vec<_>>>()?;
        Ok(QClass { coeffs })
    }

    /// Total degree when every nonzero coefficient is a monomial sitting in
    /// the same degree; `None` for zero or inhomogeneous classes.
    pub fn homogeneous_degree(&self, basis: &GradedBasis) -> Option<i64> {
        let mut degree = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = c.monomial_exponent()?;
            let d = basis.degree(i) + k * c.var_degree();
            match degree {
                None => degree = Some(d),
                Some(existing) if existing == d => {}
                _ => return None,
            }
        }
        degree
    }

    /// Renders the class in the given basis, e.g. `a*t + w*t^2`.
    pub fn display(&self, basis: &GradedBasis) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for k in c.support() {
                let factor = match k {
                    0 => String::new(),
                    1 => "*t".to_string(),
                    _ => format!("*t^{k}"),
                };
                parts.push(format!("{}{factor}", basis.name(i)));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for QClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Structure constants for the quantum operations over a Lagrangian basis,
/// with optional ambient data for the module action and the inclusion.
#[derive(Clone, Debug)]
pub struct QuantumStructure {
    lag_basis: GradedBasis,
    n: i64,
    maslov: i64,
    amb_basis: Option<GradedBasis>,
    c_m: Option<i64>,
    /// `product[i][j] = x_i \u{2218} x_j`.
    product: Vec<Vec<QClass>>,
    /// `action[a][i] = a \u{229b} x_i`.
    action: Option<Vec<Vec<QClass>>>,
    /// `inclusion[i]` = image of `x_i` in the ambient basis.
    inclusion: Option<Vec<QClass>>,
}

impl QuantumStructure {
    pub fn new(
        lag_basis: GradedBasis,
        n: i64,
        maslov: i64,
        product: Vec<Vec<QClass>>,
    ) -> Result<Self> {
        let g = lag_basis.len();
        if product.len() != g || product.iter().any(|row| row.len() != g) {
            return Err(Error::BasisMismatch(format!(
                "product tensor must be {g} x {g}"
            )));
        }
        for row in &product {
            for entry in row {
                if entry.len() != g {
                    return Err(Error::BasisMismatch(
                        "product entry over wrong basis".to_string(),
                    ));
                }
            }
        }
        Ok(QuantumStructure {
            lag_basis,
            n,
            maslov,
            amb_basis: None,
            c_m: None,
            product,
            action: None,
            inclusion: None,
        })
    }

    pub fn with_ambient(mut self, amb_basis: GradedBasis, c_m: i64) -> Self {
        self.amb_basis = Some(amb_basis);
        self.c_m = Some(c_m);
        self
    }

    pub fn with_action(mut self, action: Vec<Vec<QClass>>) -> Result<Self> {
        let a = self.require_ambient()?.len();
        let g = self.lag_basis.len();
        if action.len() != a || action.iter().any(|row| row.len() != g) {
            return Err(Error::BasisMismatch(format!(
                "action tensor must be {a} x {g}"
            )));
        }
        self.action = Some(action);
        Ok(self)
    }

    pub fn with_inclusion(mut self, inclusion: Vec<QClass>) -> Result<Self> {
        let a = self.require_ambient()?.len();
        if inclusion.len() != self.lag_basis.len() || inclusion.iter().any(|c| c.len() != a) {
            return Err(Error::BasisMismatch(
                "inclusion matrix shape mismatch".to_string(),
            ));
        }
        self.inclusion = Some(inclusion);
        Ok(self)
    }

    pub fn lag_basis(&self) -> &GradedBasis {
        &self.lag_basis
    }

    pub fn amb_basis(&self) -> Option<&GradedBasis> {
        self.amb_basis.as_ref()
    }

    pub fn require_ambient(&self) -> Result<&GradedBasis> {
        self.amb_basis
            .as_ref()
            .ok_or_else(|| Error::Unsupported("structure has no ambient data".to_string()))
    }

    pub fn dim_l(&self) -> i64 {
        self.n
    }

    pub fn maslov(&self) -> i64 {
        self.maslov
    }

    pub fn var_degree(&self) -> i64 {
        -self.maslov
    }

    pub fn c_m(&self) -> Option<i64> {
        self.c_m
    }

    pub fn product_entry(&self, i: usize, j: usize) -> &QClass {
        &self.product[i][j]
    }

    pub fn action_entry(&self, a: usize, i: usize) -> Result<&QClass> {
        self.action
            .as_ref()
            .map(|t| &t[a][i])
            .ok_or_else(|| Error::Unsupported("structure has no action tensor".to_string()))
    }

    pub fn inclusion_entry(&self, i: usize) -> Result<&QClass> {
        self.inclusion
            .as_ref()
            .map(|t| &t[i])
            .ok_or_else(|| Error::Unsupported("structure has no inclusion data".to_string()))
    }

    pub fn has_action(&self) -> bool {
        self.action.is_some()
    }

    pub fn has_inclusion(&self) -> bool {
        self.inclusion.is_some()
    }

    /// Index of the unit: the unique top-degree generator.
    pub fn unit_index(&self) -> Result<usize> {
        self.lag_basis.single_maximum(self.n)
    }

    pub fn lag_class(&self, name: &str) -> Result<QClass> {
        Ok(QClass::basis_class(
            self.lag_basis.len(),
            self.var_degree(),
            self.lag_basis.index_of(name)?,
        ))
    }

    pub fn amb_class(&self, name: &str) -> Result<QClass> {
        let basis = self.require_ambient()?;
        Ok(QClass::basis_class(
            basis.len(),
            self.var_degree(),
            basis.index_of(name)?,
        ))
    }

    /// Bilinear extension of the product tensor.
    pub fn product_apply(&self, u: &QClass, v: &QClass) -> Result<QClass> {
        let g = self.lag_basis.len();
        if u.len() != g || v.len() != g {
            return Err(Error::BasisMismatch(
                "product arguments over wrong basis".to_string(),
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
                out = out.add(&self.product[i][j].scale(&scalar)?)?;
            }
        }
        Ok(out)
    }

    /// Bilinear extension of the action tensor; `a` lives over the ambient
    /// basis.
    pub fn module_apply(&self, a: &QClass, x: &QClass) -> Result<QClass> {
        let amb = self.require_ambient()?.len();
        let g = self.lag_basis.len();
        if a.len() != amb || x.len() != g {
            return Err(Error::BasisMismatch(
                "action arguments over wrong bases".to_string(),
            ));
        }
        let mut out = QClass::zero(g, self.var_degree());
        for h in 0..amb {
            if a.coeff(h).is_zero() {
                continue;
            }
            for i in 0..g {
                if x.coeff(i).is_zero() {
                    continue;
                }
                let scalar = a.coeff(h).mul(x.coeff(i))?;
                out = out.add(&self.action_entry(h, i)?.scale(&scalar)?)?;
            }
        }
        Ok(out)
    }

    /// Linear extension of the inclusion.
    pub fn inclusion_apply(&self, x: &QClass) -> Result<QClass> {
        let amb = self.require_ambient()?.len();
        let g = self.lag_basis.len();
        if x.len() != g {
            return Err(Error::BasisMismatch(
                "inclusion argument over wrong basis".to_string(),
            ));
        }
        let mut out = QClass::zero(amb, self.var_degree());
        for i in 0..g {
            if x.coeff(i).is_zero() {
                continue;
            }
            out = out.add(&self.inclusion_entry(i)?.scale(x.coeff(i))?)?;
        }
        Ok(out)
    }

    /// The augmentation: the sum of the coefficients of the degree-zero
    /// generators, extended linearly over the Laurent ring.
    pub fn augmentation(&self, x: &QClass) -> Result<GradedLaurent> {
        if x.len() != self.lag_basis.len() {
            return Err(Error::BasisMismatch(
                "augmentation argument over wrong basis".to_string(),
            ));
        }
        let mut out = GradedLaurent::zero(self.var_degree());
        for (i, g) in self.lag_basis.iter() {
            if g.degree == 0 {
                out = out.add(x.coeff(i))?;
            }
        }
        Ok(out)
    }

    /// Degree, associativity, unit and (reported, never required)
    /// commutativity of the product.
    pub fn check_product_axioms(&self) -> Result<ProductAxiomReport> {
        let g = self.lag_basis.len();
        let mut report = ProductAxiomReport {
            degree_ok: true,
            associative: true,
            unital: true,
            commutative: true,
            failures: Vec::new(),
        };
        for i in 0..g {
            for j in 0..g {
                let expected = self.lag_basis.degree(i) + self.lag_basis.degree(j) - self.n;
                let entry = &self.product[i][j];
                if !entry.is_zero() && entry.homogeneous_degree(&self.lag_basis) != Some(expected) {
                    report.degree_ok = false;
                    report.failures.push(format!(
                        "{} \u{2218} {} is not homogeneous of degree {expected}",
                        self.lag_basis.name(i),
                        self.lag_basis.name(j)
                    ));
                }
            }
        }
        let vd = self.var_degree();
        for i in 0..g {
            let xi = QClass::basis_class(g, vd, i);
            for j in 0..g {
                let xj = QClass::basis_class(g, vd, j);
                if self.product_apply(&xi, &xj)? != self.product_apply(&xj, &xi)? {
                    report.commutative = false;
                }
                for k in 0..g {
                    let xk = QClass::basis_class(g, vd, k);
                    let left = self.product_apply(&self.product_apply(&xi, &xj)?, &xk)?;
                    let right = self.product_apply(&xi, &self.product_apply(&xj, &xk)?)?;
                    if left != right {
                        report.associative = false;
                        report.failures.push(format!(
                            "associativity fails on ({}, {}, {})",
                            self.lag_basis.name(i),
                            self.lag_basis.name(j),
                            self.lag_basis.name(k)
                        ));
                    }
                }
            }
        }
        match self.unit_index() {
            Err(e) => {
                report.unital = false;
                report.failures.push(format!("no unit: {e}"));
            }
            Ok(u) => {
                let unit = QClass::basis_class(g, vd, u);
                for i in 0..g {
                    let xi = QClass::basis_class(g, vd, i);
                    if self.product_apply(&unit, &xi)? != xi
                        || self.product_apply(&xi, &unit)? != xi
                    {
                        report.unital = false;
                        report.failures.push(format!(
                            "unit law fails on {}",
                            self.lag_basis.name(i)
                        ));
                    }
                }
            }
        }
        Ok(report)
    }

    /// Module axioms over a verified ambient model: compatibility with the
    /// ambient product, the unit action, and the two-sided algebra law.
    pub fn check_module_axioms(
        &self,
        ambient: &super::ambient::AmbientModel,
    ) -> Result<ModuleAxiomReport> {
        let amb_basis = self.require_ambient()?;
        if *amb_basis != ambient.basis {
            return Err(Error::BasisMismatch(
                "structure and model ambient bases differ".to_string(),
            ));
        }
        let g = self.lag_basis.len();
        let a_len = amb_basis.len();
        let vd = self.var_degree();
        let mut report = ModuleAxiomReport {
            degree_ok: true,
            associativity_over_ring: true,
            unit_action: true,
            two_sided: true,
            failures: Vec::new(),
        };
        for h in 0..a_len {
            for i in 0..g {
                let expected = amb_basis.degree(h) + self.lag_basis.degree(i) - 2 * self.n;
                let entry = self.action_entry(h, i)?;
                if !entry.is_zero() && entry.homogeneous_degree(&self.lag_basis) != Some(expected) {
                    report.degree_ok = false;
                    report.failures.push(format!(
                        "{} \u{229b} {} is not homogeneous of degree {expected}",
                        amb_basis.name(h),
                        self.lag_basis.name(i)
                    ));
                }
            }
        }
        let top = amb_basis.single_maximum(2 * self.n)?;
        let unit_amb = QClass::basis_class(a_len, vd, top);
        for i in 0..g {
            let xi = QClass::basis_class(g, vd, i);
            if self.module_apply(&unit_amb, &xi)? != xi {
                report.unit_action = false;
                report
                    .failures
                    .push(format!("unit action fails on {}", self.lag_basis.name(i)));
            }
        }
        for ha in 0..a_len {
            let a = QClass::basis_class(a_len, vd, ha);
            for hb in 0..a_len {
                let b = QClass::basis_class(a_len, vd, hb);
                let ab = ambient.product_apply(&a, &b)?;
                for i in 0..g {
                    let xi = QClass::basis_class(g, vd, i);
                    let nested = self.module_apply(&a, &self.module_apply(&b, &xi)?)?;
                    let flat = self.module_apply(&ab, &xi)?;
                    if nested != flat {
                        report.associativity_over_ring = false;
                        report.failures.push(format!(
                            "({} * {}) \u{229b} {} differs from the nested action",
                            amb_basis.name(ha),
                            amb_basis.name(hb),
                            self.lag_basis.name(i)
                        ));
                    }
                }
            }
        }
        for h in 0..a_len {
            let a = QClass::basis_class(a_len, vd, h);
            for i in 0..g {
                let xi = QClass::basis_class(g, vd, i);
                for j in 0..g {
                    let xj = QClass::basis_class(g, vd, j);
                    let through_product = self.module_apply(&a, &self.product_apply(&xi, &xj)?)?;
                    let left = self.product_apply(&self.module_apply(&a, &xi)?, &xj)?;
                    let right = self.product_apply(&xi, &self.module_apply(&a, &xj)?)?;
                    if through_product != left || through_product != right {
                        report.two_sided = false;
                        report.failures.push(format!(
                            "two-sided law fails on ({}, {}, {})",
                            amb_basis.name(h),
                            self.lag_basis.name(i),
                            self.lag_basis.name(j)
                        ));
                    }
                }
            }
        }
        Ok(report)
    }

    /// The inclusion must be a degree-zero map of modules over the ambient
    /// ring: `i_L(a \u{229b} x) = a * i_L(x)`.
    pub fn inclusion_check(
        &self,
        ambient: &super::ambient::AmbientModel,
    ) -> Result<InclusionReport> {
        let amb_basis = self.require_ambient()?;
        if *amb_basis != ambient.basis {
            return Err(Error::BasisMismatch(
                "structure and model ambient bases differ".to_string(),
            ));
        }
        let g = self.lag_basis.len();
        let a_len = amb_basis.len();
        let vd = self.var_degree();
        let mut report = InclusionReport {
            degree_zero: true,
            module_map: true,
            failures: Vec::new(),
        };
        for i in 0..g {
            let entry = self.inclusion_entry(i)?;
            if !entry.is_zero()
                && entry.homogeneous_degree(amb_basis) != Some(self.lag_basis.degree(i))
            {
                report.degree_zero = false;
                report.failures.push(format!(
                    "inclusion of {} is not degree-preserving",
                    self.lag_basis.name(i)
                ));
            }
        }
        for h in 0..a_len {
            let a = QClass::basis_class(a_len, vd, h);
            for i in 0..g {
                let xi = QClass::basis_class(g, vd, i);
                let left = self.inclusion_apply(&self.module_apply(&a, &xi)?)?;
                let right = ambient.product_apply(&a, &self.inclusion_apply(&xi)?)?;
                if left != right {
                    report.module_map = false;
                    report.failures.push(format!(
                        "module-map law fails on ({}, {})",
                        amb_basis.name(h),
                        self.lag_basis.name(i)
                    ));
                }
            }
        }
        Ok(report)
    }
}

#[derive(Clone, Debug)]
pub struct ProductAxiomReport {
    pub degree_ok: bool,
    pub associative: bool,
    pub unital: bool,
    /// Reported, never required: the product is in general not commutative.
    pub commutative: bool,
    pub failures: Vec<String>,
}

impl ProductAxiomReport {
    pub fn passes(&self) -> bool {
        self.degree_ok && self.associative && self.unital
    }
}

#[derive(Clone, Debug)]
pub struct ModuleAxiomReport {
    pub degree_ok: bool,
    pub associativity_over_ring: bool,
    pub unit_action: bool,
    pub two_sided: bool,
    pub failures: Vec<String>,
}

impl ModuleAxiomReport {
    pub fn passes(&self) -> bool {
        self.degree_ok && self.associativity_over_ring && self.unit_action && self.two_sided
    }
}

#[derive(Clone, Debug)]
pub struct InclusionReport {
    pub degree_zero: bool,
    pub module_map: bool,
    pub failures: Vec<String>,
}

impl InclusionReport {
    pub fn passes(&self) -> bool {
        self.degree_zero && self.module_map
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn unit_law_and_zero() {
        let qs = presets::clifford_structure().structure;
        let unit = qs.lag_class("w").unwrap();
        for name in ["m", "a", "b", "w"] {
            let x = qs.lag_class(name).unwrap();
            assert_eq!(qs.product_apply(&unit, &x).unwrap(), x);
        }
        let zero = QClass::zero(4, -2);
        let a = qs.lag_class("a").unwrap();
        assert!(qs.product_apply(&zero, &a).unwrap().is_zero());
    }

    #[test]
    fn clifford_self_product() {
        // a \u{2218} a = w t for the standard table.
        let qs = presets::clifford_structure().structure;
        let a = qs.lag_class("a").unwrap();
        let got = qs.product_apply(&a, &a).unwrap();
        assert_eq!(got.display(qs.lag_basis()), "w*t");
    }

    #[test]
    fn augmentation_examples() {
        let qs = presets::clifford_structure().structure;
        let m = qs.lag_class("m").unwrap();
        assert!(qs.augmentation(&m).unwrap().is_one());
        let a = qs.lag_class("a").unwrap();
        assert!(qs.augmentation(&a).unwrap().is_zero());
        let scaled = m.scale(&GradedLaurent::monomial(-2, 3)).unwrap();
        assert_eq!(
            qs.augmentation(&scaled).unwrap(),
            GradedLaurent::monomial(-2, 3)
        );
    }

    #[test]
    fn random_tensor_fails_associativity() {
        // A deliberately inconsistent table: a*a = m on a two-generator
        // basis with unit u.
        let basis = GradedBasis::from_pairs(&[("m", 0), ("u", 1)]).unwrap();
        let g = basis.len();
        let mut product = vec![vec![QClass::zero(g, -2); g]; g];
        // u is the unit.
        for i in 0..g {
            product[1][i] = QClass::basis_class(g, -2, i);
            product[i][1] = QClass::basis_class(g, -2, i);
        }
        // m \u{2218} m = u (degree-inconsistent and non-associative).
        product[0][0] = QClass::basis_class(g, -2, 1);
        let qs = QuantumStructure::new(basis, 1, 2, product).unwrap();
        let report = qs.check_product_axioms().unwrap();
        assert!(!report.passes());
    }
}
