//! Laurent polynomials over the two-element field in one graded variable.
//!
//! The variable `t` has a fixed negative degree `-N`, where `N` is the
//! minimal Maslov number in play, so the monomial `t^k` has degree `-kN`.
//! Coefficients live in GF(2), so an element is just its exponent support
//! and addition is symmetric difference.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::Result;

/// Cap on the support size of any produced element.  The objects this crate
/// manipulates have a handful of terms; growth past this signals a bug.
pub const TERM_CAP: usize = 10_000;

/// An element of `Z2[t, t^-1]` with `deg t = var_degree < 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedLaurent {
    var_degree: i64,
    exps: BTreeSet<i64>,
}

/// Degree of a homogeneous element attached to a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomogeneousDegree {
    /// The zero element, homogeneous of every degree.
    Zero,
    /// Homogeneous of the given degree.
    Of(i64),
    /// More than one exponent in the support.
    NonHomogeneous,
}

impl GradedLaurent {
    /// The zero element. `var_degree` must be negative.
    pub fn zero(var_degree: i64) -> Self {
        assert!(var_degree < 0, "variable degree must be negative");
        GradedLaurent {
            var_degree,
            exps: BTreeSet::new(),
        }
    }

    pub fn one(var_degree: i64) -> Self {
        Self::monomial(var_degree, 0)
    }

    pub fn monomial(var_degree: i64, exp: i64) -> Self {
        let mut e = Self::zero(var_degree);
        e.exps.insert(exp);
        e
    }

    pub fn from_exponents(var_degree: i64, exps: impl IntoIterator<Item = i64>) -> Self {
        let mut e = Self::zero(var_degree);
        for k in exps {
            // Repeated exponents cancel in characteristic two.
            if !e.exps.remove(&k) {
                e.exps.insert(k);
            }
        }
        e
    }

    pub fn var_degree(&self) -> i64 {
        self.var_degree
    }

    /// The minimal Maslov number `N = -deg t`.
    pub fn maslov(&self) -> i64 {
        -self.var_degree
    }

    pub fn is_zero(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.exps.len() == 1 && self.exps.contains(&0)
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.exps.iter().copied()
    }

    pub fn term_count(&self) -> usize {
        self.exps.len()
    }

    pub fn coefficient(&self, exp: i64) -> bool {
        self.exps.contains(&exp)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.exps.first().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.exps.last().copied()
    }

    /// Zero or a single monomial.
    pub fn is_homogeneous(&self) -> bool {
        self.exps.len() <= 1
    }

    /// The exponent when the element is a single monomial.
    pub fn monomial_exponent(&self) -> Option<i64> {
        if self.exps.len() == 1 {
            self.exps.first().copied()
        } else {
            None
        }
    }

    fn check_ring(&self, other: &GradedLaurent) -> Result<()> {
        if self.var_degree != other.var_degree {
            return Err(Error::IncompatibleRing(format!(
                "variable degrees {} and {} differ",
                self.var_degree, other.var_degree
            )));
        }
        Ok(())
    }

    /// Coefficient-wise XOR.
    pub fn add(&self, other: &GradedLaurent) -> Result<GradedLaurent> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for &k in &other.exps {
            if !out.exps.remove(&k) {
                out.exps.insert(k);
            }
        }
        out.check_cap()?;
        Ok(out)
    }

    /// Convolution product over GF(2).
    pub fn mul(&self, other: &GradedLaurent) -> Result<GradedLaurent> {
        self.check_ring(other)?;
        let mut out = GradedLaurent::zero(self.var_degree);
        for &a in &self.exps {
            for &b in &other.exps {
                let k = a + b;
                if !out.exps.remove(&k) {
                    out.exps.insert(k);
                }
            }
        }
        out.check_cap()?;
        Ok(out)
    }

    /// Multiplication by the monomial `t^k`.
    pub fn shift(&self, k: i64) -> GradedLaurent {
        GradedLaurent {
            var_degree: self.var_degree,
            exps: self.exps.iter().map(|&e| e + k).collect(),
        }
    }

    fn check_cap(&self) -> Result<()> {
        if self.exps.len() > TERM_CAP {
            return Err(Error::TooManyTerms {
                count: self.exps.len(),
                cap: TERM_CAP,
            });
        }
        Ok(())
    }

    /// Degree of the element when attached to a generator of degree
    /// `gen_degree`: a monomial `t^k` on such a generator sits in degree
    /// `gen_degree - k N`.
    pub fn degree_with(&self, gen_degree: i64) -> HomogeneousDegree {
        match self.exps.len() {
            0 => HomogeneousDegree::Zero,
            1 => {
                let k = *self.exps.first().unwrap();
                HomogeneousDegree::Of(gen_degree + k * self.var_degree)
            }
            _ => HomogeneousDegree::NonHomogeneous,
        }
    }

    /// True when all exponents are nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.exps.first().is_none_or(|&k| k >= 0)
    }
}

impl fmt::Display for GradedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for &k in &self.exps {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "1")?,
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (deg t = {})", self.var_degree)
    }
}

/// Parses the `Display` format, e.g. `t^-1 + t^3`, `1 + t`, `0`.
pub fn parse_laurent(text: &str, var_degree: i64) -> Result<GradedLaurent> {
    let mut exps = Vec::new();
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::parse(text, "empty element"));
    }
    if trimmed == "0" {
        return Ok(GradedLaurent::zero(var_degree));
    }
    for term in trimmed.split('+') {
        let term = term.trim();
        let exp = if term == "1" {
            0
        } else if term == "t" {
            1
        } else if let Some(rest) = term.strip_prefix("t^") {
            rest.parse::<i64>()
                .map_err(|_| Error::parse(text, format!("bad exponent `{rest}`")))?
        } else {
            return Err(Error::parse(text, format!("bad term `{term}`")));
        };
        exps.push(exp);
    }
    Ok(GradedLaurent::from_exponents(var_degree, exps))
}

impl FromStr for GradedLaurent {
    type Err = Error;

    /// Parses with the conventional degree `-2`; use [`parse_laurent`] when
    /// the grading matters.
    fn from_str(s: &str) -> Result<Self> {
        parse_laurent(s, -2)
    }
}

/// An element of `Z2[t]`: support restricted to nonnegative exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PositiveLaurent(GradedLaurent);

impl PositiveLaurent {
    pub fn new(inner: GradedLaurent) -> Result<Self> {
        if !inner.is_nonnegative() {
            return Err(Error::IncompatibleRing(format!(
                "`{inner}` has negative exponents"
            )));
        }
        Ok(PositiveLaurent(inner))
    }

    pub fn zero(var_degree: i64) -> Self {
        PositiveLaurent(GradedLaurent::zero(var_degree))
    }

    pub fn as_laurent(&self) -> &GradedLaurent {
        &self.0
    }

    pub fn add(&self, other: &PositiveLaurent) -> Result<PositiveLaurent> {
        Ok(PositiveLaurent(self.0.add(&other.0)?))
    }

    pub fn mul(&self, other: &PositiveLaurent) -> Result<PositiveLaurent> {
        Ok(PositiveLaurent(self.0.mul(&other.0)?))
    }
}

impl fmt::Display for PositiveLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The embedding of the ambient ring `Z2[s, s^-1]` (with `deg s = -2 C_M`)
/// given by `s -> t^(2 C_M / N)`.  Fails when `N` does not divide `2 C_M`.
pub fn gamma_embed(s_power: i64, c_m: i64, maslov: i64) -> Result<GradedLaurent> {
    if maslov <= 0 || c_m <= 0 {
        return Err(Error::NotMonotoneCompatible(format!(
            "need positive C_M and N, got C_M = {c_m}, N = {maslov}"
        )));
    }
    if (2 * c_m) % maslov != 0 {
        return Err(Error::NotMonotoneCompatible(format!(
            "N = {maslov} does not divide 2 C_M = {}",
            2 * c_m
        )));
    }
    Ok(GradedLaurent::monomial(-maslov, s_power * (2 * c_m / maslov)))
}

/// The specialization `t -> 0`: the constant coefficient of a polynomial.
pub fn specialize_sigma(a: &PositiveLaurent) -> bool {
    a.as_laurent().coefficient(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(text: &str) -> GradedLaurent {
        parse_laurent(text, -2).unwrap()
    }

    #[test]
    fn add_cancels_over_gf2() {
        // (t + t^2) + t^2 = t
        assert_eq!(l("t + t^2").add(&l("t^2")).unwrap(), l("t"));
        // x + 0 = x
        assert_eq!(l("1 + t^3").add(&l("0")).unwrap(), l("1 + t^3"));
        // (1 + t) + (1 + t) = 0
        assert!(l("1 + t").add(&l("1 + t")).unwrap().is_zero());
    }

    #[test]
    fn add_rejects_mismatched_grading() {
        let a = GradedLaurent::monomial(-2, 1);
        let b = GradedLaurent::monomial(-3, 1);
        assert!(matches!(a.add(&b), Err(Error::IncompatibleRing(_))));
        assert!(matches!(a.mul(&b), Err(Error::IncompatibleRing(_))));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(l("t").mul(&l("t")).unwrap(), l("t^2"));
        // Squaring is exponent doubling in characteristic two.
        assert_eq!(l("1 + t").mul(&l("1 + t")).unwrap(), l("1 + t^2"));
        assert_eq!(l("t^-1").mul(&l("t")).unwrap(), l("1"));
    }

    #[test]
    fn degree_examples() {
        // t on a degree-1 generator with N = 2 sits in degree -1.
        assert_eq!(l("t").degree_with(1), HomogeneousDegree::Of(-1));
        assert_eq!(l("1").degree_with(5), HomogeneousDegree::Of(5));
        assert_eq!(l("1 + t").degree_with(0), HomogeneousDegree::NonHomogeneous);
        assert_eq!(l("0").degree_with(0), HomogeneousDegree::Zero);
    }

    #[test]
    fn gamma_embed_examples() {
        // C_M = N: s maps to t^2.
        let e = gamma_embed(1, 4, 4).unwrap();
        assert_eq!(e, GradedLaurent::monomial(-4, 2));
        assert!(gamma_embed(0, 4, 4).unwrap().is_one());
        // s^2 with C_M = 2, N = 2: exponent 2 * (2*2/2) = 4.
        assert_eq!(gamma_embed(2, 2, 2).unwrap(), GradedLaurent::monomial(-2, 4));
        // Degree is preserved: deg s = -2 C_M.
        assert_eq!(
            gamma_embed(1, 4, 4).unwrap().degree_with(0),
            HomogeneousDegree::Of(-8)
        );
        assert!(gamma_embed(1, 3, 4).is_err());
    }

    #[test]
    fn sigma_examples() {
        let p = |s: &str| PositiveLaurent::new(l(s)).unwrap();
        assert!(specialize_sigma(&p("1 + t")));
        assert!(!specialize_sigma(&p("t^3")));
        assert!(!specialize_sigma(&p("0")));
        assert!(PositiveLaurent::new(l("t^-1")).is_err());
    }

    #[test]
    fn display_round_trip() {
        for text in ["0", "1", "t", "t^-1 + t^3", "1 + t + t^5"] {
            let e = l(text);
            assert_eq!(parse_laurent(&e.to_string(), -2).unwrap(), e);
            assert_eq!(e.to_string(), text);
        }
    }

    #[test]
    fn ring_laws_on_random_elements() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let random = |rng: &mut rand_chacha::ChaCha8Rng| {
            let n = rng.gen_range(0..5);
            GradedLaurent::from_exponents(-2, (0..n).map(|_| rng.gen_range(-6..6)))
        };
        for _ in 0..200 {
            let (a, b, c) = (random(&mut rng), random(&mut rng), random(&mut rng));
            let ab = a.mul(&b).unwrap();
            let bc = b.mul(&c).unwrap();
            assert_eq!(ab.mul(&c).unwrap(), a.mul(&bc).unwrap());
            assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            let sum = b.add(&c).unwrap();
            assert_eq!(
                a.mul(&sum).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            assert_eq!(GradedLaurent::one(-2).mul(&a).unwrap(), a);
            // Homogeneous times homogeneous is homogeneous of additive degree.
            if let (Some(e1), Some(e2)) = (a.monomial_exponent(), b.monomial_exponent()) {
                assert_eq!(ab.monomial_exponent(), Some(e1 + e2));
            }
        }
    }
}
