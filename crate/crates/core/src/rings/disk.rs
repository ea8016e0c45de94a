//! The positive disk-class semigroup ring.
//!
//! Classes live in an integer lattice of configurable rank; a linear Maslov
//! functional with values in `N * Z` grades them, and the symplectic area is
//! proportional to the Maslov index with a positive constant, which is why
//! only the Maslov functional ever enters a computation.  Every stored class
//! has positive Maslov index except the adjoined unit, which we identify
//! with the class of the zero vector.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;

use super::laurent::GradedLaurent;
use crate::error::Error;
use crate::Result;

/// The configuration shared by elements: lattice rank, Maslov functional,
/// minimal Maslov number and monotonicity constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskClassRing {
    rank: usize,
    maslov_coeffs: Vec<i64>,
    maslov: i64,
    tau: Ratio<i64>,
}

impl DiskClassRing {
    /// `maslov_coeffs` are the values of the Maslov functional on the lattice
    /// basis; each must be a multiple of `maslov`, which must be >= 1.
    /// `tau` is the monotonicity constant and must be positive.
    pub fn new(maslov_coeffs: Vec<i64>, maslov: i64, tau: Ratio<i64>) -> Result<Self> {
        if maslov < 1 {
            return Err(Error::InvalidClass(format!(
                "minimal Maslov number must be positive, got {maslov}"
            )));
        }
        if tau <= Ratio::from_integer(0) {
            return Err(Error::InvalidClass(format!(
                "monotonicity constant must be positive, got {tau}"
            )));
        }
        for &c in &maslov_coeffs {
            if c % maslov != 0 {
                return Err(Error::InvalidClass(format!(
                    "Maslov coefficient {c} is not a multiple of N = {maslov}"
                )));
            }
        }
        Ok(DiskClassRing {
            rank: maslov_coeffs.len(),
            maslov_coeffs,
            maslov,
            tau,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn maslov(&self) -> i64 {
        self.maslov
    }

    pub fn maslov_of(&self, class: &[i64]) -> i64 {
        class
            .iter()
            .zip(&self.maslov_coeffs)
            .map(|(a, c)| a * c)
            .sum()
    }

    /// `area = tau * maslov`; kept for validation only.
    pub fn area_of(&self, class: &[i64]) -> Ratio<i64> {
        self.tau * Ratio::from_integer(self.maslov_of(class))
    }

    /// Checks that an independently supplied area functional is the
    /// monotone multiple of the Maslov one.
    pub fn check_area_coeffs(&self, area_coeffs: &[Ratio<i64>]) -> Result<()> {
        if area_coeffs.len() != self.rank {
            return Err(Error::BasisMismatch(format!(
                "area functional has rank {}, lattice has rank {}",
                area_coeffs.len(),
                self.rank
            )));
        }
        for (a, &m) in area_coeffs.iter().zip(&self.maslov_coeffs) {
            if *a != self.tau * Ratio::from_integer(m) {
                return Err(Error::InvalidClass(format!(
                    "area coefficient {a} is not tau * {m}"
                )));
            }
        }
        Ok(())
    }
}

/// An element of the semigroup ring: a GF(2) combination of lattice classes,
/// each of positive Maslov index or zero.
#[derive(Clone, PartialEq, Eq)]
pub struct DiskClassElement {
    ring: DiskClassRing,
    terms: BTreeSet<Vec<i64>>,
}

impl DiskClassElement {
    pub fn zero(ring: DiskClassRing) -> Self {
        DiskClassElement {
            ring,
            terms: BTreeSet::new(),
        }
    }

    /// The adjoined unit, identified with the zero class.
    pub fn one(ring: DiskClassRing) -> Self {
        let class = vec![0; ring.rank()];
        let mut e = Self::zero(ring);
        e.terms.insert(class);
        e
    }

    /// A single class; rejected unless its Maslov index is positive or the
    /// class is zero.
    pub fn monomial(ring: DiskClassRing, class: Vec<i64>) -> Result<Self> {
        if class.len() != ring.rank() {
            return Err(Error::BasisMismatch(format!(
                "class has rank {}, lattice has rank {}",
                class.len(),
                ring.rank()
            )));
        }
        let mu = ring.maslov_of(&class);
        let is_unit = class.iter().all(|&c| c == 0);
        if !is_unit && mu <= 0 {
            return Err(Error::PositivityViolation(format!(
                "class {class:?} has Maslov index {mu} <= 0"
            )));
        }
        let mut e = Self::zero(ring);
        e.terms.insert(class);
        Ok(e)
    }

    pub fn ring(&self) -> &DiskClassRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.terms.iter()
    }

    fn check_ring(&self, other: &DiskClassElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::IncompatibleRing(
                "disk-class rings differ".to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &DiskClassElement) -> Result<DiskClassElement> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for t in &other.terms {
            if !out.terms.remove(t) {
                out.terms.insert(t.clone());
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &DiskClassElement) -> Result<DiskClassElement> {
        self.check_ring(other)?;
        let mut out = Self::zero(self.ring.clone());
        for a in &self.terms {
            for b in &other.terms {
                let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if !out.terms.remove(&sum) {
                    out.terms.insert(sum);
                }
            }
        }
        Ok(out)
    }

    /// The grading specialization: a class of Maslov index `mu` maps to
    /// `t^(mu / N)`.
    pub fn specialize_q(&self) -> GradedLaurent {
        GradedLaurent::from_exponents(
            -self.ring.maslov,
            self.terms
                .iter()
                .map(|c| self.ring.maslov_of(c) / self.ring.maslov),
        )
    }
}

impl fmt::Display for DiskClassElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for t in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if t.iter().all(|&c| c == 0) {
                write!(f, "1")?;
            } else {
                let inner: Vec<String> = t.iter().map(|c| c.to_string()).collect();
                write!(f, "T[{}]", inner.join(","))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiskClassElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses the `Display` format: `T[1,0] + T[0,2]`, `1`, `0`.
pub fn parse_disk_element(text: &str, ring: &DiskClassRing) -> Result<DiskClassElement> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::parse(text, "empty element"));
    }
    let mut out = DiskClassElement::zero(ring.clone());
    if trimmed == "0" {
        return Ok(out);
    }
    for term in trimmed.split('+') {
        let term = term.trim();
        let class = if term == "1" {
            vec![0; ring.rank()]
        } else if let Some(inner) = term
            .strip_prefix("T[")
            .and_then(|rest| rest.strip_suffix(']'))
        {
            inner
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::parse(text, format!("bad coordinate `{c}`")))
                })
                .collect::<Result<Vec<i64>>>()?
        } else {
            return Err(Error::parse(text, format!("bad term `{term}`")));
        };
        let mono = DiskClassElement::monomial(ring.clone(), class)?;
        out = out.add(&mono)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> DiskClassRing {
        // Rank 1, the basis class has Maslov index 2, N = 2.
        DiskClassRing::new(vec![2], 2, Ratio::new(1, 2)).unwrap()
    }

    #[test]
    fn positivity_is_enforced() {
        let r = ring();
        assert!(DiskClassElement::monomial(r.clone(), vec![1]).is_ok());
        assert!(DiskClassElement::monomial(r.clone(), vec![0]).is_ok());
        assert!(matches!(
            DiskClassElement::monomial(r, vec![-1]),
            Err(Error::PositivityViolation(_))
        ));
    }

    #[test]
    fn specialize_q_examples() {
        let r = DiskClassRing::new(vec![2, 4], 2, Ratio::new(1, 1)).unwrap();
        // mu = 2N maps to t^2.
        let a = DiskClassElement::monomial(r.clone(), vec![0, 1]).unwrap();
        assert_eq!(a.specialize_q(), GradedLaurent::monomial(-2, 2));
        assert!(DiskClassElement::one(r.clone()).specialize_q().is_one());
        // Two distinct classes of equal index cancel after specialization.
        let b = DiskClassElement::monomial(r.clone(), vec![2, 0]).unwrap();
        let sum = a.add(&b).unwrap();
        assert!(sum.specialize_q().is_zero());
    }

    #[test]
    fn specialize_q_is_a_ring_map() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let r = DiskClassRing::new(vec![2, 4], 2, Ratio::new(1, 3)).unwrap();
        let random = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut e = DiskClassElement::zero(r.clone());
            for _ in 0..rng.gen_range(0..4) {
                let class = loop {
                    let c = vec![rng.gen_range(-2..4), rng.gen_range(0..3)];
                    if c.iter().all(|&x| x == 0) || r.maslov_of(&c) > 0 {
                        break c;
                    }
                };
                e = e.add(&DiskClassElement::monomial(r.clone(), class).unwrap())
                    .unwrap();
            }
            e
        };
        for _ in 0..200 {
            let (a, b) = (random(&mut rng), random(&mut rng));
            assert_eq!(
                a.mul(&b).unwrap().specialize_q(),
                a.specialize_q().mul(&b.specialize_q()).unwrap()
            );
        }
    }

    #[test]
    fn area_is_monotone_multiple() {
        let r = ring();
        assert_eq!(r.area_of(&[3]), Ratio::new(3, 1));
        assert!(r.check_area_coeffs(&[Ratio::new(1, 1)]).is_ok());
        assert!(r.check_area_coeffs(&[Ratio::new(2, 1)]).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let r = DiskClassRing::new(vec![2, 2], 2, Ratio::new(1, 1)).unwrap();
        // Terms print sorted by lattice coordinates.
        for text in ["0", "1", "T[0,2] + T[1,0]", "1 + T[1,1]"] {
            let e = parse_disk_element(text, &r).unwrap();
            assert_eq!(e.to_string(), text);
        }
        // Parsing is order-insensitive.
        assert_eq!(
            parse_disk_element("T[1,0] + T[0,2]", &r).unwrap(),
            parse_disk_element("T[0,2] + T[1,0]", &r).unwrap()
        );
    }
}
