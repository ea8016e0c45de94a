//! The mixed two-variable ring `Z2[t0^±, t1^±] / (t0^p = t1^q)`.
//!
//! Here `p = 2 C_M / N` and `q = 2 C_M / N'` for two minimal Maslov numbers
//! `N`, `N'` dividing twice the minimal Chern number, so the defining
//! relation is degree-preserving.  Elements are kept in the canonical form
//! with `0 <= i < p` for every stored pair `(i, j)`, which makes equality a
//! set comparison.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MixedRing {
    p: i64,
    q: i64,
    t0_degree: i64,
    t1_degree: i64,
}

impl MixedRing {
    /// Builds the ring for ambient minimal Chern number `c_m` and the two
    /// minimal Maslov numbers.  Both must divide `2 c_m`.
    pub fn new(c_m: i64, maslov_l: i64, maslov_lp: i64) -> Result<Self> {
        if c_m < 1 || maslov_l < 1 || maslov_lp < 1 {
            return Err(Error::NotMonotoneCompatible(format!(
                "need positive C_M and Maslov numbers, got {c_m}, {maslov_l}, {maslov_lp}"
            )));
        }
        for n in [maslov_l, maslov_lp] {
            if (2 * c_m) % n != 0 {
                return Err(Error::NotMonotoneCompatible(format!(
                    "N = {n} does not divide 2 C_M = {}",
                    2 * c_m
                )));
            }
        }
        Ok(MixedRing {
            p: 2 * c_m / maslov_l,
            q: 2 * c_m / maslov_lp,
            t0_degree: -maslov_l,
            t1_degree: -maslov_lp,
        })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Degree of the monomial `t0^i t1^j`.
    pub fn monomial_degree(&self, i: i64, j: i64) -> i64 {
        i * self.t0_degree + j * self.t1_degree
    }

    fn canonical(&self, i: i64, j: i64) -> (i64, i64) {
        let carry = i.div_euclid(self.p);
        (i.rem_euclid(self.p), j + carry * self.q)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MixedLaurent {
    ring: MixedRing,
    terms: BTreeSet<(i64, i64)>,
}

impl MixedLaurent {
    pub fn zero(ring: MixedRing) -> Self {
        MixedLaurent {
            ring,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(ring: MixedRing) -> Self {
        Self::monomial(ring, 0, 0)
    }

    /// The monomial `t0^i t1^j`, stored canonically.
    pub fn monomial(ring: MixedRing, i: i64, j: i64) -> Self {
        let mut e = Self::zero(ring);
        e.toggle(i, j);
        e
    }

    pub fn ring(&self) -> &MixedRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().copied()
    }

    fn toggle(&mut self, i: i64, j: i64) {
        let key = self.ring.canonical(i, j);
        if !self.terms.remove(&key) {
            self.terms.insert(key);
        }
    }

    fn check_ring(&self, other: &MixedLaurent) -> Result<()> {
        if (self.ring.p, self.ring.q) != (other.ring.p, other.ring.q) {
            return Err(Error::IncompatibleRing(format!(
                "mixed rings ({}, {}) and ({}, {}) differ",
                self.ring.p, self.ring.q, other.ring.p, other.ring.q
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &MixedLaurent) -> Result<MixedLaurent> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for &(i, j) in &other.terms {
            out.toggle(i, j);
        }
        Ok(out)
    }

    /// Convolution followed by canonicalization through `t0^p = t1^q`.
    pub fn mul(&self, other: &MixedLaurent) -> Result<MixedLaurent> {
        self.check_ring(other)?;
        let mut out = Self::zero(self.ring);
        for &(a0, a1) in &self.terms {
            for &(b0, b1) in &other.terms {
                out.toggle(a0 + b0, a1 + b1);
            }
        }
        Ok(out)
    }

    /// Degree when every term has the same one; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self
            .terms
            .iter()
            .map(|&(i, j)| self.ring.monomial_degree(i, j));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for MixedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for &(i, j) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors = Vec::new();
            match i {
                0 => {}
                1 => factors.push("t0".to_string()),
                _ => factors.push(format!("t0^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("t1".to_string()),
                _ => factors.push(format!("t1^{j}")),
            }
            if factors.is_empty() {
                write!(f, "1")?;
            } else {
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MixedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses the `Display` format: `t0^2*t1`, `1 + t1^-1`, `0`.
pub fn parse_mixed(text: &str, ring: MixedRing) -> Result<MixedLaurent> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::parse(text, "empty element"));
    }
    let mut out = MixedLaurent::zero(ring);
    if trimmed == "0" {
        return Ok(out);
    }
    for term in trimmed.split('+') {
        let term = term.trim();
        let (mut i, mut j) = (0i64, 0i64);
        if term != "1" {
            for factor in term.split('*') {
                let factor = factor.trim();
                let (var, exp) = if let Some(rest) = factor.strip_prefix("t0") {
                    (0, rest)
                } else if let Some(rest) = factor.strip_prefix("t1") {
                    (1, rest)
                } else {
                    return Err(Error::parse(text, format!("bad factor `{factor}`")));
                };
                let e = if exp.is_empty() {
                    1
                } else if let Some(num) = exp.strip_prefix('^') {
                    num.parse::<i64>()
                        .map_err(|_| Error::parse(text, format!("bad exponent `{num}`")))?
                } else {
                    return Err(Error::parse(text, format!("bad factor `{factor}`")));
                };
                if var == 0 {
                    i += e;
                } else {
                    j += e;
                }
            }
        }
        out = out.add(&MixedLaurent::monomial(ring, i, j))?;
    }
    Ok(out)
}

/// Whether `t0^i` lies in the image of the second-variable subring, i.e.
/// whether `t0^i = t1^r` for some `r >= 1`.  Requires `i >= 1`.
pub fn mixed_pure_t1_test(i: i64, p: i64) -> Result<bool> {
    if i < 1 {
        return Err(Error::InvalidClass(format!("need i >= 1, got {i}")));
    }
    if p < 1 {
        return Err(Error::InvalidClass(format!("need p >= 1, got {p}")));
    }
    Ok(i % p == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring32() -> MixedRing {
        // p = 3, q = 2: C_M = 3, N = 2, N' = 3.
        MixedRing::new(3, 2, 3).unwrap()
    }

    #[test]
    fn defining_relation() {
        let r = ring32();
        assert_eq!((r.p(), r.q()), (3, 2));
        // t0^p * 1 canonicalizes to t1^q.
        let lhs = MixedLaurent::monomial(r, 3, 0);
        assert_eq!(lhs, MixedLaurent::monomial(r, 0, 2));
        assert_eq!(lhs.to_string(), "t1^2");
        // No reduction below the band.
        let m = MixedLaurent::monomial(r, 1, 1);
        assert_eq!(m.to_string(), "t0*t1");
        // t0^2 * t0^2 = t0^4 = t0 t1^2.
        let a = MixedLaurent::monomial(r, 2, 0);
        assert_eq!(a.mul(&a).unwrap(), MixedLaurent::monomial(r, 1, 2));
    }

    #[test]
    fn relation_preserves_degree() {
        let r = ring32();
        // deg t0^3 = -6 = deg t1^2 = 2 * (-3).
        assert_eq!(r.monomial_degree(3, 0), r.monomial_degree(0, 2));
        let m = MixedLaurent::monomial(r, 3, 0);
        assert_eq!(m.homogeneous_degree(), Some(-6));
    }

    #[test]
    fn pure_t1_examples() {
        assert!(mixed_pure_t1_test(3, 3).unwrap());
        assert!(!mixed_pure_t1_test(1, 3).unwrap());
        assert!(mixed_pure_t1_test(6, 3).unwrap());
        assert!(mixed_pure_t1_test(0, 3).is_err());
    }

    #[test]
    fn mismatched_rings_rejected() {
        let a = MixedLaurent::one(ring32());
        let b = MixedLaurent::one(MixedRing::new(4, 2, 4).unwrap());
        assert!(matches!(a.mul(&b), Err(Error::IncompatibleRing(_))));
    }

    #[test]
    fn canonicalization_matches_exhaustive_reduction() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let r = ring32();

        // Independent reduction: apply the relation one step at a time in
        // whichever direction moves i toward the band, until stable.
        fn slow_canonical(p: i64, q: i64, mut i: i64, mut j: i64) -> (i64, i64) {
            loop {
                if i >= p {
                    i -= p;
                    j += q;
                } else if i < 0 {
                    i += p;
                    j -= q;
                } else {
                    return (i, j);
                }
            }
        }

        for _ in 0..300 {
            let (i1, j1) = (rng.gen_range(-9..9), rng.gen_range(-9..9));
            let (i2, j2) = (rng.gen_range(-9..9), rng.gen_range(-9..9));
            let a = MixedLaurent::monomial(r, i1, j1);
            let b = MixedLaurent::monomial(r, i2, j2);
            let prod = a.mul(&b).unwrap();
            let expect = slow_canonical(r.p(), r.q(), i1 + i2, j1 + j2);
            assert_eq!(prod.terms().collect::<Vec<_>>(), vec![expect]);
            // Canonicalization is idempotent: re-inserting the canonical pair
            // leaves the element unchanged.
            let again = MixedLaurent::monomial(r, expect.0, expect.1);
            assert_eq!(prod, again);
            // Multiplication is commutative and associative on monomials.
            assert_eq!(prod, b.mul(&a).unwrap());
        }
    }

    #[test]
    fn parse_round_trip() {
        let r = ring32();
        for text in ["0", "1", "t0*t1", "t0^2*t1^-1", "1 + t0*t1^3"] {
            let e = parse_mixed(text, r).unwrap();
            assert_eq!(e.to_string(), text);
            assert_eq!(parse_mixed(&e.to_string(), r).unwrap(), e);
        }
    }

    #[test]
    fn ring_laws_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let r = ring32();
        let random = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut e = MixedLaurent::zero(r);
            for _ in 0..rng.gen_range(0..4) {
                e = e
                    .add(&MixedLaurent::monomial(
                        r,
                        rng.gen_range(-5..5),
                        rng.gen_range(-5..5),
                    ))
                    .unwrap();
            }
            e
        };
        for _ in 0..200 {
            let (a, b, c) = (random(&mut rng), random(&mut rng), random(&mut rng));
            assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            let sum = b.add(&c).unwrap();
            assert_eq!(
                a.mul(&sum).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            assert_eq!(MixedLaurent::one(r).mul(&a).unwrap(), a);
        }
    }
}
