//! The spectral sequence of the exponent filtration.
//!
//! Over the nonnegative ring the complex is filtered by `F^k = t^k C`.  On a
//! fixed total degree the filtration is finite — a generator of degree `d`
//! contributes `t^m` terms only while `d - mN` stays above the degree in
//! question — so every page is computed exactly from its definition:
//!
//! ```text
//! Z^r(k, i) = { v in F^k_i : d v in F^(k+r) }
//! E^r(k, i) = Z^r(k, i) / ( Z^(r-1)(k+1, i) + d Z^(r-1)(k-r+1, i+1) )
//! ```
//!
//! The page-zero term is the exponent-zero layer (the Morse complex
//! transported to each filtration level) and the stable page matches the
//! associated graded of the homology over the nonnegative ring.

use std::collections::BTreeMap;

use super::homology::HomologyResult;
use super::pearl::{PearlComplex, RingMode};
use crate::error::Error;
use crate::gf2::{express_in, BitMatrix, BitVec, RowBasis};
use crate::Result;

/// One page: GF(2) dimensions and induced differentials, both keyed by
/// `(filtration level, total degree)`.  The page-`r` differential maps
/// `(k, i)` to `(k + r, i - 1)`.
#[derive(Clone, Debug)]
pub struct SpectralPage {
    pub page: u32,
    pub dims: BTreeMap<(i64, i64), usize>,
    pub differentials: BTreeMap<(i64, i64), BitMatrix>,
}

impl SpectralPage {
    pub fn dim(&self, filtration: i64, degree: i64) -> usize {
        self.dims.get(&(filtration, degree)).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn differentials_vanish(&self) -> bool {
        self.differentials.values().all(|m| m.is_zero())
    }
}

/// Slice bases of the filtered module: the total-degree-`i` slice has basis
/// `{ x t^m : m >= 0, |x| - mN = i }`, ordered by generator index.
struct SliceModel<'a> {
    c: &'a PearlComplex,
}

impl<'a> SliceModel<'a> {
    fn basis(&self, i: i64) -> Vec<(usize, i64)> {
        let n = self.c.maslov();
        let mut out = Vec::new();
        for (g, gen) in self.c.basis().iter() {
            let num = gen.degree - i;
            if num >= 0 && num % n == 0 {
                out.push((g, num / n));
            }
        }
        out
    }

    /// Differential from the degree-`i` slice to the degree-`i-1` slice.
    fn diff(&self, i: i64) -> BitMatrix {
        let src = self.basis(i);
        let dst = self.basis(i - 1);
        let mut m = BitMatrix::zeros(dst.len(), src.len());
        for (ci, &(x, mx)) in src.iter().enumerate() {
            for (ri, &(y, my)) in dst.iter().enumerate() {
                if self.c.entry(y, x).coefficient(my - mx) {
                    m.set(ri, ci, true);
                }
            }
        }
        m
    }

    /// Basis of `Z^r(k, i)` inside the degree-`i` slice coordinates.
    /// `r = -1` is the filtration subspace itself.
    fn z_space(&self, r: i64, k: i64, i: i64) -> Vec<BitVec> {
        let basis = self.basis(i);
        let len = basis.len();
        let sub: Vec<usize> = (0..len).filter(|&p| basis[p].1 >= k).collect();
        if r < 0 {
            return sub.iter().map(|&p| BitVec::unit(len, p)).collect();
        }
        let dst = self.basis(i - 1);
        let d = self.diff(i);
        // Rows of the constraint: image coordinates below filtration k + r.
        let low: Vec<usize> = (0..dst.len()).filter(|&p| dst[p].1 < k + r).collect();
        let mut constraint = BitMatrix::zeros(low.len(), sub.len());
        for (ci, &p) in sub.iter().enumerate() {
            let image = d.apply(&BitVec::unit(len, p));
            for (ri, &q) in low.iter().enumerate() {
                constraint.set(ri, ci, image.get(q));
            }
        }
        constraint
            .kernel_basis()
            .into_iter()
            .map(|kv| {
                let mut v = BitVec::zeros(len);
                for (ci, &p) in sub.iter().enumerate() {
                    if kv.get(ci) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Generators of the boundary subspace `B^r(k, i)` of `Z^r(k, i)`.
    fn b_generators(&self, r: i64, k: i64, i: i64) -> Vec<BitVec> {
        let mut gens = self.z_space(r - 1, k + 1, i);
        let d = self.diff(i + 1);
        for v in self.z_space(r - 1, k - r + 1, i + 1) {
            gens.push(d.apply(&v));
        }
        gens
    }
}

fn page_width(c: &PearlComplex) -> i64 {
    let max = c.basis().max_degree().unwrap_or(0);
    let min = c.basis().min_degree().unwrap_or(0);
    (max - min + 1) / c.maslov() + 1
}

/// Filtration levels worth reporting: one past the largest exponent that a
/// reduced differential can produce.
pub fn filtration_bound(c: &PearlComplex) -> i64 {
    1 + c.max_exponent() * c.basis().len() as i64
}

fn compute_page(c: &PearlComplex, r: i64, k_bound: i64) -> SpectralPage {
    let model = SliceModel { c };
    let n = c.maslov();
    let degrees: Vec<i64> = {
        let mut ds: Vec<i64> = c.basis().iter().map(|(_, g)| g.degree).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    };

    // Quotient data per supported (k, i): dimension and representatives.
    let mut dims = BTreeMap::new();
    let mut reps: BTreeMap<(i64, i64), Vec<BitVec>> = BTreeMap::new();
    let mut b_bases: BTreeMap<(i64, i64), RowBasis> = BTreeMap::new();
    for &d in &degrees {
        for k in 0..=k_bound {
            let i = d - k * n;
            let z = model.z_space(r, k, i);
            let len = model.basis(i).len();
            let mut b = RowBasis::new(len);
            for g in model.b_generators(r, k, i) {
                b.insert(g);
            }
            let mut quotient_reps = Vec::new();
            let mut span = b.clone();
            for v in &z {
                if span.insert(v.clone()) {
                    quotient_reps.push(v.clone());
                }
            }
            if !quotient_reps.is_empty() {
                dims.insert((k, i), quotient_reps.len());
            }
            reps.insert((k, i), quotient_reps);
            b_bases.insert((k, i), b);
        }
    }

    // Induced differentials between stored slots.
    let mut differentials = BTreeMap::new();
    for (&(k, i), source_reps) in &reps {
        if source_reps.is_empty() {
            continue;
        }
        let target_key = (k + r, i - 1);
        let Some(target_reps) = reps.get(&target_key) else {
            continue;
        };
        let Some(target_b) = b_bases.get(&target_key) else {
            continue;
        };
        let d = model.diff(i);
        let target_dim = target_reps.len();
        let mut matrix = BitMatrix::zeros(target_dim, source_reps.len());
        let reduced_targets: Vec<BitVec> = target_reps
            .iter()
            .map(|t| {
                let mut w = t.clone();
                target_b.reduce(&mut w);
                w
            })
            .collect();
        for (ci, v) in source_reps.iter().enumerate() {
            let mut image = d.apply(v);
            target_b.reduce(&mut image);
            if image.is_zero() {
                continue;
            }
            let combo = express_in(&reduced_targets, &image)
                .expect("page differential must land in the target page group");
            for (ri, &bit) in combo.iter().enumerate() {
                if bit {
                    matrix.set(ri, ci, true);
                }
            }
        }
        if !matrix.is_zero() {
            differentials.insert((k, i), matrix);
        }
    }

    SpectralPage {
        page: r as u32,
        dims,
        differentials,
    }
}

/// Pages `0 ..= max_page` of the filtration spectral sequence.
pub fn spectral_sequence(c: &PearlComplex, max_page: u32) -> Result<Vec<SpectralPage>> {
    if c.ring_mode() != RingMode::LambdaPlus {
        return Err(Error::WrongRingMode(
            "the filtration spectral sequence needs lambda-plus mode".to_string(),
        ));
    }
    c.ensure_valid()?;
    let k_bound = filtration_bound(c);
    Ok((0..=max_page)
        .map(|r| compute_page(c, r as i64, k_bound))
        .collect())
}

/// The stable page: computed past the point where any differential must
/// vanish for width reasons.
pub fn infinity_page(c: &PearlComplex) -> Result<SpectralPage> {
    if c.ring_mode() != RingMode::LambdaPlus {
        return Err(Error::WrongRingMode(
            "the filtration spectral sequence needs lambda-plus mode".to_string(),
        ));
    }
    c.ensure_valid()?;
    let r = page_width(c) + 1;
    let mut page = compute_page(c, r, filtration_bound(c));
    page.page = u32::MAX;
    Ok(page)
}

/// Associated-graded dimensions of a homology module, keyed like page
/// entries: a free summand generated in degree `d` contributes one dimension
/// at `(k, d - kN)` for every `k`, a torsion summand of order `t^p` only for
/// `k < p`.
pub fn graded_homology_dims(
    hom: &HomologyResult,
    k_bound: i64,
) -> BTreeMap<(i64, i64), usize> {
    let n = hom.maslov;
    let mut dims = BTreeMap::new();
    for (&d, &count) in &hom.free_ranks {
        for k in 0..=k_bound {
            *dims.entry((k, d - k * n)).or_insert(0) += count;
        }
    }
    for t in &hom.torsion {
        for k in 0..(t.power as i64).min(k_bound + 1) {
            *dims.entry((k, t.degree - k * n)).or_insert(0) += 1;
        }
    }
    dims.retain(|_, v| *v > 0);
    dims
}
