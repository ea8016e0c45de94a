//! Mechanized degree and periodicity arguments.
//!
//! Given a homology profile (GF(2) Betti numbers) and a candidate minimal
//! Maslov number, the engine enumerates all homology-level differentials
//! compatible with the grading — the exponent-zero layer vanishes in this
//! model — keeps those squaring to zero, filters by the rank periodicity
//! forced by invertible ambient classes, and finally applies the declared
//! side conditions.  Side conditions carry facts about the Lagrangian's
//! topology or geometry that the algebra cannot see; the engine only
//! evaluates them.

mod obstruction;
mod packing;

pub use obstruction::{intersection_obstruction, ObstructionDecision, ObstructionQuery};
pub use packing::{packing_bound, PackingDecision};

use serde::{Deserialize, Serialize};

use crate::complexes::{
    homology_over_lambda, GradedBasis, Generator, HomologyResult, PearlComplex, RingMode,
};
use crate::error::Error;
use crate::rings::GradedLaurent;
use crate::Result;

/// Facts supplied by the caller as filters over enumerated outcomes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum SideCondition {
    /// A vanishing homology outcome is consistent only with the listed
    /// Maslov numbers (e.g. because nonzero low-degree homology would
    /// otherwise survive).
    NarrowOnlyIfMaslov { allowed: Vec<i64>, reason: String },
    /// The topology of the problem pins the Maslov number outright.
    RequireMaslov { allowed: Vec<i64>, reason: String },
    /// Homology ranks must be symmetric about half the dimension, as the
    /// duality pairing forces.
    DualitySymmetry { reason: String },
    /// Declared geometric input: a nonvanishing outcome cannot carry
    /// homology strictly between the bottom and top degrees.
    WideInteriorVanishing { reason: String },
}

/// A problem instance: dimension, Betti profile, Maslov candidates, the
/// degree shifts certified by invertible ambient classes, and declared side
/// conditions.
#[derive(Clone, Debug)]
pub struct ClassificationProblem {
    pub n: i64,
    pub betti: Vec<usize>,
    pub candidate_maslov: Vec<i64>,
    pub shifts: Vec<i64>,
    pub side_conditions: Vec<SideCondition>,
    pub bit_cap: u32,
}

impl ClassificationProblem {
    pub fn new(n: i64, betti: Vec<usize>, candidate_maslov: Vec<i64>) -> Result<Self> {
        if betti.len() != (n + 1) as usize {
            return Err(Error::BasisMismatch(format!(
                "Betti profile must have {} entries",
                n + 1
            )));
        }
        if betti[0] == 0 {
            return Err(Error::InvalidClass(
                "a connected manifold needs betti[0] >= 1".to_string(),
            ));
        }
        if *betti.last().unwrap() != 1 {
            return Err(Error::InvalidClass(
                "a closed connected manifold has a unique top class; betti[n] must be 1"
                    .to_string(),
            ));
        }
        Ok(ClassificationProblem {
            n,
            betti,
            candidate_maslov,
            shifts: Vec::new(),
            side_conditions: Vec::new(),
            bit_cap: 24,
        })
    }

    pub fn with_shifts(mut self, shifts: Vec<i64>) -> Self {
        self.shifts = shifts;
        self
    }

    pub fn with_side_conditions(mut self, conditions: Vec<SideCondition>) -> Self {
        self.side_conditions = conditions;
        self
    }

    /// One abstract generator per Betti unit.
    fn abstract_basis(&self) -> Result<GradedBasis> {
        let mut gens = Vec::new();
        for (d, &count) in self.betti.iter().enumerate() {
            for c in 0..count {
                let name = if count == 1 {
                    format!("x{d}")
                } else {
                    format!("x{d}.{c}")
                };
                gens.push(Generator::new(name, d as i64));
            }
        }
        GradedBasis::new(gens)
    }
}

/// One admissible matrix slot: an entry `t^power` from `from` to `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub from: usize,
    pub to: usize,
    pub power: i64,
}

/// A surviving differential assignment together with its homology.
///
/// `homology` is the ring-level answer the pipeline filters on: when the
/// unit class dies, the whole ring collapses, so the ranks are reported as
/// zero even though the bare complex can keep middle-degree module homology
/// (recorded in `module_window`).
#[derive(Clone, Debug)]
pub struct DifferentialProfile {
    pub maslov: i64,
    pub slots: Vec<Slot>,
    pub bits: Vec<bool>,
    pub complex: PearlComplex,
    pub homology: HomologyResult,
    /// Ranks of the bare complex, before the unit-collapse rule.
    pub module_window: Vec<usize>,
    pub unit_survives: bool,
    pub tag: Tag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tag {
    /// Homology is the free module on the profile.
    Wide,
    /// Homology vanishes.
    Narrow,
    Other,
}

impl DifferentialProfile {
    pub fn describe(&self, basis: &GradedBasis) -> String {
        let active: Vec<String> = self
            .slots
            .iter()
            .zip(&self.bits)
            .filter(|(_, &on)| on)
            .map(|(s, _)| {
                format!(
                    "d({}) += {} t^{}",
                    basis.name(s.from),
                    basis.name(s.to),
                    s.power
                )
            })
            .collect();
        if active.is_empty() {
            "d = 0".to_string()
        } else {
            active.join(", ")
        }
    }
}

/// All matrix slots the grading admits for the given Maslov number: a layer
/// `j >= 1` entry moves degree `i` to `i - 1 + jN`, which must stay within
/// `[0, n]`.
pub fn admissible_slots(basis: &GradedBasis, n: i64, maslov: i64) -> Vec<Slot> {
    let mut slots = Vec::new();
    let mut j = 1;
    while -1 + j * maslov <= n {
        for (from, gen_from) in basis.iter() {
            let target = gen_from.degree - 1 + j * maslov;
            if target > n {
                continue;
            }
            for (to, gen_to) in basis.iter() {
                if gen_to.degree == target {
                    slots.push(Slot {
                        from,
                        to,
                        power: j,
                    });
                }
            }
        }
        j += 1;
    }
    slots
}

/// Enumerates every GF(2) assignment of the admissible slots and keeps the
/// ones that square to zero.  Output order is the numeric order of the
/// assignments, so it is deterministic.
pub fn enumerate_differentials(
    problem: &ClassificationProblem,
    maslov: i64,
) -> Result<Vec<DifferentialProfile>> {
    let basis = problem.abstract_basis()?;
    let slots = admissible_slots(&basis, problem.n, maslov);
    let bits = slots.len() as u32;
    if bits > problem.bit_cap {
        return Err(Error::EnumerationTooLarge {
            bits,
            cap: problem.bit_cap,
        });
    }
    let mut survivors = Vec::new();
    for assignment in 0u64..(1u64 << bits) {
        let chosen: Vec<bool> = (0..bits).map(|b| assignment >> b & 1 == 1).collect();
        let entries: Vec<(String, String, GradedLaurent)> = slots
            .iter()
            .zip(&chosen)
            .filter(|(_, &on)| on)
            .map(|(s, _)| {
                (
                    basis.name(s.from).to_string(),
                    basis.name(s.to).to_string(),
                    GradedLaurent::monomial(-maslov, s.power),
                )
            })
            .collect();
        let complex = PearlComplex::new(
            basis.clone(),
            problem.n,
            maslov,
            RingMode::Lambda,
            entries,
        )?;
        let report = complex.validate();
        debug_assert!(report.grading_violations.is_empty());
        if !report.d_squared_zero {
            continue;
        }
        let module_hom = homology_over_lambda(&complex)?;
        let module_window = module_hom.window();
        let unit_survives = unit_class_survives(&complex)?;
        let homology = if unit_survives {
            module_hom
        } else {
            // A dead unit collapses the ring, hence every class.
            HomologyResult {
                ring: RingMode::Lambda,
                maslov,
                free_ranks: (0..maslov).map(|i| (i, 0)).collect(),
                torsion: Vec::new(),
            }
        };
        let tag = tag_profile(problem, maslov, &homology);
        survivors.push(DifferentialProfile {
            maslov,
            slots: slots.clone(),
            bits: chosen,
            complex,
            homology,
            module_window,
            unit_survives,
            tag,
        });
    }
    Ok(survivors)
}

/// Whether the class of the unique top-degree generator survives in
/// homology: it must be a cycle and must not be a boundary.  Over the full
/// Laurent ring the boundary test is a GF(2) solvability question in the
/// top degree-residue slice.
fn unit_class_survives(c: &PearlComplex) -> Result<bool> {
    let n = c.dim_l();
    let top = c.basis().single_maximum(n)?;
    for to in 0..c.basis().len() {
        if !c.entry(to, top).is_zero() {
            return Ok(false);
        }
    }
    let maslov = c.maslov();
    let residue = n.rem_euclid(maslov);
    let incoming = crate::complexes::slice_matrix(c, residue + 1);
    let slice: Vec<usize> = c
        .basis()
        .iter()
        .filter(|(_, g)| g.degree.rem_euclid(maslov) == residue)
        .map(|(i, _)| i)
        .collect();
    let unit_pos = slice
        .iter()
        .position(|&i| i == top)
        .expect("top generator sits in its own residue slice");
    let columns: Vec<crate::gf2::BitVec> = (0..incoming.cols())
        .map(|cix| {
            let mut v = crate::gf2::BitVec::zeros(incoming.rows());
            for r in 0..incoming.rows() {
                v.set(r, incoming.get(r, cix));
            }
            v
        })
        .collect();
    let target = crate::gf2::BitVec::unit(incoming.rows(), unit_pos);
    Ok(crate::gf2::express_in(&columns, &target).is_none())
}

fn tag_profile(
    problem: &ClassificationProblem,
    maslov: i64,
    hom: &HomologyResult,
) -> Tag {
    // Ranks of the free module on the profile, folded into the window.
    let mut folded = vec![0usize; maslov as usize];
    for (d, &count) in problem.betti.iter().enumerate() {
        folded[(d as i64).rem_euclid(maslov) as usize] += count;
    }
    let window = hom.window();
    if window == folded {
        Tag::Wide
    } else if window.iter().all(|&r| r == 0) {
        Tag::Narrow
    } else {
        Tag::Other
    }
}

/// Keeps the profiles whose rank function is invariant under every shift.
pub fn filter_by_periodicity(
    profiles: Vec<DifferentialProfile>,
    shifts: &[i64],
) -> (Vec<DifferentialProfile>, Vec<String>) {
    let mut trace = Vec::new();
    let kept: Vec<DifferentialProfile> = profiles
        .into_iter()
        .filter(|p| {
            for &shift in shifts {
                for i in 0..p.homology.maslov {
                    if p.homology.rank_at(i) != p.homology.rank_at(i + shift) {
                        trace.push(format!(
                            "drop [{}]: rank({i}) = {} but rank({}) = {} breaks shift {shift}",
                            p.describe(p.complex.basis()),
                            p.homology.rank_at(i),
                            i + shift,
                            p.homology.rank_at(i + shift)
                        ));
                        return false;
                    }
                }
            }
            true
        })
        .collect();
    (kept, trace)
}

/// Applies the declared side conditions.
pub fn apply_nonvanishing_flag(
    profiles: Vec<DifferentialProfile>,
    problem: &ClassificationProblem,
) -> (Vec<DifferentialProfile>, Vec<String>) {
    let mut trace = Vec::new();
    let kept = profiles
        .into_iter()
        .filter(|p| {
            for condition in &problem.side_conditions {
                match condition {
                    SideCondition::NarrowOnlyIfMaslov { allowed, reason } => {
                        if p.tag == Tag::Narrow && !allowed.contains(&p.maslov) {
                            trace.push(format!(
                                "drop [{}]: vanishing homology is excluded ({reason})",
                                p.describe(p.complex.basis())
                            ));
                            return false;
                        }
                    }
                    SideCondition::RequireMaslov { allowed, reason } => {
                        if !allowed.contains(&p.maslov) {
                            trace.push(format!(
                                "drop [N = {}]: Maslov number excluded ({reason})",
                                p.maslov
                            ));
                            return false;
                        }
                    }
                    SideCondition::DualitySymmetry { reason } => {
                        for i in 0..p.homology.maslov {
                            if p.homology.rank_at(i) != p.homology.rank_at(problem.n - i) {
                                trace.push(format!(
                                    "drop [{}]: ranks not symmetric about {} ({reason})",
                                    p.describe(p.complex.basis()),
                                    problem.n
                                ));
                                return false;
                            }
                        }
                    }
                    SideCondition::WideInteriorVanishing { reason } => {
                        if p.tag == Tag::Wide
                            && problem.betti[1..problem.betti.len() - 1]
                                .iter()
                                .any(|&b| b > 0)
                        {
                            trace.push(format!(
                                "drop [{}]: interior homology excluded ({reason})",
                                p.describe(p.complex.basis())
                            ));
                            return false;
                        }
                    }
                }
            }
            true
        })
        .collect();
    (kept, trace)
}

/// Outcome for one problem: surviving profiles per candidate Maslov number
/// and the full reasoning trace.
#[derive(Debug)]
pub struct ClassificationOutcome {
    pub survivors: Vec<DifferentialProfile>,
    pub trace: Vec<String>,
}

/// The full pipeline: Maslov determination, differential enumeration,
/// periodicity filtering, side conditions.
pub fn run_classification(problem: &ClassificationProblem) -> Result<ClassificationOutcome> {
    let mut trace = Vec::new();
    let mut survivors = Vec::new();
    trace.push(format!(
        "profile {:?} in dimension {}, candidate Maslov numbers {:?}",
        problem.betti, problem.n, problem.candidate_maslov
    ));
    for &maslov in &problem.candidate_maslov {
        trace.push(format!("candidate N = {maslov}:"));
        let enumerated = enumerate_differentials(problem, maslov)?;
        trace.push(format!(
            "  {} admissible differentials square to zero",
            enumerated.len()
        ));
        for p in &enumerated {
            if !p.unit_survives {
                trace.push(format!(
                    "  [{}]: the unit class dies, so the ring collapses; \
                     homology reported as zero (module ranks were {:?})",
                    p.describe(p.complex.basis()),
                    p.module_window
                ));
            }
        }
        let (periodic, drops) = filter_by_periodicity(enumerated, &problem.shifts);
        for d in drops {
            trace.push(format!("  {d}"));
        }
        trace.push(format!(
            "  {} survive the periodicity shifts {:?}",
            periodic.len(),
            problem.shifts
        ));
        let (final_profiles, drops) = apply_nonvanishing_flag(periodic, problem);
        for d in drops {
            trace.push(format!("  {d}"));
        }
        trace.push(format!(
            "  {} survive the side conditions",
            final_profiles.len()
        ));
        survivors.extend(final_profiles);
    }
    for p in &survivors {
        trace.push(format!(
            "survivor: N = {}, {}, ranks {:?}, {:?}",
            p.maslov,
            p.describe(p.complex.basis()),
            p.homology.window(),
            p.tag
        ));
    }
    Ok(ClassificationOutcome { survivors, trace })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp_profile(n: i64) -> Vec<usize> {
        vec![1; (n + 1) as usize]
    }

    #[test]
    fn doubled_maslov_admits_only_zero() {
        // With N = 2(n+1) no slot fits inside [0, n].
        let n = 3;
        let problem =
            ClassificationProblem::new(n, rp_profile(n), vec![2 * (n + 1)]).unwrap();
        let profiles = enumerate_differentials(&problem, 2 * (n + 1)).unwrap();
        assert_eq!(profiles.len(), 1);
        assert!(profiles[0].complex.is_zero_differential());
    }

    #[test]
    fn single_slot_at_minimal_maslov() {
        // With N = n + 1 the only slot is from degree 0 to degree n.
        let n = 4;
        let problem = ClassificationProblem::new(n, rp_profile(n), vec![n + 1]).unwrap();
        let profiles = enumerate_differentials(&problem, n + 1).unwrap();
        assert_eq!(profiles.len(), 2);
        let nonzero: Vec<_> = profiles
            .iter()
            .filter(|p| !p.complex.is_zero_differential())
            .collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0].tag, Tag::Narrow);
    }

    #[test]
    fn sphere_profile_slots() {
        // Betti (1, 0, ..., 0, 1) with N = 2n: one slot, bottom to top.
        let n = 4;
        let mut betti = vec![0; (n + 1) as usize];
        betti[0] = 1;
        betti[n as usize] = 1;
        let problem = ClassificationProblem::new(n, betti, vec![2 * n]).unwrap();
        let profiles = enumerate_differentials(&problem, 2 * n).unwrap();
        // d = 0 and d(x0) = xn t both square to zero... the slot moves
        // degree 0 to -1 + 2n = n + 3 > n for n = 4, so only d = 0 remains.
        assert_eq!(profiles.len(), 1);
    }

    #[test]
    fn periodicity_kills_the_doubled_maslov() {
        let n = 3;
        let problem = ClassificationProblem::new(n, rp_profile(n), vec![2 * (n + 1)])
            .unwrap()
            .with_shifts(vec![2]);
        let profiles = enumerate_differentials(&problem, 2 * (n + 1)).unwrap();
        let (kept, _) = filter_by_periodicity(profiles, &problem.shifts);
        assert!(kept.is_empty());
    }

    #[test]
    fn zero_shift_keeps_everything() {
        let n = 3;
        let problem = ClassificationProblem::new(n, rp_profile(n), vec![n + 1]).unwrap();
        let profiles = enumerate_differentials(&problem, n + 1).unwrap();
        let count = profiles.len();
        let (kept, _) = filter_by_periodicity(profiles, &[0]);
        assert_eq!(kept.len(), count);
    }

    #[test]
    fn flag_disabled_is_identity() {
        let n = 2;
        let problem = ClassificationProblem::new(n, rp_profile(n), vec![n + 1]).unwrap();
        let profiles = enumerate_differentials(&problem, n + 1).unwrap();
        let count = profiles.len();
        let (kept, _) = apply_nonvanishing_flag(profiles, &problem);
        assert_eq!(kept.len(), count);
    }

    #[test]
    fn cap_is_enforced() {
        let n = 5;
        let mut problem =
            ClassificationProblem::new(n, vec![4, 4, 4, 4, 4, 1], vec![2]).unwrap();
        problem.bit_cap = 4;
        assert!(matches!(
            enumerate_differentials(&problem, 2),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }
}
