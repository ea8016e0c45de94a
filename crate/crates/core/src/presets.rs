//! The built-in example library.
//!
//! Every preset carries enough data for the verification commands to run
//! all applicable checks: complexes for the homology commands, full
//! structure-constant sets with ambient models for the axiom checks, disk
//! count tables for the torus invariants, classification problems for the
//! pipeline, and the packing scenarios with their exact rational bounds.

use num_rational::Ratio;

use crate::classify::{
    run_classification, ClassificationProblem, DifferentialProfile, SideCondition,
};
use crate::complexes::{Generator, GradedBasis, PearlComplex, RingMode};
use crate::error::Error;
use crate::gf2::BitMatrix;
use crate::quantum::{
    ambient_cpn, ambient_s2xs2, AmbientModel, ClassicalTables, QClass, QuantumStructure,
};
use crate::rings::GradedLaurent;
use crate::torus::{NuTable, TorusQuantumData};
use crate::Result;

/// The embedded circle in the plane: two generators, one quantum term.
pub fn circle_complex(ring: RingMode) -> PearlComplex {
    let basis = GradedBasis::from_pairs(&[("x1", 1), ("x0", 0)]).expect("fixed names");
    PearlComplex::new(
        basis,
        1,
        2,
        ring,
        vec![(
            "x0".to_string(),
            "x1".to_string(),
            GradedLaurent::monomial(-2, 1),
        )],
    )
    .expect("the circle complex is well formed")
}

/// Real projective space inside complex projective space: the wide structure
/// with one generator in each degree.
pub struct RpnPreset {
    pub n: i64,
    pub structure: QuantumStructure,
    pub ambient: AmbientModel,
    pub classical: ClassicalTables,
    /// Intersection pairing on the ambient basis.
    pub pd: BitMatrix,
    pub problem: ClassificationProblem,
}

/// Index and exponent of the generator representing `a_e` after wrapping
/// into `0 ..= n` using `a_(e - (n+1)) = a_e t`.
fn wrap(e: i64, n: i64) -> (usize, i64) {
    let period = n + 1;
    let reduced = e.rem_euclid(period);
    let power = (reduced - e) / period;
    (reduced as usize, power)
}

pub fn rpn_preset(n: i64) -> Result<RpnPreset> {
    if n < 2 {
        return Err(Error::Unsupported(format!(
            "projective-space preset needs n >= 2, got {n}"
        )));
    }
    let maslov = n + 1;
    let vd = -maslov;
    let lag = GradedBasis::new(
        (0..=n)
            .map(|d| Generator::new(format!("a{d}"), d))
            .collect(),
    )?;
    let g = lag.len();
    let wrapped_class = |e: i64| {
        let (idx, power) = wrap(e, n);
        let mut c = QClass::zero(g, vd);
        c.set_coeff(idx, GradedLaurent::monomial(vd, power));
        c
    };

    // a_i \u{2218} a_j = a_(i + j - n), wrapped.
    let mut product = vec![vec![QClass::zero(g, vd); g]; g];
    for i in 0..=n {
        for j in 0..=n {
            product[i as usize][j as usize] = wrapped_class(i + j - n);
        }
    }

    let ambient = ambient_cpn(n, maslov)?;
    let a_len = ambient.basis.len();

    // h^j acts by j-fold degree-two lowering: h^j \u{229b} a_i = a_(i - 2j).
    let mut action = vec![vec![QClass::zero(g, vd); g]; a_len];
    for j in 0..=n {
        for i in 0..=n {
            action[j as usize][i as usize] = wrapped_class(i - 2 * j);
        }
    }

    // The inclusion is determined by the action through the pairing: the
    // h^j coefficient of the image of a_i is the augmentation of
    // h^(n-j) \u{229b} a_i.
    let mut inclusion = vec![QClass::zero(a_len, vd); g];
    for i in 0..=n {
        let mut img = QClass::zero(a_len, vd);
        for j in 0..=n {
            let (idx, power) = wrap(i - 2 * (n - j), n);
            if idx == 0 {
                img.set_coeff(j as usize, GradedLaurent::monomial(vd, power));
            }
        }
        inclusion[i as usize] = img;
    }

    let structure = QuantumStructure::new(lag, n, maslov, product)?
        .with_ambient(ambient.basis.clone(), n + 1)
        .with_action(action)?
        .with_inclusion(inclusion)?;

    // Classical tables: intersection and exterior action without wrapping,
    // inclusion an isomorphism onto the even ambient classes.
    let usize_n = n as usize;
    let mut intersection = vec![vec![vec![false; g]; g]; g];
    for i in 0..=usize_n {
        for j in 0..=usize_n {
            let s = i as i64 + j as i64 - n;
            if s >= 0 {
                intersection[i][j][s as usize] = true;
            }
        }
    }
    let mut classical_action = vec![vec![vec![false; g]; g]; a_len];
    for j in 0..=usize_n {
        for i in 0..=usize_n {
            let e = i as i64 - 2 * j as i64;
            if e >= 0 {
                classical_action[j][i][e as usize] = true;
            }
        }
    }
    let mut classical_inclusion = vec![vec![false; a_len]; g];
    for i in 0..=usize_n {
        if i % 2 == 0 {
            classical_inclusion[i][usize_n - i / 2] = true;
        }
    }
    let classical = ClassicalTables {
        intersection: Some(intersection),
        action: Some(classical_action),
        inclusion: Some(classical_inclusion),
    };

    let mut pd = BitMatrix::zeros(a_len, a_len);
    for i in 0..=usize_n {
        pd.set(i, usize_n - i, true);
    }

    // The classification problem behind the uniqueness argument: Maslov
    // candidates are the two multiples of n + 1 compatible with two-torsion
    // first homology; the hyperplane class forces two-periodic ranks; a
    // vanishing outcome would force trivial integral first homology and
    // hence the doubled Maslov number.
    let problem = ClassificationProblem::new(n, vec![1; usize_n + 1], vec![maslov, 2 * maslov])?
        .with_shifts(vec![2])
        .with_side_conditions(vec![SideCondition::NarrowOnlyIfMaslov {
            allowed: vec![2 * maslov],
            reason: "vanishing homology would trivialize degree-one homology, doubling the Maslov number".to_string(),
        }]);

    Ok(RpnPreset {
        n,
        structure,
        ambient,
        classical,
        pd,
        problem,
    })
}

/// The wide zero-differential complex with one generator per degree.
pub fn rpn_complex(n: i64, ring: RingMode) -> Result<PearlComplex> {
    let basis = GradedBasis::new(
        (0..=n)
            .map(|d| Generator::new(format!("a{d}"), d))
            .collect(),
    )?;
    PearlComplex::with_zero_differential(basis, n, n + 1, ring)
}

/// A monotone two-torus preset: structure constants, ambient model,
/// classical tables, pairing, and the disk-count table.
pub struct TorusPreset {
    pub name: &'static str,
    pub structure: QuantumStructure,
    pub ambient: AmbientModel,
    pub classical: ClassicalTables,
    pub pd: BitMatrix,
    pub nu: NuTable,
    pub data: TorusQuantumData,
}

fn torus_preset(
    name: &'static str,
    data: TorusQuantumData,
    ambient: AmbientModel,
    nu: NuTable,
) -> Result<TorusPreset> {
    let base = crate::torus::product_table(&data)?;
    let lag = base.lag_basis().clone();
    let g = lag.len();
    let vd = -2;
    let a_len = ambient.basis.len();

    // Ambient classes act through the central class w t^c, where the power
    // is fixed by the degree: c = (4 - |a|) / 2.  This is multiplication by
    // a ring homomorphism image, so the module axioms reduce to the product
    // axioms below.
    let mut action = vec![vec![QClass::zero(g, vd); g]; a_len];
    for (a, gen) in ambient.basis.iter() {
        let c = (4 - gen.degree) / 2;
        for i in 0..g {
            let mut class = QClass::zero(g, vd);
            class.set_coeff(i, GradedLaurent::monomial(vd, c));
            action[a][i] = class;
        }
    }

    // Kronecker pairing: degrees must be complementary, and the two
    // middle classes of the split model pair across, not with themselves.
    let mut pd = BitMatrix::zeros(a_len, a_len);
    match name {
        "clifford" => {
            for i in 0..a_len {
                pd.set(i, a_len - 1 - i, true);
            }
        }
        _ => {
            let idx = |s: &str| ambient.basis.index_of(s).unwrap();
            pd.set(idx("[M]"), idx("[pt]"), true);
            pd.set(idx("[pt]"), idx("[M]"), true);
            pd.set(idx("F1"), idx("F2"), true);
            pd.set(idx("F2"), idx("F1"), true);
        }
    }

    // Inclusion determined by the action through the pairing.
    let mut inclusion = vec![QClass::zero(a_len, vd); g];
    let structure_tmp = base
        .clone()
        .with_ambient(ambient.basis.clone(), ambient.c_m)
        .with_action(action.clone())?;
    for i in 0..g {
        let xi = QClass::basis_class(g, vd, i);
        let mut img = QClass::zero(a_len, vd);
        for b in 0..a_len {
            // Coefficient at b: augmentation of (pairing dual of b) acting.
            let dual = (0..a_len).find(|&d| pd.get(d, b)).expect("perfect pairing");
            let dual_class = QClass::basis_class(a_len, vd, dual);
            let value = structure_tmp
                .augmentation(&structure_tmp.module_apply(&dual_class, &xi)?)?;
            img.set_coeff(b, value);
        }
        inclusion[i] = img;
    }

    let structure = structure_tmp.with_inclusion(inclusion)?;

    // Classical tables: the intersection ring of the torus; ambient classes
    // other than the fundamental one act by zero (the torus is
    // null-homologous mod 2 in both models); a point includes as a point.
    let idx = |s: &str| lag.index_of(s).unwrap();
    let (m, a, b, w) = (idx("m"), idx("a"), idx("b"), idx("w"));
    let mut intersection = vec![vec![vec![false; g]; g]; g];
    intersection[a][b][m] = true;
    intersection[b][a][m] = true;
    for i in 0..g {
        intersection[w][i][i] = true;
        intersection[i][w][i] = true;
    }
    // w . w = w was set twice; fix the diagonal overlap.
    intersection[w][w] = vec![false; g];
    intersection[w][w][w] = true;

    let mut classical_action = vec![vec![vec![false; g]; g]; a_len];
    let amb_top = ambient.basis.single_maximum(ambient.dim)?;
    for i in 0..g {
        classical_action[amb_top][i][i] = true;
    }
    let mut classical_inclusion = vec![vec![false; a_len]; g];
    let amb_pt = ambient
        .basis
        .iter()
        .find(|(_, gen)| gen.degree == 0)
        .map(|(i, _)| i)
        .expect("ambient point class");
    classical_inclusion[m][amb_pt] = true;

    let classical = ClassicalTables {
        intersection: Some(intersection),
        action: Some(classical_action),
        inclusion: Some(classical_inclusion),
    };

    Ok(TorusPreset {
        name,
        structure,
        ambient,
        classical,
        pd,
        nu,
        data,
    })
}

/// The standard disk-count table of the torus of equal absolute coordinates
/// in the projective plane.
pub fn clifford_nu() -> NuTable {
    NuTable::from_counts([(1, 0, 1), (0, 1, 1), (-1, -1, 1)])
}

/// The disk-count table of the product of two equators.
pub fn split_torus_nu() -> NuTable {
    NuTable::from_counts([(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)])
}

pub fn clifford_structure() -> TorusPreset {
    let data = TorusQuantumData::with_gammas(true, true, true, false);
    torus_preset(
        "clifford",
        data,
        ambient_cpn(2, 2).expect("N = 2 divides 2 C_M = 6"),
        clifford_nu(),
    )
    .expect("the clifford preset is well formed")
}

pub fn split_torus_structure() -> TorusPreset {
    let data = TorusQuantumData::with_gammas(true, true, false, false);
    torus_preset(
        "split_torus",
        data,
        ambient_s2xs2(2).expect("N = 2 divides 2 C_M = 4"),
        split_torus_nu(),
    )
    .expect("the split-torus preset is well formed")
}

/// Zero-differential sphere-profile complex in the quadric: generators in
/// degrees 0 and n only, minimal Maslov number 2n.
pub fn quadric_sphere_complex(n: i64, ring: RingMode) -> Result<PearlComplex> {
    if n < 2 {
        return Err(Error::Unsupported(format!(
            "quadric sphere preset needs n >= 2, got {n}"
        )));
    }
    let basis = GradedBasis::from_pairs(&[("x0", 0), ("xn", n)])?;
    PearlComplex::with_zero_differential(basis, n, 2 * n, ring)
}

/// Outcome of the quadric profile search.
pub struct QuadricSearch {
    /// False for odd dimensions, where the method gives no information.
    pub conclusive: bool,
    pub survivors: Vec<(Vec<usize>, DifferentialProfile)>,
    pub trace: Vec<String>,
}

/// Searches the candidate homology profiles of a Lagrangian with trivial
/// first integral homology in the quadric of even complex dimension `n`:
/// profiles have unit bottom and top Betti numbers and vanishing first one,
/// interior Betti numbers up to `max_betti`.
pub fn quadric_search(n: i64, max_betti: usize) -> Result<QuadricSearch> {
    if n < 2 {
        return Err(Error::Unsupported(format!(
            "quadric search needs n >= 2, got {n}"
        )));
    }
    let mut trace = Vec::new();
    if n % 2 != 0 {
        trace.push(format!(
            "dimension {n} is odd: the degree and periodicity method gives no information"
        ));
        return Ok(QuadricSearch {
            conclusive: false,
            survivors: Vec::new(),
            trace,
        });
    }

    // Even divisors of 2 C_M = 2n are the admissible Maslov numbers before
    // the topological side condition pins the value.
    let candidates: Vec<i64> = (2..=2 * n)
        .filter(|d| (2 * n) % d == 0 && d % 2 == 0)
        .collect();
    let side_conditions = vec![
        SideCondition::RequireMaslov {
            allowed: vec![2 * n],
            reason: "trivial first integral homology lifts all disk classes to spheres, so the minimal Maslov number is twice the minimal Chern number".to_string(),
        },
        SideCondition::DualitySymmetry {
            reason: "the duality pairing identifies ranks in complementary degrees".to_string(),
        },
        SideCondition::WideInteriorVanishing {
            reason: "declared geometric input: point constraints produce low-index disks through interior classes, contradicting the doubled Maslov number".to_string(),
        },
    ];

    // Enumerate candidate profiles.
    let interior = (n - 1) as usize; // degrees 1 ..= n-1
    let mut profiles: Vec<Vec<usize>> = vec![];
    let mut stack = vec![Vec::<usize>::new()];
    while let Some(partial) = stack.pop() {
        if partial.len() == interior {
            let mut betti = Vec::with_capacity(n as usize + 1);
            betti.push(1);
            betti.extend(&partial);
            betti.push(1);
            profiles.push(betti);
            continue;
        }
        // Degree 1 is pinned to zero by the hypothesis.
        let choices: Vec<usize> = if partial.is_empty() {
            vec![0]
        } else {
            (0..=max_betti).collect()
        };
        for c in choices.into_iter().rev() {
            let mut next = partial.clone();
            next.push(c);
            stack.push(next);
        }
    }
    profiles.sort();
    trace.push(format!(
        "{} candidate profiles with unit ends and vanishing degree-one homology",
        profiles.len()
    ));

    let mut survivors = Vec::new();
    for betti in profiles {
        let problem = ClassificationProblem::new(n, betti.clone(), candidates.clone())?
            .with_shifts(vec![-2 * n])
            .with_side_conditions(side_conditions.clone());
        let outcome = run_classification(&problem)?;
        if !outcome.survivors.is_empty() {
            trace.push(format!(
                "profile {betti:?}: {} surviving differentials",
                outcome.survivors.len()
            ));
        } else {
            trace.push(format!("profile {betti:?}: excluded"));
        }
        for profile in outcome.survivors {
            survivors.push((betti.clone(), profile));
        }
    }
    for (betti, profile) in &survivors {
        trace.push(format!(
            "survivor: profile {betti:?}, N = {}, {}, {:?}",
            profile.maslov,
            profile.describe(profile.complex.basis()),
            profile.tag
        ));
    }
    Ok(QuadricSearch {
        conclusive: true,
        survivors,
        trace,
    })
}

/// A named packing inequality with exact rational data in units of pi.
pub struct PackingScenario {
    pub name: String,
    pub inequality: String,
    pub relative_sq: Vec<Ratio<i64>>,
    pub absolute_sq: Vec<Ratio<i64>>,
    pub capacity: Ratio<i64>,
    /// The headline width or total bound the scenario reproduces.
    pub headline: Ratio<i64>,
}

/// The packing scenarios, each instantiated at its extremal configuration
/// so the evaluator reports zero slack at the stated bound.
pub fn packing_scenarios(n: i64) -> Vec<PackingScenario> {
    let q = Ratio::new;
    vec![
        PackingScenario {
            name: "two_torsion_complement".to_string(),
            inequality: "pi r^2 <= 1/2 for a ball in the complement".to_string(),
            relative_sq: vec![],
            absolute_sq: vec![q(1, 2)],
            capacity: q(1, 2),
            headline: q(1, 2),
        },
        PackingScenario {
            name: "clifford_relative_width".to_string(),
            inequality: format!("pi r^2 <= 2/{} for a relative ball", n + 1),
            relative_sq: vec![q(2, n + 1)],
            absolute_sq: vec![],
            capacity: q(1, n + 1),
            headline: q(2, n + 1),
        },
        PackingScenario {
            name: "clifford_complement_width".to_string(),
            inequality: format!("pi r^2 <= {n}/{} for a ball in the complement", n + 1),
            relative_sq: vec![],
            absolute_sq: vec![q(n, n + 1)],
            capacity: q(n, n + 1),
            headline: q(n, n + 1),
        },
        PackingScenario {
            name: "clifford_mixed_pair".to_string(),
            inequality: "pi r^2 + pi rho^2 / 2 <= 2/3 for a mixed pair in the plane".to_string(),
            // The literal coefficients follow the general formula with the
            // half-weighted ball embedded relatively.
            relative_sq: vec![q(2, 3)],
            absolute_sq: vec![q(1, 3)],
            capacity: q(2, 3),
            headline: q(2, 3),
        },
        PackingScenario {
            name: "quadric_three_balls".to_string(),
            inequality: "pi (rho1^2 + rho2^2 + rho3^2) <= 2 for three relative balls".to_string(),
            relative_sq: vec![q(2, 3), q(2, 3), q(2, 3)],
            absolute_sq: vec![],
            capacity: q(1, 1),
            headline: q(2, 1),
        },
    ]
}

/// Names understood by the command-line surface.
pub fn preset_names() -> Vec<(&'static str, &'static str)> {
    vec![
        ("circle_r2", "the embedded circle in the plane (complex document presets)"),
        ("rpn <n>", "real projective space in complex projective space"),
        ("clifford <2>", "the Clifford torus in the projective plane"),
        ("split_torus", "the product of equators in a product of spheres"),
        ("quadric_sphere <n>", "the sphere profile in the quadric"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::Tag;
    use crate::complexes::{homology_over_lambda, homology_over_lambda_plus};

    #[test]
    fn circle_preset_homology() {
        let lam = homology_over_lambda(&circle_complex(RingMode::Lambda)).unwrap();
        assert!(lam.is_zero());
        let plus = homology_over_lambda_plus(&circle_complex(RingMode::LambdaPlus)).unwrap();
        assert_eq!(plus.torsion.len(), 1);
    }

    #[test]
    fn rpn_structure_passes_all_axioms() {
        for n in 2..=4 {
            let preset = rpn_preset(n).unwrap();
            let product = preset.structure.check_product_axioms().unwrap();
            assert!(product.passes(), "n = {n}: {:?}", product.failures);
            assert!(product.commutative);
            let module = preset.structure.check_module_axioms(&preset.ambient).unwrap();
            assert!(module.passes(), "n = {n}: {:?}", module.failures);
            let inclusion = preset.structure.inclusion_check(&preset.ambient).unwrap();
            assert!(inclusion.passes(), "n = {n}: {:?}", inclusion.failures);
        }
    }

    #[test]
    fn rpn_ring_relations() {
        let preset = rpn_preset(4).unwrap();
        let qs = &preset.structure;
        let a = |i: i64| qs.lag_class(&format!("a{i}")).unwrap();
        // The subtop generator squares to the next one down.
        assert_eq!(
            qs.product_apply(&a(3), &a(3)).unwrap(),
            a(2),
        );
        // The hyperplane lowers degree by two.
        let h = qs.amb_class("h^1").unwrap();
        assert_eq!(qs.module_apply(&h, &a(3)).unwrap(), a(1));
        // Wrapped: acting on the bottom class lands one period up.
        let wrapped = qs.module_apply(&h, &a(0)).unwrap();
        let expected = a(3).scale(&GradedLaurent::monomial(-5, 1)).unwrap();
        assert_eq!(wrapped, expected);
    }

    #[test]
    fn torus_presets_pass_all_axioms() {
        for preset in [clifford_structure(), split_torus_structure()] {
            let product = preset.structure.check_product_axioms().unwrap();
            assert!(product.passes(), "{}: {:?}", preset.name, product.failures);
            let module = preset.structure.check_module_axioms(&preset.ambient).unwrap();
            assert!(module.passes(), "{}: {:?}", preset.name, module.failures);
            let inclusion = preset.structure.inclusion_check(&preset.ambient).unwrap();
            assert!(
                inclusion.passes(),
                "{}: {:?}",
                preset.name,
                inclusion.failures
            );
        }
    }

    #[test]
    fn clifford_is_noncommutative_split_is_not() {
        let c = clifford_structure();
        assert!(!c.structure.check_product_axioms().unwrap().commutative);
        let s = split_torus_structure();
        assert!(s.structure.check_product_axioms().unwrap().commutative);
    }

    #[test]
    fn rpn_classification_has_unique_wide_survivor() {
        for n in 2..=6 {
            let preset = rpn_preset(n).unwrap();
            let outcome = run_classification(&preset.problem).unwrap();
            assert_eq!(outcome.survivors.len(), 1, "n = {n}: {:?}", outcome.trace);
            let survivor = &outcome.survivors[0];
            assert_eq!(survivor.maslov, n + 1);
            assert!(survivor.complex.is_zero_differential());
            assert_eq!(survivor.tag, Tag::Wide);
            for i in -3..=(2 * n + 3) {
                assert_eq!(survivor.homology.rank_at(i), 1);
            }
        }
    }

    #[test]
    fn quadric_search_even_dimensions() {
        for n in [2, 4] {
            let search = quadric_search(n, 2).unwrap();
            assert!(search.conclusive);
            assert_eq!(search.survivors.len(), 1, "n = {n}: {:?}", search.trace);
            let (betti, profile) = &search.survivors[0];
            let mut expected = vec![0; n as usize + 1];
            expected[0] = 1;
            expected[n as usize] = 1;
            assert_eq!(betti, &expected);
            assert_eq!(profile.maslov, 2 * n);
            assert!(profile.complex.is_zero_differential());
            assert_eq!(profile.tag, Tag::Wide);
        }
    }

    #[test]
    fn quadric_search_odd_dimension_is_inconclusive() {
        let search = quadric_search(3, 2).unwrap();
        assert!(!search.conclusive);
        assert!(search.survivors.is_empty());
    }

    #[test]
    fn packing_headline_bounds() {
        let scenarios = packing_scenarios(2);
        let headlines: Vec<Ratio<i64>> = scenarios.iter().map(|s| s.headline).collect();
        assert_eq!(
            headlines,
            vec![
                Ratio::new(1, 2),
                Ratio::new(2, 3),
                Ratio::new(2, 3),
                Ratio::new(2, 3),
                Ratio::new(2, 1)
            ]
        );
        for s in scenarios {
            let d =
                crate::classify::packing_bound(&s.relative_sq, &s.absolute_sq, s.capacity)
                    .unwrap();
            assert!(d.satisfied, "{}", s.name);
            assert_eq!(d.slack, Ratio::new(0, 1), "{}", s.name);
        }
    }
}
