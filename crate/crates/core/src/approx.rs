//! Lower/upper approximations, boundaries and accuracy.
//!
//! One engine covers every family: lower is `{s : N(s) \ F ∈ 𝒦}` and upper is
//! `{s : N(s) ∩ F ∉ 𝒦}`. With the trivial ideal `{∅}` these are the classic
//! `N(s) ⊆ F` and `N(s) ∩ F ≠ ∅`.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::neighborhood::{Family, NeighborhoodSystem};
use crate::universe::Subset;

/// An exact accuracy, or `Indefinite` when the denominator vanishes for a
/// set that is not the exact empty set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AccuracyValue {
    Defined(Ratio<u64>),
    Indefinite,
}

impl AccuracyValue {
    pub fn one() -> Self {
        AccuracyValue::Defined(Ratio::from_integer(1))
    }

    pub fn ratio(numer: usize, denom: usize) -> Self {
        AccuracyValue::Defined(Ratio::new(numer as u64, denom as u64))
    }

    pub fn is_defined(self) -> bool {
        matches!(self, AccuracyValue::Defined(_))
    }

    pub fn value(self) -> Option<Ratio<u64>> {
        match self {
            AccuracyValue::Defined(r) => Some(r),
            AccuracyValue::Indefinite => None,
        }
    }

    pub fn to_f64(self) -> Option<f64> {
        self.value().map(|r| *r.numer() as f64 / *r.denom() as f64)
    }

    /// Reduced fraction, e.g. `1/4`, `1`, `0`.
    pub fn fraction(self) -> String {
        match self {
            AccuracyValue::Defined(r) => r.to_string(),
            AccuracyValue::Indefinite => "indefinite".to_string(),
        }
    }
}

impl fmt::Display for AccuracyValue {
    /// `1/4 (0.2500)`, or `indefinite`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_f64() {
            Some(x) => write!(f, "{} ({x:.4})", self.fraction()),
            None => f.write_str("indefinite"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AccuracyVariant {
    /// `|lower ∩ F| / |upper ∪ F|`
    IntersectOverUnion,
    /// `|lower| / |upper|`
    PlainRatio,
}

impl AccuracyVariant {
    /// The ρ family uses the plain ratio; every other family uses `∩F / ∪F`.
    pub fn default_for(family: Family) -> Self {
        match family {
            Family::Rho => AccuracyVariant::PlainRatio,
            _ => AccuracyVariant::IntersectOverUnion,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AccuracyVariant::IntersectOverUnion => "intersect-over-union",
            AccuracyVariant::PlainRatio => "plain-ratio",
        }
    }
}

impl std::str::FromStr for AccuracyVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "intersect-over-union" | "iou" => Ok(AccuracyVariant::IntersectOverUnion),
            "plain-ratio" | "plain" => Ok(AccuracyVariant::PlainRatio),
            _ => Err(Error::Parse(format!(
                "unknown accuracy variant `{s}` (expected iou or plain)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ApproximationResult {
    pub set: Subset,
    pub lower: Subset,
    pub upper: Subset,
    pub boundary: Subset,
    pub accuracy: AccuracyValue,
    pub exact: bool,
}

fn check_inputs(system: &NeighborhoodSystem, ideal: &Ideal, set: Subset) -> Result<()> {
    system.universe().ensure_same(ideal.universe(), "neighborhood system vs ideal")?;
    system.universe().ensure_fits(set, "approximated set")
}

pub(crate) fn lower_unchecked(system: &NeighborhoodSystem, ideal: &Ideal, set: Subset) -> Subset {
    let n = system.universe().len();
    Subset::from_indices(n, system.iter().filter(|(_, nb)| ideal.admits(*nb - set)).map(|(s, _)| s))
}

pub(crate) fn upper_unchecked(system: &NeighborhoodSystem, ideal: &Ideal, set: Subset) -> Subset {
    let n = system.universe().len();
    Subset::from_indices(n, system.iter().filter(|(_, nb)| !ideal.admits(*nb & set)).map(|(s, _)| s))
}

/// `{s ∈ U : N(s) \ F ∈ 𝒦}`.
pub fn lower_approx(system: &NeighborhoodSystem, ideal: &Ideal, set: Subset) -> Result<Subset> {
    check_inputs(system, ideal, set)?;
    Ok(lower_unchecked(system, ideal, set))
}

/// `{s ∈ U : N(s) ∩ F ∉ 𝒦}`.
pub fn upper_approx(system: &NeighborhoodSystem, ideal: &Ideal, set: Subset) -> Result<Subset> {
    check_inputs(system, ideal, set)?;
    Ok(upper_unchecked(system, ideal, set))
}

/// Accuracy with the empty-set convention: a zero denominator gives 1 when
/// `F`, lower and upper are all empty, and `Indefinite` otherwise.
pub fn accuracy(set: Subset, lower: Subset, upper: Subset, variant: AccuracyVariant) -> AccuracyValue {
    let (numer, denom) = match variant {
        AccuracyVariant::IntersectOverUnion => ((lower & set).len(), (upper | set).len()),
        AccuracyVariant::PlainRatio => (lower.len(), upper.len()),
    };
    if denom > 0 {
        AccuracyValue::ratio(numer, denom)
    } else if set.is_empty() && lower.is_empty() && upper.is_empty() {
        AccuracyValue::one()
    } else {
        AccuracyValue::Indefinite
    }
}

pub fn approx_report(
    system: &NeighborhoodSystem,
    ideal: &Ideal,
    set: Subset,
    variant: AccuracyVariant,
) -> Result<ApproximationResult> {
    check_inputs(system, ideal, set)?;
    let lower = lower_unchecked(system, ideal, set);
    let upper = upper_unchecked(system, ideal, set);
    Ok(ApproximationResult {
        set,
        lower,
        upper,
        boundary: upper - lower,
        accuracy: accuracy(set, lower, upper, variant),
        exact: lower == upper,
    })
}

/// One report per subset of the universe, in bit-pattern order.
pub fn approx_table(
    system: &NeighborhoodSystem,
    ideal: &Ideal,
    variant: AccuracyVariant,
    max_n: usize,
) -> Result<Vec<ApproximationResult>> {
    let n = system.universe().len();
    if n > max_n {
        return Err(Error::SizeLimit(format!(
            "all-subsets mode is capped at {max_n} elements, universe has {n}"
        )));
    }
    system
        .universe()
        .power_set()
        .map(|f| approx_report(system, ideal, f, variant))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::enumerate_ideals;
    use crate::neighborhood::{ApproximationSpace, NeighborhoodKind};
    use crate::relation::{enumerate_relations, FiniteRelation};
    use crate::universe::Universe;

    fn pqst() -> Universe {
        Universe::new(["p", "q", "s", "t"]).unwrap()
    }

    fn set(names: &[&str]) -> Subset {
        pqst().subset(names.iter().copied()).unwrap()
    }

    fn rel(pairs: &[(&str, &str)]) -> FiniteRelation {
        FiniteRelation::from_named_pairs(pqst(), pairs.iter().copied()).unwrap()
    }

    fn reflexive_example() -> FiniteRelation {
        rel(&[
            ("p", "s"), ("p", "t"), ("q", "t"), ("t", "q"),
            ("p", "p"), ("q", "q"), ("s", "s"), ("t", "t"),
        ])
    }

    fn example_3_7() -> FiniteRelation {
        rel(&[
            ("p", "p"), ("p", "s"), ("p", "t"), ("q", "t"),
            ("q", "q"), ("s", "s"), ("t", "q"), ("t", "t"),
        ])
    }

    /// Element loop straight off the membership conditions.
    fn oracle_lower(nbhds: &[Subset], carrier: Subset, f: Subset) -> Subset {
        let n = f.universe_len();
        let mut out = Subset::empty(n);
        for s in 0..n {
            let outside: Vec<usize> = nbhds[s].iter().filter(|x| !f.contains(*x)).collect();
            if outside.iter().all(|x| carrier.contains(*x)) {
                out.insert(s);
            }
        }
        out
    }

    fn oracle_upper(nbhds: &[Subset], carrier: Subset, f: Subset) -> Subset {
        let n = f.universe_len();
        let mut out = Subset::empty(n);
        for s in 0..n {
            if nbhds[s].iter().any(|x| f.contains(x) && !carrier.contains(x)) {
                out.insert(s);
            }
        }
        out
    }

    #[test]
    fn lower_of_universe_is_universe() {
        let u = pqst();
        let sys = NeighborhoodSystem::new(&reflexive_example(), crate::Family::Rho, NeighborhoodKind::Before, None).unwrap();
        assert_eq!(lower_approx(&sys, &Ideal::trivial(u.clone()), u.full()).unwrap(), u.full());
    }

    #[test]
    fn omega_after_on_reflexive_example() {
        let u = pqst();
        let k = Ideal::trivial(u.clone());
        let sys = NeighborhoodSystem::new(&reflexive_example(), crate::Family::Omega, NeighborhoodKind::After, None).unwrap();
        let f = set(&["q", "t"]);
        let lower = lower_approx(&sys, &k, f).unwrap();
        assert_eq!(lower, oracle_lower(sys.sets(), k.carrier(), f));
        assert_eq!(lower, set(&["q", "t"]));

        let f = set(&["s"]);
        let upper = upper_approx(&sys, &k, f).unwrap();
        assert_eq!(upper, oracle_upper(sys.sets(), k.carrier(), f));
        assert_eq!(upper, set(&["p", "s"]));
    }

    #[test]
    fn ik_after_on_example_3_7() {
        let u = pqst();
        let k = Ideal::from_carrier(u.clone(), set(&["s", "t"])).unwrap();
        let space = ApproximationSpace::new(example_3_7(), k.clone()).unwrap();
        let sys = space.system(crate::Family::IK, NeighborhoodKind::After);
        let f = set(&["p"]);
        let lower = lower_approx(&sys, &k, f).unwrap();
        assert_eq!(lower, oracle_lower(sys.sets(), k.carrier(), f));
        // 𝕀^𝒦_a = p:{p}, q:{q,t}, s:∅, t:{q,t}
        assert_eq!(lower, set(&["p", "s"]));
    }

    #[test]
    fn upper_of_empty_set_is_empty() {
        let u = Universe::canonical(3).unwrap();
        for r in enumerate_relations(3, None).unwrap().step_by(11) {
            for k in enumerate_ideals(&u) {
                let sys = NeighborhoodSystem::new(&r, crate::Family::IK, NeighborhoodKind::After, Some(&k)).unwrap();
                assert!(upper_approx(&sys, &k, u.empty()).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn symmetric_transitive_example_has_empty_upper() {
        let u = pqst();
        let k = Ideal::from_carrier(u.clone(), set(&["t"])).unwrap();
        let sys = NeighborhoodSystem::new(&rel(&[("t", "t")]), crate::Family::IK, NeighborhoodKind::After, Some(&k)).unwrap();
        assert!(upper_approx(&sys, &k, set(&["t"])).unwrap().is_empty());
    }

    #[test]
    fn empty_set_conventions() {
        let u = pqst();
        let e = u.empty();
        assert_eq!(accuracy(e, e, e, AccuracyVariant::IntersectOverUnion), AccuracyValue::one());
        assert_eq!(accuracy(e, e, e, AccuracyVariant::PlainRatio), AccuracyValue::one());
        let lower = set(&["q", "s", "t"]);
        assert_eq!(accuracy(e, lower, e, AccuracyVariant::IntersectOverUnion), AccuracyValue::Indefinite);
        // Nonempty F with an empty plain-ratio denominator.
        assert_eq!(accuracy(set(&["p"]), e, e, AccuracyVariant::PlainRatio), AccuracyValue::Indefinite);
    }

    #[test]
    fn constant_empty_system_on_full_set() {
        let u = pqst();
        let sys = NeighborhoodSystem::from_sets(u.clone(), vec![u.empty(); 4]).unwrap();
        let r = approx_report(&sys, &Ideal::trivial(u.clone()), u.full(), AccuracyVariant::IntersectOverUnion).unwrap();
        assert_eq!(r.lower, u.full());
        assert!(r.upper.is_empty());
        assert_eq!(r.boundary, u.empty());
        assert_eq!(r.accuracy, AccuracyValue::one());
        assert!(!r.exact);
    }

    #[test]
    fn universe_mismatch_is_reported() {
        let u = pqst();
        let sys = NeighborhoodSystem::from_sets(u.clone(), vec![u.empty(); 4]).unwrap();
        let k3 = Ideal::trivial(Universe::canonical(3).unwrap());
        assert!(matches!(lower_approx(&sys, &k3, u.full()), Err(Error::UniverseMismatch(_))));
        let k = Ideal::trivial(u);
        assert!(matches!(upper_approx(&sys, &k, Subset::empty(3)), Err(Error::UniverseMismatch(_))));
    }

    #[test]
    fn accuracy_rendering() {
        assert_eq!(AccuracyValue::ratio(1, 4).to_string(), "1/4 (0.2500)");
        assert_eq!(AccuracyValue::ratio(2, 4).fraction(), "1/2");
        assert_eq!(AccuracyValue::one().to_string(), "1 (1.0000)");
        assert_eq!(AccuracyValue::Indefinite.to_string(), "indefinite");
    }

    #[test]
    fn exhaustive_operator_laws_at_three() {
        let u = Universe::canonical(3).unwrap();
        for r in enumerate_relations(3, None).unwrap().step_by(3) {
            for k in enumerate_ideals(&u) {
                let space = ApproximationSpace::new(r.clone(), k.clone()).unwrap();
                for fam in crate::Family::ALL {
                    let sys = space.system(fam, NeighborhoodKind::Union);
                    for f1 in u.power_set() {
                        let a = approx_report(&sys, &k, f1, AccuracyVariant::IntersectOverUnion).unwrap();
                        assert_eq!(a.lower, oracle_lower(sys.sets(), k.carrier(), f1));
                        assert_eq!(a.upper, oracle_upper(sys.sets(), k.carrier(), f1));
                        assert_eq!(a.boundary, a.upper - a.lower);
                        if !f1.is_empty() {
                            assert!(a.accuracy.is_defined());
                        }
                        for f2 in u.power_set().filter(|f2| f1.is_subset(*f2)) {
                            let b = approx_report(&sys, &k, f2, AccuracyVariant::IntersectOverUnion).unwrap();
                            assert!(a.lower.is_subset(b.lower));
                            assert!(a.upper.is_subset(b.upper));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn table_cap() {
        let u = Universe::canonical(6).unwrap();
        let sys = NeighborhoodSystem::from_sets(u.clone(), vec![u.empty(); 6]).unwrap();
        assert!(matches!(
            approx_table(&sys, &Ideal::trivial(u.clone()), AccuracyVariant::PlainRatio, 5),
            Err(Error::SizeLimit(_))
        ));
        assert_eq!(approx_table(&sys, &Ideal::trivial(u), AccuracyVariant::PlainRatio, 6).unwrap().len(), 64);
    }
}
