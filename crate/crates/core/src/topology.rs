//! Topologies generated from neighborhood systems, and their interior/closure
//! approximations.

use crate::approx::AccuracyValue;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::neighborhood::NeighborhoodSystem;
use crate::universe::{Subset, Universe};

/// Largest universe whose power set is filtered during generation.
pub const MAX_TOPOLOGY_N: usize = 20;

/// A duplicate-free family of subsets, kept sorted by (cardinality, bit pattern).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    universe: Universe,
    members: Vec<Subset>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(universe: Universe, members: I) -> Result<Self> {
        let mut members: Vec<Subset> = members.into_iter().collect();
        for m in &members {
            universe.ensure_fits(*m, "family member")?;
        }
        members.sort_by_key(|m| (m.len(), m.bits()));
        members.dedup();
        Ok(SetFamily { universe, members })
    }

    pub fn power_set(universe: Universe) -> Self {
        let members: Vec<Subset> = universe.power_set().collect();
        SetFamily::new(universe, members).expect("power set fits its universe")
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: Subset) -> bool {
        self.members
            .binary_search_by_key(&(set.len(), set.bits()), |m| (m.len(), m.bits()))
            .is_ok()
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.members.iter().all(|m| other.contains(*m))
    }

    /// First member of `self` missing from `other`.
    pub fn first_missing_from(&self, other: &SetFamily) -> Option<Subset> {
        self.members.iter().copied().find(|m| !other.contains(*m))
    }

    /// Member name lists in canonical order.
    pub fn to_names(&self) -> Vec<Vec<String>> {
        self.members.iter().map(|m| self.universe.set_names(*m)).collect()
    }
}

fn guard(universe: &Universe) -> Result<()> {
    if universe.len() > MAX_TOPOLOGY_N {
        Err(Error::SizeLimit(format!(
            "topology generation filters all 2^n subsets; n = {} exceeds {MAX_TOPOLOGY_N}",
            universe.len()
        )))
    } else {
        Ok(())
    }
}

/// `{F ⊆ U : N(s) ⊆ F for all s ∈ F}`.
pub fn generate_topology(system: &NeighborhoodSystem) -> Result<SetFamily> {
    guard(system.universe())?;
    let members = system
        .universe()
        .power_set()
        .filter(|f| f.iter().all(|s| system.get(s).is_subset(*f)));
    SetFamily::new(system.universe().clone(), members)
}

/// `{F ⊆ U : N(s) \ F ∈ 𝒦 for all s ∈ F}`.
pub fn generate_topology_ideal(system: &NeighborhoodSystem, ideal: &Ideal) -> Result<SetFamily> {
    system.universe().ensure_same(ideal.universe(), "neighborhood system vs ideal")?;
    guard(system.universe())?;
    let members = system
        .universe()
        .power_set()
        .filter(|f| f.iter().all(|s| ideal.admits(system.get(s) - *f)));
    SetFamily::new(system.universe().clone(), members)
}

/// `∅, U ∈ T` and closure under pairwise union and intersection, which is
/// enough on a finite universe.
pub fn is_topology(family: &SetFamily) -> bool {
    first_axiom_violation(family).is_none()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    MissingEmpty,
    MissingUniverse,
    Union(Subset, Subset),
    Intersection(Subset, Subset),
}

pub fn first_axiom_violation(family: &SetFamily) -> Option<AxiomViolation> {
    let u = &family.universe;
    if !family.contains(u.empty()) {
        return Some(AxiomViolation::MissingEmpty);
    }
    if !family.contains(u.full()) {
        return Some(AxiomViolation::MissingUniverse);
    }
    let m = &family.members;
    for (i, &a) in m.iter().enumerate() {
        for &b in &m[i + 1..] {
            if !family.contains(a | b) {
                return Some(AxiomViolation::Union(a, b));
            }
            if !family.contains(a & b) {
                return Some(AxiomViolation::Intersection(a, b));
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TopoApproximationResult {
    pub set: Subset,
    pub interior: Subset,
    pub closure: Subset,
    pub boundary: Subset,
    pub accuracy: AccuracyValue,
}

pub(crate) fn interior_unchecked(family: &SetFamily, set: Subset) -> Subset {
    family
        .members
        .iter()
        .filter(|m| m.is_subset(set))
        .fold(family.universe.empty(), |acc, m| acc | *m)
}

/// Complement of the union of open sets missing `set`.
pub(crate) fn closure_unchecked(family: &SetFamily, set: Subset) -> Subset {
    let outside = family
        .members
        .iter()
        .filter(|m| m.is_disjoint(set))
        .fold(family.universe.empty(), |acc, m| acc | *m);
    !outside
}

/// Interior, closure, boundary and `|interior| / |closure|` of `set`.
/// The accuracy is `Indefinite` when the closure is empty.
pub fn topo_approx(family: &SetFamily, set: Subset) -> Result<TopoApproximationResult> {
    family.universe.ensure_fits(set, "approximated set")?;
    if let Some(v) = first_axiom_violation(family) {
        return Err(Error::Precondition(format!("family is not a topology ({v:?})")));
    }
    let interior = interior_unchecked(family, set);
    let closure = closure_unchecked(family, set);
    let accuracy = if closure.is_empty() {
        AccuracyValue::Indefinite
    } else {
        AccuracyValue::ratio(interior.len(), closure.len())
    };
    Ok(TopoApproximationResult {
        set,
        interior,
        closure,
        boundary: closure - interior,
        accuracy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::neighborhood::{ApproximationSpace, Family, NeighborhoodKind};
    use crate::relation::FiniteRelation;
    use proptest::prelude::*;

    fn pqst() -> Universe {
        Universe::new(["p", "q", "s", "t"]).unwrap()
    }

    fn set(names: &[&str]) -> Subset {
        pqst().subset(names.iter().copied()).unwrap()
    }

    fn example_3_7_space() -> ApproximationSpace {
        let r = FiniteRelation::from_named_pairs(
            pqst(),
            [
                ("p", "p"), ("p", "s"), ("p", "t"), ("q", "t"),
                ("q", "q"), ("s", "s"), ("t", "q"), ("t", "t"),
            ],
        )
        .unwrap();
        let k = Ideal::from_carrier(pqst(), set(&["s", "t"])).unwrap();
        ApproximationSpace::new(r, k).unwrap()
    }

    #[test]
    fn constant_systems() {
        let u = pqst();
        let empty = NeighborhoodSystem::from_sets(u.clone(), vec![u.empty(); 4]).unwrap();
        assert_eq!(generate_topology(&empty).unwrap(), SetFamily::power_set(u.clone()));
        let full = NeighborhoodSystem::from_sets(u.clone(), vec![u.full(); 4]).unwrap();
        let t = generate_topology(&full).unwrap();
        assert_eq!(t.members(), &[u.empty(), u.full()]);
    }

    #[test]
    fn axiom_checks() {
        let u = Universe::new(["p", "q", "s"]).unwrap();
        let indiscrete = SetFamily::new(u.clone(), [u.empty(), u.full()]).unwrap();
        assert!(is_topology(&indiscrete));
        assert!(is_topology(&SetFamily::power_set(u.clone())));
        let p = u.subset(["p"]).unwrap();
        let q = u.subset(["q"]).unwrap();
        let broken = SetFamily::new(u.clone(), [u.empty(), p, q, u.full()]).unwrap();
        assert_eq!(first_axiom_violation(&broken), Some(AxiomViolation::Union(p, q)));
        let no_empty = SetFamily::new(u.clone(), [u.full()]).unwrap();
        assert_eq!(first_axiom_violation(&no_empty), Some(AxiomViolation::MissingEmpty));
    }

    #[test]
    fn omega_after_family_is_a_topology() {
        let space = example_3_7_space();
        let t = generate_topology(&space.system(Family::Omega, NeighborhoodKind::After)).unwrap();
        // Brute-force closure check.
        for &a in t.members() {
            for &b in t.members() {
                assert!(t.contains(a | b) && t.contains(a & b));
            }
        }
    }

    #[test]
    fn example_3_7_families() {
        let space = example_3_7_space();
        let k = space.ideal();
        let min_a = generate_topology_ideal(&space.system(Family::IK, NeighborhoodKind::MinAfter), k).unwrap();
        assert_eq!(min_a.len(), 16);
        let a = generate_topology_ideal(&space.system(Family::IK, NeighborhoodKind::After), k).unwrap();
        let expected = SetFamily::new(
            pqst(),
            [
                set(&["p"]), set(&["q"]), set(&["s"]), set(&["p", "q"]), set(&["p", "s"]),
                set(&["q", "s"]), set(&["q", "t"]), set(&["p", "q", "s"]), set(&["p", "q", "t"]),
                set(&["q", "s", "t"]), set(&[]), pqst().full(),
            ],
        )
        .unwrap();
        assert_eq!(a, expected);
        assert!(!min_a.is_subfamily_of(&a));
        assert!(a.is_subfamily_of(&min_a));
    }

    #[test]
    fn trivial_ideal_generation_matches_plain() {
        let space = example_3_7_space();
        for kind in NeighborhoodKind::ALL {
            let sys = space.system(Family::Rho, kind);
            assert_eq!(
                generate_topology_ideal(&sys, &Ideal::trivial(pqst())).unwrap(),
                generate_topology(&sys).unwrap()
            );
        }
    }

    #[test]
    fn topo_approx_examples() {
        let u = pqst();
        let discrete = SetFamily::power_set(u.clone());
        let f = set(&["q", "s"]);
        let r = topo_approx(&discrete, f).unwrap();
        assert_eq!((r.interior, r.closure), (f, f));
        assert_eq!(r.accuracy, AccuracyValue::one());

        let indiscrete = SetFamily::new(u.clone(), [u.empty(), u.full()]).unwrap();
        let r = topo_approx(&indiscrete, f).unwrap();
        assert_eq!((r.interior, r.closure), (u.empty(), u.full()));
        assert_eq!(r.accuracy, AccuracyValue::ratio(0, 4));

        let r = topo_approx(&indiscrete, u.empty()).unwrap();
        assert_eq!(r.accuracy, AccuracyValue::Indefinite);

        let bad = SetFamily::new(u.clone(), [u.full()]).unwrap();
        assert!(matches!(topo_approx(&bad, f), Err(Error::Precondition(_))));
    }

    #[test]
    fn topo_approx_on_example_3_7() {
        let space = example_3_7_space();
        let t = generate_topology_ideal(&space.system(Family::IK, NeighborhoodKind::After), space.ideal()).unwrap();
        let f = set(&["p", "t"]);
        let r = topo_approx(&t, f).unwrap();
        // Brute force: union of members inside F, intersection of closed supersets.
        let interior = t.members().iter().filter(|m| m.is_subset(f)).fold(pqst().empty(), |a, m| a | *m);
        let closure = t
            .members()
            .iter()
            .map(|m| !*m)
            .filter(|c| f.is_subset(*c))
            .fold(pqst().full(), |a, c| a & c);
        assert_eq!(r.interior, interior);
        assert_eq!(r.closure, closure);
        assert_eq!(r.interior, set(&["p"]));
        assert_eq!(r.closure, set(&["p", "t"]));
        assert_eq!(r.accuracy, AccuracyValue::ratio(1, 2));
    }

    fn arb_topology() -> impl Strategy<Value = SetFamily> {
        // Any neighborhood map on 4 points generates a topology.
        proptest::collection::vec(0u64..16, 4).prop_map(|bits| {
            let u = Universe::canonical(4).unwrap();
            let sys = NeighborhoodSystem::from_sets(u.clone(), bits.into_iter().map(|b| Subset::from_bits(4, b)).collect()).unwrap();
            generate_topology(&sys).unwrap()
        })
    }

    proptest! {
        #[test]
        fn interior_and_closure_laws(t in arb_topology(), a in 0u64..16, b in 0u64..16) {
            prop_assert!(is_topology(&t));
            let (a, b) = (Subset::from_bits(4, a), Subset::from_bits(4, b));
            let ra = topo_approx(&t, a).unwrap();
            prop_assert!(ra.interior.is_subset(a) && a.is_subset(ra.closure));
            prop_assert_eq!(interior_unchecked(&t, ra.interior), ra.interior);
            prop_assert_eq!(closure_unchecked(&t, ra.closure), ra.closure);
            prop_assert_eq!(ra.boundary, ra.closure - ra.interior);
            if a.is_subset(b) {
                let rb = topo_approx(&t, b).unwrap();
                prop_assert!(ra.interior.is_subset(rb.interior));
                prop_assert!(ra.closure.is_subset(rb.closure));
            }
        }
    }
}
