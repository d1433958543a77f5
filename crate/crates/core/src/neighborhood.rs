//! The four neighborhood families (ω, ρ, 𝕀, 𝕀^𝒦) over the eight kinds of Ω.
//!
//! Every family is built from the four *base* ω-neighborhoods of a relation:
//! after-sets, before-sets, and their minimal counterparts. The combined
//! kinds (`i`, `u`, `<i>`, `<u>`) are always the pointwise intersection or
//! union of a family's own `a`/`b` (or `<a>`/`<b>`) neighborhoods; they are
//! never derived from the combined ω-neighborhood.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::relation::FiniteRelation;
use crate::universe::{Subset, Universe};

/// One of the eight symbols of Ω.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NeighborhoodKind {
    After,
    Before,
    MinAfter,
    MinBefore,
    Intersection,
    Union,
    MinIntersection,
    MinUnion,
}

/// The four neighborhoods every kind is assembled from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseKind {
    After,
    Before,
    MinAfter,
    MinBefore,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Composition {
    Base(BaseKind),
    Meet(BaseKind, BaseKind),
    Join(BaseKind, BaseKind),
}

impl NeighborhoodKind {
    pub const ALL: [NeighborhoodKind; 8] = [
        NeighborhoodKind::After,
        NeighborhoodKind::Before,
        NeighborhoodKind::MinAfter,
        NeighborhoodKind::MinBefore,
        NeighborhoodKind::Intersection,
        NeighborhoodKind::Union,
        NeighborhoodKind::MinIntersection,
        NeighborhoodKind::MinUnion,
    ];

    /// `{a, b, i, u}`, the kinds that have a minimal counterpart.
    pub const PLAIN: [NeighborhoodKind; 4] = [
        NeighborhoodKind::After,
        NeighborhoodKind::Before,
        NeighborhoodKind::Intersection,
        NeighborhoodKind::Union,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            NeighborhoodKind::After => "a",
            NeighborhoodKind::Before => "b",
            NeighborhoodKind::MinAfter => "<a>",
            NeighborhoodKind::MinBefore => "<b>",
            NeighborhoodKind::Intersection => "i",
            NeighborhoodKind::Union => "u",
            NeighborhoodKind::MinIntersection => "<i>",
            NeighborhoodKind::MinUnion => "<u>",
        }
    }

    pub fn is_minimal(self) -> bool {
        matches!(
            self,
            NeighborhoodKind::MinAfter
                | NeighborhoodKind::MinBefore
                | NeighborhoodKind::MinIntersection
                | NeighborhoodKind::MinUnion
        )
    }

    /// `j ↦ <j>` for `j ∈ {a, b, i, u}`.
    pub fn minimal(self) -> Option<NeighborhoodKind> {
        match self {
            NeighborhoodKind::After => Some(NeighborhoodKind::MinAfter),
            NeighborhoodKind::Before => Some(NeighborhoodKind::MinBefore),
            NeighborhoodKind::Intersection => Some(NeighborhoodKind::MinIntersection),
            NeighborhoodKind::Union => Some(NeighborhoodKind::MinUnion),
            _ => None,
        }
    }

    pub fn composition(self) -> Composition {
        use BaseKind as B;
        match self {
            NeighborhoodKind::After => Composition::Base(B::After),
            NeighborhoodKind::Before => Composition::Base(B::Before),
            NeighborhoodKind::MinAfter => Composition::Base(B::MinAfter),
            NeighborhoodKind::MinBefore => Composition::Base(B::MinBefore),
            NeighborhoodKind::Intersection => Composition::Meet(B::After, B::Before),
            NeighborhoodKind::Union => Composition::Join(B::After, B::Before),
            NeighborhoodKind::MinIntersection => Composition::Meet(B::MinAfter, B::MinBefore),
            NeighborhoodKind::MinUnion => Composition::Join(B::MinAfter, B::MinBefore),
        }
    }
}

impl fmt::Display for NeighborhoodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for NeighborhoodKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NeighborhoodKind::ALL
            .into_iter()
            .find(|k| k.symbol() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown neighborhood kind `{s}` (expected one of a, b, <a>, <b>, i, u, <i>, <u>)"
                ))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Omega,
    Rho,
    I,
    #[serde(rename = "ik")]
    IK,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Omega, Family::Rho, Family::I, Family::IK];

    pub fn name(self) -> &'static str {
        match self {
            Family::Omega => "omega",
            Family::Rho => "rho",
            Family::I => "i",
            Family::IK => "ik",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "omega" | "ω" => Ok(Family::Omega),
            "rho" | "ρ" => Ok(Family::Rho),
            "i" => Ok(Family::I),
            "ik" => Ok(Family::IK),
            _ => Err(Error::Parse(format!(
                "unknown neighborhood family `{s}` (expected omega, rho, i, ik)"
            ))),
        }
    }
}

/// The four base ω-neighborhood maps of a relation, computed once.
#[derive(Clone, Debug)]
pub struct BaseNeighborhoods {
    universe: Universe,
    after: Vec<Subset>,
    before: Vec<Subset>,
    min_after: Vec<Subset>,
    min_before: Vec<Subset>,
}

/// `∩{sets[t] : s ∈ sets[t]}`, or `∅` when no set contains `s`.
fn minimal_of(sets: &[Subset], s: usize) -> Subset {
    let n = sets.len();
    sets.iter()
        .filter(|set| set.contains(s))
        .fold(None, |acc: Option<Subset>, set| Some(acc.map_or(*set, |a| a & *set)))
        .unwrap_or_else(|| Subset::empty(n))
}

impl BaseNeighborhoods {
    pub fn new(relation: &FiniteRelation) -> Self {
        let n = relation.len();
        let after: Vec<Subset> = (0..n).map(|s| relation.successors(s)).collect();
        let before: Vec<Subset> = (0..n).map(|s| relation.predecessors(s)).collect();
        let min_after = (0..n).map(|s| minimal_of(&after, s)).collect();
        let min_before = (0..n).map(|s| minimal_of(&before, s)).collect();
        BaseNeighborhoods {
            universe: relation.universe().clone(),
            after,
            before,
            min_after,
            min_before,
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.after.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn base(&self, base: BaseKind) -> &[Subset] {
        match base {
            BaseKind::After => &self.after,
            BaseKind::Before => &self.before,
            BaseKind::MinAfter => &self.min_after,
            BaseKind::MinBefore => &self.min_before,
        }
    }

    fn combine(&self, kind: NeighborhoodKind, s: usize, f: impl Fn(BaseKind, usize) -> Subset) -> Subset {
        match kind.composition() {
            Composition::Base(b) => f(b, s),
            Composition::Meet(x, y) => f(x, s) & f(y, s),
            Composition::Join(x, y) => f(x, s) | f(y, s),
        }
    }

    pub fn omega(&self, kind: NeighborhoodKind, s: usize) -> Subset {
        self.combine(kind, s, |b, s| self.base(b)[s])
    }

    fn rho_base(&self, base: BaseKind, s: usize) -> Subset {
        let sets = self.base(base);
        let target = sets[s];
        Subset::from_indices(self.len(), (0..self.len()).filter(|&t| sets[t] == target))
    }

    /// `{t : ω(t) = ω(s)}` for base kinds, combined pointwise otherwise.
    pub fn rho(&self, kind: NeighborhoodKind, s: usize) -> Subset {
        self.combine(kind, s, |b, s| self.rho_base(b, s))
    }

    fn ik_base(&self, base: BaseKind, s: usize, carrier: Subset) -> Subset {
        let sets = self.base(base);
        let own = sets[s];
        Subset::from_indices(
            self.len(),
            (0..self.len()).filter(|&t| !(sets[t] & own).is_subset(carrier)),
        )
    }

    /// `{t : ω(t) ∩ ω(s) ≠ ∅}` for base kinds, combined pointwise otherwise.
    pub fn intersecting(&self, kind: NeighborhoodKind, s: usize) -> Subset {
        self.intersecting_outside(kind, s, Subset::empty(self.len()))
    }

    /// `{t : ω(t) ∩ ω(s) ∉ 𝒦}` where `𝒦` is the ideal with the given carrier.
    pub fn intersecting_outside(&self, kind: NeighborhoodKind, s: usize, carrier: Subset) -> Subset {
        self.combine(kind, s, |b, s| self.ik_base(b, s, carrier))
    }

    /// Dispatch by family; the ideal is only consulted for [`Family::IK`].
    pub fn neighborhood(&self, family: Family, kind: NeighborhoodKind, s: usize, ideal: &Ideal) -> Subset {
        match family {
            Family::Omega => self.omega(kind, s),
            Family::Rho => self.rho(kind, s),
            Family::I => self.intersecting(kind, s),
            Family::IK => self.intersecting_outside(kind, s, ideal.carrier()),
        }
    }
}

/// `ω_j(s)`.
pub fn omega(relation: &FiniteRelation, kind: NeighborhoodKind, s: usize) -> Result<Subset> {
    relation.universe().check_index(s)?;
    Ok(BaseNeighborhoods::new(relation).omega(kind, s))
}

/// `ρ_j(s)`.
pub fn rho(relation: &FiniteRelation, kind: NeighborhoodKind, s: usize) -> Result<Subset> {
    relation.universe().check_index(s)?;
    Ok(BaseNeighborhoods::new(relation).rho(kind, s))
}

/// `𝕀_j(s)`.
pub fn i_nbhd(relation: &FiniteRelation, kind: NeighborhoodKind, s: usize) -> Result<Subset> {
    relation.universe().check_index(s)?;
    Ok(BaseNeighborhoods::new(relation).intersecting(kind, s))
}

/// `𝕀^𝒦_j(s)`.
pub fn ik_nbhd(
    relation: &FiniteRelation,
    ideal: &Ideal,
    kind: NeighborhoodKind,
    s: usize,
) -> Result<Subset> {
    relation.universe().ensure_same(ideal.universe(), "relation vs ideal")?;
    relation.universe().check_index(s)?;
    Ok(BaseNeighborhoods::new(relation).intersecting_outside(kind, s, ideal.carrier()))
}

/// A materialized map from every element to its neighborhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodSystem {
    universe: Universe,
    origin: Option<(Family, NeighborhoodKind)>,
    ideal: Option<Ideal>,
    map: Vec<Subset>,
}

impl NeighborhoodSystem {
    /// `ideal` must be present exactly when `family` is [`Family::IK`].
    pub fn new(
        relation: &FiniteRelation,
        family: Family,
        kind: NeighborhoodKind,
        ideal: Option<&Ideal>,
    ) -> Result<Self> {
        Self::from_base(&BaseNeighborhoods::new(relation), family, kind, ideal)
    }

    pub fn from_base(
        base: &BaseNeighborhoods,
        family: Family,
        kind: NeighborhoodKind,
        ideal: Option<&Ideal>,
    ) -> Result<Self> {
        let universe = base.universe().clone();
        let map = match (family, ideal) {
            (Family::IK, Some(k)) => {
                universe.ensure_same(k.universe(), "relation vs ideal")?;
                (0..universe.len())
                    .map(|s| base.intersecting_outside(kind, s, k.carrier()))
                    .collect()
            }
            (Family::IK, None) => {
                return Err(Error::Configuration("the ik family needs an ideal".into()))
            }
            (_, Some(_)) => {
                return Err(Error::Configuration(format!(
                    "the {family} family takes no ideal"
                )))
            }
            (Family::Omega, None) => (0..universe.len()).map(|s| base.omega(kind, s)).collect(),
            (Family::Rho, None) => (0..universe.len()).map(|s| base.rho(kind, s)).collect(),
            (Family::I, None) => (0..universe.len()).map(|s| base.intersecting(kind, s)).collect(),
        };
        Ok(NeighborhoodSystem {
            universe,
            origin: Some((family, kind)),
            ideal: ideal.cloned(),
            map,
        })
    }

    /// An arbitrary element-to-set assignment with no relation behind it.
    pub fn from_sets(universe: Universe, map: Vec<Subset>) -> Result<Self> {
        if map.len() != universe.len() {
            return Err(Error::UniverseMismatch(format!(
                "{} neighborhoods for a universe of {}",
                map.len(),
                universe.len()
            )));
        }
        for set in &map {
            universe.ensure_fits(*set, "neighborhood")?;
        }
        Ok(NeighborhoodSystem { universe, origin: None, ideal: None, map })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn family(&self) -> Option<Family> {
        self.origin.map(|(f, _)| f)
    }

    pub fn kind(&self) -> Option<NeighborhoodKind> {
        self.origin.map(|(_, k)| k)
    }

    pub fn ideal(&self) -> Option<&Ideal> {
        self.ideal.as_ref()
    }

    pub fn get(&self, s: usize) -> Subset {
        self.map[s]
    }

    pub fn sets(&self) -> &[Subset] {
        &self.map
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Subset)> + '_ {
        self.map.iter().copied().enumerate()
    }

    /// Pointwise inclusion `self(s) ⊆ other(s)`; the first failing element otherwise.
    pub fn first_non_inclusion(&self, other: &NeighborhoodSystem) -> Option<usize> {
        (0..self.map.len()).find(|&s| !self.map[s].is_subset(other.map[s]))
    }
}

/// A relation together with an ideal: the setting every family lives in.
#[derive(Clone, Debug)]
pub struct ApproximationSpace {
    relation: FiniteRelation,
    ideal: Ideal,
    base: BaseNeighborhoods,
}

impl ApproximationSpace {
    pub fn new(relation: FiniteRelation, ideal: Ideal) -> Result<Self> {
        relation.universe().ensure_same(ideal.universe(), "relation vs ideal")?;
        let base = BaseNeighborhoods::new(&relation);
        Ok(ApproximationSpace { relation, ideal, base })
    }

    pub fn relation(&self) -> &FiniteRelation {
        &self.relation
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn universe(&self) -> &Universe {
        self.relation.universe()
    }

    pub fn base(&self) -> &BaseNeighborhoods {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.relation.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn nbhd(&self, family: Family, kind: NeighborhoodKind, s: usize) -> Subset {
        self.base.neighborhood(family, kind, s, &self.ideal)
    }

    pub fn system(&self, family: Family, kind: NeighborhoodKind) -> NeighborhoodSystem {
        let ideal = (family == Family::IK).then_some(&self.ideal);
        NeighborhoodSystem::from_base(&self.base, family, kind, ideal)
            .expect("space universes agree by construction")
    }
}
