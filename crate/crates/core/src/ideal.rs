//! Ideals on a finite universe.
//!
//! A nonempty family closed under subsets and finite unions is, on a finite
//! universe, exactly the power set of its union. An [`Ideal`] therefore
//! stores only that union (the carrier) and answers membership by inclusion.

use crate::error::{Error, Result};
use crate::universe::{Subset, Universe};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    universe: Universe,
    carrier: Subset,
}

impl Ideal {
    /// `{∅}`, the ideal under which ideal-based operators reduce to the plain ones.
    pub fn trivial(universe: Universe) -> Self {
        let carrier = universe.empty();
        Ideal { universe, carrier }
    }

    /// The improper ideal `P(U)`.
    pub fn improper(universe: Universe) -> Self {
        let carrier = universe.full();
        Ideal { universe, carrier }
    }

    pub fn from_carrier(universe: Universe, carrier: Subset) -> Result<Self> {
        universe.ensure_fits(carrier, "ideal carrier")?;
        Ok(Ideal { universe, carrier })
    }

    /// The smallest ideal containing every basis member.
    pub fn from_basis<I>(universe: Universe, basis: I) -> Result<Self>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut carrier = universe.empty();
        let mut seen = false;
        for member in basis {
            universe.ensure_fits(member, "basis member")?;
            carrier = carrier | member;
            seen = true;
        }
        if !seen {
            return Err(Error::InvalidBasis("basis must contain at least one set".into()));
        }
        Ok(Ideal { universe, carrier })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// The union of all members.
    pub fn carrier(&self) -> Subset {
        self.carrier
    }

    /// `A ∈ 𝒦`.
    pub fn contains(&self, set: Subset) -> Result<bool> {
        self.universe.ensure_fits(set, "tested set")?;
        Ok(self.admits(set))
    }

    /// Unchecked membership for hot loops.
    #[inline]
    pub fn admits(&self, set: Subset) -> bool {
        set.is_subset(self.carrier)
    }

    pub fn is_trivial(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn is_improper(&self) -> bool {
        self.carrier.is_full()
    }

    /// Every member, smallest bit pattern first.
    pub fn members(&self) -> Vec<Subset> {
        self.carrier.subsets().collect()
    }

    /// `carrier(self) ⊆ carrier(other)`, i.e. every member of `self` is in `other`.
    pub fn is_subideal_of(&self, other: &Ideal) -> bool {
        self.universe.same_as(&other.universe) && self.carrier.is_subset(other.carrier)
    }
}

/// One ideal per carrier, in carrier bit-pattern order (`2^n` in total).
pub fn enumerate_ideals(universe: &Universe) -> impl Iterator<Item = Ideal> + '_ {
    universe
        .power_set()
        .map(move |carrier| Ideal { universe: universe.clone(), carrier })
}
