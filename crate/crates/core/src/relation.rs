//! Binary relations on a finite universe.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::universe::{Subset, Universe};

/// Largest universe [`enumerate_relations`] will sweep (`2^25` matrices).
pub const MAX_ENUMERATION_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationProperty {
    Serial,
    Reflexive,
    Symmetric,
    Transitive,
    Preorder,
    Equivalence,
}

impl RelationProperty {
    pub const ALL: [RelationProperty; 6] = [
        RelationProperty::Serial,
        RelationProperty::Reflexive,
        RelationProperty::Symmetric,
        RelationProperty::Transitive,
        RelationProperty::Preorder,
        RelationProperty::Equivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationProperty::Serial => "serial",
            RelationProperty::Reflexive => "reflexive",
            RelationProperty::Symmetric => "symmetric",
            RelationProperty::Transitive => "transitive",
            RelationProperty::Preorder => "preorder",
            RelationProperty::Equivalence => "equivalence",
        }
    }
}

impl fmt::Display for RelationProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RelationProperty::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown relation property `{s}`")))
    }
}

/// A relation stored as its rows: `rows[s]` is the set of `t` with `sRt`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRelation {
    universe: Universe,
    rows: Vec<Subset>,
}

impl FiniteRelation {
    pub fn empty(universe: Universe) -> Self {
        let rows = vec![universe.empty(); universe.len()];
        FiniteRelation { universe, rows }
    }

    pub fn identity(universe: Universe) -> Self {
        let n = universe.len();
        let rows = (0..n).map(|i| Subset::singleton(n, i)).collect();
        FiniteRelation { universe, rows }
    }

    pub fn complete(universe: Universe) -> Self {
        let rows = vec![universe.full(); universe.len()];
        FiniteRelation { universe, rows }
    }

    /// Builds a relation from `(source, target)` index pairs.
    pub fn from_pairs<I>(universe: Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rel = FiniteRelation::empty(universe);
        for (s, t) in pairs {
            rel.insert(s, t)?;
        }
        Ok(rel)
    }

    /// Builds a relation from named pairs. Unknown names are rejected and
    /// repeated pairs are idempotent.
    pub fn from_named_pairs<I, A, B>(universe: Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut rel = FiniteRelation::empty(universe);
        for (s, t) in pairs {
            let s = rel.universe.index_of(s.as_ref())?;
            let t = rel.universe.index_of(t.as_ref())?;
            rel.rows[s].insert(t);
        }
        Ok(rel)
    }

    pub fn from_rows(universe: Universe, rows: Vec<Subset>) -> Result<Self> {
        if rows.len() != universe.len() {
            return Err(Error::UniverseMismatch(format!(
                "{} rows for a universe of {}",
                rows.len(),
                universe.len()
            )));
        }
        for row in &rows {
            universe.ensure_fits(*row, "relation row")?;
        }
        Ok(FiniteRelation { universe, rows })
    }

    /// Decodes a row-major matrix code: bit `s * n + t` is entry `(s, t)`.
    pub fn from_code(universe: Universe, code: u64) -> Result<Self> {
        let n = universe.len();
        if n * n > 64 {
            return Err(Error::SizeLimit(format!("cannot pack a {n}x{n} matrix into 64 bits")));
        }
        let row_mask = (1u64 << n) - 1;
        let rows = (0..n)
            .map(|s| Subset::from_bits(n, (code >> (s * n)) & row_mask))
            .collect();
        Ok(FiniteRelation { universe, rows })
    }

    /// Inverse of [`FiniteRelation::from_code`]; `None` above 8 elements.
    pub fn code(&self) -> Option<u64> {
        let n = self.len();
        (n * n <= 64).then(|| {
            self.rows
                .iter()
                .enumerate()
                .fold(0u64, |acc, (s, row)| acc | (row.bits() << (s * n)))
        })
    }

    pub fn insert(&mut self, s: usize, t: usize) -> Result<()> {
        self.universe.check_index(s)?;
        self.universe.check_index(t)?;
        self.rows[s].insert(t);
        Ok(())
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn relates(&self, s: usize, t: usize) -> bool {
        self.rows[s].contains(t)
    }

    /// `{t : sRt}`.
    pub fn successors(&self, s: usize) -> Subset {
        self.rows[s]
    }

    /// `{t : tRs}`.
    pub fn predecessors(&self, s: usize) -> Subset {
        let n = self.len();
        let mut col = Subset::empty(n);
        for (t, row) in self.rows.iter().enumerate() {
            if row.contains(s) {
                col.insert(t);
            }
        }
        col
    }

    pub fn rows(&self) -> &[Subset] {
        &self.rows
    }

    pub fn converse(&self) -> FiniteRelation {
        let rows = (0..self.len()).map(|s| self.predecessors(s)).collect();
        FiniteRelation { universe: self.universe.clone(), rows }
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(s, row)| row.iter().map(move |t| (s, t)))
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn has_property(&self, property: RelationProperty) -> bool {
        match property {
            RelationProperty::Serial => self.rows.iter().all(|r| !r.is_empty()),
            RelationProperty::Reflexive => {
                self.rows.iter().enumerate().all(|(s, r)| r.contains(s))
            }
            RelationProperty::Symmetric => {
                (0..self.len()).all(|s| self.rows[s] == self.predecessors(s))
            }
            // sRp and pRt imply sRt: every successor's row is inside the row.
            RelationProperty::Transitive => self
                .rows
                .iter()
                .all(|row| row.iter().all(|p| self.rows[p].is_subset(*row))),
            RelationProperty::Preorder => {
                self.has_property(RelationProperty::Reflexive)
                    && self.has_property(RelationProperty::Transitive)
            }
            RelationProperty::Equivalence => {
                self.has_property(RelationProperty::Preorder)
                    && self.has_property(RelationProperty::Symmetric)
            }
        }
    }

    pub fn has_all(&self, properties: &[RelationProperty]) -> bool {
        properties.iter().all(|p| self.has_property(*p))
    }

    pub fn properties(&self) -> Vec<RelationProperty> {
        RelationProperty::ALL
            .into_iter()
            .filter(|p| self.has_property(*p))
            .collect()
    }
}

impl fmt::Debug for FiniteRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .pairs()
            .map(|(s, t)| format!("({},{})", self.universe.name(s), self.universe.name(t)))
            .collect();
        write!(f, "FiniteRelation{{{}}}", pairs.join(","))
    }
}

/// Every relation on the canonical `n`-element universe, in matrix-code
/// order (row-major bits read as a little-endian counter).
pub struct RelationEnumerator {
    universe: Universe,
    next: u64,
    end: u64,
    filter: Option<RelationProperty>,
}

impl RelationEnumerator {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }
}

impl Iterator for RelationEnumerator {
    type Item = FiniteRelation;

    fn next(&mut self) -> Option<FiniteRelation> {
        while self.next < self.end {
            let code = self.next;
            self.next += 1;
            let rel = FiniteRelation::from_code(self.universe.clone(), code)
                .expect("enumerator universe fits in a 64-bit code");
            if self.filter.is_none_or(|p| rel.has_property(p)) {
                return Some(rel);
            }
        }
        None
    }
}

pub fn enumerate_relations(
    n: usize,
    filter: Option<RelationProperty>,
) -> Result<RelationEnumerator> {
    enumerate_relations_over(Universe::canonical(n.max(1))?, n, filter)
}

/// Like [`enumerate_relations`] but over a caller-supplied universe of size `n`.
pub fn enumerate_relations_over(
    universe: Universe,
    n: usize,
    filter: Option<RelationProperty>,
) -> Result<RelationEnumerator> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::SizeLimit(format!(
            "relation enumeration needs 1 <= n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    if universe.len() != n {
        return Err(Error::UniverseMismatch(format!(
            "enumeration size {n} vs universe of {}",
            universe.len()
        )));
    }
    Ok(RelationEnumerator { universe, next: 0, end: 1u64 << (n * n), filter })
}
