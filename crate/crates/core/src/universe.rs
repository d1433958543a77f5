//! Finite universes and packed subsets over them.
//!
//! Elements are addressed by their index in the ordered universe; names only
//! matter at the I/O boundary. A [`Subset`] is a 64-bit mask plus the size of
//! the universe it lives in, so every set operation is a couple of word ops.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::MAX_UNIVERSE;

/// An ordered, nonempty list of distinct element names.
#[derive(Clone, Debug)]
pub struct Universe {
    names: Arc<[String]>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if names.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        Ok(Universe { names: names.into() })
    }

    /// The canonical universe `x0, x1, ..., x{n-1}` used by enumerators.
    pub fn canonical(n: usize) -> Result<Self> {
        Universe::new((0..n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false; a universe has at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { index, len: self.len() })
        }
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.len())
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Builds a subset from element names; duplicates are harmless.
    pub fn subset<I, S>(&self, names: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = self.empty();
        for name in names {
            set.insert(self.index_of(name.as_ref())?);
        }
        Ok(set)
    }

    /// Every subset of the universe in bit-pattern order.
    pub fn power_set(&self) -> impl Iterator<Item = Subset> {
        Subset::all(self.len())
    }

    pub fn same_as(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }

    pub(crate) fn ensure_same(&self, other: &Universe, what: &str) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch(format!(
                "{what}: [{}] vs [{}]",
                self.names.join(","),
                other.names.join(",")
            )))
        }
    }

    pub(crate) fn ensure_fits(&self, set: Subset, what: &str) -> Result<()> {
        if set.universe_len() == self.len() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch(format!(
                "{what} is over {} elements, universe has {}",
                set.universe_len(),
                self.len()
            )))
        }
    }

    /// Renders a subset as `{p, q}`, or `∅` when empty.
    pub fn format_set(&self, set: Subset) -> String {
        if set.is_empty() {
            return "∅".to_string();
        }
        let names: Vec<&str> = set.iter().map(|i| self.name(i)).collect();
        format!("{{{}}}", names.join(", "))
    }

    pub fn set_names(&self, set: Subset) -> Vec<String> {
        set.iter().map(|i| self.name(i).to_string()).collect()
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Universe {}

/// A subset of a universe of at most 64 elements.
///
/// Bit `i` is set iff element `i` belongs to the set. Bits at or above the
/// universe size are always clear.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: u64,
    len: u8,
}

fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Subset {
    pub fn empty(universe_len: usize) -> Self {
        debug_assert!(universe_len <= MAX_UNIVERSE);
        Subset { bits: 0, len: universe_len as u8 }
    }

    pub fn full(universe_len: usize) -> Self {
        Subset { bits: mask(universe_len), len: universe_len as u8 }
    }

    /// Out-of-range bits are discarded.
    pub fn from_bits(universe_len: usize, bits: u64) -> Self {
        Subset { bits: bits & mask(universe_len), len: universe_len as u8 }
    }

    pub fn singleton(universe_len: usize, index: usize) -> Self {
        let mut s = Subset::empty(universe_len);
        s.insert(index);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe_len: usize, indices: I) -> Self {
        let mut s = Subset::empty(universe_len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// All `2^n` subsets, counting upward from the empty set.
    ///
    /// Panics if `universe_len` is 64, where the power set cannot be counted
    /// in a `u64`.
    pub fn all(universe_len: usize) -> impl Iterator<Item = Subset> {
        assert!(universe_len < 64, "power set of {universe_len} elements is too large");
        (0..(1u64 << universe_len)).map(move |bits| Subset::from_bits(universe_len, bits))
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn universe_len(self) -> usize {
        self.len as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == mask(self.len as usize)
    }

    pub fn contains(self, index: usize) -> bool {
        index < self.len as usize && self.bits & (1 << index) != 0
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.len as usize, "element {index} outside universe of {}", self.len);
        self.bits |= 1 << index;
    }

    pub fn remove(&mut self, index: usize) {
        if index < 64 {
            self.bits &= !(1 << index);
        }
    }

    pub fn union(self, other: Subset) -> Subset {
        debug_assert_eq!(self.len, other.len);
        Subset { bits: self.bits | other.bits, len: self.len }
    }

    pub fn intersection(self, other: Subset) -> Subset {
        debug_assert_eq!(self.len, other.len);
        Subset { bits: self.bits & other.bits, len: self.len }
    }

    pub fn difference(self, other: Subset) -> Subset {
        debug_assert_eq!(self.len, other.len);
        Subset { bits: self.bits & !other.bits, len: self.len }
    }

    pub fn complement(self) -> Subset {
        Subset { bits: !self.bits & mask(self.len as usize), len: self.len }
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_superset(self, other: Subset) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.bits & other.bits == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        !self.is_disjoint(other)
    }

    /// Element indices in increasing order.
    pub fn iter(self) -> Elements {
        Elements { bits: self.bits }
    }

    /// Every subset of `self`, in bit-pattern order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let top = self.bits;
        let len = self.len;
        // Standard submask walk, emitted in increasing order.
        let mut masks = Vec::with_capacity(1 << self.len().min(20));
        let mut sub = top;
        loop {
            masks.push(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & top;
        }
        masks.into_iter().rev().map(move |bits| Subset { bits, len })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        self.union(rhs)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        self.intersection(rhs)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        self.difference(rhs)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        self.complement()
    }
}

pub struct Elements {
    bits: u64,
}

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}
