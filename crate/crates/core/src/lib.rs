//! Finite rough sets over binary relations and ideals.
//!
//! Elements are indices into a [`Universe`]; subsets are packed bitsets, so a
//! universe holds at most [`MAX_UNIVERSE`] elements. From a [`FiniteRelation`]
//! and an [`Ideal`] the crate derives the ω, ρ, 𝕀 and 𝕀^𝒦 neighborhoods for
//! every kind in Ω, the lower/upper approximations they induce, and the
//! topologies they generate. The [`lab`] module checks claims about these
//! structures over every small relation and ideal.
//!
//! ```
//! use roughlab::{Family, FiniteRelation, Ideal, NeighborhoodKind, Universe};
//!
//! let u = Universe::new(["p", "q", "s", "t"])?;
//! let r = FiniteRelation::from_named_pairs(u.clone(), [("t", "t")])?;
//! let k = Ideal::from_carrier(u.clone(), u.subset(["t"])?)?;
//! let ik = roughlab::ik_nbhd(&r, &k, NeighborhoodKind::After, u.index_of("t")?)?;
//! assert!(ik.is_empty());
//! # let _ = Family::IK;
//! # Ok::<(), roughlab::Error>(())
//! ```

pub mod approx;
pub mod error;
pub mod ideal;
pub mod io;
pub mod lab;
pub mod neighborhood;
pub mod relation;
pub mod report;
pub mod topology;
pub mod universe;

/// Largest supported universe; subsets are single `u64` words.
pub const MAX_UNIVERSE: usize = 64;

pub use approx::{
    accuracy, approx_report, approx_table, lower_approx, upper_approx, AccuracyValue, AccuracyVariant,
    ApproximationResult,
};
pub use error::{Error, Result};
pub use ideal::{enumerate_ideals, Ideal};
pub use neighborhood::{
    i_nbhd, ik_nbhd, omega, rho, ApproximationSpace, BaseNeighborhoods, Family, NeighborhoodKind,
    NeighborhoodSystem,
};
pub use relation::{enumerate_relations, FiniteRelation, RelationProperty};
pub use topology::{generate_topology, generate_topology_ideal, is_topology, topo_approx, SetFamily};
pub use universe::{Subset, Universe};
