//! Exact-arithmetic invariants of symmetric edge polytopes of finite simple
//! graphs: facet enumeration, regular unimodular triangulations and normalized
//! volume, Ehrhart/h*/gamma data, polar-dual lattice-point counts,
//! Goulden-Jackson word counting, integer-flow counting, and
//! Kantorovich-Rubinstein sections.

pub mod ehrhart;
pub mod error;
pub mod exact;
pub mod facets;
pub mod families;
pub mod flows;
pub mod genfun;
pub mod io;
pub mod kr;
pub mod graph;
pub mod verify;
pub mod volume;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
