//! Partition-level combinatorics of nilpotent orbits for the classical
//! complex groups.
//!
//! Orbits of `GL(d)`, `O(d)`, `SO(d)` and `Sp(d)` are labelled by
//! partitions of `d` subject to parity rules, and their closure order is the
//! dominance order. On top of that this crate provides:
//!
//! - principal-in-Levi (PL) orbits and the reconstruction of an orbit from
//!   the PL orbits in its closure ([`pl`]),
//! - the derivative operation `B^k` on partitions and orbit unions together
//!   with the degenerate Whittaker supports `psi_lambda` ([`derivative`]),
//! - an exact integer-matrix oracle computing Jordan types ([`oracle`]),
//! - related-orbit data for the exceptional groups and a labelled-poset engine
//!   for ingested closure diagrams ([`exceptional`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod derivative;
mod error;
pub mod exceptional;
pub mod oracle;
pub mod orbit;
pub mod partition;
pub mod pl;

pub use error::Error;
pub use orbit::{GroupKind, Kind, Label, Orbit, OrbitSet};
pub use partition::{Cap, Partition};
