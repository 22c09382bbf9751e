//! Finite order theory: posets, lattices, interval topologies, set filters,
//! lattice homomorphisms and breadth.
//!
//! Subsets of a carrier are [`ElementSet`] bit masks, so carriers hold at
//! most 64 elements. Everything here is pure and allocation-only; file
//! formats, random generation and the command line live in the `ordlab`
//! crate.
#![no_std]

extern crate alloc;

pub mod breadth;
pub mod error;
pub mod filters;
pub mod lattice;
pub mod library;
pub mod limits;
pub mod morphisms;
pub mod order;
pub mod set;
pub mod topology;

pub use breadth::{compute_breadth, e_family, BreadthReport};
pub use error::{Error, Result};
pub use filters::{SetFilter, StarReading};
pub use lattice::{certify, Lattice, LatticeCert};
pub use limits::Limits;
pub use morphisms::{HomClass, LatticeHom, PreimageReport};
pub use order::{product, Poset};
pub use set::ElementSet;
pub use topology::{interval_topology, FiniteTopology};
