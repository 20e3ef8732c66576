//! Exact-arithmetic computational topology for spaces with isolated singularities.
//!
//! Everything is computed over the rationals with arbitrary-precision integers:
//! dense exact linear algebra, simplicial and algebraic chain complexes,
//! perversity bookkeeping, closed formulas and chain-level models for the
//! homology of intersection spaces and for intersection homology of cones and
//! suspensions, an exact-sequence rank solver, and a catalog of worked spaces
//! from symplectic implosion.
//!
//! The crate is `no_std` (with `alloc`); IO and file formats live in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod betti;
pub mod catalog;
pub mod chain;
pub mod formulas;
pub mod les;
pub mod linalg;
pub mod perversity;
pub mod simplicial;

pub use betti::GradedBetti;
pub use chain::{ChainComplex, ChainMap};
pub use linalg::{Rational, RationalMatrix};
pub use perversity::Perversity;
pub use simplicial::SimplicialComplex;
