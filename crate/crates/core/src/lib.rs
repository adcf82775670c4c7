//! Rectagraphs and their hypercube coverings.
//!
//! This crate builds the objects needed to certify structural facts about
//! rectagraphs, locally triangular graphs and locally rank 3 graphs:
//!
//! * [`gf2`]: bit-packed vectors over GF(2), binary linear codes in reduced
//!   row-echelon form, coset spaces and submodule spinning.
//! * [`graph`]: explicit and Cayley-style graphs, distance parameters,
//!   derived graphs, triangular-graph recognition and small-graph isomorphism.
//! * [`perm`]: permutations, Schreier–Sims stabilizer chains, induced actions,
//!   affine groups on coset spaces and a registry of verified generator sets.
//! * [`rect`]: hypercube coverings, kernel reconstruction, the bipartite
//!   rectagraph over a locally triangular graph and local rank 3 certificates.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and
//! the command line front end live in the companion `rectagraph` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod gf2;
pub mod graph;
pub mod perm;
pub mod rect;

pub use error::{Error, Result};
