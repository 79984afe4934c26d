//! Exact combinatorics of finite Weyl groups.
//!
//! This crate decides (rational) smoothness of Schubert varieties indexed by
//! Weyl group elements through two independent Bruhat-graph criteria —
//! degree regularity and absence of broken rhombi — and can sweep entire
//! groups to check that, in simply laced types, the involutions indexing
//! smooth Schubert varieties are exactly the longest elements of parabolic
//! subgroups.
//!
//! All arithmetic is exact and integer-valued: groups are realized by their
//! action on the root lattice of a crystallographic Cartan matrix. The crate
//! is `no_std` (with `alloc`); IO, serialization and the CLI live in the
//! companion `schubert-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod bruhat;
mod cartan;
mod element;
mod error;
mod root;
mod smoothness;
mod subgroup;
mod system;
mod universe;
mod verify;

pub use bruhat::{BruhatGraph, BruhatInterval};
pub use cartan::{catalog_labels, CartanMatrix, MAX_RANK};
pub use element::GroupElement;
pub use error::{Error, Result};
pub use root::Root;
pub use smoothness::{
    BrokenRhombus, CrossValidationReport, DegreeDefect, Disagreement, Evidence, RegularityCheck,
    RhombusSearch, SmoothnessCertificate,
};
pub use subgroup::ReflectionSubgroup;
pub use system::{CoxeterSystem, Reflection, DEFAULT_ELEMENT_CAP};
pub use universe::Universe;
pub use verify::{InvolutionVerdict, ProofWitness, TheoremReport, WitnessOutcome};
