//! Exact combinatorics for finite set families: compressions, kernel splits,
//! Berge pairings, cross-intersecting optimizers, hereditary-family
//! enumeration, and an exhaustive harness that checks the known theorems and
//! searches for counterexamples to the open conjectures about them.

pub mod enumeration;
pub mod family;
pub mod format;
pub mod rational;
pub mod report;
pub mod solvers;
pub mod verify;
pub mod cli;

pub use family::{
    are_cross_intersecting, delta, make_family, Element, FamilyError, GroundSet, KernelSplit,
    SetFamily, SubsetWord,
};
pub use rational::ExactRational;
