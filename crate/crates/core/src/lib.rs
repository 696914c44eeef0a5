//! Plane-graph combinatorics for planar Turán problems.
//!
//! The crate is organised around rotation-system embeddings ([`embed`]),
//! exact substructure detectors ([`pattern`]), two constructive extractors
//! ([`tri_extract`] for large near triangulations in dense circuit graphs and
//! [`theta_extract`] for theta subgraphs of near triangulations), generators
//! for the extremal constructions ([`constructions`]) and an isomorph-free
//! exhaustive search for small planar Turán numbers ([`turan`]).

pub mod budget;
pub mod constructions;
pub mod corpus;
pub mod embed;
pub mod pattern;
pub mod theta_extract;
pub mod tri_extract;
pub mod turan;

pub use budget::{Budget, BudgetExceeded};
