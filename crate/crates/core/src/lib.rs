//! Exact integrality checks for undirected Cayley graphs over finite groups.
//!
//! The crate builds finite groups as multiplication tables (constructively or
//! from presentations via coset enumeration), forms Cayley graph adjacency
//! matrices, computes their characteristic polynomials over the integers, and
//! decides whether every eigenvalue is an integer. On top of that sit an
//! exhaustive search over all inverse-closed connection sets of a group and a
//! character-theoretic spectrum for conjugation-closed sets.

pub mod catalog;
pub mod characters;
pub mod cli;
pub mod group;
pub mod presentation;
pub mod repro;
pub mod search;
pub mod spectral;

pub use group::{ElementIndex, GroupError, GroupTable, SubgroupDescriptor};
