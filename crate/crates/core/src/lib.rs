//! Exact machinery for spherical actions on flag varieties of exceptional groups
//! and the multiplicity-free branching rules they produce.
//!
//! The crate is layered bottom-up:
//! [`rootsys`] (Cartan data, roots, weights, Weyl orbits, Freudenthal),
//! [`chevalley`] (integral Chevalley bases and exact linear algebra),
//! [`embeddings`] (subgroup data and restriction of weights),
//! [`sphericity`] (dense-orbit and generic-translate tests),
//! [`characters`] (restriction and decomposition of characters),
//! [`branching`] (generator sets, rule expansion and verification).

pub mod branching;
pub mod characters;
pub mod chevalley;
pub mod data;
pub mod embeddings;
mod error;
pub mod linalg;
pub mod rootsys;
pub mod sphericity;

pub use error::{Error, Result};
