//! Finite groups given by explicit multiplication tables, and the
//! class-union invariant `m(G)`: the least `n` such that the identity together
//! with any `n` distinct non-trivial conjugacy classes forms a subgroup.
//!
//! The crate computes `m(G)` and the class number `k(G)` by exhaustive
//! enumeration, enumerates unit-fraction decompositions of 1 (which bound the
//! order of a group with `k` classes), and checks `m(G) ∈ {1, k(G) − 1}`
//! together with the structural facts behind it on concrete groups.
//!
//! ```
//! use classunion::{catalog::GroupSpecifier, classes::decompose, class_union::m_invariant, Execution};
//!
//! let s3 = GroupSpecifier::parse("S3")?.build()?;
//! let dec = decompose(&s3);
//! let result = m_invariant(&s3, &dec, Execution::default())?;
//! assert_eq!((result.m, result.k), (2, 3));
//! # Ok::<(), classunion::GroupError>(())
//! ```
//!
//! The `parallel` feature (on by default) runs subset searches, Landau
//! branches and batch verification on rayon; without it every
//! [`Execution`] mode is sequential. Output never depends on the mode.

pub mod automorphisms;
pub mod bitset;
pub mod catalog;
pub mod class_union;
pub mod classes;
pub mod error;
pub mod exec;
pub mod group;
pub mod landau;
pub mod report;
pub mod subgroups;

pub use bitset::ElementSet;
pub use error::{GroupError, Result};
pub use exec::Execution;
pub use group::{Element, FiniteGroup, PermutationGenerators, DEFAULT_CLOSURE_CAP};
