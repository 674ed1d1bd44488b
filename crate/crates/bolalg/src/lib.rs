//! bolalg: exact-arithmetic computations with finite-dimensional Bol
//! algebras presented by structure constants.
//!
//! The crate verifies the defining identities (with two skewness profiles),
//! builds ideals, quotients and the finite categorical constructions,
//! solves for pseudo-derivations, checks Bol modules and their operator
//! properties, mechanizes the duality transform on operator identities,
//! and constructs enveloping Lie algebras with a full round trip through
//! the Lie-pair correspondence.
//!
//! Everything is computed over exact rationals; a failing identity is
//! always reported with a replayable basis-tuple witness.

pub mod error;
pub mod scalar;
pub mod linalg;
pub mod report;
pub mod algebra;
pub mod catalog;
pub mod ideal;
pub mod morphism;
pub mod category;
pub mod pder;
pub mod rep;
pub mod dual;
pub mod envelope;
pub mod cli;
pub mod format;
pub mod identity;

pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace, Vector};
pub use report::{CheckEntry, CheckReport, Witness};
pub use scalar::Scalar;
