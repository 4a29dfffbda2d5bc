//! Finite Γ-hemirings, their crisp and fuzzy h-ideals, the extension of a
//! fuzzy subset by an element, and a harness that checks the theory over
//! exhaustively enumerated small structures.

pub mod crisp;
pub mod enumerate;
pub mod error;
pub mod extension;
pub mod fixtures;
pub mod fuzzy;
pub mod harness;
pub mod hemiring;
pub mod homomorphism;
pub mod mutation;
pub mod prime;
pub mod product;
pub mod rational;

pub use error::{Error, Result};
pub use hemiring::{ElementId, GammaHemiring, GammaId, RawTables, ValidationReport, Violation};
pub use mutation::Mutation;
pub use rational::UnitRational;
