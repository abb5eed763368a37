//! Derivations, Lie-Rinehart algebras and connections.

pub mod algebra;
pub mod connection;
pub mod derivation;

pub use algebra::LieRinehartAlgebra;
pub use connection::{Connection, DescentFailure};
pub use derivation::Derivation;
