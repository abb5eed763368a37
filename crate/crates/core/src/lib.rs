//! Graded Lie-Rinehart cohomology with exact rational arithmetic.

pub mod algebra;
pub mod brieskorn;
pub mod cli;
pub mod complex;
pub mod error;
pub mod gauss_manin;
pub mod lie;

pub use error::{Error, Result};
