//! Exact commutative algebra: rationals, polynomials, weighted rings, graded modules.

pub mod factorization;
pub mod linalg;
pub mod module;
pub mod parse;
pub mod poly;
pub mod polymatrix;
pub mod rational;
pub mod ring;

pub use linalg::Matrix;
pub use module::{GradedSlice, ModuleElement, PresentedModule};
pub use poly::{Monomial, Polynomial};
pub use polymatrix::PolyMatrix;
pub use rational::Rational;
pub use ring::{HypersurfaceRing, WeightSystem, WeightedDegree};
