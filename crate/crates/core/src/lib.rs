//! Exact combinatorial and graded-algebra computations for the family of
//! three-dimensional affine varieties arising as torus quotients of the
//! hypersurface `X0^{q-p} = X1 X4 - X2 X3`: semigroup generators,
//! multigraded weight spaces, the refined grading of the three-variable
//! subrings, the distinguished ideal families with window-relative
//! Hilbert-function verification, group translates and Borel stability,
//! and the tangent-space dimension at the Borel-fixed ideal.
//!
//! All arithmetic is exact: arbitrary-precision rationals for polynomial
//! coefficients and fraction-free integer elimination for rank
//! computations. The algorithmic core is generic over the scalar through
//! the traits in [`scalar`]; the aliases below fix the concrete types
//! used everywhere.

pub mod action;
pub mod error;
pub mod grading;
pub mod ideals;
pub mod lambda;
pub mod linalg;
pub mod monomial;
pub mod params;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod semigroup;
pub mod tangent;
pub mod torus_eval;

pub use error::{Error, Result};
pub use grading::Weight;
pub use monomial::Monomial;
pub use params::VarietyParams;
pub use scalar::{Int, Rat};

/// The concrete polynomial type used throughout: exact rationals.
pub type Poly = poly::Polynomial<Rat>;
