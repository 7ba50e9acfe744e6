//! Exact arithmetic for classical symmetric functions in superspace.
//!
//! Polynomials here live in `N` commuting variables `x_1..x_N` and `N`
//! anticommuting variables `θ_1..θ_N`. A polynomial is *symmetric* when it is
//! invariant under the simultaneous exchange `x_i ↔ x_j`, `θ_i ↔ θ_j`. Bases of
//! the symmetric subring are indexed by [`SuperPartition`]s.
//!
//! The crate is organised bottom-up:
//!
//! - [`superpartition`]: superpartitions, circled diagrams, conjugation, the
//!   Bruhat and dominance orders, enumeration and counting.
//! - [`superpoly`]: sparse polynomials with Grassmann variables and exact
//!   rational coefficients.
//! - [`bases`]: the monomial, elementary, complete and power-sum superbases and
//!   their generating functions.
//! - [`transform`]: monomial expansions, the signed-filling product rule, basis
//!   changes, recursions and determinantal formulas.
//! - [`inner`]: the scalar product, the involution `ω̂`, duality and Cauchy
//!   kernels.
//!
//! All coefficients are [`Rational`]s (arbitrary precision); nothing is ever
//! rounded.

pub mod bases;
pub mod error;
pub mod inner;
mod linalg;
pub mod rational;
pub mod report;
pub mod superpartition;
pub mod superpoly;
pub mod transform;

pub use bases::BasisName;
pub use error::{Error, Result};
pub use rational::Rational;
pub use report::Report;
pub use superpartition::{Composition, Diagram, SuperPartition};
pub use superpoly::{Monomial, SuperPolynomial};
pub use transform::BasisExpansion;
