//! Exact Cartan-polyhedron geometry for compact simply connected Riemannian
//! symmetric spaces.
//!
//! The crate builds every irreducible root system (including the non-reduced
//! `(bc)_l`), the simplex cut out by the simple roots and the highest root,
//! Killing-form normalizations, and the classification catalog of Type I and
//! Type II spaces. From those it derives injectivity radius, diameter and
//! maximal sectional curvature as exact values of the form `pi*sqrt(q)`.
//!
//! Linear algebra is generic over the scalar type; [`Rational`] drives the
//! exact pipeline and `f64` drives the independent numeric [`oracle`].

pub mod catalog;
pub mod error;
pub mod geometry;
pub mod killing;
pub mod linalg;
pub mod oracle;
pub mod pi_sqrt;
pub mod polytope;
pub mod root_system;
pub mod scalar;

pub use catalog::{SpaceEntry, SpaceLabel, Table};
pub use error::{Error, Result};
pub use geometry::{GeometryReport, MetricSpec, SliceContext};
pub use killing::KillingData;
pub use linalg::{Matrix, Vector};
pub use oracle::OracleReport;
pub use pi_sqrt::PiSqrtValue;
pub use polytope::{CartanPolytope, SliceClassification};
pub use root_system::{Family, RootSystem, RootSystemKind};
pub use scalar::Scalar;

/// Arbitrary-precision rational in lowest terms.
pub type Rational = num_rational::BigRational;
pub type RationalVector = Vector<Rational>;
pub type RationalMatrix = Matrix<Rational>;
pub type FloatVector = Vector<f64>;
pub type FloatMatrix = Matrix<f64>;
