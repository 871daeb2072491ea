//! Exact Reidemeister torsion of finite based chain complexes.
//!
//! The library computes the torsion of a based chain complex of rational
//! vector spaces with respect to a chosen graded homology basis, entirely in
//! exact arithmetic. Scalars live in the multiplicative domain `sqrt(s * pi^u)`
//! with `s` a positive rational and `u` an integer ([`scalar::PiRadical`]),
//! which is closed under everything the torsion pipeline produces: sphere
//! volumes, their square roots, and alternating products of determinants.
//!
//! Main entry points:
//!
//! - [`torsion::torsion_exact`] — torsion of a validated [`chain::ChainComplex`]
//!   with respect to a [`torsion::GradedBasis`];
//! - [`sphere`] — cell models of round spheres, harmonic homology bases, exact
//!   volumes via half-integer Gamma values, and the closed-form torsions they
//!   reproduce;
//! - [`io`] — JSON document formats, the exact-value rendering grammar, and
//!   machine-readable reports backing the `torsion-lab` CLI;
//! - [`selfcheck`] — the property suites behind `torsion-lab selfcheck`.

pub mod chain;
pub mod corpus;
pub mod io;
pub mod mat;
pub mod scalar;
pub mod selfcheck;
pub mod sphere;
pub mod torsion;

pub use chain::{ChainComplex, GroupRingElement, GroupRingMatrix, GroupWord, Representation};
pub use scalar::{PiRadical, Rational};
pub use torsion::{torsion_exact, torsion_float, GradedBasis, ScaledVector, TorsionValue};
