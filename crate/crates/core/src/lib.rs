//! Controllability analysis for right-invariant bilinear systems.
//!
//! Control vector fields drawn from a standard basis (`Ω_ij` on `so(n)`,
//! `A_ij` for formation networks and symmetric Markov chains) are mapped to
//! transpositions. Folding them with the absorbing product `*` yields an
//! orbit partition of `{1,…,n}`; the system is controllable exactly when
//! that partition is a single orbit, and otherwise the orbits describe the
//! controllable submanifold. Every verdict can be cross-checked against an
//! exact Lie-closure rank computation over the rationals.

pub mod error;
pub mod graphview;
pub mod liealg;
pub mod monoid;
pub mod permgroup;
pub mod rational;
pub mod report;
pub mod systems;

pub use error::{Error, Result};
pub use graphview::ControlGraph;
pub use liealg::{ExactMatrix, LinearSpan};
pub use monoid::OrbitPartition;
pub use permgroup::{BasisIndexPair, CycleDecomposition, Permutation};
pub use systems::{ControllabilityReport, Family, SystemSpec};
