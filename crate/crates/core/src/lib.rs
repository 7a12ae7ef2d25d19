//! Exact computer algebra for finite-dimensional Lie algebras: structure
//! constants, graded Inönü–Wigner contractions and polynomial Casimir
//! invariants, with a builtin catalog of the kinematical Galilei and
//! Poincaré algebras and their central extensions.

pub mod algebra;
pub mod catalog;
pub mod contraction;
pub mod exact;
pub mod invariants;
pub mod par;
pub mod verify;

pub use par::Parallelism;
