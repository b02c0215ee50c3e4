//! Exact-rational Maurer-Cartan theory and Koszul duality for differential
//! graded Lie and associative algebras.
//!
//! Everything is computed over the rationals with no tolerances: graded
//! linear algebra ([`graded`], [`complex`]), dg associative algebras with
//! their gauge action and interval homotopies ([`assoc`]), dg Lie algebras
//! with the gauge action through enveloping algebras and Sullivan homotopies
//! ([`lie`]), and the Chevalley-Eilenberg / Harrison / bar / cobar functors
//! with their adjunctions ([`koszul`]). Completed constructions are handled
//! through explicit weight truncations.

pub mod assoc;
pub mod checks;
pub mod cli;
pub mod complex;
pub mod error;
pub mod expr;
pub mod fixtures;
pub mod format;
pub mod graded;
pub mod koszul;
pub mod lie;
pub mod report;
pub mod linalg;
pub mod scalar;
pub mod vector;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use vector::{LinComb, Vector};
