//! Exact verification engine for a family of finite-dimensional Hopf
//! algebras: structure-constant Hopf algebras over the cyclotomic field
//! `Q(z8)`, a 256-dimensional Drinfeld double, its simple modules,
//! Yetter-Drinfeld translations and braidings, Nichols algebras via quantum
//! symmetrizers, Radford biproducts and the 128-dimensional lifting
//! families.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON interchange and the CLI
//! live in the companion `hopfkit` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod scalar;
pub mod linalg;
pub mod report;
pub mod presentation;
pub mod hopf;
pub mod presets;
pub mod double;
pub mod rep;
pub mod yd;
pub mod nichols;
pub mod boson;

pub use scalar::{FieldElement, Rational};
pub use linalg::Matrix;
pub use report::{Check, Report, Status};
