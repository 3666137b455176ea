//! Exact classification, counting and annotation of `p`-cyclic covers of
//! curves through Harrison groups of the function field and of the adeles.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: residues mod `p`, finite fields `F_q`, discrete logs in `mu_p`.
//! - [`divisor`]: divisors and factored rational functions on `P^1`.
//! - [`harrison`]: `Har(Sigma, C_p)`, `Har(A_X, C_p)` and the maps between them.
//! - [`covers`]: cover classes, Cornalba pairs and closed-form counts.
//! - [`galois`]: cyclic Galois algebras over `F_q` as explicit linear algebra.
//! - [`rotation`]: local Kummer symbols and rotation numbers.
//! - [`json`] and [`cli`]: wire formats and the command-line front end.

pub mod arith;
pub mod cli;
pub mod covers;
pub mod divisor;
pub mod error;
pub mod galois;
pub mod harrison;
pub mod json;
pub mod rotation;

pub use error::{Error, Result};
