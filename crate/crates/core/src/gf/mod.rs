//! Exact arithmetic in small finite fields and matrices over them.

mod field;
mod gf2;
mod matrix;

pub use field::{is_irreducible, is_prime, Automorphism, Elem, Field, MAX_ORDER};
pub use gf2::BitMatrix;
pub use matrix::{Matrix, Rref};
