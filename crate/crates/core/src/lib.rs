//! Exact finite geometry over small finite fields: Grassmannians, symplectic
//! forms, the sets of planes on which a symplectic form restricts singularly,
//! and reconstruction of the form from such a set.

pub mod error;
pub mod forms;
pub mod ftpg;
pub mod gf;
pub mod reconstruct;
pub mod sample;
pub mod singsets;
pub mod subspace;
pub mod textio;

pub use error::{Error, Result};
pub use forms::{BilinearForm, SemilinearMap};
pub use ftpg::{recover_semilinear, verify_collineation, LineMap};
pub use gf::{Automorphism, Elem, Field, Matrix};
pub use reconstruct::{
    reconstruct_form, reconstruct_form_via, verify_theorem, Mode, ReconstructionReport, Via,
};
pub use singsets::{
    check_condition_s, check_condition_s_via, singular_set, CheckOutcome, Counterexample,
    Direction, PlaneSet, WitnessF,
};
pub use subspace::{gaussian_binomial, Grassmannian, Subspace};
