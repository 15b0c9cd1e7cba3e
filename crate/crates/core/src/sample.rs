//! Seeded random objects for sampled verification.
//!
//! All sampling goes through [`rng`], a ChaCha8 stream seeded from a `u64`,
//! so a seed pins every sampled output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::forms::{BilinearForm, SemilinearMap};
use crate::gf::{Automorphism, Elem, Field, Matrix};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn element<R: Rng>(field: &Field, rng: &mut R) -> Elem {
    Elem(rng.gen_range(0..field.order()) as u8)
}

pub fn nonzero_element<R: Rng>(field: &Field, rng: &mut R) -> Elem {
    Elem(rng.gen_range(1..field.order()) as u8)
}

pub fn automorphism<R: Rng>(field: &Field, rng: &mut R) -> Automorphism {
    field.automorphism(rng.gen_range(0..field.degree()))
}

/// Uniform over GL(n, q) by rejection.
pub fn invertible_matrix<R: Rng>(field: &Field, n: usize, rng: &mut R) -> Matrix {
    loop {
        let mut m = Matrix::zeros(field, n, n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, element(field, rng));
            }
        }
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn semilinear_map<R: Rng>(field: &Field, n: usize, rng: &mut R) -> SemilinearMap {
    let g = invertible_matrix(field, n, rng);
    let sigma = automorphism(field, rng);
    SemilinearMap::new(g, sigma).expect("invertible by construction")
}

/// The standard symplectic form pulled back through a random semilinear map,
/// normalized to trivial automorphisms.
pub fn symplectic_form<R: Rng>(field: &Field, n: usize, rng: &mut R) -> Result<BilinearForm> {
    let j = BilinearForm::standard_symplectic(field, n)?;
    j.pullback(&semilinear_map(field, n, rng))?.untwisted()
}
