//! Sesquilinear-style forms `Ω(x, y) = σ₁(x)ᵀ · A · σ₂(y)` and semilinear maps
//! `x ↦ G · σ(x)`, with automorphisms acting entrywise on coordinates.
//!
//! Every evaluation of a form goes through [`BilinearForm::evaluate`] or
//! [`BilinearForm::restricted_gram`]; nothing else in the crate assumes a
//! coordinate convention.

use crate::error::{Error, Result};
use crate::gf::{Automorphism, Elem, Field, Matrix};
use crate::subspace::{all_vectors, Grassmannian, Subspace};

/// A `(σ₁, σ₂)`-bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
    sigma1: Automorphism,
    sigma2: Automorphism,
    non_singular: bool,
}

/// A σ-linear map `x ↦ G · σ(x)` with `G` invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilinearMap {
    matrix: Matrix,
    sigma: Automorphism,
}

impl BilinearForm {
    pub fn new(gram: Matrix, sigma1: Automorphism, sigma2: Automorphism) -> Result<BilinearForm> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        let non_singular = gram.is_invertible();
        Ok(BilinearForm {
            gram,
            sigma1,
            sigma2,
            non_singular,
        })
    }

    /// A form with trivial automorphisms.
    pub fn plain(gram: Matrix) -> Result<BilinearForm> {
        let id = gram.field().identity_automorphism();
        BilinearForm::new(gram, id, id)
    }

    /// Block-diagonal `[[0, 1], [-1, 0]]` repeated `n / 2` times.
    pub fn standard_symplectic(field: &Field, n: usize) -> Result<BilinearForm> {
        if n % 2 == 1 {
            return Err(Error::OddDimension(n));
        }
        BilinearForm::plain(standard_symplectic_gram(field, n))
    }

    pub fn identity(field: &Field, n: usize) -> BilinearForm {
        BilinearForm::plain(Matrix::identity(field, n)).expect("square")
    }

    pub fn field(&self) -> &Field {
        self.gram.field()
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn sigma1(&self) -> Automorphism {
        self.sigma1
    }

    pub fn sigma2(&self) -> Automorphism {
        self.sigma2
    }

    pub fn is_plain(&self) -> bool {
        self.sigma1.is_identity() && self.sigma2.is_identity()
    }

    fn check_vec(&self, v: &[Elem]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        Ok(())
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: s.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, x: &[Elem], y: &[Elem]) -> Result<Elem> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        let f = self.field();
        let sx = f.apply_slice(self.sigma1, x);
        let sy = f.apply_slice(self.sigma2, y);
        let ay = self.gram.mul_vec(&sy)?;
        Ok(f.dot(&sx, &ay))
    }

    /// The matrix `[Ω(bᵢ, bⱼ)]` over the canonical basis of `s`.
    pub fn restricted_gram(&self, s: &Subspace) -> Result<Matrix> {
        self.check_subspace(s)?;
        let b = s.basis();
        let left = b.apply_automorphism(self.sigma1);
        let right = b.apply_automorphism(self.sigma2).transpose();
        left.mul(&self.gram)?.mul(&right)
    }

    pub fn is_non_singular(&self) -> bool {
        self.non_singular
    }

    /// `Ω(x, x) = 0` for all x. With `σ₁ = σ₂` this is exactly a zero
    /// diagonal plus `A = -Aᵀ`; with `σ₁ ≠ σ₂` it is reported false.
    pub fn is_symplectic(&self) -> bool {
        if self.sigma1 != self.sigma2 {
            return false;
        }
        let (a, f, n) = (&self.gram, self.field(), self.dim());
        (0..n).all(|i| {
            a.get(i, i).is_zero() && (0..n).all(|j| a.get(i, j) == f.neg(a.get(j, i)))
        })
    }

    /// `Ω(x, y) = -Ω(y, x)` for all x, y (with `σ₁ = σ₂`), i.e. `A = -Aᵀ`.
    pub fn is_skew_symmetric(&self) -> bool {
        self.sigma1 == self.sigma2 && self.gram == self.gram.transpose().neg()
    }

    /// `Ω(x, y) = 0 ⇔ Ω(y, x) = 0`, decided over all vector pairs when
    /// `q^n ≤ 256` and over pairs of line representatives otherwise.
    pub fn is_reflexive(&self) -> Result<bool> {
        if !self.non_singular {
            return Err(Error::SingularForm);
        }
        let (f, n) = (self.field(), self.dim());
        let reps: Vec<Vec<Elem>> = if f.order().pow(n as u32) <= 256 {
            all_vectors(f, n).collect()
        } else {
            Grassmannian::new(f, n, 1)?
                .iter()
                .map(|l| l.representative().to_vec())
                .collect()
        };
        for x in &reps {
            for y in &reps {
                if self.evaluate(x, y)?.is_zero() != self.evaluate(y, x)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `{y : Ω(x, y) = 0 for all x}`.
    pub fn radical(&self) -> Subspace {
        Subspace::from_matrix(&self.gram.kernel().apply_automorphism(self.sigma2.inverse()))
    }

    /// `s⊥ = {y : Ω(x, y) = 0 for all x in s}`.
    pub fn orthogonal_complement(&self, s: &Subspace) -> Result<Subspace> {
        if !self.non_singular {
            return Err(Error::SingularForm);
        }
        self.check_subspace(s)?;
        if s.dim() == 0 {
            return Ok(Subspace::whole(self.field(), self.dim()));
        }
        let m = s.basis().apply_automorphism(self.sigma1).mul(&self.gram)?;
        Ok(Subspace::from_matrix(
            &m.kernel().apply_automorphism(self.sigma2.inverse()),
        ))
    }

    /// `Ω'(x, y) = Ω(y, x)`.
    pub fn transpose_form(&self) -> BilinearForm {
        BilinearForm {
            gram: self.gram.transpose(),
            sigma1: self.sigma2,
            sigma2: self.sigma1,
            non_singular: self.non_singular,
        }
    }

    /// `Ω'(x, y) = Ω(f(x), f(y))`.
    pub fn pullback(&self, f: &SemilinearMap) -> Result<BilinearForm> {
        let g = &f.matrix;
        let gram = g
            .apply_automorphism(self.sigma1)
            .transpose()
            .mul(&self.gram)?
            .mul(&g.apply_automorphism(self.sigma2))?;
        BilinearForm::new(gram, self.sigma1.compose(f.sigma), self.sigma2.compose(f.sigma))
    }

    /// `aΩ`.
    pub fn scale(&self, a: Elem) -> Result<BilinearForm> {
        if a.is_zero() {
            return Err(Error::ZeroScalar);
        }
        Ok(BilinearForm {
            gram: self.gram.scale(a),
            ..self.clone()
        })
    }

    /// `σΩ`, the form `(x, y) ↦ σ(Ω(x, y))`: Gram `σ(A)`, automorphism pair
    /// `(σσ₁, σσ₂)`.
    pub fn twist(&self, sigma: Automorphism) -> BilinearForm {
        BilinearForm {
            gram: self.gram.apply_automorphism(sigma),
            sigma1: sigma.compose(self.sigma1),
            sigma2: sigma.compose(self.sigma2),
            non_singular: self.non_singular,
        }
    }

    /// For `σ₁ = σ₂ = τ`, the plain form `τ⁻¹Ω` with Gram `τ⁻¹(A)`. It has
    /// the same orthogonality relation, hence the same complements.
    pub fn untwisted(&self) -> Result<BilinearForm> {
        if self.sigma1 != self.sigma2 {
            return Err(Error::NotPlainBilinear);
        }
        Ok(self.twist(self.sigma1.inverse()))
    }

    /// A linear map `f` with `pullback(f)` equal to the standard symplectic
    /// Gram, built from hyperbolic pairs: take the first basis vector `u` of
    /// the current subspace, the first basis vector `v` with `Ω(u, v) ≠ 0`
    /// rescaled to `Ω(u, v) = 1`, then continue inside `span(u, v)⊥`.
    pub fn symplectic_basis(&self) -> Result<SemilinearMap> {
        if !self.is_plain() {
            return Err(Error::NotPlainBilinear);
        }
        let n = self.dim();
        if n % 2 == 1 {
            return Err(Error::OddDimension(n));
        }
        if !self.non_singular {
            return Err(Error::SingularForm);
        }
        if !self.is_symplectic() {
            return Err(Error::NotSymplectic);
        }
        let f = self.field();
        let mut rest = Subspace::whole(f, n);
        let mut columns: Vec<Vec<Elem>> = Vec::with_capacity(n);
        while rest.dim() > 0 {
            let u = rest.basis().row(0).to_vec();
            let (v, c) = rest
                .basis()
                .row_iter()
                .find_map(|w| {
                    let c = self.evaluate(&u, w).ok()?;
                    (!c.is_zero()).then(|| (w.to_vec(), c))
                })
                .ok_or(Error::SingularForm)?;
            let ic = f.inv_nonzero(c);
            let v: Vec<Elem> = v.iter().map(|&x| f.mul(ic, x)).collect();
            let pair = Subspace::span(f, n, &[u.clone(), v.clone()])?;
            rest = rest.intersect(&self.orthogonal_complement(&pair)?)?;
            columns.push(u);
            columns.push(v);
        }
        let g = Matrix::from_rows(f, n, &columns)?.transpose();
        SemilinearMap::linear(g)
    }
}

pub fn standard_symplectic_gram(field: &Field, n: usize) -> Matrix {
    let mut j = Matrix::zeros(field, n, n);
    let minus_one = field.neg(Elem::ONE);
    for b in (0..n.saturating_sub(1)).step_by(2) {
        j.set(b, b + 1, Elem::ONE);
        j.set(b + 1, b, minus_one);
    }
    j
}

impl SemilinearMap {
    pub fn new(matrix: Matrix, sigma: Automorphism) -> Result<SemilinearMap> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if !matrix.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(SemilinearMap { matrix, sigma })
    }

    pub fn linear(matrix: Matrix) -> Result<SemilinearMap> {
        let id = matrix.field().identity_automorphism();
        SemilinearMap::new(matrix, id)
    }

    pub fn identity(field: &Field, n: usize) -> SemilinearMap {
        SemilinearMap {
            matrix: Matrix::identity(field, n),
            sigma: field.identity_automorphism(),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn sigma(&self) -> Automorphism {
        self.sigma
    }

    pub fn field(&self) -> &Field {
        self.matrix.field()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        self.matrix.mul_vec(&self.field().apply_slice(self.sigma, v))
    }

    /// Image of a subspace: the span of `G·σ(b)` over its basis rows.
    pub fn apply_subspace(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: s.ambient_dim(),
            });
        }
        let rows = s
            .basis()
            .apply_automorphism(self.sigma)
            .mul(&self.matrix.transpose())?;
        Ok(Subspace::from_matrix(&rows))
    }

    /// `self ∘ other`: `(G₁·σ₁(G₂), σ₁σ₂)`.
    pub fn compose(&self, other: &SemilinearMap) -> Result<SemilinearMap> {
        let m = self.matrix.mul(&other.matrix.apply_automorphism(self.sigma))?;
        Ok(SemilinearMap {
            matrix: m,
            sigma: self.sigma.compose(other.sigma),
        })
    }

    /// `(σ⁻¹(G⁻¹), σ⁻¹)`.
    pub fn inverse(&self) -> SemilinearMap {
        let inv = self.sigma.inverse();
        SemilinearMap {
            matrix: self
                .matrix
                .invert()
                .expect("constructed invertible")
                .apply_automorphism(inv),
            sigma: inv,
        }
    }

    pub fn scaled(&self, a: Elem) -> Result<SemilinearMap> {
        if a.is_zero() {
            return Err(Error::ZeroScalar);
        }
        Ok(SemilinearMap {
            matrix: self.matrix.scale(a),
            sigma: self.sigma,
        })
    }

    /// Equal automorphisms and matrices equal up to a nonzero scalar.
    pub fn projectively_equal(&self, other: &SemilinearMap) -> bool {
        if self.sigma != other.sigma || self.matrix.field() != other.matrix.field() {
            return false;
        }
        let a = self.matrix.entries();
        let b = other.matrix.entries();
        if a.len() != b.len() {
            return false;
        }
        let f = self.field();
        let Some(i) = a.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        if b[i].is_zero() {
            return false;
        }
        let ratio = f.mul(b[i], f.inv_nonzero(a[i]));
        a.iter().zip(b).all(|(&x, &y)| f.mul(ratio, x) == y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Field {
        Field::with_order(q).unwrap()
    }

    fn mat(f: &Field, rows: &[&[u32]]) -> Matrix {
        Matrix::from_codes(f, rows[0].len(), rows).unwrap()
    }

    fn v(codes: &[u8]) -> Vec<Elem> {
        codes.iter().map(|&c| Elem(c)).collect()
    }

    fn unit(n: usize, i: usize) -> Vec<Elem> {
        crate::subspace::unit(n, i)
    }

    #[test]
    fn evaluate_examples() {
        let f3 = gf(3);
        let j = BilinearForm::standard_symplectic(&f3, 4).unwrap();
        assert_eq!(j.evaluate(&v(&[0; 4]), &v(&[1, 2, 0, 1])).unwrap(), Elem(0));
        assert_eq!(j.evaluate(&unit(4, 0), &unit(4, 1)).unwrap(), Elem(1));
        assert_eq!(j.evaluate(&unit(4, 1), &unit(4, 0)).unwrap(), Elem(2));
        assert!(j.evaluate(&unit(3, 0), &unit(4, 1)).is_err());

        let f4 = gf(4);
        let frob = f4.automorphism(1);
        let form =
            BilinearForm::new(Matrix::identity(&f4, 2), f4.identity_automorphism(), frob).unwrap();
        for a in f4.elements() {
            let y = v(&[a.0, 0]);
            assert_eq!(form.evaluate(&unit(2, 0), &y).unwrap(), f4.mul(a, a));
        }
    }

    #[test]
    fn symplectic_predicate_examples() {
        for q in [2, 3, 4, 5] {
            let f = gf(q);
            assert!(BilinearForm::standard_symplectic(&f, 4).unwrap().is_symplectic());
        }
        assert!(!BilinearForm::identity(&gf(3), 2).is_symplectic());
        let f2 = gf(2);
        assert!(BilinearForm::plain(mat(&f2, &[&[0, 1], &[1, 0]])).unwrap().is_symplectic());
        // skew-symmetric but not alternating in characteristic 2
        let id = BilinearForm::identity(&f2, 2);
        assert!(id.is_skew_symmetric());
        assert!(!id.is_symplectic());
        let f4 = gf(4);
        let mixed = BilinearForm::new(
            standard_symplectic_gram(&f4, 2),
            f4.identity_automorphism(),
            f4.automorphism(1),
        )
        .unwrap();
        assert!(!mixed.is_symplectic());
    }

    #[test]
    fn reflexive_examples() {
        let f3 = gf(3);
        assert!(BilinearForm::standard_symplectic(&f3, 4).unwrap().is_reflexive().unwrap());
        assert!(BilinearForm::identity(&f3, 3).is_reflexive().unwrap());
        let skewed = BilinearForm::plain(mat(&f3, &[&[1, 1], &[0, 1]])).unwrap();
        assert!(!skewed.is_reflexive().unwrap());
        // brute-force witness: Ω(e1, (1,2)) = 0 but Ω((1,2), e1) = 1
        assert_eq!(skewed.evaluate(&unit(2, 0), &v(&[1, 2])).unwrap(), Elem(0));
        assert_eq!(skewed.evaluate(&v(&[1, 2]), &unit(2, 0)).unwrap(), Elem(1));
        let singular = BilinearForm::plain(Matrix::zeros(&f3, 2, 2)).unwrap();
        assert!(matches!(singular.is_reflexive(), Err(Error::SingularForm)));
    }

    #[test]
    fn radical_examples() {
        let f2 = gf(2);
        assert_eq!(BilinearForm::identity(&f2, 4).radical().dim(), 0);
        assert_eq!(
            BilinearForm::plain(Matrix::zeros(&f2, 4, 4)).unwrap().radical(),
            Subspace::whole(&f2, 4)
        );
        let mut a = Matrix::zeros(&f2, 4, 4);
        a.set(0, 1, Elem::ONE);
        a.set(1, 0, Elem::ONE);
        let form = BilinearForm::plain(a).unwrap();
        assert!(!form.is_non_singular());
        assert_eq!(form.radical(), Subspace::coordinate(&f2, 4, &[2, 3]));
    }

    #[test]
    fn complement_examples() {
        let f2 = gf(2);
        let j = BilinearForm::standard_symplectic(&f2, 4).unwrap();
        assert_eq!(j.orthogonal_complement(&Subspace::whole(&f2, 4)).unwrap().dim(), 0);
        let e1 = Subspace::coordinate(&f2, 4, &[0]);
        let perp = j.orthogonal_complement(&e1).unwrap();
        assert_eq!(perp, Subspace::coordinate(&f2, 4, &[0, 2, 3]));
        // every vector y of GF(2)^4 with Ω(e1, y) = 0 lies in the complement
        for y in all_vectors(&f2, 4) {
            let zero = j.evaluate(&unit(4, 0), &y).unwrap().is_zero();
            assert_eq!(zero, perp.contains_vector(&y));
        }

        let f3 = gf(3);
        let id = BilinearForm::identity(&f3, 2);
        let s = Subspace::span(&f3, 2, &[v(&[1, 1])]).unwrap();
        assert_eq!(
            id.orthogonal_complement(&s).unwrap(),
            Subspace::span(&f3, 2, &[v(&[1, 2])]).unwrap()
        );
        let singular = BilinearForm::plain(Matrix::zeros(&f3, 2, 2)).unwrap();
        assert!(singular.orthogonal_complement(&s).is_err());
    }

    #[test]
    fn transpose_examples() {
        let f3 = gf(3);
        let id = BilinearForm::identity(&f3, 3);
        assert_eq!(id.transpose_form(), id);
        let j = BilinearForm::standard_symplectic(&f3, 4).unwrap();
        assert_eq!(j.transpose_form().gram(), &j.gram().neg());
        for x in all_vectors(&f3, 2) {
            for y in all_vectors(&f3, 2) {
                let skewed = BilinearForm::plain(mat(&f3, &[&[1, 1], &[0, 1]])).unwrap();
                assert_eq!(
                    skewed.transpose_form().evaluate(&x, &y).unwrap(),
                    skewed.evaluate(&y, &x).unwrap()
                );
            }
        }
    }

    #[test]
    fn pullback_examples() {
        let f3 = gf(3);
        let j = BilinearForm::standard_symplectic(&f3, 4).unwrap();
        assert_eq!(j.pullback(&SemilinearMap::identity(&f3, 4)).unwrap(), j);

        let id = BilinearForm::identity(&f3, 2);
        let scalar = SemilinearMap::linear(Matrix::identity(&f3, 2).scale(Elem(2))).unwrap();
        let a_squared = f3.mul(Elem(2), Elem(2));
        assert_eq!(id.pullback(&scalar).unwrap().gram(), &Matrix::identity(&f3, 2).scale(a_squared));

        let f2 = gf(2);
        let j2 = BilinearForm::standard_symplectic(&f2, 4).unwrap();
        let g = mat(&f2, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 0]]);
        let map = SemilinearMap::linear(g).unwrap();
        let back = j2.pullback(&map).unwrap();
        assert!(back.is_symplectic() && back.is_non_singular());
        for i in 0..4 {
            for k in 0..4 {
                let (ei, ek) = (unit(4, i), unit(4, k));
                assert_eq!(
                    back.evaluate(&ei, &ek).unwrap(),
                    j2.evaluate(&map.apply(&ei).unwrap(), &map.apply(&ek).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn pullback_through_semilinear_map_over_gf4() {
        let f4 = gf(4);
        let j = BilinearForm::standard_symplectic(&f4, 2).unwrap();
        let g = mat(&f4, &[&[2, 1], &[1, 2]]);
        let map = SemilinearMap::new(g, f4.automorphism(1)).unwrap();
        let back = j.pullback(&map).unwrap();
        for x in all_vectors(&f4, 2) {
            for y in all_vectors(&f4, 2) {
                assert_eq!(
                    back.evaluate(&x, &y).unwrap(),
                    j.evaluate(&map.apply(&x).unwrap(), &map.apply(&y).unwrap()).unwrap()
                );
            }
        }
        assert!(back.is_symplectic());
    }

    #[test]
    fn scale_and_twist() {
        let f3 = gf(3);
        let j = BilinearForm::standard_symplectic(&f3, 4).unwrap();
        assert_eq!(j.scale(Elem(1)).unwrap(), j);
        let j2 = j.scale(Elem(2)).unwrap();
        assert_eq!(j2.gram(), &j.gram().scale(Elem(2)));
        assert!(j2.is_symplectic());
        assert!(matches!(j.scale(Elem(0)), Err(Error::ZeroScalar)));

        let f4 = gf(4);
        let frob = f4.automorphism(1);
        let g = mat(&f4, &[&[0, 2, 1, 3], &[2, 0, 3, 1], &[1, 3, 0, 2], &[3, 1, 2, 0]]);
        let form = BilinearForm::plain(g).unwrap();
        assert!(form.is_symplectic());
        let tw = form.twist(frob);
        assert!(tw.is_symplectic());
        for x in all_vectors(&f4, 4).step_by(7) {
            for y in all_vectors(&f4, 4).step_by(11) {
                assert_eq!(tw.evaluate(&x, &y).unwrap(), f4.apply(frob, form.evaluate(&x, &y).unwrap()));
            }
        }
        assert_eq!(tw.untwisted().unwrap(), form);
    }

    #[test]
    fn symplectic_basis_examples() {
        let f2 = gf(2);
        let j = BilinearForm::standard_symplectic(&f2, 4).unwrap();
        let map = j.symplectic_basis().unwrap();
        assert_eq!(j.pullback(&map).unwrap().gram(), j.gram());

        let f3 = gf(3);
        // [[0,2],[1,0]] is alternating over GF(3) since 2 = -1
        let alt = BilinearForm::plain(mat(&f3, &[&[0, 2], &[1, 0]])).unwrap();
        let map = alt.symplectic_basis().unwrap();
        assert_eq!(alt.pullback(&map).unwrap().gram(), &standard_symplectic_gram(&f3, 2));
        let bad = BilinearForm::plain(mat(&f3, &[&[0, 1], &[1, 0]])).unwrap();
        assert!(matches!(bad.symplectic_basis(), Err(Error::NotSymplectic)));
        let odd = BilinearForm::identity(&f3, 3);
        assert!(matches!(odd.symplectic_basis(), Err(Error::OddDimension(3))));
        let singular = BilinearForm::plain(Matrix::zeros(&f3, 2, 2)).unwrap();
        assert!(matches!(singular.symplectic_basis(), Err(Error::SingularForm)));
    }

    #[test]
    fn apply_map_examples() {
        let f3 = gf(3);
        let s = Subspace::coordinate(&f3, 3, &[0]);
        assert_eq!(SemilinearMap::identity(&f3, 3).apply_subspace(&s).unwrap(), s);
        // permutation e1 -> e3
        let p = mat(&f3, &[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let perm = SemilinearMap::linear(p).unwrap();
        assert_eq!(perm.apply_subspace(&s).unwrap(), Subspace::coordinate(&f3, 3, &[2]));

        let f4 = gf(4);
        let frob = SemilinearMap::new(Matrix::identity(&f4, 2), f4.automorphism(1)).unwrap();
        let s = Subspace::span(&f4, 2, &[v(&[1, 2])]).unwrap();
        assert_eq!(
            frob.apply_subspace(&s).unwrap(),
            Subspace::span(&f4, 2, &[v(&[1, 3])]).unwrap()
        );
    }

    #[test]
    fn semilinear_composition_and_inverse() {
        let f4 = gf(4);
        let a = SemilinearMap::new(mat(&f4, &[&[1, 2], &[0, 3]]), f4.automorphism(1)).unwrap();
        let b = SemilinearMap::new(mat(&f4, &[&[2, 0], &[1, 1]]), f4.automorphism(1)).unwrap();
        let ab = a.compose(&b).unwrap();
        for x in all_vectors(&f4, 2) {
            let direct = a.apply(&b.apply(&x).unwrap()).unwrap();
            assert_eq!(ab.apply(&x).unwrap(), direct);
            assert_eq!(a.inverse().apply(&a.apply(&x).unwrap()).unwrap(), x);
        }
        assert!(a.projectively_equal(&a.scaled(Elem(3)).unwrap()));
        assert!(!a.projectively_equal(&b));
    }
}
