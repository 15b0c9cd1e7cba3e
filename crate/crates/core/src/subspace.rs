//! Subspaces of GF(q)^n and enumeration of Grassmannians.
//!
//! A [`Subspace`] is stored as the reduced row-echelon form of a basis, so two
//! values are equal as sets exactly when their basis matrices agree entrywise.
//! The derived ordering matches enumeration order: first by the pivot columns
//! (lexicographic), then by the free entries read row-major.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, Matrix};

#[derive(Clone, Debug)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.basis.cols() == other.basis.cols()
            && self.pivots == other.pivots
            && self.basis.entries() == other.basis.entries()
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.basis.cols().hash(state);
        self.pivots.hash(state);
        self.basis.entries().hash(state);
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.basis
            .cols()
            .cmp(&other.basis.cols())
            .then(self.pivots.len().cmp(&other.pivots.len()))
            .then_with(|| self.pivots.cmp(&other.pivots))
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subspace {
    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Subspace {
        let r = m.rref();
        Subspace {
            basis: r.matrix.truncate_rows(r.rank),
            pivots: r.pivots,
        }
    }

    pub fn span<V: AsRef<[Elem]>>(field: &Field, n: usize, vectors: &[V]) -> Result<Subspace> {
        Ok(Subspace::from_matrix(&Matrix::from_rows(field, n, vectors)?))
    }

    pub fn zero(field: &Field, n: usize) -> Subspace {
        Subspace {
            basis: Matrix::zeros(field, 0, n),
            pivots: Vec::new(),
        }
    }

    pub fn whole(field: &Field, n: usize) -> Subspace {
        Subspace {
            basis: Matrix::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(field: &Field, n: usize, indices: &[usize]) -> Subspace {
        let rows: Vec<Vec<Elem>> = indices.iter().map(|&i| unit(n, i)).collect();
        Subspace::span(field, n, &rows).expect("unit vectors have length n")
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Basis in reduced row-echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The canonical representative of a line: its single basis row.
    pub fn representative(&self) -> &[Elem] {
        debug_assert_eq!(self.dim(), 1);
        self.basis.row(0)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                got: other.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the subspace.
    fn reduce(&self, v: &mut [Elem]) {
        let f = self.field();
        for (row, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c.is_zero() {
                continue;
            }
            let nc = f.neg(c);
            for (x, &b) in v.iter_mut().zip(self.basis.row(row)) {
                *x = f.add(*x, f.mul(nc, b));
            }
        }
    }

    pub fn contains_vector(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|e| e.is_zero())
    }

    /// Whether `inner ⊆ self`.
    pub fn contains(&self, inner: &Subspace) -> Result<bool> {
        self.check_ambient(inner)?;
        Ok(inner.dim() <= self.dim() && inner.basis.row_iter().all(|r| self.contains_vector(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::from_matrix(&self.basis.stack(&other.basis)?))
    }

    /// `self ∩ other`, computed as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let ann = self.annihilator().basis.stack(&other.annihilator().basis)?;
        Ok(Subspace::from_matrix(&ann.kernel()))
    }

    /// `{y : x·y = 0 for all x in self}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::whole(self.field(), self.ambient_dim());
        }
        Subspace::from_matrix(&self.basis.kernel())
    }

    /// Every k-subspace incident with `self`: those contained in it when
    /// `dim self > k`, those containing it when `dim self < k`.
    pub fn incident_planes(&self, k: usize) -> Result<Vec<Subspace>> {
        let (n, d) = (self.ambient_dim(), self.dim());
        let field = self.field().clone();
        match d.cmp(&k) {
            Ordering::Equal => Err(Error::InvalidDimension {
                n,
                k,
                reason: "incident planes need dim s != k",
            }),
            Ordering::Greater => Ok(Grassmannian::new(&field, d, k)?
                .iter()
                .map(|c| {
                    Subspace::from_matrix(&c.basis.mul(&self.basis).expect("k x d times d x n"))
                })
                .collect()),
            Ordering::Less => {
                if k > n {
                    return Err(Error::InvalidDimension {
                        n,
                        k,
                        reason: "k exceeds ambient dimension",
                    });
                }
                // Complement spanned by the unit vectors at non-pivot columns.
                let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
                let comp = Subspace::coordinate(&field, n, &free);
                Ok(Grassmannian::new(&field, n - d, k - d)?
                    .iter()
                    .map(|c| {
                        let lifted = c.basis.mul(&comp.basis).expect("coefficients times complement");
                        Subspace::from_matrix(&lifted.stack(&self.basis).expect("same width"))
                    })
                    .collect())
            }
        }
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![Elem::ZERO; n];
    v[i] = Elem::ONE;
    v
}

/// Every vector of GF(q)^n, in odometer order with the last coordinate fastest.
pub fn all_vectors(field: &Field, n: usize) -> impl Iterator<Item = Vec<Elem>> {
    let q = field.order();
    (0..q.pow(n as u32)).map(move |mut idx| {
        let mut v = vec![Elem::ZERO; n];
        for x in v.iter_mut().rev() {
            *x = Elem((idx % q) as u8);
            idx /= q;
        }
        v
    })
}

/// Number of k-subspaces of GF(q)^n.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    // [n, k] = [n-1, k-1] + q^k [n-1, k]
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for m in 1..=n {
        for j in (1..=k.min(m)).rev() {
            row[j] = row[j - 1] + (q as u128).pow(j as u32) * row[j];
        }
    }
    row[k]
}

/// The Grassmannian of k-subspaces of GF(q)^n with its enumeration order:
/// pivot-column sets in lexicographic order, and for each pivot set the free
/// entries (row-major) counted like an odometer with the last entry fastest.
#[derive(Clone, Debug)]
pub struct Grassmannian {
    field: Field,
    n: usize,
    k: usize,
}

impl Grassmannian {
    pub fn new(field: &Field, n: usize, k: usize) -> Result<Grassmannian> {
        if k > n {
            return Err(Error::InvalidDimension {
                n,
                k,
                reason: "k exceeds ambient dimension",
            });
        }
        Ok(Grassmannian {
            field: field.clone(),
            n,
            k,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn count(&self) -> u128 {
        gaussian_binomial(self.n, self.k, self.field.order() as u64)
    }

    pub fn iter(&self) -> GrassmannianIter {
        GrassmannianIter::new(self.field.clone(), self.n, self.k)
    }

    /// Materializes the enumeration with a reverse lookup.
    pub fn index(&self) -> IndexedGrassmannian {
        let planes: Vec<Subspace> = self.iter().collect();
        let lookup = planes.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        IndexedGrassmannian { planes, lookup }
    }
}

pub struct GrassmannianIter {
    field: Field,
    n: usize,
    k: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<u8>,
    done: bool,
}

impl GrassmannianIter {
    fn new(field: Field, n: usize, k: usize) -> Self {
        let mut it = GrassmannianIter {
            field,
            n,
            k,
            pivots: (0..k).collect(),
            free: Vec::new(),
            digits: Vec::new(),
            done: k > n,
        };
        it.reset_free();
        it
    }

    fn reset_free(&mut self) {
        self.free.clear();
        for (r, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..self.n {
                if !self.pivots.contains(&c) {
                    self.free.push((r, c));
                }
            }
        }
        self.digits = vec![0; self.free.len()];
    }

    fn next_pivots(&mut self) -> bool {
        let (n, k) = (self.n, self.k);
        let Some(i) = (0..k).rev().find(|&i| self.pivots[i] < n - k + i) else {
            return false;
        };
        self.pivots[i] += 1;
        for j in i + 1..k {
            self.pivots[j] = self.pivots[j - 1] + 1;
        }
        true
    }

    fn advance(&mut self) {
        let q = self.field.order();
        for d in self.digits.iter_mut().rev() {
            if (*d as usize) + 1 < q {
                *d += 1;
                return;
            }
            *d = 0;
        }
        if self.next_pivots() {
            self.reset_free();
        } else {
            self.done = true;
        }
    }

    fn current(&self) -> Subspace {
        let mut m = Matrix::zeros(&self.field, self.k, self.n);
        for (r, &p) in self.pivots.iter().enumerate() {
            m.set(r, p, Elem::ONE);
        }
        for (&(r, c), &d) in self.free.iter().zip(&self.digits) {
            m.set(r, c, Elem(d));
        }
        Subspace {
            basis: m,
            pivots: self.pivots.clone(),
        }
    }
}

impl Iterator for GrassmannianIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let s = self.current();
        self.advance();
        Some(s)
    }
}

/// A fully enumerated Grassmannian with position lookup.
#[derive(Clone, Debug)]
pub struct IndexedGrassmannian {
    planes: Vec<Subspace>,
    lookup: HashMap<Subspace, usize>,
}

impl IndexedGrassmannian {
    pub fn len(&self) -> usize {
        self.planes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.planes.is_empty()
    }

    pub fn get(&self, i: usize) -> &Subspace {
        &self.planes[i]
    }

    pub fn position(&self, s: &Subspace) -> Option<usize> {
        self.lookup.get(s).copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subspace> {
        self.planes.iter()
    }
}
