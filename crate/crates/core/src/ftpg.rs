//! Recovering a semilinear map from the permutation it induces on lines.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::forms::SemilinearMap;
use crate::gf::{Automorphism, Elem, Field, Matrix};
use crate::subspace::{unit, Grassmannian, IndexedGrassmannian, Subspace};

/// A total map from the lines of GF(q)^n to themselves, stored by line index.
#[derive(Clone, Debug)]
pub struct LineMap {
    lines: Arc<IndexedGrassmannian>,
    images: Vec<usize>,
}

impl PartialEq for LineMap {
    fn eq(&self, other: &LineMap) -> bool {
        self.field() == other.field() && self.n() == other.n() && self.images == other.images
    }
}

impl Eq for LineMap {}

/// The indexed set of lines of GF(q)^n.
pub fn line_index(field: &Field, n: usize) -> Result<Arc<IndexedGrassmannian>> {
    Ok(Arc::new(Grassmannian::new(field, n, 1)?.index()))
}

impl LineMap {
    /// Tabulates `f` over every line. Each value must be a line of the same space.
    pub fn from_fn(
        lines: &Arc<IndexedGrassmannian>,
        mut f: impl FnMut(&Subspace) -> Result<Subspace>,
    ) -> Result<LineMap> {
        let images = lines
            .iter()
            .map(|l| {
                let img = f(l)?;
                lines.position(&img).ok_or_else(|| {
                    Error::NotCollineation(format!(
                        "image of a line has dimension {} in ambient dimension {}",
                        img.dim(),
                        img.ambient_dim()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LineMap {
            lines: Arc::clone(lines),
            images,
        })
    }

    /// Builds a map from image indices in line enumeration order.
    pub fn from_indices(lines: &Arc<IndexedGrassmannian>, images: Vec<usize>) -> Result<LineMap> {
        if images.len() != lines.len() || images.iter().any(|&i| i >= lines.len()) {
            return Err(Error::NotCollineation("line map is not total over the lines".into()));
        }
        Ok(LineMap {
            lines: Arc::clone(lines),
            images,
        })
    }

    pub fn identity(lines: &Arc<IndexedGrassmannian>) -> LineMap {
        LineMap {
            lines: Arc::clone(lines),
            images: (0..lines.len()).collect(),
        }
    }

    /// The line map `l ↦ f(l)` of a semilinear map.
    pub fn induced_by(lines: &Arc<IndexedGrassmannian>, f: &SemilinearMap) -> Result<LineMap> {
        LineMap::from_fn(lines, |l| f.apply_subspace(l))
    }

    pub fn field(&self) -> &Field {
        self.lines.get(0).field()
    }

    pub fn n(&self) -> usize {
        self.lines.get(0).ambient_dim()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn lines(&self) -> &Arc<IndexedGrassmannian> {
        &self.lines
    }

    pub fn image_indices(&self) -> &[usize] {
        &self.images
    }

    /// Image of a line, or `None` if `l` is not a line of this space.
    pub fn get(&self, l: &Subspace) -> Option<&Subspace> {
        self.lines.position(l).map(|i| self.lines.get(self.images[i]))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Subspace, &Subspace)> {
        self.lines
            .iter()
            .zip(self.images.iter().map(|&i| self.lines.get(i)))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LineMap) -> Result<LineMap> {
        if self.field() != other.field() || self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        Ok(LineMap {
            lines: Arc::clone(&self.lines),
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images.iter().all(|&i| !std::mem::replace(&mut seen[i], true))
    }

    fn image_of_vector(&self, v: &[Elem]) -> Result<&Subspace> {
        let l = Subspace::span(self.field(), self.n(), &[v])?;
        self.get(&l)
            .ok_or_else(|| Error::NotCollineation("vector spans no line".into()))
    }
}

fn span_dim(field: &Field, n: usize, lines: &[&Subspace]) -> usize {
    let rows: Vec<&[Elem]> = lines.iter().map(|l| l.representative()).collect();
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(field, n, &rows).map(|m| m.rank()).unwrap_or(0)
}

/// Whether `f` is a bijection preserving linear independence.
///
/// Checks bijectivity, rank on all pairs, independence of every n-subset of
/// the frame images, and (for n ≥ 3) that collinear triples stay collinear.
/// For n ≤ 2 independence is vacuous and the map qualifies iff a semilinear
/// map induces it.
pub fn verify_collineation(f: &LineMap) -> bool {
    if !f.is_bijective() {
        return false;
    }
    let (field, n) = (f.field().clone(), f.n());
    if n <= 2 {
        return recover_semilinear(f).is_ok();
    }
    let lines = f.lines();
    let m = lines.len();
    for i in 0..m {
        for j in (i + 1)..m {
            let (a, b) = (lines.get(i), lines.get(j));
            let (fa, fb) = (lines.get(f.images[i]), lines.get(f.images[j]));
            if span_dim(&field, n, &[fa, fb]) != span_dim(&field, n, &[a, b]) {
                return false;
            }
            let Ok(image_span) = fa.sum(fb) else {
                return false;
            };
            let Ok(span) = a.sum(b) else {
                return false;
            };
            let Ok(on_line) = span.incident_planes(1) else {
                return false;
            };
            for p in on_line {
                let fp = f.get(&p).expect("line of this space");
                if !image_span.contains(fp).unwrap_or(false) {
                    return false;
                }
            }
        }
    }
    let frame = frame_vectors(&field, n);
    let Ok(images) = frame
        .iter()
        .map(|v| f.image_of_vector(v))
        .collect::<Result<Vec<_>>>()
    else {
        return false;
    };
    (0..=n).all(|skip| {
        let subset: Vec<&Subspace> = images
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, l)| *l)
            .collect();
        span_dim(&field, n, &subset) == n
    })
}

/// `e₁, …, e_n, e₁ + … + e_n`.
fn frame_vectors(field: &Field, n: usize) -> Vec<Vec<Elem>> {
    let mut out: Vec<Vec<Elem>> = (0..n).map(|i| unit(n, i)).collect();
    out.push(vec![field.elem(1).expect("one"); n]);
    out
}

/// Reconstructs `(G, σ)` inducing `f`, with `G` determined up to a scalar.
///
/// The frame `e₁, …, e_n, e₁+…+e_n` fixes `G`; the image of `span(e₁ + a·e₂)`
/// for a primitive `a` fixes `σ`. The result is checked against every line,
/// so a map that is not a collineation is always rejected.
pub fn recover_semilinear(f: &LineMap) -> Result<SemilinearMap> {
    let (field, n) = (f.field().clone(), f.n());
    let frame = frame_vectors(&field, n);
    let reps = frame
        .iter()
        .map(|v| Ok(f.image_of_vector(v)?.representative().to_vec()))
        .collect::<Result<Vec<_>>>()?;

    // Columns v₁..v_n, then w = Σ cᵢvᵢ.
    let v = Matrix::from_rows(&field, n, &reps[..n])?.transpose();
    let v_inv = v
        .invert()
        .map_err(|_| Error::NotCollineation("images of the coordinate axes are dependent".into()))?;
    let c = v_inv.mul_vec(&reps[n])?;
    if c.iter().any(|x| x.is_zero()) {
        return Err(Error::NotCollineation(
            "image of the unit point lies in a coordinate hyperplane".into(),
        ));
    }
    let mut g = v.clone();
    for (col, &ci) in c.iter().enumerate() {
        for row in 0..n {
            g.set(row, col, field.mul(g.get(row, col), ci));
        }
    }

    let sigma = if field.degree() == 1 || n < 2 {
        field.identity_automorphism()
    } else {
        let a = field.generator();
        let mut probe = unit(n, 0);
        probe[1] = a;
        let r = f.image_of_vector(&probe)?.representative().to_vec();
        let coords = g.invert()?.mul_vec(&r)?;
        if coords[0].is_zero() || coords[2..].iter().any(|x| !x.is_zero()) {
            return Err(Error::NotCollineation(
                "image of a point on the first coordinate line left that line".into(),
            ));
        }
        let b = field.div(coords[1], coords[0])?;
        automorphism_sending(&field, a, b).ok_or_else(|| Error::NotCollineation("no field automorphism matches".into()))?
    };

    let map = SemilinearMap::new(g, sigma)?;
    verify_induces(&map, f)?;
    Ok(map)
}

fn verify_induces(map: &SemilinearMap, f: &LineMap) -> Result<()> {
    for (l, fl) in f.iter() {
        if &map.apply_subspace(l)? != fl {
            return Err(Error::NotCollineation(
                "recovered map disagrees with the line map".into(),
            ));
        }
    }
    Ok(())
}

/// The first automorphism `σ` with `σ(a) = b`; unique when `a` is primitive.
pub fn automorphism_sending(field: &Field, a: Elem, b: Elem) -> Option<Automorphism> {
    field.automorphisms().find(|&s| field.apply(s, a) == b)
}
