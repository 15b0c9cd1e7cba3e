//! Sets of planes on which a symplectic form restricts singularly, and the
//! incidence condition characterizing them for k = 2 and k = n − 2.
//!
//! For k = n − 2 a set X satisfies the condition when every hyperplane s has a
//! line F(s) ⊂ s such that the members of X inside s are exactly the
//! (n−2)-planes of s through F(s). For k = 2 the roles flip: every line s has a
//! hyperplane F(s) ⊃ s such that the members of X through s are exactly the
//! 2-planes through s inside F(s).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::gf::Field;
use crate::subspace::{Grassmannian, Subspace};

/// A set of k-planes of GF(q)^n, ordered by enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneSet {
    field: Field,
    n: usize,
    k: usize,
    members: BTreeSet<Subspace>,
}

impl PlaneSet {
    pub fn new(field: &Field, n: usize, k: usize) -> Result<PlaneSet> {
        if k > n {
            return Err(Error::InvalidDimension {
                n,
                k,
                reason: "k exceeds ambient dimension",
            });
        }
        Ok(PlaneSet {
            field: field.clone(),
            n,
            k,
            members: BTreeSet::new(),
        })
    }

    /// Collects planes, rejecting wrong dimensions and duplicates.
    pub fn from_planes(
        field: &Field,
        n: usize,
        k: usize,
        planes: impl IntoIterator<Item = Subspace>,
    ) -> Result<PlaneSet> {
        let mut set = PlaneSet::new(field, n, k)?;
        for p in planes {
            if !set.insert(p)? {
                return Err(Error::Verification("duplicate plane in set".into()));
            }
        }
        Ok(set)
    }

    /// All of 𝔾^n_k.
    pub fn full(field: &Field, n: usize, k: usize) -> Result<PlaneSet> {
        let g = Grassmannian::new(field, n, k)?;
        Ok(PlaneSet {
            field: field.clone(),
            n,
            k,
            members: g.iter().collect(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.order()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.members.contains(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subspace> {
        self.members.iter()
    }

    /// Returns whether the plane was newly inserted.
    pub fn insert(&mut self, s: Subspace) -> Result<bool> {
        if s.field() != &self.field || s.ambient_dim() != self.n || s.dim() != self.k {
            return Err(Error::InvalidDimension {
                n: self.n,
                k: s.dim(),
                reason: "plane does not belong to this Grassmannian",
            });
        }
        Ok(self.members.insert(s))
    }

    pub fn remove(&mut self, s: &Subspace) -> bool {
        self.members.remove(s)
    }

    fn same_parameters(&self, other: &PlaneSet) -> Result<()> {
        if self.field != other.field || self.n != other.n || self.k != other.k {
            return Err(Error::InvalidDimension {
                n: other.n,
                k: other.k,
                reason: "plane sets live in different Grassmannians",
            });
        }
        Ok(())
    }

    pub fn equal_sets(&self, other: &PlaneSet) -> Result<bool> {
        self.same_parameters(other)?;
        Ok(self.members == other.members)
    }

    /// `{f(s) : s ∈ self}` as a set of `k`-planes.
    pub fn image(&self, k: usize, f: impl Fn(&Subspace) -> Result<Subspace>) -> Result<PlaneSet> {
        PlaneSet::from_planes(&self.field, self.n, k, self.iter().map(f).collect::<Result<Vec<_>>>()?)
    }
}

/// `S^n_k(Ω)`: every k-plane on which `Ω` restricts to a rank-deficient form.
/// Odd k gives all of 𝔾^n_k, since an alternating form has even rank.
pub fn singular_set(form: &BilinearForm, k: usize) -> Result<PlaneSet> {
    if !form.is_non_singular() {
        return Err(Error::SingularForm);
    }
    if !form.is_symplectic() {
        return Err(Error::NotSymplectic);
    }
    let n = form.dim();
    if k == 0 || k >= n {
        return Err(Error::InvalidDimension {
            n,
            k,
            reason: "singular sets need 1 <= k <= n-1",
        });
    }
    let field = form.field();
    if k % 2 == 1 {
        return PlaneSet::full(field, n, k);
    }
    let mut out = PlaneSet::new(field, n, k)?;
    for l in Grassmannian::new(field, n, k)?.iter() {
        if form.restricted_gram(&l)?.rank() < k {
            out.members.insert(l);
        }
    }
    Ok(out)
}

/// `dim(l ∩ l⊥)`, the dimension of the radical of `Ω` restricted to `l`.
pub fn restricted_radical_dim(form: &BilinearForm, l: &Subspace) -> Result<usize> {
    Ok(l.intersect(&form.orthogonal_complement(l)?)?.dim())
}

/// Which incidence the witness map describes.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// k = n − 2: every hyperplane maps to a line inside it.
    HyperplaneToLine,
    /// k = 2: every line maps to a hyperplane through it.
    LineToHyperplane,
}

impl Direction {
    /// Natural direction for planes of dimension `k` in an `n`-space; for
    /// n = 4 both apply and lines are preferred.
    pub fn for_dims(n: usize, k: usize) -> Result<Direction> {
        if n < 4 {
            return Err(Error::InvalidDimension {
                n,
                k,
                reason: "condition S needs n >= 4",
            });
        }
        if k == 2 {
            Ok(Direction::LineToHyperplane)
        } else if k + 2 == n {
            Ok(Direction::HyperplaneToLine)
        } else {
            Err(Error::InvalidDimension {
                n,
                k,
                reason: "condition S is defined for k = 2 and k = n-2 only",
            })
        }
    }

    fn plane_dim(self, n: usize) -> usize {
        match self {
            Direction::HyperplaneToLine => n - 2,
            Direction::LineToHyperplane => 2,
        }
    }

    /// Dimension of the domain elements s.
    pub fn domain_dim(self, n: usize) -> usize {
        match self {
            Direction::HyperplaneToLine => n - 1,
            Direction::LineToHyperplane => 1,
        }
    }

    /// Dimension of the witness values F(s).
    pub fn value_dim(self, n: usize) -> usize {
        match self {
            Direction::HyperplaneToLine => 1,
            Direction::LineToHyperplane => n - 1,
        }
    }
}

/// The map F certifying the incidence condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessF {
    direction: Direction,
    assignments: BTreeMap<Subspace, Subspace>,
}

impl WitnessF {
    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn get(&self, s: &Subspace) -> Option<&Subspace> {
        self.assignments.get(s)
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    /// Pairs `(s, F(s))` in enumeration order of s.
    pub fn iter(&self) -> impl Iterator<Item = (&Subspace, &Subspace)> {
        self.assignments.iter()
    }

    /// Incidence `F(s) ⊂ s` (resp. `s ⊂ F(s)`) for every s, and the symmetry
    /// `F(s₁) ⊂ s₂ ⇔ F(s₂) ⊂ s₁` (resp. `s₁ ⊂ F(s₂) ⇔ s₂ ⊂ F(s₁)`).
    pub fn satisfies_incidence_conditions(&self) -> Result<bool> {
        // `below(a, b)`: the witness value of `a` meets the domain element `b`.
        let below = |a: (&Subspace, &Subspace), b: &Subspace| match self.direction {
            Direction::HyperplaneToLine => b.contains(a.1),
            Direction::LineToHyperplane => a.1.contains(b),
        };
        for (s, fs) in self.assignments.iter() {
            if !below((s, fs), s)? {
                return Ok(false);
            }
        }
        for a in self.assignments.iter() {
            for b in self.assignments.iter() {
                if below(a, b.0)? != below(b, a.0)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CounterexampleKind {
    /// No member of X is incident with s.
    NoIncidentMembers,
    /// The members incident with s share no common line (resp. span the whole space).
    NoCommonWitness,
    /// A plane that the incidence condition requires is missing from X.
    MissingPlane,
    /// A member of X incident with s is not incident with the candidate witness.
    UnexpectedPlane,
}

/// Where the incidence condition fails: the domain element s and a plane
/// violating the required equality there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub direction: Direction,
    pub s: Subspace,
    pub plane: Subspace,
    pub kind: CounterexampleKind,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            CounterexampleKind::NoIncidentMembers => "no member of the set is incident with s",
            CounterexampleKind::NoCommonWitness => "members incident with s have no common witness",
            CounterexampleKind::MissingPlane => "a required plane is missing",
            CounterexampleKind::UnexpectedPlane => "a member is not incident with the witness",
        };
        let rows = |sub: &Subspace| {
            sub.basis()
                .codes()
                .iter()
                .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("; ")
        };
        write!(f, "{what} (s = [{}], plane = [{}])", rows(&self.s), rows(&self.plane))
    }
}

/// Result of [`check_condition_s`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Accepted(WitnessF),
    Rejected(Counterexample),
}

impl CheckOutcome {
    pub fn witness(self) -> Result<WitnessF> {
        match self {
            CheckOutcome::Accepted(w) => Ok(w),
            CheckOutcome::Rejected(c) => Err(Error::ConditionS(Box::new(c))),
        }
    }

    pub fn is_accepted(&self) -> bool {
        matches!(self, CheckOutcome::Accepted(_))
    }
}

/// Decides the incidence condition in the natural direction for `X`'s dimensions.
pub fn check_condition_s(x: &PlaneSet) -> Result<CheckOutcome> {
    check_condition_s_via(x, Direction::for_dims(x.n(), x.k())?)
}

/// Decides the incidence condition in the given direction. Candidates are
/// forced: for k = n − 2, F(s) must be the intersection of the members inside
/// s; for k = 2, the sum of the members through s.
pub fn check_condition_s_via(x: &PlaneSet, direction: Direction) -> Result<CheckOutcome> {
    let (n, field) = (x.n(), x.field().clone());
    if n < 4 || direction.plane_dim(n) != x.k() {
        return Err(Error::InvalidDimension {
            n,
            k: x.k(),
            reason: "plane dimension does not match the requested direction",
        });
    }
    let k = x.k();
    let target = direction.value_dim(n);
    let mut assignments = BTreeMap::new();
    for s in Grassmannian::new(&field, n, direction.domain_dim(n))?.iter() {
        let incident = s.incident_planes(k)?;
        let members: Vec<&Subspace> = incident.iter().filter(|l| x.contains(l)).collect();
        let reject = |plane: &Subspace, kind| {
            Ok(CheckOutcome::Rejected(Counterexample {
                direction,
                s: s.clone(),
                plane: plane.clone(),
                kind,
            }))
        };
        if members.is_empty() {
            return reject(&incident[0], CounterexampleKind::NoIncidentMembers);
        }

        // Fold members into the candidate, remembering the member that
        // overshoots (intersection hits zero / sum hits everything).
        let mut candidate = members[0].clone();
        let mut overshoot = None;
        for &m in &members[1..] {
            candidate = match direction {
                Direction::HyperplaneToLine => candidate.intersect(m)?,
                Direction::LineToHyperplane => candidate.sum(m)?,
            };
            let over = match direction {
                Direction::HyperplaneToLine => candidate.dim() == 0,
                Direction::LineToHyperplane => candidate.dim() == n,
            };
            if over {
                overshoot = Some(m);
                break;
            }
        }
        if let Some(m) = overshoot {
            return reject(m, CounterexampleKind::NoCommonWitness);
        }
        if candidate.dim() != target {
            // Too large an intersection (too small a sum): pick the first
            // witness compatible with the candidate; some required plane is absent.
            let witness = match direction {
                Direction::HyperplaneToLine => Subspace::span(&field, n, &[candidate.basis().row(0)])?,
                Direction::LineToHyperplane => candidate.incident_planes(n - 1)?.swap_remove(0),
            };
            let missing = incident
                .iter()
                .find(|l| incident_with_witness(direction, l, &witness) && !x.contains(l));
            return match missing {
                Some(l) => reject(l, CounterexampleKind::MissingPlane),
                None => Err(Error::Verification(
                    "candidate witness has wrong dimension but no plane is missing".into(),
                )),
            };
        }
        for l in &incident {
            let want = incident_with_witness(direction, l, &candidate);
            let have = x.contains(l);
            if want && !have {
                return reject(l, CounterexampleKind::MissingPlane);
            }
            if have && !want {
                return reject(l, CounterexampleKind::UnexpectedPlane);
            }
        }
        assignments.insert(s, candidate);
    }
    Ok(CheckOutcome::Accepted(WitnessF {
        direction,
        assignments,
    }))
}

fn incident_with_witness(direction: Direction, plane: &Subspace, witness: &Subspace) -> bool {
    match direction {
        Direction::HyperplaneToLine => plane.contains(witness),
        Direction::LineToHyperplane => witness.contains(plane),
    }
    .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::BilinearForm;

    fn gf(q: u32) -> Field {
        Field::with_order(q).unwrap()
    }

    #[test]
    fn singular_set_examples() {
        let f2 = gf(2);
        let j = BilinearForm::standard_symplectic(&f2, 4).unwrap();
        let s = singular_set(&j, 2).unwrap();
        assert_eq!(s.len(), 15);
        // every singular plane is totally isotropic
        for l in s.iter() {
            assert!(j.restricted_gram(l).unwrap().is_zero());
        }
        assert_eq!(singular_set(&j, 3).unwrap().len(), 15);
        assert_eq!(singular_set(&j, 1).unwrap().len(), 15);

        let f3 = gf(3);
        let j3 = BilinearForm::standard_symplectic(&f3, 4).unwrap();
        assert_eq!(singular_set(&j3, 2).unwrap().len(), 40);
    }

    #[test]
    fn singular_set_rejects_bad_forms() {
        let f3 = gf(3);
        let id = BilinearForm::identity(&f3, 4);
        assert!(matches!(singular_set(&id, 2), Err(Error::NotSymplectic)));
        let j = BilinearForm::standard_symplectic(&f3, 4).unwrap();
        let mut g = j.gram().clone();
        g.set(2, 3, crate::Elem::ZERO);
        g.set(3, 2, crate::Elem::ZERO);
        let singular = BilinearForm::plain(g).unwrap();
        assert!(matches!(singular_set(&singular, 2), Err(Error::SingularForm)));
        assert!(singular_set(&j, 0).is_err());
        assert!(singular_set(&j, 4).is_err());
    }

    #[test]
    fn check_accepts_singular_sets_with_complement_witness() {
        let f2 = gf(2);
        let j = BilinearForm::standard_symplectic(&f2, 4).unwrap();
        let s = singular_set(&j, 2).unwrap();
        for direction in [Direction::HyperplaneToLine, Direction::LineToHyperplane] {
            let w = check_condition_s_via(&s, direction).unwrap().witness().unwrap();
            assert_eq!(w.len(), 15);
            for (dom, val) in w.iter() {
                assert_eq!(val, &j.orthogonal_complement(dom).unwrap());
            }
            assert!(w.satisfies_incidence_conditions().unwrap());
        }
    }

    #[test]
    fn check_rejects_empty_and_full_sets() {
        let f2 = gf(2);
        let empty = PlaneSet::new(&f2, 4, 2).unwrap();
        match check_condition_s(&empty).unwrap() {
            CheckOutcome::Rejected(c) => assert_eq!(c.kind, CounterexampleKind::NoIncidentMembers),
            other => panic!("{other:?}"),
        }
        let full = PlaneSet::full(&f2, 4, 2).unwrap();
        assert_eq!(full.len(), 35);
        match check_condition_s(&full).unwrap() {
            CheckOutcome::Rejected(c) => {
                assert_eq!(c.kind, CounterexampleKind::NoCommonWitness);
                assert_eq!(c.direction, Direction::LineToHyperplane);
                assert!(c.plane.contains(&c.s).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn check_rejects_removed_plane() {
        let f2 = gf(2);
        let j = BilinearForm::standard_symplectic(&f2, 4).unwrap();
        let mut s = singular_set(&j, 2).unwrap();
        let victim = s.iter().nth(3).unwrap().clone();
        s.remove(&victim);
        for direction in [Direction::HyperplaneToLine, Direction::LineToHyperplane] {
            match check_condition_s_via(&s, direction).unwrap() {
                CheckOutcome::Rejected(c) => {
                    assert!(!s.contains(&c.plane));
                    match direction {
                        Direction::HyperplaneToLine => assert!(c.s.contains(&c.plane).unwrap()),
                        Direction::LineToHyperplane => assert!(c.plane.contains(&c.s).unwrap()),
                    }
                }
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn check_rejects_unsupported_dimensions() {
        let f2 = gf(2);
        let j = BilinearForm::standard_symplectic(&f2, 6).unwrap();
        let s3 = singular_set(&j, 3).unwrap();
        assert!(check_condition_s(&s3).is_err());
        let s2 = singular_set(&j, 2).unwrap();
        assert!(check_condition_s_via(&s2, Direction::HyperplaneToLine).is_err());
        let tiny = PlaneSet::new(&f2, 3, 1).unwrap();
        assert!(check_condition_s(&tiny).is_err());
    }

    #[test]
    fn plane_set_membership_rules() {
        let f2 = gf(2);
        let mut x = PlaneSet::new(&f2, 4, 2).unwrap();
        let p = Subspace::coordinate(&f2, 4, &[0, 1]);
        assert!(x.insert(p.clone()).unwrap());
        assert!(!x.insert(p.clone()).unwrap());
        assert!(x.insert(Subspace::coordinate(&f2, 4, &[0])).is_err());
        assert!(PlaneSet::from_planes(&f2, 4, 2, [p.clone(), p]).is_err());
        let other = PlaneSet::new(&f2, 4, 3).unwrap();
        assert!(x.equal_sets(&other).is_err());
        assert!(x.equal_sets(&x.clone()).unwrap());
    }
}
