//! Recovering a non-singular symplectic form from its singular set.
//!
//! For k = n − 2 the witness F of the incidence condition is composed with the
//! complement map of a fixed reflexive form Ω₀ (the identity Gram). The result
//! is a collineation of lines, which [`recover_semilinear`] turns into a
//! semilinear map; its automorphism fixes the shape of the unknown form, whose
//! Gram is then solved for directly. For k = 2 the set is first carried to
//! (n−2)-planes by the Ω₀ complement map, and the form found there is pulled
//! back through the collineation `l ↦ (l^⊥₀)^⊥Ω`.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::forms::{BilinearForm, SemilinearMap};
use crate::ftpg::{line_index, recover_semilinear, verify_collineation, LineMap};
use crate::gf::{Elem, Field, Matrix};
use crate::sample;
use crate::singsets::{check_condition_s_via, singular_set, Direction, PlaneSet, WitnessF};
use crate::subspace::Subspace;

/// Which pipeline reconstructs the form.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Via {
    /// Work with the hyperplane-to-line witness; requires k = n − 2.
    Direct,
    /// Dualize to (n−2)-planes first; requires k = 2.
    Dual,
}

impl fmt::Display for Via {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Via::Direct => "direct",
            Via::Dual => "dual",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct VerificationFlags {
    /// Every line is Ω₀-orthogonal to its image, and orthogonality of `t₁`
    /// with `f(t₂)` is symmetric in `t₁, t₂`.
    pub orthogonality: bool,
    pub non_singular: bool,
    pub symplectic: bool,
    /// The witness equals `s ↦ s^⊥Ω′` everywhere.
    pub witness_matches: bool,
    /// `S(Ω′) = X`.
    pub equal_sets: bool,
}

impl VerificationFlags {
    pub fn all(&self) -> bool {
        self.orthogonality
            && self.non_singular
            && self.symplectic
            && self.witness_matches
            && self.equal_sets
    }
}

/// A successful reconstruction. Only produced when every flag holds.
#[derive(Clone, Debug)]
pub struct ReconstructionReport {
    pub q: usize,
    pub n: usize,
    pub k: usize,
    pub set_size: usize,
    pub via: Via,
    pub witness: WitnessF,
    pub map: SemilinearMap,
    pub form: BilinearForm,
    pub flags: VerificationFlags,
    /// Wall time; `None` where no clock is available (wasm32).
    pub elapsed: Option<Duration>,
}

impl fmt::Display for ReconstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fl = &self.flags;
        writeln!(f, "input: q={} n={} k={} planes={}", self.q, self.n, self.k, self.set_size)?;
        writeln!(f, "pipeline: {}", self.via)?;
        writeln!(f, "witness: {} assignments", self.witness.len())?;
        writeln!(f, "collineation: sigma={}", self.map.sigma())?;
        for row in self.map.matrix().codes() {
            let row: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        writeln!(
            f,
            "flags: orthogonality={} non_singular={} symplectic={} witness_matches={} equal_sets={}",
            fl.orthogonality, fl.non_singular, fl.symplectic, fl.witness_matches, fl.equal_sets
        )?;
        match self.elapsed {
            Some(t) => write!(f, "elapsed: {:.3}s", t.as_secs_f64()),
            None => write!(f, "elapsed: unavailable"),
        }
    }
}

/// Reconstructs with the direct pipeline when k = n − 2, otherwise the dual one.
pub fn reconstruct_form(x: &PlaneSet) -> Result<ReconstructionReport> {
    let via = if x.k() + 2 == x.n() { Via::Direct } else { Via::Dual };
    reconstruct_form_via(x, via)
}

pub fn reconstruct_form_via(x: &PlaneSet, via: Via) -> Result<ReconstructionReport> {
    let start = clock();
    let (n, k) = (x.n(), x.k());
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if n < 4 {
        return Err(Error::InvalidDimension {
            n,
            k,
            reason: "reconstruction needs n >= 4",
        });
    }
    let wanted = match via {
        Via::Direct => n - 2,
        Via::Dual => 2,
    };
    if k != wanted {
        return Err(Error::InvalidDimension {
            n,
            k,
            reason: match via {
                Via::Direct => "the direct pipeline needs k = n-2",
                Via::Dual => "the dual pipeline needs k = 2",
            },
        });
    }

    let omega0 = BilinearForm::identity(x.field(), n);
    if !omega0.is_reflexive()? {
        return Err(Error::Verification("reference form is not reflexive".into()));
    }
    let lines = line_index(x.field(), n)?;

    let (witness, map, form, orthogonality) = match via {
        Via::Direct => {
            let d = direct(x, &omega0, &lines)?;
            (d.witness, d.map, d.form, d.orthogonality)
        }
        Via::Dual => {
            let witness = check_condition_s_via(x, Direction::LineToHyperplane)?.witness()?;
            let gx = x.image(n - 2, |s| omega0.orthogonal_complement(s))?;
            let d = direct(&gx, &omega0, &lines).map_err(|e| match e {
                Error::ConditionS(c) => Error::Verification(format!(
                    "dual image of an accepted set was rejected: {c}"
                )),
                other => other,
            })?;
            let h = LineMap::from_fn(&lines, |l| {
                d.form.orthogonal_complement(&omega0.orthogonal_complement(l)?)
            })?;
            if !verify_collineation(&h) {
                return Err(Error::NotCollineation(
                    "composed complement maps do not form a collineation".into(),
                ));
            }
            let h = recover_semilinear(&h)?;
            let mut form = d.form.pullback(&h)?;
            if form.sigma1() == form.sigma2() {
                form = form.untwisted()?;
            }
            (witness, h, form, d.orthogonality)
        }
    };

    let flags = verify(x, &witness, &form, orthogonality)?;
    if !flags.all() {
        return Err(Error::Verification(format!(
            "reconstructed form failed verification: {flags:?}"
        )));
    }
    Ok(ReconstructionReport {
        q: x.q(),
        n,
        k,
        set_size: x.len(),
        via,
        witness,
        map,
        form,
        flags,
        elapsed: start.map(|t| t.elapsed()),
    })
}

#[cfg(not(target_arch = "wasm32"))]
fn clock() -> Option<Instant> {
    Some(Instant::now())
}

#[cfg(target_arch = "wasm32")]
fn clock() -> Option<Instant> {
    None
}

struct DirectResult {
    witness: WitnessF,
    map: SemilinearMap,
    form: BilinearForm,
    orthogonality: bool,
}

fn direct(
    x: &PlaneSet,
    omega0: &BilinearForm,
    lines: &std::sync::Arc<crate::subspace::IndexedGrassmannian>,
) -> Result<DirectResult> {
    let field = x.field().clone();
    let n = x.n();
    let witness = check_condition_s_via(x, Direction::HyperplaneToLine)?.witness()?;

    let f = LineMap::from_fn(lines, |l| {
        let h = omega0.orthogonal_complement(l)?;
        witness
            .get(&h)
            .cloned()
            .ok_or_else(|| Error::Verification("witness is not total over hyperplanes".into()))
    })?;
    let orthogonality = orthogonality_conditions(omega0, &f)?;
    if !orthogonality {
        return Err(Error::Verification(
            "composed witness violates the orthogonality conditions".into(),
        ));
    }
    if !verify_collineation(&f) {
        return Err(Error::NotCollineation(
            "composed witness is not a collineation".into(),
        ));
    }
    let map = recover_semilinear(&f)?;

    // Unknown Gram A with Ω′(x, y) = σ(x)ᵀ A y: every basis row b of a
    // hyperplane s gives σ(b)ᵀ A w = 0 for F(s) = span(w).
    let sigma = map.sigma();
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for (s, fs) in witness.iter() {
        let w = fs.representative();
        for b in s.basis().row_iter() {
            let sb = field.apply_slice(sigma, b);
            let mut row = Vec::with_capacity(n * n);
            for &bi in &sb {
                for &wj in w {
                    row.push(field.mul(bi, wj));
                }
            }
            rows.push(row);
        }
    }
    let solutions = Matrix::from_rows(&field, n * n, &rows)?.kernel();
    if solutions.rows() != 1 {
        return Err(Error::SolutionSpace(solutions.rows()));
    }
    let gram_rows: Vec<&[Elem]> = solutions.row(0).chunks(n).collect();
    let gram = Matrix::from_rows(&field, n, &gram_rows)?;
    let form = BilinearForm::new(gram, sigma, field.identity_automorphism())?;
    Ok(DirectResult {
        witness,
        map,
        form,
        orthogonality,
    })
}

fn orthogonal(omega0: &BilinearForm, a: &Subspace, b: &Subspace) -> Result<bool> {
    Ok(omega0.evaluate(a.representative(), b.representative())?.is_zero())
}

/// `l ⊥₀ f(l)` for every line, and `t₁ ⊥₀ f(t₂) ⇔ t₂ ⊥₀ f(t₁)` for every pair.
fn orthogonality_conditions(omega0: &BilinearForm, f: &LineMap) -> Result<bool> {
    for (l, fl) in f.iter() {
        if !orthogonal(omega0, l, fl)? {
            return Ok(false);
        }
    }
    let pairs: Vec<(&Subspace, &Subspace)> = f.iter().collect();
    for (i, &(t1, ft1)) in pairs.iter().enumerate() {
        for &(t2, ft2) in &pairs[i + 1..] {
            if orthogonal(omega0, t1, ft2)? != orthogonal(omega0, t2, ft1)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn verify(
    x: &PlaneSet,
    witness: &WitnessF,
    form: &BilinearForm,
    orthogonality: bool,
) -> Result<VerificationFlags> {
    let non_singular = form.is_non_singular();
    let symplectic = form.is_symplectic();
    let mut witness_matches = non_singular;
    let mut equal_sets = false;
    if non_singular {
        for (s, fs) in witness.iter() {
            if &form.orthogonal_complement(s)? != fs {
                witness_matches = false;
                break;
            }
        }
        if symplectic {
            equal_sets = singular_set(form, x.k())?.equal_sets(x)?;
        }
    }
    Ok(VerificationFlags {
        orthogonality,
        non_singular,
        symplectic,
        witness_matches,
        equal_sets,
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every invertible alternating Gram.
    Exhaustive,
    /// Seeded pullbacks of the standard form through random semilinear maps.
    Sampled,
}

/// Counts from [`verify_theorem`]. `failures` lists one note per failing form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremSummary {
    pub q: usize,
    pub n: usize,
    pub k: usize,
    pub mode: Mode,
    pub forms: usize,
    pub distinct_ssets: usize,
    pub failures: Vec<String>,
}

impl fmt::Display for TheoremSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled => "sampled",
        };
        write!(
            f,
            "q={} n={} k={} mode={} distinct_ssets={} forms={} failures={}",
            self.q,
            self.n,
            self.k,
            mode,
            self.distinct_ssets,
            self.forms,
            self.failures.len()
        )
    }
}

/// Every invertible alternating `n × n` Gram over `field`, in lexicographic
/// order of the strict upper triangle.
pub fn alternating_grams(field: &Field, n: usize) -> impl Iterator<Item = Matrix> + '_ {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let q = field.order();
    let total = (q as u128).checked_pow(slots.len() as u32).unwrap_or(u128::MAX);
    (0..total).filter_map(move |mut idx| {
        let mut m = Matrix::zeros(field, n, n);
        for &(i, j) in slots.iter().rev() {
            let e = Elem((idx % q as u128) as u8);
            idx /= q as u128;
            m.set(i, j, e);
            m.set(j, i, field.neg(e));
        }
        m.is_invertible().then_some(m)
    })
}

/// Checks both directions of the characterization on a family of forms:
/// the singular set of each form passes the incidence check with witness
/// `s ↦ s⊥`, and reconstruction from that set reproduces it. For n = 4 both
/// pipelines are run.
pub fn verify_theorem(
    q: u32,
    n: usize,
    k: usize,
    mode: Mode,
    samples: usize,
    seed: u64,
) -> Result<TheoremSummary> {
    let field = Field::with_order(q)?;
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    Direction::for_dims(n, k)?;
    let forms: Vec<BilinearForm> = match mode {
        Mode::Exhaustive => alternating_grams(&field, n)
            .map(BilinearForm::plain)
            .collect::<Result<_>>()?,
        Mode::Sampled => {
            let mut rng = sample::rng(seed);
            (0..samples)
                .map(|_| sample::symplectic_form(&field, n, &mut rng))
                .collect::<Result<_>>()?
        }
    };
    let mut seen = HashSet::new();
    let mut failures = Vec::new();
    for (i, form) in forms.iter().enumerate() {
        match round_trip(form, k) {
            Ok(set) => {
                seen.insert(set);
            }
            Err(e) => failures.push(format!("form {i}: {e}")),
        }
    }
    Ok(TheoremSummary {
        q: field.order(),
        n,
        k,
        mode,
        forms: forms.len(),
        distinct_ssets: seen.len(),
        failures,
    })
}

fn round_trip(form: &BilinearForm, k: usize) -> Result<PlaneSet> {
    let n = form.dim();
    let set = singular_set(form, k)?;
    let mut directions = vec![];
    let mut vias = vec![];
    if k + 2 == n {
        directions.push(Direction::HyperplaneToLine);
        vias.push(Via::Direct);
    }
    if k == 2 {
        directions.push(Direction::LineToHyperplane);
        vias.push(Via::Dual);
    }
    for d in directions {
        let witness = check_condition_s_via(&set, d)?.witness()?;
        for (s, fs) in witness.iter() {
            if &form.orthogonal_complement(s)? != fs {
                return Err(Error::Verification("witness differs from the complement map".into()));
            }
        }
    }
    for via in vias {
        let report = reconstruct_form_via(&set, via)?;
        if !singular_set(&report.form, k)?.equal_sets(&set)? {
            return Err(Error::Verification(format!("{via} round trip changed the set")));
        }
    }
    Ok(set)
}
