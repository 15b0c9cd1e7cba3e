use grassform::sample;
use grassform::singsets::{
    check_condition_s, check_condition_s_via, restricted_radical_dim, singular_set, CheckOutcome,
    Direction, PlaneSet,
};
use grassform::{BilinearForm, Field, Grassmannian, Subspace};

fn gf(q: u32) -> Field {
    Field::with_order(q).unwrap()
}

fn forms(q: u32, n: usize, count: usize, seed: u64) -> Vec<BilinearForm> {
    let field = gf(q);
    let mut rng = sample::rng(seed);
    let mut out = vec![BilinearForm::standard_symplectic(&field, n).unwrap()];
    out.extend((0..count).map(|_| sample::symplectic_form(&field, n, &mut rng).unwrap()));
    out
}

#[test]
fn radical_criterion_matches_rank_criterion() {
    for q in [2, 3] {
        for form in forms(q, 4, 3, 1) {
            for k in 1..=3 {
                let s = singular_set(&form, k).unwrap();
                for l in Grassmannian::new(form.field(), 4, k).unwrap().iter() {
                    let by_rank = form.restricted_gram(&l).unwrap().rank() < k;
                    let by_radical = restricted_radical_dim(&form, &l).unwrap() >= 1;
                    assert_eq!(by_rank, by_radical);
                    assert_eq!(s.contains(&l), by_rank);
                }
            }
        }
    }
}

#[test]
fn singular_planes_in_a_hyperplane_are_those_through_its_complement() {
    for (q, n) in [(2, 4), (3, 4), (2, 6)] {
        let form = &forms(q, n, 1, 2)[1];
        let s_set = singular_set(form, n - 2).unwrap();
        for s in Grassmannian::new(form.field(), n, n - 1).unwrap().iter() {
            let perp = form.orthogonal_complement(&s).unwrap();
            assert_eq!(perp.dim(), 1);
            for l in s.incident_planes(n - 2).unwrap() {
                assert_eq!(s_set.contains(&l), l.contains(&perp).unwrap());
            }
        }
    }
}

#[test]
fn complement_map_carries_singular_sets_across() {
    for n in [4, 6] {
        let form = &forms(2, n, 1, 3)[1];
        let s2 = singular_set(form, 2).unwrap();
        let image = s2.image(n - 2, |l| form.orthogonal_complement(l)).unwrap();
        assert_eq!(image.len(), s2.len());
        assert!(image.equal_sets(&singular_set(form, n - 2).unwrap()).unwrap());
    }
}

#[test]
fn scaling_and_frobenius_preserve_singular_sets() {
    for q in [3, 4] {
        let field = gf(q);
        for form in forms(q, 4, 3, 4) {
            let base = singular_set(&form, 2).unwrap();
            for a in field.elements().filter(|a| !a.is_zero()) {
                let scaled = singular_set(&form.scale(a).unwrap(), 2).unwrap();
                assert!(scaled.equal_sets(&base).unwrap());
            }
            for sigma in field.automorphisms() {
                let twisted = form.twist(sigma).untwisted().unwrap();
                assert!(singular_set(&twisted, 2).unwrap().equal_sets(&base).unwrap());
            }
        }
    }
}

#[test]
fn checker_accepts_singular_sets_with_complement_witness() {
    for (q, n, k) in [(2, 4, 2), (3, 4, 2), (4, 4, 2), (2, 6, 4), (2, 6, 2)] {
        for form in forms(q, n, 2, 5) {
            let x = singular_set(&form, k).unwrap();
            let directions: &[Direction] = if n == 4 {
                &[Direction::HyperplaneToLine, Direction::LineToHyperplane]
            } else if k == 2 {
                &[Direction::LineToHyperplane]
            } else {
                &[Direction::HyperplaneToLine]
            };
            for &d in directions {
                let w = check_condition_s_via(&x, d).unwrap().witness().unwrap();
                let domain = Grassmannian::new(form.field(), n, d.domain_dim(n)).unwrap();
                assert_eq!(w.len() as u128, domain.count());
                for (s, fs) in w.iter() {
                    assert_eq!(fs, &form.orthogonal_complement(s).unwrap());
                }
                assert!(w.satisfies_incidence_conditions().unwrap());
            }
        }
    }
}

/// Any F satisfying the incidence equality must equal the checker's witness:
/// try every candidate value at every s.
#[test]
fn witness_is_unique() {
    let field = gf(2);
    let form = &forms(2, 4, 1, 6)[1];
    let x = singular_set(form, 2).unwrap();
    let w = check_condition_s_via(&x, Direction::HyperplaneToLine)
        .unwrap()
        .witness()
        .unwrap();
    for s in Grassmannian::new(&field, 4, 3).unwrap().iter() {
        let members: Vec<Subspace> = s
            .incident_planes(2)
            .unwrap()
            .into_iter()
            .filter(|l| x.contains(l))
            .collect();
        let candidates: Vec<Subspace> = s
            .incident_planes(1)
            .unwrap()
            .into_iter()
            .filter(|line| {
                s.incident_planes(2)
                    .unwrap()
                    .iter()
                    .all(|l| l.contains(line).unwrap() == members.contains(l))
            })
            .collect();
        assert_eq!(candidates, vec![w.get(&s).unwrap().clone()]);
    }
}

#[test]
fn equal_sets_examples() {
    let f3 = gf(3);
    let j = BilinearForm::standard_symplectic(&f3, 4).unwrap();
    let a = singular_set(&j, 2).unwrap();
    assert!(a.equal_sets(&a).unwrap());
    let two = f3.elem(2).unwrap();
    assert!(a.equal_sets(&singular_set(&j.scale(two).unwrap(), 2).unwrap()).unwrap());

    let f2 = gf(2);
    let j2 = BilinearForm::standard_symplectic(&f2, 4).unwrap();
    let s_j = singular_set(&j2, 2).unwrap();
    let mut rng = sample::rng(9);
    let mut differing = 0;
    for _ in 0..10 {
        let other = singular_set(&sample::symplectic_form(&f2, 4, &mut rng).unwrap(), 2).unwrap();
        assert_eq!(other.len(), s_j.len());
        if !other.equal_sets(&s_j).unwrap() {
            differing += 1;
        }
    }
    assert!(differing > 0);
}

#[test]
fn removing_any_plane_breaks_the_condition() {
    let f2 = gf(2);
    let j = BilinearForm::standard_symplectic(&f2, 4).unwrap();
    let x = singular_set(&j, 2).unwrap();
    for victim in x.iter() {
        let mut y = x.clone();
        y.remove(victim);
        match check_condition_s(&y).unwrap() {
            CheckOutcome::Rejected(c) => {
                assert!(c.plane.contains(&c.s).unwrap());
                assert!(!y.contains(&c.plane));
            }
            CheckOutcome::Accepted(_) => panic!("accepted with a plane removed"),
        }
    }
}

#[test]
fn adding_any_plane_breaks_the_condition() {
    let f2 = gf(2);
    let j = BilinearForm::standard_symplectic(&f2, 4).unwrap();
    let x = singular_set(&j, 2).unwrap();
    let extra: Vec<Subspace> = Grassmannian::new(&f2, 4, 2)
        .unwrap()
        .iter()
        .filter(|l| !x.contains(l))
        .collect();
    assert_eq!(extra.len(), 20);
    for l in extra {
        let mut y: PlaneSet = x.clone();
        y.insert(l).unwrap();
        for d in [Direction::HyperplaneToLine, Direction::LineToHyperplane] {
            assert!(!check_condition_s_via(&y, d).unwrap().is_accepted());
        }
    }
}
