use grassform::ftpg::{line_index, recover_semilinear, verify_collineation, LineMap};
use grassform::sample::{self, SampleRng};
use grassform::{BilinearForm, Field, Grassmannian, SemilinearMap};

fn gf(q: u32) -> Field {
    Field::with_order(q).unwrap()
}

fn random_form(field: &Field, n: usize, rng: &mut SampleRng) -> BilinearForm {
    let gram = sample::invertible_matrix(field, n, rng);
    let s1 = sample::automorphism(field, rng);
    let s2 = sample::automorphism(field, rng);
    BilinearForm::new(gram, s1, s2).unwrap()
}

#[test]
fn induce_recover_induce_round_trip() {
    for (q, n) in [(2, 4), (3, 4), (4, 3), (2, 6)] {
        let field = gf(q);
        let lines = line_index(&field, n).unwrap();
        let mut rng = sample::rng(100 + q as u64 * 10 + n as u64);
        for _ in 0..100 {
            let f = sample::semilinear_map(&field, n, &mut rng);
            let lm = LineMap::induced_by(&lines, &f).unwrap();
            let g = recover_semilinear(&lm).unwrap();
            assert_eq!(g.sigma(), f.sigma());
            assert!(g.projectively_equal(&f));
            assert_eq!(LineMap::induced_by(&lines, &g).unwrap(), lm);
        }
    }
}

#[test]
fn random_invertible_matrices_give_collineations() {
    let field = gf(2);
    let lines = line_index(&field, 4).unwrap();
    let mut rng = sample::rng(5);
    for _ in 0..20 {
        let f = SemilinearMap::linear(sample::invertible_matrix(&field, 4, &mut rng)).unwrap();
        assert!(verify_collineation(&LineMap::induced_by(&lines, &f).unwrap()));
    }
}

#[test]
fn scalar_multiples_induce_the_same_line_map() {
    for q in [3, 4, 5] {
        let field = gf(q);
        let lines = line_index(&field, 3).unwrap();
        let mut rng = sample::rng(q as u64);
        let f = sample::semilinear_map(&field, 3, &mut rng);
        let lm = LineMap::induced_by(&lines, &f).unwrap();
        let g = recover_semilinear(&lm).unwrap();
        for a in field.elements().filter(|a| !a.is_zero()) {
            assert_eq!(LineMap::induced_by(&lines, &g.scaled(a).unwrap()).unwrap(), lm);
        }
    }
}

#[test]
fn recovery_respects_composition() {
    for (q, n) in [(4, 3), (3, 4), (4, 2)] {
        let field = gf(q);
        let lines = line_index(&field, n).unwrap();
        let mut rng = sample::rng(77);
        for _ in 0..20 {
            let f1 = sample::semilinear_map(&field, n, &mut rng);
            let f2 = sample::semilinear_map(&field, n, &mut rng);
            let l1 = LineMap::induced_by(&lines, &f1).unwrap();
            let l2 = LineMap::induced_by(&lines, &f2).unwrap();
            let whole = recover_semilinear(&l1.compose(&l2).unwrap()).unwrap();
            let parts = recover_semilinear(&l1)
                .unwrap()
                .compose(&recover_semilinear(&l2).unwrap())
                .unwrap();
            assert!(whole.projectively_equal(&parts));
        }
    }
}

/// Composing the complement maps of two non-singular forms gives a map on
/// k-planes induced by the semilinear map recovered from its action on lines.
#[test]
fn composed_complement_maps_are_induced() {
    for (q, n) in [(2, 4), (3, 4), (4, 4), (4, 3)] {
        let field = gf(q);
        let lines = line_index(&field, n).unwrap();
        let mut rng = sample::rng(31 + q as u64);
        for _ in 0..5 {
            let o1 = random_form(&field, n, &mut rng);
            let o2 = random_form(&field, n, &mut rng);
            let compose = |s: &grassform::Subspace| {
                o2.orthogonal_complement(&o1.orthogonal_complement(s).unwrap())
            };
            let lm = LineMap::from_fn(&lines, compose).unwrap();
            assert!(verify_collineation(&lm));
            let h = recover_semilinear(&lm).unwrap();
            for k in 2..n {
                for s in Grassmannian::new(&field, n, k).unwrap().iter() {
                    assert_eq!(h.apply_subspace(&s).unwrap(), compose(&s).unwrap());
                }
            }
        }
    }
}

#[test]
fn random_bijections_are_rejected() {
    use rand::seq::SliceRandom;
    let field = gf(3);
    let lines = line_index(&field, 3).unwrap();
    let mut rng = sample::rng(8);
    for _ in 0..20 {
        let mut images: Vec<usize> = (0..lines.len()).collect();
        images.shuffle(&mut rng);
        let lm = LineMap::from_indices(&lines, images).unwrap();
        assert!(!verify_collineation(&lm));
        assert!(recover_semilinear(&lm).is_err());
    }
}
