mod common;

use common::*;
use relcalc::matrix::ExactMatrix;
use relcalc::subspace::inner;
use relcalc::{GaussianRational as Q, Subspace, Vector};

#[test]
fn scalar_field() {
    assert_eq!(q("1/2") + q("1/3"), q("5/6"));
    assert_eq!(Q::i() * Q::i(), q("-1"));
    assert_eq!(q("2/3+1/3i").conj(), q("2/3-1/3i"));
    assert_eq!(q("1/2-3/4i").re(), num_rational::BigRational::new(1.into(), 2.into()));
    assert!(q("0").inv().is_err());
}

#[test]
fn rref_examples() {
    let r = ExactMatrix::from_i64(&[&[1, 1], &[2, 2]]).rref();
    assert_eq!(r.matrix, ExactMatrix::from_i64(&[&[1, 1], &[0, 0]]));
    assert_eq!((r.pivot_cols.clone(), r.rank), (vec![0], 1));

    let id = ExactMatrix::identity(3);
    let r = id.rref();
    assert_eq!(r.matrix, id);
    assert_eq!((r.pivot_cols, r.rank), (vec![0, 1, 2], 3));

    let r = ExactMatrix::from_i64(&[&[0, 1], &[1, 0]]).rref();
    assert_eq!(r.matrix, ExactMatrix::identity(2));
    assert_eq!(r.rank, 2);
}

#[test]
fn nullspace_examples() {
    let ns = ExactMatrix::from_i64(&[&[1, 1]]).nullspace();
    assert_eq!(ns.len(), 1);
    assert!(same(&Subspace::span(&ns, 2).unwrap(), &span(2, &[&[-1, 1]])));
    assert!(ExactMatrix::identity(4).nullspace().is_empty());
    assert_eq!(ExactMatrix::zeros(2, 3).nullspace().len(), 3);
}

#[test]
fn solve_examples() {
    let m = ExactMatrix::from_i64(&[&[2, 0], &[0, 2]]);
    assert_eq!(m.solve(&v(&[1, 1])).unwrap(), Some(vq(&["1/2", "1/2"])));
    let m = ExactMatrix::from_i64(&[&[1, 1], &[1, 1]]);
    assert_eq!(m.solve(&v(&[1, 0])).unwrap(), None);
    let m = ExactMatrix::from_i64(&[&[1, 1]]);
    let x = m.solve(&v(&[3])).unwrap().unwrap();
    assert_eq!(m.mul_vec(&x).unwrap(), v(&[3]));
}

#[test]
fn span_sum_intersect_examples() {
    let s = span(2, &[&[1, 1], &[2, 2]]);
    assert_eq!(s.dim(), 1);
    assert_eq!(s.basis_vectors(), vec![v(&[1, 1])]);
    assert!(span(3, &[]).is_zero());
    let full = span(2, &[&[0, 1], &[1, 0]]);
    assert_eq!(full.basis(), &ExactMatrix::identity(2));

    assert!(coords(2, &[0]).sum(&coords(2, &[1])).unwrap().is_full());
    assert_eq!(s.sum(&s).unwrap(), s);
    assert_eq!(coords(3, &[0]).sum(&span(3, &[&[1, 1, 0]])).unwrap(), coords(3, &[0, 1]));

    assert_eq!(coords(3, &[0, 1]).intersect(&coords(3, &[1, 2])).unwrap(), coords(3, &[1]));
    assert_eq!(s.intersect(&s).unwrap(), s);
    assert!(coords(2, &[0]).intersect(&coords(2, &[1])).unwrap().is_zero());
}

#[test]
fn complement_examples() {
    assert_eq!(coords(3, &[0]).ortho_complement(), coords(3, &[1, 2]));
    assert!(Subspace::zero(3).ortho_complement().is_full());
    let s = Subspace::span(&[vq(&["1", "i"])], 2).unwrap();
    let c = s.ortho_complement();
    assert!(same(&c, &Subspace::span(&[vq(&["i", "1"])], 2).unwrap()));
    assert!(inner(&vq(&["1", "i"]), &vq(&["i", "1"])).is_zero());
}

#[test]
fn order_and_direct_sums() {
    assert!(coords(2, &[0, 1]).contains(&coords(2, &[0])).unwrap());
    assert!(!coords(2, &[0]).contains(&Subspace::full(2)).unwrap());
    assert!(same(&span(2, &[&[1, 1]]), &span(2, &[&[2, 2]])));

    assert_eq!(coords(3, &[0, 1]).relative_complement(&coords(3, &[1])).unwrap(), coords(3, &[0]));
    let s = coords(3, &[0, 2]);
    assert!(s.relative_complement(&s).unwrap().is_zero());
    let s = span(2, &[&[1, 0], &[1, 1]]);
    assert_eq!(s.relative_complement(&coords(2, &[0])).unwrap(), coords(2, &[1]));

    assert!(coords(2, &[0]).is_direct_sum(&coords(2, &[1])).unwrap());
    assert!(!coords(2, &[0]).is_direct_sum(&coords(2, &[0])).unwrap());
    assert!(span(3, &[&[1, 1, 0]]).is_direct_sum(&coords(3, &[0, 2])).unwrap());
}

/// Intersection from the stacked system a·B1 = b·B2, independent of duality.
fn stacked_intersection(s1: &Subspace, s2: &Subspace) -> Subspace {
    let n = s1.ambient();
    let b1 = s1.basis_vectors();
    let b2 = s2.basis_vectors();
    if b1.is_empty() || b2.is_empty() {
        return Subspace::zero(n);
    }
    let mut rows: Vec<Vector> = b1.clone();
    rows.extend(b2.iter().map(|r| r.iter().map(|x| -x).collect::<Vector>()));
    let system = ExactMatrix::from_rows(&rows, n).unwrap().transpose();
    let points: Vec<Vector> = system
        .nullspace()
        .iter()
        .map(|coef| {
            let mut x = vec![Q::zero(); n];
            for (a, row) in coef.iter().zip(&b1) {
                for (xi, r) in x.iter_mut().zip(row) {
                    *xi += &(a * r);
                }
            }
            x
        })
        .collect();
    Subspace::span(&points, n).unwrap()
}

#[test]
fn intersection_matches_stacked_system() {
    let mut rng = Lcg(11);
    for trial in 0..300 {
        let n = 2 + trial % 5;
        let complex = trial % 2 == 1;
        let (a, b) = (rng.subspace(n, complex), rng.subspace(n, complex));
        let meet = a.intersect(&b).unwrap();
        assert_eq!(meet, stacked_intersection(&a, &b), "{a} ∩ {b}");
        let join = a.sum(&b).unwrap();
        assert_eq!(join.dim() + meet.dim(), a.dim() + b.dim());
        for x in meet.basis_vectors() {
            assert!(a.contains_vector(&x).unwrap() && b.contains_vector(&x).unwrap());
        }
    }
}

#[test]
fn complement_is_orthogonal_and_complementary() {
    let mut rng = Lcg(5);
    for trial in 0..200 {
        let n = 1 + trial % 6;
        let s = rng.subspace(n, true);
        let c = s.ortho_complement();
        assert_eq!(s.dim() + c.dim(), n);
        for x in s.basis_vectors() {
            for y in c.basis_vectors() {
                assert!(inner(&x, &y).is_zero());
            }
        }
        assert_eq!(c.ortho_complement(), s);
    }
}
