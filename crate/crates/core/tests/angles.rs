mod common;

use common::*;
use num_complex::Complex64;
use relcalc::angles::*;
use relcalc::Subspace;

const TOL: f64 = 1e-9;

fn to_c(s: &Subspace) -> Vec<Vec<Complex64>> {
    s.basis_vectors()
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| {
                    let (re, im) = x.to_f64_pair();
                    Complex64::new(re, im)
                })
                .collect()
        })
        .collect()
}

fn dot(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

fn gram_schmidt(vs: Vec<Vec<Complex64>>) -> Vec<Vec<Complex64>> {
    let mut out: Vec<Vec<Complex64>> = Vec::new();
    for mut v in vs {
        for q in &out {
            let c = dot(&v, q);
            v.iter_mut().zip(q).for_each(|(a, b)| *a -= c * b);
        }
        let n = dot(&v, &v).re.sqrt();
        out.push(v.iter().map(|a| a / n).collect());
    }
    out
}

/// Largest singular value of the cross-Gram matrix by power iteration.
fn power_cos(s: &Subspace, t: &Subspace) -> f64 {
    if s.is_zero() || t.is_zero() {
        return 0.0;
    }
    let (qs, qt) = (gram_schmidt(to_c(s)), gram_schmidt(to_c(t)));
    let g: Vec<Vec<Complex64>> = qs.iter().map(|a| qt.iter().map(|b| dot(a, b)).collect()).collect();
    // generic start, so it is not orthogonal to the top singular vector
    let mut x: Vec<Complex64> = (0..qt.len()).map(|j| Complex64::new(1.0 + 0.37 * j as f64, 0.11 * (j * j) as f64)).collect();
    let mut sigma = 0.0;
    for _ in 0..2000 {
        let y: Vec<Complex64> = g.iter().map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum()).collect();
        let z: Vec<Complex64> = (0..qt.len()).map(|j| g.iter().zip(&y).map(|(row, yi)| row[j].conj() * yi).sum()).collect();
        let n = dot(&z, &z).re.sqrt();
        if n == 0.0 {
            return 0.0;
        }
        sigma = n.sqrt();
        x = z.iter().map(|a| a / n).collect();
    }
    sigma
}

#[test]
fn orthonormal_bases() {
    let b = orthonormal_basis_f64(&span(2, &[&[2, 0]]));
    assert_eq!(b.vectors.len(), 1);
    assert!((b.vectors[0][0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    assert!(b.vectors[0][1].norm() < 1e-15);

    let b = orthonormal_basis_f64(&coords(3, &[0, 1]));
    assert_eq!(b.vectors.len(), 2);
    assert!(b.orthonormality_error() < 1e-12);

    let b = orthonormal_basis_f64(&span(2, &[&[1, 1]]));
    let h = std::f64::consts::FRAC_1_SQRT_2;
    assert!(b.vectors[0].iter().all(|x| (x.re.abs() - h).abs() < 1e-12 && x.im.abs() < 1e-12));
}

#[test]
fn dixmier_examples() {
    let l = coords(2, &[0]);
    assert!((dixmier_cos(&l, &l, TOL).unwrap() - 1.0).abs() < 1e-12);
    assert!(dixmier_cos(&l, &coords(2, &[1]), TOL).unwrap().abs() < 1e-12);
    let c = dixmier_cos(&l, &span(2, &[&[1, 1]]), TOL).unwrap();
    assert!((c - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
}

#[test]
fn friedrichs_examples() {
    let s = coords(3, &[0, 1]);
    assert_eq!(friedrichs_cos(&s, &s, TOL).unwrap(), 0.0);

    let (a, b) = (coords(3, &[0]), span(3, &[&[1, 1, 1]]));
    assert_eq!(friedrichs_cos(&a, &b, TOL).unwrap(), dixmier_cos(&a, &b, TOL).unwrap());

    let t = span(3, &[&[0, 1, 0], &[1, 0, 1]]);
    let c = friedrichs_cos(&s, &t, TOL).unwrap();
    assert!((c - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
    let r = angles(&s, &t, TOL).unwrap();
    assert_eq!(r.intersection_dim, 1);
    assert!((r.dixmier - 1.0).abs() < 1e-12);
}

#[test]
fn cosines_match_power_iteration() {
    let mut rng = Lcg(43);
    for trial in 0..200 {
        let n = 2 + trial % 5;
        let (s, t) = (rng.subspace(n, true), rng.subspace(n, true));
        let c0 = dixmier_cos(&s, &t, TOL).unwrap();
        assert!((c0 - power_cos(&s, &t)).abs() < 1e-6, "{s} {t}");
        let c = friedrichs_cos(&s, &t, TOL).unwrap();
        let q = (s.relative_complement(&t).unwrap(), t.relative_complement(&s).unwrap());
        assert!((c - power_cos(&q.0, &q.1)).abs() < 1e-6);
        assert!(c <= c0 + 1e-12 && c < 1.0 - 1e-9);
    }
}

#[test]
fn dimension_mismatch() {
    assert!(dixmier_cos(&coords(2, &[0]), &coords(3, &[0]), TOL).is_err());
}
