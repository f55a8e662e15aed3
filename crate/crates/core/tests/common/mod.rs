#![allow(dead_code)]

use relcalc::{GaussianRational as Q, LinearRelation, Subspace, Vector};

pub fn q(s: &str) -> Q {
    s.parse().unwrap()
}

pub fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Q::from_int(x)).collect()
}

pub fn vq(xs: &[&str]) -> Vector {
    xs.iter().map(|x| q(x)).collect()
}

pub fn e(n: usize, k: usize) -> Vector {
    (0..n).map(|j| Q::from_int((j == k) as i64)).collect()
}

pub fn span(n: usize, rows: &[&[i64]]) -> Subspace {
    let vs: Vec<Vector> = rows.iter().map(|r| v(r)).collect();
    Subspace::span(&vs, n).unwrap()
}

/// Span of standard basis vectors, e.g. `coords(3, &[0, 2])` is span{e1, e3}.
pub fn coords(n: usize, idx: &[usize]) -> Subspace {
    Subspace::coordinate(n, idx)
}

pub fn rel(n: usize, m: usize, pairs: &[(&[i64], &[i64])]) -> LinearRelation {
    let ps: Vec<(Vector, Vector)> = pairs.iter().map(|(x, y)| (v(x), v(y))).collect();
    LinearRelation::from_generators(&ps, n, m).unwrap()
}

pub fn same(a: &Subspace, b: &Subspace) -> bool {
    a.equals(b).unwrap()
}

/// Tiny deterministic LCG so oracle tests do not depend on the library's generator.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }

    pub fn scalar(&mut self, complex: bool) -> Q {
        let re = Q::from_int(self.int(-2, 2));
        if complex && self.next() % 2 == 0 {
            re + Q::i() * Q::from_int(self.int(-2, 2))
        } else {
            re
        }
    }

    pub fn vector(&mut self, n: usize, complex: bool) -> Vector {
        (0..n).map(|_| self.scalar(complex)).collect()
    }

    pub fn subspace(&mut self, n: usize, complex: bool) -> Subspace {
        let k = self.int(0, n as i64) as usize;
        let vs: Vec<Vector> = (0..k).map(|_| self.vector(n, complex)).collect();
        Subspace::span(&vs, n).unwrap()
    }

    pub fn relation(&mut self, n: usize, m: usize, complex: bool) -> LinearRelation {
        let k = self.int(0, (n + m) as i64) as usize;
        let ps: Vec<(Vector, Vector)> = (0..k)
            .map(|_| {
                // sparse inputs give nontrivial kernels and multivalued parts
                let x = if self.next() % 4 == 0 { vec![Q::zero(); n] } else { self.vector(n, complex) };
                let y = if self.next() % 4 == 0 { vec![Q::zero(); m] } else { self.vector(m, complex) };
                (x, y)
            })
            .collect();
        LinearRelation::from_generators(&ps, n, m).unwrap()
    }
}
