//! Dense matrices over ℚ(i) and the elimination primitives the rest of the
//! crate is built on.

use std::fmt;

use crate::error::{dim_check, Result};
use crate::scalar::GaussianRational;

pub type Vector = Vec<GaussianRational>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = GaussianRational::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self> {
        dim_check(entries.len() == rows * cols, || {
            format!("{} entries for a {rows}x{cols} matrix", entries.len())
        })?;
        Ok(ExactMatrix { rows, cols, entries })
    }

    /// Builds a matrix from row vectors; every row must have length `cols`.
    pub fn from_rows(rows: &[Vector], cols: usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (k, r) in rows.iter().enumerate() {
            dim_check(r.len() == cols, || {
                format!("row {k} has length {}, expected {cols}", r.len())
            })?;
            entries.extend(r.iter().cloned());
        }
        Ok(ExactMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Integer convenience constructor, mostly for tests and examples.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| GaussianRational::from_int(x)).collect())
            .collect();
        Self::from_rows(&rows, cols).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn conj(&self) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(GaussianRational::conj).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        dim_check(self.cols == rhs.rows, || {
            format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )
        })?;
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Result<Vector> {
        dim_check(v.len() == self.cols, || {
            format!("vector of length {} for {} columns", v.len(), self.cols)
        })?;
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = GaussianRational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> ExactMatrix {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            entries.extend(cols.iter().map(|&c| self[(r, c)].clone()));
        }
        ExactMatrix {
            rows: self.rows,
            cols: cols.len(),
            entries,
        }
    }

    pub fn vstack(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        dim_check(self.cols == other.cols, || {
            format!("cannot stack {} and {} columns", self.cols, other.cols)
        })?;
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(ExactMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn hstack(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        dim_check(self.rows == other.rows, || {
            format!("cannot join {} and {} rows", self.rows, other.rows)
        })?;
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend(self.row(r).iter().cloned());
            entries.extend(other.row(r).iter().cloned());
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols,
            entries,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form. Pivots are the first nonzero entry in
    /// each column scan; exact arithmetic needs no numerical pivoting.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut lead = 0;
        for col in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m[(lead, col)].inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for c in col..m.cols {
                    let v = &m[(lead, c)] * &inv;
                    m[(lead, c)] = v;
                }
            }
            for r in 0..m.rows {
                if r == lead || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    let sub = &factor * &m[(lead, c)];
                    if !sub.is_zero() {
                        m[(r, c)] -= &sub;
                    }
                }
            }
            pivot_cols.push(col);
            lead += 1;
        }
        let rank = pivot_cols.len();
        Rref {
            matrix: m,
            pivot_cols,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The nonzero rows of the RREF.
    pub fn row_basis(&self) -> ExactMatrix {
        let Rref { matrix, rank, .. } = self.rref();
        ExactMatrix {
            rows: rank,
            cols: matrix.cols,
            entries: matrix.entries[..rank * matrix.cols].to_vec(),
        }
    }

    /// Basis of `{x : Mx = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vector> {
        let Rref {
            matrix, pivot_cols, ..
        } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivot_cols {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = vec![GaussianRational::zero(); self.cols];
                v[free] = GaussianRational::one();
                for (r, &p) in pivot_cols.iter().enumerate() {
                    v[p] = -&matrix[(r, free)];
                }
                v
            })
            .collect()
    }

    /// Some exact solution of `Mx = b`, or `None` when the system is
    /// inconsistent.
    pub fn solve(&self, b: &[GaussianRational]) -> Result<Option<Vector>> {
        dim_check(b.len() == self.rows, || {
            format!("right-hand side of length {} for {} rows", b.len(), self.rows)
        })?;
        let rhs = ExactMatrix {
            rows: self.rows,
            cols: 1,
            entries: b.to_vec(),
        };
        let Rref {
            matrix, pivot_cols, ..
        } = self.hstack(&rhs)?.rref();
        if pivot_cols.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (r, &p) in pivot_cols.iter().enumerate() {
            x[p] = matrix[(r, self.cols)].clone();
        }
        Ok(Some(x))
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = GaussianRational;
    fn index(&self, (r, c): (usize, usize)) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussianRational {
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
