//! Subspaces of `F^n`, `F = ℚ(i)`, in canonical row-echelon form, with the
//! lattice operations.
//!
//! A subspace is stored as the nonzero rows of the RREF of any spanning set,
//! so two values compare equal exactly when they are the same set.
//!
//! The inner product is linear in the first argument and conjugate-linear
//! in the second: `⟨x, y⟩ = Σ x_k · conj(y_k)`.

use std::fmt;

use crate::error::{dim_check, Result};
use crate::matrix::{ExactMatrix, Vector};
use crate::scalar::GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: ExactMatrix,
}

/// `⟨x, y⟩ = Σ x_k · conj(y_k)`.
pub fn inner(x: &[GaussianRational], y: &[GaussianRational]) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * &b.conj());
        }
    }
    acc
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: ExactMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: ExactMatrix::identity(ambient),
        }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &ExactMatrix) -> Self {
        Subspace {
            ambient: m.cols(),
            basis: m.row_basis(),
        }
    }

    pub fn span(vectors: &[Vector], ambient: usize) -> Result<Self> {
        Ok(Self::row_space(&ExactMatrix::from_rows(vectors, ambient)?))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let rows: Vec<Vector> = indices
            .iter()
            .map(|&k| {
                let mut v = vec![GaussianRational::zero(); ambient];
                v[k] = GaussianRational::one();
                v
            })
            .collect();
        Self::span(&rows, ambient).expect("coordinate vectors have the ambient length")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one row per basis vector.
    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        dim_check(self.ambient == other.ambient, || {
            format!(
                "subspaces of F^{} and F^{}",
                self.ambient, other.ambient
            )
        })
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        if other.is_zero() || self.is_full() {
            return Ok(self.clone());
        }
        if self.is_zero() || other.is_full() {
            return Ok(other.clone());
        }
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Computed by duality, `(S1⊥ + S2⊥)⊥`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        Ok(self
            .ortho_complement()
            .sum(&other.ortho_complement())?
            .ortho_complement())
    }

    /// `{x : ⟨x, s⟩ = 0 for all s ∈ S}`, the null space of `conj(B)`.
    pub fn ortho_complement(&self) -> Subspace {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        if self.is_full() {
            return Self::zero(self.ambient);
        }
        let ns = self.basis.conj().nullspace();
        Self::span(&ns, self.ambient).expect("null space vectors have the ambient length")
    }

    /// Membership test by reduction against the echelon basis.
    pub fn contains_vector(&self, v: &[GaussianRational]) -> Result<bool> {
        dim_check(v.len() == self.ambient, || {
            format!("vector of length {} in F^{}", v.len(), self.ambient)
        })?;
        let mut r = v.to_vec();
        for row in 0..self.dim() {
            let basis_row = self.basis.row(row);
            let pivot = basis_row
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            if r[pivot].is_zero() {
                continue;
            }
            let factor = r[pivot].clone();
            for (x, b) in r.iter_mut().zip(basis_row).skip(pivot) {
                if !b.is_zero() {
                    *x -= &(&factor * b);
                }
            }
        }
        Ok(r.iter().all(GaussianRational::is_zero))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.same_ambient(other)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        for r in 0..other.dim() {
            if !self.contains_vector(other.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self == other)
    }

    /// `S ⊖ (S ∩ T) = S ∩ (S ∩ T)⊥`.
    pub fn relative_complement(&self, other: &Subspace) -> Result<Subspace> {
        let common = self.intersect(other)?;
        self.intersect(&common.ortho_complement())
    }

    /// True iff `S1 ∩ S2 = {0}`.
    pub fn is_direct_sum(&self, other: &Subspace) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.dim() + other.dim() == self.sum(other)?.dim())
    }

    /// Image under the coordinate map `v ↦ (v[c] for c in coords)`.
    pub fn project(&self, coords: &[usize]) -> Subspace {
        Self::row_space(&self.basis.select_cols(coords))
    }

    /// `{v|keep : v ∈ S, v|zero = 0}`.
    ///
    /// After reordering columns as `[zero, keep]`, the RREF rows whose pivot
    /// falls in the `keep` block are exactly a basis of the vectors vanishing
    /// on `zero`.
    pub fn slice(&self, zero: &[usize], keep: &[usize]) -> Subspace {
        let order: Vec<usize> = zero.iter().chain(keep).copied().collect();
        let r = self.basis.select_cols(&order).rref();
        let rows: Vec<Vector> = r
            .pivot_cols
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p >= zero.len())
            .map(|(row, _)| r.matrix.row(row)[zero.len()..].to_vec())
            .collect();
        Self::span(&rows, keep.len()).expect("rows have the kept length")
    }

    /// Places the subspace in `F^ambient` at coordinates `offset..offset+n`.
    pub fn embed(&self, ambient: usize, offset: usize) -> Subspace {
        assert!(offset + self.ambient <= ambient, "embedding out of range");
        let rows: Vec<Vector> = self
            .basis_vectors()
            .into_iter()
            .map(|v| {
                let mut w = vec![GaussianRational::zero(); ambient];
                for (k, x) in v.into_iter().enumerate() {
                    w[offset + k] = x;
                }
                w
            })
            .collect();
        // Shifted echelon rows stay in echelon form.
        Subspace {
            ambient,
            basis: ExactMatrix::from_rows(&rows, ambient).expect("rows have the ambient length"),
        }
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, map: &ExactMatrix) -> Result<Subspace> {
        dim_check(map.cols() == self.ambient, || {
            format!("{}x{} map on F^{}", map.rows(), map.cols(), self.ambient)
        })?;
        let rows = self
            .basis_vectors()
            .iter()
            .map(|v| map.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Self::span(&rows, map.rows())
    }

    /// Cartesian product `A × B ⊆ F^(a+b)`.
    pub fn product(a: &Subspace, b: &Subspace) -> Subspace {
        let n = a.ambient + b.ambient;
        a.embed(n, 0)
            .sum(&b.embed(n, a.ambient))
            .expect("both parts live in the same product space")
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?} ⊆ F^{}", self.basis, self.ambient)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
