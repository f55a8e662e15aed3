//! Dixmier (minimal) and Friedrichs angles between subspaces.
//!
//! This is the only floating-point part of the crate. Intersections and
//! relative complements are computed exactly before any conversion, so the
//! Friedrichs quotient never depends on a floating-point rank decision.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{dim_check, Error, Result};
use crate::subspace::Subspace;

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct FloatBasis {
    pub ambient_dim: usize,
    /// Orthonormal vectors.
    pub vectors: Vec<Vec<Complex64>>,
    /// Hash of the exact subspace this basis approximates.
    pub source_hash: u64,
}

fn cinner(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

fn norm(x: &[Complex64]) -> f64 {
    x.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

impl FloatBasis {
    /// Largest deviation of the Gram matrix from the identity.
    pub fn orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in self.vectors.iter().enumerate() {
            for (j, b) in self.vectors.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((cinner(a, b) - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }
}

/// Modified Gram–Schmidt with one reorthogonalization pass.
pub fn orthonormal_basis_f64(s: &Subspace) -> FloatBasis {
    let mut hasher = DefaultHasher::new();
    s.hash(&mut hasher);
    let mut vectors: Vec<Vec<Complex64>> = Vec::with_capacity(s.dim());
    for row in s.basis_vectors() {
        let mut w: Vec<Complex64> = row
            .iter()
            .map(|z| {
                let (re, im) = z.to_f64_pair();
                Complex64::new(re, im)
            })
            .collect();
        for _ in 0..2 {
            for q in &vectors {
                let c = cinner(&w, q);
                for (wk, qk) in w.iter_mut().zip(q) {
                    *wk -= c * qk;
                }
            }
        }
        let len = norm(&w);
        for wk in &mut w {
            *wk /= len;
        }
        vectors.push(w);
    }
    FloatBasis {
        ambient_dim: s.ambient(),
        vectors,
        source_hash: hasher.finish(),
    }
}

fn checked_basis(s: &Subspace, tol: f64) -> Result<FloatBasis> {
    let b = orthonormal_basis_f64(s);
    let err = b.orthonormality_error();
    if err > tol {
        return Err(Error::Invariant(format!(
            "orthonormalization error {err:e} exceeds tolerance {tol:e}"
        )));
    }
    Ok(b)
}

/// `c₀(S, T) = sup |⟨x, y⟩|` over unit `x ∈ S`, `y ∈ T`: the largest singular
/// value of the cross-Gram matrix of orthonormal bases, clamped to `[0, 1]`.
pub fn dixmier_cos(s: &Subspace, t: &Subspace, tol: f64) -> Result<f64> {
    dim_check(s.ambient() == t.ambient(), || {
        format!("subspaces of F^{} and F^{}", s.ambient(), t.ambient())
    })?;
    if s.is_zero() || t.is_zero() {
        return Ok(0.0);
    }
    let (qs, qt) = (checked_basis(s, tol)?, checked_basis(t, tol)?);
    let gram = DMatrix::from_fn(qs.vectors.len(), qt.vectors.len(), |i, j| {
        cinner(&qs.vectors[i], &qt.vectors[j])
    });
    let top = gram.singular_values().max();
    Ok(top.clamp(0.0, 1.0))
}

/// `c(S, T)`: the Dixmier cosine of `S ⊖ (S∩T)` and `T ⊖ (S∩T)`. An empty
/// quotient gives 0.
pub fn friedrichs_cos(s: &Subspace, t: &Subspace, tol: f64) -> Result<f64> {
    dim_check(s.ambient() == t.ambient(), || {
        format!("subspaces of F^{} and F^{}", s.ambient(), t.ambient())
    })?;
    dixmier_cos(&s.relative_complement(t)?, &t.relative_complement(s)?, tol)
}

#[derive(Clone, Debug, PartialEq)]
pub struct AngleReport {
    pub dixmier: f64,
    pub friedrichs: f64,
    pub intersection_dim: usize,
}

pub fn angles(s: &Subspace, t: &Subspace, tol: f64) -> Result<AngleReport> {
    Ok(AngleReport {
        dixmier: dixmier_cos(s, t, tol)?,
        friedrichs: friedrichs_cos(s, t, tol)?,
        intersection_dim: s.intersect(t)?.dim(),
    })
}
