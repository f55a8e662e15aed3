//! Linear relations `T ⊆ H × K` with `H = F^n`, `K = F^m`.
//!
//! A relation is stored only as its graph, a subspace of `F^(n+m)` whose
//! first `n` coordinates are the input slot and last `m` the output slot.
//! Domain, range, kernel and multivalued part are derived on demand.

use std::fmt;

use crate::error::{dim_check, Error, Result};
use crate::matrix::{ExactMatrix, Vector};
use crate::scalar::GaussianRational;
use crate::subspace::Subspace;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearRelation {
    dim_in: usize,
    dim_out: usize,
    graph: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationParts {
    pub dom: Subspace,
    pub ran: Subspace,
    pub ker: Subspace,
    pub mul: Subspace,
}

fn range(from: usize, len: usize) -> Vec<usize> {
    (from..from + len).collect()
}

impl LinearRelation {
    pub fn from_graph(dim_in: usize, dim_out: usize, graph: Subspace) -> Result<Self> {
        dim_check(graph.ambient() == dim_in + dim_out, || {
            format!(
                "graph in F^{} for a relation F^{dim_in} -> F^{dim_out}",
                graph.ambient()
            )
        })?;
        Ok(LinearRelation {
            dim_in,
            dim_out,
            graph,
        })
    }

    pub fn from_generators(pairs: &[(Vector, Vector)], dim_in: usize, dim_out: usize) -> Result<Self> {
        let rows = pairs
            .iter()
            .enumerate()
            .map(|(k, (x, y))| {
                dim_check(x.len() == dim_in && y.len() == dim_out, || {
                    format!(
                        "generator {k} is ({}, {}), expected ({dim_in}, {dim_out})",
                        x.len(),
                        y.len()
                    )
                })?;
                Ok(x.iter().chain(y).cloned().collect())
            })
            .collect::<Result<Vec<Vector>>>()?;
        Self::from_graph(dim_in, dim_out, Subspace::span(&rows, dim_in + dim_out)?)
    }

    /// `{(x, Ax)}` for an `m × n` matrix `A`.
    pub fn graph_of_matrix(a: &ExactMatrix) -> Self {
        let (m, n) = (a.rows(), a.cols());
        let rows: Vec<Vector> = (0..n)
            .map(|j| {
                let mut v = vec![GaussianRational::zero(); n + m];
                v[j] = GaussianRational::one();
                for i in 0..m {
                    v[n + i] = a[(i, j)].clone();
                }
                v
            })
            .collect();
        LinearRelation {
            dim_in: n,
            dim_out: m,
            graph: Subspace::span(&rows, n + m).expect("rows have length n + m"),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::graph_of_matrix(&ExactMatrix::identity(n))
    }

    pub fn zero(dim_in: usize, dim_out: usize) -> Self {
        LinearRelation {
            dim_in,
            dim_out,
            graph: Subspace::zero(dim_in + dim_out),
        }
    }

    pub fn full(dim_in: usize, dim_out: usize) -> Self {
        LinearRelation {
            dim_in,
            dim_out,
            graph: Subspace::full(dim_in + dim_out),
        }
    }

    /// `I_M = {(u, u) : u ∈ M}`.
    pub fn identity_on(m: &Subspace) -> Self {
        let n = m.ambient();
        let rows: Vec<Vector> = m
            .basis_vectors()
            .into_iter()
            .map(|u| u.iter().chain(&u).cloned().collect())
            .collect();
        LinearRelation {
            dim_in: n,
            dim_out: n,
            graph: Subspace::span(&rows, 2 * n).expect("rows have length 2n"),
        }
    }

    /// The relation `N × S`: `dom = ker = N`, `ran = mul = S`.
    pub fn product_space(n: &Subspace, s: &Subspace) -> Self {
        LinearRelation {
            dim_in: n.ambient(),
            dim_out: s.ambient(),
            graph: Subspace::product(n, s),
        }
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn graph(&self) -> &Subspace {
        &self.graph
    }

    pub fn is_square(&self) -> bool {
        self.dim_in == self.dim_out
    }

    fn in_coords(&self) -> Vec<usize> {
        range(0, self.dim_in)
    }

    fn out_coords(&self) -> Vec<usize> {
        range(self.dim_in, self.dim_out)
    }

    pub fn dom(&self) -> Subspace {
        self.graph.project(&self.in_coords())
    }

    pub fn ran(&self) -> Subspace {
        self.graph.project(&self.out_coords())
    }

    /// `{x : (x, 0) ∈ T}`.
    pub fn ker(&self) -> Subspace {
        self.graph.slice(&self.out_coords(), &self.in_coords())
    }

    /// `{y : (0, y) ∈ T}`.
    pub fn mul(&self) -> Subspace {
        self.graph.slice(&self.in_coords(), &self.out_coords())
    }

    pub fn parts(&self) -> RelationParts {
        RelationParts {
            dom: self.dom(),
            ran: self.ran(),
            ker: self.ker(),
            mul: self.mul(),
        }
    }

    pub fn is_operator(&self) -> bool {
        self.mul().is_zero()
    }

    pub fn contains_pair(&self, x: &[GaussianRational], y: &[GaussianRational]) -> Result<bool> {
        dim_check(x.len() == self.dim_in && y.len() == self.dim_out, || {
            format!("pair of lengths ({}, {})", x.len(), y.len())
        })?;
        let v: Vector = x.iter().chain(y).cloned().collect();
        self.graph.contains_vector(&v)
    }

    /// Graph basis split into `(input, output)` pairs.
    pub fn generators(&self) -> Vec<(Vector, Vector)> {
        self.graph
            .basis_vectors()
            .into_iter()
            .map(|mut v| {
                let out = v.split_off(self.dim_in);
                (v, out)
            })
            .collect()
    }

    fn same_shape(&self, other: &LinearRelation) -> Result<()> {
        dim_check(
            self.dim_in == other.dim_in && self.dim_out == other.dim_out,
            || {
                format!(
                    "relations F^{} -> F^{} and F^{} -> F^{}",
                    self.dim_in, self.dim_out, other.dim_in, other.dim_out
                )
            },
        )
    }

    pub fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NonSquare {
                dim_in: self.dim_in,
                dim_out: self.dim_out,
            })
        }
    }

    /// `T⁻¹ = {(y, x) : (x, y) ∈ T}`.
    pub fn inverse(&self) -> LinearRelation {
        let order: Vec<usize> = self.out_coords().into_iter().chain(self.in_coords()).collect();
        LinearRelation {
            dim_in: self.dim_out,
            dim_out: self.dim_in,
            graph: self.graph.project(&order),
        }
    }

    fn block_map(&self, top_left: i64, bottom_left: i64, bottom_right: i64) -> ExactMatrix {
        let (n, m) = (self.dim_in, self.dim_out);
        let mut map = ExactMatrix::zeros(n + m, n + m);
        for k in 0..n {
            map[(k, k)] = GaussianRational::from_int(top_left);
        }
        if bottom_left != 0 {
            for k in 0..n.min(m) {
                map[(n + k, k)] = GaussianRational::from_int(bottom_left);
            }
        }
        for k in 0..m {
            map[(n + k, n + k)] = GaussianRational::from_int(bottom_right);
        }
        map
    }

    /// `{(x, -y) : (x, y) ∈ T}`.
    pub fn negate(&self) -> LinearRelation {
        let graph = self
            .graph
            .image(&self.block_map(1, 0, -1))
            .expect("block map matches the graph ambient");
        LinearRelation { graph, ..*self }
    }

    /// `I − T = {(u, u − v) : (u, v) ∈ T}`.
    pub fn one_minus(&self) -> Result<LinearRelation> {
        self.require_square()?;
        let graph = self.graph.image(&self.block_map(1, 1, -1))?;
        Ok(LinearRelation { graph, ..*self })
    }

    /// Sum of graphs, `T +̂ S`.
    pub fn hat_sum(&self, other: &LinearRelation) -> Result<LinearRelation> {
        self.same_shape(other)?;
        Ok(LinearRelation {
            graph: self.graph.sum(&other.graph)?,
            ..*self
        })
    }

    /// Intersection of graphs, `T ∩ S`.
    pub fn meet(&self, other: &LinearRelation) -> Result<LinearRelation> {
        self.same_shape(other)?;
        Ok(LinearRelation {
            graph: self.graph.intersect(&other.graph)?,
            ..*self
        })
    }

    /// Pointwise sum `T + S = {(x, y + z) : (x, y) ∈ T, (x, z) ∈ S}`.
    ///
    /// Builds the triples `(x, y, z)` explicitly and maps them down.
    pub fn plus(&self, other: &LinearRelation) -> Result<LinearRelation> {
        self.same_shape(other)?;
        let (n, m) = (self.dim_in, self.dim_out);
        // match on x: (y, x) from T against (x, z) from S
        let left: Vec<(Vector, Vector)> = self.generators().into_iter().map(|(x, y)| (y, x)).collect();
        let pairs: Vec<(Vector, Vector)> = glue(&left, &other.generators(), (m, n, m))
            .into_iter()
            .map(|(y, x, z)| {
                let sum = y.iter().zip(&z).map(|(a, b)| a + b).collect();
                (x, sum)
            })
            .collect();
        LinearRelation::from_generators(&pairs, n, m)
    }

    /// Product `ST = {(x, y) : (x, z) ∈ T, (z, y) ∈ S for some z}`, written
    /// `s.compose(t)`.
    ///
    /// Builds the triples `(x, z, y)` and drops the middle coordinate.
    pub fn compose(&self, inner: &LinearRelation) -> Result<LinearRelation> {
        dim_check(inner.dim_out == self.dim_in, || {
            format!(
                "cannot compose F^{} -> F^{} after F^{} -> F^{}",
                self.dim_in, self.dim_out, inner.dim_in, inner.dim_out
            )
        })?;
        let pairs: Vec<(Vector, Vector)> = glue(
            &inner.generators(),
            &self.generators(),
            (inner.dim_in, self.dim_in, self.dim_out),
        )
            .into_iter()
            .map(|(x, _, y)| (x, y))
            .collect();
        LinearRelation::from_generators(&pairs, inner.dim_in, self.dim_out)
    }

    /// `E²`.
    pub fn square(&self) -> Result<LinearRelation> {
        self.require_square()?;
        self.compose(self)
    }

    /// `T* = {(x, y) ∈ K × H : ⟨g, x⟩ = ⟨f, y⟩ for all (f, g) ∈ T}`.
    ///
    /// Conjugating the condition gives the linear equation
    /// `conj(g)·x − conj(f)·y = 0`, one per graph generator.
    pub fn adjoint(&self) -> LinearRelation {
        let (n, m) = (self.dim_in, self.dim_out);
        let rows: Vec<Vector> = self
            .generators()
            .into_iter()
            .map(|(f, g)| {
                g.iter()
                    .map(GaussianRational::conj)
                    .chain(f.iter().map(|x| -x.conj()))
                    .collect()
            })
            .collect();
        let graph = if rows.is_empty() {
            Subspace::full(n + m)
        } else {
            let eqs = ExactMatrix::from_rows(&rows, m + n).expect("rows have length n + m");
            Subspace::span(&eqs.nullspace(), m + n).expect("null space vectors have length n + m")
        };
        LinearRelation {
            dim_in: m,
            dim_out: n,
            graph,
        }
    }

    /// Closure in `H × K`; every subspace is closed in finite dimension.
    pub fn closure(&self) -> LinearRelation {
        self.clone()
    }

    /// Graph containment `self ⊆ other`.
    pub fn leq(&self, other: &LinearRelation) -> Result<bool> {
        self.same_shape(other)?;
        other.graph.contains(&self.graph)
    }

    pub fn rel_equals(&self, other: &LinearRelation) -> Result<bool> {
        self.same_shape(other)?;
        Ok(self.graph == other.graph)
    }
}

fn combine(coeffs: &[GaussianRational], vectors: &[&Vector], len: usize) -> Vector {
    let mut out = vec![GaussianRational::zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v.iter()) {
            *o += &(c * x);
        }
    }
    out
}

/// Spanning set of `{(u, z, w) : (u, z) ∈ A, (z, w) ∈ B}` given generators
/// of `A` and `B`; `u`, `z`, `w` have lengths `lens`.
///
/// A triple is `Σ aᵢ(uᵢ, zᵢ)` glued to `Σ bⱼ(z'ⱼ, wⱼ)` with `Σ aᵢzᵢ = Σ bⱼz'ⱼ`,
/// so the coefficient vectors `(a, b)` form the null space of `[Z | −Z']`.
fn glue(
    a: &[(Vector, Vector)],
    b: &[(Vector, Vector)],
    (u_len, k, w_len): (usize, usize, usize),
) -> Vec<(Vector, Vector, Vector)> {
    let (p, q) = (a.len(), b.len());
    let mut m = ExactMatrix::zeros(k, p + q);
    for (i, (_, z)) in a.iter().enumerate() {
        for r in 0..k {
            m[(r, i)] = z[r].clone();
        }
    }
    for (j, (z, _)) in b.iter().enumerate() {
        for r in 0..k {
            m[(r, p + j)] = -&z[r];
        }
    }
    let us: Vec<&Vector> = a.iter().map(|g| &g.0).collect();
    let zs: Vec<&Vector> = a.iter().map(|g| &g.1).collect();
    let ws: Vec<&Vector> = b.iter().map(|g| &g.1).collect();
    m.nullspace()
        .into_iter()
        .map(|c| {
            (
                combine(&c[..p], &us, u_len),
                combine(&c[..p], &zs, k),
                combine(&c[p..], &ws, w_len),
            )
        })
        .collect()
}

impl fmt::Debug for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearRelation(F^{} -> F^{}, graph {:?})",
            self.dim_in,
            self.dim_out,
            self.graph.basis()
        )
    }
}
