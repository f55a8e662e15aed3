//! Seeded random generation of subspaces, relations and triples.
//!
//! Independent random subspaces of `F^n` almost never meet, which would make
//! most identities trivially true. Families are therefore drawn from a small
//! shared pool of vectors so that sums and intersections are nontrivial.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::format::Document;
use crate::idempotent::{r_form, t_form, IdempotentTriple};
use crate::matrix::Vector;
use crate::relation::LinearRelation;
use crate::scalar::GaussianRational;
use crate::subspace::Subspace;

pub const MAX_DIM: usize = 8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenConfig {
    pub ambient_dim: usize,
    pub trials: usize,
    pub seed: u64,
    /// Numerators are drawn from `-max_entry..=max_entry`, denominators
    /// from `1..=max_entry`.
    pub max_entry: i64,
    pub complex_enabled: bool,
    /// Dominating / dominated samples per extremality trial.
    pub extremal_samples: usize,
    pub angle_tol: f64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            ambient_dim: 4,
            trials: 100,
            seed: 0,
            max_entry: 5,
            complex_enabled: true,
            extremal_samples: 100,
            angle_tol: crate::angles::DEFAULT_TOL,
        }
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// FNV-1a; stable across platforms and releases, unlike `DefaultHasher`.
pub fn stable_hash(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

pub fn trial_seed(seed: u64, stream: &str, trial: usize) -> u64 {
    splitmix(splitmix(seed ^ stable_hash(stream)) ^ trial as u64)
}

pub struct Gen {
    rng: ChaCha8Rng,
    pub cfg: GenConfig,
    /// Inputs recorded for the counterexample of a failing trial.
    pub notes: Vec<(String, Document)>,
}

impl Gen {
    pub fn new(cfg: &GenConfig, stream: &str, trial: usize) -> Gen {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(trial_seed(cfg.seed, stream, trial)),
            cfg: cfg.clone(),
            notes: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.cfg.ambient_dim
    }

    pub fn note(&mut self, name: &str, doc: Document) {
        self.notes.push((name.to_string(), doc));
    }

    pub fn note_subspaces(&mut self, names: &str, subspaces: &[&Subspace]) {
        for (name, s) in names.split(',').zip(subspaces) {
            self.note(name, Document::Subspace((*s).clone()));
        }
    }

    pub fn note_relation(&mut self, name: &str, r: &LinearRelation) {
        self.note(name, Document::Relation(r.clone()));
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn range_incl(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn unit_f64(&mut self) -> f64 {
        self.rng.gen_range(-1.0..1.0)
    }

    fn rational(&mut self) -> (i64, i64) {
        let k = self.cfg.max_entry.max(1);
        (self.rng.gen_range(-k..=k), self.rng.gen_range(1..=k))
    }

    pub fn scalar(&mut self) -> GaussianRational {
        if self.coin(0.25) {
            return GaussianRational::zero();
        }
        let (p, q) = self.rational();
        let re = GaussianRational::from_frac(p, q);
        if self.cfg.complex_enabled && self.coin(0.5) {
            let (p, q) = self.rational();
            re + GaussianRational::from_frac(p, q) * GaussianRational::i()
        } else {
            re
        }
    }

    pub fn vector(&mut self, n: usize) -> Vector {
        (0..n).map(|_| self.scalar()).collect()
    }

    pub fn subspace_of_dim(&mut self, n: usize, k: usize) -> Subspace {
        let vs: Vec<Vector> = (0..k).map(|_| self.vector(n)).collect();
        Subspace::span(&vs, n).expect("vectors have the ambient length")
    }

    /// A subspace of `F^ambient_dim` of exactly `dim` dimensions (random when
    /// not given), redrawn on rank deficiency.
    pub fn random_subspace(&mut self, dim: Option<usize>) -> Subspace {
        let n = self.n();
        let k = dim.unwrap_or_else(|| self.range_incl(0, n)).min(n);
        loop {
            let s = self.subspace_of_dim(n, k);
            if s.dim() == k {
                return s;
            }
        }
    }

    /// Draws square relations until one satisfies `accept`; `None` if none
    /// does within `attempts`.
    pub fn relation_where(
        &mut self,
        attempts: usize,
        mut accept: impl FnMut(&LinearRelation) -> Result<bool>,
    ) -> Result<Option<LinearRelation>> {
        for _ in 0..attempts {
            let e = self.relation();
            if accept(&e)? {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }

    /// A random subspace of `F^n`, occasionally zero or the whole space.
    pub fn subspace(&mut self, n: usize) -> Subspace {
        match self.below(10) {
            0 => Subspace::zero(n),
            1 => Subspace::full(n),
            _ => {
                let k = self.range_incl(1, n);
                self.subspace_of_dim(n, k)
            }
        }
    }

    /// A random subspace of `s` (random combinations of its basis).
    pub fn subspace_within(&mut self, s: &Subspace) -> Subspace {
        let basis = s.basis_vectors();
        if basis.is_empty() {
            return s.clone();
        }
        let k = self.range_incl(0, basis.len());
        let vs: Vec<Vector> = (0..k)
            .map(|_| {
                let mut v = vec![GaussianRational::zero(); s.ambient()];
                for b in &basis {
                    let c = self.scalar();
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi += &(&c * bi);
                    }
                }
                v
            })
            .collect();
        Subspace::span(&vs, s.ambient()).expect("combinations have the ambient length")
    }

    /// `s` plus a random subspace.
    pub fn superspace_of(&mut self, s: &Subspace) -> Subspace {
        let n = s.ambient();
        let k = self.range_incl(0, n.saturating_sub(s.dim()));
        s.sum(&self.subspace_of_dim(n, k)).expect("same ambient")
    }

    /// `k` subspaces of `F^n` spanned by picks from a shared pool.
    pub fn family(&mut self, n: usize, k: usize) -> Vec<Subspace> {
        let pool_size = n + 1;
        let pool: Vec<Vector> = (0..pool_size).map(|_| self.vector(n)).collect();
        (0..k)
            .map(|_| match self.below(12) {
                0 => Subspace::zero(n),
                1 => Subspace::full(n),
                _ => {
                    let d = self.range_incl(1, n);
                    let mut picks: Vec<Vector> =
                        pool.choose_multiple(&mut self.rng, d).cloned().collect();
                    if self.coin(0.2) {
                        picks.pop();
                        picks.push(self.vector(n));
                    }
                    Subspace::span(&picks, n).expect("pool vectors have length n")
                }
            })
            .collect()
    }

    pub fn family3(&mut self) -> (Subspace, Subspace, Subspace) {
        let n = self.n();
        let mut f = self.family(n, 3);
        let s = f.pop().unwrap();
        let b = f.pop().unwrap();
        (f.pop().unwrap(), b, s)
    }

    pub fn family2(&mut self) -> (Subspace, Subspace) {
        let n = self.n();
        let mut f = self.family(n, 2);
        let b = f.pop().unwrap();
        (f.pop().unwrap(), b)
    }

    /// `{(x, Ax) : x ∈ D} +̂ ({0} × U)` with a random low-rank `A`; sometimes
    /// an unstructured graph instead.
    pub fn relation_dims(&mut self, n: usize, m: usize) -> LinearRelation {
        if self.coin(0.15) {
            let g = self.subspace(n + m);
            return LinearRelation::from_graph(n, m, g).expect("graph in F^(n+m)");
        }
        let (dom, wide_mul) = if n == m {
            let mut f = self.family(n, 2);
            let u = f.pop().unwrap();
            (f.pop().unwrap(), u)
        } else {
            (self.subspace(n), self.subspace(m))
        };
        // A large multivalued part makes almost any relation idempotent.
        let mul = if self.coin(0.4) {
            Subspace::zero(m)
        } else {
            self.subspace_within(&wide_mul)
        };
        let rank = self.range_incl(0, n.min(m));
        let left: Vec<Vector> = (0..m).map(|_| self.vector(rank)).collect();
        let right: Vec<Vector> = (0..rank).map(|_| self.vector(n)).collect();
        let apply = |x: &Vector| -> Vector {
            let inner: Vec<GaussianRational> = right
                .iter()
                .map(|r| r.iter().zip(x).fold(GaussianRational::zero(), |acc, (a, b)| acc + a * b))
                .collect();
            left.iter()
                .map(|l| l.iter().zip(&inner).fold(GaussianRational::zero(), |acc, (a, b)| acc + a * b))
                .collect()
        };
        let mut pairs: Vec<(Vector, Vector)> = dom
            .basis_vectors()
            .into_iter()
            .map(|x| {
                let y = apply(&x);
                (x, y)
            })
            .collect();
        for u in mul.basis_vectors() {
            pairs.push((vec![GaussianRational::zero(); n], u));
        }
        LinearRelation::from_generators(&pairs, n, m).expect("generator lengths match")
    }

    pub fn relation(&mut self) -> LinearRelation {
        let n = self.n();
        self.relation_dims(n, n)
    }

    /// A random sub-relation of `t` (a subspace of its graph).
    pub fn relation_within(&mut self, t: &LinearRelation) -> LinearRelation {
        let g = self.subspace_within(t.graph());
        LinearRelation::from_graph(t.dim_in(), t.dim_out(), g).expect("same graph space")
    }

    pub fn sub_idempotent(&mut self) -> Result<LinearRelation> {
        let (m, n, s) = self.family3();
        r_form(&m, &n, &s)
    }

    pub fn super_idempotent(&mut self) -> Result<LinearRelation> {
        let (m, n, s) = self.family3();
        t_form(&m, &n, &s)
    }

    /// A kernel triple satisfying the idempotency condition, from one of
    /// several recipes.
    pub fn ic_triple(&mut self) -> Result<IdempotentTriple> {
        let (a, b, c) = self.family3();
        let (m, n, s) = match self.below(4) {
            0 => (b.intersect(&c)?, a.intersect(&c)?, a.intersect(&b)?),
            1 => {
                let mn = a.intersect(&b)?;
                (a, b, mn)
            }
            2 => {
                // (M ∔ N) ∩ S = {0}
                let n = b.relative_complement(&a)?;
                let mn = a.sum(&n)?;
                let s = c.relative_complement(&mn)?;
                (a, n, s)
            }
            _ => (
                a.sum(&b)?.intersect(&a.sum(&c)?)?,
                b.sum(&a)?.intersect(&b.sum(&c)?)?,
                c.sum(&a)?.intersect(&c.sum(&b)?)?,
            ),
        };
        IdempotentTriple::new(m, n, s)
    }

    pub fn idempotent(&mut self) -> Result<LinearRelation> {
        Ok(self.ic_triple()?.relation())
    }

    /// A square relation from a mix of origins, so that every class and its
    /// complement show up.
    pub fn mixed_relation(&mut self) -> Result<LinearRelation> {
        match self.below(5) {
            0 | 1 => Ok(self.relation()),
            2 => self.sub_idempotent(),
            3 => self.super_idempotent(),
            _ => self.idempotent(),
        }
    }

    /// A sub-idempotent relation that is not idempotent: a random R-form with
    /// `(M+N)∩S ⊋ M∩S + N∩S` when one turns up, else a fixed instance.
    pub fn strict_sub(&mut self) -> Result<LinearRelation> {
        for _ in 0..4 {
            let (m, n, s) = self.family3();
            if m.sum(&n)?.intersect(&s)? != m.intersect(&s)?.sum(&n.intersect(&s)?)? {
                return r_form(&m, &n, &s);
            }
        }
        let (e1, e2, d) = fixed_plane(self.n());
        r_form(&e1, &e2, &d)
    }

    /// A super-idempotent relation that is not idempotent, as above with
    /// `S + N∩(M+S) ⊋ S + N∩M`.
    pub fn strict_super(&mut self) -> Result<LinearRelation> {
        for _ in 0..4 {
            let (m, n, s) = self.family3();
            if s.sum(&n.intersect(&m.sum(&s)?)?)? != s.sum(&n.intersect(&m)?)? {
                return t_form(&m, &n, &s);
            }
        }
        let (e1, e2, d) = fixed_plane(self.n());
        t_form(&e1, &d, &e2)
    }
}

/// `span e1`, `span e2`, `span(e1 + e2)` in `F^n`, `n ≥ 2`.
pub fn fixed_plane(n: usize) -> (Subspace, Subspace, Subspace) {
    let n = n.max(2);
    let mut d = vec![GaussianRational::zero(); n];
    d[0] = GaussianRational::one();
    d[1] = GaussianRational::one();
    (
        Subspace::coordinate(n, &[0]),
        Subspace::coordinate(n, &[1]),
        Subspace::span(&[d], n).expect("length n"),
    )
}
