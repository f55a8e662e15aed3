//! Semi-projections, sub-/super-idempotent relations and the triple
//! representations of idempotent relations.
//!
//! Notation used throughout:
//!
//! * `P_{M,N} = I_M +̂ (N × {0})`, the semi-projection with range `M` and
//!   kernel `N`;
//! * the R-form `P_{M,N} ∩ (S × H)` (always sub-idempotent);
//! * the T-form `P_{M,N} +̂ ({0} × S)` (always super-idempotent);
//! * the kernel triple `(ker(I−E), ker E, mul E)` and the range triple
//!   `(ran E, ran(I−E), dom E)` of an idempotent `E`.

use crate::error::{dim_check, Error, Result};
use crate::matrix::Vector;
use crate::relation::LinearRelation;
use crate::subspace::Subspace;

fn same_ambient(subspaces: &[&Subspace]) -> Result<usize> {
    let n = subspaces[0].ambient();
    dim_check(subspaces.iter().all(|s| s.ambient() == n), || {
        let dims: Vec<String> = subspaces.iter().map(|s| s.ambient().to_string()).collect();
        format!("subspaces of ambient dimensions {}", dims.join(", "))
    })?;
    Ok(n)
}

/// `P_{M,N} = I_M +̂ (N × {0})`.
pub fn semi_projection(m: &Subspace, n: &Subspace) -> Result<LinearRelation> {
    let h = same_ambient(&[m, n])?;
    LinearRelation::identity_on(m).hat_sum(&LinearRelation::product_space(n, &Subspace::zero(h)))
}

/// `P_{M,N} ∩ (S × H)`.
pub fn r_form(m: &Subspace, n: &Subspace, s: &Subspace) -> Result<LinearRelation> {
    let h = same_ambient(&[m, n, s])?;
    semi_projection(m, n)?.meet(&LinearRelation::product_space(s, &Subspace::full(h)))
}

/// `P_{M,N} +̂ ({0} × S)`.
pub fn t_form(m: &Subspace, n: &Subspace, s: &Subspace) -> Result<LinearRelation> {
    let h = same_ambient(&[m, n, s])?;
    semi_projection(m, n)?.hat_sum(&LinearRelation::product_space(&Subspace::zero(h), s))
}

/// A pair `(x, y)` of a relation, used to explain failed class tests.
pub type Witness = (Vector, Vector);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_operator: bool,
    pub is_sub: bool,
    pub is_super: bool,
    pub is_idempotent: bool,
    pub is_semi_projection: bool,
    pub is_projection: bool,
    /// A pair of `E²` outside `E`.
    pub not_sub: Option<Witness>,
    /// A pair of `E` outside `E²`.
    pub not_super: Option<Witness>,
    /// A pair on which `E` and `P_{ran E, ker E}` disagree.
    pub not_semi_projection: Option<Witness>,
}

impl Classification {
    pub fn describe_failure(&self) -> String {
        let show = |w: &Witness| {
            let f = |v: &Vector| {
                let items: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("({})", items.join(", "))
            };
            format!("{} -> {}", f(&w.0), f(&w.1))
        };
        match (&self.not_sub, &self.not_super) {
            (Some(w), _) => format!("E² contains {} which is not in E", show(w)),
            (None, Some(w)) => format!("E contains {} which is not in E²", show(w)),
            (None, None) => "E² = E".to_string(),
        }
    }
}

fn first_outside(small: &LinearRelation, big: &LinearRelation) -> Result<Option<Witness>> {
    for (x, y) in small.generators() {
        if !big.contains_pair(&x, &y)? {
            return Ok(Some((x, y)));
        }
    }
    Ok(None)
}

/// Classifies a square relation.
///
/// Sub- and super-idempotency are each decided twice: by the inclusions
/// `E² ⊆ E` / `E ⊆ E²`, and by the subspace criteria
/// `ker(I−E) = ran E ∩ dom E` / `ran(I−E) = ker E + mul E`. The semi-projection
/// test likewise compares `E = P_{ran E, ker E}` with
/// "idempotent and `ran E ⊆ dom E`". Any disagreement is an internal error.
pub fn classify(e: &LinearRelation) -> Result<Classification> {
    e.require_square()?;
    let sq = e.square()?;
    let parts = e.parts();
    let one_minus = e.one_minus()?;

    let not_sub = first_outside(&sq, e)?;
    let is_sub = not_sub.is_none();
    let sub_criterion = one_minus.ker() == parts.ran.intersect(&parts.dom)?;
    if is_sub != sub_criterion {
        return Err(Error::Invariant(format!(
            "E² ⊆ E is {is_sub} but ker(I−E) = ran E ∩ dom E is {sub_criterion}"
        )));
    }

    let not_super = first_outside(e, &sq)?;
    let is_super = not_super.is_none();
    let super_criterion = one_minus.ran() == parts.ker.sum(&parts.mul)?;
    if is_super != super_criterion {
        return Err(Error::Invariant(format!(
            "E ⊆ E² is {is_super} but ran(I−E) = ker E + mul E is {super_criterion}"
        )));
    }

    let is_idempotent = is_sub && is_super;
    let sp = semi_projection(&parts.ran, &parts.ker)?;
    let not_semi_projection = match first_outside(e, &sp)? {
        Some(w) => Some(w),
        None => first_outside(&sp, e)?,
    };
    let is_semi_projection = not_semi_projection.is_none();
    let by_definition = is_idempotent && parts.dom.contains(&parts.ran)?;
    if is_semi_projection != by_definition {
        return Err(Error::Invariant(format!(
            "E = P_(ran E, ker E) is {is_semi_projection} but idempotent with ran E ⊆ dom E is {by_definition}"
        )));
    }
    let is_operator = parts.mul.is_zero();

    Ok(Classification {
        is_operator,
        is_sub,
        is_super,
        is_idempotent,
        is_semi_projection,
        is_projection: is_semi_projection && is_operator,
        not_sub,
        not_super,
        not_semi_projection,
    })
}

/// `P_{ker(I−E), ker E} +̂ ({0} × mul E)`, the lower bound of every relation
/// and the closed form of `E²` when `E` is sub-idempotent.
pub fn lower_envelope(e: &LinearRelation) -> Result<LinearRelation> {
    let fixed = e.one_minus()?.ker();
    t_form(&fixed, &e.ker(), &e.mul())
}

/// `P_{ran E, ran(I−E)} ∩ (dom E × H)`, the upper bound of every relation
/// and the closed form of `E²` when `E` is super-idempotent.
pub fn upper_envelope(e: &LinearRelation) -> Result<LinearRelation> {
    let co_range = e.one_minus()?.ran();
    r_form(&e.ran(), &co_range, &e.dom())
}

/// `E²`, cross-checked against its closed form whenever `E` is sub- or
/// super-idempotent; in those cases the square is also checked to be
/// idempotent.
pub fn square(e: &LinearRelation) -> Result<LinearRelation> {
    let sq = e.square()?;
    let class = classify(e)?;
    let breach = |what: &str| Err(Error::Invariant(format!("{what} for {e:?}")));
    if class.is_sub && sq != lower_envelope(e)? {
        return breach("E sub-idempotent but E² differs from P_(ker(I−E), ker E) +̂ ({0} × mul E)");
    }
    if class.is_super && sq != upper_envelope(e)? {
        return breach("E super-idempotent but E² differs from P_(ran E, ran(I−E)) ∩ (dom E × H)");
    }
    if (class.is_sub || class.is_super) && sq.square()? != sq {
        return breach("E² is not idempotent");
    }
    Ok(sq)
}

/// `(M + N) ∩ S = M ∩ N`.
pub fn ic_holds(m: &Subspace, n: &Subspace, s: &Subspace) -> Result<bool> {
    same_ambient(&[m, n, s])?;
    Ok(m.sum(n)?.intersect(s)? == m.intersect(n)?)
}

/// `X ∩ Y + Z = X + Y`.
pub fn range_condition_holds(x: &Subspace, y: &Subspace, z: &Subspace) -> Result<bool> {
    same_ambient(&[x, y, z])?;
    Ok(x.intersect(y)?.sum(z)? == x.sum(y)?)
}

/// `(M, N, S) = (ker(I−E), ker E, mul E)` of an idempotent `E`. The
/// idempotency condition holds by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdempotentTriple {
    m: Subspace,
    n: Subspace,
    s: Subspace,
}

/// `(X, Y, Z) = (ran F, ran(I−F), dom F)` of an idempotent `F`, with
/// `X ∩ Y + Z = X + Y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RangeTriple {
    x: Subspace,
    y: Subspace,
    z: Subspace,
}

impl IdempotentTriple {
    pub fn new(m: Subspace, n: Subspace, s: Subspace) -> Result<Self> {
        if !ic_holds(&m, &n, &s)? {
            return Err(Error::IcViolation {
                lhs: m.sum(&n)?.intersect(&s)?.to_string(),
                rhs: m.intersect(&n)?.to_string(),
            });
        }
        Ok(IdempotentTriple { m, n, s })
    }

    pub fn ambient(&self) -> usize {
        self.m.ambient()
    }

    /// `ker(I−E)`.
    pub fn m(&self) -> &Subspace {
        &self.m
    }

    /// `ker E`.
    pub fn n(&self) -> &Subspace {
        &self.n
    }

    /// `mul E`.
    pub fn s(&self) -> &Subspace {
        &self.s
    }

    /// `P_{M,N,S} = P_{M,N} +̂ ({0} × S)`.
    pub fn relation(&self) -> LinearRelation {
        t_form(&self.m, &self.n, &self.s).expect("triple parts share an ambient space")
    }

    /// `(X, Y, Z) = (M + S, N + S, M + N)`.
    pub fn to_range_triple(&self) -> RangeTriple {
        let sum = |a: &Subspace, b: &Subspace| a.sum(b).expect("same ambient");
        RangeTriple {
            x: sum(&self.m, &self.s),
            y: sum(&self.n, &self.s),
            z: sum(&self.m, &self.n),
        }
    }
}

impl RangeTriple {
    pub fn new(x: Subspace, y: Subspace, z: Subspace) -> Result<Self> {
        if !range_condition_holds(&x, &y, &z)? {
            return Err(Error::RangeTripleViolation {
                lhs: x.intersect(&y)?.sum(&z)?.to_string(),
                rhs: x.sum(&y)?.to_string(),
            });
        }
        Ok(RangeTriple { x, y, z })
    }

    pub fn ambient(&self) -> usize {
        self.x.ambient()
    }

    /// `ran F`.
    pub fn x(&self) -> &Subspace {
        &self.x
    }

    /// `ran(I−F)`.
    pub fn y(&self) -> &Subspace {
        &self.y
    }

    /// `dom F`.
    pub fn z(&self) -> &Subspace {
        &self.z
    }

    /// `P_{X,Y} ∩ (Z × H)`.
    pub fn relation(&self) -> LinearRelation {
        r_form(&self.x, &self.y, &self.z).expect("triple parts share an ambient space")
    }

    /// `(M, N, S) = (X ∩ Z, Y ∩ Z, X ∩ Y)`.
    pub fn to_kernel_triple(&self) -> IdempotentTriple {
        let meet = |a: &Subspace, b: &Subspace| a.intersect(b).expect("same ambient");
        IdempotentTriple {
            m: meet(&self.x, &self.z),
            n: meet(&self.y, &self.z),
            s: meet(&self.x, &self.y),
        }
    }
}

fn require_idempotent(e: &LinearRelation) -> Result<()> {
    let class = classify(e)?;
    if class.is_idempotent {
        Ok(())
    } else {
        Err(Error::NotIdempotent(class.describe_failure()))
    }
}

pub fn kernel_triple(e: &LinearRelation) -> Result<IdempotentTriple> {
    require_idempotent(e)?;
    let triple = IdempotentTriple::new(e.one_minus()?.ker(), e.ker(), e.mul())
        .map_err(|err| Error::Invariant(format!("kernel triple of an idempotent: {err}")))?;
    Ok(triple)
}

pub fn range_triple(e: &LinearRelation) -> Result<RangeTriple> {
    require_idempotent(e)?;
    let triple = RangeTriple::new(e.ran(), e.one_minus()?.ran(), e.dom())
        .map_err(|err| Error::Invariant(format!("range triple of an idempotent: {err}")))?;
    Ok(triple)
}

/// `P_{M,N,S}`; fails with the offending subspaces when the idempotency
/// condition does not hold.
pub fn build_pmns(m: &Subspace, n: &Subspace, s: &Subspace) -> Result<LinearRelation> {
    Ok(IdempotentTriple::new(m.clone(), n.clone(), s.clone())?.relation())
}

/// `E₀ = P_{M+S, N+S} ∩ ((M+N) × H)`: the smallest idempotent with
/// `M ⊆ ker(I−E)`, `N ⊆ ker E` and `S ⊆ mul E`.
pub fn minimal_idempotent(m: &Subspace, n: &Subspace, s: &Subspace) -> Result<LinearRelation> {
    same_ambient(&[m, n, s])?;
    r_form(&m.sum(s)?, &n.sum(s)?, &m.sum(n)?)
}

/// `F₀ = P_{X,Y} ∩ ((Z∩X + Z∩Y) × H)`: the largest idempotent with
/// `ran F ⊆ X`, `ran(I−F) ⊆ Y` and `dom F ⊆ Z`.
pub fn maximal_idempotent(x: &Subspace, y: &Subspace, z: &Subspace) -> Result<LinearRelation> {
    same_ambient(&[x, y, z])?;
    r_form(x, y, &z.intersect(x)?.sum(&z.intersect(y)?)?)
}

/// The same `F₀` written as `P_{X∩Z, Y∩Z} +̂ ({0} × (X∩Y))`.
pub fn maximal_idempotent_hat_form(x: &Subspace, y: &Subspace, z: &Subspace) -> Result<LinearRelation> {
    same_ambient(&[x, y, z])?;
    t_form(&x.intersect(z)?, &y.intersect(z)?, &x.intersect(y)?)
}

/// Adjoint of an idempotent together with its kernel triple.
///
/// In finite dimension the adjoint of `P_{M,N,S}` is always idempotent and
/// equals `P_{N⊥∩S⊥, M⊥∩S⊥, M⊥∩N⊥}`; both facts are checked.
pub fn adjoint_idempotent(e: &LinearRelation) -> Result<(LinearRelation, IdempotentTriple)> {
    let t = kernel_triple(e)?;
    let adj = e.adjoint();
    let (mp, np, sp) = (
        t.m.ortho_complement(),
        t.n.ortho_complement(),
        t.s.ortho_complement(),
    );
    let expected = (np.intersect(&sp)?, mp.intersect(&sp)?, mp.intersect(&np)?);
    let adj_triple = kernel_triple(&adj).map_err(|err| {
        Error::Invariant(format!("adjoint of an idempotent is not idempotent: {err}"))
    })?;
    if (&adj_triple.m, &adj_triple.n, &adj_triple.s) != (&expected.0, &expected.1, &expected.2) {
        return Err(Error::Invariant(
            "kernel triple of E* differs from (N⊥∩S⊥, M⊥∩S⊥, M⊥∩N⊥)".into(),
        ));
    }
    Ok((adj, adj_triple))
}
