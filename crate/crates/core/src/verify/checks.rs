//! The identities exercised by the verifier.
//!
//! Each check draws its own inputs from a seeded [`Gen`] and returns
//! `Ok(Err(detail))` when the identity fails on them. Library errors are
//! reported the same way by the runner. Class membership is decided here by
//! the defining inclusions (`E² ⊆ E` and so on), never by [`classify`], so
//! the criteria are tested against the definitions and not against
//! themselves.

use num_complex::Complex64;

use super::gen::Gen;
use crate::angles::{dixmier_cos, friedrichs_cos, orthonormal_basis_f64};
use crate::error::Result;
use crate::idempotent::{
    adjoint_idempotent, build_pmns, classify, ic_holds, kernel_triple, lower_envelope,
    maximal_idempotent, maximal_idempotent_hat_form, minimal_idempotent, r_form,
    range_condition_holds, range_triple, semi_projection, t_form, upper_envelope,
    IdempotentTriple, RangeTriple,
};
use crate::relation::LinearRelation;
use crate::subspace::Subspace;

pub type Outcome = std::result::Result<(), String>;

pub struct Check {
    pub name: &'static str,
    pub statement: &'static str,
    /// Part of the default suite. Off only for the deliberately broken
    /// check used to test the harness itself.
    pub default: bool,
    pub run: fn(&mut Gen) -> Result<Outcome>,
}

macro_rules! require {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Ok(Err(format!($($msg)+)));
        }
    };
}

fn is_sub(e: &LinearRelation) -> Result<bool> {
    e.square()?.leq(e)
}

fn is_super(e: &LinearRelation) -> Result<bool> {
    e.leq(&e.square()?)
}

fn is_idem(e: &LinearRelation) -> Result<bool> {
    Ok(e.square()? == *e)
}

fn fixed(e: &LinearRelation) -> Result<Subspace> {
    Ok(e.one_minus()?.ker())
}

fn co_range(e: &LinearRelation) -> Result<Subspace> {
    Ok(e.one_minus()?.ran())
}

fn zero_times(s: &Subspace) -> LinearRelation {
    LinearRelation::product_space(&Subspace::zero(s.ambient()), s)
}

fn times_full(s: &Subspace) -> LinearRelation {
    LinearRelation::product_space(s, &Subspace::full(s.ambient()))
}

fn lattice_duality(g: &mut Gen) -> Result<Outcome> {
    let (m, n) = g.family2();
    g.note_subspaces("M,N", &[&m, &n]);
    let (mp, np) = (m.ortho_complement(), n.ortho_complement());
    require!(m.intersect(&n)?.ortho_complement() == mp.sum(&np)?, "(M∩N)⊥ ≠ M⊥ + N⊥");
    require!(m.sum(&n)?.ortho_complement() == mp.intersect(&np)?, "(M+N)⊥ ≠ M⊥ ∩ N⊥");
    require!(mp.ortho_complement() == m, "M⊥⊥ ≠ M");
    require!(
        m.sum(&n)?.dim() + m.intersect(&n)?.dim() == m.dim() + n.dim(),
        "dimension formula fails"
    );
    Ok(Ok(()))
}

fn equality_criterion(g: &mut Gen) -> Result<Outcome> {
    let s = g.relation();
    let t = match g.below(4) {
        0 => {
            let part = g.relation_within(&s);
            s.hat_sum(&part)?
        }
        1 => {
            let other = g.relation();
            let small = g.relation_within(&other);
            s.hat_sum(&small)?
        }
        2 => g.relation(),
        _ => s.meet(&g.relation())?,
    };
    g.note_relation("S", &s);
    g.note_relation("T", &t);
    let criterion = s.leq(&t)? && s.dom().contains(&t.dom())? && s.mul().contains(&t.mul())?;
    require!((s == t) == criterion, "S = T is {} but the criterion gives {criterion}", s == t);
    Ok(Ok(()))
}

fn one_minus_membership(g: &mut Gen) -> Result<Outcome> {
    let t = g.relation();
    g.note_relation("T", &t);
    let it = t.one_minus()?;
    for (u, v) in it.generators() {
        let w: Vec<_> = u.iter().zip(&v).map(|(a, b)| a - b).collect();
        require!(t.contains_pair(&u, &w)?, "(u, v) ∈ I−T but (u, u−v) ∉ T");
    }
    for (u, w) in t.generators() {
        let v: Vec<_> = u.iter().zip(&w).map(|(a, b)| a - b).collect();
        require!(it.contains_pair(&u, &v)?, "(u, w) ∈ T but (u, u−w) ∉ I−T");
    }
    let n = t.dim_in();
    require!(it == LinearRelation::identity(n).plus(&t.negate())?, "I−T differs from I + (−T)");
    require!(it.one_minus()? == t, "I−(I−T) ≠ T");
    require!(
        t.ran().intersect(&t.dom())?.contains(&it.ker())?,
        "ker(I−T) ⊄ ran T ∩ dom T"
    );
    let sq = t.square()?;
    require!(sq.one_minus()?.ker().contains(&it.ker())?, "ker(I−T) ⊄ ker(I−T²)");
    require!(it.ran().contains(&sq.one_minus()?.ran())?, "ran(I−T²) ⊄ ran(I−T)");
    Ok(Ok(()))
}

fn inverse_composition(g: &mut Gen) -> Result<Outcome> {
    let n = g.n();
    let m = g.range_incl(1, n);
    let t = g.relation_dims(n, m);
    g.note_relation("T", &t);
    let p = t.parts();
    let inv = t.inverse();
    let left = inv.compose(&t)?;
    require!(
        left == LinearRelation::identity_on(&p.dom).hat_sum(&zero_times(&p.ker))?,
        "T⁻¹T ≠ I_dom +̂ ({{0}} × ker T)"
    );
    require!(left == semi_projection(&p.dom, &p.ker)?, "T⁻¹T ≠ P_(dom T, ker T)");
    let right = t.compose(&inv)?;
    require!(
        right == LinearRelation::identity_on(&p.ran).hat_sum(&zero_times(&p.mul))?,
        "TT⁻¹ ≠ I_ran +̂ ({{0}} × mul T)"
    );
    require!(right == semi_projection(&p.ran, &p.mul)?, "TT⁻¹ ≠ P_(ran T, mul T)");
    require!(inv.inverse() == t, "(T⁻¹)⁻¹ ≠ T");
    Ok(Ok(()))
}

fn adjoint_parts(g: &mut Gen) -> Result<Outcome> {
    let n = g.n();
    let m = g.range_incl(1, n);
    let t = g.relation_dims(n, m);
    g.note_relation("T", &t);
    let a = t.adjoint();
    require!(a.dim_in() == m && a.dim_out() == n, "T* has the wrong shape");
    require!(a.mul() == t.dom().ortho_complement(), "mul T* ≠ (dom T)⊥");
    require!(a.ker() == t.ran().ortho_complement(), "ker T* ≠ (ran T)⊥");
    require!(a.dom() == t.mul().ortho_complement(), "dom T* ≠ (mul T)⊥");
    require!(a.ran() == t.ker().ortho_complement(), "ran T* ≠ (ker T)⊥");
    require!(a.adjoint() == t, "T** ≠ T");
    require!(t.inverse().adjoint() == a.inverse(), "(T⁻¹)* ≠ (T*)⁻¹");
    Ok(Ok(()))
}

fn random_chain(g: &mut Gen) -> (LinearRelation, LinearRelation) {
    let n = g.n();
    let (h, e, k) = (g.range_incl(1, n), g.range_incl(1, n), g.range_incl(1, n));
    (g.relation_dims(h, e), g.relation_dims(e, k))
}

fn adjoint_of_product(g: &mut Gen) -> Result<Outcome> {
    let (t, s) = random_chain(g);
    g.note_relation("T", &t);
    g.note_relation("S", &s);
    let st_star = s.compose(&t)?.adjoint();
    let ts = t.adjoint().compose(&s.adjoint())?;
    require!(ts.leq(&st_star)?, "T*S* ⊄ (ST)*");
    Ok(Ok(()))
}

fn adjoint_of_sums(g: &mut Gen) -> Result<Outcome> {
    let n = g.n();
    let m = g.range_incl(1, n);
    let (t, s) = (g.relation_dims(n, m), g.relation_dims(n, m));
    g.note_relation("T", &t);
    g.note_relation("S", &s);
    require!(
        t.hat_sum(&s)?.adjoint() == t.adjoint().meet(&s.adjoint())?,
        "(T +̂ S)* ≠ T* ∩ S*"
    );
    require!(
        t.adjoint().plus(&s.adjoint())?.leq(&t.plus(&s)?.adjoint())?,
        "T* + S* ⊄ (T + S)*"
    );
    require!(
        t.adjoint().hat_sum(&s.adjoint())? == t.meet(&s)?.adjoint(),
        "T* +̂ S* ≠ (T ∩ S)*"
    );
    Ok(Ok(()))
}

fn adjoint_pair(g: &mut Gen) -> Result<Outcome> {
    let n = g.n();
    let m = g.range_incl(1, n);
    let b = g.relation_dims(m, n);
    let a = match g.below(3) {
        0 => b.adjoint(),
        1 => g.relation_within(&b.adjoint()),
        _ => b.adjoint().meet(&g.relation_dims(n, m))?,
    };
    g.note_relation("A", &a);
    g.note_relation("B", &b);
    require!(a.leq(&b.adjoint())?, "generator broke A ⊆ B*");
    let h = Subspace::full(n);
    let k = Subspace::full(m);
    if a.ker().sum(&b.ran())? == h && b.ker().sum(&a.ran())? == k {
        require!(a == b.adjoint(), "A ⊆ B* with complementary ranges but A ≠ B*");
        require!(b == a.adjoint(), "A ⊆ B* with complementary ranges but B ≠ A*");
    }
    if a == b.adjoint() {
        require!(a.ker().sum(&b.ran())? == h, "A = B* but ker A + ran B ≠ H");
    }
    Ok(Ok(()))
}

fn sandwich(g: &mut Gen) -> Result<Outcome> {
    let e = g.mixed_relation()?;
    g.note_relation("E", &e);
    require!(lower_envelope(&e)?.leq(&e)?, "P_(ker(I−E), ker E) +̂ ({{0}} × mul E) ⊄ E");
    require!(e.leq(&upper_envelope(&e)?)?, "E ⊄ P_(ran E, ran(I−E)) ∩ (dom E × H)");
    Ok(Ok(()))
}

fn canonical_form_parts(g: &mut Gen) -> Result<Outcome> {
    let (m, n, s) = g.family3();
    g.note_subspaces("M,N,S", &[&m, &n, &s]);
    let r = r_form(&m, &n, &s)?;
    let p = r.parts();
    require!(p.dom == m.sum(&n)?.intersect(&s)?, "dom R ≠ (M+N)∩S");
    require!(p.ran == m.intersect(&n.sum(&s)?)?, "ran R ≠ M∩(N+S)");
    require!(p.ker == n.intersect(&s)?, "ker R ≠ N∩S");
    require!(p.mul == m.intersect(&n)?, "mul R ≠ M∩N");
    require!(fixed(&r)? == m.intersect(&s)?, "ker(I−R) ≠ M∩S");

    let t = t_form(&m, &n, &s)?;
    let p = t.parts();
    require!(p.dom == m.sum(&n)?, "dom T ≠ M+N");
    require!(p.ran == m.sum(&s)?, "ran T ≠ M+S");
    require!(p.ker == n.sum(&m.intersect(&s)?)?, "ker T ≠ N + M∩S");
    require!(p.mul == s.sum(&m.intersect(&n)?)?, "mul T ≠ S + M∩N");
    require!(co_range(&t)? == n.sum(&s)?, "ran(I−T) ≠ N+S");
    Ok(Ok(()))
}

fn canonical_form_algebra(g: &mut Gen) -> Result<Outcome> {
    let (m, n, s) = g.family3();
    g.note_subspaces("M,N,S", &[&m, &n, &s]);
    let r = r_form(&m, &n, &s)?;
    require!(r.one_minus()? == r_form(&n, &m, &s)?, "I−R ≠ P_(N,M) ∩ (S×H)");
    require!(r.inverse() == r_form(&s, &n, &m)?, "R⁻¹ ≠ P_(S,N) ∩ (M×H)");
    let t = t_form(&m, &n, &s)?;
    require!(t.one_minus()? == t_form(&n, &m, &s)?, "I−T ≠ P_(N,M) +̂ ({{0}}×S)");
    require!(t.inverse() == t_form(&m, &s, &n)?, "T⁻¹ ≠ P_(M,S) +̂ ({{0}}×N)");
    Ok(Ok(()))
}

fn canonical_form_classes(g: &mut Gen) -> Result<Outcome> {
    let (m, n, s) = g.family3();
    g.note_subspaces("M,N,S", &[&m, &n, &s]);
    let r = r_form(&m, &n, &s)?;
    let t = t_form(&m, &n, &s)?;
    require!(is_sub(&r)?, "R-form is not sub-idempotent");
    require!(is_super(&t)?, "T-form is not super-idempotent");
    let p = semi_projection(&m, &n)?;
    require!(is_idem(&p)?, "P_(M,N) is not idempotent");
    let q = p.parts();
    require!(
        q.ran == m && q.ker == n && q.dom == m.sum(&n)? && q.mul == m.intersect(&n)?,
        "P_(M,N) has parts other than (M+N, M, N, M∩N)"
    );
    Ok(Ok(()))
}

fn square_preserves_class(g: &mut Gen) -> Result<Outcome> {
    let r = g.sub_idempotent()?;
    let t = g.super_idempotent()?;
    g.note_relation("R", &r);
    g.note_relation("T", &t);
    let (r2, t2) = (r.square()?, t.square()?);
    require!(is_sub(&r2)?, "R² is not sub-idempotent");
    require!(is_super(&t2)?, "T² is not super-idempotent");
    require!(r2.ker() == r.ker(), "ker R² ≠ ker R");
    require!(fixed(&r2)? == fixed(&r)?, "ker(I−R²) ≠ ker(I−R)");
    require!(r2.mul() == r.mul(), "mul R² ≠ mul R");
    require!(t2.ran() == t.ran(), "ran T² ≠ ran T");
    require!(co_range(&t2)? == co_range(&t)?, "ran(I−T²) ≠ ran(I−T)");
    require!(t2.dom() == t.dom(), "dom T² ≠ dom T");
    Ok(Ok(()))
}

fn sub_criterion(g: &mut Gen) -> Result<Outcome> {
    let e = g.mixed_relation()?;
    g.note_relation("E", &e);
    let p = e.parts();
    let i = is_sub(&e)?;
    let ii = e == upper_envelope(&e)?;
    let iii = fixed(&e)? == p.ran.intersect(&p.dom)?;
    let iv = semi_projection(&p.ran.intersect(&p.dom)?, &p.ker)?.leq(&e)?;
    require!(
        i == ii && i == iii && i == iv,
        "sub-idempotency tests disagree: E²⊆E {i}, E = upper envelope {ii}, fixed points {iii}, P ⊆ E {iv}"
    );
    if i {
        require!(
            p.mul.intersect(&p.dom)? == p.ran.intersect(&p.ker)?,
            "sub-idempotent but mul E ∩ dom E ≠ ran E ∩ ker E"
        );
    }
    Ok(Ok(()))
}

fn super_criterion(g: &mut Gen) -> Result<Outcome> {
    let e = g.mixed_relation()?;
    g.note_relation("E", &e);
    let p = e.parts();
    let i = is_super(&e)?;
    let ii = e == lower_envelope(&e)?;
    let iii = co_range(&e)? == p.ker.sum(&p.mul)?;
    let iv = e.leq(&semi_projection(&p.ran, &p.ker.sum(&p.mul)?)?)?;
    require!(
        i == ii && i == iii && i == iv,
        "super-idempotency tests disagree: E⊆E² {i}, E = lower envelope {ii}, co-range {iii}, E ⊆ P {iv}"
    );
    if i {
        require!(
            p.dom == p.ran.intersect(&p.dom)?.sum(&p.ker)?,
            "super-idempotent but dom E ≠ ran E ∩ dom E + ker E"
        );
    }
    Ok(Ok(()))
}

fn class_closure(g: &mut Gen) -> Result<Outcome> {
    let e = g.mixed_relation()?;
    g.note_relation("E", &e);
    let (c, inv) = (e.one_minus()?, e.inverse());
    let sub = [is_sub(&e)?, is_sub(&c)?, is_sub(&inv)?];
    let sup = [is_super(&e)?, is_super(&c)?, is_super(&inv)?];
    require!(sub[0] == sub[1] && sub[0] == sub[2], "sub-idempotency of E, I−E, E⁻¹: {sub:?}");
    require!(sup[0] == sup[1] && sup[0] == sup[2], "super-idempotency of E, I−E, E⁻¹: {sup:?}");
    Ok(Ok(()))
}

fn mixed_criteria(g: &mut Gen) -> Result<Outcome> {
    let e = if g.coin(0.5) { g.sub_idempotent()? } else { g.strict_sub()? };
    g.note_relation("E", &e);
    let p = e.parts();
    let cond = p.dom == p.ran.intersect(&p.dom)?.sum(&p.ker)?;
    require!(is_idem(&e)? == cond, "sub-idempotent E: idempotent ≠ (dom E = ran E ∩ dom E + ker E)");

    let f = if g.coin(0.5) { g.super_idempotent()? } else { g.strict_super()? };
    g.note_relation("F", &f);
    let p = f.parts();
    let cond = p.mul.intersect(&p.dom)? == p.ran.intersect(&p.ker)?;
    require!(is_idem(&f)? == cond, "super-idempotent F: idempotent ≠ (mul F ∩ dom F = ran F ∩ ker F)");
    Ok(Ok(()))
}

fn square_closed_form(g: &mut Gen) -> Result<Outcome> {
    let e = g.mixed_relation()?;
    g.note_relation("E", &e);
    let sq = e.square()?;
    let (sub, sup) = (is_sub(&e)?, is_super(&e)?);
    require!(sub == (sq == lower_envelope(&e)?), "sub-idempotent {sub} but E² = lower envelope is {}", !sub);
    require!(sup == (sq == upper_envelope(&e)?), "super-idempotent {sup} but E² = upper envelope is {}", !sup);
    if sub || sup {
        require!(is_idem(&sq)?, "E² is not idempotent");
        crate::idempotent::square(&e)?;
    }
    Ok(Ok(()))
}

fn square_characterization(g: &mut Gen) -> Result<Outcome> {
    let e = g.mixed_relation()?;
    g.note_relation("E", &e);
    let sq = e.square()?;
    let sub_side = sq.ker() == e.ker()
        && fixed(&sq)? == fixed(&e)?
        && sq.mul() == e.mul()
        && is_super(&sq)?;
    require!(is_sub(&e)? == sub_side, "sub-idempotency not characterized by the parts of E²");
    let super_side = sq.ran() == e.ran()
        && co_range(&sq)? == co_range(&e)?
        && sq.dom() == e.dom()
        && is_sub(&sq)?;
    require!(is_super(&e)? == super_side, "super-idempotency not characterized by the parts of E²");
    Ok(Ok(()))
}

fn strict_classes(g: &mut Gen) -> Result<Outcome> {
    let r = g.strict_sub()?;
    let t = g.strict_super()?;
    g.note_relation("R", &r);
    g.note_relation("T", &t);
    require!(is_sub(&r)? && !is_super(&r)?, "strict sub-idempotent instance fails");
    require!(is_super(&t)? && !is_sub(&t)?, "strict super-idempotent instance fails");
    let (cr, ct) = (classify(&r)?, classify(&t)?);
    require!(cr.is_sub && !cr.is_super && cr.not_super.is_some(), "classify disagrees on R");
    require!(ct.is_super && !ct.is_sub && ct.not_sub.is_some(), "classify disagrees on T");
    Ok(Ok(()))
}

fn classify_agrees(g: &mut Gen) -> Result<Outcome> {
    let e = g.mixed_relation()?;
    g.note_relation("E", &e);
    let c = classify(&e)?;
    require!(c.is_sub == is_sub(&e)?, "classify: sub flag wrong");
    require!(c.is_super == is_super(&e)?, "classify: super flag wrong");
    require!(c.is_idempotent == is_idem(&e)?, "classify: idempotent flag wrong");
    let sp = e == semi_projection(&e.ran(), &e.ker())?;
    require!(c.is_semi_projection == sp, "classify: semi-projection flag wrong");
    require!(c.is_operator == e.mul().is_zero(), "classify: operator flag wrong");
    Ok(Ok(()))
}

fn idempotent_characterizations(g: &mut Gen) -> Result<Outcome> {
    let e = g.mixed_relation()?;
    g.note_relation("E", &e);
    let p = e.parts();
    let (lo, up) = (lower_envelope(&e)?, upper_envelope(&e)?);
    let idem = is_idem(&e)?;
    let a = e == lo && e == up;
    let b = e == up && p.dom == p.ran.intersect(&p.dom)?.sum(&p.ker)?;
    let c = e == lo && p.mul.intersect(&p.dom)? == p.ran.intersect(&p.ker)?;
    let fp = p.ran.sum(&p.ker)?.contains(&p.dom)?
        && LinearRelation::identity_on(&p.ran.intersect(&p.dom)?).leq(&e)?;
    require!(
        idem == a && idem == b && idem == c && idem == fp,
        "idempotent {idem} but characterizations give {a}, {b}, {c}, fixed points {fp}"
    );
    Ok(Ok(()))
}

fn idempotent_parts(g: &mut Gen) -> Result<Outcome> {
    let e = g.idempotent()?;
    g.note_relation("E", &e);
    let p = e.parts();
    let (fx, cr) = (fixed(&e)?, co_range(&e)?);
    require!(p.dom == fx.sum(&p.ker)?, "dom E ≠ ker(I−E) + ker E");
    require!(p.ran == fx.sum(&p.mul)?, "ran E ≠ ker(I−E) + mul E");
    require!(p.ker == cr.intersect(&p.dom)?, "ker E ≠ ran(I−E) ∩ dom E");
    require!(p.mul == p.ran.intersect(&cr)?, "mul E ≠ ran E ∩ ran(I−E)");
    require!(fx == p.ran.intersect(&p.dom)?, "ker(I−E) ≠ ran E ∩ dom E");
    Ok(Ok(()))
}

fn idempotent_set_forms(g: &mut Gen) -> Result<Outcome> {
    let (m, n, s) = g.family3();
    g.note_subspaces("M,N,S", &[&m, &n, &s]);
    let a = t_form(&m.intersect(&s)?, &n.intersect(&s)?, &m.intersect(&n)?)?;
    require!(is_idem(&a)?, "P_(M∩S, N∩S) +̂ ({{0}} × M∩N) is not idempotent");
    let b = r_form(&m.sum(&s)?, &n.sum(&s)?, &m.sum(&n)?)?;
    require!(is_idem(&b)?, "P_(M+S, N+S) ∩ ((M+N) × H) is not idempotent");

    let e = g.idempotent()?;
    g.note_relation("E", &e);
    let (x, y, z) = (e.ran(), co_range(&e)?, e.dom());
    require!(
        e == t_form(&x.intersect(&z)?, &y.intersect(&z)?, &x.intersect(&y)?)?,
        "idempotent E not of the form P_(X∩Z, Y∩Z) +̂ ({{0}} × X∩Y)"
    );
    let (m, n, s) = (fixed(&e)?, e.ker(), e.mul());
    require!(
        e == r_form(&m.sum(&s)?, &n.sum(&s)?, &m.sum(&n)?)?,
        "idempotent E not of the form P_(M+S, N+S) ∩ ((M+N) × H)"
    );
    Ok(Ok(()))
}

fn minimal_extremality(g: &mut Gen) -> Result<Outcome> {
    let (m, n, s) = g.family3();
    g.note_subspaces("M,N,S", &[&m, &n, &s]);
    let e0 = minimal_idempotent(&m, &n, &s)?;
    require!(is_idem(&e0)?, "E₀ is not idempotent");
    require!(fixed(&e0)?.contains(&m)?, "M ⊄ ker(I−E₀)");
    require!(e0.ker().contains(&n)?, "N ⊄ ker E₀");
    require!(e0.mul().contains(&s)?, "S ⊄ mul E₀");
    let mn_ms = m.sum(&n)?.intersect(&m.sum(&s)?)?;
    require!(e0 == t_form(&mn_ms, &n, &s)?, "E₀ ≠ P_((M+N)∩(M+S), N) +̂ ({{0}} × S)");
    for k in 0..g.cfg.extremal_samples {
        // A dominating idempotent: either the maximal one for enlarged range
        // data, or the minimal one for an enlarged kernel triple.
        let f = if k % 2 == 0 {
            let x = g.superspace_of(&m.sum(&s)?);
            let y = g.superspace_of(&n.sum(&s)?);
            let z = g.superspace_of(&m.sum(&n)?);
            t_form(&x.intersect(&z)?, &y.intersect(&z)?, &x.intersect(&y)?)?
        } else {
            let (m2, n2, s2) = (g.superspace_of(&m), g.superspace_of(&n), g.superspace_of(&s));
            r_form(&m2.sum(&s2)?, &n2.sum(&s2)?, &m2.sum(&n2)?)?
        };
        require!(is_idem(&f)?, "sampled dominating relation is not idempotent");
        let dominates =
            fixed(&f)?.contains(&m)? && f.ker().contains(&n)? && f.mul().contains(&s)?;
        if dominates {
            require!(e0.leq(&f)?, "E₀ ⊄ F for a dominating idempotent F");
        }
    }
    Ok(Ok(()))
}

fn maximal_extremality(g: &mut Gen) -> Result<Outcome> {
    let (x, y, z) = g.family3();
    g.note_subspaces("X,Y,Z", &[&x, &y, &z]);
    let f0 = maximal_idempotent(&x, &y, &z)?;
    require!(f0 == maximal_idempotent_hat_form(&x, &y, &z)?, "the two forms of F₀ differ");
    require!(is_idem(&f0)?, "F₀ is not idempotent");
    require!(x.contains(&f0.ran())?, "ran F₀ ⊄ X");
    require!(y.contains(&co_range(&f0)?)?, "ran(I−F₀) ⊄ Y");
    require!(z.contains(&f0.dom())?, "dom F₀ ⊄ Z");
    let (xz, yz, xy) = (x.intersect(&z)?, y.intersect(&z)?, x.intersect(&y)?);
    for k in 0..g.cfg.extremal_samples {
        let e = if k % 2 == 0 {
            let (a, b, c) = (g.subspace_within(&xz), g.subspace_within(&yz), g.subspace_within(&xy));
            r_form(&a.sum(&c)?, &b.sum(&c)?, &a.sum(&b)?)?
        } else {
            let (p, q, r) = (g.subspace_within(&y), g.subspace_within(&x), g.subspace_within(&z));
            t_form(&q.intersect(&r)?, &p.intersect(&r)?, &p.intersect(&q)?)?
        };
        require!(is_idem(&e)?, "sampled dominated relation is not idempotent");
        let dominated =
            x.contains(&e.ran())? && y.contains(&co_range(&e)?)? && z.contains(&e.dom())?;
        if dominated {
            require!(e.leq(&f0)?, "E ⊄ F₀ for a dominated idempotent E");
        }
    }
    Ok(Ok(()))
}

fn ic_characterization(g: &mut Gen) -> Result<Outcome> {
    let (m, n, s) = if g.coin(0.5) {
        g.family3()
    } else {
        let t = g.ic_triple()?;
        (t.m().clone(), t.n().clone(), t.s().clone())
    };
    g.note_subspaces("M,N,S", &[&m, &n, &s]);
    let ii = ic_holds(&m, &n, &s)?;
    let iii = m.sum(&n)?.intersect(&m.sum(&s)?)? == m && m.intersect(&n)? == m.intersect(&s)?;
    let sym = m.sum(&n)?.intersect(&m.sum(&s)?)? == m
        && n.sum(&m)?.intersect(&n.sum(&s)?)? == n
        && s.sum(&m)?.intersect(&s.sum(&n)?)? == s;
    require!(ii == iii && ii == sym, "idempotency condition {ii}, second form {iii}, symmetric form {sym}");
    let e = t_form(&m, &n, &s)?;
    let realized = is_idem(&e)? && (fixed(&e)?, e.ker(), e.mul()) == (m.clone(), n.clone(), s.clone());
    require!(ii == realized, "condition {ii} but P_(M,N,S) realizes the triple: {realized}");
    if ii {
        require!(
            e == r_form(&m.sum(&s)?, &n.sum(&s)?, &m.sum(&n)?)?,
            "two idempotents with the same kernel triple differ"
        );
    }
    Ok(Ok(()))
}

fn range_characterization(g: &mut Gen) -> Result<Outcome> {
    let (x, y, z) = if g.coin(0.5) {
        g.family3()
    } else {
        let e = g.idempotent()?;
        (e.ran(), co_range(&e)?, e.dom())
    };
    g.note_subspaces("X,Y,Z", &[&x, &y, &z]);
    let ii = range_condition_holds(&x, &y, &z)?;
    let iii = x == x.intersect(&y)?.sum(&x.intersect(&z)?)? && x.sum(&y)? == x.sum(&z)?;
    let sym = x == x.intersect(&y)?.sum(&x.intersect(&z)?)?
        && y == y.intersect(&x)?.sum(&y.intersect(&z)?)?
        && z == z.intersect(&x)?.sum(&z.intersect(&y)?)?;
    require!(ii == iii && ii == sym, "range condition {ii}, second form {iii}, symmetric form {sym}");
    let f = r_form(&x, &y, &z)?;
    let realized = is_idem(&f)? && (f.ran(), co_range(&f)?, f.dom()) == (x.clone(), y.clone(), z.clone());
    require!(ii == realized, "condition {ii} but P_(X,Y) ∩ (Z×H) realizes the triple: {realized}");
    if ii {
        require!(
            f == t_form(&x.intersect(&z)?, &y.intersect(&z)?, &x.intersect(&y)?)?,
            "two idempotents with the same range triple differ"
        );
    }
    Ok(Ok(()))
}

fn triple_conversion(g: &mut Gen) -> Result<Outcome> {
    let t = g.ic_triple()?;
    g.note_subspaces("M,N,S", &[t.m(), t.n(), t.s()]);
    let r = t.to_range_triple();
    require!(range_condition_holds(r.x(), r.y(), r.z())?, "converted triple violates the range condition");
    require!(r.to_kernel_triple() == t, "kernel → range → kernel is not the identity");
    require!(t.relation() == r.relation(), "P_(M,N,S) ≠ P_(X,Y) ∩ (Z×H)");
    let e = t.relation();
    require!(kernel_triple(&e)? == t, "kernel triple of P_(M,N,S) is not (M,N,S)");
    require!(range_triple(&e)? == r, "range triple of P_(M,N,S) is not (M+S, N+S, M+N)");
    let back = RangeTriple::new(r.x().clone(), r.y().clone(), r.z().clone())?;
    require!(back.to_kernel_triple().to_range_triple() == back, "range → kernel → range is not the identity");
    let (m, n) = (t.m(), t.n());
    require!(
        semi_projection(m, n)? == build_pmns(m, n, &m.intersect(n)?)?,
        "P_(M,N) ≠ P_(M,N,M∩N)"
    );
    Ok(Ok(()))
}

fn pmns_algebra(g: &mut Gen) -> Result<Outcome> {
    let t = g.ic_triple()?;
    let (m, n, s) = (t.m(), t.n(), t.s());
    g.note_subspaces("M,N,S", &[m, n, s]);
    let e = t.relation();
    require!(e.inverse() == build_pmns(m, s, n)?, "P_(M,N,S)⁻¹ ≠ P_(M,S,N)");
    require!(e.one_minus()? == build_pmns(n, m, s)?, "I − P_(M,N,S) ≠ P_(N,M,S)");
    Ok(Ok(()))
}

fn semi_projection_characterization(g: &mut Gen) -> Result<Outcome> {
    let e = g.mixed_relation()?;
    g.note_relation("E", &e);
    let sp = e == semi_projection(&e.ran(), &e.ker())?;
    let by_def = is_idem(&e)? && e.dom().contains(&e.ran())?;
    require!(sp == by_def, "E = P_(ran E, ker E) is {sp} but idempotent with ran E ⊆ dom E is {by_def}");
    Ok(Ok(()))
}

fn form_adjoints(g: &mut Gen) -> Result<Outcome> {
    let (m, n, s) = g.family3();
    g.note_subspaces("M,N,S", &[&m, &n, &s]);
    let (mp, np, sp) = (m.ortho_complement(), n.ortho_complement(), s.ortho_complement());
    require!(
        semi_projection(&m, &n)?.adjoint() == semi_projection(&np, &mp)?,
        "P_(M,N)* ≠ P_(N⊥,M⊥)"
    );
    require!(
        t_form(&m, &n, &s)?.adjoint() == semi_projection(&np, &mp)?.meet(&times_full(&sp))?,
        "(P_(M,N) +̂ ({{0}}×S))* ≠ P_(N⊥,M⊥) ∩ (S⊥×H)"
    );
    require!(
        r_form(&m, &n, &s)?.adjoint() == t_form(&np, &mp, &sp)?,
        "(P_(M,N) ∩ (S×H))* ≠ P_(N⊥,M⊥) +̂ ({{0}}×S⊥)"
    );
    Ok(Ok(()))
}

fn idempotent_adjoint(g: &mut Gen) -> Result<Outcome> {
    let t = g.ic_triple()?;
    let (m, n, s) = (t.m(), t.n(), t.s());
    g.note_subspaces("M,N,S", &[m, n, s]);
    let (mp, np, sp) = (m.ortho_complement(), n.ortho_complement(), s.ortho_complement());
    require!(
        np.sum(&mp)?.intersect(&sp)? == np.intersect(&sp)?.sum(&mp.intersect(&sp)?)?,
        "(N⊥+M⊥)∩S⊥ ≠ N⊥∩S⊥ + M⊥∩S⊥"
    );
    let expected = IdempotentTriple::new(np.intersect(&sp)?, mp.intersect(&sp)?, mp.intersect(&np)?)?;
    let (adj, adj_triple) = adjoint_idempotent(&t.relation())?;
    require!(adj_triple == expected, "kernel triple of E* is not (N⊥∩S⊥, M⊥∩S⊥, M⊥∩N⊥)");
    require!(adj == expected.relation(), "E* ≠ P_(N⊥∩S⊥, M⊥∩S⊥, M⊥∩N⊥)");
    require!(is_idem(&adj)?, "E* is not idempotent");
    Ok(Ok(()))
}

fn angle_pair(g: &mut Gen) -> (Subspace, Subspace) {
    let n = g.range_incl(1, g.n().min(6));
    let mut f = g.family(n, 2);
    let t = f.pop().unwrap();
    (f.pop().unwrap(), t)
}

fn angle_basics(g: &mut Gen) -> Result<Outcome> {
    let (s, t) = angle_pair(g);
    g.note_subspaces("S,T", &[&s, &t]);
    let tol = g.cfg.angle_tol;
    let (c0, c) = (dixmier_cos(&s, &t, tol)?, friedrichs_cos(&s, &t, tol)?);
    require!((0.0..=1.0).contains(&c0) && (0.0..=1.0).contains(&c), "cosines outside [0, 1]: {c0}, {c}");
    require!(c <= c0 + tol, "c = {c} exceeds c₀ = {c0}");
    require!((dixmier_cos(&t, &s, tol)? - c0).abs() <= tol, "c₀ is not symmetric");
    require!((friedrichs_cos(&t, &s, tol)? - c).abs() <= tol, "c is not symmetric");
    if s.intersect(&t)?.is_zero() {
        require!((c - c0).abs() <= tol, "S∩T = 0 but c = {c} ≠ c₀ = {c0}");
    }
    Ok(Ok(()))
}

fn angle_closed_sum(g: &mut Gen) -> Result<Outcome> {
    let (s, t) = angle_pair(g);
    g.note_subspaces("S,T", &[&s, &t]);
    let c = friedrichs_cos(&s, &t, g.cfg.angle_tol)?;
    require!(c < 1.0 - 1e-9, "c(S, T) = {c} is not below 1");
    Ok(Ok(()))
}

fn angle_intersection(g: &mut Gen) -> Result<Outcome> {
    let (s, t) = angle_pair(g);
    g.note_subspaces("S,T", &[&s, &t]);
    let c0 = dixmier_cos(&s, &t, g.cfg.angle_tol)?;
    let meets = !s.intersect(&t)?.is_zero();
    require!(((c0 - 1.0).abs() < 1e-6) == meets, "c₀ = {c0} but S∩T ≠ 0 is {meets}");
    Ok(Ok(()))
}

fn angle_monotone(g: &mut Gen) -> Result<Outcome> {
    let (s, w) = angle_pair(g);
    let t = s.intersect(&w)?.sum(&g.subspace_within(&w))?;
    g.note_subspaces("S,T,W", &[&s, &t, &w]);
    let tol = g.cfg.angle_tol;
    let (ct, cw) = (friedrichs_cos(&t, &s, tol)?, friedrichs_cos(&w, &s, tol)?);
    require!(ct <= cw + 1e-9, "S∩W ⊆ T ⊆ W but c(T, S) = {ct} > c(W, S) = {cw}");
    Ok(Ok(()))
}

fn angle_sampled(g: &mut Gen) -> Result<Outcome> {
    let (s, t) = angle_pair(g);
    g.note_subspaces("S,T", &[&s, &t]);
    let tol = g.cfg.angle_tol;
    let c = friedrichs_cos(&s, &t, tol)?;
    let (qs, qt) = (
        orthonormal_basis_f64(&s.relative_complement(&t)?),
        orthonormal_basis_f64(&t.relative_complement(&s)?),
    );
    if qs.vectors.is_empty() || qt.vectors.is_empty() {
        return Ok(Ok(()));
    }
    let unit = |g: &mut Gen, vs: &[Vec<Complex64>]| {
        let mut x = vec![Complex64::new(0.0, 0.0); vs[0].len()];
        for v in vs {
            let k = Complex64::new(g.unit_f64(), g.unit_f64());
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += k * vi;
            }
        }
        let len = x.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        x.iter().map(|a| a / len).collect::<Vec<_>>()
    };
    for _ in 0..8 {
        let (x, y) = (unit(g, &qs.vectors), unit(g, &qt.vectors));
        let ip: Complex64 = x.iter().zip(&y).map(|(a, b)| a * b.conj()).sum();
        require!(ip.norm() <= c + 1e-9, "|⟨x, y⟩| = {} exceeds c = {c}", ip.norm());
    }
    Ok(Ok(()))
}

const REJECTION_ATTEMPTS: usize = 64;

fn no_sample(what: &str) -> Outcome {
    Err(format!("no {what} relation among {REJECTION_ATTEMPTS} random draws"))
}

fn sub_side_agrees(g: &mut Gen, e: &LinearRelation) -> Result<Outcome> {
    g.note_relation("E", e);
    let p = e.parts();
    require!(is_sub(e)?, "E² ⊄ E");
    require!(classify(e)?.is_sub, "classify misses sub-idempotency");
    require!(fixed(e)? == p.ran.intersect(&p.dom)?, "ker(I−E) ≠ ran E ∩ dom E");
    require!(
        *e == r_form(&p.ran, &co_range(e)?, &p.dom)?,
        "E ≠ P_(ran E, ran(I−E)) ∩ (dom E × H)"
    );
    Ok(Ok(()))
}

fn super_side_agrees(g: &mut Gen, e: &LinearRelation) -> Result<Outcome> {
    g.note_relation("E", e);
    let p = e.parts();
    require!(is_super(e)?, "E ⊄ E²");
    require!(classify(e)?.is_super, "classify misses super-idempotency");
    require!(co_range(e)? == p.ker.sum(&p.mul)?, "ran(I−E) ≠ ker E + mul E");
    require!(
        *e == t_form(&fixed(e)?, &p.ker, &p.mul)?,
        "E ≠ P_(ker(I−E), ker E) +̂ ({{0}} × mul E)"
    );
    Ok(Ok(()))
}

fn idempotent_side_agrees(g: &mut Gen, e: &LinearRelation) -> Result<Outcome> {
    g.note_relation("E", e);
    let (m, n, s) = (fixed(e)?, e.ker(), e.mul());
    require!(is_idem(e)?, "E² ≠ E");
    require!(classify(e)?.is_idempotent, "classify misses idempotency");
    require!(ic_holds(&m, &n, &s)?, "kernel triple violates (M+N)∩S = M∩N");
    require!(*e == t_form(&m, &n, &s)?, "E ≠ P_(M,N,S) of its kernel triple");
    Ok(Ok(()))
}

fn sub_from_form(g: &mut Gen) -> Result<Outcome> {
    let e = if g.coin(0.5) { g.sub_idempotent()? } else { g.strict_sub()? };
    sub_side_agrees(g, &e)
}

fn sub_from_definition(g: &mut Gen) -> Result<Outcome> {
    match g.relation_where(REJECTION_ATTEMPTS, is_sub)? {
        Some(e) => sub_side_agrees(g, &e),
        None => Ok(no_sample("sub-idempotent")),
    }
}

fn super_from_form(g: &mut Gen) -> Result<Outcome> {
    let e = if g.coin(0.5) { g.super_idempotent()? } else { g.strict_super()? };
    super_side_agrees(g, &e)
}

fn super_from_definition(g: &mut Gen) -> Result<Outcome> {
    match g.relation_where(REJECTION_ATTEMPTS, is_super)? {
        Some(e) => super_side_agrees(g, &e),
        None => Ok(no_sample("super-idempotent")),
    }
}

fn idempotent_from_triple(g: &mut Gen) -> Result<Outcome> {
    let e = g.idempotent()?;
    idempotent_side_agrees(g, &e)
}

fn idempotent_from_definition(g: &mut Gen) -> Result<Outcome> {
    match g.relation_where(REJECTION_ATTEMPTS, is_idem)? {
        Some(e) => idempotent_side_agrees(g, &e),
        None => Ok(no_sample("idempotent")),
    }
}

/// Deliberately wrong: confuses `ran E ∩ dom E` with `ran E + dom E`.
fn broken_sub_criterion(g: &mut Gen) -> Result<Outcome> {
    let e = g.mixed_relation()?;
    g.note_relation("E", &e);
    let claimed = fixed(&e)? == e.ran().sum(&e.dom())?;
    require!(is_sub(&e)? == claimed, "E² ⊆ E is {} but the broken criterion gives {claimed}", !claimed);
    Ok(Ok(()))
}

macro_rules! checks {
    ($( $name:literal, $run:ident, $default:literal, $statement:literal; )*) => {
        pub const CHECKS: &[Check] = &[
            $( Check { name: $name, statement: $statement, default: $default, run: $run }, )*
        ];
    };
}

checks! {
    "lattice_duality", lattice_duality, true,
        "(M∩N)⊥ = M⊥+N⊥, (M+N)⊥ = M⊥∩N⊥, M⊥⊥ = M, dim(M+N) + dim(M∩N) = dim M + dim N";
    "equality_criterion", equality_criterion, true,
        "S = T iff S ⊆ T, dom T ⊆ dom S and mul T ⊆ mul S";
    "one_minus", one_minus_membership, true,
        "(u,v) ∈ I−T iff (u,u−v) ∈ T, I−T = I + (−T), ker(I−T) ⊆ ran T ∩ dom T, ker(I−T) ⊆ ker(I−T²), ran(I−T²) ⊆ ran(I−T)";
    "inverse_composition", inverse_composition, true,
        "T⁻¹T = I_dom T +̂ ({0}×ker T) = P_(dom T, ker T) and TT⁻¹ = I_ran T +̂ ({0}×mul T)";
    "adjoint_parts", adjoint_parts, true,
        "mul T* = (dom T)⊥, ker T* = (ran T)⊥, dom T* = (mul T)⊥, ran T* = (ker T)⊥, T** = T";
    "adjoint_of_product", adjoint_of_product, true,
        "T*S* ⊆ (ST)*";
    "adjoint_of_sums", adjoint_of_sums, true,
        "(T +̂ S)* = T* ∩ S*, (T ∩ S)* = T* +̂ S*, T* + S* ⊆ (T+S)*";
    "adjoint_pair", adjoint_pair, true,
        "A ⊆ B* with ker A + ran B = H and ker B + ran A = K implies A = B* and B = A*";
    "envelope_sandwich", sandwich, true,
        "P_(ker(I−E), ker E) +̂ ({0}×mul E) ⊆ E ⊆ P_(ran E, ran(I−E)) ∩ (dom E×H)";
    "canonical_form_parts", canonical_form_parts, true,
        "parts of P_(M,N) ∩ (S×H) and of P_(M,N) +̂ ({0}×S) in terms of M, N, S";
    "canonical_form_algebra", canonical_form_algebra, true,
        "I−R, R⁻¹, I−T and T⁻¹ are again canonical forms with permuted subspaces";
    "canonical_form_classes", canonical_form_classes, true,
        "R-forms are sub-idempotent, T-forms super-idempotent, P_(M,N) idempotent";
    "square_preserves_class", square_preserves_class, true,
        "the square of a sub- (super-) idempotent relation is sub- (super-) idempotent with the same kernel-side (range-side) parts";
    "sub_criterion", sub_criterion, true,
        "E² ⊆ E iff E = upper envelope iff ker(I−E) = ran E ∩ dom E iff P_(ran E ∩ dom E, ker E) ⊆ E";
    "super_criterion", super_criterion, true,
        "E ⊆ E² iff E = lower envelope iff ran(I−E) = ker E + mul E iff E ⊆ P_(ran E, ker E + mul E)";
    "class_closure", class_closure, true,
        "E, I−E and E⁻¹ are together sub-idempotent or not, and together super-idempotent or not";
    "mixed_criteria", mixed_criteria, true,
        "a sub-idempotent E is idempotent iff dom E = ran E ∩ dom E + ker E; dually for super-idempotent E";
    "square_closed_form", square_closed_form, true,
        "E sub-idempotent iff E² is the lower envelope; super-idempotent iff E² is the upper envelope";
    "square_characterization", square_characterization, true,
        "sub- and super-idempotency are determined by the parts and class of E²";
    "strict_classes", strict_classes, true,
        "there are sub-idempotent relations that are not super-idempotent and conversely";
    "classify_agrees", classify_agrees, true,
        "classification flags agree with the defining inclusions";
    "idempotent_characterizations", idempotent_characterizations, true,
        "E² = E iff E equals both envelopes iff either envelope with its mixed condition iff the fixed-point condition";
    "idempotent_parts", idempotent_parts, true,
        "parts of an idempotent in terms of ker(I−E), ran(I−E), ker E, mul E";
    "idempotent_set_forms", idempotent_set_forms, true,
        "P_(M∩S,N∩S) +̂ ({0}×M∩N) and P_(M+S,N+S) ∩ ((M+N)×H) are idempotent, and every idempotent has both forms";
    "minimal_idempotent", minimal_extremality, true,
        "E₀ = P_(M+S,N+S) ∩ ((M+N)×H) is the least idempotent with M ⊆ ker(I−E), N ⊆ ker E, S ⊆ mul E";
    "maximal_idempotent", maximal_extremality, true,
        "F₀ = P_(X,Y) ∩ ((Z∩X+Z∩Y)×H) is the greatest idempotent with ran F ⊆ X, ran(I−F) ⊆ Y, dom F ⊆ Z";
    "kernel_triple_condition", ic_characterization, true,
        "(M,N,S) is the kernel triple of an idempotent iff (M+N)∩S = M∩N, and that idempotent is unique";
    "range_triple_condition", range_characterization, true,
        "(X,Y,Z) is the range triple of an idempotent iff X∩Y + Z = X+Y, and that idempotent is unique";
    "triple_conversion", triple_conversion, true,
        "(M,N,S) ↦ (M+S, N+S, M+N) and (X,Y,Z) ↦ (X∩Z, Y∩Z, X∩Y) are inverse bijections";
    "pmns_algebra", pmns_algebra, true,
        "P_(M,N,S)⁻¹ = P_(M,S,N) and I − P_(M,N,S) = P_(N,M,S)";
    "semi_projection_characterization", semi_projection_characterization, true,
        "E = P_(ran E, ker E) iff E is idempotent with ran E ⊆ dom E";
    "form_adjoints", form_adjoints, true,
        "P_(M,N)* = P_(N⊥,M⊥) and adjoints of the canonical forms swap them";
    "idempotent_adjoint", idempotent_adjoint, true,
        "P_(M,N,S)* = P_(N⊥∩S⊥, M⊥∩S⊥, M⊥∩N⊥)";
    "angle_basics", angle_basics, true,
        "0 ≤ c(S,T) ≤ c₀(S,T) ≤ 1, both symmetric, equal when S∩T = 0";
    "angle_closed_sum", angle_closed_sum, true,
        "c(S,T) < 1 in finite dimension";
    "angle_intersection", angle_intersection, true,
        "c₀(S,T) = 1 iff S∩T ≠ 0";
    "angle_monotone", angle_monotone, true,
        "S∩W ⊆ T ⊆ W implies c(T,S) ≤ c(W,S)";
    "angle_sampled_bound", angle_sampled, true,
        "|⟨x,y⟩| ≤ c(S,T) for unit x ∈ S ⊖ S∩T, y ∈ T ⊖ S∩T";
    "sub_from_form", sub_from_form, true,
        "relations built as P_(M,N) ∩ (S×H) pass E² ⊆ E and the sub-idempotency criterion";
    "sub_from_definition", sub_from_definition, true,
        "relations drawn at random that pass E² ⊆ E are R-forms of their own parts";
    "super_from_form", super_from_form, true,
        "relations built as P_(M,N) +̂ ({0}×S) pass E ⊆ E² and the super-idempotency criterion";
    "super_from_definition", super_from_definition, true,
        "relations drawn at random that pass E ⊆ E² are T-forms of their own parts";
    "idempotent_from_triple", idempotent_from_triple, true,
        "P_(M,N,S) built from a triple with (M+N)∩S = M∩N is idempotent with that kernel triple";
    "idempotent_from_definition", idempotent_from_definition, true,
        "relations drawn at random with E² = E have a kernel triple satisfying (M+N)∩S = M∩N and equal P_(M,N,S)";
    "broken_sub_criterion", broken_sub_criterion, false,
        "a deliberately false criterion, used to test that failures are caught";
}

/// Results quoted for completeness that the verifier does not exercise.
pub const OUT_OF_SCOPE: &[&str] = &[
    "closedness, closures and operator ranges in infinite-dimensional Hilbert spaces",
    "identities that need a positive Friedrichs angle as a hypothesis (automatic in finite dimension)",
    "unbounded and non-closed relations",
];
