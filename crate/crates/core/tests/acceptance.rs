//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs sequentially so the timing budgets measure the work itself.

use std::time::{Duration, Instant};

use relcalc::angles::{dixmier_cos, friedrichs_cos};
use relcalc::cli::run_command;
use relcalc::format::{parse_document, serialize_document, Document};
use relcalc::idempotent::*;
use relcalc::verify::{verify_suite, Gen, GenConfig, Selection};
use relcalc::{LinearRelation, Result, Subspace};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn cfg(dim: usize, seed: u64) -> GenConfig {
    GenConfig { ambient_dim: dim, seed, ..GenConfig::default() }
}

/// Dimensions 2..=6 in rotation.
fn dim_of(trial: usize) -> usize {
    2 + trial % 5
}

fn fuzz_args() -> Vec<&'static str> {
    vec!["relcalc", "fuzz", "--dim", "4", "--trials", "500", "--seed", "42"]
}

fn exact_suite(stdout: &mut Option<String>) -> Outcome {
    let start = Instant::now();
    let out = run_command(fuzz_args());
    let took = start.elapsed();
    let report = match parse_document(&out.stdout) {
        Ok(Document::Report(r)) => r,
        _ => return fail(format!("no report (exit {}): {}", out.code, out.stderr)),
    };
    *stdout = Some(out.stdout);
    let failed: Vec<String> = report
        .checks
        .iter()
        .filter(|c| c.failures > 0)
        .map(|c| format!("{}={}", c.name, c.failures))
        .collect();
    let detail = format!("{} checks x 500 trials, {} failures, {:.1}s", report.checks.len(), report.failures(), took.as_secs_f64());
    if !failed.is_empty() || out.code != 0 {
        fail(format!("{detail}; failing: {}", failed.join(", ")))
    } else if took >= Duration::from_secs(60) {
        fail(format!("{detail}; over the 60s budget"))
    } else {
        pass(detail)
    }
}

fn is_sub(e: &LinearRelation) -> Result<bool> {
    e.square()?.leq(e)
}

fn is_super(e: &LinearRelation) -> Result<bool> {
    e.leq(&e.square()?)
}

/// Draws unstructured relations until one passes `accept`.
fn drawn(g: &mut Gen, accept: fn(&LinearRelation) -> Result<bool>) -> Result<Option<LinearRelation>> {
    for _ in 0..400 {
        let e = g.relation();
        if accept(&e)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

fn two_sided() -> Result<Outcome> {
    const TRIALS: usize = 200;
    let checks = [
        "sub_from_form",
        "sub_from_definition",
        "super_from_form",
        "super_from_definition",
        "idempotent_from_triple",
        "idempotent_from_definition",
        "sub_criterion",
        "super_criterion",
        "kernel_triple_condition",
        "range_triple_condition",
        "semi_projection_characterization",
    ];
    let c = GenConfig { trials: TRIALS, ..cfg(4, 42) };
    let report = verify_suite(&c, Selection::Named(&checks))?;
    let mut bad: Vec<String> = report.checks.iter().filter(|r| r.failures > 0).map(|r| r.name.clone()).collect();

    // Both sides through the same classifier: built from canonical forms, and
    // drawn at random then filtered by the defining inclusions.
    let mut undrawn = 0;
    for trial in 0..TRIALS {
        let mut g = Gen::new(&cfg(dim_of(trial), 42), "acceptance/two_sided", trial);
        let (m, n, s) = (g.subspace(g.n()), g.subspace(g.n()), g.subspace(g.n()));
        let formed = [
            ("sub", r_form(&m, &n, &s)?),
            ("super", t_form(&m, &n, &s)?),
            ("idempotent", g.idempotent()?),
        ];
        let defined = [
            ("sub", drawn(&mut g, is_sub)?),
            ("super", drawn(&mut g, is_super)?),
            ("idempotent", drawn(&mut g, |e| Ok(e.square()? == *e))?),
        ];
        let candidates = formed.into_iter().map(|(k, e)| (k, Some(e))).chain(defined);
        for (class, e) in candidates {
            let Some(e) = e else {
                undrawn += 1;
                continue;
            };
            let c = classify(&e)?;
            let ok = match class {
                "sub" => c.is_sub && is_sub(&e)? && e == upper_envelope(&e)?,
                "super" => c.is_super && is_super(&e)? && e == lower_envelope(&e)?,
                _ => {
                    let t = kernel_triple(&e)?;
                    c.is_idempotent && build_pmns(t.m(), t.n(), t.s())? == e
                }
            };
            if !ok {
                bad.push(format!("{class} trial {trial}"));
            }
        }
    }
    let detail = format!("{} checks x {TRIALS} trials + {TRIALS} instances per side and class", checks.len());
    Ok(if bad.is_empty() && undrawn == 0 {
        pass(detail)
    } else {
        fail(format!("{detail}; failing: {}; undrawn: {undrawn}", bad.join(", ")))
    })
}

fn triple_round_trip() -> Result<Outcome> {
    let mut bad = 0;
    for trial in 0..500 {
        let mut g = Gen::new(&cfg(dim_of(trial), 42), "acceptance/triples", trial);
        let e = g.idempotent()?;
        let kt = kernel_triple(&e)?;
        let built = build_pmns(kt.m(), kt.n(), kt.s())?;
        let rt = range_triple(&e)?;
        let ok = built == e
            && kernel_triple(&built)? == kt
            && range_triple(&rt.relation())? == rt
            && rt.relation() == e
            && kt.to_range_triple() == rt
            && rt.to_kernel_triple() == kt
            && kt.to_range_triple().to_kernel_triple() == kt;
        bad += usize::from(!ok);
    }
    Ok(if bad == 0 {
        pass("500 idempotents in dims 2-6, kernel, range and conversion round trips")
    } else {
        fail(format!("{bad} of 500 idempotents broke a round trip"))
    })
}

fn adjoint_theorem() -> Result<Outcome> {
    let mut bad = 0;
    let mut complex = 0;
    for trial in 0..1000 {
        let mut g = Gen::new(&cfg(dim_of(trial), 42), "acceptance/adjoint", trial);
        let e = g.idempotent()?;
        complex += usize::from(e.generators().iter().any(|(x, y)| x.iter().chain(y).any(|a| !a.is_real())));
        let t = kernel_triple(&e)?;
        let adj = e.adjoint();
        let (mp, np, sp) = (t.m().ortho_complement(), t.n().ortho_complement(), t.s().ortho_complement());
        let expected = (np.intersect(&sp)?, mp.intersect(&sp)?, mp.intersect(&np)?);
        let ok = classify(&adj)?.is_idempotent && {
            let at = kernel_triple(&adj)?;
            (at.m(), at.n(), at.s()) == (&expected.0, &expected.1, &expected.2)
        };
        bad += usize::from(!ok);
    }
    let detail = format!("1000 idempotents in dims 2-6 ({complex} with non-real entries)");
    Ok(if bad == 0 && complex > 0 { pass(detail) } else { fail(format!("{detail}; {bad} failures")) })
}

fn strictness() -> Result<Outcome> {
    const BATCHES: usize = 10;
    const BATCH: usize = 50;
    let mut natural = (0, 0);
    let mut injected = (0, 0);
    let mut missing = Vec::new();
    for batch in 0..BATCHES {
        let c = cfg(dim_of(batch), 42);
        let (mut sub_only, mut super_only) = (0, 0);
        for k in 0..BATCH {
            let mut g = Gen::new(&c, "acceptance/strict", batch * BATCH + k);
            let s = classify(&g.sub_idempotent()?)?;
            sub_only += usize::from(s.is_sub && !s.is_super);
            let t = classify(&g.super_idempotent()?)?;
            super_only += usize::from(t.is_super && !t.is_sub);
        }
        natural.0 += sub_only;
        natural.1 += super_only;
        let mut g = Gen::new(&c, "acceptance/strict/inject", batch);
        if sub_only == 0 {
            let s = classify(&g.strict_sub()?)?;
            if s.is_sub && !s.is_super {
                injected.0 += 1;
                sub_only = 1;
            }
        }
        if super_only == 0 {
            let t = classify(&g.strict_super()?)?;
            if t.is_super && !t.is_sub {
                injected.1 += 1;
                super_only = 1;
            }
        }
        if sub_only == 0 || super_only == 0 {
            missing.push(batch);
        }
    }
    let detail = format!(
        "{BATCHES} batches in dims 2-6: {} sub-only and {} super-only drawn, {}+{} injected",
        natural.0, natural.1, injected.0, injected.1
    );
    Ok(if missing.is_empty() { pass(detail) } else { fail(format!("{detail}; batches without witnesses: {missing:?}")) })
}

fn composition() -> Result<Outcome> {
    let mut bad = 0;
    for trial in 0..500 {
        let mut g = Gen::new(&cfg(dim_of(trial), 42), "acceptance/compose", trial);
        let (n, m) = (g.n(), g.range_incl(1, g.n()));
        let t = g.relation_dims(n, m);
        let inv = t.inverse();
        let left = LinearRelation::identity_on(&t.dom())
            .hat_sum(&LinearRelation::product_space(&Subspace::zero(n), &t.ker()))?;
        let right = LinearRelation::identity_on(&t.ran())
            .hat_sum(&LinearRelation::product_space(&Subspace::zero(m), &t.mul()))?;
        let ok = inv.compose(&t)? == left && t.compose(&inv)? == right;
        bad += usize::from(!ok);
    }
    Ok(if bad == 0 {
        pass("500 relations, T⁻¹T and TT⁻¹ equal their closed forms")
    } else {
        fail(format!("{bad} of 500 compositions differ"))
    })
}

fn angles() -> Result<Outcome> {
    const TOL: f64 = 1e-9;
    let start = Instant::now();
    let (mut bad, mut meeting) = (Vec::new(), 0);
    for trial in 0..200 {
        let mut g = Gen::new(&cfg(dim_of(trial), 42), "acceptance/angles", trial);
        let (s, t) = g.family2();
        let c0 = dixmier_cos(&s, &t, TOL)?;
        let c = friedrichs_cos(&s, &t, TOL)?;
        let meets = !s.intersect(&t)?.is_zero();
        meeting += usize::from(meets);
        if ((c0 - 1.0).abs() < 1e-6) != meets || c >= 1.0 - 1e-9 {
            bad.push(format!("pair {trial}"));
        }
    }
    for trial in 0..200 {
        let mut g = Gen::new(&cfg(dim_of(trial), 42), "acceptance/monotone", trial);
        let (s, w) = g.family2();
        // S∩W ⊆ T ⊆ W
        let t = s.intersect(&w)?.sum(&g.subspace_within(&w))?;
        if friedrichs_cos(&t, &s, TOL)? > friedrichs_cos(&w, &s, TOL)? + 1e-9 {
            bad.push(format!("nested {trial}"));
        }
    }
    let took = start.elapsed();
    let detail = format!("200 pairs ({meeting} intersecting), 200 nested triples, {:.2}s", took.as_secs_f64());
    Ok(if !bad.is_empty() {
        fail(format!("{detail}; failing: {}", bad.join(", ")))
    } else if took >= Duration::from_secs(10) {
        fail(format!("{detail}; over the 10s budget"))
    } else {
        pass(detail)
    })
}

fn extremality() -> Result<Outcome> {
    const INSTANCES: usize = 100;
    const SAMPLES: usize = 100;
    let (mut compared, mut bad) = (0, 0);
    for trial in 0..INSTANCES {
        let mut g = Gen::new(&cfg(dim_of(trial), 42), "acceptance/extremal", trial);
        let (m, n, s) = g.family3();
        let e0 = minimal_idempotent(&m, &n, &s)?;
        for _ in 0..SAMPLES {
            // enlarge the kernel triple, then close it up to an idempotent
            let (m2, n2, s2) = (g.superspace_of(&m), g.superspace_of(&n), g.superspace_of(&s));
            let f = minimal_idempotent(&m2, &n2, &s2)?;
            let t = kernel_triple(&f)?;
            if t.m().contains(&m)? && t.n().contains(&n)? && t.s().contains(&s)? {
                compared += 1;
                bad += usize::from(!e0.leq(&f)?);
            }
        }
        let (x, y, z) = (m, n, s);
        let f0 = maximal_idempotent(&x, &y, &z)?;
        for _ in 0..SAMPLES {
            // shrink the range data, then take the largest idempotent under it
            let (x2, y2, z2) = (g.subspace_within(&x), g.subspace_within(&y), g.subspace_within(&z));
            let e = maximal_idempotent(&x2, &y2, &z2)?;
            let r = range_triple(&e)?;
            if x.contains(r.x())? && y.contains(r.y())? && z.contains(r.z())? {
                compared += 1;
                bad += usize::from(!e.leq(&f0)?);
            }
        }
    }
    let want = 2 * INSTANCES * SAMPLES;
    let detail = format!("{INSTANCES} instances, {compared} of {want} samples in the dominating/dominated class");
    Ok(if bad == 0 && compared == want { pass(detail) } else { fail(format!("{detail}; {bad} containments fail")) })
}

fn format_stability(first_report: Option<String>) -> Result<Outcome> {
    let mut bad = 0;
    for trial in 0..1000 {
        let mut g = Gen::new(&cfg(dim_of(trial), 42), "acceptance/format", trial);
        let doc = match trial % 4 {
            0 => Document::Subspace(g.subspace(g.n())),
            1 => {
                let (n, m) = (g.range_incl(1, 6), g.range_incl(1, 6));
                Document::Relation(g.relation_dims(n, m))
            }
            2 => Document::KernelTriple(g.ic_triple()?),
            _ => Document::RangeTriple(g.ic_triple()?.to_range_triple()),
        };
        let text = serialize_document(&doc);
        let back = parse_document(&text)?;
        bad += usize::from(back != doc || serialize_document(&back) != text);
    }
    let again = run_command(fuzz_args()).stdout;
    let same = first_report.as_deref() == Some(again.as_str());
    let detail = format!("1000 documents, {bad} unstable; repeated fixed-seed report identical: {same}");
    Ok(if bad == 0 && same { pass(detail) } else { fail(detail) })
}

fn main() {
    let mut report = None;
    let mut all = true;
    let mut line = |k: usize, name: &str, o: Result<Outcome>| {
        let o = o.unwrap_or_else(|e| fail(format!("error: {e}")));
        all &= o.ok;
        println!("criterion {k} {name}: {} ({})", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    };
    line(1, "exact identity suite", Ok(exact_suite(&mut report)));
    line(2, "two-sided equivalences", two_sided());
    line(3, "triple round trips", triple_round_trip());
    line(4, "adjoint of idempotents", adjoint_theorem());
    line(5, "strictness witnesses", strictness());
    line(6, "composition closed forms", composition());
    line(7, "angles", angles());
    line(8, "extremality sampling", extremality());
    line(9, "format stability", format_stability(report));
    if !all {
        std::process::exit(1);
    }
}
