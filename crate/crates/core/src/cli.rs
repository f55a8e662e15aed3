//! The `relcalc` command line.
//!
//! [`run_command`] does all the work and returns what should be written and
//! the exit code, so the binary is a thin wrapper and tests can drive the
//! CLI in-process.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::angles::{angles, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::format::{
    parse_document, serialize_document, subspace_body, Document, FORMAT_VERSION,
};
use crate::idempotent::{
    build_pmns, classify, ic_holds, kernel_triple, maximal_idempotent, minimal_idempotent,
    range_triple, semi_projection, Witness,
};
use crate::relation::LinearRelation;
use crate::subspace::Subspace;
use crate::verify::{verify_suite, GenConfig, Selection};

#[derive(Parser, Debug)]
#[command(name = "relcalc", version, about = "Exact calculus of linear relations on F^n, F = Q(i)")]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Operator / sub- / super-idempotent / idempotent / semi-projection flags.
    Classify { relation: PathBuf },
    /// Domain, range, kernel and multivalued part.
    Parts { relation: PathBuf },
    /// The product ST: first T, then S.
    Compose { s: PathBuf, t: PathBuf },
    Adjoint { relation: PathBuf },
    Inverse { relation: PathBuf },
    /// I − T.
    OneMinus { relation: PathBuf },
    /// Sum of graphs.
    HatSum { a: PathBuf, b: PathBuf },
    /// Intersection of graphs.
    Meet { a: PathBuf, b: PathBuf },
    /// Pointwise sum.
    Plus { a: PathBuf, b: PathBuf },
    /// Build a semi-projection or an idempotent from subspaces.
    #[command(subcommand)]
    Build(Build),
    /// Kernel triple (M, N, S) of an idempotent, or with --range its range
    /// triple (X, Y, Z).
    Triple {
        relation: PathBuf,
        #[arg(long)]
        range: bool,
    },
    /// Kernel triple to range triple and back.
    ConvertTriple { triple: PathBuf },
    /// Test (M + N) ∩ S = M ∩ N.
    Ic { m: PathBuf, n: PathBuf, s: PathBuf },
    /// Dixmier and Friedrichs cosines.
    Angles {
        s: PathBuf,
        t: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Run the randomized identity checks.
    Fuzz {
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, env = "RELCALC_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = 5)]
        max_entry: i64,
        #[arg(long)]
        real_only: bool,
        #[arg(long, default_value_t = 100)]
        extremal_samples: usize,
        /// Run only these checks (repeatable); the default suite otherwise.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// List check names and statements instead of running.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Build {
    /// P_{M,N} = I_M +̂ (N × {0}).
    Pmn { m: PathBuf, n: PathBuf },
    /// P_{M,N,S} = P_{M,N} +̂ ({0} × S); requires (M + N) ∩ S = M ∩ N.
    Pmns { m: PathBuf, n: PathBuf, s: PathBuf },
    /// Least idempotent with M ⊆ ker(I−E), N ⊆ ker E, S ⊆ mul E.
    Min { m: PathBuf, n: PathBuf, s: PathBuf },
    /// Greatest idempotent with ran F ⊆ X, ran(I−F) ⊆ Y, dom F ⊆ Z.
    Max { x: PathBuf, y: PathBuf, z: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Structured error record written to stderr.
pub fn error_record(e: &Error, file: Option<&Path>) -> Value {
    let inner = match e {
        Error::Parse { context, .. } => context.clone(),
        _ => String::new(),
    };
    let context = match (file, inner.is_empty()) {
        (Some(f), true) => f.display().to_string(),
        (Some(f), false) => format!("{}: {inner}", f.display()),
        (None, _) => inner,
    };
    json!({"error": {"code": e.code(), "message": e.to_string(), "context": context}})
}

struct Failure {
    error: Error,
    file: Option<PathBuf>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, file: None }
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn load(path: &Path) -> Run<Document> {
    let at = |error: Error| Failure {
        error,
        file: Some(path.to_path_buf()),
    };
    let text = std::fs::read_to_string(path).map_err(|e| {
        at(Error::Parse {
            context: String::new(),
            message: format!("cannot read file: {e}"),
        })
    })?;
    parse_document(&text).map_err(at)
}

fn wrong_kind(path: &Path, want: &str, got: &Document) -> Failure {
    Failure {
        error: Error::Parse {
            context: "kind".into(),
            message: format!("expected a {want} document, found {}", got.kind()),
        },
        file: Some(path.to_path_buf()),
    }
}

fn load_relation(path: &Path) -> Run<LinearRelation> {
    match load(path)? {
        Document::Relation(r) => Ok(r),
        other => Err(wrong_kind(path, "relation", &other)),
    }
}

fn load_subspace(path: &Path) -> Run<Subspace> {
    match load(path)? {
        Document::Subspace(s) => Ok(s),
        other => Err(wrong_kind(path, "subspace", &other)),
    }
}

fn envelope(kind: &str, fields: Value) -> Value {
    let mut obj = Map::new();
    obj.insert("kind".into(), kind.into());
    obj.insert("version".into(), FORMAT_VERSION.into());
    if let Value::Object(f) = fields {
        obj.extend(f);
    }
    Value::Object(obj)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn witness_json(w: &Option<Witness>) -> Value {
    match w {
        None => Value::Null,
        Some((x, y)) => {
            let strs = |v: &Vec<_>| v.iter().map(|z: &crate::GaussianRational| z.to_string()).collect::<Vec<_>>();
            json!([strs(x), strs(y)])
        }
    }
}

fn relation_out(r: LinearRelation) -> String {
    serialize_document(&Document::Relation(r))
}

fn binary(a: &Path, b: &Path, op: fn(&LinearRelation, &LinearRelation) -> Result<LinearRelation>) -> Run<String> {
    let (a, b) = (load_relation(a)?, load_relation(b)?);
    Ok(relation_out(op(&a, &b)?))
}

/// Output text and whether it reports a failure (a failing fuzz report).
fn execute(cmd: Command) -> Run<(String, bool)> {
    let ok = |s: String| Ok((s, false));
    match cmd {
        Command::Classify { relation } => {
            let c = classify(&load_relation(&relation)?)?;
            ok(pretty(&envelope(
                "classification",
                json!({
                    "operator": c.is_operator,
                    "sub": c.is_sub,
                    "super": c.is_super,
                    "idempotent": c.is_idempotent,
                    "semi_projection": c.is_semi_projection,
                    "projection": c.is_projection,
                    "witnesses": {
                        "not_sub": witness_json(&c.not_sub),
                        "not_super": witness_json(&c.not_super),
                        "not_semi_projection": witness_json(&c.not_semi_projection),
                    },
                }),
            )))
        }
        Command::Parts { relation } => {
            let p = load_relation(&relation)?.parts();
            ok(pretty(&envelope(
                "parts",
                json!({
                    "dom": subspace_body(&p.dom),
                    "ran": subspace_body(&p.ran),
                    "ker": subspace_body(&p.ker),
                    "mul": subspace_body(&p.mul),
                }),
            )))
        }
        Command::Compose { s, t } => binary(&s, &t, LinearRelation::compose).map(|s| (s, false)),
        Command::Adjoint { relation } => ok(relation_out(load_relation(&relation)?.adjoint())),
        Command::Inverse { relation } => ok(relation_out(load_relation(&relation)?.inverse())),
        Command::OneMinus { relation } => ok(relation_out(load_relation(&relation)?.one_minus()?)),
        Command::HatSum { a, b } => binary(&a, &b, LinearRelation::hat_sum).map(|s| (s, false)),
        Command::Meet { a, b } => binary(&a, &b, LinearRelation::meet).map(|s| (s, false)),
        Command::Plus { a, b } => binary(&a, &b, LinearRelation::plus).map(|s| (s, false)),
        Command::Build(b) => {
            let r = match b {
                Build::Pmn { m, n } => semi_projection(&load_subspace(&m)?, &load_subspace(&n)?)?,
                Build::Pmns { m, n, s } => {
                    build_pmns(&load_subspace(&m)?, &load_subspace(&n)?, &load_subspace(&s)?)?
                }
                Build::Min { m, n, s } => {
                    minimal_idempotent(&load_subspace(&m)?, &load_subspace(&n)?, &load_subspace(&s)?)?
                }
                Build::Max { x, y, z } => {
                    maximal_idempotent(&load_subspace(&x)?, &load_subspace(&y)?, &load_subspace(&z)?)?
                }
            };
            ok(relation_out(r))
        }
        Command::Triple { relation, range } => {
            let e = load_relation(&relation)?;
            e.require_square()?;
            let doc = if range {
                Document::RangeTriple(range_triple(&e)?)
            } else {
                Document::KernelTriple(kernel_triple(&e)?)
            };
            ok(serialize_document(&doc))
        }
        Command::ConvertTriple { triple } => {
            let doc = match load(&triple)? {
                Document::KernelTriple(t) => Document::RangeTriple(t.to_range_triple()),
                Document::RangeTriple(t) => Document::KernelTriple(t.to_kernel_triple()),
                other => return Err(wrong_kind(&triple, "triple", &other)),
            };
            ok(serialize_document(&doc))
        }
        Command::Ic { m, n, s } => {
            let (m, n, s) = (load_subspace(&m)?, load_subspace(&n)?, load_subspace(&s)?);
            if !ic_holds(&m, &n, &s)? {
                return Err(Error::IcViolation {
                    lhs: m.sum(&n)?.intersect(&s)?.to_string(),
                    rhs: m.intersect(&n)?.to_string(),
                }
                .into());
            }
            ok(pretty(&envelope(
                "ic",
                json!({
                    "holds": true,
                    "summary": "IC: holds",
                    "intersection": subspace_body(&m.intersect(&n)?),
                }),
            )))
        }
        Command::Angles { s, t, tol } => {
            let (s, t) = (load_subspace(&s)?, load_subspace(&t)?);
            let a = angles(&s, &t, tol)?;
            ok(pretty(&envelope(
                "angles",
                json!({
                    "numeric": "float",
                    "tolerance": tol,
                    "dixmier_cos": a.dixmier,
                    "friedrichs_cos": a.friedrichs,
                    "intersection_dim": a.intersection_dim,
                }),
            )))
        }
        Command::Fuzz {
            dim,
            trials,
            seed,
            tol,
            max_entry,
            real_only,
            extremal_samples,
            checks,
            list,
        } => {
            if list {
                let items: Vec<Value> = crate::verify::CHECKS
                    .iter()
                    .map(|c| json!({"name": c.name, "statement": c.statement, "default": c.default}))
                    .collect();
                return ok(pretty(&envelope("check_list", json!({"checks": items}))));
            }
            let cfg = GenConfig {
                ambient_dim: dim,
                trials,
                seed,
                max_entry,
                complex_enabled: !real_only,
                extremal_samples,
                angle_tol: tol,
            };
            let names: Vec<&str> = checks.iter().map(String::as_str).collect();
            let selection = if names.is_empty() {
                Selection::Default
            } else {
                Selection::Named(&names)
            };
            let report = verify_suite(&cfg, selection)?;
            let failed = !report.pass;
            Ok((serialize_document(&Document::Report(report)), failed))
        }
    }
}

/// Exit code of a completed fuzz run that found counterexamples.
pub const EXIT_CHECK_FAILED: i32 = 5;

pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandOutput { code, stdout: text, stderr: String::new() }
            } else {
                CommandOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let output = cli.output.clone();
    let (text, failed) = match execute(cli.command) {
        Ok(r) => r,
        Err(f) => {
            return CommandOutput {
                code: f.error.exit_code(),
                stdout: String::new(),
                stderr: pretty(&error_record(&f.error, f.file.as_deref())),
            };
        }
    };
    let code = if failed { EXIT_CHECK_FAILED } else { 0 };
    match output {
        None => CommandOutput { code, stdout: text, stderr: String::new() },
        Some(path) => match std::fs::write(&path, &text) {
            Ok(()) => CommandOutput { code, stdout: String::new(), stderr: String::new() },
            Err(e) => {
                let err = Error::Parse {
                    context: String::new(),
                    message: format!("cannot write output: {e}"),
                };
                CommandOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: pretty(&error_record(&err, Some(&path))),
                }
            }
        },
    }
}
