mod common;

use std::path::{Path, PathBuf};
use std::process::Command;

use common::*;
use relcalc::cli::run_command;
use relcalc::format::{serialize_document, Document};
use relcalc::idempotent::semi_projection;
use relcalc::{LinearRelation, Subspace};
use serde_json::Value;

struct Dir(tempfile::TempDir);

impl Dir {
    fn new() -> Dir {
        Dir(tempfile::tempdir().unwrap())
    }

    fn put(&self, name: &str, doc: Document) -> PathBuf {
        self.text(name, &serialize_document(&doc))
    }

    fn text(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn sub(&self, name: &str, s: Subspace) -> PathBuf {
        self.put(name, Document::Subspace(s))
    }

    fn rel(&self, name: &str, r: LinearRelation) -> PathBuf {
        self.put(name, Document::Relation(r))
    }
}

fn run(args: &[&dyn AsRef<std::ffi::OsStr>]) -> (i32, Value, String) {
    let mut argv: Vec<std::ffi::OsString> = vec!["relcalc".into()];
    argv.extend(args.iter().map(|a| a.as_ref().to_owned()));
    let out = run_command(argv);
    let json = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out.code, json, out.stderr)
}

fn p(path: &Path) -> &std::ffi::OsStr {
    path.as_os_str()
}

#[test]
fn classify_semi_projection() {
    let d = Dir::new();
    let e = d.rel("e.json", semi_projection(&span(2, &[&[1, 1]]), &coords(2, &[1])).unwrap());
    let (code, out, _) = run(&[&"classify", &p(&e)]);
    assert_eq!(code, 0);
    assert_eq!(out["kind"], "classification");
    for flag in ["sub", "super", "idempotent", "semi_projection", "operator", "projection"] {
        assert_eq!(out[flag], true, "{flag}");
    }
}

#[test]
fn ic_holds_for_transversal_triple() {
    let d = Dir::new();
    let m = d.sub("m.json", coords(3, &[0]));
    let n = d.sub("n.json", coords(3, &[1]));
    let s = d.sub("s.json", coords(3, &[2]));
    let (code, out, _) = run(&[&"ic", &p(&m), &p(&n), &p(&s)]);
    assert_eq!(code, 0);
    assert_eq!(out["summary"], "IC: holds");

    let s = d.sub("bad.json", span(3, &[&[1, 1, 0]]));
    let (code, _, err) = run(&[&"ic", &p(&m), &p(&n), &p(&s)]);
    assert_eq!(code, 4);
    let err: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(err["error"]["code"], "ic_violation");
}

#[test]
fn relation_commands() {
    let d = Dir::new();
    let t = d.rel("t.json", rel(2, 2, &[(&[1, 0], &[0, 1])]));
    let i = d.rel("i.json", LinearRelation::identity(2));
    for cmd in ["adjoint", "inverse", "one-minus", "parts", "classify"] {
        let (code, out, err) = run(&[&cmd, &p(&t)]);
        assert_eq!(code, 0, "{cmd}: {err}");
        assert!(out["kind"].is_string());
    }
    for cmd in ["compose", "hat-sum", "meet", "plus"] {
        let (code, out, err) = run(&[&cmd, &p(&t), &p(&i)]);
        assert_eq!(code, 0, "{cmd}: {err}");
        assert_eq!(out["kind"], "relation");
    }
    let (_, parts, _) = run(&[&"parts", &p(&t)]);
    assert_eq!(parts["mul"]["basis"], serde_json::json!([]));
    let (_, adj, _) = run(&[&"adjoint", &p(&t)]);
    assert_eq!(adj["dim_in"], 2);
}

#[test]
fn build_and_triples() {
    let d = Dir::new();
    let m = d.sub("m.json", coords(3, &[0]));
    let n = d.sub("n.json", coords(3, &[1]));
    let s = d.sub("s.json", coords(3, &[2]));
    let out = d.0.path().join("e.json");
    let (code, _, _) = run(&[&"-o", &p(&out), &"build", &"pmns", &p(&m), &p(&n), &p(&s)]);
    assert_eq!(code, 0);
    let (code, kt, _) = run(&[&"triple", &p(&out)]);
    assert_eq!(code, 0);
    assert_eq!(kt["m"]["basis"], serde_json::json!([["1", "0", "0"]]));
    let (_, rt, _) = run(&[&"triple", &"--range", &p(&out)]);
    assert_eq!(rt["x"]["basis"], serde_json::json!([["1", "0", "0"], ["0", "0", "1"]]));

    let tfile = d.text("kt.json", &serde_json::to_string(&kt).unwrap());
    let (_, conv, _) = run(&[&"convert-triple", &p(&tfile)]);
    assert_eq!(conv, rt);

    for kind in ["pmn", "min", "max"] {
        let args: Vec<&dyn AsRef<std::ffi::OsStr>> = if kind == "pmn" {
            vec![&"build", &kind, &m, &n]
        } else {
            vec![&"build", &kind, &m, &n, &s]
        };
        let (code, out, err) = run(&args);
        assert_eq!(code, 0, "{kind}: {err}");
        assert_eq!(out["kind"], "relation");
    }
}

#[test]
fn angles_output() {
    let d = Dir::new();
    let a = d.sub("a.json", coords(2, &[0]));
    let b = d.sub("b.json", span(2, &[&[1, 1]]));
    let (code, out, _) = run(&[&"angles", &p(&a), &p(&b)]);
    assert_eq!(code, 0);
    assert_eq!(out["numeric"], "float");
    assert!((out["dixmier_cos"].as_f64().unwrap() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
}

#[test]
fn exit_codes() {
    let d = Dir::new();
    let junk = d.text("junk.json", "{ not json");
    let (code, _, err) = run(&[&"classify", &p(&junk)]);
    assert_eq!(code, 2);
    let err: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(err["error"]["code"], "parse");
    assert!(err["error"]["context"].as_str().unwrap().contains("junk.json"));

    let a = d.rel("a.json", LinearRelation::identity(2));
    let b = d.rel("b.json", LinearRelation::identity(3));
    assert_eq!(run(&[&"compose", &p(&a), &p(&b)]).0, 3);

    let rect = d.rel("r.json", rel(2, 3, &[(&[1, 0], &[1, 0, 0])]));
    assert_eq!(run(&[&"one-minus", &p(&rect)]).0, 4);
    let sub = d.rel("sub.json", relcalc::idempotent::r_form(&coords(2, &[0]), &coords(2, &[1]), &span(2, &[&[1, 1]])).unwrap());
    assert_eq!(run(&[&"triple", &p(&sub)]).0, 4);

    let subspace = d.sub("s.json", coords(2, &[0]));
    assert_eq!(run(&[&"classify", &p(&subspace)]).0, 2);
    assert_eq!(run(&[&"frobnicate"]).0, 2);
    assert_eq!(run(&[&"fuzz", &"--dim", &"1"]).0, 3);
    assert_eq!(run(&[&"--help"]).0, 0);
}

#[test]
fn fuzz_reports() {
    let args: [&dyn AsRef<std::ffi::OsStr>; 8] =
        [&"fuzz", &"--dim", &"3", &"--trials", &"4", &"--seed", &"9", &"--check=form_adjoints"];
    let a = run_command(std::iter::once("relcalc").chain(args.iter().map(|a| a.as_ref().to_str().unwrap())));
    let b = run_command(std::iter::once("relcalc").chain(args.iter().map(|a| a.as_ref().to_str().unwrap())));
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let report: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["checks"][0]["name"], "form_adjoints");

    let (code, out, _) = run(&[&"fuzz", &"--trials", &"10", &"--check", &"broken_sub_criterion"]);
    assert_eq!(code, 5);
    assert_eq!(out["pass"], false);
    assert!(out["checks"][0]["counterexample"]["inputs"]["E"].is_object());

    let (code, list, _) = run(&[&"fuzz", &"--list"]);
    assert_eq!(code, 0);
    assert!(list["checks"].as_array().unwrap().len() > 40);
    assert_eq!(run(&[&"fuzz", &"--check", &"nope"]).0, 2);
}

#[test]
fn binary_reads_seed_from_environment() {
    let bin = env!("CARGO_BIN_EXE_relcalc");
    let go = |seed: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(bin);
        c.args(["fuzz", "--dim", "2", "--trials", "3", "--check", "lattice_duality"]);
        if let Some(f) = flag {
            c.args(["--seed", f]);
        }
        match seed {
            Some(s) => c.env("RELCALC_SEED", s),
            None => c.env_remove("RELCALC_SEED"),
        };
        let out = c.output().unwrap();
        assert!(out.status.success());
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        v["config"]["seed"].as_u64().unwrap()
    };
    assert_eq!(go(None, None), 0);
    assert_eq!(go(Some("77"), None), 77);
    assert_eq!(go(Some("77"), Some("5")), 5);
}

#[test]
fn output_file() {
    let d = Dir::new();
    let t = d.rel("t.json", LinearRelation::identity(2));
    let out = d.0.path().join("out.json");
    let r = run_command(["relcalc".as_ref(), "-o".as_ref(), out.as_os_str(), "inverse".as_ref(), t.as_os_str()]);
    assert_eq!((r.code, r.stdout.as_str()), (0, ""));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("\"relation\""));
    let missing = d.0.path().join("no/such/dir/out.json");
    let r = run_command(["relcalc".as_ref(), "-o".as_ref(), missing.as_os_str(), "inverse".as_ref(), t.as_os_str()]);
    assert_eq!(r.code, 2);
}
