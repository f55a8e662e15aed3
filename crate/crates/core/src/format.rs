//! JSON document format.
//!
//! Every document is a single object carrying `"kind"` and `"version"`
//! next to its kind-specific fields. Scalars are always strings (see
//! [`GaussianRational`]'s text form) so nothing passes through floats.
//!
//! ```json
//! {"kind": "subspace", "version": "1", "ambient": 2, "basis": [["1", "1/2i"]]}
//! {"kind": "relation", "version": "1", "dim_in": 2, "dim_out": 2,
//!  "generators": [[["1", "0"], ["0", "1"]]]}
//! {"kind": "triple", "version": "1", "ambient": 3,
//!  "m": {"ambient": 3, "basis": [...]}, "n": {...}, "s": {...}}
//! ```
//!
//! Values are canonicalized on load, and serialization writes canonical
//! bases, so `serialize(parse(text))` is stable.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::idempotent::{IdempotentTriple, RangeTriple};
use crate::matrix::Vector;
use crate::relation::LinearRelation;
use crate::scalar::GaussianRational;
use crate::subspace::Subspace;
use crate::verify::VerificationReport;

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq)]
pub enum Document {
    Subspace(Subspace),
    Relation(LinearRelation),
    KernelTriple(IdempotentTriple),
    RangeTriple(RangeTriple),
    Report(VerificationReport),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Subspace(_) => "subspace",
            Document::Relation(_) => "relation",
            Document::KernelTriple(_) | Document::RangeTriple(_) => "triple",
            Document::Report(_) => "report",
        }
    }
}

fn perr(context: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        context: context.into(),
        message: message.into(),
    }
}

fn vector_json(v: &[GaussianRational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, ctx: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| perr(ctx, format!("missing field {key:?}")))
}

fn join(ctx: &str, key: impl std::fmt::Display) -> String {
    if ctx.is_empty() {
        key.to_string()
    } else {
        format!("{ctx}.{key}")
    }
}

fn as_count(v: &Value, ctx: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| perr(ctx, "expected a non-negative integer"))
}

fn as_object<'a>(v: &'a Value, ctx: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| perr(ctx, "expected an object"))
}

fn as_array<'a>(v: &'a Value, ctx: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| perr(ctx, "expected an array"))
}

pub fn parse_scalar(v: &Value, ctx: &str) -> Result<GaussianRational> {
    match v {
        Value::String(s) => s.parse().map_err(|e: Error| e.with_context(ctx)),
        _ => Err(perr(ctx, "scalars must be strings such as \"1/2-3/4i\"")),
    }
}

pub fn parse_vector(v: &Value, len: usize, ctx: &str) -> Result<Vector> {
    let items = as_array(v, ctx)?;
    if items.len() != len {
        return Err(Error::Dimension(format!(
            "{ctx}: vector of length {} where {len} was expected",
            items.len()
        )));
    }
    items
        .iter()
        .enumerate()
        .map(|(k, x)| parse_scalar(x, &join(ctx, k)))
        .collect()
}

pub fn subspace_body(s: &Subspace) -> Value {
    json!({
        "ambient": s.ambient(),
        "basis": s.basis_vectors().iter().map(|v| vector_json(v)).collect::<Vec<_>>(),
    })
}

pub fn parse_subspace_body(v: &Value, ctx: &str) -> Result<Subspace> {
    let obj = as_object(v, ctx)?;
    let ambient = as_count(field(obj, "ambient", ctx)?, &join(ctx, "ambient"))?;
    let bctx = join(ctx, "basis");
    let rows = as_array(field(obj, "basis", ctx)?, &bctx)?
        .iter()
        .enumerate()
        .map(|(k, r)| parse_vector(r, ambient, &join(&bctx, k)))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(&rows, ambient)
}

pub fn relation_body(r: &LinearRelation) -> Value {
    let gens: Vec<Value> = r
        .generators()
        .iter()
        .map(|(x, y)| json!([vector_json(x), vector_json(y)]))
        .collect();
    json!({
        "dim_in": r.dim_in(),
        "dim_out": r.dim_out(),
        "generators": gens,
    })
}

pub fn parse_relation_body(v: &Value, ctx: &str) -> Result<LinearRelation> {
    let obj = as_object(v, ctx)?;
    let n = as_count(field(obj, "dim_in", ctx)?, &join(ctx, "dim_in"))?;
    let m = as_count(field(obj, "dim_out", ctx)?, &join(ctx, "dim_out"))?;
    let gctx = join(ctx, "generators");
    let pairs = as_array(field(obj, "generators", ctx)?, &gctx)?
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let pctx = join(&gctx, k);
            let pair = as_array(p, &pctx)?;
            if pair.len() != 2 {
                return Err(perr(&pctx, "a generator is a pair [input, output]"));
            }
            Ok((
                parse_vector(&pair[0], n, &join(&pctx, 0))?,
                parse_vector(&pair[1], m, &join(&pctx, 1))?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    LinearRelation::from_generators(&pairs, n, m)
}

fn envelope(kind: &str, body: Value) -> Value {
    let mut obj = Map::new();
    obj.insert("kind".into(), Value::String(kind.into()));
    obj.insert("version".into(), Value::String(FORMAT_VERSION.into()));
    if let Value::Object(fields) = body {
        obj.extend(fields);
    }
    Value::Object(obj)
}

pub fn to_value(doc: &Document) -> Value {
    match doc {
        Document::Subspace(s) => envelope("subspace", subspace_body(s)),
        Document::Relation(r) => envelope("relation", relation_body(r)),
        Document::KernelTriple(t) => envelope(
            "triple",
            json!({
                "ambient": t.ambient(),
                "m": subspace_body(t.m()),
                "n": subspace_body(t.n()),
                "s": subspace_body(t.s()),
            }),
        ),
        Document::RangeTriple(t) => envelope(
            "triple",
            json!({
                "ambient": t.ambient(),
                "x": subspace_body(t.x()),
                "y": subspace_body(t.y()),
                "z": subspace_body(t.z()),
            }),
        ),
        Document::Report(r) => envelope(
            "report",
            serde_json::to_value(r).expect("reports serialize to JSON"),
        ),
    }
}

pub fn serialize_document(doc: &Document) -> String {
    let mut text = serde_json::to_string_pretty(&to_value(doc)).expect("values serialize");
    text.push('\n');
    text
}

fn parse_triple(obj: &Map<String, Value>) -> Result<Document> {
    let ambient = as_count(field(obj, "ambient", "")?, "ambient")?;
    let get = |k: &str| -> Result<Subspace> {
        let s = parse_subspace_body(field(obj, k, "")?, k)?;
        if s.ambient() != ambient {
            return Err(Error::Dimension(format!(
                "{k}: subspace of F^{} in a triple over F^{ambient}",
                s.ambient()
            )));
        }
        Ok(s)
    };
    if obj.contains_key("m") {
        Ok(Document::KernelTriple(IdempotentTriple::new(
            get("m")?,
            get("n")?,
            get("s")?,
        )?))
    } else if obj.contains_key("x") {
        Ok(Document::RangeTriple(RangeTriple::new(
            get("x")?,
            get("y")?,
            get("z")?,
        )?))
    } else {
        Err(perr("", "a triple needs keys m/n/s or x/y/z"))
    }
}

pub fn from_value(v: &Value) -> Result<Document> {
    let obj = as_object(v, "")?;
    let kind = field(obj, "kind", "")?
        .as_str()
        .ok_or_else(|| perr("kind", "expected a string"))?;
    let version = field(obj, "version", "")?
        .as_str()
        .ok_or_else(|| perr("version", "expected a string"))?;
    if version != FORMAT_VERSION {
        return Err(perr("version", format!("unsupported version {version:?}")));
    }
    match kind {
        "subspace" => Ok(Document::Subspace(parse_subspace_body(v, "")?)),
        "relation" => Ok(Document::Relation(parse_relation_body(v, "")?)),
        "triple" => parse_triple(obj),
        "report" => {
            let mut body = obj.clone();
            body.remove("kind");
            body.remove("version");
            serde_json::from_value(Value::Object(body))
                .map(Document::Report)
                .map_err(|e| perr("", format!("malformed report: {e}")))
        }
        other => Err(perr("kind", format!("unknown kind {other:?}"))),
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    let v: Value = serde_json::from_str(text).map_err(|e| {
        perr(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    from_value(&v)
}
