//! C ABI over `relcalc`.
//!
//! Subspaces and relations cross the boundary as opaque handles created
//! from and rendered to the JSON document format. Every fallible function
//! returns an [`RcStatus`]; on failure the structured error record is kept
//! per thread and can be fetched with [`rc_last_error`].
//!
//! Ownership: handles from `*_from_json` and from operations are freed with
//! [`rc_subspace_free`] / [`rc_relation_free`]; strings handed out are freed
//! with [`rc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use relcalc::angles::angles;
use relcalc::cli::error_record;
use relcalc::format::{parse_document, serialize_document, Document};
use relcalc::idempotent::{
    build_pmns, classify, maximal_idempotent, minimal_idempotent, semi_projection,
};
use relcalc::verify::{verify_suite, GenConfig, Selection};
use relcalc::{Error, LinearRelation, Subspace};

/// Mirrors the command-line exit codes; negative values are ABI misuse.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcStatus {
    Ok = 0,
    ParseError = 2,
    DimensionError = 3,
    PreconditionFailed = 4,
    InvariantBreach = 5,
    NullPointer = -1,
    InvalidUtf8 = -2,
    Panic = -3,
}

/// Which part of a relation to extract.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcPart {
    Domain = 0,
    Range = 1,
    Kernel = 2,
    Multivalued = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RcClassification {
    pub operator: bool,
    pub sub: bool,
    pub super_: bool,
    pub idempotent: bool,
    pub semi_projection: bool,
    pub projection: bool,
}

/// Opaque subspace handle.
pub struct RcSubspace(Subspace);

/// Opaque relation handle.
pub struct RcRelation(LinearRelation);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> RcStatus {
    match e.exit_code() {
        2 => RcStatus::ParseError,
        3 => RcStatus::DimensionError,
        4 => RcStatus::PreconditionFailed,
        _ => RcStatus::InvariantBreach,
    }
}

enum Fail {
    Lib(Error),
    Abi(RcStatus, &'static str),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> RcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RcStatus::Ok,
        Ok(Err(Fail::Lib(e))) => {
            set_last_error(error_record(&e, None).to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Abi(status, msg))) => {
            set_last_error(
                serde_json::json!({"error": {"code": "abi", "message": msg, "context": ""}}).to_string(),
            );
            status
        }
        Err(_) => {
            set_last_error(
                serde_json::json!({"error": {"code": "panic", "message": "panic inside relcalc", "context": ""}})
                    .to_string(),
            );
            RcStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Abi(RcStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Abi(RcStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or(Fail::Abi(RcStatus::NullPointer, "null handle argument"))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Abi(RcStatus::NullPointer, "null output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Abi(RcStatus::NullPointer, "null output pointer"));
    }
    *out = CString::new(s).expect("JSON has no NUL bytes").into_raw();
    Ok(())
}

fn wrong_kind(want: &'static str) -> Fail {
    Fail::Lib(Error::Parse {
        context: "kind".into(),
        message: format!("expected a {want} document"),
    })
}

/// The error record of the last failed call on this thread, or null. The
/// pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn rc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_from_json(json: *const c_char, out: *mut *mut RcSubspace) -> RcStatus {
    guard(|| match parse_document(str_arg(json)?)? {
        Document::Subspace(s) => write_out(out, RcSubspace(s)),
        _ => Err(wrong_kind("subspace")),
    })
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_to_json(s: *const RcSubspace, out: *mut *mut c_char) -> RcStatus {
    guard(|| {
        let s = handle(s)?;
        write_string(out, serialize_document(&Document::Subspace(s.0.clone())))
    })
}

/// Dimension of the subspace, or `usize::MAX` for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_dim(s: *const RcSubspace) -> usize {
    s.as_ref().map_or(usize::MAX, |s| s.0.dim())
}

/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_ambient(s: *const RcSubspace) -> usize {
    s.as_ref().map_or(usize::MAX, |s| s.0.ambient())
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_sum(
    a: *const RcSubspace,
    b: *const RcSubspace,
    out: *mut *mut RcSubspace,
) -> RcStatus {
    guard(|| write_out(out, RcSubspace(handle(a)?.0.sum(&handle(b)?.0)?)))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_intersect(
    a: *const RcSubspace,
    b: *const RcSubspace,
    out: *mut *mut RcSubspace,
) -> RcStatus {
    guard(|| write_out(out, RcSubspace(handle(a)?.0.intersect(&handle(b)?.0)?)))
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_ortho_complement(a: *const RcSubspace, out: *mut *mut RcSubspace) -> RcStatus {
    guard(|| write_out(out, RcSubspace(handle(a)?.0.ortho_complement())))
}

/// # Safety
/// `a`, `b` must be live handles; `equal` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_equal(a: *const RcSubspace, b: *const RcSubspace, equal: *mut bool) -> RcStatus {
    guard(|| {
        let r = handle(a)?.0.equals(&handle(b)?.0)?;
        if equal.is_null() {
            return Err(Fail::Abi(RcStatus::NullPointer, "null output pointer"));
        }
        *equal = r;
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rc_subspace_free(s: *mut RcSubspace) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_relation_from_json(json: *const c_char, out: *mut *mut RcRelation) -> RcStatus {
    guard(|| match parse_document(str_arg(json)?)? {
        Document::Relation(r) => write_out(out, RcRelation(r)),
        _ => Err(wrong_kind("relation")),
    })
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_relation_to_json(r: *const RcRelation, out: *mut *mut c_char) -> RcStatus {
    guard(|| {
        let r = handle(r)?;
        write_string(out, serialize_document(&Document::Relation(r.0.clone())))
    })
}

/// # Safety
/// `r` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rc_relation_free(r: *mut RcRelation) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_relation_part(r: *const RcRelation, part: RcPart, out: *mut *mut RcSubspace) -> RcStatus {
    guard(|| {
        let r = &handle(r)?.0;
        let s = match part {
            RcPart::Domain => r.dom(),
            RcPart::Range => r.ran(),
            RcPart::Kernel => r.ker(),
            RcPart::Multivalued => r.mul(),
        };
        write_out(out, RcSubspace(s))
    })
}

/// The product `ST` (first `t`, then `s`).
///
/// # Safety
/// `s`, `t` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_relation_compose(
    s: *const RcRelation,
    t: *const RcRelation,
    out: *mut *mut RcRelation,
) -> RcStatus {
    guard(|| write_out(out, RcRelation(handle(s)?.0.compose(&handle(t)?.0)?)))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_relation_hat_sum(
    a: *const RcRelation,
    b: *const RcRelation,
    out: *mut *mut RcRelation,
) -> RcStatus {
    guard(|| write_out(out, RcRelation(handle(a)?.0.hat_sum(&handle(b)?.0)?)))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_relation_meet(
    a: *const RcRelation,
    b: *const RcRelation,
    out: *mut *mut RcRelation,
) -> RcStatus {
    guard(|| write_out(out, RcRelation(handle(a)?.0.meet(&handle(b)?.0)?)))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_relation_plus(
    a: *const RcRelation,
    b: *const RcRelation,
    out: *mut *mut RcRelation,
) -> RcStatus {
    guard(|| write_out(out, RcRelation(handle(a)?.0.plus(&handle(b)?.0)?)))
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_relation_adjoint(r: *const RcRelation, out: *mut *mut RcRelation) -> RcStatus {
    guard(|| write_out(out, RcRelation(handle(r)?.0.adjoint())))
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_relation_inverse(r: *const RcRelation, out: *mut *mut RcRelation) -> RcStatus {
    guard(|| write_out(out, RcRelation(handle(r)?.0.inverse())))
}

/// `I − T`.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_relation_one_minus(r: *const RcRelation, out: *mut *mut RcRelation) -> RcStatus {
    guard(|| write_out(out, RcRelation(handle(r)?.0.one_minus()?)))
}

/// # Safety
/// `a`, `b` must be live handles; `equal` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_relation_equal(a: *const RcRelation, b: *const RcRelation, equal: *mut bool) -> RcStatus {
    guard(|| {
        let r = handle(a)?.0.rel_equals(&handle(b)?.0)?;
        if equal.is_null() {
            return Err(Fail::Abi(RcStatus::NullPointer, "null output pointer"));
        }
        *equal = r;
        Ok(())
    })
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_relation_classify(r: *const RcRelation, out: *mut RcClassification) -> RcStatus {
    guard(|| {
        let c = classify(&handle(r)?.0)?;
        if out.is_null() {
            return Err(Fail::Abi(RcStatus::NullPointer, "null output pointer"));
        }
        *out = RcClassification {
            operator: c.is_operator,
            sub: c.is_sub,
            super_: c.is_super,
            idempotent: c.is_idempotent,
            semi_projection: c.is_semi_projection,
            projection: c.is_projection,
        };
        Ok(())
    })
}

/// `P_{M,N}`.
///
/// # Safety
/// `m`, `n` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_semi_projection(
    m: *const RcSubspace,
    n: *const RcSubspace,
    out: *mut *mut RcRelation,
) -> RcStatus {
    guard(|| write_out(out, RcRelation(semi_projection(&handle(m)?.0, &handle(n)?.0)?)))
}

/// `P_{M,N,S}`; fails with `PreconditionFailed` when `(M+N)∩S ≠ M∩N`.
///
/// # Safety
/// `m`, `n`, `s` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_build_pmns(
    m: *const RcSubspace,
    n: *const RcSubspace,
    s: *const RcSubspace,
    out: *mut *mut RcRelation,
) -> RcStatus {
    guard(|| write_out(out, RcRelation(build_pmns(&handle(m)?.0, &handle(n)?.0, &handle(s)?.0)?)))
}

/// # Safety
/// `m`, `n`, `s` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_minimal_idempotent(
    m: *const RcSubspace,
    n: *const RcSubspace,
    s: *const RcSubspace,
    out: *mut *mut RcRelation,
) -> RcStatus {
    guard(|| {
        let e = minimal_idempotent(&handle(m)?.0, &handle(n)?.0, &handle(s)?.0)?;
        write_out(out, RcRelation(e))
    })
}

/// # Safety
/// `x`, `y`, `z` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_maximal_idempotent(
    x: *const RcSubspace,
    y: *const RcSubspace,
    z: *const RcSubspace,
    out: *mut *mut RcRelation,
) -> RcStatus {
    guard(|| {
        let f = maximal_idempotent(&handle(x)?.0, &handle(y)?.0, &handle(z)?.0)?;
        write_out(out, RcRelation(f))
    })
}

/// Dixmier and Friedrichs cosines.
///
/// # Safety
/// `s`, `t` must be live handles; `dixmier`, `friedrichs` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_angles(
    s: *const RcSubspace,
    t: *const RcSubspace,
    tol: f64,
    dixmier: *mut f64,
    friedrichs: *mut f64,
) -> RcStatus {
    guard(|| {
        let a = angles(&handle(s)?.0, &handle(t)?.0, tol)?;
        if dixmier.is_null() || friedrichs.is_null() {
            return Err(Fail::Abi(RcStatus::NullPointer, "null output pointer"));
        }
        *dixmier = a.dixmier;
        *friedrichs = a.friedrichs;
        Ok(())
    })
}

/// Runs the default verification suite and writes the report document.
/// `passed` receives the overall verdict.
///
/// # Safety
/// `out` and `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_verify(
    dim: usize,
    trials: usize,
    seed: u64,
    out: *mut *mut c_char,
    passed: *mut bool,
) -> RcStatus {
    guard(|| {
        let cfg = GenConfig {
            ambient_dim: dim,
            trials,
            seed,
            ..GenConfig::default()
        };
        let report = verify_suite(&cfg, Selection::Default)?;
        if passed.is_null() {
            return Err(Fail::Abi(RcStatus::NullPointer, "null output pointer"));
        }
        *passed = report.pass;
        write_string(out, serialize_document(&Document::Report(report)))
    })
}
