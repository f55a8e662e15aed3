use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error{}: {message}", fmt_context(.context))]
    Parse { context: String, message: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("relation is not square ({dim_in} -> {dim_out})")]
    NonSquare { dim_in: usize, dim_out: usize },

    #[error("idempotency condition fails: (M+N)∩S = {lhs} but M∩N = {rhs}")]
    IcViolation { lhs: String, rhs: String },

    #[error("range-triple condition fails: X∩Y+Z = {lhs} but X+Y = {rhs}")]
    RangeTripleViolation { lhs: String, rhs: String },

    #[error("relation is not idempotent: {0}")]
    NotIdempotent(String),

    #[error("internal invariant breached: {0}")]
    Invariant(String),
}

fn fmt_context(ctx: &str) -> String {
    if ctx.is_empty() {
        String::new()
    } else {
        format!(" at {ctx}")
    }
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::Dimension(_) => 3,
            Error::DivisionByZero
            | Error::NonSquare { .. }
            | Error::IcViolation { .. }
            | Error::RangeTripleViolation { .. }
            | Error::NotIdempotent(_) => 4,
            Error::Invariant(_) => 5,
        }
    }

    /// Stable short name used in structured error records.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::Parse { .. } => "parse",
            Error::Dimension(_) => "dimension",
            Error::NonSquare { .. } => "non_square",
            Error::IcViolation { .. } => "ic_violation",
            Error::RangeTripleViolation { .. } => "range_triple_violation",
            Error::NotIdempotent(_) => "not_idempotent",
            Error::Invariant(_) => "invariant",
        }
    }

    pub(crate) fn with_context(self, ctx: impl Into<String>) -> Self {
        match self {
            Error::Parse { context, message } => {
                let ctx = ctx.into();
                let context = if context.is_empty() {
                    ctx
                } else {
                    format!("{ctx}.{context}")
                };
                Error::Parse { context, message }
            }
            other => other,
        }
    }
}

pub(crate) fn dim_check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Dimension(what()))
    }
}
