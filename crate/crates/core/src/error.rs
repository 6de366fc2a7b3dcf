use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("iteration limit of {max_iter} reached in {what}")]
    IterationLimit { what: &'static str, max_iter: usize },

    #[error("unsupported measure: {0}")]
    UnsupportedMeasure(String),

    #[error("invalid point set: {0}")]
    InvalidPointSet(String),

    #[error("need at least 2 points in window [{lo}, {hi}], found {found}")]
    InsufficientPoints { lo: f64, hi: f64, found: usize },

    #[error("tolerance {tol:e} does not exceed truncation bound {tail:e}")]
    ToleranceTooTight { tol: f64, tail: f64 },

    #[error(
        "not spectral: {difference}; {sum}; nearest spectral parameters (t1, t2) = ({nearest_t1}, {nearest_t2})"
    )]
    NotSpectral {
        difference: String,
        sum: String,
        nearest_t1: f64,
        nearest_t2: f64,
    },

    #[error("parity audit failed at ({lambda1}, {lambda2}): T = {t_value}, expected {expected} integer")]
    AuditFailure {
        lambda1: f64,
        lambda2: f64,
        t_value: f64,
        expected: &'static str,
    },

    #[error("{count} zero-set solutions off the lines λ2 = ±λ1, first at λ1 = {lambda1}, λ2 = {lambda2}")]
    OffLineSolutions {
        count: usize,
        lambda1: f64,
        lambda2: f64,
    },

    #[error("report link `{link}` failed: {details}")]
    LinkFailed { link: String, details: String },

    #[error("parse error in {field}: {message}")]
    Parse { field: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
