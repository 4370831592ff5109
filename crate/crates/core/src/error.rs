use thiserror::Error;

/// Errors raised across the library. Variant names double as the error
/// names surfaced by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DomainError: {0}")]
    Domain(String),
    #[error("ParseError at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("BadReduction: a denominator vanishes modulo {prime}")]
    BadReduction { prime: u64 },
    #[error("SingularQuadric: the quadric has rank {rank} < {n}")]
    SingularQuadric { rank: usize, n: usize },
    #[error("Infeasible: {0}")]
    Infeasible(String),
    #[error("Unstable: {0}")]
    Unstable(String),
    #[error("DegenerateParameters: {0}")]
    DegenerateParameters(String),
    #[error("NotLinearlyNormal: H(1) = {h1} but n = {n}")]
    NotLinearlyNormal { h1: usize, n: usize },
    #[error("UnsupportedQuadric: {0}")]
    UnsupportedQuadric(String),
    #[error("NotPolynomialMap: no consistent degree up to {max_degree}")]
    NotPolynomialMap { max_degree: usize },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Short machine-readable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DomainError",
            Error::Parse { .. } => "ParseError",
            Error::BadReduction { .. } => "BadReduction",
            Error::SingularQuadric { .. } => "SingularQuadric",
            Error::Infeasible(_) => "Infeasible",
            Error::Unstable(_) => "Unstable",
            Error::DegenerateParameters(_) => "DegenerateParameters",
            Error::NotLinearlyNormal { .. } => "NotLinearlyNormal",
            Error::UnsupportedQuadric(_) => "UnsupportedQuadric",
            Error::NotPolynomialMap { .. } => "NotPolynomialMap",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
