//! Multifold 1-perfect codes, completely regular codes of covering radius 1,
//! and the multispreads that generate them.
//!
//! A mu-fold 1-perfect code in the Hamming graph H(n, q) is a multiset-free
//! set of vertices such that every radius-1 ball contains exactly mu of them;
//! mu = 1 recovers classical perfect codes. For q = p^t a prime power, the
//! additive such codes are kernels of GF(p)-matrices whose columns are grouped
//! into n blocks of t, and their combinatorial structure is equivalent to a
//! (lambda, mu)-multispread: an n-tuple of t-dimensional multi-subspaces of
//! GF(p)^m whose nonzero-part multisets cover the zero vector lambda times and
//! every nonzero vector mu times.
//!
//! The crate constructs multispreads for every feasible parameter set,
//! assembles the corresponding check matrices and codes (including unions of
//! cosets when the cardinality is not a power of p), and verifies perfection
//! and complete regularity both structurally and by exhaustive sweep.

pub mod codes;
mod digits;
pub mod ff;
pub mod io;
pub mod multispread;
pub mod params;

/// Unified error type for the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("polynomial is not irreducible over GF({p})")]
    NotIrreducible { p: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("inconsistent system: the right-hand side is outside the column space")]
    InconsistentSystem,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("not a multispread: {0}")]
    NotMultispread(multispread::UnevenWitness),
    #[error("parameters are infeasible: violated {}", format_conditions(.0))]
    Infeasible(Vec<params::Condition>),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{what} too large: {base}^{exp} exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        base: u64,
        exp: usize,
        cap: u64,
    },
    #[error("the code is empty or covers nothing")]
    TrivialCode,
    #[error("check matrix rows span a space of dimension {rank}, expected {m}")]
    DoesNotSpan { rank: usize, m: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

fn format_conditions(conds: &[params::Condition]) -> String {
    let names: Vec<&str> = conds.iter().map(|c| c.name()).collect();
    names.join(", ")
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Attach a file path to a parse error for CLI display.
    pub fn display_with_path(&self, path: &str) -> String {
        match self {
            Error::Parse { line, msg } => format!("{path}: line {line}: {msg}"),
            other => format!("{path}: {other}"),
        }
    }
}
