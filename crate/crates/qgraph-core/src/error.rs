use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
#[non_exhaustive]
pub enum Error {
    RankMismatch { expected: usize, found: usize },
    NotIntegrable { labels: Vec<u32>, level: u32 },
    Unsupported(&'static str),
    /// A Verlinde entry was not within tolerance of a nonnegative integer.
    NonIntegralFusion { lambda: usize, mu: usize, nu: usize, value: f64 },
    NegativeRecursion { labels: [u32; 3] },
    NotIrreducible,
    NoConvergence,
    EmptyVacuumBlock,
    NoInvariant,
    MultipleInvariants(Vec<Vec<i64>>),
    /// No nonnegative integer writing of `K_{λμ}` exists.
    Inconsistent { lambda: usize, mu: usize },
    /// Several writings remain for these pairs after all deferrals.
    Ambiguous { norm: i64, pairs: Vec<(usize, usize)> },
    Overflow,
    LiftFailed(String),
    NoUnitComponent,
    IdentificationOutOfBasis { a: usize, b: usize },
    ModuleLaw(String),
    FactorizationMismatch(usize),
    Idempotency(String),
    /// The module graph does not have the expected `E4` shape.
    Labeling(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected} labels, found {found}")
            }
            Error::NotIntegrable { labels, level } => {
                write!(f, "weight {labels:?} is not integrable at level {level}")
            }
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::NonIntegralFusion { lambda, mu, nu, value } => write!(
                f,
                "Verlinde coefficient N[{lambda}][{mu}][{nu}] = {value} is not a nonnegative integer"
            ),
            Error::NegativeRecursion { labels } => {
                write!(f, "recursion produced a negative entry at {labels:?}")
            }
            Error::NotIrreducible => write!(f, "adjacency matrix is not irreducible"),
            Error::NoConvergence => write!(f, "power iteration did not converge"),
            Error::EmptyVacuumBlock => write!(f, "no branching candidate for the vacuum"),
            Error::NoInvariant => write!(f, "no modular invariant in the search box"),
            Error::MultipleInvariants(s) => {
                write!(f, "{} minimal modular invariants found", s.len())
            }
            Error::Inconsistent { lambda, mu } => {
                write!(f, "no nonnegative integer writing for K[{lambda}][{mu}]")
            }
            Error::Ambiguous { norm, pairs } => {
                write!(f, "{} ambiguous K matrices left at norm {norm}", pairs.len())
            }
            Error::Overflow => write!(f, "integer overflow in exact elimination"),
            Error::LiftFailed(why) => write!(f, "chiral lift failed: {why}"),
            Error::NoUnitComponent => write!(f, "no connected component contains the unit"),
            Error::IdentificationOutOfBasis { a, b } => {
                write!(f, "{a}⊗{b} does not reduce to the Oc basis")
            }
            Error::ModuleLaw(why) => write!(f, "module law violated: {why}"),
            Error::FactorizationMismatch(x) => {
                write!(f, "essential-matrix factorization fails for basis element {x}")
            }
            Error::Idempotency(why) => write!(f, "matrix unit check failed: {why}"),
            Error::Labeling(why) => write!(f, "vertex labeling failed: {why}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
