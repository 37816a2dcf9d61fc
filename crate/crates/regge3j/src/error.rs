use thiserror::Error;

/// First violated condition when a symbol fails the so(3) validity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalViolation {
    /// Column k (1-based) has odd parity.
    OddColumn(usize),
    NonIntegerPerimeter,
    Triangle,
    /// |m_k| > j_k for column k (1-based).
    ProjectionRange(usize),
}

/// First violated condition when a symbol fails the osp(1|2) validity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuperViolation {
    /// The (j1 j2 j3) triangle fails.
    JTriangle,
    /// The recovered doublet triple is not a valid so(3) triangle with
    /// integer perimeter: the symbol has no parent.
    Parent,
    /// |m_k| > l_k for column k (1-based).
    ProjectionRange(usize),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("radicand must be nonnegative")]
    NegativeRadicand,
    #[error("factorial of a negative quantity: {0}")]
    NegativeFactorialArg(i64),
    #[error("quantity is not an integer: {0}/2")]
    NonIntegerQuantity(i64),
    #[error("projections must sum to zero")]
    ProjectionSumNonzero,
    #[error("not a valid (3-j) symbol: {0:?}")]
    NotClassical(ClassicalViolation),
    #[error("not a valid super (3-j) symbol: {0:?}")]
    NotSuper(SuperViolation),
    #[error("no parent: forbidden super symbol (flat beta prolongation applies)")]
    ForbiddenParent,
    #[error("Regge transformation R{0} does not yield half-integer entries here")]
    ReggeNotApplicable(u8),
    #[error("symbol does not have beta parity")]
    NotBeta,
    #[error("beta parity index is {actual}, not {requested}")]
    BetaIndexMismatch { requested: u8, actual: u8 },
    #[error("selector profile matches no partition clause: {0}")]
    Unclassifiable(String),
    #[error("selector profile matches clauses of several partitions {labels:?}: {profile}")]
    AmbiguousClassification { labels: Vec<u8>, profile: String },
    #[error("not a flat forbidden beta symbol")]
    NotFlatForbidden,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
