use thiserror::Error;

/// Failures reported by every construction in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplication table is malformed: {0}")]
    MalformedTable(String),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("element index {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("operands live over different groups or coset spaces")]
    GroupMismatch,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("element is not in the positive cone")]
    NotInCone,
    #[error("some lower element is not below some upper element")]
    PreorderViolated,
    #[error("refinement sums x1 + x2 and y1 + y2 differ")]
    SumMismatch,
    #[error("basis index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("column {0} is not fixed by the source stabilizer")]
    NotEquivariant(usize),
    #[error("the relation does not sum to zero")]
    RelationNotZero,
    #[error("coefficient is not in the positive cone of the group ring")]
    NotPositive,
    #[error("the product a.x is not in the positive cone")]
    ProductNotInCone,
    #[error("the subgroup is not normal")]
    DeltaNotNormal,
    #[error("target does not provide decomposition witnesses for this subgroup")]
    TargetLacksSdp,
    #[error("internal verification failed: {0}")]
    InternalVerificationFailed(String),
    #[error("the coset spaces of the operands differ")]
    DeltaMismatch,
    #[error("map {0} is not positive")]
    NotPositiveMap(usize),
    #[error("unit relation fails at level {0}")]
    UnitNotPreserved(usize),
    #[error("element is not an order-unit")]
    NotOrderUnit,
    #[error("coefficients do not represent the requested unit class")]
    ClassMismatch,
    #[error("no block embedding realizes this map: {0}")]
    NotRealizable(String),
    #[error("map does not carry unit class to unit class")]
    UnitMismatch,
    #[error("the tower carries no units")]
    MissingUnits,
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
