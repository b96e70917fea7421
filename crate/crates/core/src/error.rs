use thiserror::Error;

/// Errors surfaced by construction and verification routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("mixed fields: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("closure exceeded the configured element cap of {cap}")]
    ClosureCapExceeded { cap: usize },
    #[error("multiplication table is not associative: witness ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("element {0} has no generalized inverse (semigroup is not regular)")]
    NotRegular(usize),
    #[error(
        "element {elem} has distinct generalized inverses {a} and {b} (idempotents do not commute)"
    )]
    InverseNotUnique { elem: usize, a: usize, b: usize },
    #[error("invalid star map: star({0}) fails s s* s = s")]
    BadStar(usize),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("invalid groupoid: {0}")]
    BadGroupoid(String),
    #[error("invalid action: {0}")]
    BadAction(String),
    #[error("slice count exceeds cap {cap} (|arrows| = {arrows})")]
    SliceCapExceeded { cap: usize, arrows: usize },
    #[error("invalid transversal: p_y applied to base point does not reach y = {0}")]
    BadTransversal(usize),
    #[error("map is not an algebra homomorphism: witness arrows ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("representation group does not match the isotropy group at the chosen unit")]
    GroupMismatch,
    #[error("degenerate module: units do not sum to the identity")]
    DegenerateModule,
    #[error("supplied irreducible list for group of order {order} fails completeness: sum of dim^2 = {got}")]
    IncompleteGroupList { order: usize, got: usize },
    #[error(
        "no built-in irreducible representations for this group over the requested field: {0}"
    )]
    NoBuiltinIrreps(String),
    #[error("multiplicativity failure in the change of basis: pair ({0}, {1})")]
    ThetaFailure(usize, usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
