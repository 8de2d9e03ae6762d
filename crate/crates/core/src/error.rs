use thiserror::Error;

/// Everything that can go wrong while constructing domains, agents, and
/// orders, or while running enumeration-based checks.
///
/// Offending elements are carried as rendered strings so the error type
/// stays independent of the scalar parameter.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set must not be empty")]
    EmptyDomain,
    #[error("duplicate element `{0}` in ground set")]
    DuplicateElement(String),
    #[error("outcome ground set mixes variants: `{first}` vs `{other}`")]
    MixedOutcomeVariants { first: String, other: String },
    #[error("vector outcomes must share one length: expected {expected}, got {got}")]
    VectorLengthMismatch { expected: usize, got: usize },
    #[error("move `{0}` has no assigned outcome")]
    MissingMove(String),
    #[error("move `{0}` is assigned more than once")]
    DuplicateMove(String),
    #[error("outcome `{0}` is not in the outcome ground set")]
    UnknownOutcome(String),
    #[error("move `{0}` is not in the move set")]
    UnknownMove(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("operation needs scalar outcomes")]
    NonNumericOutcomes,
    #[error("radius must be nonnegative, got {0}")]
    NegativeRadius(String),
    #[error("permissible move set is empty")]
    EmptyPermissibleSet,
    #[error("antisymmetry violation: `{a}` and `{b}` dominate each other")]
    AntisymmetryViolation { a: String, b: String },
    #[error("relation is not a partial order: {0}")]
    InvalidOrder(String),
    #[error("subset ground set does not match the operation's ground set")]
    GroundMismatch,
    #[error("moves and outcomes must form the same ground set: {0}")]
    DomainCodomainMismatch(String),
    #[error("majority vote needs values drawn from a binary candidate set")]
    NonBinaryCandidates,
    #[error("player index {index} out of range for {count} players")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("fixed moves for the other players: expected {expected}, got {got}")]
    IncompleteOthers { expected: usize, got: usize },
    #[error("profile arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("outcome rule must map joint profiles one-to-one onto the outcome ground set")]
    CodomainNotProduct,
    #[error("outcome rule misses profile ({0})")]
    MissingProfile(String),
    #[error("outcome rule assigns profile ({0}) more than once")]
    DuplicateProfile(String),
    #[error("enumeration budget exceeded: {required} contexts exceed budget {budget}")]
    BudgetExceeded { required: String, budget: u64 },
    #[error("selection function is not total: empty on {0}")]
    NonTotalSelection(String),
    #[error("quantifier is not attainable: witness {0}")]
    NotAttainable(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("reconstructed choice function disagrees with the quantifier on {0}")]
    ReconstructionMismatch(String),
    #[error("choice on {subset} returned `{chosen}` outside the subset")]
    ChoiceNotSubset { subset: String, chosen: String },
    #[error("choice on nonempty {0} is empty")]
    EmptyChoice(String),
    #[error("table has no entry for {0}")]
    IncompleteTable(String),
    #[error("table defines {0} more than once")]
    DuplicateTableEntry(String),
}
