use num_bigint::BigInt;
use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Most variants are domain errors: the input fails a precondition and the
/// caller can fix it. The [`Error::Internal`] variant marks a broken internal
/// invariant (two routes to the same value disagreeing, a quantity that is
/// provably integral failing to divide, ...) and always indicates a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("fraction {num}/{den} is not in lowest terms")]
    FractionNotReduced { num: BigInt, den: BigInt },
    #[error("fraction {num}/{den} is out of range: need numerator > denominator >= 1")]
    FractionRange { num: BigInt, den: BigInt },
    #[error("continued fraction entry {0} is out of range: every entry must be >= 2")]
    EntryTooSmall(BigInt),
    #[error("continued fractions must have at least one entry")]
    EmptyCFrac,
    #[error("chain entry {0} is negative")]
    NegativeEntry(BigInt),
    #[error("index {index} is out of range for a chain of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("cannot blow down position {index}: the entry there is {entry}, not 1")]
    NotContractible { index: usize, entry: BigInt },
    #[error("blow-down would drive a neighboring entry below zero")]
    NeighborUnderflow,
    #[error(
        "pair ({m},{a}) does not define a Wahl singularity: need m > a >= 1 coprime, or (1,1)"
    )]
    InvalidWahlPair { m: BigInt, a: BigInt },
    #[error("a smooth point has no exceptional chain")]
    SmoothPair,
    #[error("not an extremal neighborhood: delta = {delta} must be positive")]
    NonPositiveDelta { delta: BigInt },
    #[error("an extremal neighborhood needs a singular point on its second side")]
    NoSingularSide,
    #[error(
        "initial neighborhoods with two singular points need m2 > m1 (got m1 = {m1}, m2 = {m2})"
    )]
    PairOrder { m1: BigInt, m2: BigInt },
    #[error(
        "this neighborhood is not initial; its Mori sequence is generated from the initial member"
    )]
    NotInitial,
    #[error("these pairs do not lie on any Mori sequence")]
    NotMoriMember,
    #[error("this family is divisorial, so it has no flip")]
    NotFlippingFamily,
    #[error("this family is flipping, so it has no divisorial contraction")]
    NotDivisorialFamily,
    #[error("not an extremal P-resolution: delta = {delta} must be positive")]
    NotExtremal { delta: BigInt },
    #[error("the central curve of a P-resolution must have self-intersection -c with c >= 1 (got c = {0})")]
    CentralCurveTooSmall(BigInt),
    #[error("no usual initial neighborhood: the last entry of the chain is 2")]
    NoUsualInitial,
    #[error("chains must have at least one entry here")]
    EmptyChain,
    #[error("Milnor-fiber embeddings need exactly one singular side; this P-resolution has two")]
    TwoSingularSides,
    #[error("Milnor-fiber embeddings need exactly one singular side; this P-resolution has none")]
    NoWahlSide,
    #[error("'{0}' is not a valid integer")]
    InvalidInteger(String),
    #[error("the chain is not the exceptional chain of any Wahl singularity")]
    NotWahlChain,
    #[error("dot output is not available for {0}")]
    DotUnavailable(&'static str),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
