use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd({0}, {1}) != 1")]
    NotCoprime(i64, i64),

    #[error("0/0 is not a slope")]
    IndeterminateSlope,

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("continued fraction needs at least one coefficient")]
    EmptyContinuedFraction,

    #[error("invalid link: {0}")]
    InvalidLink(String),

    #[error("component {0} out of range")]
    NoSuchComponent(usize),

    #[error("component {0} is unfilled")]
    UnfilledComponent(usize),

    #[error("surgery does not describe a closed manifold (unfilled components remain)")]
    NotClosed,

    #[error("blow-down needs a +1 or -1 framed component, found {0}")]
    NotUnitFraming(String),

    #[error("matrix has determinant {0}, expected 1")]
    DeterminantNotOne(i64),

    #[error("family parameter k must be nonzero")]
    ZeroParameter,

    #[error("family VI needs |r| != 1, got r = {0}")]
    TrivialLensSpace(i64),

    #[error("invalid arc system: {0}")]
    InvalidArcSystem(String),

    #[error("family {0} has no Whitehead link exterior")]
    NoWhiteheadExterior(String),

    #[error("filling table: {0}")]
    FillingTable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
