use crate::ffield::FieldError;
use crate::polyring::PolyError;

/// Domain errors raised by the Carlitz, cyclotomic, Zsigmondy and
/// verification layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0} must be nonzero")]
    Zero(&'static str),
    #[error("{0} must be monic")]
    NotMonic(&'static str),
    #[error("{0} must have positive degree")]
    Constant(&'static str),
    #[error("{0} is not irreducible")]
    NotIrreducible(String),
    #[error("requires q > 2, got q = 2")]
    QTooSmall,
    #[error("u and m are both constant; no Zsigmondy primes exist")]
    BothConstant,
    #[error("{what} requires q = {expected}, got q = {got}")]
    WrongField {
        what: String,
        expected: String,
        got: u32,
    },
    #[error("invalid search bounds: {0}")]
    Bounds(String),
    #[error("unknown name '{0}'")]
    UnknownName(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
