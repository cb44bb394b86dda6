use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot combine an operator-side element with a dual-side element")]
    SideMismatch,
    #[error("tensor degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("{op} is not defined on the {side} side")]
    WrongSide { op: &'static str, side: &'static str },
    #[error("{op} needs tensor degree {expected}, got {got}")]
    BadDegree { op: &'static str, expected: usize, got: usize },
    #[error("dual-side elements evaluated at different slot points")]
    SlotMismatch,
    #[error("slot point {0} is not a pair of bare symbols")]
    NonSymbolicSlot(String),
    #[error("cannot mix generators of different representation scales")]
    ScaleMismatch,
    #[error("unknown identity id '{0}'")]
    UnknownIdentity(String),
    #[error("unknown fundamental map '{0}'")]
    UnknownMap(String),
    #[error("point maps act on different numbers of legs: {0} vs {1}")]
    LegMismatch(usize, usize),
    #[error("translation x1 = {0} is not a multiple of the grid spacing")]
    OffGrid(f64),
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Whether the error stems from the caller's input rather than from the
    /// mathematics.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::SideMismatch
                | Error::DegreeMismatch(..)
                | Error::WrongSide { .. }
                | Error::BadDegree { .. }
                | Error::SlotMismatch
                | Error::NonSymbolicSlot(_)
                | Error::ScaleMismatch
                | Error::LegMismatch(..)
        )
    }
}
