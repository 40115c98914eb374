use alloc::string::String;
use thiserror::Error;

use crate::dynamics::RegimeLabel;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coefficient c{index} = {value} is not a finite number in [-1, 1]")]
    CouplingOutOfRange { index: usize, value: f64 },

    /// One of the four eigenvalue expressions of the Bell-diagonal state is
    /// negative beyond tolerance.
    #[error("unphysical state: eigenvalue ({expression})/4 = {value} < 0")]
    Unphysical { expression: &'static str, value: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid subsystem selection: {0}")]
    InvalidSubsystems(&'static str),

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("trace is not 1 (got {0})")]
    InvalidTrace(f64),

    #[error("not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("invalid Unruh point: w = {w}, T = {temperature}")]
    InvalidUnruhPoint { w: f64, temperature: f64 },

    #[error("{0} search directions is too coarse (need at least 64)")]
    ResolutionTooCoarse(usize),

    #[error("no sudden change in regime {0}")]
    WrongRegime(RegimeLabel),

    #[error("no argmin switch found on the temperature grid")]
    NoCrossing,

    #[error("unknown named state `{0}`")]
    UnknownState(String),
}

pub type Result<T> = core::result::Result<T, Error>;
