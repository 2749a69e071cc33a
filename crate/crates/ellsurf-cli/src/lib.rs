//! Command-line front end: a registry of pinned elliptic surfaces, lazy
//! characteristic-polynomial computation, certification, and report
//! rendering.

pub mod commands;
pub mod registry;
pub mod report;
pub mod source;

use irreducibility::IrrError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("unknown surface id: {0}")]
    UnknownSurface(String),
    #[error("cannot certify {id}: the non-trivial rank is {rank}, not 5")]
    NotRankFive { id: String, rank: i64 },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Surface(#[from] surface_model::SurfaceError),
    #[error(transparent)]
    Count(#[from] frobenius_counting::CountError),
    #[error(transparent)]
    Irreducibility(#[from] IrrError),
    #[error("{0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, CliError>;
