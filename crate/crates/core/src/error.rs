use std::path::PathBuf;

use thiserror::Error;

/// Which admissibility condition a state broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    Alpha1OutOfRange,
    NonPositiveMass { phase: u8 },
    NonPositiveDensity { phase: u8 },
    NonPositiveInternalEnergy { phase: u8 },
    /// rho e <= p_inf: positive energy but no real sound speed.
    StiffenedBound { phase: u8 },
    NonFinite,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Alpha1OutOfRange => write!(f, "alpha1 outside (0,1)"),
            Violation::NonPositiveMass { phase } => write!(f, "partial mass of phase {phase} <= 0"),
            Violation::NonPositiveDensity { phase } => write!(f, "density of phase {phase} <= 0"),
            Violation::NonPositiveInternalEnergy { phase } => {
                write!(f, "internal energy of phase {phase} <= 0")
            }
            Violation::StiffenedBound { phase } => {
                write!(f, "rho e <= p_inf for phase {phase} (complex sound speed)")
            }
            Violation::NonFinite => write!(f, "non-finite component"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("eos domain error: {0}")]
    Domain(String),

    #[error("complex sound speed: gamma (p + p_inf) / rho = {0} <= 0")]
    ComplexSoundSpeed(f64),

    #[error("inadmissible state: {0}")]
    Inadmissible(Violation),

    #[error("admissibility lost in cell {cell} at step {step} (t = {t}): {violation}")]
    Positivity {
        cell: usize,
        step: usize,
        t: f64,
        violation: Violation,
    },

    #[error("fixed point bracket failure: Psi - rhs has no sign change on (0,1)")]
    BracketFailure,

    #[error("relaxation solution has a nonpositive specific volume ({0})")]
    NegativeVolume(&'static str),

    #[error("non-subsonic or infeasible interface after {inflations} inflations: {detail}")]
    Infeasible { inflations: usize, detail: String },

    #[error("degenerate wave speeds: time step bound is zero")]
    ZeroSpeed,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("unknown test case {0} (expected 1..=5)")]
    UnknownCase(u32),

    #[error("case file: {0}")]
    Schema(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{path}: {msg}")]
    Parse { path: PathBuf, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
