//! Finite-volume solver for the 1D Baer-Nunziato two-phase model.
//!
//! The main scheme is a positivity-preserving, entropy-satisfying relaxation
//! scheme built on an exact interface Riemann solver ([`riemann`]). A
//! Rusanov scheme serves as baseline, [`reference`] holds the five benchmark
//! Riemann problems with their exact solutions and [`harness`] does error
//! measurement, convergence studies, timing and file I/O.

pub mod eos;
pub mod error;
pub mod harness;
pub mod reference;
pub mod riemann;
pub mod rusanov;
pub mod scheme;
pub mod state;

pub use eos::EosParams;
pub use error::{Error, Result, Violation};
pub use state::{ConservedState, PrimitiveState};
