//! Exact symbolic computation in the quantum matrix algebra O(M_q), the
//! quantum groups O(GL_q) and O(SL_q), their adjoint coactions, and co-orbit
//! maps of classical points.

pub mod chars;
pub mod classical;
pub mod coorbit;
pub mod error;
pub mod hopf;
pub mod mq;
pub mod parse;
pub mod scalars;
pub mod xla;

pub use error::{Error, Result};
