//! Quasisymmetric Schur P- and Q-functions through peak composition tableaux.
//!
//! * [`compositions`]: compositions, subsets, refinement, peak compositions
//! * [`tableaux`]: peak composition tableaux, marked and standard variants,
//!   reading words, descents, standardization
//! * [`qsym`]: exact quasisymmetric expressions in the `M`, `F`, `G` bases
//! * [`bases`]: `P̂`, `Q̂`, Schur `P`/`Q`, Young quasischur functions and
//!   the change-of-basis solver
//! * [`cli`]: the `pqsym` command-line front end

pub mod bases;
pub mod cli;
pub mod compositions;
pub mod error;
pub mod json;
pub mod par;
pub mod qsym;
pub mod render;
pub mod tableaux;

pub use error::{Error, Result};
