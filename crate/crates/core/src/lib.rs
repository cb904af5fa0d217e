//! Exact computation of stringy E-function contributions of isolated
//! nondegenerate hypersurface singularities, together with the Eulerian
//! poset and lattice polytope invariants those formulas are built from.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod hodge;
pub mod newton;
pub mod polytope;
pub mod poset;

pub use error::{Error, Result};
