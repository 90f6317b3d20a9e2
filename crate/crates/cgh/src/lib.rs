//! Convex geometric hypergraphs on a cyclically ordered ground set:
//! pattern recognition (tight paths, zigzags, stacks, crossing-free
//! matchings), extremal constructions, exact extremal-number search, and
//! mechanical verification of the associated counting inequalities.

pub mod constructions;
pub mod error;
pub mod good;
pub mod ground;
pub mod hypergraph;
pub mod patterns;
pub mod search;
pub mod verify;

/// All inequality checks are done in exact rational arithmetic.
pub type Rat = num_rational::Ratio<i128>;

pub use error::{CghError, Result};
pub use ground::{CyclicGround, Segment};
pub use hypergraph::{Cgh, Edge};
