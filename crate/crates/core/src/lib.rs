//! Combinatorial Goldman bracket and Turaev cobracket on cyclic words.
//!
//! Free homotopy classes of curves on an oriented surface with boundary are
//! cyclic words over a symmetric alphabet. This crate splits pairs of words
//! at their linking pairs to evaluate the bracket and cobracket, and uses
//! those counts to compute minimal self-intersection numbers.

pub mod algebra;
pub mod error;
pub mod exec;
pub mod harness;
pub mod io;
pub mod ordering;
pub mod pairing;
pub mod topology;
pub mod words;

pub use algebra::{bracket, cobracket, linking_pairs, FormalSum, LinearCombination, TensorSum};
pub use error::{Error, Result};
pub use harness::{Check, SweepConfig, SweepReport};
pub use ordering::{compare_rays, sign, Direction, PeriodicRay, Sign};
pub use pairing::{classes, splice, IndexPair, PairClass, Shape};
pub use topology::{is_simple, self_intersection, verify_counting, CountingReport};
pub use words::{Alphabet, CyclicWord, Letter, Word};
