//! Exact representation theory and spectral extremal combinatorics for the
//! symmetric group `S_n` and the alternating group `A_n`.
//!
//! The crate computes characters of `S_n` (permutation characters by
//! tabloid counting, irreducible characters by the determinantal formula),
//! exact eigenvalue tables of weighted conjugacy-class Cayley graphs,
//! Hoffman-type bounds, isotypic projections of functions on `S_n`, and
//! builds and checks the extremal families of `t`-intersecting
//! permutations. Every quantity is an exact rational; small-`n` brute-force
//! references live in [`oracle`] and [`search`].
//!
//! Runnable walkthroughs of each capability live in `examples/`.

pub mod characters;
pub mod cli;
pub mod error;
pub mod families;
pub mod guard;
pub mod interval;
pub mod linalg;
pub mod oracle;
pub mod partitions;
pub mod permcore;
pub mod rational;
pub mod render;
pub mod search;
pub mod spectral;
pub mod verify;

pub use characters::{ClassFunction, GroupFunction, Projector};
pub use error::{Error, Result};
pub use families::{CosetSpec, Family, MatrixFunction};
pub use guard::Guardrail;
pub use partitions::{Composition, HookGrid, Partition};
pub use permcore::{ConjugacyClass, DerangementCounts, GroupMode, Permutation};
pub use rational::Q;
pub use spectral::{HoffmanReport, SpectrumTable, WeightedCayleySpec};
