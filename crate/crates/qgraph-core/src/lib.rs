//! Quantum graphs and quantum symmetries from affine `su(N)` modular data.
//!
//! The crate is `no_std` and only needs `alloc`. It covers the whole chain
//! for the exceptional `E4(SU(4))` graph:
//!
//! * [`lie`]: alcoves, quadratic forms, conformal dimensions, Weyl groups.
//! * [`modular`]: Kac–Peterson `s` and `t`, Verlinde fusion.
//! * [`fusion`]: fusion matrices from the truncated recursion, Perron data.
//! * [`embed`]: conformal embeddings, branching ansätze, modular invariants.
//! * [`split`]: the modular splitting equation, toric matrices, chiral
//!   generators of the Ocneanu graph.
//! * [`graph`]: annular matrices, the graph algebra of `E4`, its Ocneanu
//!   realization, dual annular matrices and block structure.
//!
//! Integer data is exact throughout. Only modular matrices and Perron
//! vectors use floating point.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod audit;
pub mod embed;
mod error;
pub mod fusion;
pub mod graph;
pub mod iso;
pub mod lie;
pub mod linalg;
pub mod matrix;
pub mod modular;
pub mod pipeline;
pub mod split;
pub mod surd;

pub use error::{Error, Result};
pub use matrix::IntMatrix;
