//! Files, formats and the command-line driver around `qgraph-core`.
//!
//! * [`artifact`]: content-addressed records with canonical JSON.
//! * [`catalog`]: the on-disk store, rooted at `$QGRAPH_CATALOG`.
//! * [`payload`]: serializable forms of the core types.
//! * [`stages`]: pipeline steps from parameters or upstream artifacts.
//! * [`dot`]: Graphviz rendering of the `E4` and Ocneanu graphs.
//! * [`cli`]: argument parsing and exit codes.

pub mod artifact;
pub mod catalog;
pub mod cli;
pub mod dot;
pub mod payload;
pub mod stages;

pub use artifact::{ArtifactRecord, Kind, Provenance};
pub use catalog::Catalog;
