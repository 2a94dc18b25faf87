//! Semantics-aligning network for person re-identification at desk scale.
//!
//! The crate implements the full pipeline: procedural generation of aligned
//! (person image, texture image) pairs, an encoder/decoder network trained
//! with identification, batch-hard triplet, texture reconstruction and
//! per-position triplet constraints, and CMC/mAP retrieval evaluation.
//!
//! Everything is seeded and deterministic: identical configs produce
//! byte-identical datasets, loss logs and reports.

pub mod cli;
pub mod datagen;
pub mod error;
pub mod eval;
pub mod img;
pub mod losses;
pub mod model;
pub mod nn;
pub mod plotting;
pub mod rng;
pub mod training;
pub mod verify;

pub use error::{Result, SanError};

/// Tool version embedded into every produced artifact.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
