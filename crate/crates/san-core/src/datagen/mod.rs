//! Procedural generation of aligned (person image, texture image) pairs.
//!
//! A fixed UV atlas of named body cells is shared by every identity, which
//! makes dense semantic alignment true by construction: the same atlas pixel
//! means the same body region for all persons. Person images are produced by
//! warping visible atlas cells onto procedural backgrounds.

mod dataset;
mod identity;
mod layout;
mod render;

pub use dataset::{
    generate_dataset, load_manifest, DatasetManifest, GenConfig, ManifestHeader, ManifestRecord,
    Split, MANIFEST_SCHEMA,
};
pub use identity::{make_identity_texture, CellAppearance, IdentitySpec, PatternKind};
pub use layout::{Cell, UVAtlasLayout};
pub use render::{make_background, render_view, sample_view, AtlasMask, ViewSpec, WarpParams};
