use std::path::PathBuf;

/// Crate-wide error type. The CLI maps `Config` and `Input` to exit code 1
/// (usage/config errors) and everything else to exit code 2 (runtime/data).
#[derive(Debug, thiserror::Error)]
pub enum SanError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("input error: {0}")]
    Input(String),

    #[error("data error: {0}")]
    Data(String),

    /// A sampled view exposes too little or too much of the atlas; the
    /// caller is expected to resample the view.
    #[error("view rejected: visible fraction {visible_fraction:.4} outside [{lo:.2}, {hi:.2}]")]
    ViewRejected {
        visible_fraction: f64,
        lo: f64,
        hi: f64,
    },

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl SanError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        SanError::Io {
            path: path.into(),
            source,
        }
    }

    /// Exit code used by the CLI for this error kind.
    pub fn exit_code(&self) -> i32 {
        match self {
            SanError::Config(_) | SanError::Input(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, SanError>;
