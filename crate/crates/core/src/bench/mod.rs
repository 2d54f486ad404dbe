//! Pairwise similarity matrices, score distributions and the on-disk
//! report bundle.

mod inputs;
mod matrix;
mod report;
mod run;

pub use inputs::{
    load_inputs, resolve_approach, DatasetSource, InputConfig, InputRecord, Inputs, ScalingMode,
    VectorSource,
};
pub use matrix::{
    compute_matrix, compute_matrix_with, Parallelism, SimilarityMatrix, DIAGONAL_TOLERANCE,
};
pub use report::{histogram, summary_stats, HistogramReport, SummaryStats, DEFAULT_BIN_COUNT};
pub use run::{
    build_bundle, heatmap_csv, histogram_csv, matrix_csv, run_benchmark, summary_csv, BenchConfig,
    Bundle,
};

use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::embedding::EmbeddingError;
use crate::ingest::IngestError;
use crate::profiles::ProfileError;
use crate::similarity::SimilarityError;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("{}: not valid UTF-8", path.display())]
    NotUtf8 { path: PathBuf },
    #[error("{}: {source}", path.display())]
    Dataset { path: PathBuf, source: IngestError },
    #[error("{name}: {source}")]
    Vectors {
        name: String,
        source: EmbeddingError,
    },
    #[error("{}: {source}", path.display())]
    ProfileFile { path: PathBuf, source: ProfileError },
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error(transparent)]
    Similarity(#[from] SimilarityError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("dataset has no entities")]
    EmptyDataset,
    #[error("no approaches selected")]
    NoApproaches,
    #[error(
        "unknown approach {0:?} (expected PJ, PS, P0..P11, example-3b or a loaded profile name)"
    )]
    UnknownApproach(String),
    #[error("approach {0:?} selected twice or clashes with another output name")]
    DuplicateApproach(String),
    #[error("bin count must be at least 1")]
    ZeroBins,
    #[error("summary statistics need at least 2 entities, got {0}")]
    TooFewEntities(usize),
    #[error("score table has {found} entries, expected {expected}")]
    Shape { expected: usize, found: usize },
    #[error("{approach}: self-similarity of {entity} is {value}, not 1")]
    NonUnitDiagonal {
        approach: String,
        entity: String,
        value: f64,
    },
    #[error("{approach}: score {value} outside [0, 1]")]
    OutOfRange { approach: String, value: f64 },
    #[error("{approach}: scores at ({row}, {col}) and ({col}, {row}) differ")]
    Asymmetric {
        approach: String,
        row: usize,
        col: usize,
    },
}

impl BenchError {
    /// Errors caused by how the run was requested rather than by its data.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            BenchError::NoApproaches
                | BenchError::UnknownApproach(_)
                | BenchError::DuplicateApproach(_)
                | BenchError::ZeroBins
                | BenchError::Profile(ProfileError::InvalidBoostFactor(_))
        )
    }
}
