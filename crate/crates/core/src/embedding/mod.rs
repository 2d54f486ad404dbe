//! Word vectors and text vectorization behind qualitative similarity.
//!
//! Token-level similarity follows one policy in every mode: string-equal
//! tokens score 1; otherwise both tokens need a vector, and a token with no
//! vector (out of vocabulary) scores 0 against anything it differs from.

mod tfidf;
mod vectors;

pub use tfidf::{tfidf_fit, tfidf_vectorize, SparseVector, TfidfModel};
pub use vectors::{load_word_vectors, word_similarity, VectorStore, WordVector};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::rdf::{classify_object, EntityDescription, ObjectKind};
use crate::text::split_words;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("vector dimension must be at least 1")]
    ZeroDimension,
    #[error("{}dimension mismatch: expected {expected} components, found {found}", at_line(*.line))]
    DimensionMismatch {
        line: Option<usize>,
        expected: usize,
        found: usize,
    },
    #[error("cannot compare vectors of dimension {left} and {right}")]
    VectorDimension { left: usize, right: usize },
    #[error("{}duplicate word {word:?}", at_line(*.line))]
    DuplicateWord { line: Option<usize>, word: String },
    #[error("{}empty word", at_line(*.line))]
    EmptyWord { line: Option<usize> },
    #[error("{}non-finite vector component", at_line(*.line))]
    NonFinite { line: Option<usize> },
    #[error("line {line}: {token:?} is not a number")]
    InvalidNumber { line: usize, token: String },
    #[error("header declares {declared} words but the file has {found}")]
    CountMismatch { declared: usize, found: usize },
    #[error("vector file contains no vectors")]
    EmptyVectorFile,
    #[error("TF-IDF corpus must contain at least one document")]
    EmptyCorpus,
}

fn at_line(line: Option<usize>) -> String {
    line.map(|l| format!("line {l}: ")).unwrap_or_default()
}

/// Splits text into lowercase tokens on non-alphanumeric characters and
/// camelCase boundaries. Order and duplicates are kept.
pub fn tokenize(text: &str) -> Vec<String> {
    split_words(text)
        .into_iter()
        .map(str::to_lowercase)
        .collect()
}

/// Which word representation backs qualitative similarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EmbeddingMode {
    #[default]
    Word2Vec,
    Tfidf,
    /// No vectors at all: tokens match only when string-equal.
    Exact,
}

impl EmbeddingMode {
    pub fn as_str(self) -> &'static str {
        match self {
            EmbeddingMode::Word2Vec => "word2vec",
            EmbeddingMode::Tfidf => "tfidf",
            EmbeddingMode::Exact => "exact",
        }
    }
}

impl fmt::Display for EmbeddingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EmbeddingMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "word2vec" => Ok(EmbeddingMode::Word2Vec),
            "tfidf" => Ok(EmbeddingMode::Tfidf),
            "exact" => Ok(EmbeddingMode::Exact),
            other => Err(format!(
                "unknown embedding mode {other:?} (expected word2vec, tfidf or exact)"
            )),
        }
    }
}

/// The word representation a similarity run uses.
#[derive(Debug, Clone)]
pub enum TextEmbedding {
    Word2Vec(VectorStore),
    /// Each token is represented by its TF-IDF vector as a one-token document.
    Tfidf(TfidfModel),
    Exact,
}

impl TextEmbedding {
    pub fn mode(&self) -> EmbeddingMode {
        match self {
            TextEmbedding::Word2Vec(_) => EmbeddingMode::Word2Vec,
            TextEmbedding::Tfidf(_) => EmbeddingMode::Tfidf,
            TextEmbedding::Exact => EmbeddingMode::Exact,
        }
    }

    /// Fits a TF-IDF model with one document per entity, built from the
    /// tokens of its textual object values.
    pub fn fit_tfidf(entities: &[EntityDescription]) -> Result<Self, EmbeddingError> {
        tfidf_fit(&qualitative_corpus(entities)).map(TextEmbedding::Tfidf)
    }

    /// Similarity in `[0, 1]` between two lowercase tokens.
    pub fn token_similarity(&self, a: &str, b: &str) -> f64 {
        if a == b {
            return 1.0;
        }
        match self {
            TextEmbedding::Word2Vec(store) => match (store.get(a), store.get(b)) {
                (Some(va), Some(vb)) => {
                    word_similarity(va, vb).expect("store vectors share one dimension")
                }
                _ => 0.0,
            },
            TextEmbedding::Tfidf(model) => {
                if !(model.contains(a) && model.contains(b)) {
                    return 0.0;
                }
                tfidf_vectorize(model, &[a]).cosine(&tfidf_vectorize(model, &[b]))
            }
            TextEmbedding::Exact => 0.0,
        }
    }
}

/// One token document per entity: the tokens of every qualitative object.
pub fn qualitative_corpus(entities: &[EntityDescription]) -> Vec<Vec<String>> {
    entities
        .iter()
        .map(|e| {
            e.slots()
                .flat_map(|(_, values)| values.iter())
                .filter_map(|o| match classify_object(o) {
                    ObjectKind::Qualitative(text) => Some(tokenize(&text)),
                    ObjectKind::Quantitative(_) => None,
                })
                .flatten()
                .collect()
        })
        .collect()
}
