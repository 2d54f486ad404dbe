use rayon::prelude::*;

use super::BenchError;
use crate::embedding::TextEmbedding;
use crate::rdf::EntityDescription;
use crate::similarity::{Approach, SimilarityOptions};

/// Tolerance on the computed self-similarity placed on the diagonal.
pub const DIAGONAL_TOLERANCE: f64 = 1e-9;

/// Symmetric N x N score matrix for one approach, unit diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityMatrix {
    approach: String,
    entity_ids: Vec<String>,
    scores: Vec<f64>,
}

impl SimilarityMatrix {
    pub fn approach(&self) -> &str {
        &self.approach
    }

    pub fn entity_ids(&self) -> &[String] {
        &self.entity_ids
    }

    pub fn size(&self) -> usize {
        self.entity_ids.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.scores[i * self.size() + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let n = self.size();
        &self.scores[i * n..(i + 1) * n]
    }

    /// Scores of the strict upper triangle, row by row.
    pub fn upper_triangle(&self) -> impl Iterator<Item = f64> + '_ {
        let n = self.size();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| self.get(i, j)))
    }

    /// Builds a matrix from a full row-major score table, checking shape,
    /// symmetry, range and the unit diagonal.
    pub fn from_scores(
        approach: impl Into<String>,
        entity_ids: Vec<String>,
        scores: Vec<f64>,
    ) -> Result<Self, BenchError> {
        let approach = approach.into();
        let n = entity_ids.len();
        if scores.len() != n * n {
            return Err(BenchError::Shape {
                expected: n * n,
                found: scores.len(),
            });
        }
        let m = SimilarityMatrix {
            approach,
            entity_ids,
            scores,
        };
        for i in 0..n {
            if (m.get(i, i) - 1.0).abs() > DIAGONAL_TOLERANCE {
                return Err(BenchError::NonUnitDiagonal {
                    approach: m.approach.clone(),
                    entity: m.entity_ids[i].clone(),
                    value: m.get(i, i),
                });
            }
            for j in 0..n {
                let v = m.get(i, j);
                if !(0.0..=1.0).contains(&v) {
                    return Err(BenchError::OutOfRange {
                        approach: m.approach.clone(),
                        value: v,
                    });
                }
                if v != m.get(j, i) {
                    return Err(BenchError::Asymmetric {
                        approach: m.approach.clone(),
                        row: i,
                        col: j,
                    });
                }
            }
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    Serial,
    #[default]
    Parallel,
}

/// All pairwise scores, evaluating each unordered pair once (in parallel)
/// and mirroring it.
pub fn compute_matrix(
    entities: &[EntityDescription],
    approach: &Approach,
    embedding: &TextEmbedding,
    options: &SimilarityOptions,
) -> Result<SimilarityMatrix, BenchError> {
    compute_matrix_with(
        entities,
        approach,
        embedding,
        options,
        Parallelism::Parallel,
    )
}

pub fn compute_matrix_with(
    entities: &[EntityDescription],
    approach: &Approach,
    embedding: &TextEmbedding,
    options: &SimilarityOptions,
    parallelism: Parallelism,
) -> Result<SimilarityMatrix, BenchError> {
    let n = entities.len();
    if n == 0 {
        return Err(BenchError::EmptyDataset);
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let eval = |&(i, j): &(usize, usize)| {
        approach
            .similarity(&entities[i], &entities[j], embedding, options)
            .map_err(BenchError::from)
    };
    let values: Vec<f64> = match parallelism {
        Parallelism::Serial => pairs.iter().map(eval).collect::<Result<_, _>>()?,
        Parallelism::Parallel => pairs.par_iter().map(eval).collect::<Result<_, _>>()?,
    };

    let mut scores = vec![0.0; n * n];
    for (&(i, j), &v) in pairs.iter().zip(&values) {
        scores[i * n + j] = v;
        scores[j * n + i] = v;
    }
    let ids = entities.iter().map(EntityDescription::id).collect();
    SimilarityMatrix::from_scores(approach.name(), ids, scores)
}
