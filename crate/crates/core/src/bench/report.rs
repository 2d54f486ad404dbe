use serde::Serialize;

use super::{BenchError, SimilarityMatrix};

pub const DEFAULT_BIN_COUNT: usize = 20;

/// Counts of off-diagonal scores in uniform bins over `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HistogramReport {
    pub approach: String,
    pub bin_count: usize,
    /// `bin_count + 1` edges, `edges[i] = i / bin_count`.
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
}

/// Bin `i` covers `[i/B, (i+1)/B)`; the last bin also includes 1.
pub fn histogram(
    matrix: &SimilarityMatrix,
    bin_count: usize,
) -> Result<HistogramReport, BenchError> {
    if bin_count == 0 {
        return Err(BenchError::ZeroBins);
    }
    let edges: Vec<f64> = (0..=bin_count)
        .map(|i| i as f64 / bin_count as f64)
        .collect();
    let mut counts = vec![0u64; bin_count];
    for score in matrix.upper_triangle() {
        let mut bin = ((score * bin_count as f64).floor() as usize).min(bin_count - 1);
        // settle rounding in score * B against the published edges
        while bin > 0 && score < edges[bin] {
            bin -= 1;
        }
        while bin + 1 < bin_count && score >= edges[bin + 1] {
            bin += 1;
        }
        counts[bin] += 1;
    }
    Ok(HistogramReport {
        approach: matrix.approach().to_owned(),
        bin_count,
        edges,
        counts,
    })
}

/// Off-diagonal score statistics; `stdev` is the population form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryStats {
    pub approach: String,
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    pub stdev: f64,
    pub count: u64,
}

pub fn summary_stats(matrix: &SimilarityMatrix) -> Result<SummaryStats, BenchError> {
    if matrix.size() < 2 {
        return Err(BenchError::TooFewEntities(matrix.size()));
    }
    let scores: Vec<f64> = matrix.upper_triangle().collect();
    let count = scores.len() as f64;
    let min = scores.iter().copied().fold(f64::INFINITY, f64::min);
    let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mean = (scores.iter().sum::<f64>() / count).clamp(min, max);
    let variance = scores.iter().map(|s| (s - mean) * (s - mean)).sum::<f64>() / count;
    Ok(SummaryStats {
        approach: matrix.approach().to_owned(),
        mean,
        min,
        max,
        stdev: variance.sqrt(),
        count: scores.len() as u64,
    })
}
