use crate::embedding::{tokenize, TextEmbedding};

/// Symmetric best-match text similarity.
///
/// Both texts are tokenized; every token is scored against its best match
/// on the other side and the scores are averaged over all `h + l` tokens.
/// Two empty texts score 1, one empty text scores 0.
pub fn sim_qualitative(left: &str, right: &str, embedding: &TextEmbedding) -> f64 {
    let left = tokenize(left);
    let right = tokenize(right);
    sim_tokens(&left, &right, embedding)
}

pub(crate) fn sim_tokens(left: &[String], right: &[String], embedding: &TextEmbedding) -> f64 {
    match (left.is_empty(), right.is_empty()) {
        (true, true) => return 1.0,
        (true, false) | (false, true) => return 0.0,
        _ => {}
    }
    best_match_mean(left.len(), right.len(), |i, j| {
        embedding.token_similarity(&left[i], &right[j])
    })
}

/// `(sum_i max_j s(i,j) + sum_j max_i s(i,j)) / (n + m)` for non-empty sides.
pub(crate) fn best_match_mean(
    n: usize,
    m: usize,
    mut score: impl FnMut(usize, usize) -> f64,
) -> f64 {
    let mut row_max = vec![f64::NEG_INFINITY; n];
    let mut col_max = vec![f64::NEG_INFINITY; m];
    for (i, row) in row_max.iter_mut().enumerate() {
        for (j, col) in col_max.iter_mut().enumerate() {
            let s = score(i, j);
            *row = row.max(s);
            *col = col.max(s);
        }
    }
    let left: f64 = row_max.iter().sum();
    let right: f64 = col_max.iter().sum();
    (left + right) / (n + m) as f64
}
