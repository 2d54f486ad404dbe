use std::collections::{BTreeMap, HashSet};

use indexmap::IndexMap;

use super::EmbeddingError;

/// Smoothed inverse document frequencies over a token corpus:
/// `idf(t) = ln((1 + N) / (1 + df(t))) + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TfidfModel {
    vocabulary: IndexMap<String, usize>,
    idf: Vec<f64>,
    document_count: usize,
}

impl TfidfModel {
    pub fn vocabulary_len(&self) -> usize {
        self.vocabulary.len()
    }

    pub fn document_count(&self) -> usize {
        self.document_count
    }

    pub fn index_of(&self, token: &str) -> Option<usize> {
        self.vocabulary.get(token).copied()
    }

    pub fn idf(&self, token: &str) -> Option<f64> {
        self.index_of(token).map(|i| self.idf[i])
    }

    pub fn contains(&self, token: &str) -> bool {
        self.vocabulary.contains_key(token)
    }
}

/// Sparse vector indexed by vocabulary position.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SparseVector(BTreeMap<usize, f64>);

impl SparseVector {
    pub fn get(&self, index: usize) -> f64 {
        self.0.get(&index).copied().unwrap_or(0.0)
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.values().all(|&v| v == 0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.0.iter().map(|(&i, &v)| (i, v))
    }

    /// Cosine clamped to `[0, 1]`; zero vectors score 0.
    pub fn cosine(&self, other: &SparseVector) -> f64 {
        let dot: f64 = self.iter().map(|(i, v)| v * other.get(i)).sum();
        let na: f64 = self.0.values().map(|v| v * v).sum();
        let nb: f64 = other.0.values().map(|v| v * v).sum();
        if na == 0.0 || nb == 0.0 {
            return 0.0;
        }
        (dot / (na.sqrt() * nb.sqrt())).clamp(0.0, 1.0)
    }
}

/// Fits vocabulary and idf over `corpus`, one token sequence per document.
/// Empty documents count towards `N` only.
pub fn tfidf_fit<D, T>(corpus: &[D]) -> Result<TfidfModel, EmbeddingError>
where
    D: AsRef<[T]>,
    T: AsRef<str>,
{
    if corpus.is_empty() {
        return Err(EmbeddingError::EmptyCorpus);
    }
    let mut vocabulary: IndexMap<String, usize> = IndexMap::new();
    let mut df: Vec<usize> = Vec::new();
    for doc in corpus {
        let mut seen = HashSet::new();
        for token in doc.as_ref().iter().map(AsRef::as_ref) {
            if !seen.insert(token) {
                continue;
            }
            let next = vocabulary.len();
            let idx = *vocabulary.entry(token.to_owned()).or_insert(next);
            if idx == df.len() {
                df.push(0);
            }
            df[idx] += 1;
        }
    }
    let n = corpus.len() as f64;
    let idf = df
        .iter()
        .map(|&d| ((1.0 + n) / (1.0 + d as f64)).ln() + 1.0)
        .collect();
    Ok(TfidfModel {
        vocabulary,
        idf,
        document_count: corpus.len(),
    })
}

/// Raw term count times idf for every in-vocabulary token.
pub fn tfidf_vectorize<T: AsRef<str>>(model: &TfidfModel, tokens: &[T]) -> SparseVector {
    let mut counts: BTreeMap<usize, f64> = BTreeMap::new();
    for token in tokens {
        if let Some(i) = model.index_of(token.as_ref()) {
            *counts.entry(i).or_insert(0.0) += 1.0;
        }
    }
    for (&i, v) in counts.iter_mut() {
        *v *= model.idf[i];
    }
    SparseVector(counts)
}
