use std::collections::HashMap;
use std::fmt::Write as _;

use super::EmbeddingError;

/// A dense word vector with finite components.
#[derive(Debug, Clone, PartialEq)]
pub struct WordVector(Vec<f64>);

impl WordVector {
    pub fn new(components: Vec<f64>) -> Result<Self, EmbeddingError> {
        if components.is_empty() {
            return Err(EmbeddingError::ZeroDimension);
        }
        if components.iter().any(|c| !c.is_finite()) {
            return Err(EmbeddingError::NonFinite { line: None });
        }
        Ok(WordVector(components))
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }
}

/// Cosine similarity clamped to `[0, 1]`. A zero vector on either side
/// scores 0.
pub fn word_similarity(a: &WordVector, b: &WordVector) -> Result<f64, EmbeddingError> {
    if a.dimension() != b.dimension() {
        return Err(EmbeddingError::VectorDimension {
            left: a.dimension(),
            right: b.dimension(),
        });
    }
    let (mut dot, mut na, mut nb) = (0.0, 0.0, 0.0);
    for (x, y) in a.0.iter().zip(&b.0) {
        dot += x * y;
        na += x * x;
        nb += y * y;
    }
    if na == 0.0 || nb == 0.0 {
        return Ok(0.0);
    }
    Ok((dot / (na.sqrt() * nb.sqrt())).clamp(0.0, 1.0))
}

/// Lowercase token to vector table; all vectors share one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorStore {
    dimension: usize,
    entries: HashMap<String, WordVector>,
}

impl VectorStore {
    pub fn new(dimension: usize) -> Result<Self, EmbeddingError> {
        if dimension == 0 {
            return Err(EmbeddingError::ZeroDimension);
        }
        Ok(VectorStore {
            dimension,
            entries: HashMap::new(),
        })
    }

    /// Adds a word (lowercased). Fails on a dimension mismatch or a word
    /// that is already present.
    pub fn insert(&mut self, word: &str, vector: WordVector) -> Result<(), EmbeddingError> {
        self.insert_at(word, vector, None)
    }

    fn insert_at(
        &mut self,
        word: &str,
        vector: WordVector,
        line: Option<usize>,
    ) -> Result<(), EmbeddingError> {
        if vector.dimension() != self.dimension {
            return Err(EmbeddingError::DimensionMismatch {
                line,
                expected: self.dimension,
                found: vector.dimension(),
            });
        }
        let word = word.to_lowercase();
        if word.is_empty() {
            return Err(EmbeddingError::EmptyWord { line });
        }
        if self.entries.contains_key(&word) {
            return Err(EmbeddingError::DuplicateWord { line, word });
        }
        self.entries.insert(word, vector);
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, token: &str) -> Option<&WordVector> {
        self.entries.get(token)
    }

    pub fn contains(&self, token: &str) -> bool {
        self.entries.contains_key(token)
    }

    /// Words in sorted order.
    pub fn words(&self) -> Vec<&str> {
        let mut words: Vec<&str> = self.entries.keys().map(String::as_str).collect();
        words.sort_unstable();
        words
    }

    /// word2vec text serialization with a header, words sorted.
    pub fn to_word2vec_text(&self) -> String {
        let mut out = format!("{} {}\n", self.len(), self.dimension);
        for word in self.words() {
            out.push_str(word);
            for c in self.entries[word].components() {
                write!(out, " {c}").expect("writing to a String cannot fail");
            }
            out.push('\n');
        }
        out
    }
}

/// Loads the word2vec text format: an optional `<count> <dim>` header, then
/// `word c1 .. cd` per line. Without a header the dimension comes from the
/// first vector line.
pub fn load_word_vectors(document: &str) -> Result<VectorStore, EmbeddingError> {
    let mut lines = document
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty())
        .peekable();

    let mut declared_count = None;
    let mut dimension = None;
    if let Some(&(_, first)) = lines.peek() {
        let fields: Vec<&str> = first.split_whitespace().collect();
        if let [count, dim] = fields[..] {
            if let (Ok(count), Ok(dim)) = (count.parse::<usize>(), dim.parse::<usize>()) {
                if dim == 0 {
                    return Err(EmbeddingError::ZeroDimension);
                }
                declared_count = Some(count);
                dimension = Some(dim);
                lines.next();
            }
        }
    }

    let mut store: Option<VectorStore> = dimension.map(VectorStore::new).transpose()?;
    for (line, text) in lines {
        let mut fields = text.split_whitespace();
        let word = fields.next().expect("blank lines are filtered out");
        let components = fields
            .map(|f| {
                let v: f64 = f.parse().map_err(|_| EmbeddingError::InvalidNumber {
                    line,
                    token: f.to_owned(),
                })?;
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(EmbeddingError::NonFinite { line: Some(line) })
                }
            })
            .collect::<Result<Vec<f64>, _>>()?;
        if components.is_empty() {
            return Err(EmbeddingError::DimensionMismatch {
                line: Some(line),
                expected: store.as_ref().map_or(1, VectorStore::dimension),
                found: 0,
            });
        }
        let store = store.get_or_insert_with(|| VectorStore {
            dimension: components.len(),
            entries: HashMap::new(),
        });
        store.insert_at(word, WordVector(components), Some(line))?;
    }

    let store = match store {
        Some(s) => s,
        None => return Err(EmbeddingError::EmptyVectorFile),
    };
    if let Some(count) = declared_count {
        if count != store.len() {
            return Err(EmbeddingError::CountMismatch {
                declared: count,
                found: store.len(),
            });
        }
    }
    Ok(store)
}
