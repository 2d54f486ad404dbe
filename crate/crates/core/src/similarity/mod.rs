//! Entity similarity: numeric and textual value similarity, weighted
//! aggregation over aligned slots, and the baseline approaches.

mod aggregate;
mod baselines;
mod qualitative;
mod quantitative;

pub use aggregate::{
    align_slots, score_slots, sim_weighted, slot_similarity, AlignedSlot, SlotKind, SlotScore,
};
pub use baselines::{sim_jaccard, sim_p0, sim_ps};
pub use qualitative::sim_qualitative;
pub use quantitative::sim_quantitative;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::embedding::TextEmbedding;
use crate::profiles::{builtin_profiles, ProfileError, WeightProfile};
use crate::rdf::{classify_object, EntityDescription, ObjectKind};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimilarityError {
    #[error("numeric values for <{predicate}> have different lengths ({left} vs {right})")]
    LengthMismatch {
        predicate: String,
        left: usize,
        right: usize,
    },
    #[error("no min-max statistics for <{0}>")]
    MissingMinMax(String),
    #[error("invalid min-max range for <{predicate}>: min {min} > max {max}")]
    InvalidRange {
        predicate: String,
        min: f64,
        max: f64,
    },
}

/// Per-predicate `(min, max)` of numeric values over a dataset.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MinMaxStats {
    ranges: BTreeMap<String, (f64, f64)>,
}

impl MinMaxStats {
    /// Collects the range of every numeric component per predicate.
    pub fn from_entities(entities: &[EntityDescription]) -> Self {
        let mut ranges: BTreeMap<String, (f64, f64)> = BTreeMap::new();
        for entity in entities {
            for (predicate, values) in entity.slots() {
                for value in values {
                    if let ObjectKind::Quantitative(xs) = classify_object(value) {
                        for x in xs {
                            let r = ranges.entry(predicate.to_owned()).or_insert((x, x));
                            r.0 = r.0.min(x);
                            r.1 = r.1.max(x);
                        }
                    }
                }
            }
        }
        MinMaxStats { ranges }
    }

    pub fn insert(&mut self, predicate: &str, min: f64, max: f64) -> Result<(), SimilarityError> {
        // Negated so that NaN bounds are rejected too.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(min <= max) {
            return Err(SimilarityError::InvalidRange {
                predicate: predicate.to_owned(),
                min,
                max,
            });
        }
        self.ranges.insert(predicate.to_owned(), (min, max));
        Ok(())
    }

    pub fn range(&self, predicate: &str) -> Option<(f64, f64)> {
        self.ranges.get(predicate).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, (f64, f64))> {
        self.ranges.iter().map(|(k, &v)| (k.as_str(), v))
    }
}

/// How numeric values are compared.
#[derive(Debug, Clone, Default, PartialEq)]
pub enum NumericScaling {
    /// Euclidean distance on the values as written.
    #[default]
    Raw,
    /// Values are first mapped to `[0, 1]` with per-predicate ranges.
    MinMax(MinMaxStats),
}

impl NumericScaling {
    pub fn name(&self) -> &'static str {
        match self {
            NumericScaling::Raw => "raw",
            NumericScaling::MinMax(_) => "minmax",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SimilarityOptions {
    pub scaling: NumericScaling,
}

impl SimilarityOptions {
    pub fn minmax(stats: MinMaxStats) -> Self {
        SimilarityOptions {
            scaling: NumericScaling::MinMax(stats),
        }
    }
}

/// A similarity measure between two entity descriptions.
#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Approach {
    /// Jaccard index over statements (PJ).
    Jaccard,
    /// Predicate-and-object hybrid (PS).
    PredicateObject,
    /// Weighted aggregate under a profile (P0..P11 or a custom profile).
    Weighted(WeightProfile),
}

impl Approach {
    pub fn name(&self) -> &str {
        match self {
            Approach::Jaccard => "PJ",
            Approach::PredicateObject => "PS",
            Approach::Weighted(p) => p.name(),
        }
    }

    pub fn similarity(
        &self,
        left: &EntityDescription,
        right: &EntityDescription,
        embedding: &TextEmbedding,
        options: &SimilarityOptions,
    ) -> Result<f64, SimilarityError> {
        match self {
            Approach::Jaccard => Ok(sim_jaccard(left, right)),
            Approach::PredicateObject => sim_ps(left, right, embedding, options),
            Approach::Weighted(profile) => sim_weighted(left, right, profile, embedding, options),
        }
    }
}

impl fmt::Display for Approach {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// PJ, PS, then P0..P11: the fourteen approaches of the comparison.
pub fn standard_approaches(boost_factor: f64) -> Result<Vec<Approach>, ProfileError> {
    let mut approaches = vec![Approach::Jaccard, Approach::PredicateObject];
    approaches.extend(
        builtin_profiles(boost_factor)?
            .into_iter()
            .map(Approach::Weighted),
    );
    Ok(approaches)
}
