use std::collections::BTreeMap;

use serde::Serialize;

use super::qualitative::best_match_mean;
use super::{sim_qualitative, sim_quantitative, SimilarityError, SimilarityOptions};
use crate::embedding::TextEmbedding;
use crate::profiles::WeightProfile;
use crate::rdf::{classify_object, EntityDescription, ObjectKind};

/// The values two entities hold for one predicate. At least one side is
/// non-empty.
#[derive(Debug, Clone, PartialEq)]
pub struct AlignedSlot {
    pub predicate: String,
    pub left: Vec<ObjectKind>,
    pub right: Vec<ObjectKind>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SlotKind {
    Quantitative,
    Qualitative,
    /// Numeric values on one side, text on the other (or mixed within a side).
    Mixed,
    /// The predicate occurs in only one entity.
    Unmatched,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlotScore {
    pub predicate: String,
    pub similarity: f64,
    pub weight: f64,
    pub kind: SlotKind,
}

/// Pairs the two descriptions by predicate over the union of their
/// predicates, sorted by predicate IRI.
pub fn align_slots(left: &EntityDescription, right: &EntityDescription) -> Vec<AlignedSlot> {
    let mut slots: BTreeMap<String, AlignedSlot> = BTreeMap::new();
    let mut side = |entity: &EntityDescription, is_left: bool| {
        for (predicate, values) in entity.slots() {
            let slot = slots
                .entry(predicate.to_owned())
                .or_insert_with(|| AlignedSlot {
                    predicate: predicate.to_owned(),
                    left: Vec::new(),
                    right: Vec::new(),
                });
            let kinds = values.iter().map(classify_object);
            if is_left {
                slot.left.extend(kinds);
            } else {
                slot.right.extend(kinds);
            }
        }
    };
    side(left, true);
    side(right, false);
    slots.into_values().collect()
}

/// Scores one aligned slot; the returned weight is 0 until a profile
/// assigns one.
///
/// One-sided slots score 0. Otherwise each value is matched to its best
/// counterpart on the other side (numbers against numbers, text against
/// text, anything across kinds scores 0) and the best-match scores are
/// averaged over both sides.
pub fn slot_similarity(
    slot: &AlignedSlot,
    embedding: &TextEmbedding,
    options: &SimilarityOptions,
) -> Result<SlotScore, SimilarityError> {
    let score = |similarity, kind| SlotScore {
        predicate: slot.predicate.clone(),
        similarity,
        weight: 0.0,
        kind,
    };
    if slot.left.is_empty() || slot.right.is_empty() {
        return Ok(score(0.0, SlotKind::Unmatched));
    }
    let all = |pred: fn(&ObjectKind) -> bool| slot.left.iter().chain(&slot.right).all(pred);
    let kind = if all(ObjectKind::is_quantitative) {
        SlotKind::Quantitative
    } else if all(|v| !v.is_quantitative()) {
        SlotKind::Qualitative
    } else {
        SlotKind::Mixed
    };

    let mut error = None;
    let similarity =
        best_match_mean(
            slot.left.len(),
            slot.right.len(),
            |i, j| match value_similarity(
                &slot.left[i],
                &slot.right[j],
                &slot.predicate,
                embedding,
                options,
            ) {
                Ok(s) => s,
                Err(e) => {
                    error.get_or_insert(e);
                    0.0
                }
            },
        );
    match error {
        Some(e) => Err(e),
        None => Ok(score(similarity, kind)),
    }
}

fn value_similarity(
    a: &ObjectKind,
    b: &ObjectKind,
    predicate: &str,
    embedding: &TextEmbedding,
    options: &SimilarityOptions,
) -> Result<f64, SimilarityError> {
    match (a, b) {
        (ObjectKind::Quantitative(x), ObjectKind::Quantitative(y)) => {
            sim_quantitative(x, y, options, predicate)
        }
        (ObjectKind::Qualitative(x), ObjectKind::Qualitative(y)) => {
            Ok(sim_qualitative(x, y, embedding))
        }
        _ => Ok(0.0),
    }
}

/// Slot scores with their profile weights, in predicate order.
pub fn score_slots(
    left: &EntityDescription,
    right: &EntityDescription,
    profile: &WeightProfile,
    embedding: &TextEmbedding,
    options: &SimilarityOptions,
) -> Result<Vec<SlotScore>, SimilarityError> {
    align_slots(left, right)
        .iter()
        .map(|slot| {
            let mut score = slot_similarity(slot, embedding, options)?;
            score.weight = profile.resolve_weight(&slot.predicate);
            Ok(score)
        })
        .collect()
}

/// Weighted mean of slot scores over the union of both entities'
/// predicates: `sum(sim * w) / sum(w)`, or 0 when every weight is 0.
pub fn sim_weighted(
    left: &EntityDescription,
    right: &EntityDescription,
    profile: &WeightProfile,
    embedding: &TextEmbedding,
    options: &SimilarityOptions,
) -> Result<f64, SimilarityError> {
    let scores = score_slots(left, right, profile, embedding, options)?;
    Ok(weighted_mean(&scores))
}

pub(crate) fn weighted_mean(scores: &[SlotScore]) -> f64 {
    let (num, den) = scores.iter().fold((0.0, 0.0), |(num, den), s| {
        (num + s.similarity * s.weight, den + s.weight)
    });
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}
