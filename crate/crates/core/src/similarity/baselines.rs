//! Reference approaches the weighted measure is compared against.

use std::collections::HashSet;

use super::aggregate::{align_slots, sim_weighted, slot_similarity};
use super::{sim_qualitative, SimilarityError, SimilarityOptions};
use crate::embedding::TextEmbedding;
use crate::profiles::WeightProfile;
use crate::rdf::{canonical_term_string, local_name, EntityDescription};
use crate::text::split_words;

/// Jaccard index over `(predicate, object)` pairs. Subjects are ignored, so
/// two descriptions with the same statements score 1.
pub fn sim_jaccard(left: &EntityDescription, right: &EntityDescription) -> f64 {
    let pairs = |e: &EntityDescription| -> HashSet<(String, String)> {
        e.slots()
            .flat_map(|(p, values)| {
                values
                    .iter()
                    .map(move |o| (p.to_owned(), canonical_term_string(o)))
            })
            .collect()
    };
    let a = pairs(left);
    let b = pairs(right);
    let union = a.union(&b).count();
    if union == 0 {
        return 1.0;
    }
    a.intersection(&b).count() as f64 / union as f64
}

/// Predicate-and-object hybrid.
///
/// Each union slot scores the mean of the predicate-label similarity and
/// the object similarity; a one-sided slot keeps only half of its label
/// self-similarity. Slots are averaged with equal weight.
///
/// This is an approximation of the published hybrid, which also uses
/// corpus information content that is not available here.
pub fn sim_ps(
    left: &EntityDescription,
    right: &EntityDescription,
    embedding: &TextEmbedding,
    options: &SimilarityOptions,
) -> Result<f64, SimilarityError> {
    let slots = align_slots(left, right);
    let mut total = 0.0;
    for slot in &slots {
        let label = predicate_label(&slot.predicate);
        // aligned slots share one predicate, so this is its self-similarity
        let label_sim = sim_qualitative(&label, &label, embedding);
        let object = slot_similarity(slot, embedding, options)?;
        total += if slot.left.is_empty() || slot.right.is_empty() {
            label_sim / 2.0
        } else {
            (label_sim + object.similarity) / 2.0
        };
    }
    Ok(total / slots.len() as f64)
}

/// Word-embedding similarity with every property weighted equally.
pub fn sim_p0(
    left: &EntityDescription,
    right: &EntityDescription,
    embedding: &TextEmbedding,
    options: &SimilarityOptions,
) -> Result<f64, SimilarityError> {
    sim_weighted(
        left,
        right,
        &WeightProfile::uniform("P0"),
        embedding,
        options,
    )
}

fn predicate_label(predicate: &str) -> String {
    split_words(local_name(predicate)).join(" ")
}
