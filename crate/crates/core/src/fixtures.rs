//! Small datasets and vectors shipped with the crate.

use crate::embedding::{load_word_vectors, VectorStore};
use crate::ingest::parse_ntriples;
use crate::profiles::{profile_from_config, WeightProfile};
use crate::rdf::Graph;

/// Tesla Model S described by the six weighted properties of the worked
/// example (price, exterior color, transmission, seats, mileage, fuel type).
pub const TESLA_NT: &str = include_str!("../fixtures/tesla.nt");
/// A vehicle-model snapshot with a manufacturer node.
pub const FIG1_NT: &str = include_str!("../fixtures/fig1.nt");
/// 55 vehicle-domain words, dimension 8, word2vec text format. Covers every
/// categorical token the synthetic generator emits.
pub const VECTORS: &str = include_str!("../fixtures/vectors-fixture.txt");
/// The worked-example weights as a JSON profile.
pub const EXAMPLE_3B_JSON: &str = include_str!("../fixtures/example-3b.json");

pub fn tesla_graph() -> Graph {
    parse_ntriples(TESLA_NT).0
}

pub fn fig1_graph() -> Graph {
    parse_ntriples(FIG1_NT).0
}

pub fn vectors() -> VectorStore {
    load_word_vectors(VECTORS).expect("bundled vector fixture is valid")
}

pub fn example_3b_profile() -> WeightProfile {
    profile_from_config(EXAMPLE_3B_JSON)
        .expect("bundled profile is valid")
        .0
}
