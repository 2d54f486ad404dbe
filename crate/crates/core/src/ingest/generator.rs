//! Seeded synthetic used-vehicle dataset.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`. Only fixed-width integer ranges are sampled, so output is
//! identical across platforms for a given `Cargo.lock`.
//!
//! The value ranges and category pools are engineering choices; they are
//! meant to look like a used-car listing, not to match any real catalogue.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::IngestError;
use crate::rdf::{vocab, Graph, Term, Triple};

/// Namespace of the vehicle vocabulary.
pub const VEHICLE_NS: &str = "http://example.org/vo#";
/// Prefix of generated subject IRIs.
pub const VEHICLE_BASE: &str = "http://example.org/vehicle/";

/// Local names of the predicates every generated vehicle carries, in
/// emission order.
pub const SCHEMA: [&str; 11] = [
    "release_year",
    "mileage",
    "fuel_type",
    "color",
    "nb_doors",
    "nb_seats",
    "made_by",
    "vehicle_type",
    "price",
    "transmission",
    "inspect",
];

pub const COLORS: &[&str] = &[
    "white", "black", "grey", "silver", "red", "blue", "green", "yellow", "brown", "orange",
    "beige",
];
pub const FUEL_TYPES: &[&str] = &["diesel", "petrol", "electric", "hybrid", "lpg"];
/// Manufacturer IRI local names (objects of `made_by`).
pub const MANUFACTURERS: &[&str] = &[
    "Renault",
    "Peugeot",
    "Citroen",
    "Volkswagen",
    "Toyota",
    "BMW",
    "TeslaMotors",
    "Ford",
    "Audi",
    "MercedesBenz",
    "Fiat",
    "Honda",
    "Nissan",
    "Kia",
    "Skoda",
    "Volvo",
];
pub const TRANSMISSIONS: &[&str] = &["manual", "automatic"];
pub const VEHICLE_TYPES: &[&str] = &[
    "sedan",
    "hatchback",
    "suv",
    "estate",
    "coupe",
    "convertible",
    "minivan",
    "pickup truck",
];
pub const INSPECTION_STATUSES: &[&str] = &["passed", "failed", "pending"];

const RELEASE_YEARS: (u32, u32) = (1998, 2024);
const MILEAGE: (u32, u32) = (0, 300_000);
const PRICE: (u32, u32) = (1_000, 80_000);
const DOORS: &[u32] = &[3, 5];
const SEATS: &[u32] = &[2, 4, 5, 7];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    seed: u64,
    entity_count: usize,
}

impl GeneratorConfig {
    pub fn new(seed: u64, entity_count: usize) -> Result<Self, IngestError> {
        if entity_count == 0 {
            return Err(IngestError::EmptyDataset);
        }
        Ok(GeneratorConfig { seed, entity_count })
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn entity_count(&self) -> usize {
        self.entity_count
    }
}

pub fn vehicle_predicate(local: &str) -> String {
    format!("{VEHICLE_NS}{local}")
}

pub fn generate_vehicle_dataset(config: &GeneratorConfig) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let width = config.entity_count.to_string().len().max(4);
    let integer = |v: u32| {
        Term::typed_literal(v.to_string(), vocab::XSD_INTEGER).expect("xsd:integer is a valid IRI")
    };

    let mut graph = Graph::new();
    for n in 1..=config.entity_count {
        let subject = Term::iri(format!("{VEHICLE_BASE}v{n:0width$}")).expect("valid subject IRI");
        let objects: [Term; 11] = [
            integer(rng.random_range(RELEASE_YEARS.0..=RELEASE_YEARS.1)),
            integer(rng.random_range(MILEAGE.0..=MILEAGE.1)),
            Term::literal(*pick(&mut rng, FUEL_TYPES)),
            Term::literal(*pick(&mut rng, COLORS)),
            integer(*pick(&mut rng, DOORS)),
            integer(*pick(&mut rng, SEATS)),
            Term::iri(format!("{VEHICLE_NS}{}", pick(&mut rng, MANUFACTURERS)))
                .expect("valid manufacturer IRI"),
            Term::literal(*pick(&mut rng, VEHICLE_TYPES)),
            Term::literal(format!("{}€", rng.random_range(PRICE.0..=PRICE.1))),
            Term::literal(*pick(&mut rng, TRANSMISSIONS)),
            Term::literal(*pick(&mut rng, INSPECTION_STATUSES)),
        ];
        for (local, object) in SCHEMA.iter().zip(objects) {
            let predicate = Term::iri(vehicle_predicate(local)).expect("valid predicate IRI");
            graph.insert(
                Triple::new(subject.clone(), predicate, object).expect("well-formed triple"),
            );
        }
    }
    graph
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, pool: &'a [T]) -> &'a T {
    &pool[rng.random_range(0..pool.len() as u32) as usize]
}

/// Every textual value the generator can emit, as it appears before
/// tokenization.
pub fn categorical_values() -> impl Iterator<Item = &'static str> {
    COLORS
        .iter()
        .chain(FUEL_TYPES)
        .chain(MANUFACTURERS)
        .chain(TRANSMISSIONS)
        .chain(VEHICLE_TYPES)
        .chain(INSPECTION_STATUSES)
        .copied()
}
