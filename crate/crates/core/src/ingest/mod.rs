//! Dataset input and output: N-Triples files and the synthetic generator.

mod generator;
mod ntriples;

pub use generator::{
    categorical_values, generate_vehicle_dataset, vehicle_predicate, GeneratorConfig, COLORS,
    FUEL_TYPES, INSPECTION_STATUSES, MANUFACTURERS, SCHEMA, TRANSMISSIONS, VEHICLE_BASE,
    VEHICLE_NS, VEHICLE_TYPES,
};
pub use ntriples::{
    parse_ntriples, parse_ntriples_bytes, serialize_ntriples, ParseDiagnostic, Severity,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IngestError {
    #[error("document is not valid UTF-8 (first bad byte on line {line})")]
    InvalidUtf8 { line: usize },
    #[error("entity count must be at least 1")]
    EmptyDataset,
}
