pub mod bench;
pub mod embedding;
pub mod fixtures;
pub mod ingest;
pub mod profiles;
pub mod rdf;
pub mod similarity;
mod text;
