//! RDF data model: terms, triples, graphs and per-subject entity descriptions.

mod classify;
mod entity;
mod graph;
mod term;

pub use classify::{classify_object, local_name, ObjectKind};
pub use entity::{extract_entities, EntityDescription};
pub use graph::{Graph, Triple};
pub use term::{canonical_term_string, Literal, Term};

pub(crate) use term::{is_forbidden_iri_char, is_valid_blank_label, is_valid_language_tag};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("IRI must not be empty")]
    EmptyIri,
    #[error("invalid IRI <{iri}>: {reason}")]
    InvalidIri { iri: String, reason: String },
    #[error("invalid blank node label {0:?}")]
    InvalidBlankNode(String),
    #[error("invalid language tag {0:?}")]
    InvalidLanguageTag(String),
    #[error("rdf:langString literals require a language tag")]
    LangStringWithoutTag,
    #[error("triple subject must be an IRI or blank node")]
    LiteralSubject,
    #[error("triple predicate must be an IRI")]
    NonIriPredicate,
    #[error("entity description has no slots")]
    EmptyEntity,
}

/// Well-known vocabulary IRIs.
pub mod vocab {
    pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";
    pub const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
    pub const XSD_INTEGER: &str = "http://www.w3.org/2001/XMLSchema#integer";
    pub const XSD_DECIMAL: &str = "http://www.w3.org/2001/XMLSchema#decimal";
    pub const XSD_DOUBLE: &str = "http://www.w3.org/2001/XMLSchema#double";
    pub const XSD_BOOLEAN: &str = "http://www.w3.org/2001/XMLSchema#boolean";
    pub const XSD_DATE: &str = "http://www.w3.org/2001/XMLSchema#date";
    pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
    pub const RDF_LANG_STRING: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

    /// Local names of the XSD numeric datatypes, primitive and derived.
    pub const XSD_NUMERIC_TYPES: &[&str] = &[
        "integer",
        "decimal",
        "float",
        "double",
        "long",
        "int",
        "short",
        "byte",
        "nonNegativeInteger",
        "nonPositiveInteger",
        "positiveInteger",
        "negativeInteger",
        "unsignedLong",
        "unsignedInt",
        "unsignedShort",
        "unsignedByte",
    ];

    pub fn is_xsd_numeric(datatype: &str) -> bool {
        datatype
            .strip_prefix(XSD)
            .is_some_and(|local| XSD_NUMERIC_TYPES.contains(&local))
    }
}
