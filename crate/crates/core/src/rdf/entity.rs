use indexmap::IndexMap;

use super::{canonical_term_string, Graph, ModelError, Term, Triple};

/// The star graph of one subject: every predicate it uses, each with the
/// objects it points to, in first-seen order.
#[derive(Debug, Clone, PartialEq)]
pub struct EntityDescription {
    subject: Term,
    slots: IndexMap<String, Vec<Term>>,
}

impl EntityDescription {
    /// Builds a description from `(predicate IRI, object)` pairs. Repeated
    /// pairs collapse, matching graph set semantics.
    pub fn new<P, I>(subject: Term, pairs: I) -> Result<Self, ModelError>
    where
        P: Into<String>,
        I: IntoIterator<Item = (P, Term)>,
    {
        if subject.is_literal() {
            return Err(ModelError::LiteralSubject);
        }
        let mut slots: IndexMap<String, Vec<Term>> = IndexMap::new();
        for (predicate, object) in pairs {
            let predicate = predicate.into();
            if !slots.contains_key(&predicate) {
                // validates the IRI once per predicate
                Term::iri(predicate.as_str())?;
            }
            let values = slots.entry(predicate).or_default();
            if !values.contains(&object) {
                values.push(object);
            }
        }
        if slots.is_empty() {
            return Err(ModelError::EmptyEntity);
        }
        Ok(EntityDescription { subject, slots })
    }

    pub fn subject(&self) -> &Term {
        &self.subject
    }

    /// Plain identifier of the subject: the IRI, or `_:label` for blank nodes.
    pub fn id(&self) -> String {
        match &self.subject {
            Term::Iri(iri) => iri.clone(),
            other => canonical_term_string(other),
        }
    }

    pub fn slots(&self) -> impl Iterator<Item = (&str, &[Term])> {
        self.slots.iter().map(|(p, v)| (p.as_str(), v.as_slice()))
    }

    pub fn predicates(&self) -> impl Iterator<Item = &str> {
        self.slots.keys().map(String::as_str)
    }

    pub fn values(&self, predicate: &str) -> Option<&[Term]> {
        self.slots.get(predicate).map(Vec::as_slice)
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    pub fn triple_count(&self) -> usize {
        self.slots.values().map(Vec::len).sum()
    }

    /// Flattens the description back into triples.
    pub fn to_triples(&self) -> impl Iterator<Item = Triple> + '_ {
        self.slots.iter().flat_map(move |(p, values)| {
            let predicate = Term::Iri(p.clone());
            values.iter().map(move |o| {
                Triple::new(self.subject.clone(), predicate.clone(), o.clone())
                    .expect("entity invariants guarantee a valid triple")
            })
        })
    }
}

/// Groups a graph into one description per distinct subject, sorted by the
/// subject's canonical string.
pub fn extract_entities(graph: &Graph) -> Vec<EntityDescription> {
    let mut by_subject: IndexMap<&Term, IndexMap<String, Vec<Term>>> = IndexMap::new();
    for triple in graph {
        by_subject
            .entry(triple.subject())
            .or_default()
            .entry(triple.predicate_iri().to_owned())
            .or_default()
            .push(triple.object().clone());
    }
    let mut entities: Vec<(String, EntityDescription)> = by_subject
        .into_iter()
        .map(|(subject, slots)| {
            (
                canonical_term_string(subject),
                EntityDescription {
                    subject: subject.clone(),
                    slots,
                },
            )
        })
        .collect();
    entities.sort_by(|a, b| a.0.cmp(&b.0));
    entities.into_iter().map(|(_, e)| e).collect()
}
