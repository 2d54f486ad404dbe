use indexmap::IndexSet;

use super::{ModelError, Term};

/// A single `<subject> <predicate> <object>` statement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    subject: Term,
    predicate: Term,
    object: Term,
}

impl Triple {
    pub fn new(subject: Term, predicate: Term, object: Term) -> Result<Self, ModelError> {
        if subject.is_literal() {
            return Err(ModelError::LiteralSubject);
        }
        if !matches!(predicate, Term::Iri(_)) {
            return Err(ModelError::NonIriPredicate);
        }
        Ok(Triple {
            subject,
            predicate,
            object,
        })
    }

    pub fn subject(&self) -> &Term {
        &self.subject
    }

    pub fn predicate(&self) -> &Term {
        &self.predicate
    }

    /// The predicate IRI as a string.
    pub fn predicate_iri(&self) -> &str {
        self.predicate.value()
    }

    pub fn object(&self) -> &Term {
        &self.object
    }
}

/// A set of triples. Iteration follows insertion order, which keeps
/// everything derived from a parsed document deterministic.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    triples: IndexSet<Triple>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts a triple; returns `false` if it was already present.
    pub fn insert(&mut self, triple: Triple) -> bool {
        self.triples.insert(triple)
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.triples.contains(triple)
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }
}

/// Graphs compare as sets: insertion order is irrelevant.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.iter().all(|t| other.contains(t))
    }
}

impl Eq for Graph {}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        Graph {
            triples: iter.into_iter().collect(),
        }
    }
}

impl Extend<Triple> for Graph {
    fn extend<I: IntoIterator<Item = Triple>>(&mut self, iter: I) {
        self.triples.extend(iter);
    }
}

impl<'a> IntoIterator for &'a Graph {
    type Item = &'a Triple;
    type IntoIter = indexmap::set::Iter<'a, Triple>;

    fn into_iter(self) -> Self::IntoIter {
        self.triples.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iri(s: &str) -> Term {
        Term::iri(s).unwrap()
    }

    #[test]
    fn triple_positions_are_checked() {
        assert_eq!(
            Triple::new(Term::literal("x"), iri("http://p"), iri("http://o")),
            Err(ModelError::LiteralSubject)
        );
        assert_eq!(
            Triple::new(iri("http://s"), Term::blank("b").unwrap(), iri("http://o")),
            Err(ModelError::NonIriPredicate)
        );
    }

    #[test]
    fn duplicate_insert_is_a_no_op() {
        let t = Triple::new(iri("http://s"), iri("http://p"), Term::literal("o")).unwrap();
        let mut g = Graph::new();
        assert!(g.insert(t.clone()));
        assert!(!g.insert(t));
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn equality_ignores_order() {
        let a = Triple::new(iri("http://s"), iri("http://p"), Term::literal("a")).unwrap();
        let b = Triple::new(iri("http://s"), iri("http://p"), Term::literal("b")).unwrap();
        let g1: Graph = [a.clone(), b.clone()].into_iter().collect();
        let g2: Graph = [b, a].into_iter().collect();
        assert_eq!(g1, g2);
    }
}
