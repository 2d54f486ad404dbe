mod common;

use common::{graph_strategy, term_strategy};
use proptest::prelude::*;
use rdfsim_core::rdf::{
    canonical_term_string, classify_object, extract_entities, local_name, vocab, Graph, ObjectKind,
    Term, Triple,
};

proptest! {
    #[test]
    fn canonical_strings_are_injective(a in term_strategy(), b in term_strategy()) {
        prop_assert_eq!(a == b, canonical_term_string(&a) == canonical_term_string(&b));
    }

    #[test]
    fn classification_is_total(t in term_strategy()) {
        match classify_object(&t) {
            ObjectKind::Quantitative(xs) => {
                prop_assert!(!xs.is_empty());
                prop_assert!(xs.iter().all(|x| x.is_finite()));
                prop_assert!(t.is_literal());
            }
            ObjectKind::Qualitative(_) => {}
        }
    }

    #[test]
    fn entities_reflatten_to_the_graph(g in graph_strategy()) {
        let entities = extract_entities(&g);
        let rebuilt: Graph = entities.iter().flat_map(|e| e.to_triples().collect::<Vec<_>>()).collect();
        prop_assert_eq!(&rebuilt, &g);
        prop_assert_eq!(entities.iter().map(|e| e.triple_count()).sum::<usize>(), g.len());
        let ids: Vec<String> = entities.iter().map(|e| canonical_term_string(e.subject())).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(ids, sorted);
    }
}

#[test]
fn literal_forms() {
    let plain = Term::literal("white");
    assert_eq!(
        Term::typed_literal("white", vocab::XSD_STRING).unwrap(),
        plain
    );
    assert!(Term::typed_literal("x", vocab::RDF_LANG_STRING).is_err());
    assert!(Term::lang_literal("x", "").is_err());
    assert_eq!(canonical_term_string(&Term::literal("a\nb")), r#""a\nb""#);
    assert_eq!(
        canonical_term_string(&Term::lang_literal("Tesla Motors", "en").unwrap()),
        r#""Tesla Motors"@en"#
    );
}

#[test]
fn triple_positions_are_checked() {
    let iri = || Term::iri("http://x/a").unwrap();
    assert!(Triple::new(Term::literal("s"), iri(), iri()).is_err());
    assert!(Triple::new(iri(), Term::blank("b").unwrap(), iri()).is_err());
    assert!(Triple::new(Term::blank("b").unwrap(), iri(), Term::literal("o")).is_ok());
    assert!(Term::iri("no-scheme").is_err());
    assert!(Term::iri("http://x/a b").is_err());
}

#[test]
fn classification_examples() {
    let int = Term::typed_literal("145000", vocab::XSD_INTEGER).unwrap();
    assert_eq!(
        classify_object(&int),
        ObjectKind::Quantitative(vec![145000.0])
    );
    assert_eq!(
        classify_object(&Term::literal("56750€")),
        ObjectKind::Quantitative(vec![56750.0])
    );
    assert_eq!(
        classify_object(&Term::literal("white")),
        ObjectKind::Qualitative("white".into())
    );
    let bad = Term::typed_literal("abc", vocab::XSD_INTEGER).unwrap();
    assert!(!classify_object(&bad).is_quantitative());
    let maker = Term::iri("http://example.org/vo#TeslaMotors").unwrap();
    match classify_object(&maker) {
        ObjectKind::Qualitative(text) => assert_eq!(text.to_lowercase(), "tesla motors"),
        other => panic!("{other:?}"),
    }
    assert_eq!(local_name("http://example.org/vo#price"), "price");
    assert_eq!(local_name("http://example.org/vehicle/v0001"), "v0001");
}
