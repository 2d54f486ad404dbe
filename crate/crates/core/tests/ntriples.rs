mod common;

use common::{check_golden_bytes, graph_strategy, triple_strategy};
use proptest::prelude::*;
use rdfsim_core::fixtures;
use rdfsim_core::ingest::{
    generate_vehicle_dataset, parse_ntriples, parse_ntriples_bytes, serialize_ntriples,
    GeneratorConfig, IngestError, Severity, SCHEMA,
};
use rdfsim_core::rdf::extract_entities;

proptest! {
    #[test]
    fn serialize_then_parse_is_identity(g in graph_strategy()) {
        let text = serialize_ntriples(&g);
        let (back, diags) = parse_ntriples(&text);
        prop_assert!(diags.is_empty(), "{:?}", diags);
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_ntriples(&back), text);
    }

    #[test]
    fn diagnostics_point_into_the_document(
        lines in prop::collection::vec(
            prop_oneof![
                triple_strategy().prop_map(|t| format!("{} {} {} .",
                    t.subject(), t.predicate(), t.object())),
                "[ -~]{0,30}",
            ],
            0..20,
        )
    ) {
        let doc = lines.join("\n");
        let (_, diags) = parse_ntriples(&doc);
        let line_count = doc.split('\n').count();
        for d in &diags {
            prop_assert!(d.line_number >= 1 && d.line_number <= line_count);
        }
    }

    #[test]
    fn good_lines_load_despite_bad_neighbours(
        good in prop::collection::vec(triple_strategy(), 1..8),
        junk in "[a-z <>\"]{1,20}",
    ) {
        let mut lines: Vec<String> = good.iter()
            .map(|t| format!("{} {} {} .", t.subject(), t.predicate(), t.object()))
            .collect();
        lines.insert(lines.len() / 2, format!("<broken {junk}"));
        let (g, _) = parse_ntriples(&lines.join("\n"));
        for t in &good {
            prop_assert!(g.contains(t));
        }
    }
}

#[test]
fn documented_examples() {
    let (g, d) = parse_ntriples(
        r#"<http://v/m1> <http://v/price> "56750"^^<http://www.w3.org/2001/XMLSchema#decimal> ."#,
    );
    assert_eq!((g.len(), d.len()), (1, 0));

    let (g, d) = parse_ntriples("<http://v/m1> <http://v/price> \"1\"");
    assert_eq!(g.len(), 0);
    assert_eq!(d.len(), 1);
    assert_eq!((d[0].line_number, d[0].severity), (1, Severity::Error));

    assert_eq!(serialize_ntriples(&Default::default()), "");

    let (g, _) = parse_ntriples("<http://v/a> <http://v/p> \"a\\nb\" .");
    assert_eq!(
        serialize_ntriples(&g),
        "<http://v/a> <http://v/p> \"a\\nb\" .\n"
    );
}

#[test]
fn duplicates_and_comments() {
    let doc = "# header\n\
               <http://v/a> <http://v/p> \"x\" . # trailing\n\
               \n\
               <http://v/a>   <http://v/p>\t\"x\" .\n";
    let (g, d) = parse_ntriples(doc);
    assert_eq!(g.len(), 1);
    assert_eq!(d.len(), 1);
    assert_eq!((d[0].line_number, d[0].severity), (4, Severity::Warning));
}

#[test]
fn invalid_utf8_is_a_document_error() {
    let bytes = b"<http://v/a> <http://v/p> \"x\" .\n<http://v/a> <http://v/p> \"\xff\" .\n";
    assert_eq!(
        parse_ntriples_bytes(bytes).unwrap_err(),
        IngestError::InvalidUtf8 { line: 2 }
    );
}

#[test]
fn tesla_fixture_round_trips_sorted() {
    let g = fixtures::tesla_graph();
    assert_eq!(g.len(), 6);
    let text = serialize_ntriples(&g);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
    assert_eq!(parse_ntriples(&text).0, g);
}

#[test]
fn generator_shape_and_determinism() {
    let one = generate_vehicle_dataset(&GeneratorConfig::new(42, 1).unwrap());
    assert_eq!(one.len(), SCHEMA.len());
    assert_eq!(extract_entities(&one).len(), 1);

    let cfg = GeneratorConfig::new(42, 200).unwrap();
    let a = serialize_ntriples(&generate_vehicle_dataset(&cfg));
    let b = serialize_ntriples(&generate_vehicle_dataset(&cfg));
    assert_eq!(a, b);
    let entities = extract_entities(&parse_ntriples(&a).0);
    assert_eq!(entities.len(), 200);
    assert!(entities.iter().all(|e| e.slot_count() == SCHEMA.len()));

    let other = serialize_ntriples(&generate_vehicle_dataset(
        &GeneratorConfig::new(43, 200).unwrap(),
    ));
    assert_ne!(a, other);
    assert!(GeneratorConfig::new(1, 0).is_err());
}

#[test]
fn generated_seed_42_count_10_matches_golden() {
    let g = generate_vehicle_dataset(&GeneratorConfig::new(42, 10).unwrap());
    check_golden_bytes("seed42-count10.nt", serialize_ntriples(&g).as_bytes()).unwrap();
}
