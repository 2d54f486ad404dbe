//! Strategies, random inputs and independent reference implementations
//! shared by the integration tests and the acceptance runner.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};
use std::path::PathBuf;

use proptest::prelude::*;
use rand::seq::IndexedRandom;
use rand::Rng;
use rdfsim_core::profiles::WeightProfile;
use rdfsim_core::rdf::{vocab, EntityDescription, Graph, Term, Triple};

// ---------------------------------------------------------------- terms

pub fn iri_strategy() -> impl Strategy<Value = Term> {
    (
        prop::sample::select(vec!["http", "https", "urn", "tag"]),
        "[a-zA-Z0-9._~%/#:-]{0,12}",
        prop::option::of("[\u{e9}\u{4e2d}\u{1F600}a-z]{1,3}"),
    )
        .prop_map(|(scheme, rest, extra)| {
            Term::iri(format!("{scheme}://x/{rest}{}", extra.unwrap_or_default())).unwrap()
        })
}

pub fn blank_strategy() -> impl Strategy<Value = Term> {
    "[a-zA-Z_][a-zA-Z0-9_-]{0,6}".prop_map(|l| Term::blank(l).unwrap())
}

/// Lexical forms exercising every escape class.
pub fn lexical_strategy() -> impl Strategy<Value = String> {
    prop::collection::vec(
        prop_oneof![
            "[a-z0-9 ]{1,4}",
            prop::sample::select(vec![
                "\"",
                "\\",
                "\n",
                "\r",
                "\t",
                "\u{8}",
                "\u{c}",
                "\u{0}",
                "\u{7f}",
                "\u{1b}",
                "é",
                "€",
                "\u{1F697}",
                "<>",
                "^^",
                "@en",
                " . ",
                "#",
            ])
            .prop_map(str::to_owned),
        ],
        0..6,
    )
    .prop_map(|parts| parts.concat())
}

pub fn literal_strategy() -> impl Strategy<Value = Term> {
    prop_oneof![
        lexical_strategy().prop_map(Term::literal),
        (
            lexical_strategy(),
            prop::sample::select(vec![
                vocab::XSD_INTEGER,
                vocab::XSD_DECIMAL,
                vocab::XSD_DOUBLE,
                vocab::XSD_BOOLEAN,
                vocab::XSD_STRING,
                "http://example.org/dt#custom",
            ])
        )
            .prop_map(|(lex, dt)| Term::typed_literal(lex, dt).unwrap()),
        (lexical_strategy(), "[a-zA-Z]{1,8}(-[a-zA-Z0-9]{1,8}){0,2}")
            .prop_map(|(lex, tag)| Term::lang_literal(lex, tag).unwrap()),
    ]
}

pub fn term_strategy() -> impl Strategy<Value = Term> {
    prop_oneof![iri_strategy(), blank_strategy(), literal_strategy()]
}

pub fn triple_strategy() -> impl Strategy<Value = Triple> {
    (
        prop_oneof![iri_strategy(), blank_strategy()],
        iri_strategy(),
        term_strategy(),
    )
        .prop_map(|(s, p, o)| Triple::new(s, p, o).unwrap())
}

pub fn graph_strategy() -> impl Strategy<Value = Graph> {
    prop::collection::vec(triple_strategy(), 0..24).prop_map(|ts| ts.into_iter().collect())
}

// ---------------------------------------------------------------- entities

pub const TEST_NS: &str = "http://example.org/t#";
pub const PREDICATES: [&str; 8] = [
    "color", "price", "fuel", "doors", "seats", "maker", "body", "gear",
];

/// Words from the fixture vector file plus a few it does not contain.
pub const WORDS: [&str; 24] = [
    "white",
    "black",
    "red",
    "blue",
    "silver",
    "grey",
    "diesel",
    "petrol",
    "electric",
    "hybrid",
    "tesla",
    "bmw",
    "audi",
    "sedan",
    "suv",
    "truck",
    "manual",
    "automatic",
    "passed",
    "failed",
    "zebra",
    "quasar",
    "teal",
    "kumquat",
];

/// An object value as the oracle sees it.
#[derive(Debug, Clone, PartialEq)]
pub enum OValue {
    Num(i64),
    Text(String),
}

impl OValue {
    pub fn to_term(&self) -> Term {
        match self {
            OValue::Num(n) => Term::typed_literal(n.to_string(), vocab::XSD_INTEGER).unwrap(),
            OValue::Text(t) => Term::literal(t.clone()),
        }
    }
}

/// Statements of one entity, deduplicated, predicates as local names.
#[derive(Debug, Clone, PartialEq)]
pub struct OEntity {
    pub subject: String,
    pub pairs: Vec<(String, OValue)>,
}

impl OEntity {
    pub fn to_description(&self) -> EntityDescription {
        EntityDescription::new(
            Term::iri(&self.subject).unwrap(),
            self.pairs
                .iter()
                .map(|(p, v)| (format!("{TEST_NS}{p}"), v.to_term())),
        )
        .unwrap()
    }

    pub fn values(&self, predicate: &str) -> Vec<&OValue> {
        self.pairs
            .iter()
            .filter(|(p, _)| p == predicate)
            .map(|(_, v)| v)
            .collect()
    }

    pub fn predicates(&self) -> BTreeSet<&str> {
        self.pairs.iter().map(|(p, _)| p.as_str()).collect()
    }
}

pub fn random_text(rng: &mut impl Rng) -> String {
    let n = rng.random_range(1..=3u32);
    (0..n)
        .map(|_| *WORDS.choose(rng).unwrap())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn random_value(rng: &mut impl Rng) -> OValue {
    if rng.random_bool(0.4) {
        OValue::Num(rng.random_range(0..20u32) as i64)
    } else {
        OValue::Text(random_text(rng))
    }
}

pub fn random_entity(rng: &mut impl Rng, subject: &str) -> OEntity {
    let n = rng.random_range(1..=7u32);
    let mut pairs: Vec<(String, OValue)> = Vec::new();
    for _ in 0..n {
        let p = PREDICATES.choose(rng).unwrap().to_string();
        let v = random_value(rng);
        if !pairs.iter().any(|(q, w)| *q == p && *w == v) {
            pairs.push((p, v));
        }
    }
    OEntity {
        subject: subject.to_owned(),
        pairs,
    }
}

/// Two entities sharing about half of their statements.
pub fn random_pair(rng: &mut impl Rng) -> (OEntity, OEntity) {
    let a = random_entity(rng, "http://example.org/e/a");
    let mut b = random_entity(rng, "http://example.org/e/b");
    for pair in &a.pairs {
        if rng.random_bool(0.5) && !b.pairs.contains(pair) {
            b.pairs.push(pair.clone());
        }
    }
    (a, b)
}

/// Random profile keyed by full IRIs, plus a boost on bare local names.
pub fn random_profile(rng: &mut impl Rng) -> (WeightProfile, impl Fn(&str) -> f64) {
    let default = rng.random_range(0..=30u32) as f64 / 10.0;
    let factor = 1.0 + rng.random_range(0..=30u32) as f64 / 10.0;
    let mut explicit = HashMap::new();
    let mut boosted = Vec::new();
    for p in PREDICATES {
        match rng.random_range(0..3u32) {
            0 => {
                explicit.insert(p.to_owned(), rng.random_range(0..=50u32) as f64 / 10.0);
            }
            1 => boosted.push(p.to_owned()),
            _ => {}
        }
    }
    let mut profile = WeightProfile::new("random", default).unwrap();
    for (p, w) in &explicit {
        profile = profile.with_weight(format!("{TEST_NS}{p}"), *w).unwrap();
    }
    profile = profile.with_boost(boosted.clone(), factor).unwrap();
    let weight = move |p: &str| match explicit.get(p) {
        Some(&w) => w,
        None if boosted.iter().any(|b| b == p) => default * factor,
        None => default,
    };
    (profile, weight)
}

// ---------------------------------------------------------------- oracles

/// word2vec text parsed without the library: optional `count dim` header,
/// then `word v1 .. vd` per line.
pub fn oracle_vectors(text: &str) -> HashMap<String, Vec<f64>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty()).peekable();
    if let Some(first) = lines.peek() {
        let fields: Vec<&str> = first.split_whitespace().collect();
        if fields.len() == 2 && fields.iter().all(|f| f.parse::<u64>().is_ok()) {
            lines.next();
        }
    }
    lines
        .map(|l| {
            let mut fields = l.split_whitespace();
            let word = fields.next().unwrap().to_lowercase();
            (word, fields.map(|f| f.parse::<f64>().unwrap()).collect())
        })
        .collect()
}

pub fn oracle_token_sim(a: &str, b: &str, vectors: &HashMap<String, Vec<f64>>) -> f64 {
    if a == b {
        return 1.0;
    }
    let (Some(x), Some(y)) = (vectors.get(a), vectors.get(b)) else {
        return 0.0;
    };
    let dot: f64 = x.iter().zip(y).map(|(p, q)| p * q).sum();
    let nx = x.iter().map(|p| p * p).sum::<f64>().sqrt();
    let ny = y.iter().map(|q| q * q).sum::<f64>().sqrt();
    if nx == 0.0 || ny == 0.0 {
        return 0.0;
    }
    (dot / (nx * ny)).clamp(0.0, 1.0)
}

/// Text similarity by a plain double loop over whitespace tokens: for
/// every token of each side the best score against the other side,
/// summed and divided by the total token count.
pub fn oracle_qualitative(a: &str, b: &str, vectors: &HashMap<String, Vec<f64>>) -> f64 {
    let ta: Vec<String> = a.split_whitespace().map(str::to_lowercase).collect();
    let tb: Vec<String> = b.split_whitespace().map(str::to_lowercase).collect();
    if ta.is_empty() && tb.is_empty() {
        return 1.0;
    }
    if ta.is_empty() || tb.is_empty() {
        return 0.0;
    }
    let mut total = 0.0;
    for x in &ta {
        let mut best = 0.0f64;
        for y in &tb {
            best = best.max(oracle_token_sim(x, y, vectors));
        }
        total += best;
    }
    for y in &tb {
        let mut best = 0.0f64;
        for x in &ta {
            best = best.max(oracle_token_sim(x, y, vectors));
        }
        total += best;
    }
    total / (ta.len() + tb.len()) as f64
}

pub fn oracle_value_sim(a: &OValue, b: &OValue, vectors: &HashMap<String, Vec<f64>>) -> f64 {
    match (a, b) {
        (OValue::Num(x), OValue::Num(y)) => 1.0 / (1.0 + (x - y).abs() as f64),
        (OValue::Text(x), OValue::Text(y)) => oracle_qualitative(x, y, vectors),
        _ => 0.0,
    }
}

pub fn oracle_slot_sim(a: &[&OValue], b: &[&OValue], vectors: &HashMap<String, Vec<f64>>) -> f64 {
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    let mut total = 0.0;
    for x in a {
        total += b
            .iter()
            .map(|y| oracle_value_sim(x, y, vectors))
            .fold(0.0, f64::max);
    }
    for y in b {
        total += a
            .iter()
            .map(|x| oracle_value_sim(x, y, vectors))
            .fold(0.0, f64::max);
    }
    total / (a.len() + b.len()) as f64
}

/// Term-by-term weighted mean over the union of predicates.
pub fn oracle_weighted(
    a: &OEntity,
    b: &OEntity,
    weight: impl Fn(&str) -> f64,
    vectors: &HashMap<String, Vec<f64>>,
) -> f64 {
    let preds: BTreeSet<&str> = a.predicates().union(&b.predicates()).copied().collect();
    let mut num = 0.0;
    let mut den = 0.0;
    for p in preds {
        let w = weight(p);
        num += w * oracle_slot_sim(&a.values(p), &b.values(p), vectors);
        den += w;
    }
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// Set-based Jaccard over `(predicate, value)` statements.
pub fn oracle_jaccard(a: &OEntity, b: &OEntity) -> f64 {
    let key = |(p, v): &(String, OValue)| match v {
        OValue::Num(n) => format!("{p}|n|{n}"),
        OValue::Text(t) => format!("{p}|t|{t}"),
    };
    let sa: HashSet<String> = a.pairs.iter().map(key).collect();
    let sb: HashSet<String> = b.pairs.iter().map(key).collect();
    let inter = sa.intersection(&sb).count();
    let union = sa.union(&sb).count();
    if union == 0 {
        1.0
    } else {
        inter as f64 / union as f64
    }
}

// ---------------------------------------------------------------- goldens

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/golden")
}

pub fn blessing() -> bool {
    std::env::var_os("RDFSIM_BLESS").is_some_and(|v| v == "1")
}

/// Compares `actual` with the golden file byte for byte; with
/// `RDFSIM_BLESS=1` rewrites the golden instead.
pub fn check_golden_bytes(name: &str, actual: &[u8]) -> Result<(), String> {
    let path = golden_dir().join(name);
    if blessing() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return Ok(());
    }
    let expected = std::fs::read(&path).map_err(|e| {
        format!(
            "{}: {e} (run with RDFSIM_BLESS=1 to create)",
            path.display()
        )
    })?;
    if expected != actual {
        return Err(format!(
            "{} differs from the computed output",
            path.display()
        ));
    }
    Ok(())
}

/// Compares two CSV documents cell by cell; numeric cells within `tol`.
pub fn csv_close(expected: &str, actual: &str, tol: f64) -> Result<(), String> {
    let rows = |s: &str| -> Vec<Vec<String>> {
        csv::ReaderBuilder::new()
            .has_headers(false)
            .from_reader(s.as_bytes())
            .records()
            .map(|r| r.unwrap().iter().map(str::to_owned).collect())
            .collect()
    };
    let (e, a) = (rows(expected), rows(actual));
    if e.len() != a.len() {
        return Err(format!("row count {} vs {}", e.len(), a.len()));
    }
    for (i, (er, ar)) in e.iter().zip(&a).enumerate() {
        if er.len() != ar.len() {
            return Err(format!("row {i}: {} vs {} cells", er.len(), ar.len()));
        }
        for (x, y) in er.iter().zip(ar) {
            let same = match (x.parse::<f64>(), y.parse::<f64>()) {
                (Ok(p), Ok(q)) => (p - q).abs() <= tol,
                _ => x == y,
            };
            if !same {
                return Err(format!("row {i}: {x} vs {y}"));
            }
        }
    }
    Ok(())
}

/// Like [`check_golden_bytes`] but numeric cells may differ by `tol`.
pub fn check_golden_csv(name: &str, actual: &[u8], tol: f64) -> Result<(), String> {
    let path = golden_dir().join(name);
    if blessing() {
        return check_golden_bytes(name, actual);
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| {
        format!(
            "{}: {e} (run with RDFSIM_BLESS=1 to create)",
            path.display()
        )
    })?;
    csv_close(&expected, std::str::from_utf8(actual).unwrap(), tol)
        .map_err(|e| format!("{}: {e}", path.display()))
}

// ---------------------------------------------------------------- generated data

/// Reads the generator's N-Triples output with plain string handling:
/// integer-typed and `N€` literals are numbers, other literals are text,
/// IRI objects become their fragment split at lower-to-upper case changes.
/// Entities come back sorted by subject.
pub fn oracle_entities_from_nt(doc: &str) -> Vec<OEntity> {
    let mut by_subject: std::collections::BTreeMap<String, Vec<(String, OValue)>> =
        Default::default();
    for line in doc.lines().filter(|l| !l.trim().is_empty()) {
        let (subject, rest) = line[1..].split_once("> <").unwrap();
        let (predicate, object) = rest.split_once("> ").unwrap();
        let object = object.strip_suffix(" .").unwrap();
        let local = predicate.rsplit_once('#').unwrap().1.to_owned();
        let value = if let Some(iri) = object.strip_prefix('<') {
            let frag = iri.trim_end_matches('>').rsplit_once('#').unwrap().1;
            let mut text = String::new();
            let chars: Vec<char> = frag.chars().collect();
            for (i, &c) in chars.iter().enumerate() {
                if i > 0 && c.is_uppercase() && chars[i - 1].is_lowercase() {
                    text.push(' ');
                }
                text.push(c);
            }
            OValue::Text(text)
        } else if let Some((lex, _)) = object.split_once("\"^^<") {
            OValue::Num(lex[1..].parse().unwrap())
        } else {
            let lex = &object[1..object.len() - 1];
            match lex.strip_suffix('€') {
                Some(n) => OValue::Num(n.parse().unwrap()),
                None => OValue::Text(lex.to_owned()),
            }
        };
        by_subject
            .entry(subject.to_owned())
            .or_default()
            .push((local, value));
    }
    by_subject
        .into_iter()
        .map(|(subject, pairs)| OEntity { subject, pairs })
        .collect()
}

/// P11: inspect, mileage, color, doors, seats and maker count double.
pub fn p11_weight(local: &str) -> f64 {
    match local {
        "inspect" | "mileage" | "color" | "nb_doors" | "nb_seats" | "made_by" => 2.0,
        _ => 1.0,
    }
}
