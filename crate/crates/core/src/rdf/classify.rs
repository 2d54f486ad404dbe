use super::{vocab, Term};
use crate::text::split_words;

/// How an object value is compared: numerically or as text.
#[derive(Debug, Clone, PartialEq)]
pub enum ObjectKind {
    /// Non-empty vector of finite numbers.
    Quantitative(Vec<f64>),
    Qualitative(String),
}

impl ObjectKind {
    pub fn is_quantitative(&self) -> bool {
        matches!(self, ObjectKind::Quantitative(_))
    }
}

/// Routes an object term to numeric or textual comparison.
///
/// Numeric: literals with an XSD numeric datatype whose lexical form is a
/// finite decimal number, and plain literals that parse as a decimal after
/// dropping at most one trailing unit or currency token (`"56750€"`,
/// `"120 km"`). Everything else is textual: literal lexical forms as-is,
/// IRIs as their local name split into words, blank nodes as empty text.
pub fn classify_object(term: &Term) -> ObjectKind {
    match term {
        Term::Literal(lit) => {
            let number = match (lit.datatype(), lit.language()) {
                (Some(dt), _) if vocab::is_xsd_numeric(dt) => parse_decimal(lit.lexical().trim()),
                (None, None) => parse_with_unit(lit.lexical()),
                _ => None,
            };
            match number {
                Some(v) => ObjectKind::Quantitative(vec![v]),
                None => ObjectKind::Qualitative(lit.lexical().to_owned()),
            }
        }
        Term::Iri(iri) => ObjectKind::Qualitative(split_words(local_name(iri)).join(" ")),
        Term::BlankNode(_) => ObjectKind::Qualitative(String::new()),
    }
}

/// The fragment of an IRI, or else its last non-empty path segment.
pub fn local_name(iri: &str) -> &str {
    if let Some((_, fragment)) = iri.rsplit_once('#') {
        if !fragment.is_empty() {
            return fragment;
        }
    }
    let trimmed = iri.trim_end_matches(['/', '#']);
    let cut = trimmed
        .rfind(['/', ':'])
        .map(|i| &trimmed[i + 1..])
        .unwrap_or(trimmed);
    if cut.is_empty() {
        iri
    } else {
        cut
    }
}

/// Accepts `[+-]? (digits [. digits?] | . digits) ([eE] [+-]? digits)?` and
/// returns the value if finite.
fn parse_decimal(s: &str) -> Option<f64> {
    let bytes = s.as_bytes();
    let mut i = 0;
    if matches!(bytes.first(), Some(b'+' | b'-')) {
        i += 1;
    }
    let int_start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    let mut digits = i - int_start;
    if i < bytes.len() && bytes[i] == b'.' {
        i += 1;
        let frac_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        digits += i - frac_start;
    }
    if digits == 0 {
        return None;
    }
    if i < bytes.len() && matches!(bytes[i], b'e' | b'E') {
        i += 1;
        if matches!(bytes.get(i), Some(b'+' | b'-')) {
            i += 1;
        }
        let exp_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == exp_start {
            return None;
        }
    }
    if i != bytes.len() {
        return None;
    }
    s.parse::<f64>().ok().filter(|v| v.is_finite())
}

fn parse_with_unit(lexical: &str) -> Option<f64> {
    let s = lexical.trim();
    if let Some(v) = parse_decimal(s) {
        return Some(v);
    }
    // "120 km": a separate trailing token without digits
    if let Some((head, last)) = s.rsplit_once(char::is_whitespace) {
        if !last.chars().any(|c| c.is_ascii_digit()) {
            return parse_decimal(head.trim_end());
        }
    }
    // "56750€": a suffix glued to the number
    let head = s.trim_end_matches(|c: char| !c.is_ascii_digit() && !c.is_whitespace());
    if head.len() < s.len() {
        return parse_decimal(head);
    }
    None
}
