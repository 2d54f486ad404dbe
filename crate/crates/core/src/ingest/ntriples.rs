//! [N-Triples](https://www.w3.org/TR/n-triples/) reader and canonical writer.
//!
//! The reader is line-oriented and recovers from errors: a malformed line is
//! reported as a diagnostic and skipped, every other line still loads.

use std::fmt;

use serde::Serialize;

use super::IngestError;
use crate::rdf::{
    canonical_term_string, is_forbidden_iri_char, is_valid_blank_label, is_valid_language_tag,
    Graph, Term, Triple,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

/// A problem found on one line of the input (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParseDiagnostic {
    pub line_number: usize,
    pub message: String,
    pub severity: Severity,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "line {}: {level}: {}", self.line_number, self.message)
    }
}

/// Parses raw bytes; the only document-level failure is invalid UTF-8.
pub fn parse_ntriples_bytes(bytes: &[u8]) -> Result<(Graph, Vec<ParseDiagnostic>), IngestError> {
    let text = std::str::from_utf8(bytes).map_err(|e| IngestError::InvalidUtf8 {
        line: bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count()
            + 1,
    })?;
    Ok(parse_ntriples(text))
}

pub fn parse_ntriples(document: &str) -> (Graph, Vec<ParseDiagnostic>) {
    let mut graph = Graph::new();
    let mut diagnostics = Vec::new();
    for (idx, raw) in document.split('\n').enumerate() {
        let line_number = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        match parse_line(line) {
            Ok(None) => {}
            Ok(Some(triple)) => {
                if !graph.insert(triple) {
                    diagnostics.push(ParseDiagnostic {
                        line_number,
                        message: "duplicate triple ignored".into(),
                        severity: Severity::Warning,
                    });
                }
            }
            Err(message) => diagnostics.push(ParseDiagnostic {
                line_number,
                message,
                severity: Severity::Error,
            }),
        }
    }
    (graph, diagnostics)
}

/// Canonical N-Triples: one triple per line, sorted by the canonical
/// strings of subject, predicate and object.
pub fn serialize_ntriples(graph: &Graph) -> String {
    let mut lines: Vec<(String, String, String)> = graph
        .iter()
        .map(|t| {
            (
                canonical_term_string(t.subject()),
                canonical_term_string(t.predicate()),
                canonical_term_string(t.object()),
            )
        })
        .collect();
    lines.sort();
    let mut out = String::new();
    for (s, p, o) in lines {
        out.push_str(&s);
        out.push(' ');
        out.push_str(&p);
        out.push(' ');
        out.push_str(&o);
        out.push_str(" .\n");
    }
    out
}

type LineResult<T> = Result<T, String>;

fn parse_line(line: &str) -> LineResult<Option<Triple>> {
    let mut cur = Cursor::new(line);
    cur.skip_ws();
    if cur.at_end() || cur.peek() == Some('#') {
        return Ok(None);
    }
    let subject = match cur.peek() {
        Some('<') => cur.iri()?,
        Some('_') => cur.blank_node()?,
        _ => return Err(cur.unexpected("subject (IRI or blank node)")),
    };
    cur.skip_ws();
    let predicate = match cur.peek() {
        Some('<') => cur.iri()?,
        _ => return Err(cur.unexpected("predicate IRI")),
    };
    cur.skip_ws();
    let object = match cur.peek() {
        Some('<') => cur.iri()?,
        Some('_') => cur.blank_node()?,
        Some('"') => cur.literal()?,
        _ => return Err(cur.unexpected("object (IRI, blank node or literal)")),
    };
    cur.skip_ws();
    if cur.peek() != Some('.') {
        return Err(cur.unexpected("'.' terminating the triple"));
    }
    cur.bump();
    cur.skip_ws();
    if !cur.at_end() && cur.peek() != Some('#') {
        return Err(cur.unexpected("end of line or comment"));
    }
    Triple::new(subject, predicate, object)
        .map(Some)
        .map_err(|e| e.to_string())
}

struct Cursor<'a> {
    line: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(line: &'a str) -> Self {
        Cursor { line, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.line[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.line.len()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t')) {
            self.pos += 1;
        }
    }

    fn column(&self) -> usize {
        self.line[..self.pos].chars().count() + 1
    }

    fn unexpected(&self, expected: &str) -> String {
        match self.peek() {
            Some(c) => format!(
                "expected {expected} at column {}, found {c:?}",
                self.column()
            ),
            None => format!(
                "expected {expected} at column {}, found end of line",
                self.column()
            ),
        }
    }

    fn expect(&mut self, ch: char) -> LineResult<()> {
        if self.peek() == Some(ch) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("{ch:?}")))
        }
    }

    fn iri_ref(&mut self) -> LineResult<String> {
        self.expect('<')?;
        let mut value = String::new();
        loop {
            match self.bump() {
                None => return Err("unterminated IRI".into()),
                Some('>') => break,
                Some('\\') => {
                    let c = match self.bump() {
                        Some('u') => self.hex_escape(4)?,
                        Some('U') => self.hex_escape(8)?,
                        _ => {
                            return Err(format!(
                                "invalid escape in IRI at column {}",
                                self.column()
                            ))
                        }
                    };
                    value.push(c);
                }
                Some(c) if is_forbidden_iri_char(c) => {
                    return Err(format!("character {c:?} not allowed in IRI"));
                }
                Some(c) => value.push(c),
            }
        }
        Ok(value)
    }

    fn iri(&mut self) -> LineResult<Term> {
        let value = self.iri_ref()?;
        Term::iri(value).map_err(|e| e.to_string())
    }

    fn blank_node(&mut self) -> LineResult<Term> {
        if !self.rest().starts_with("_:") {
            return Err(self.unexpected("blank node '_:'"));
        }
        self.pos += 2;
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | '\u{B7}'))
        {
            self.bump();
        }
        // a trailing '.' belongs to the statement terminator
        while self.pos > start && self.line[..self.pos].ends_with('.') {
            self.pos -= 1;
        }
        let label = &self.line[start..self.pos];
        if !is_valid_blank_label(label) {
            return Err(format!("invalid blank node label {label:?}"));
        }
        Term::blank(label).map_err(|e| e.to_string())
    }

    fn literal(&mut self) -> LineResult<Term> {
        self.expect('"')?;
        let mut lexical = String::new();
        loop {
            match self.bump() {
                None => return Err("unterminated string literal".into()),
                Some('"') => break,
                Some('\\') => {
                    let c = match self.bump() {
                        Some('t') => '\t',
                        Some('b') => '\u{08}',
                        Some('n') => '\n',
                        Some('r') => '\r',
                        Some('f') => '\u{0C}',
                        Some('"') => '"',
                        Some('\'') => '\'',
                        Some('\\') => '\\',
                        Some('u') => self.hex_escape(4)?,
                        Some('U') => self.hex_escape(8)?,
                        _ => {
                            return Err(format!(
                                "invalid escape in literal at column {}",
                                self.column()
                            ))
                        }
                    };
                    lexical.push(c);
                }
                Some(c) => lexical.push(c),
            }
        }
        if self.rest().starts_with("^^") {
            self.pos += 2;
            let datatype = self.iri_ref()?;
            Term::typed_literal(lexical, datatype).map_err(|e| e.to_string())
        } else if self.peek() == Some('@') {
            self.bump();
            let start = self.pos;
            while self
                .peek()
                .is_some_and(|c| c.is_ascii_alphanumeric() || c == '-')
            {
                self.bump();
            }
            let tag = &self.line[start..self.pos];
            if !is_valid_language_tag(tag) {
                return Err(format!("invalid language tag {tag:?}"));
            }
            Term::lang_literal(lexical, tag).map_err(|e| e.to_string())
        } else {
            Ok(Term::literal(lexical))
        }
    }

    fn hex_escape(&mut self, len: usize) -> LineResult<char> {
        let digits = self
            .rest()
            .get(..len)
            .filter(|d| d.chars().all(|c| c.is_ascii_hexdigit()));
        let Some(digits) = digits else {
            return Err(format!("invalid \\u escape at column {}", self.column()));
        };
        self.pos += len;
        u32::from_str_radix(digits, 16)
            .ok()
            .and_then(char::from_u32)
            .ok_or_else(|| format!("escape \\u{digits} is not a Unicode scalar value"))
    }
}
