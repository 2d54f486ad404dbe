use std::fmt;

use super::{vocab, ModelError};

/// An RDF term: IRI, blank node or literal.
///
/// Construct through [`Term::iri`], [`Term::blank`] and the literal
/// constructors; they enforce the lexical constraints N-Triples places on
/// each kind, which is what keeps [`canonical_term_string`] injective.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Iri(String),
    BlankNode(String),
    Literal(Literal),
}

/// A literal value. At most one of `datatype` and `language` is set.
/// `xsd:string` is the implicit datatype of a plain literal and is never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    lexical: String,
    datatype: Option<String>,
    language: Option<String>,
}

impl Literal {
    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> Option<&str> {
        self.datatype.as_deref()
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }
}

impl Term {
    /// An absolute IRI. Rejects empty strings, missing schemes and the
    /// characters N-Triples forbids inside `<...>`.
    pub fn iri(value: impl Into<String>) -> Result<Self, ModelError> {
        let value = value.into();
        validate_iri(&value)?;
        Ok(Term::Iri(value))
    }

    pub fn blank(label: impl Into<String>) -> Result<Self, ModelError> {
        let label = label.into();
        if !is_valid_blank_label(&label) {
            return Err(ModelError::InvalidBlankNode(label));
        }
        Ok(Term::BlankNode(label))
    }

    /// A plain literal (implicit `xsd:string`).
    pub fn literal(lexical: impl Into<String>) -> Self {
        Term::Literal(Literal {
            lexical: lexical.into(),
            datatype: None,
            language: None,
        })
    }

    pub fn typed_literal(
        lexical: impl Into<String>,
        datatype: impl Into<String>,
    ) -> Result<Self, ModelError> {
        let datatype = datatype.into();
        validate_iri(&datatype)?;
        if datatype == vocab::RDF_LANG_STRING {
            return Err(ModelError::LangStringWithoutTag);
        }
        let datatype = (datatype != vocab::XSD_STRING).then_some(datatype);
        Ok(Term::Literal(Literal {
            lexical: lexical.into(),
            datatype,
            language: None,
        }))
    }

    pub fn lang_literal(
        lexical: impl Into<String>,
        language: impl Into<String>,
    ) -> Result<Self, ModelError> {
        let language = language.into();
        if !is_valid_language_tag(&language) {
            return Err(ModelError::InvalidLanguageTag(language));
        }
        Ok(Term::Literal(Literal {
            lexical: lexical.into(),
            datatype: None,
            language: Some(language),
        }))
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Term::Literal(_))
    }

    /// The IRI string, blank node label, or literal lexical form.
    pub fn value(&self) -> &str {
        match self {
            Term::Iri(v) | Term::BlankNode(v) => v,
            Term::Literal(lit) => &lit.lexical,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(iri) => write!(f, "<{iri}>"),
            Term::BlankNode(label) => write!(f, "_:{label}"),
            Term::Literal(lit) => {
                f.write_str("\"")?;
                write_escaped_lexical(f, &lit.lexical)?;
                f.write_str("\"")?;
                if let Some(dt) = &lit.datatype {
                    write!(f, "^^<{dt}>")
                } else if let Some(lang) = &lit.language {
                    write!(f, "@{lang}")
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// Renders a term in its N-Triples form. Equal terms give equal strings and
/// distinct terms give distinct strings.
pub fn canonical_term_string(term: &Term) -> String {
    term.to_string()
}

fn write_escaped_lexical(f: &mut impl fmt::Write, lexical: &str) -> fmt::Result {
    for ch in lexical.chars() {
        match ch {
            '"' => f.write_str("\\\"")?,
            '\\' => f.write_str("\\\\")?,
            '\n' => f.write_str("\\n")?,
            '\r' => f.write_str("\\r")?,
            '\t' => f.write_str("\\t")?,
            '\u{08}' => f.write_str("\\b")?,
            '\u{0C}' => f.write_str("\\f")?,
            c if c < '\u{20}' || c == '\u{7F}' => write!(f, "\\u{:04X}", c as u32)?,
            c => f.write_char(c)?,
        }
    }
    Ok(())
}

fn validate_iri(value: &str) -> Result<(), ModelError> {
    if value.is_empty() {
        return Err(ModelError::EmptyIri);
    }
    if let Some(bad) = value.chars().find(|&c| is_forbidden_iri_char(c)) {
        return Err(ModelError::InvalidIri {
            iri: value.to_owned(),
            reason: format!("forbidden character {bad:?}"),
        });
    }
    let scheme_ok = value.split_once(':').is_some_and(|(scheme, _)| {
        let mut chars = scheme.chars();
        chars.next().is_some_and(|c| c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
    });
    if !scheme_ok {
        return Err(ModelError::InvalidIri {
            iri: value.to_owned(),
            reason: "not absolute (missing scheme)".into(),
        });
    }
    Ok(())
}

pub(crate) fn is_forbidden_iri_char(c: char) -> bool {
    c <= '\u{20}' || matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\')
}

fn is_label_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | '\u{B7}')
}

pub(crate) fn is_valid_blank_label(label: &str) -> bool {
    let mut chars = label.chars();
    let Some(first) = chars.next() else {
        return false;
    };
    (first.is_alphanumeric() || first == '_')
        && label.chars().all(is_label_char)
        && !label.ends_with('.')
}

pub(crate) fn is_valid_language_tag(tag: &str) -> bool {
    let mut parts = tag.split('-');
    let primary_ok = parts
        .next()
        .is_some_and(|p| !p.is_empty() && p.chars().all(|c| c.is_ascii_alphabetic()));
    primary_ok && parts.all(|p| !p.is_empty() && p.chars().all(|c| c.is_ascii_alphanumeric()))
}
