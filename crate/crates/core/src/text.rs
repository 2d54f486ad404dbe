//! Word splitting shared by IRI local-name expansion and tokenization.

/// Splits `text` into words on non-alphanumeric characters and camelCase
/// boundaries. Case is preserved.
///
/// A camelCase boundary sits before an uppercase letter that follows a
/// lowercase letter or digit (`teslaMotors`), and before the last capital
/// of an uppercase run that is followed by a lowercase letter (`HTMLParser`).
pub fn split_words(text: &str) -> Vec<&str> {
    let mut words = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut start: Option<usize> = None;

    for (k, &(idx, ch)) in chars.iter().enumerate() {
        if !ch.is_alphanumeric() {
            if let Some(s) = start.take() {
                words.push(&text[s..idx]);
            }
            continue;
        }
        match start {
            None => start = Some(idx),
            Some(s) => {
                let prev = chars[k - 1].1;
                let next = chars.get(k + 1).map(|&(_, c)| c);
                let lower_to_upper =
                    ch.is_uppercase() && (prev.is_lowercase() || prev.is_numeric());
                let acronym_end = ch.is_uppercase()
                    && prev.is_uppercase()
                    && next.is_some_and(|c| c.is_lowercase());
                if lower_to_upper || acronym_end {
                    words.push(&text[s..idx]);
                    start = Some(idx);
                }
            }
        }
    }
    if let Some(s) = start {
        words.push(&text[s..]);
    }
    words
}
