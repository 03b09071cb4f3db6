//! A small BibTeX reader.
//!
//! Supports `@article`, `@inproceedings` and `@book` entries with the fields
//! `author`, `title`, `year` and a nonstandard `cites = {key1, key2}` field
//! listing the entry keys a publication references. Other entry types are
//! skipped with a diagnostic; `@comment` is skipped silently. There is no
//! `@string` expansion, no crossref and no LaTeX decoding: field text is
//! passed through with whitespace collapsed.

use crate::corpus::{AuthorId, CorpusBuilder, Location, Parsed, PublicationId, PublicationRecord};
use crate::error::CorpusError;

const SUPPORTED: [&str; 3] = ["article", "inproceedings", "book"];

pub fn parse_bibtex(input: &str) -> Result<Parsed, CorpusError> {
    let bytes = input.as_bytes();
    let mut builder = CorpusBuilder::new();
    let mut pos = 0;

    while let Some(rel) = input[pos..].find('@') {
        let at = pos + rel;
        let mut cur = at + 1;
        let ty_end = scan_while(bytes, cur, |b| b.is_ascii_alphanumeric() || b == b'_');
        let entry_type = input[cur..ty_end].to_ascii_lowercase();
        cur = skip_ws(bytes, ty_end);
        let open = match bytes.get(cur) {
            Some(b'{') | Some(b'(') => cur,
            _ => {
                // A stray `@` in free text between entries.
                pos = at + 1;
                continue;
            }
        };
        let close = entry_end(bytes, open)?;
        pos = close + 1;

        if entry_type == "comment" {
            continue;
        }
        if !SUPPORTED.contains(&entry_type.as_str()) {
            builder.diagnose(
                Location::Offset(at),
                format!("unsupported entry type `@{entry_type}` skipped"),
            );
            continue;
        }

        match parse_entry(input, open + 1, close) {
            Ok(entry) => add_entry(&mut builder, entry, at)?,
            Err((offset, message)) => {
                builder.diagnose(Location::Offset(offset), format!("{message}; entry skipped"));
            }
        }
    }

    builder.finish()
}

struct Entry<'a> {
    key: &'a str,
    fields: Vec<(String, String)>,
}

fn add_entry(builder: &mut CorpusBuilder, entry: Entry<'_>, at: usize) -> Result<(), CorpusError> {
    let loc = Location::Offset(at);
    let field = |name: &str| {
        entry
            .fields
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    };

    let Some(author_field) = field("author") else {
        builder.diagnose(loc, format!("{}: no author field; skipped", entry.key));
        return Ok(());
    };

    let mut authors = Vec::new();
    for raw in split_authors(author_field) {
        let key = AuthorId::new(normalize_name(&raw));
        builder.display_name(&key, &raw);
        authors.push(key);
    }

    let year = match field("year") {
        None => None,
        Some(y) => match y.trim().parse::<i64>() {
            Ok(y) => Some(y),
            Err(_) => {
                builder.diagnose(loc, format!("{}: year `{y}` is not an integer", entry.key));
                None
            }
        },
    };

    let cites = field("cites")
        .map(|c| {
            c.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(PublicationId::new)
                .collect()
        })
        .unwrap_or_default();

    let rec = PublicationRecord {
        id: PublicationId::new(entry.key),
        title: field("title").unwrap_or_default().to_string(),
        year,
        authors,
        cites,
    };
    builder.push(rec, loc)
}

/// Parses `key, name = value, ...` between `start` and the closing
/// delimiter at `end`.
fn parse_entry(input: &str, start: usize, end: usize) -> Result<Entry<'_>, (usize, String)> {
    let bytes = input.as_bytes();
    let key_end = input[start..end]
        .find(',')
        .map_or(end, |i| start + i);
    let key = input[start..key_end].trim();
    if key.is_empty() {
        return Err((start, "entry has no citation key".into()));
    }

    let mut fields = Vec::new();
    let mut cur = key_end + 1;
    loop {
        cur = skip_ws(bytes, cur);
        if cur >= end {
            break;
        }
        let name_end = scan_while(bytes, cur, |b| {
            b.is_ascii_alphanumeric() || matches!(b, b'_' | b'-' | b':' | b'.')
        });
        if name_end == cur {
            return Err((cur, format!("expected a field name, found `{}`", bytes[cur] as char)));
        }
        let name = input[cur..name_end].to_ascii_lowercase();
        cur = skip_ws(bytes, name_end);
        if bytes.get(cur) != Some(&b'=') || cur >= end {
            return Err((cur, format!("expected `=` after field `{name}`")));
        }
        cur += 1;

        let mut value = String::new();
        loop {
            cur = skip_ws(bytes, cur);
            if cur >= end {
                return Err((cur, format!("missing value for field `{name}`")));
            }
            let (part, next) = match bytes[cur] {
                b'{' => {
                    let close = matching_brace(bytes, cur).ok_or((cur, "unbalanced braces".into()))?;
                    (&input[cur + 1..close], close + 1)
                }
                b'"' => {
                    let close = closing_quote(bytes, cur + 1, end)
                        .ok_or((cur, "unterminated quoted value".to_string()))?;
                    (&input[cur + 1..close], close + 1)
                }
                _ => {
                    let stop = scan_while(bytes, cur, |b| {
                        !b.is_ascii_whitespace() && !matches!(b, b',' | b'#' | b'}' | b')')
                    })
                    .min(end);
                    if stop == cur {
                        return Err((cur, format!("missing value for field `{name}`")));
                    }
                    (&input[cur..stop], stop)
                }
            };
            value.push_str(part);
            cur = skip_ws(bytes, next);
            if bytes.get(cur) == Some(&b'#') && cur < end {
                cur += 1;
            } else {
                break;
            }
        }
        fields.push((name, collapse_ws(&value)));

        cur = skip_ws(bytes, cur);
        if cur >= end {
            break;
        }
        if bytes[cur] != b',' {
            return Err((cur, "expected `,` between fields".into()));
        }
        cur += 1;
    }

    Ok(Entry { key, fields })
}

/// Splits an author list on ` and ` at brace depth zero.
fn split_authors(field: &str) -> Vec<String> {
    let words = split_top_level_ws(field);
    let mut names = Vec::new();
    let mut current: Vec<&str> = Vec::new();
    for w in words {
        if w == "and" {
            if !current.is_empty() {
                names.push(current.join(" "));
                current.clear();
            }
        } else {
            current.push(w);
        }
    }
    if !current.is_empty() {
        names.push(current.join(" "));
    }
    names
}

/// Canonical key for a personal name: `Family, Given`.
///
/// Names already written with a comma keep their order; `Given Family`
/// takes the last word as the family name. Single-word names are kept as is.
pub fn normalize_name(name: &str) -> String {
    let name = collapse_ws(name);
    if name.contains(',') {
        return name
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect::<Vec<_>>()
            .join(", ");
    }
    let words = split_top_level_ws(&name);
    match words.split_last() {
        None => String::new(),
        Some((family, [])) => family.to_string(),
        Some((family, given)) => format!("{family}, {}", given.join(" ")),
    }
}

fn split_top_level_ws(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = None;
    for (i, c) in s.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if c.is_whitespace() && depth == 0 {
            if let Some(st) = start.take() {
                out.push(&s[st..i]);
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push(&s[st..]);
    }
    out
}

fn collapse_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn skip_ws(bytes: &[u8], pos: usize) -> usize {
    scan_while(bytes, pos, |b| b.is_ascii_whitespace())
}

fn scan_while(bytes: &[u8], mut pos: usize, pred: impl Fn(u8) -> bool) -> usize {
    while pos < bytes.len() && pred(bytes[pos]) {
        pos += 1;
    }
    pos
}

fn matching_brace(bytes: &[u8], open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, &b) in bytes.iter().enumerate().skip(open) {
        match b {
            b'{' => depth += 1,
            b'}' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn closing_quote(bytes: &[u8], from: usize, end: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, &b) in bytes.iter().enumerate().take(end).skip(from) {
        match b {
            b'{' => depth += 1,
            b'}' => depth = depth.saturating_sub(1),
            b'"' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// Position of the delimiter closing the entry opened at `open`.
fn entry_end(bytes: &[u8], open: usize) -> Result<usize, CorpusError> {
    let unbalanced = || CorpusError::Syntax {
        offset: open,
        message: "unbalanced braces in entry".into(),
    };
    if bytes[open] == b'{' {
        return matching_brace(bytes, open).ok_or_else(unbalanced);
    }
    let mut depth = 0usize;
    for (i, &b) in bytes.iter().enumerate().skip(open + 1) {
        match b {
            b'{' => depth += 1,
            b'}' => depth = depth.checked_sub(1).ok_or_else(unbalanced)?,
            b')' if depth == 0 => return Ok(i),
            _ => {}
        }
    }
    Err(unbalanced())
}
