//! Publication records and the validated corpus built from them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::CorpusError;

/// Canonical author key. Identity and ordering are by the key string only.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AuthorId(Arc<str>);

impl AuthorId {
    pub fn new(key: impl AsRef<str>) -> Self {
        AuthorId(Arc::from(key.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for AuthorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&*self.0, f)
    }
}

impl fmt::Display for AuthorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for AuthorId {
    fn from(s: &str) -> Self {
        AuthorId::new(s)
    }
}

impl From<String> for AuthorId {
    fn from(s: String) -> Self {
        AuthorId(Arc::from(s))
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PublicationId(Arc<str>);

impl PublicationId {
    pub fn new(id: impl AsRef<str>) -> Self {
        PublicationId(Arc::from(id.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for PublicationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&*self.0, f)
    }
}

impl fmt::Display for PublicationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for PublicationId {
    fn from(s: &str) -> Self {
        PublicationId::new(s)
    }
}

/// One published work.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PublicationRecord {
    pub id: PublicationId,
    pub title: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub year: Option<i64>,
    pub authors: Vec<AuthorId>,
    #[serde(default)]
    pub cites: Vec<PublicationId>,
}

impl PublicationRecord {
    pub fn new<A, C>(id: &str, authors: A, cites: C) -> Self
    where
        A: IntoIterator,
        A::Item: Into<AuthorId>,
        C: IntoIterator,
        C::Item: AsRef<str>,
    {
        PublicationRecord {
            id: PublicationId::new(id),
            title: String::new(),
            year: None,
            authors: authors.into_iter().map(Into::into).collect(),
            cites: cites.into_iter().map(PublicationId::new).collect(),
        }
    }
}

/// Where in the input a diagnostic originated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Location {
    /// 1-based line number.
    Line(usize),
    /// Byte offset into the input.
    Offset(usize),
    /// 0-based index of a record passed programmatically.
    Record(usize),
    Corpus,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Line(n) => write!(f, "line {n}"),
            Location::Offset(n) => write!(f, "byte {n}"),
            Location::Record(n) => write!(f, "record {n}"),
            Location::Corpus => f.write_str("corpus"),
        }
    }
}

/// A non-fatal problem found while reading a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub location: Location,
    pub message: String,
}

impl Diagnostic {
    pub fn new(location: Location, message: impl Into<String>) -> Self {
        Diagnostic {
            location,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

/// A successfully validated corpus plus everything that was repaired or
/// skipped on the way.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub corpus: Corpus,
    pub diagnostics: Vec<Diagnostic>,
}

/// A validated set of publications and the author universe they induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    publications: BTreeMap<PublicationId, PublicationRecord>,
    published: BTreeSet<AuthorId>,
    display_names: BTreeMap<AuthorId, String>,
    by_author: BTreeMap<AuthorId, Vec<PublicationId>>,
    // cited publication -> citing publications, resolvable references only
    cited_by: BTreeMap<PublicationId, BTreeSet<PublicationId>>,
}

impl Corpus {
    /// Validates programmatically constructed records. Diagnostics are
    /// located by record index.
    pub fn from_records<I>(records: I) -> Result<Parsed, CorpusError>
    where
        I: IntoIterator<Item = PublicationRecord>,
    {
        let mut builder = CorpusBuilder::new();
        for (i, rec) in records.into_iter().enumerate() {
            builder.push(rec, Location::Record(i))?;
        }
        builder.finish()
    }

    pub fn publications(&self) -> impl Iterator<Item = &PublicationRecord> + '_ {
        self.publications.values()
    }

    pub fn publication(&self, id: &PublicationId) -> Option<&PublicationRecord> {
        self.publications.get(id)
    }

    pub fn publication_count(&self) -> usize {
        self.publications.len()
    }

    /// Every author appearing on at least one publication.
    pub fn published(&self) -> &BTreeSet<AuthorId> {
        &self.published
    }

    pub fn contains_author(&self, a: &AuthorId) -> bool {
        self.published.contains(a)
    }

    pub fn display_name<'a>(&'a self, a: &'a AuthorId) -> &'a str {
        self.display_names
            .get(a)
            .map(String::as_str)
            .unwrap_or_else(|| a.as_str())
    }

    /// Publications listing `a` as an author, in id order.
    pub fn publications_of(&self, a: &AuthorId) -> &[PublicationId] {
        self.by_author.get(a).map(Vec::as_slice).unwrap_or(&[])
    }

    /// References of `p` that resolve inside the corpus.
    pub fn resolved_cites<'a>(
        &'a self,
        p: &'a PublicationRecord,
    ) -> impl Iterator<Item = &'a PublicationRecord> + 'a {
        p.cites.iter().filter_map(|c| self.publications.get(c))
    }

    /// Number of distinct corpus publications that cite `id`.
    pub fn citation_count(&self, id: &PublicationId) -> Result<usize, CorpusError> {
        if !self.publications.contains_key(id) {
            return Err(CorpusError::UnknownPublication(id.to_string()));
        }
        Ok(self.cited_by.get(id).map_or(0, BTreeSet::len))
    }

    /// Citation count of every publication, including zeros.
    pub fn citation_counts(&self) -> BTreeMap<PublicationId, usize> {
        self.publications
            .keys()
            .map(|id| (id.clone(), self.cited_by.get(id).map_or(0, BTreeSet::len)))
            .collect()
    }

    /// Total number of reference entries that resolve inside the corpus.
    pub fn resolved_reference_count(&self) -> usize {
        self.cited_by.values().map(BTreeSet::len).sum()
    }

    /// One JSON object per line, publications in id order.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for rec in self.publications.values() {
            // Serializing plain strings and integers cannot fail.
            out.push_str(&serde_json::to_string(rec).expect("record serializes"));
            out.push('\n');
        }
        out
    }
}

/// Incremental validation shared by every ingest path.
#[derive(Debug, Default)]
pub struct CorpusBuilder {
    publications: BTreeMap<PublicationId, PublicationRecord>,
    locations: BTreeMap<PublicationId, Location>,
    display_names: BTreeMap<AuthorId, String>,
    diagnostics: Vec<Diagnostic>,
}

impl CorpusBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn diagnose(&mut self, location: Location, message: impl Into<String>) {
        self.diagnostics.push(Diagnostic::new(location, message));
    }

    /// Records `display` as the human-readable name of `author` unless one
    /// is already known.
    pub fn display_name(&mut self, author: &AuthorId, display: &str) {
        if display != author.as_str() {
            self.display_names
                .entry(author.clone())
                .or_insert_with(|| display.to_string());
        }
    }

    /// Validates and adds one record. Repairable violations become
    /// diagnostics; a duplicate id is fatal.
    pub fn push(&mut self, mut rec: PublicationRecord, at: Location) -> Result<(), CorpusError> {
        if rec.id.as_str().is_empty() {
            self.diagnose(at, "record has an empty id; skipped");
            return Ok(());
        }
        if let Some(first) = self.locations.get(&rec.id) {
            return Err(CorpusError::DuplicateId {
                id: rec.id.to_string(),
                first: *first,
                second: at,
            });
        }

        let mut seen = BTreeSet::new();
        let mut authors = Vec::with_capacity(rec.authors.len());
        for a in rec.authors.drain(..) {
            if a.as_str().is_empty() {
                self.diagnose(at, format!("{}: empty author key dropped", rec.id));
            } else if !seen.insert(a.clone()) {
                self.diagnose(at, format!("{}: duplicate author `{a}` dropped", rec.id));
            } else {
                authors.push(a);
            }
        }
        if authors.is_empty() {
            self.diagnose(at, format!("{}: no authors; skipped", rec.id));
            return Ok(());
        }
        rec.authors = authors;

        let mut seen = BTreeSet::new();
        let mut cites = Vec::with_capacity(rec.cites.len());
        for c in rec.cites.drain(..) {
            if c.as_str().is_empty() {
                self.diagnose(at, format!("{}: empty reference dropped", rec.id));
            } else if c == rec.id {
                self.diagnose(at, format!("{}: self-reference dropped", rec.id));
            } else if !seen.insert(c.clone()) {
                self.diagnose(at, format!("{}: duplicate reference `{c}` dropped", rec.id));
            } else {
                cites.push(c);
            }
        }
        rec.cites = cites;

        self.locations.insert(rec.id.clone(), at);
        self.publications.insert(rec.id.clone(), rec);
        Ok(())
    }

    pub fn finish(mut self) -> Result<Parsed, CorpusError> {
        if self.publications.is_empty() {
            return Err(CorpusError::EmptyCorpus);
        }

        let mut published = BTreeSet::new();
        let mut by_author: BTreeMap<AuthorId, Vec<PublicationId>> = BTreeMap::new();
        let mut cited_by: BTreeMap<PublicationId, BTreeSet<PublicationId>> = BTreeMap::new();
        let mut dangling = Vec::new();
        for rec in self.publications.values() {
            for a in &rec.authors {
                published.insert(a.clone());
                by_author.entry(a.clone()).or_default().push(rec.id.clone());
            }
            for c in &rec.cites {
                if self.publications.contains_key(c) {
                    cited_by.entry(c.clone()).or_default().insert(rec.id.clone());
                } else {
                    dangling.push(Diagnostic::new(
                        self.locations[&rec.id],
                        format!("{}: reference `{c}` is outside the corpus", rec.id),
                    ));
                }
            }
        }
        self.diagnostics.extend(dangling);
        self.display_names.retain(|a, _| published.contains(a));

        Ok(Parsed {
            corpus: Corpus {
                publications: self.publications,
                published,
                display_names: self.display_names,
                by_author,
                cited_by,
            },
            diagnostics: self.diagnostics,
        })
    }
}

#[derive(Deserialize)]
struct RawRecord {
    id: String,
    #[serde(default)]
    title: String,
    #[serde(default)]
    year: Option<i64>,
    authors: Vec<String>,
    #[serde(default)]
    cites: Vec<String>,
    #[serde(flatten)]
    extra: BTreeMap<String, serde_json::Value>,
}

/// Reads one JSON publication object per line.
///
/// Blank lines are ignored. Lines that fail to decode are reported and
/// skipped; unknown fields are reported and ignored.
pub fn parse_jsonl(input: &str) -> Result<Parsed, CorpusError> {
    let mut builder = CorpusBuilder::new();
    for (idx, line) in input.lines().enumerate() {
        let at = Location::Line(idx + 1);
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let raw: RawRecord = match serde_json::from_str(line) {
            Ok(raw) => raw,
            Err(e) => {
                builder.diagnose(at, format!("malformed record: {e}"));
                continue;
            }
        };
        for key in raw.extra.keys() {
            builder.diagnose(at, format!("unknown field `{key}` ignored"));
        }
        let rec = PublicationRecord {
            id: PublicationId::new(raw.id),
            title: raw.title,
            year: raw.year,
            authors: raw.authors.into_iter().map(AuthorId::from).collect(),
            cites: raw.cites.iter().map(PublicationId::new).collect(),
        };
        builder.push(rec, at)?;
    }
    builder.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(xs: &[&str]) -> BTreeSet<AuthorId> {
        xs.iter().map(AuthorId::new).collect()
    }

    #[test]
    fn single_line() {
        let p = parse_jsonl(r#"{"id":"P1","title":"T","authors":["M","A"],"cites":[]}"#).unwrap();
        assert_eq!(p.corpus.published(), &ids(&["M", "A"]));
        assert!(p.diagnostics.is_empty());
    }

    #[test]
    fn self_reference_dropped() {
        let p = parse_jsonl(r#"{"id":"P1","title":"T","authors":["M"],"cites":["P1"]}"#).unwrap();
        let rec = p.corpus.publication(&"P1".into()).unwrap();
        assert!(rec.cites.is_empty());
        assert_eq!(p.diagnostics.len(), 1);
        assert!(p.diagnostics[0].message.contains("self-reference"));
        assert_eq!(p.diagnostics[0].location, Location::Line(1));
    }

    #[test]
    fn duplicate_id_is_fatal() {
        let input = "{\"id\":\"P1\",\"title\":\"T\",\"authors\":[\"M\"]}\n\
                     {\"id\":\"P1\",\"title\":\"U\",\"authors\":[\"A\"]}\n";
        match parse_jsonl(input) {
            Err(CorpusError::DuplicateId { id, first, second }) => {
                assert_eq!(id, "P1");
                assert_eq!(first, Location::Line(1));
                assert_eq!(second, Location::Line(2));
            }
            other => panic!("expected DuplicateId, got {other:?}"),
        }
    }

    #[test]
    fn empty_inputs() {
        assert!(matches!(parse_jsonl(""), Err(CorpusError::EmptyCorpus)));
        assert!(matches!(parse_jsonl("\n\n"), Err(CorpusError::EmptyCorpus)));
        assert!(matches!(parse_jsonl("not json\n"), Err(CorpusError::EmptyCorpus)));
    }

    #[test]
    fn bad_line_is_diagnosed() {
        let input = "garbage\n{\"id\":\"P1\",\"title\":\"T\",\"authors\":[\"M\"],\"cites\":[]}\n";
        let p = parse_jsonl(input).unwrap();
        assert_eq!(p.corpus.publication_count(), 1);
        assert_eq!(p.diagnostics.len(), 1);
        assert_eq!(p.diagnostics[0].location, Location::Line(1));
    }

    #[test]
    fn unknown_field_reported() {
        let p =
            parse_jsonl(r#"{"id":"P1","title":"T","authors":["M"],"cites":[],"venue":"X"}"#).unwrap();
        assert_eq!(p.diagnostics.len(), 1);
        assert!(p.diagnostics[0].message.contains("venue"));
    }

    #[test]
    fn record_without_authors_skipped() {
        let input = "{\"id\":\"P1\",\"title\":\"T\",\"authors\":[]}\n\
                     {\"id\":\"P2\",\"title\":\"T\",\"authors\":[\"M\",\"M\"]}\n";
        let p = parse_jsonl(input).unwrap();
        assert_eq!(p.corpus.publication_count(), 1);
        assert_eq!(p.corpus.publication(&"P2".into()).unwrap().authors.len(), 1);
        assert_eq!(p.diagnostics.len(), 2);
    }

    #[test]
    fn dangling_reference_kept_but_not_counted() {
        let input = "{\"id\":\"P1\",\"title\":\"T\",\"authors\":[\"M\"],\"cites\":[\"X9\"]}\n";
        let p = parse_jsonl(input).unwrap();
        assert_eq!(p.corpus.publication(&"P1".into()).unwrap().cites.len(), 1);
        assert_eq!(p.corpus.resolved_reference_count(), 0);
        assert!(p.diagnostics[0].message.contains("outside the corpus"));
    }

    #[test]
    fn citation_counts_by_scan() {
        // P2 and P3 both cite P1, P3 also cites P2.
        let recs = vec![
            PublicationRecord::new("P1", ["A"], Vec::<&str>::new()),
            PublicationRecord::new("P2", ["B"], ["P1"]),
            PublicationRecord::new("P3", ["C"], ["P1", "P2"]),
            PublicationRecord::new("P4", ["D"], Vec::<&str>::new()),
        ];
        let c = Corpus::from_records(recs).unwrap().corpus;
        assert_eq!(c.citation_count(&"P1".into()).unwrap(), 2);
        assert_eq!(c.citation_count(&"P2".into()).unwrap(), 1);
        assert_eq!(c.citation_count(&"P3".into()).unwrap(), 0);
        assert_eq!(c.citation_count(&"P4".into()).unwrap(), 0);
        assert!(matches!(
            c.citation_count(&"P5".into()),
            Err(CorpusError::UnknownPublication(_))
        ));
        assert_eq!(c.resolved_reference_count(), 3);
    }

    #[test]
    fn year_is_optional_and_round_trips() {
        let input = "{\"id\":\"P1\",\"title\":\"T\",\"year\":1994,\"authors\":[\"M\"],\"cites\":[]}\n\
                     {\"id\":\"P2\",\"title\":\"U\",\"year\":null,\"authors\":[\"M\"],\"cites\":[\"P1\"]}\n";
        let c = parse_jsonl(input).unwrap().corpus;
        assert_eq!(c.publication(&"P1".into()).unwrap().year, Some(1994));
        assert_eq!(c.publication(&"P2".into()).unwrap().year, None);
        let out = c.to_jsonl();
        assert_eq!(
            out.lines().next().unwrap(),
            r#"{"id":"P1","title":"T","year":1994,"authors":["M"],"cites":[]}"#
        );
        assert_eq!(parse_jsonl(&out).unwrap().corpus, c);
    }
}
