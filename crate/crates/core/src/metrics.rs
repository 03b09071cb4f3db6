//! Citation bags and the h-, g- and i10-indices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::corpus::{AuthorId, Corpus, PublicationId};
use crate::error::QueryError;

/// Multiset of citations: publication id to a positive citation count.
/// Uncited publications have no entry.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CitationBag {
    counts: BTreeMap<PublicationId, u64>,
}

impl CitationBag {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `n` citations to `id`. Adding zero leaves the bag unchanged.
    pub fn add(&mut self, id: PublicationId, n: u64) {
        if n > 0 {
            *self.counts.entry(id).or_insert(0) += n;
        }
    }

    pub fn get(&self, id: &PublicationId) -> u64 {
        self.counts.get(id).copied().unwrap_or(0)
    }

    /// Number of distinct cited publications.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PublicationId, u64)> + '_ {
        self.counts.iter().map(|(k, &v)| (k, v))
    }

    /// Counts sorted in descending order.
    pub fn sorted_counts(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.counts.values().copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl<K: Into<PublicationId>> FromIterator<(K, u64)> for CitationBag {
    fn from_iter<I: IntoIterator<Item = (K, u64)>>(iter: I) -> Self {
        let mut bag = CitationBag::new();
        for (k, n) in iter {
            bag.add(k.into(), n);
        }
        bag
    }
}

pub fn bag_sum(b: &CitationBag) -> u64 {
    b.counts.values().sum()
}

/// Largest `h` such that at least `h` publications have `h` or more
/// citations each.
pub fn h_index(b: &CitationBag) -> usize {
    let sorted = b.sorted_counts();
    // With counts descending, #{x | b(x) ≥ i+1} ≥ i+1 iff sorted[i] ≥ i+1.
    sorted
        .iter()
        .enumerate()
        .take_while(|&(i, &c)| c > i as u64)
        .count()
}

/// Largest `g`, at most the bag size, such that the `g` most cited
/// publications have at least `g²` citations together.
pub fn g_index(b: &CitationBag) -> usize {
    let mut prefix = 0u64;
    let mut g = 0;
    for (i, c) in b.sorted_counts().into_iter().enumerate() {
        prefix += c;
        let k = i as u64 + 1;
        if prefix >= k * k {
            g = i + 1;
        }
    }
    g
}

/// Number of publications with at least 10 citations.
pub fn i10_index(b: &CitationBag) -> usize {
    b.counts.values().filter(|&&c| c >= 10).count()
}

/// Corpus-relative citations of every publication by `a`.
pub fn author_bag(c: &Corpus, a: &AuthorId) -> Result<CitationBag, QueryError> {
    if !c.contains_author(a) {
        return Err(QueryError::UnknownAuthor(a.to_string()));
    }
    let mut bag = CitationBag::new();
    for p in c.publications_of(a) {
        let n = c.citation_count(p).expect("author index refers to corpus publications");
        bag.add(p.clone(), n as u64);
    }
    Ok(bag)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuthorMetrics {
    pub author: AuthorId,
    pub n_pubs: usize,
    pub total_citations: u64,
    pub h: usize,
    pub g: usize,
    pub i10: usize,
}

impl AuthorMetrics {
    pub fn from_bag(author: AuthorId, n_pubs: usize, bag: &CitationBag) -> Self {
        AuthorMetrics {
            author,
            n_pubs,
            total_citations: bag_sum(bag),
            h: h_index(bag),
            g: g_index(bag),
            i10: i10_index(bag),
        }
    }
}

pub fn author_metrics(c: &Corpus, a: &AuthorId) -> Result<AuthorMetrics, QueryError> {
    let bag = author_bag(c, a)?;
    Ok(AuthorMetrics::from_bag(a.clone(), c.publications_of(a).len(), &bag))
}

/// Metrics for every published author, sorted by h descending, then key.
pub fn all_author_metrics(c: &Corpus) -> Vec<AuthorMetrics> {
    let mut rows: Vec<_> = c
        .published()
        .iter()
        .map(|a| author_metrics(c, a).expect("published author"))
        .collect();
    rows.sort_by(|x, y| y.h.cmp(&x.h).then_with(|| x.author.cmp(&y.author)));
    rows
}
