//! Coauthorship and citation analysis of a research community.
//!
//! A [`Corpus`] of publications induces a [`Researchers`] model around one
//! main author: an undirected coauthor graph, its transitive closure, and a
//! directed citing-author relation. On top of that sit collaborative
//! distance and Erdős numbers ([`collab`]), Community-of-Practice tiers
//! ([`cop`]) and per-author citation indices ([`metrics`]).

pub mod bibtex;
pub mod collab;
pub mod cop;
pub mod corpus;
pub mod error;
pub mod metrics;
pub mod relation;
pub mod synthetic;

pub use bibtex::parse_bibtex;
pub use collab::{BuildOptions, CollabPath, Distance, Researchers};
pub use cop::{classify, classify_with_radius, CopPartition, Tier};
pub use corpus::{
    parse_jsonl, AuthorId, Corpus, Diagnostic, Location, Parsed, PublicationId, PublicationRecord,
};
pub use error::{CorpusError, QueryError};
pub use metrics::{
    all_author_metrics, author_bag, author_metrics, bag_sum, g_index, h_index, i10_index,
    AuthorMetrics, CitationBag,
};
pub use relation::{Relation, UndirectedGraph};
