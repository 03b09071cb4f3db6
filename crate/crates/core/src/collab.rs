//! The coauthorship/citation model of a research community around one main
//! author, with paths, collaborative distance and Erdős numbers.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::corpus::{AuthorId, Corpus};
use crate::error::QueryError;
use crate::relation::{Relation, UndirectedGraph};

pub const DEFAULT_MAX_LEN: usize = 8;
pub const DEFAULT_MAX_COUNT: usize = 25;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Keep `(a, a)` pairs in `citing_authors` when an author cites their
    /// own work.
    pub include_self_citation: bool,
}

/// A main author together with the coauthor, related and citing-author
/// relations over the published authors of a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Researchers {
    main: AuthorId,
    published: BTreeSet<AuthorId>,
    coauthors: UndirectedGraph<AuthorId>,
    related: Relation<AuthorId>,
    // (cited, citer)
    citing_authors: Relation<AuthorId>,
}

/// A schema predicate that a [`Researchers`] value fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantViolation {
    MainNotPublished,
    CoauthorsOutsidePublished,
    CoauthorsNotUndirected,
    RelatedNotClosure,
    CitingOutsidePublished,
}

impl Researchers {
    pub fn build(corpus: &Corpus, main: &AuthorId) -> Result<Self, QueryError> {
        Self::build_with(corpus, main, BuildOptions::default())
    }

    pub fn build_with(
        corpus: &Corpus,
        main: &AuthorId,
        opts: BuildOptions,
    ) -> Result<Self, QueryError> {
        if !corpus.contains_author(main) {
            return Err(QueryError::UnknownAuthor(main.to_string()));
        }

        let mut coauthors = UndirectedGraph::new();
        let mut citing_authors = Relation::new();
        for p in corpus.publications() {
            for (i, a) in p.authors.iter().enumerate() {
                for b in &p.authors[i + 1..] {
                    coauthors.add_edge(a.clone(), b.clone());
                }
            }
            for cited in corpus.resolved_cites(p) {
                for y in &cited.authors {
                    for x in &p.authors {
                        if x != y || opts.include_self_citation {
                            citing_authors.insert(y.clone(), x.clone());
                        }
                    }
                }
            }
        }

        let related = coauthors.reachability();
        let r = Researchers {
            main: main.clone(),
            published: corpus.published().clone(),
            coauthors,
            related,
            citing_authors,
        };
        Ok(r)
    }

    pub fn main(&self) -> &AuthorId {
        &self.main
    }

    pub fn published(&self) -> &BTreeSet<AuthorId> {
        &self.published
    }

    pub fn coauthors(&self) -> &UndirectedGraph<AuthorId> {
        &self.coauthors
    }

    /// Transitive coauthorship, with the identity removed.
    pub fn related(&self) -> &Relation<AuthorId> {
        &self.related
    }

    /// Pairs `(cited, citer)`.
    pub fn citing_authors(&self) -> &Relation<AuthorId> {
        &self.citing_authors
    }

    /// The same community seen from a different main author.
    pub fn with_main(&self, main: &AuthorId) -> Result<Self, QueryError> {
        self.require(main)?;
        let mut r = self.clone();
        r.main = main.clone();
        Ok(r)
    }

    /// Re-checks every schema predicate extensionally. `related` is compared
    /// against a breadth-first transitive closure of `coauthors`, independent
    /// of the component-based construction.
    pub fn check_invariants(&self) -> Result<(), InvariantViolation> {
        if !self.published.contains(&self.main) {
            return Err(InvariantViolation::MainNotPublished);
        }
        let rel = self.coauthors.relation();
        if !rel.is_symmetric() || !rel.is_irreflexive() {
            return Err(InvariantViolation::CoauthorsNotUndirected);
        }
        if !rel
            .iter()
            .all(|(a, b)| self.published.contains(a) && self.published.contains(b))
        {
            return Err(InvariantViolation::CoauthorsOutsidePublished);
        }
        if self.related != rel.transitive_closure().without_identity() {
            return Err(InvariantViolation::RelatedNotClosure);
        }
        if !self
            .citing_authors
            .iter()
            .all(|(a, b)| self.published.contains(a) && self.published.contains(b))
        {
            return Err(InvariantViolation::CitingOutsidePublished);
        }
        Ok(())
    }

    fn require(&self, a: &AuthorId) -> Result<(), QueryError> {
        if self.published.contains(a) {
            Ok(())
        } else {
            Err(QueryError::UnknownAuthor(a.to_string()))
        }
    }

    fn require_pair(&self, a: &AuthorId, b: &AuthorId) -> Result<(), QueryError> {
        self.require(a)?;
        self.require(b)?;
        if a == b {
            return Err(QueryError::SameAuthor(a.to_string()));
        }
        Ok(())
    }

    /// BFS depths from `source` over the coauthor graph.
    pub fn bfs_depths(&self, source: &AuthorId) -> HashMap<AuthorId, usize> {
        self.bfs_depths_bounded(source, usize::MAX)
    }

    /// BFS depths from `source`, not expanding beyond `limit` edges.
    pub fn bfs_depths_bounded(&self, source: &AuthorId, limit: usize) -> HashMap<AuthorId, usize> {
        let mut depth = HashMap::new();
        depth.insert(source.clone(), 0);
        let mut queue = VecDeque::from([source]);
        while let Some(node) = queue.pop_front() {
            let d = depth[node];
            if d >= limit {
                continue;
            }
            for next in self.coauthors.neighbors(node) {
                if !depth.contains_key(next) {
                    depth.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        depth
    }

    /// Shortest coauthor-path length from `a` to `b`, in edges.
    pub fn collab_distance(&self, a: &AuthorId, b: &AuthorId) -> Result<Distance, QueryError> {
        self.require_pair(a, b)?;
        let mut depth: HashMap<&AuthorId, usize> = HashMap::from([(a, 0)]);
        let mut queue = VecDeque::from([a]);
        while let Some(node) = queue.pop_front() {
            let d = depth[node];
            for next in self.coauthors.neighbors(node) {
                if next == b {
                    return Ok(Distance::Edges(d + 1));
                }
                if !depth.contains_key(next) {
                    depth.insert(next, d + 1);
                    queue.push_back(next);
                }
            }
        }
        Ok(Distance::Unreachable)
    }

    /// Erdős number of every author reachable from the main author. The main
    /// author maps to 0; unreachable authors are absent.
    pub fn erdos_numbers(&self) -> BTreeMap<AuthorId, usize> {
        self.bfs_depths(&self.main).into_iter().collect()
    }

    /// Up to `max_count` simple coauthor paths from `a` to `b` with at most
    /// `max_len` edges, ordered by length and then lexicographically by the
    /// node keys.
    pub fn simple_paths(
        &self,
        a: &AuthorId,
        b: &AuthorId,
        max_len: usize,
        max_count: usize,
    ) -> Result<Vec<CollabPath>, QueryError> {
        self.require_pair(a, b)?;
        if max_len == 0 {
            return Err(QueryError::ZeroPathBound);
        }
        let mut found = Vec::new();
        if max_count == 0 {
            return Ok(found);
        }
        // Distance to the target bounds how far any prefix can still go.
        let to_target = self.bfs_depths_bounded(b, max_len);
        let Some(&shortest) = to_target.get(a) else {
            return Ok(found);
        };

        let mut stack = vec![a.clone()];
        let mut on_path: BTreeSet<AuthorId> = BTreeSet::from([a.clone()]);
        for len in shortest..=max_len {
            let mut search = PathSearch {
                graph: &self.coauthors,
                to_target: &to_target,
                target: b,
                len,
                max_count,
                found: &mut found,
            };
            search.extend(&mut stack, &mut on_path);
            if found.len() >= max_count {
                break;
            }
        }
        Ok(found)
    }
}

struct PathSearch<'a> {
    graph: &'a UndirectedGraph<AuthorId>,
    to_target: &'a HashMap<AuthorId, usize>,
    target: &'a AuthorId,
    len: usize,
    max_count: usize,
    found: &'a mut Vec<CollabPath>,
}

impl PathSearch<'_> {
    /// Extends `stack` only with paths of exactly `self.len` edges.
    fn extend(&mut self, stack: &mut Vec<AuthorId>, on_path: &mut BTreeSet<AuthorId>) {
        let used = stack.len() - 1;
        let last = stack.last().expect("non-empty stack").clone();
        for next in self.graph.neighbors(&last) {
            if self.found.len() >= self.max_count {
                return;
            }
            if on_path.contains(next) {
                continue;
            }
            let remaining = self.len - used - 1;
            if next == self.target {
                if remaining == 0 {
                    let mut nodes = stack.clone();
                    nodes.push(next.clone());
                    self.found.push(CollabPath { nodes });
                }
                continue;
            }
            match self.to_target.get(next) {
                Some(&d) if d <= remaining && remaining > 0 => {}
                _ => continue,
            }
            stack.push(next.clone());
            on_path.insert(next.clone());
            self.extend(stack, on_path);
            on_path.remove(next);
            stack.pop();
        }
    }
}

/// Collaborative distance in coauthor edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Edges(usize),
    Unreachable,
}

impl Distance {
    pub fn edges(self) -> Option<usize> {
        match self {
            Distance::Edges(n) => Some(n),
            Distance::Unreachable => None,
        }
    }

    /// Number of authors on a shortest path (edges + 1).
    pub fn nodes(self) -> Option<usize> {
        self.edges().map(|n| n + 1)
    }

    pub fn is_reachable(self) -> bool {
        matches!(self, Distance::Edges(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Edges(n) => write!(f, "{n}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

/// A simple path in the coauthor graph: at least two distinct authors, each
/// adjacent pair coauthors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CollabPath {
    nodes: Vec<AuthorId>,
}

impl CollabPath {
    /// Validates `nodes` against `graph`.
    pub fn new(nodes: Vec<AuthorId>, graph: &UndirectedGraph<AuthorId>) -> Option<Self> {
        let distinct: BTreeSet<_> = nodes.iter().collect();
        let ok = nodes.len() >= 2
            && distinct.len() == nodes.len()
            && nodes.windows(2).all(|w| graph.has_edge(&w[0], &w[1]));
        ok.then_some(CollabPath { nodes })
    }

    pub fn nodes(&self) -> &[AuthorId] {
        &self.nodes
    }

    pub fn head(&self) -> &AuthorId {
        &self.nodes[0]
    }

    pub fn last(&self) -> &AuthorId {
        &self.nodes[self.nodes.len() - 1]
    }

    pub fn edge_count(&self) -> usize {
        self.nodes.len() - 1
    }
}

impl fmt::Display for CollabPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.nodes.iter().enumerate() {
            if i > 0 {
                f.write_str(" -- ")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::PublicationRecord;
    use crate::synthetic;

    fn id(s: &str) -> AuthorId {
        AuthorId::new(s)
    }

    fn corpus(recs: &[(&str, &[&str], &[&str])]) -> Corpus {
        Corpus::from_records(
            recs.iter()
                .map(|(p, a, c)| PublicationRecord::new(p, a.iter().copied(), c.iter().copied())),
        )
        .unwrap()
        .corpus
    }

    fn set(xs: &[&str]) -> BTreeSet<AuthorId> {
        xs.iter().map(|x| id(x)).collect()
    }

    #[test]
    fn build_example() {
        let c = corpus(&[("P1", &["M", "A"], &[]), ("P2", &["A", "C"], &[])]);
        let r = Researchers::build(&c, &id("M")).unwrap();
        assert_eq!(r.coauthors().edge_count(), 2);
        assert!(r.coauthors().has_edge(&id("M"), &id("A")));
        assert!(r.coauthors().has_edge(&id("C"), &id("A")));
        assert_eq!(r.related().image(&set(&["M"])), set(&["A", "C"]));
        assert_eq!(r.check_invariants(), Ok(()));
    }

    #[test]
    fn lone_author() {
        let c = corpus(&[("P1", &["M"], &[])]);
        let r = Researchers::build(&c, &id("M")).unwrap();
        assert!(r.coauthors().relation().is_empty());
        assert!(r.related().is_empty());
    }

    #[test]
    fn citing_authors_scan() {
        let c = corpus(&[("P2", &["A", "C"], &[]), ("P3", &["D"], &["P2"])]);
        let r = Researchers::build(&c, &id("A")).unwrap();
        assert!(r.citing_authors().contains(&id("A"), &id("D")));
        assert!(r.citing_authors().contains(&id("C"), &id("D")));
        assert_eq!(r.citing_authors().len(), 2);
    }

    #[test]
    fn self_citation_option() {
        let c = corpus(&[("P1", &["A"], &[]), ("P2", &["A", "B"], &["P1"])]);
        let r = Researchers::build(&c, &id("A")).unwrap();
        assert!(!r.citing_authors().contains(&id("A"), &id("A")));
        assert!(r.citing_authors().contains(&id("A"), &id("B")));
        let opts = BuildOptions {
            include_self_citation: true,
        };
        let r = Researchers::build_with(&c, &id("A"), opts).unwrap();
        assert!(r.citing_authors().contains(&id("A"), &id("A")));
    }

    #[test]
    fn unknown_main() {
        let c = corpus(&[("P1", &["M"], &[])]);
        assert_eq!(
            Researchers::build(&c, &id("Z")),
            Err(QueryError::UnknownAuthor("Z".into()))
        );
    }

    #[test]
    fn distance_examples() {
        let c = corpus(&[("P1", &["M", "A"], &[]), ("P2", &["X"], &[]), ("P3", &["Y"], &[])]);
        let r = Researchers::build(&c, &id("M")).unwrap();
        assert_eq!(r.collab_distance(&id("M"), &id("A")), Ok(Distance::Edges(1)));
        assert_eq!(r.collab_distance(&id("X"), &id("Y")), Ok(Distance::Unreachable));
        assert_eq!(
            r.collab_distance(&id("M"), &id("M")),
            Err(QueryError::SameAuthor("M".into()))
        );
        assert_eq!(
            r.collab_distance(&id("M"), &id("Q")),
            Err(QueryError::UnknownAuthor("Q".into()))
        );
    }

    #[test]
    fn five_disjoint_chains() {
        let c = synthetic::disjoint_chains("ERO", "Erdos", 5, 3);
        let r = Researchers::build(&c, &id("ERO")).unwrap();
        assert_eq!(r.collab_distance(&id("ERO"), &id("Erdos")), Ok(Distance::Edges(4)));
        let paths = r
            .simple_paths(&id("ERO"), &id("Erdos"), DEFAULT_MAX_LEN, DEFAULT_MAX_COUNT)
            .unwrap();
        assert_eq!(paths.len(), 5);
        for p in &paths {
            assert_eq!(p.nodes().len(), 5);
            assert_eq!(p.edge_count(), 4);
            assert_eq!(p.head(), &id("ERO"));
            assert_eq!(p.last(), &id("Erdos"));
        }
        let mut sorted = paths.clone();
        sorted.sort();
        assert_eq!(sorted, paths);
    }

    #[test]
    fn direct_edge_path_first() {
        let c = corpus(&[("P1", &["a", "b"], &[]), ("P2", &["a", "x"], &[]), ("P3", &["x", "b"], &[])]);
        let r = Researchers::build(&c, &id("a")).unwrap();
        let paths = r.simple_paths(&id("a"), &id("b"), 8, 25).unwrap();
        assert_eq!(paths.len(), 2);
        assert_eq!(paths[0].nodes(), &[id("a"), id("b")]);
        assert_eq!(paths[1].to_string(), "a -- x -- b");
    }

    #[test]
    fn disconnected_paths_empty() {
        let c = corpus(&[("P1", &["a"], &[]), ("P2", &["b"], &[])]);
        let r = Researchers::build(&c, &id("a")).unwrap();
        assert!(r.simple_paths(&id("a"), &id("b"), 8, 25).unwrap().is_empty());
    }

    #[test]
    fn path_bounds() {
        let c = synthetic::chain(&["M", "A", "B", "C"]);
        let r = Researchers::build(&c, &id("M")).unwrap();
        assert!(r.simple_paths(&id("M"), &id("C"), 2, 25).unwrap().is_empty());
        assert_eq!(r.simple_paths(&id("M"), &id("C"), 3, 25).unwrap().len(), 1);
        assert_eq!(
            r.simple_paths(&id("M"), &id("C"), 0, 25),
            Err(QueryError::ZeroPathBound)
        );
        assert!(r.simple_paths(&id("M"), &id("C"), 3, 0).unwrap().is_empty());
    }

    #[test]
    fn max_count_truncates_in_order() {
        let c = synthetic::disjoint_chains("s", "t", 5, 3);
        let r = Researchers::build(&c, &id("s")).unwrap();
        let all = r.simple_paths(&id("s"), &id("t"), 8, 25).unwrap();
        let two = r.simple_paths(&id("s"), &id("t"), 8, 2).unwrap();
        assert_eq!(two, all[..2]);
    }

    #[test]
    fn erdos_examples() {
        let star = synthetic::star("Erdos", 511);
        let r = Researchers::build(&star, &id("Erdos")).unwrap();
        let numbers = r.erdos_numbers();
        assert_eq!(numbers.values().filter(|&&n| n == 1).count(), 511);
        assert_eq!(numbers[&id("Erdos")], 0);

        let alone = corpus(&[("P1", &["M"], &[])]);
        let r = Researchers::build(&alone, &id("M")).unwrap();
        assert_eq!(r.erdos_numbers(), BTreeMap::from([(id("M"), 0)]));

        // Chain M–A–B: the only simple paths are ⟨M,A⟩ and ⟨M,A,B⟩.
        let r = Researchers::build(&synthetic::chain(&["M", "A", "B"]), &id("M")).unwrap();
        assert_eq!(
            r.erdos_numbers(),
            BTreeMap::from([(id("M"), 0), (id("A"), 1), (id("B"), 2)])
        );
    }

    #[test]
    fn collab_path_validation() {
        let r = Researchers::build(&synthetic::chain(&["M", "A", "B"]), &id("M")).unwrap();
        let g = r.coauthors();
        assert!(CollabPath::new(vec![id("M"), id("A"), id("B")], g).is_some());
        assert!(CollabPath::new(vec![id("M")], g).is_none());
        assert!(CollabPath::new(vec![id("M"), id("B")], g).is_none());
        assert!(CollabPath::new(vec![id("M"), id("A"), id("M")], g).is_none());
    }

    #[test]
    fn with_main_switches_center() {
        let r = Researchers::build(&synthetic::chain(&["M", "A", "B"]), &id("M")).unwrap();
        let r = r.with_main(&id("B")).unwrap();
        assert_eq!(r.erdos_numbers()[&id("M")], 2);
    }
}
