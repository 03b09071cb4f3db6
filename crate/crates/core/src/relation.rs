//! Finite binary relations and undirected simple graphs.
//!
//! [`Relation`] stores its pairs as a successor map, so iteration is in
//! lexicographic pair order and relational images over small source sets are
//! cheap. [`UndirectedGraph`] is a relation that is symmetric and irreflexive
//! by construction.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// A finite set of ordered pairs `(a, b)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation<T: Ord> {
    // No key maps to an empty set.
    succ: BTreeMap<T, BTreeSet<T>>,
    len: usize,
}

impl<T: Ord> Default for Relation<T> {
    fn default() -> Self {
        Relation {
            succ: BTreeMap::new(),
            len: 0,
        }
    }
}

impl<T: Ord + Clone + fmt::Debug> fmt::Debug for Relation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl<T: Ord + Clone> Relation<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts a pair, returning `false` if it was already present.
    pub fn insert(&mut self, a: T, b: T) -> bool {
        let added = self.succ.entry(a).or_default().insert(b);
        if added {
            self.len += 1;
        }
        added
    }

    pub fn remove(&mut self, a: &T, b: &T) -> bool {
        let Some(set) = self.succ.get_mut(a) else {
            return false;
        };
        let removed = set.remove(b);
        if removed {
            self.len -= 1;
            if set.is_empty() {
                self.succ.remove(a);
            }
        }
        removed
    }

    pub fn contains(&self, a: &T, b: &T) -> bool {
        self.succ.get(a).is_some_and(|s| s.contains(b))
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Pairs in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&T, &T)> + '_ {
        self.succ
            .iter()
            .flat_map(|(a, bs)| bs.iter().map(move |b| (a, b)))
    }

    /// Elements related to `a`, i.e. the image of `{a}`.
    pub fn successors(&self, a: &T) -> impl Iterator<Item = &T> + '_ {
        self.succ.get(a).into_iter().flatten()
    }

    pub fn domain(&self) -> BTreeSet<T> {
        self.succ.keys().cloned().collect()
    }

    pub fn range(&self) -> BTreeSet<T> {
        self.succ.values().flatten().cloned().collect()
    }

    /// `{(b, a) | (a, b) ∈ self}`
    pub fn inverse(&self) -> Self {
        self.iter().map(|(a, b)| (b.clone(), a.clone())).collect()
    }

    /// Relational image `self⦇s⦈ = {b | ∃a ∈ s · (a, b) ∈ self}`.
    pub fn image(&self, s: &BTreeSet<T>) -> BTreeSet<T> {
        let mut out = BTreeSet::new();
        for a in s {
            if let Some(bs) = self.succ.get(a) {
                out.extend(bs.iter().cloned());
            }
        }
        out
    }

    /// Domain restriction `s ◁ self`.
    pub fn dom_restrict(&self, s: &BTreeSet<T>) -> Self {
        let mut out = Relation::new();
        for a in s {
            if let Some(bs) = self.succ.get(a) {
                out.len += bs.len();
                out.succ.insert(a.clone(), bs.clone());
            }
        }
        out
    }

    /// Range restriction `self ▷ s`.
    pub fn range_restrict(&self, s: &BTreeSet<T>) -> Self {
        self.iter()
            .filter(|(_, b)| s.contains(*b))
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect()
    }

    /// Relational composition `self ; other = {(a, c) | (a, b) ∈ self ∧ (b, c) ∈ other}`.
    pub fn compose(&self, other: &Relation<T>) -> Self {
        let mut out = Relation::new();
        for (a, bs) in &self.succ {
            for b in bs {
                for c in other.successors(b) {
                    out.insert(a.clone(), c.clone());
                }
            }
        }
        out
    }

    pub fn union(&self, other: &Relation<T>) -> Self {
        let mut out = self.clone();
        for (a, b) in other.iter() {
            out.insert(a.clone(), b.clone());
        }
        out
    }

    pub fn is_subset(&self, other: &Relation<T>) -> bool {
        self.len <= other.len && self.iter().all(|(a, b)| other.contains(a, b))
    }

    /// `true` if no pair `(a, a)` is present.
    pub fn is_irreflexive(&self) -> bool {
        self.succ.iter().all(|(a, bs)| !bs.contains(a))
    }

    pub fn is_symmetric(&self) -> bool {
        self.iter().all(|(a, b)| self.contains(b, a))
    }

    /// Removes every pair `(a, a)`.
    pub fn without_identity(&self) -> Self {
        self.iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect()
    }

    /// Transitive closure `self⁺`: the smallest transitive relation
    /// containing `self`.
    ///
    /// Computed by a breadth-first search from every domain element. A pair
    /// `(a, a)` appears only when `a` lies on a cycle, which includes every
    /// element of a symmetric relation's domain.
    pub fn transitive_closure(&self) -> Self {
        let mut out = Relation::new();
        let mut queue = VecDeque::new();
        for start in self.succ.keys() {
            let mut reached: BTreeSet<T> = BTreeSet::new();
            queue.clear();
            queue.push_back(start);
            while let Some(node) = queue.pop_front() {
                for next in self.successors(node) {
                    if reached.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
            out.len += reached.len();
            out.succ.insert(start.clone(), reached);
        }
        out
    }
}

impl<T: Ord + Clone> FromIterator<(T, T)> for Relation<T> {
    fn from_iter<I: IntoIterator<Item = (T, T)>>(iter: I) -> Self {
        let mut r = Relation::new();
        for (a, b) in iter {
            r.insert(a, b);
        }
        r
    }
}

impl<T: Ord + Clone> Extend<(T, T)> for Relation<T> {
    fn extend<I: IntoIterator<Item = (T, T)>>(&mut self, iter: I) {
        for (a, b) in iter {
            self.insert(a, b);
        }
    }
}

/// A symmetric, irreflexive relation: an undirected simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph<T: Ord> {
    rel: Relation<T>,
}

impl<T: Ord> Default for UndirectedGraph<T> {
    fn default() -> Self {
        UndirectedGraph {
            rel: Relation::default(),
        }
    }
}

impl<T: Ord + Clone + fmt::Debug> fmt::Debug for UndirectedGraph<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("UndirectedGraph").field(&self.rel).finish()
    }
}

impl<T: Ord + Clone> UndirectedGraph<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Symmetrizes `pairs` and drops self-pairs.
    ///
    /// Returns the graph together with the number of distinct self-pairs that
    /// were discarded.
    pub fn make_undirected<I>(pairs: I) -> (Self, usize)
    where
        I: IntoIterator<Item = (T, T)>,
    {
        let mut g = UndirectedGraph::new();
        let mut dropped = BTreeSet::new();
        for (a, b) in pairs {
            if a == b {
                dropped.insert(a);
            } else {
                g.add_edge(a, b);
            }
        }
        (g, dropped.len())
    }

    /// Adds the edge `a – b`. Self-loops are ignored and reported as `false`.
    pub fn add_edge(&mut self, a: T, b: T) -> bool {
        if a == b {
            return false;
        }
        let added = self.rel.insert(a.clone(), b.clone());
        self.rel.insert(b, a);
        added
    }

    pub fn has_edge(&self, a: &T, b: &T) -> bool {
        self.rel.contains(a, b)
    }

    pub fn neighbors(&self, a: &T) -> impl Iterator<Item = &T> + '_ {
        self.rel.successors(a)
    }

    pub fn degree(&self, a: &T) -> usize {
        self.rel.successors(a).count()
    }

    /// Number of unordered edges.
    pub fn edge_count(&self) -> usize {
        self.rel.len() / 2
    }

    /// Each unordered edge once, as `(a, b)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (&T, &T)> + '_ {
        self.rel.iter().filter(|(a, b)| a < b)
    }

    /// The underlying symmetric relation.
    pub fn relation(&self) -> &Relation<T> {
        &self.rel
    }

    pub fn into_relation(self) -> Relation<T> {
        self.rel
    }

    /// Connected components with at least one edge, each sorted, in order
    /// of their smallest element.
    pub fn components(&self) -> Vec<Vec<T>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.rel.succ.keys() {
            if seen.contains(start) {
                continue;
            }
            seen.insert(start.clone());
            let mut comp = vec![start.clone()];
            let mut queue = VecDeque::from([start]);
            while let Some(node) = queue.pop_front() {
                for next in self.neighbors(node) {
                    if seen.insert(next.clone()) {
                        comp.push(next.clone());
                        queue.push_back(next);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// Irreflexive transitive closure `rel⁺ \ id`: every pair of distinct
    /// nodes in the same component.
    pub fn reachability(&self) -> Relation<T> {
        let mut out = Relation::new();
        for comp in self.components() {
            for a in &comp {
                let others: BTreeSet<T> = comp.iter().filter(|b| *b != a).cloned().collect();
                out.len += others.len();
                out.succ.insert(a.clone(), others);
            }
        }
        out
    }

    /// Subgraph induced by `nodes`.
    pub fn induced(&self, nodes: &BTreeSet<T>) -> Self {
        UndirectedGraph {
            rel: self.rel.dom_restrict(nodes).range_restrict(nodes),
        }
    }
}
