//! Independent set-theoretic oracles. None of these call into the
//! library's relation or graph algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use scholarnet_core::{AuthorId, Corpus, PublicationRecord};

pub type Pairs = BTreeSet<(String, String)>;

pub fn compose(r: &Pairs, s: &Pairs) -> Pairs {
    let mut out = Pairs::new();
    for (a, b) in r {
        for (c, d) in s {
            if b == c {
                out.insert((a.clone(), d.clone()));
            }
        }
    }
    out
}

/// `r ∪ r;r ∪ r;r;r ∪ ...` iterated until stable.
pub fn closure_fixpoint(r: &Pairs) -> Pairs {
    let mut acc = r.clone();
    loop {
        let next: Pairs = acc.union(&compose(&acc, r)).cloned().collect();
        if next == acc {
            return acc;
        }
        acc = next;
    }
}

pub fn image(r: &Pairs, s: &BTreeSet<String>) -> BTreeSet<String> {
    r.iter()
        .filter(|(a, _)| s.contains(a))
        .map(|(_, b)| b.clone())
        .collect()
}

/// CoP tiers evaluated straight from the corpus records.
pub struct BruteCop {
    pub editorial: BTreeSet<String>,
    pub active: BTreeSet<String>,
    pub core: BTreeSet<String>,
    pub peripheral: BTreeSet<String>,
    pub outsiders: BTreeSet<String>,
}

pub fn coauthor_pairs(recs: &[RawPub]) -> Pairs {
    let mut out = Pairs::new();
    for p in recs {
        for a in &p.authors {
            for b in &p.authors {
                if a != b {
                    out.insert((a.clone(), b.clone()));
                }
            }
        }
    }
    out
}

pub fn citing_pairs(recs: &[RawPub]) -> Pairs {
    let mut out = Pairs::new();
    for p in recs {
        for q in recs {
            if p.cites.contains(&q.id) {
                for x in &p.authors {
                    for y in &q.authors {
                        if x != y {
                            out.insert((y.clone(), x.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn brute_cop(recs: &[RawPub], main: &str) -> BruteCop {
    let published: BTreeSet<String> = recs.iter().flat_map(|p| p.authors.iter().cloned()).collect();
    let coauthors = coauthor_pairs(recs);
    let related: Pairs = closure_fixpoint(&coauthors)
        .into_iter()
        .filter(|(a, b)| a != b)
        .collect();
    let m: BTreeSet<String> = [main.to_string()].into();
    let editorial = image(&coauthors, &m);
    let active: BTreeSet<_> = image(&related, &m).difference(&editorial).cloned().collect();
    let core: BTreeSet<_> = m.iter().chain(&editorial).chain(&active).cloned().collect();
    let peripheral: BTreeSet<_> = image(&citing_pairs(recs), &core).difference(&core).cloned().collect();
    let cop: BTreeSet<_> = core.union(&peripheral).cloned().collect();
    let outsiders = published.difference(&cop).cloned().collect();
    BruteCop {
        editorial,
        active,
        core,
        peripheral,
        outsiders,
    }
}

#[derive(Debug, Clone)]
pub struct RawPub {
    pub id: String,
    pub authors: Vec<String>,
    pub cites: Vec<String>,
}

pub fn to_corpus(recs: &[RawPub]) -> Corpus {
    Corpus::from_records(
        recs.iter()
            .map(|p| PublicationRecord::new(&p.id, p.authors.iter().map(String::as_str), &p.cites)),
    )
    .expect("generated corpus is valid")
    .corpus
}

pub fn names(set: &BTreeSet<AuthorId>) -> BTreeSet<String> {
    set.iter().map(|a| a.as_str().to_string()).collect()
}

/// Up to 10 publications over at most 12 authors `a00..a11`, each with 1-3
/// distinct authors and references to other publications.
pub fn arb_corpus() -> impl Strategy<Value = Vec<RawPub>> {
    (1usize..=10).prop_flat_map(|n| {
        prop::collection::vec(
            (
                prop::collection::btree_set(0u8..12, 1..=3),
                prop::collection::btree_set(0usize..n, 0..=3),
            ),
            n,
        )
        .prop_map(|pubs| {
            pubs.into_iter()
                .enumerate()
                .map(|(i, (authors, cites))| RawPub {
                    id: format!("p{i}"),
                    authors: authors.into_iter().map(|a| format!("a{a:02}")).collect(),
                    cites: cites
                        .into_iter()
                        .filter(|&c| c != i)
                        .map(|c| format!("p{c}"))
                        .collect(),
                })
                .collect()
        })
    })
}

/// Edge list over nodes `0..n` as two-author publications; isolated nodes
/// get a solo publication so they are still published.
pub fn graph_corpus(n: usize, edges: &[(usize, usize)]) -> Vec<RawPub> {
    let mut recs: Vec<RawPub> = (0..n)
        .map(|i| RawPub {
            id: format!("solo{i}"),
            authors: vec![format!("n{i}")],
            cites: vec![],
        })
        .collect();
    for (k, &(a, b)) in edges.iter().enumerate() {
        if a != b {
            recs.push(RawPub {
                id: format!("e{k}"),
                authors: vec![format!("n{a}"), format!("n{b}")],
                cites: vec![],
            });
        }
    }
    recs
}

/// Every injective sequence from `from` to `to` whose adjacent entries are
/// edges, by exhaustive extension over all nodes.
pub fn all_injective_paths(adj: &Pairs, nodes: &[String], from: &str, to: &str) -> Vec<Vec<String>> {
    fn go(adj: &Pairs, nodes: &[String], seq: &mut Vec<String>, to: &str, out: &mut Vec<Vec<String>>) {
        let last = seq.last().unwrap().clone();
        if last == to && seq.len() > 1 {
            out.push(seq.clone());
            return;
        }
        for n in nodes {
            if !seq.contains(n) && adj.contains(&(last.clone(), n.clone())) {
                seq.push(n.clone());
                go(adj, nodes, seq, to, out);
                seq.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(adj, nodes, &mut vec![from.to_string()], to, &mut out);
    out
}
