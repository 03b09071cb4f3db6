//! Coauthor, citation and Erdős-number neighbourhoods as DOT and GraphML.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use scholarnet_core::{classify, CopPartition, Corpus, Researchers};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ExportKind {
    Coauthor,
    Citation,
    Erdos,
}

impl ExportKind {
    pub fn name(self) -> &'static str {
        match self {
            ExportKind::Coauthor => "coauthor",
            ExportKind::Citation => "citation",
            ExportKind::Erdos => "erdos",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Coauthor,
    Citation,
}

impl EdgeKind {
    fn name(self) -> &'static str {
        match self {
            EdgeKind::Coauthor => "coauthor",
            EdgeKind::Citation => "citation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExportNode {
    pub id: String,
    pub label: String,
    pub tag: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExportEdge {
    pub source: String,
    pub target: String,
    pub kind: EdgeKind,
    pub directed: bool,
}

/// A node/edge list ready for serialization. Coauthor edges appear once per
/// unordered pair; citation edges point from the cited author to the citer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphExport {
    pub name: &'static str,
    /// Attribute name under which each node's tag is written.
    pub tag_name: &'static str,
    pub nodes: Vec<ExportNode>,
    pub edges: Vec<ExportEdge>,
}

impl GraphExport {
    pub fn build(kind: ExportKind, corpus: &Corpus, r: &Researchers, cop: &CopPartition) -> Self {
        match kind {
            ExportKind::Coauthor => coauthor_view(corpus, r, cop),
            ExportKind::Citation => citation_view(corpus, r, cop),
            ExportKind::Erdos => erdos_view(corpus, r),
        }
    }

    pub fn is_directed(&self) -> bool {
        self.edges.iter().any(|e| e.directed)
    }

    pub fn to_dot(&self) -> String {
        let directed = self.is_directed();
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {} {{",
            if directed { "digraph" } else { "graph" },
            dot_quote(self.name)
        );
        for n in &self.nodes {
            let _ = writeln!(
                out,
                "  {} [label={}, {}={}];",
                dot_quote(&n.id),
                dot_quote(&n.label),
                self.tag_name,
                dot_quote(&n.tag)
            );
        }
        for e in &self.edges {
            let op = if directed { "->" } else { "--" };
            let extra = if directed && !e.directed { ", dir=none" } else { "" };
            let _ = writeln!(
                out,
                "  {} {op} {} [kind={}{extra}];",
                dot_quote(&e.source),
                dot_quote(&e.target),
                dot_quote(e.kind.name())
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_graphml(&self) -> String {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        out.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n");
        out.push_str("  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n");
        let _ = writeln!(
            out,
            "  <key id=\"{0}\" for=\"node\" attr.name=\"{0}\" attr.type=\"string\"/>",
            self.tag_name
        );
        out.push_str("  <key id=\"kind\" for=\"edge\" attr.name=\"kind\" attr.type=\"string\"/>\n");
        let _ = writeln!(
            out,
            "  <graph id=\"{}\" edgedefault=\"{}\">",
            xml_escape(self.name),
            if self.is_directed() { "directed" } else { "undirected" }
        );
        for n in &self.nodes {
            let _ = writeln!(
                out,
                "    <node id=\"{}\"><data key=\"label\">{}</data><data key=\"{}\">{}</data></node>",
                xml_escape(&n.id),
                xml_escape(&n.label),
                self.tag_name,
                xml_escape(&n.tag)
            );
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "    <edge source=\"{}\" target=\"{}\" directed=\"{}\"><data key=\"kind\">{}</data></edge>",
                xml_escape(&e.source),
                xml_escape(&e.target),
                e.directed,
                e.kind.name()
            );
        }
        out.push_str("  </graph>\n</graphml>\n");
        out
    }
}

fn tier_node(corpus: &Corpus, cop: &CopPartition, a: &scholarnet_core::AuthorId) -> ExportNode {
    let tier = cop.tier_of(a).map_or("unknown", |t| t.name());
    ExportNode {
        id: a.to_string(),
        label: corpus.display_name(a).to_string(),
        tag: tier.to_string(),
    }
}

/// Nodes ordered by tier, then key.
fn ordered_by_tier(cop: &CopPartition, nodes: &BTreeSet<scholarnet_core::AuthorId>) -> Vec<scholarnet_core::AuthorId> {
    let mut v: Vec<_> = nodes.iter().cloned().collect();
    v.sort_by_key(|a| (cop.tier_of(a), a.clone()));
    v
}

/// The core of the community with the coauthor edges among its members.
fn coauthor_view(corpus: &Corpus, r: &Researchers, cop: &CopPartition) -> GraphExport {
    let nodes = ordered_by_tier(cop, &cop.core)
        .iter()
        .map(|a| tier_node(corpus, cop, a))
        .collect();
    let edges = r
        .coauthors()
        .induced(&cop.core)
        .edges()
        .map(|(a, b)| ExportEdge {
            source: a.to_string(),
            target: b.to_string(),
            kind: EdgeKind::Coauthor,
            directed: false,
        })
        .collect();
    GraphExport {
        name: "coauthor",
        tag_name: "tier",
        nodes,
        edges,
    }
}

/// The main author and everyone citing them.
fn citation_view(corpus: &Corpus, r: &Researchers, cop: &CopPartition) -> GraphExport {
    let main = BTreeSet::from([r.main().clone()]);
    let restricted = r.citing_authors().dom_restrict(&main);
    let mut members = main;
    members.extend(restricted.range());
    let nodes = ordered_by_tier(cop, &members)
        .iter()
        .map(|a| tier_node(corpus, cop, a))
        .collect();
    let edges = restricted
        .iter()
        .map(|(cited, citer)| ExportEdge {
            source: cited.to_string(),
            target: citer.to_string(),
            kind: EdgeKind::Citation,
            directed: true,
        })
        .collect();
    GraphExport {
        name: "citation",
        tag_name: "tier",
        nodes,
        edges,
    }
}

/// Every author reachable from the main author, labelled with their Erdős
/// number.
fn erdos_view(corpus: &Corpus, r: &Researchers) -> GraphExport {
    let numbers = r.erdos_numbers();
    let mut order: Vec<_> = numbers.iter().collect();
    order.sort_by_key(|(a, n)| (**n, (*a).clone()));
    let nodes = order
        .iter()
        .map(|(a, n)| ExportNode {
            id: a.to_string(),
            label: format!("{} ({n})", corpus.display_name(a)),
            tag: n.to_string(),
        })
        .collect();
    let members: BTreeSet<_> = numbers.keys().cloned().collect();
    let edges = r
        .coauthors()
        .induced(&members)
        .edges()
        .map(|(a, b)| ExportEdge {
            source: a.to_string(),
            target: b.to_string(),
            kind: EdgeKind::Coauthor,
            directed: false,
        })
        .collect();
    GraphExport {
        name: "erdos",
        tag_name: "erdos",
        nodes,
        edges,
    }
}

/// Convenience for callers that do not need a radius-limited partition.
pub fn export(kind: ExportKind, corpus: &Corpus, r: &Researchers) -> GraphExport {
    GraphExport::build(kind, corpus, r, &classify(r))
}

fn dot_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => {}
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}
