//! Command-line front end: corpus loading, text/JSON reports and graph
//! exports. [`run`] is the whole program minus process I/O, so it can be
//! driven from tests.

pub mod error;
pub mod export;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use scholarnet_core::collab::{DEFAULT_MAX_COUNT, DEFAULT_MAX_LEN};
use scholarnet_core::{
    all_author_metrics, author_metrics, classify, classify_with_radius, parse_bibtex, parse_jsonl,
    AuthorId, AuthorMetrics, BuildOptions, CopPartition, Corpus, Diagnostic, Distance,
    Researchers, Tier,
};
use serde::Serialize;

pub use error::CliError;
pub use export::{ExportKind, GraphExport};

/// The bundled demo corpus (`data/demo.jsonl`).
pub const DEMO_CORPUS: &str = include_str!("../data/demo.jsonl");

#[derive(Debug, Parser)]
#[command(name = "scholarnet", version, about = "Coauthorship, Erdős numbers, CoP tiers and citation indices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summarize a corpus and list its diagnostics.
    Ingest {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long)]
        json: bool,
    },
    /// Collaborative distance and shortest coauthor paths between two authors.
    Dist {
        #[command(flatten)]
        corpus: CorpusArgs,
        from: String,
        to: String,
        #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_COUNT)]
        max_count: usize,
        #[arg(long)]
        json: bool,
    },
    /// Community-of-Practice tiers around a main author.
    Cop {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long)]
        main: String,
        #[arg(long)]
        radius: Option<NonZeroUsize>,
        #[arg(long)]
        json: bool,
    },
    /// Citation indices per author.
    Metrics {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Report a single author.
        #[arg(long, alias = "author")]
        main: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Write DOT and GraphML views of a main author's neighbourhood.
    Export {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long)]
        main: String,
        #[arg(long, value_enum, default_value = "coauthor")]
        kind: ExportKind,
        /// Output stem; `.dot` and `.graphml` are written next to it. DOT
        /// goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        radius: Option<NonZeroUsize>,
    },
    /// Erdős numbers of every author reachable from the main author.
    Erdos {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long)]
        main: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CorpusArgs {
    /// Corpus file (JSONL or BibTeX).
    #[arg(long, env = "SCHOLARNET_CORPUS")]
    pub corpus: PathBuf,
    /// Override format detection by extension.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Keep author self-citations in the citing-authors relation.
    #[arg(long)]
    pub include_self_citation: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Jsonl,
    Bibtex,
}

impl Format {
    /// `.bib` is BibTeX; anything else is read as JSONL.
    pub fn infer(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("bib") => Format::Bibtex,
            _ => Format::Jsonl,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub corpus_path: PathBuf,
    pub format: Format,
    pub include_self_citation: bool,
}

impl From<&CorpusArgs> for RunConfig {
    fn from(a: &CorpusArgs) -> Self {
        RunConfig {
            corpus_path: a.corpus.clone(),
            format: a.format.unwrap_or_else(|| Format::infer(&a.corpus)),
            include_self_citation: a.include_self_citation,
        }
    }
}

impl RunConfig {
    pub fn load(&self) -> Result<Loaded, CliError> {
        let text = fs::read_to_string(&self.corpus_path).map_err(|source| CliError::Read {
            path: self.corpus_path.clone(),
            source,
        })?;
        let parsed = match self.format {
            Format::Jsonl => parse_jsonl(&text)?,
            Format::Bibtex => parse_bibtex(&text)?,
        };
        Ok(Loaded {
            corpus: parsed.corpus,
            diagnostics: parsed.diagnostics,
            options: BuildOptions {
                include_self_citation: self.include_self_citation,
            },
        })
    }
}

pub struct Loaded {
    pub corpus: Corpus,
    pub diagnostics: Vec<Diagnostic>,
    pub options: BuildOptions,
}

impl Loaded {
    pub fn researchers(&self, main: &str) -> Result<Researchers, CliError> {
        Ok(Researchers::build_with(
            &self.corpus,
            &AuthorId::new(main),
            self.options,
        )?)
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stderr: text,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    ..Outcome::default()
                }
            };
        }
    };
    let mut out = Outcome::default();
    if let Err(e) = execute(&cli.command, &mut out) {
        let _ = writeln!(out.stderr, "error: {e}");
        out.code = e.exit_code();
    }
    out
}

fn execute(cmd: &Command, out: &mut Outcome) -> Result<(), CliError> {
    match cmd {
        Command::Ingest { corpus, json } => {
            let loaded = RunConfig::from(corpus).load()?;
            for d in &loaded.diagnostics {
                let _ = writeln!(out.stderr, "warning: {d}");
            }
            out.stdout = cmd_ingest(&loaded, *json);
        }
        Command::Dist {
            corpus,
            from,
            to,
            max_len,
            max_count,
            json,
        } => {
            let loaded = load_quiet(corpus, out)?;
            out.stdout = cmd_dist(&loaded, from, to, *max_len, *max_count, *json)?;
        }
        Command::Cop {
            corpus,
            main,
            radius,
            json,
        } => {
            let loaded = load_quiet(corpus, out)?;
            out.stdout = cmd_cop(&loaded, main, *radius, *json)?;
        }
        Command::Metrics { corpus, main, json } => {
            let loaded = load_quiet(corpus, out)?;
            out.stdout = cmd_metrics(&loaded, main.as_deref(), *json)?;
        }
        Command::Export {
            corpus,
            main,
            kind,
            out: path,
            radius,
        } => {
            let loaded = load_quiet(corpus, out)?;
            let graph = build_export(&loaded, main, *kind, *radius)?;
            out.stdout = match path {
                None => graph.to_dot(),
                Some(p) => write_export(&graph, p)?,
            };
        }
        Command::Erdos { corpus, main, json } => {
            let loaded = load_quiet(corpus, out)?;
            out.stdout = cmd_erdos(&loaded, main, *json)?;
        }
    }
    Ok(())
}

fn load_quiet(args: &CorpusArgs, out: &mut Outcome) -> Result<Loaded, CliError> {
    let loaded = RunConfig::from(args).load()?;
    match loaded.diagnostics.len() {
        0 => {}
        n => {
            let _ = writeln!(
                out.stderr,
                "warning: {n} corpus {} (see `scholarnet ingest`)",
                plural(n, "diagnostic", "diagnostics")
            );
        }
    }
    Ok(loaded)
}

fn plural<'a>(n: usize, one: &'a str, many: &'a str) -> &'a str {
    if n == 1 {
        one
    } else {
        many
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
struct IngestSummary {
    publications: usize,
    authors: usize,
    citation_edges: usize,
    diagnostics: Vec<String>,
}

pub fn cmd_ingest(loaded: &Loaded, json: bool) -> String {
    let c = &loaded.corpus;
    let (pubs, authors, edges) = (
        c.publication_count(),
        c.published().len(),
        c.resolved_reference_count(),
    );
    if json {
        return to_json(&IngestSummary {
            publications: pubs,
            authors,
            citation_edges: edges,
            diagnostics: loaded.diagnostics.iter().map(ToString::to_string).collect(),
        });
    }
    let n = loaded.diagnostics.len();
    format!(
        "{pubs} {}, {authors} {}, {edges} {}\n{n} {}\n",
        plural(pubs, "publication", "publications"),
        plural(authors, "author", "authors"),
        plural(edges, "citation edge", "citation edges"),
        plural(n, "diagnostic", "diagnostics"),
    )
}

#[derive(Debug, Serialize)]
struct DistReport {
    from: String,
    to: String,
    distance: Option<usize>,
    z_dist: Option<usize>,
    paths: Vec<Vec<String>>,
}

pub fn cmd_dist(
    loaded: &Loaded,
    from: &str,
    to: &str,
    max_len: usize,
    max_count: usize,
    json: bool,
) -> Result<String, CliError> {
    let r = loaded.researchers(from)?;
    let (a, b) = (AuthorId::new(from), AuthorId::new(to));
    let distance = r.collab_distance(&a, &b)?;
    let paths = match distance {
        Distance::Unreachable => Vec::new(),
        Distance::Edges(_) => r.simple_paths(&a, &b, max_len, max_count)?,
    };
    if json {
        return Ok(to_json(&DistReport {
            from: from.to_string(),
            to: to.to_string(),
            distance: distance.edges(),
            z_dist: distance.nodes(),
            paths: paths
                .iter()
                .map(|p| p.nodes().iter().map(ToString::to_string).collect())
                .collect(),
        }));
    }
    let mut s = String::new();
    let _ = writeln!(s, "distance: {distance}");
    match distance.nodes() {
        Some(n) => {
            let _ = writeln!(s, "z_dist: {n}");
        }
        None => s.push_str("z_dist: unreachable\n"),
    }
    let _ = writeln!(s, "paths: {}", paths.len());
    for p in &paths {
        let _ = writeln!(s, "  {p}");
    }
    Ok(s)
}

fn partition(
    loaded: &Loaded,
    main: &str,
    radius: Option<NonZeroUsize>,
) -> Result<(Researchers, CopPartition), CliError> {
    let r = loaded.researchers(main)?;
    let p = match radius {
        Some(k) => classify_with_radius(&r, k),
        None => classify(&r),
    };
    Ok((r, p))
}

pub fn cmd_cop(
    loaded: &Loaded,
    main: &str,
    radius: Option<NonZeroUsize>,
    json: bool,
) -> Result<String, CliError> {
    let (_, p) = partition(loaded, main, radius)?;
    if json {
        return Ok(to_json(&p));
    }
    let citations: BTreeMap<AuthorId, u64> = all_author_metrics(&loaded.corpus)
        .into_iter()
        .map(|m| (m.author, m.total_citations))
        .collect();
    let mut s = String::new();
    for tier in Tier::ALL {
        let mut members: Vec<AuthorId> = p.members(tier).into_iter().collect();
        members.sort_by(|x, y| citations[y].cmp(&citations[x]).then_with(|| x.cmp(y)));
        let names: Vec<&str> = members.iter().map(AuthorId::as_str).collect();
        let _ = writeln!(s, "{} ({}): {}", tier.name(), members.len(), names.join(", "));
    }
    Ok(s)
}

pub fn cmd_metrics(loaded: &Loaded, author: Option<&str>, json: bool) -> Result<String, CliError> {
    let rows: Vec<AuthorMetrics> = match author {
        Some(a) => vec![author_metrics(&loaded.corpus, &AuthorId::new(a))?],
        None => all_author_metrics(&loaded.corpus),
    };
    if json {
        return Ok(to_json(&rows));
    }
    let mut s = String::from("author n_pubs total h g i10\n");
    for m in &rows {
        let _ = writeln!(
            s,
            "{} {} {} {} {} {}",
            m.author, m.n_pubs, m.total_citations, m.h, m.g, m.i10
        );
    }
    Ok(s)
}

pub fn cmd_erdos(loaded: &Loaded, main: &str, json: bool) -> Result<String, CliError> {
    let r = loaded.researchers(main)?;
    let numbers = r.erdos_numbers();
    if json {
        let m: BTreeMap<&str, usize> = numbers.iter().map(|(a, &n)| (a.as_str(), n)).collect();
        return Ok(to_json(&m));
    }
    let mut order: Vec<_> = numbers.iter().collect();
    order.sort_by_key(|(a, n)| (**n, (*a).clone()));
    let mut s = String::new();
    for (a, n) in order {
        let _ = writeln!(s, "{a} {n}");
    }
    let unreachable = r.published().len() - numbers.len();
    let _ = writeln!(s, "unreachable: {unreachable}");
    Ok(s)
}

pub fn build_export(
    loaded: &Loaded,
    main: &str,
    kind: ExportKind,
    radius: Option<NonZeroUsize>,
) -> Result<GraphExport, CliError> {
    let (r, p) = partition(loaded, main, radius)?;
    Ok(GraphExport::build(kind, &loaded.corpus, &r, &p))
}

/// Writes `<stem>.dot` and `<stem>.graphml`, replacing a `.dot`, `.gv` or
/// `.graphml` extension on `path` if present.
pub fn write_export(graph: &GraphExport, path: &Path) -> Result<String, CliError> {
    let stem = match path.extension().and_then(|e| e.to_str()) {
        Some("dot" | "gv" | "graphml") => path.with_extension(""),
        _ => path.to_path_buf(),
    };
    let dot = append_ext(&stem, "dot");
    let graphml = append_ext(&stem, "graphml");
    for (p, body) in [(&dot, graph.to_dot()), (&graphml, graph.to_graphml())] {
        fs::write(p, body).map_err(|source| CliError::Write {
            path: p.clone(),
            source,
        })?;
    }
    Ok(format!(
        "wrote {} and {} ({} nodes, {} edges)\n",
        dot.display(),
        graphml.display(),
        graph.nodes.len(),
        graph.edges.len()
    ))
}

fn append_ext(stem: &Path, ext: &str) -> PathBuf {
    let mut s = stem.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}
