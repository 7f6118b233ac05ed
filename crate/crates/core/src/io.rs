//! Graph file formats and report serialization.
//!
//! Two input formats are accepted:
//!
//! * **edge list**: one edge per line as two whitespace-separated labels;
//!   `#` comments and blank lines are skipped; ids are assigned in order of
//!   first appearance.
//! * **DIMACS**: `c` comments, one `p edge <n> <m>` header, then
//!   `e <u> <v>` lines with 1-based ids.
//!
//! Reports render as JSON, CSV or an aligned text table. Rationals are
//! written as `"p/q"` in lowest terms next to a 12-significant-digit decimal.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::rational::{to_decimal_string, to_fraction_string};
use crate::resolving::ShareReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceFormat {
    EdgeList,
    Dimacs,
    Family,
}

impl FromStr for SourceFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(SourceFormat::EdgeList),
            "dimacs" => Ok(SourceFormat::Dimacs),
            "family" => Ok(SourceFormat::Family),
            other => Err(Error::Format(format!("unknown graph format {other:?}"))),
        }
    }
}

/// A parsed graph together with its optional vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub labels: Option<Vec<String>>,
    pub graph: Graph,
    pub source_format: SourceFormat,
    /// Non-fatal findings such as a DIMACS edge count mismatch.
    pub warnings: Vec<String>,
}

impl GraphDocument {
    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty())
}

pub fn parse_edge_list(text: &str) -> Result<GraphDocument> {
    let mut ids: HashMap<&str, VertexId> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for (line_no, line) in content_lines(text).filter(|(_, l)| !l.starts_with('#')) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected 2 labels, found {}", tokens.len()),
            });
        };
        if a == b {
            return Err(Error::Parse {
                line: line_no,
                message: format!("self-loop on {a:?}"),
            });
        }
        let mut id = |label| {
            *ids.entry(label).or_insert_with(|| {
                labels.push(label.to_string());
                labels.len() - 1
            })
        };
        let (u, v) = (id(a), id(b));
        edges.push((u, v));
    }
    if labels.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no edges".into(),
        });
    }
    let graph = Graph::new(labels.len(), &edges)?;
    Ok(GraphDocument {
        labels: Some(labels),
        graph,
        source_format: SourceFormat::EdgeList,
        warnings: Vec::new(),
    })
}

pub fn parse_dimacs(text: &str) -> Result<GraphDocument> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (line_no, line) in content_lines(text) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let number = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| parse_err(format!("{t:?} is not a non-negative integer")))
        };
        match tokens[0] {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(parse_err("duplicate problem line".into()));
                }
                let ["p", "edge", n, m] = tokens[..] else {
                    return Err(parse_err("expected `p edge <n> <m>`".into()));
                };
                header = Some((number(n)?, number(m)?));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(parse_err("edge before `p edge` header (missing header)".into()));
                };
                let ["e", a, b] = tokens[..] else {
                    return Err(parse_err("expected `e <u> <v>`".into()));
                };
                let (a, b) = (number(a)?, number(b)?);
                for id in [a, b] {
                    if id == 0 || id > n {
                        return Err(parse_err(format!("vertex id {id} out of range [1, {n}]")));
                    }
                }
                if a == b {
                    return Err(parse_err(format!("self-loop on {a}")));
                }
                edges.push((a - 1, b - 1));
            }
            other => return Err(parse_err(format!("unknown line type {other:?}"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::Parse {
            line: 0,
            message: "missing `p edge <n> <m>` header".into(),
        });
    };
    let graph = Graph::new(n, &edges)?;
    let mut warnings = Vec::new();
    if edges.len() != m {
        warnings.push(format!(
            "header declares {m} edges but {} were listed",
            edges.len()
        ));
    }
    Ok(GraphDocument {
        labels: None,
        graph,
        source_format: SourceFormat::Dimacs,
        warnings,
    })
}

/// DIMACS if the first line that is not a comment starts with `p edge`.
pub fn detect_format(text: &str) -> SourceFormat {
    let first = content_lines(text)
        .map(|(_, l)| l)
        .find(|l| !l.starts_with('#') && !l.starts_with("c ") && *l != "c");
    match first {
        Some(line) if line.split_whitespace().take(2).eq(["p", "edge"]) => SourceFormat::Dimacs,
        _ => SourceFormat::EdgeList,
    }
}

/// Parses `text` as `format`, or auto-detects when `format` is `None`.
pub fn parse_graph(text: &str, format: Option<SourceFormat>) -> Result<GraphDocument> {
    match format.unwrap_or_else(|| detect_format(text)) {
        SourceFormat::Dimacs => parse_dimacs(text),
        SourceFormat::EdgeList => parse_edge_list(text),
        SourceFormat::Family => Err(Error::Format(
            "family specs are not a file format".into(),
        )),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Table,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "table" => Ok(ReportFormat::Table),
            other => Err(Error::Format(format!("unknown report format {other:?}"))),
        }
    }
}

/// Options echoed into reports. Thread count is deliberately absent so that
/// output does not depend on it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ReportOptions {
    pub per_pair: bool,
}

/// A [`ShareReport`] plus what is needed to render it.
#[derive(Debug, Clone)]
pub struct ReportDocument {
    pub input: String,
    pub edge_count: usize,
    pub labels: Option<Vec<String>>,
    pub report: ShareReport,
    pub options: ReportOptions,
    pub version: String,
}

impl ReportDocument {
    pub fn new(input: impl Into<String>, doc: &GraphDocument, report: ShareReport, options: ReportOptions) -> Self {
        Self {
            input: input.into(),
            edge_count: doc.graph.edge_count(),
            labels: doc.labels.clone(),
            report,
            options,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }
}

#[derive(Serialize)]
struct JsonRational {
    rational: String,
    decimal: String,
}

#[derive(Serialize)]
struct JsonVertex<'a> {
    id: VertexId,
    label: Option<&'a str>,
    avg_share_rational: String,
    avg_share_decimal: String,
    resolvent_count: u64,
}

#[derive(Serialize)]
struct JsonPair {
    u: VertexId,
    v: VertexId,
    size: usize,
    members: Vec<VertexId>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    input: &'a str,
    n: usize,
    m: usize,
    index: JsonRational,
    per_vertex: Vec<JsonVertex<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    per_pair: Option<Vec<JsonPair>>,
    options: ReportOptions,
    version: &'a str,
}

pub fn write_report(doc: &ReportDocument, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => write_json(doc),
        ReportFormat::Csv => write_csv(doc),
        ReportFormat::Table => write_table(doc),
    }
}

fn write_json(doc: &ReportDocument) -> String {
    let r = &doc.report;
    let json = JsonReport {
        input: &doc.input,
        n: r.n,
        m: doc.edge_count,
        index: JsonRational {
            rational: to_fraction_string(&r.index),
            decimal: to_decimal_string(&r.index),
        },
        per_vertex: r
            .per_vertex
            .iter()
            .map(|s| JsonVertex {
                id: s.vertex,
                label: doc.label(s.vertex),
                avg_share_rational: to_fraction_string(&s.avg_share),
                avg_share_decimal: to_decimal_string(&s.avg_share),
                resolvent_count: s.resolvent_count,
            })
            .collect(),
        per_pair: r.per_pair.as_ref().map(|pairs| {
            pairs
                .iter()
                .map(|d| JsonPair {
                    u: d.pair.u(),
                    v: d.pair.v(),
                    size: d.size(),
                    members: d.members.clone(),
                })
                .collect()
        }),
        options: doc.options,
        version: &doc.version,
    };
    let mut out = serde_json::to_string_pretty(&json).expect("report serializes");
    out.push('\n');
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Per-pair detail is not representable in the CSV layout and is omitted.
fn write_csv(doc: &ReportDocument) -> String {
    let mut out = String::from("vertex,label,avg_share,resolvent_count\n");
    for s in &doc.report.per_vertex {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            s.vertex,
            csv_field(doc.label(s.vertex).unwrap_or("")),
            to_fraction_string(&s.avg_share),
            s.resolvent_count
        );
    }
    let _ = writeln!(out, "INDEX,,{},", to_fraction_string(&doc.report.index));
    out
}

fn write_table(doc: &ReportDocument) -> String {
    let r = &doc.report;
    let mut out = String::new();
    let _ = writeln!(out, "input: {}", doc.input);
    let _ = writeln!(out, "n = {}, m = {}", r.n, doc.edge_count);

    if let Some(pairs) = &r.per_pair {
        out.push('\n');
        let _ = writeln!(out, "{:<16} {:>6}  members", "pair", "size");
        for d in pairs {
            let members: Vec<String> = d.members.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{:<16} {:>6}  {}", d.pair.to_string(), d.size(), members.join(" "));
        }
    }

    let rows: Vec<[String; 5]> = r
        .per_vertex
        .iter()
        .map(|s| {
            [
                s.vertex.to_string(),
                doc.label(s.vertex).unwrap_or("-").to_string(),
                to_fraction_string(&s.avg_share),
                to_decimal_string(&s.avg_share),
                s.resolvent_count.to_string(),
            ]
        })
        .collect();
    let header = ["vertex", "label", "avg_share", "decimal", "resolvent_count"];
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    out.push('\n');
    let fmt_row = |cells: [&str; 5]| {
        let mut line = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            if i == 1 {
                let _ = write!(line, "{cell:<w$}");
            } else {
                let _ = write!(line, "{cell:>w$}");
            }
        }
        line.trim_end().to_string()
    };
    let _ = writeln!(out, "{}", fmt_row(header));
    for row in &rows {
        let _ = writeln!(out, "{}", fmt_row(row.each_ref().map(String::as_str)));
    }
    out.push('\n');
    let _ = writeln!(out, "index ~ {}", to_decimal_string(&r.index));
    let _ = writeln!(out, "index = {}", to_fraction_string(&r.index));
    out
}
