use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use resolving_core::closed_forms;
use resolving_core::families::{FamilyKind, FamilySpec};
use resolving_core::io::{self, GraphDocument, ReportDocument, ReportFormat, ReportOptions, SourceFormat};
use resolving_core::metric_dim;
use resolving_core::rational::to_fraction_string;
use resolving_core::resolving::{self, run_in_pool, IndexOptions};

/// Resolving shares and the resolving topological index of graphs.
///
/// Wheel graphs follow the convention that `wheel:n` has n vertices in total
/// (a cycle on n-1 vertices plus a center).
#[derive(Parser)]
#[command(name = "resolving", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the resolving index and per-vertex average shares.
    Compute(ComputeArgs),
    /// Print a family graph as an edge list or DIMACS file.
    Gen(GenArgs),
    /// Compare published closed forms with the computed index over a range.
    Verify(VerifyArgs),
    /// Metric dimension (exact for small graphs, greedy upper bound otherwise).
    Dim(DimArgs),
    /// Time the index computation.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GraphSource {
    /// Graph file (edge list or DIMACS).
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    input: Option<PathBuf>,
    /// Named family, e.g. `petersen`, `wheel:9`, `kpartite:2,3,4`.
    #[arg(long)]
    family: Option<String>,
    /// Input format; auto-detected from a `p edge` header when omitted.
    #[arg(long, value_parser = ["edgelist", "dimacs"])]
    format: Option<String>,
    /// Accept k-partite parts of size 1.
    #[arg(long)]
    allow_unverified: bool,
}

impl GraphSource {
    fn load(&self) -> anyhow::Result<(String, GraphDocument)> {
        if let Some(spec) = &self.family {
            let spec: FamilySpec = spec.parse()?;
            let graph = if self.allow_unverified {
                spec.generate_unverified()?
            } else {
                spec.generate()?
            };
            let doc = GraphDocument {
                labels: None,
                graph,
                source_format: SourceFormat::Family,
                warnings: Vec::new(),
            };
            return Ok((format!("family:{spec}"), doc));
        }
        let path = self.input.as_ref().expect("clap enforces input or family");
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        let format = self.format.as_deref().map(str::parse::<SourceFormat>).transpose()?;
        let doc = io::parse_graph(&text, format).with_context(|| format!("in {}", path.display()))?;
        for w in &doc.warnings {
            eprintln!("warning: {}: {w}", path.display());
        }
        Ok((path.display().to_string(), doc))
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, default_value = "table", value_parser = ["json", "csv", "table"])]
    output: String,
    /// Include every pair's resolving neighborhood.
    #[arg(long)]
    per_pair: bool,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: String,
    #[arg(long, default_value = "edgelist", value_parser = ["edgelist", "dimacs"])]
    output: String,
    #[arg(long)]
    allow_unverified: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Family kind: path, cycle, complete, kpartite, wheel, friendship, petersen.
    #[arg(long)]
    family: String,
    /// Inclusive parameter range `A..B` (part sizes for kpartite).
    #[arg(long)]
    range: Option<String>,
    /// Explicit kpartite part-size lists, e.g. `--parts 2,3 --parts 2,2,4`.
    #[arg(long)]
    parts: Vec<String>,
    /// Inclusive range of part counts for kpartite with `--range`.
    #[arg(long, default_value = "2..2")]
    k: String,
    /// Skip the definitional computation above this many vertices.
    #[arg(long, default_value_t = closed_forms::DEFAULT_BRUTE_FORCE_CAP)]
    cap: usize,
}

#[derive(Args)]
struct DimArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, default_value_t = metric_dim::DEFAULT_EXACT_CAP)]
    exact_cap: usize,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 3)]
    repeat: usize,
    #[arg(long)]
    threads: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Gen(args) => gen(args),
        Command::Verify(args) => verify(args),
        Command::Dim(args) => dim(args),
        Command::Bench(args) => bench(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn compute(args: ComputeArgs) -> anyhow::Result<ExitCode> {
    let (input, doc) = args.source.load()?;
    let format: ReportFormat = args.output.parse()?;
    let opts = IndexOptions {
        per_pair: args.per_pair,
        threads: args.threads,
    };
    let report = resolving::resolving_index_with(&doc.graph, &opts)?;
    let report = ReportDocument::new(input, &doc, report, ReportOptions { per_pair: args.per_pair });
    print!("{}", io::write_report(&report, format));
    Ok(ExitCode::SUCCESS)
}

fn gen(args: GenArgs) -> anyhow::Result<ExitCode> {
    let spec: FamilySpec = args.family.parse()?;
    let g = if args.allow_unverified {
        spec.generate_unverified()?
    } else {
        spec.generate()?
    };
    match args.output.as_str() {
        "dimacs" => print!("{}", io::write_dimacs(&g)),
        _ => print!("{}", io::write_edge_list(&g)),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_range(text: &str) -> anyhow::Result<(usize, usize)> {
    let (a, b) = text
        .split_once("..")
        .with_context(|| format!("range {text:?} must look like A..B"))?;
    let (a, b): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
    if a > b {
        bail!("empty range {text:?}");
    }
    Ok((a, b))
}

fn verify_specs(args: &VerifyArgs) -> anyhow::Result<Vec<FamilySpec>> {
    let kind: FamilyKind = args.family.parse()?;
    match kind {
        FamilyKind::Petersen => Ok(vec![FamilySpec::Petersen]),
        FamilyKind::CompleteMultipartite => {
            let mut specs = Vec::new();
            for list in &args.parts {
                specs.push(format!("kpartite:{list}").parse()?);
            }
            if let Some(range) = &args.range {
                let (lo, hi) = parse_range(range)?;
                let (k_lo, k_hi) = parse_range(&args.k)?;
                for k in k_lo..=k_hi {
                    specs.extend(
                        closed_forms::multipartite_lists(k, lo..=hi)
                            .into_iter()
                            .map(FamilySpec::CompleteMultipartite),
                    );
                }
            }
            if specs.is_empty() {
                bail!("kpartite needs --parts or --range");
            }
            Ok(specs)
        }
        _ => {
            let range = args
                .range
                .as_deref()
                .with_context(|| format!("{kind} needs --range A..B"))?;
            let (lo, hi) = parse_range(range)?;
            (lo..=hi)
                .map(|n| FamilySpec::with_size(kind, n).map_err(Into::into))
                .collect()
        }
    }
}

fn verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let mut novel = 0;
    for spec in verify_specs(&args)? {
        let result = closed_forms::validated_index_with_cap(&spec, args.cap)?;
        println!("{result}");
        if result.is_novel() {
            novel += 1;
            if let Some(note) = &result.note {
                eprintln!("  {note}");
            }
        }
    }
    if novel > 0 {
        eprintln!("{novel} novel discrepancies");
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn dim(args: DimArgs) -> anyhow::Result<ExitCode> {
    let (_, doc) = args.source.load()?;
    let g = &doc.graph;
    let fmt_set = |set: &[usize]| {
        set.iter()
            .map(|&v| doc.label(v).map_or_else(|| v.to_string(), str::to_string))
            .collect::<Vec<_>>()
            .join(" ")
    };
    if g.vertex_count() <= args.exact_cap.min(metric_dim::EXACT_LIMIT) {
        let basis = metric_dim::metric_basis_exact(g, args.exact_cap)?;
        println!("metric dimension = {}", basis.len());
        println!("basis: {}", fmt_set(&basis));
    } else {
        let set = metric_dim::greedy_resolving_set(g)?;
        println!("metric dimension <= {} (upper bound, greedy)", set.len());
        println!("resolving set: {}", fmt_set(&set));
    }
    Ok(ExitCode::SUCCESS)
}

fn bench(args: BenchArgs) -> anyhow::Result<ExitCode> {
    let spec: FamilySpec = args.family.parse()?;
    let g = spec.generate()?;
    let n = g.vertex_count();
    let pairs = (n * (n - 1) / 2) as f64;
    let mut times = Vec::with_capacity(args.repeat);
    let mut index = None;
    for _ in 0..args.repeat.max(1) {
        let start = Instant::now();
        let report = run_in_pool(args.threads, || resolving::resolving_index(&g))?;
        times.push(start.elapsed());
        index = Some(report.index);
    }
    let best = times.iter().min().copied().unwrap_or(Duration::ZERO);
    let total: Duration = times.iter().sum();
    println!("family: {spec} (n = {n}, {pairs} pairs)");
    println!("runs: {}, total {:.3} s, best {:.3} s", times.len(), total.as_secs_f64(), best.as_secs_f64());
    println!("pairs/second (best): {:.0}", pairs / best.as_secs_f64().max(1e-9));
    if let Some(index) = index {
        println!("index = {}", to_fraction_string(&index));
        if let Ok(published) = closed_forms::published_index(&spec) {
            let verdict = if published == index {
                "matches"
            } else if closed_forms::validated_formula(&spec)? == index {
                "differs; matches the corrected form"
            } else {
                "MISMATCH"
            };
            println!("published closed form {}: {verdict}", to_fraction_string(&published));
        }
    }
    Ok(ExitCode::SUCCESS)
}
