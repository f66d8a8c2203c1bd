//! spreadnet command line: reproducible influence-propagation runs.
//!
//! `generate` builds seeded small-world instances, `compute` runs the
//! index batch over a hurdle-coefficient grid and classifies launchers and
//! targets, `metrics` computes the seven baseline centralities, `report`
//! writes the full per-node report files, `all` does everything in one pass
//! and `shortlist` queries a classified graph for candidate nodes.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use spreadnet::{
    classify, emit_report, load_edge_list, orient, shortlist, strong_influencer_pct,
    watts_strogatz, ClassifyMethod, Graph, HurdleCoefficient, IndexTable, IngestOptions,
    IngestSummary, MetricTable, NodeClass, PartitionReport, ReportFormat, ReportMeta,
    ShortlistQuery, SortKey, WsParams,
};

#[derive(Parser)]
#[command(
    name = "spreadnet",
    version,
    about = "Deterministic influence-propagation indices for social graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Edge-list file: one arc per line, two integer node labels, '#'/'%'
    /// comments.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,

    /// Expand each line into both arc directions (undirected dataset).
    #[arg(long)]
    undirected: bool,

    /// Reverse every arc before storage (datasets that record "i follows j").
    #[arg(long)]
    flip: bool,
}

#[derive(Args, Clone)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Hurdle coefficient; repeat for a grid, e.g. --alpha 1.0 --alpha 1.5.
    #[arg(long, required = true, value_parser = parse_alpha, value_name = "ALPHA")]
    alpha: Vec<HurdleCoefficient>,

    /// Classifier: `gap` or `threshold=<t>` with t in [0, 1].
    #[arg(long, default_value = "gap", value_parser = parse_classifier)]
    classifier: ClassifyMethod,

    /// Coverage level for the strong-influencer column of the summary.
    #[arg(long, default_value_t = 0.99)]
    coverage: f64,

    /// Report file; with several --alpha values the stem gains an
    /// `-a<alpha>` suffix per report.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Report format.
    #[arg(long, default_value = "csv", value_parser = parse_format)]
    format: ReportFormat,

    /// Worker threads for the cascade batch (default: all cores). Results
    /// are identical for every worker count.
    #[arg(long, value_name = "N")]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a Watts-Strogatz small-world graph, optionally partially
    /// oriented, and write it as an edge list.
    Generate {
        /// Node count.
        #[arg(long = "n", visible_alias = "nodes", value_name = "N")]
        nodes: usize,
        /// Ring-lattice degree (even, < n).
        #[arg(long)]
        k: usize,
        /// Rewiring probability.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Fraction of edges kept bidirected; 1.0 keeps the graph undirected.
        #[arg(long, default_value_t = 1.0)]
        orient: f64,
        /// RNG seed; identical seeds reproduce identical graphs.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Output edge-list path.
        #[arg(long, visible_alias = "out", value_name = "FILE")]
        emit: PathBuf,
    },
    /// Compute ILP/ITP indices over a hurdle grid, classify launchers and
    /// targets, print a summary table and optionally write reports.
    Compute(ComputeArgs),
    /// Compute the seven baseline centrality metrics.
    Metrics {
        #[command(flatten)]
        input: InputArgs,
        /// Output file; prints a table to stdout when omitted.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Output format.
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: ReportFormat,
    },
    /// Like `compute`, but always writes the full per-node report files.
    Report(ReportArgs),
    /// Full pipeline: indices, metrics, reports plus a metrics sidecar and a
    /// low-degree launcher preview.
    All(ReportArgs),
    /// Query a classified graph for launcher/target candidates.
    Shortlist {
        #[command(flatten)]
        input: InputArgs,
        /// Hurdle coefficient for the classification.
        #[arg(long, value_parser = parse_alpha)]
        alpha: HurdleCoefficient,
        /// `launchers` or `targets`.
        #[arg(long, value_parser = parse_class, default_value = "launchers")]
        class: NodeClass,
        /// degree-asc | degree-desc | betweenness-desc | pagerank-desc |
        /// closeness-desc
        #[arg(long, value_parser = parse_sort_key, default_value = "degree-asc")]
        sort: SortKey,
        /// Maximum number of nodes to list.
        #[arg(long, default_value_t = 10)]
        limit: usize,
        /// Keep only nodes with degree >= this bound.
        #[arg(long)]
        min_degree: Option<usize>,
        /// Keep only nodes with degree <= this bound.
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

#[derive(Args, Clone)]
struct ReportArgs {
    #[command(flatten)]
    compute: ComputeArgs,
}

fn parse_alpha(s: &str) -> Result<HurdleCoefficient, String> {
    HurdleCoefficient::parse(s).map_err(|e| e.to_string())
}

fn parse_classifier(s: &str) -> Result<ClassifyMethod, String> {
    s.parse().map_err(|e: spreadnet::Error| e.to_string())
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    s.parse().map_err(|e: spreadnet::Error| e.to_string())
}

fn parse_class(s: &str) -> Result<NodeClass, String> {
    s.parse().map_err(|e: spreadnet::Error| e.to_string())
}

fn parse_sort_key(s: &str) -> Result<SortKey, String> {
    s.parse().map_err(|e: spreadnet::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> spreadnet::Result<()> {
    match command {
        Command::Generate {
            nodes,
            k,
            p,
            orient: o,
            seed,
            emit,
        } => {
            let params = WsParams {
                n: nodes,
                k,
                p,
                rng_seed: seed,
            };
            let g = watts_strogatz(&params)?;
            let g = orient(&g, o, seed)?;
            // provenance travels with the file; readers skip '#' lines
            let mut out = std::io::BufWriter::new(std::fs::File::create(&emit)?);
            use std::io::Write;
            writeln!(
                out,
                "# spreadnet ws graph: n={nodes} k={k} p={p} o={o} seed={seed}"
            )?;
            spreadnet::ingest::write_edge_list_to(&g, &mut out)?;
            out.flush()?;
            match g.edge_count() {
                Some(m) => eprintln!(
                    "generated ws graph: {} nodes, {m} undirected edges -> {}",
                    g.node_count(),
                    emit.display()
                ),
                None => eprintln!(
                    "generated ws graph: {} nodes, {} arcs (o = {o}) -> {}",
                    g.node_count(),
                    g.arc_count(),
                    emit.display()
                ),
            }
            Ok(())
        }
        Command::Compute(args) => in_pool(args.workers, || compute_pipeline(&args, false, false)),
        Command::Report(ReportArgs { compute }) => {
            if compute.out.is_none() {
                return Err(spreadnet::Error::InvalidQuery {
                    msg: "report requires --out".into(),
                });
            }
            in_pool(compute.workers, || compute_pipeline(&compute, false, false))
        }
        Command::All(ReportArgs { compute }) => {
            if compute.out.is_none() {
                return Err(spreadnet::Error::InvalidQuery {
                    msg: "all requires --out".into(),
                });
            }
            in_pool(compute.workers, || compute_pipeline(&compute, true, true))
        }
        Command::Metrics { input, out, format } => {
            let (g, summary) = ingest(&input)?;
            print_summary(&summary, &g);
            let m = MetricTable::compute(&g)?;
            let text = match format {
                ReportFormat::Csv => metrics_csv(&g, &m),
                ReportFormat::Json => metrics_json(&g, &m)?,
            };
            match out {
                Some(path) => std::fs::write(&path, text)?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Shortlist {
            input,
            alpha,
            class,
            sort,
            limit,
            min_degree,
            max_degree,
        } => {
            let (g, summary) = ingest(&input)?;
            print_summary(&summary, &g);
            let t = IndexTable::compute(&g, &alpha)?;
            let partition = classify(&t, &ClassifyMethod::gap());
            let m = MetricTable::compute(&g)?;
            let q = ShortlistQuery {
                class,
                sort_key: sort,
                limit,
                min_degree,
                max_degree,
            };
            let picks = shortlist(&partition, &m, &q)?;
            println!("node,degree,ilp,itp");
            for v in picks {
                println!(
                    "{},{},{:.6},{:.6}",
                    g.label(v),
                    g.out_degree(v),
                    t.ilp[v as usize],
                    t.itp[v as usize]
                );
            }
            Ok(())
        }
    }
}

/// Runs `f` inside a rayon pool of the requested size; the default pool is
/// used when no worker count is given.
fn in_pool<R>(workers: Option<usize>, f: impl FnOnce() -> R + Send) -> R
where
    R: Send,
{
    match workers {
        None => f(),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("failed to build worker pool")
            .install(f),
    }
}

fn ingest(input: &InputArgs) -> spreadnet::Result<(Graph, IngestSummary)> {
    let opts = IngestOptions {
        treat_as_undirected: input.undirected,
        flip_orientation: input.flip,
        ..IngestOptions::default()
    };
    load_edge_list(&input.input, &opts)
}

fn print_summary(s: &IngestSummary, g: &Graph) {
    eprintln!(
        "loaded graph: {} nodes, {} arcs ({}); lines read {}, loops removed {}, duplicates collapsed {}",
        g.node_count(),
        g.arc_count(),
        g.kind().as_str(),
        s.arcs_read,
        s.loops_removed,
        s.duplicates_collapsed,
    );
    if s.extra_column_lines > 0 {
        eprintln!(
            "warning: {} data line(s) carried extra columns; only the first two were used",
            s.extra_column_lines
        );
    }
    if s.redundant_flip {
        eprintln!("warning: --flip has no effect on an undirected expansion");
    }
}

fn compute_pipeline(
    args: &ComputeArgs,
    with_metrics_sidecar: bool,
    with_preview: bool,
) -> spreadnet::Result<()> {
    let (g, summary) = ingest(&args.input)?;
    print_summary(&summary, &g);

    // metrics feed the report files; skip the cost when nothing is written
    let metrics = match &args.out {
        Some(_) => Some(MetricTable::compute(&g)?),
        None => None,
    };
    let meta = ReportMeta {
        graph_provenance: args.input.input.display().to_string(),
        rng_seed: None,
    };

    println!(
        "{:>8} {:>10} {:>10} {:>8} {:>9} {:>9} {:>8} {:>12}",
        "alpha", "launchers", "launch%", "mibp", "targets", "target%", "mtbp", "strong@cov%"
    );
    let mut last_partition: Option<(PartitionReport, IndexTable)> = None;
    for alpha in &args.alpha {
        let t = IndexTable::compute(&g, alpha)?;
        let r = classify(&t, &args.classifier);
        let strong = strong_influencer_pct(&t, args.coverage)?;
        println!(
            "{:>8} {:>10} {:>10.2} {:>8} {:>9} {:>9.2} {:>8} {:>12.2}",
            alpha.as_str(),
            r.launchers.len(),
            r.launcher_pct() * 100.0,
            r.mibp().map_or("-".into(), |v| format!("{v:.4}")),
            r.targets.len(),
            r.target_pct() * 100.0,
            r.mtbp().map_or("-".into(), |v| format!("{v:.4}")),
            strong * 100.0,
        );
        for (name, side) in [("launchers", &r.launchers), ("targets", &r.targets)] {
            if let Some(d) = &side.diagnostic {
                eprintln!("note: {name} at alpha {}: {d}", alpha.as_str());
            }
        }

        if let (Some(base), Some(m)) = (&args.out, &metrics) {
            let path = alpha_path(base, alpha, args.alpha.len() > 1);
            emit_report(&g, &t, m, &r, &meta, &path, args.format)?;
            eprintln!("report written to {}", path.display());
        }
        last_partition = Some((r, t));
    }

    if with_metrics_sidecar {
        if let (Some(base), Some(m)) = (&args.out, &metrics) {
            let path = suffixed(base, "-metrics");
            let text = match args.format {
                ReportFormat::Csv => metrics_csv(&g, m),
                ReportFormat::Json => metrics_json(&g, m)?,
            };
            std::fs::write(&path, text)?;
            eprintln!("metrics written to {}", path.display());
        }
    }

    if with_preview {
        if let (Some((r, t)), Some(m)) = (&last_partition, &metrics) {
            let q = ShortlistQuery {
                class: NodeClass::Launchers,
                sort_key: SortKey::DegreeAsc,
                limit: 10,
                min_degree: None,
                max_degree: None,
            };
            let picks = shortlist(r, m, &q)?;
            if !picks.is_empty() {
                println!(
                    "low-degree launchers at alpha {} (cheapest effective seeds first):",
                    r.alpha.as_str()
                );
                for v in picks {
                    println!(
                        "  node {:<8} degree {:<6} ilp {:.4}",
                        g.label(v),
                        g.out_degree(v),
                        t.ilp[v as usize]
                    );
                }
            }
        }
    }
    Ok(())
}

/// `base.csv` stays `base.csv` for a single alpha; a grid writes
/// `base-a1.5.csv`, `base-a3.0.csv`, ...
fn alpha_path(base: &Path, alpha: &HurdleCoefficient, multi: bool) -> PathBuf {
    if !multi {
        return base.to_path_buf();
    }
    suffixed(base, &format!("-a{}", alpha.as_str()))
}

fn suffixed(base: &Path, suffix: &str) -> PathBuf {
    let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("report");
    let ext = base.extension().and_then(|s| s.to_str());
    let name = match ext {
        Some(ext) => format!("{stem}{suffix}.{ext}"),
        None => format!("{stem}{suffix}"),
    };
    base.with_file_name(name)
}

fn metrics_csv(g: &Graph, m: &MetricTable) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "node,out_degree,eccentricity,closeness,betweenness,eigenvector,pagerank,authority,hub"
    );
    let mut order: Vec<u32> = (0..g.node_count() as u32).collect();
    order.sort_by_key(|&v| g.label(v));
    for v in order {
        let i = v as usize;
        let _ = writeln!(
            out,
            "{},{},{},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6}",
            g.label(v),
            m.degree[i],
            m.eccentricity[i],
            m.closeness[i],
            m.betweenness[i],
            m.eigenvector[i],
            m.pagerank[i],
            m.authority[i],
            m.hub[i]
        );
    }
    out
}

fn metrics_json(g: &Graph, m: &MetricTable) -> spreadnet::Result<String> {
    #[derive(serde::Serialize)]
    struct Row {
        node: u64,
        out_degree: usize,
        eccentricity: u32,
        closeness: f64,
        betweenness: f64,
        eigenvector: f64,
        pagerank: f64,
        authority: f64,
        hub: f64,
    }
    let mut order: Vec<u32> = (0..g.node_count() as u32).collect();
    order.sort_by_key(|&v| g.label(v));
    let rows: Vec<Row> = order
        .into_iter()
        .map(|v| {
            let i = v as usize;
            Row {
                node: g.label(v),
                out_degree: m.degree[i],
                eccentricity: m.eccentricity[i],
                closeness: m.closeness[i],
                betweenness: m.betweenness[i],
                eigenvector: m.eigenvector[i],
                pagerank: m.pagerank[i],
                authority: m.authority[i],
                hub: m.hub[i],
            }
        })
        .collect();
    Ok(serde_json::to_string_pretty(&rows)?)
}
