use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use steadystate::harness::{
    analyze_file, run_powerlaw_sweep, run_table1, AnalyzeConfig, Execution, ExperimentReport,
    Metric, ModelKind, RunRecord, SweepConfig, Table1Config, TABLE1,
};
use steadystate::io::{read_degree_sequence, write_edge_list, InputKind};
use steadystate::{
    degree_histogram, gen_config_from_sequence, gen_er_gnm, gen_fixed_degree_growth, ss_run, Graph,
    RewiringVariant, SimRng, SsParams,
};

#[derive(Parser)]
#[command(
    name = "steadystate",
    version,
    about = "Steady-state rewiring graphs and d_max experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Model {
    /// G(n, m) followed by r rewiring steps
    Ss,
    /// Uniform G(n, m)
    Gnm,
    /// Preferential growth with d edges per arriving vertex
    Growth,
    /// Configuration model on a degree-sequence file
    Config,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    /// Edge list, one `u v` pair per line
    Edges,
    /// Degree histogram as `degree,count`
    Csv,
    /// Measurement summary
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one graph
    Generate {
        #[arg(value_enum)]
        model: Model,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Edges per arriving vertex (growth)
        #[arg(long)]
        d: Option<usize>,
        /// Rewiring steps (ss)
        #[arg(long, default_value = "10000000", value_parser = parse_count)]
        r: u64,
        /// Degree-sequence file (config)
        #[arg(long)]
        seq: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "incident")]
        variant: RewiringVariant,
        #[arg(long, value_enum, default_value = "edges")]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Measure an edge list, or realize and measure a degree sequence
    Analyze {
        path: PathBuf,
        /// Input format; detected from the first data line when omitted
        #[arg(long)]
        kind: Option<InputKind>,
        /// Comma-separated subset of degeneracy,min_degree,histogram,fit
        #[arg(long, value_delimiter = ',')]
        metrics: Option<Vec<Metric>>,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Steady-state d_max at each crawled site's size, against the published table
    Table1 {
        /// Comma-separated site labels; all sixteen when omitted
        #[arg(long, value_delimiter = ',')]
        sites: Option<Vec<String>>,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long, default_value = "10000000", value_parser = parse_count)]
        r: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "incident")]
        variant: RewiringVariant,
        /// `site=path` degree-sequence file adding configuration-model runs
        #[arg(long = "degree-seq", value_parser = parse_site_path)]
        degree_seq: Vec<(String, PathBuf)>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Leave elapsed_ms empty so reports are byte-for-byte reproducible
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree histograms and power-law fits over a size x density grid
    Sweep {
        #[arg(long, value_delimiter = ',', default_value = "500,3000")]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        densities: Vec<f64>,
        #[arg(long, default_value = "10000000", value_parser = parse_count)]
        r: u64,
        /// Comma-separated step counts; defaults to 0, 100000 and r
        #[arg(long, value_delimiter = ',', value_parser = parse_count)]
        checkpoints: Option<Vec<u64>>,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "incident")]
        variant: RewiringVariant,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory receiving one `degree,count` CSV per snapshot
        #[arg(long)]
        histograms: Option<PathBuf>,
    },
}

/// Accepts plain integers, `_` separators and `1e7`-style powers of ten.
fn parse_count(s: &str) -> Result<u64, String> {
    let s = s.replace('_', "");
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    if let Some((mantissa, exp)) = s.split_once(['e', 'E']) {
        let mantissa: u64 = mantissa.parse().map_err(|_| format!("bad count `{s}`"))?;
        let exp: u32 = exp.parse().map_err(|_| format!("bad count `{s}`"))?;
        return 10u64
            .checked_pow(exp)
            .and_then(|p| p.checked_mul(mantissa))
            .ok_or_else(|| format!("count `{s}` overflows"));
    }
    Err(format!("bad count `{s}`"))
}

fn parse_site_path(s: &str) -> Result<(String, PathBuf), String> {
    let (site, path) = s
        .split_once('=')
        .ok_or_else(|| format!("expected site=path, got `{s}`"))?;
    Ok((site.to_string(), PathBuf::from(path)))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn render(report: &ExperimentReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    }
}

fn execution(workers: usize, no_timing: bool) -> Execution {
    Execution {
        workers,
        record_timing: !no_timing,
    }
}

fn require<T>(value: Option<T>, flag: &str, model: &str) -> Result<T> {
    value.with_context(|| format!("`generate {model}` needs --{flag}"))
}

#[allow(clippy::too_many_arguments)]
fn generate(
    model: Model,
    n: Option<usize>,
    m: Option<usize>,
    d: Option<usize>,
    r: u64,
    seq: Option<PathBuf>,
    seed: u64,
    variant: RewiringVariant,
) -> Result<(Graph, RunRecord)> {
    let (graph, kind, label) = match model {
        Model::Ss => {
            let (n, m) = (require(n, "n", "ss")?, require(m, "m", "ss")?);
            let run = ss_run(&SsParams::new(n, m, r, seed).with_variant(variant))?;
            (
                run.graph,
                ModelKind::SteadyState,
                format!("ss n={n} m={m} r={r} variant={variant}"),
            )
        }
        Model::Gnm => {
            let (n, m) = (require(n, "n", "gnm")?, require(m, "m", "gnm")?);
            let g = gen_er_gnm(n, m, &mut SimRng::new(seed))?;
            (g, ModelKind::Input, format!("gnm n={n} m={m}"))
        }
        Model::Growth => {
            let (n, d) = (require(n, "n", "growth")?, require(d, "d", "growth")?);
            let g = gen_fixed_degree_growth(n, d, &mut SimRng::new(seed))?;
            (g, ModelKind::Input, format!("growth n={n} d={d}"))
        }
        Model::Config => {
            let path = require(seq, "seq", "config")?;
            let sequence = read_degree_sequence(&path)?;
            let out = gen_config_from_sequence(&sequence, &mut SimRng::new(seed))?;
            let label = format!(
                "config seq={} dropped_loops={} dropped_parallel={}",
                path.display(),
                out.self_loops_dropped,
                out.parallel_edges_dropped
            );
            (out.graph, ModelKind::Configuration, label)
        }
    };
    let record = RunRecord::measured(&label, kind, 0, Some(seed), &graph);
    Ok((graph, record))
}

fn print_table1_summary(report: &ExperimentReport) {
    eprintln!(
        "{:<11} {:>6} {:>6} {:>5} {:>9} {:>14}",
        "site", "n", "m", "web", "published", "ours"
    );
    for summary in report
        .summaries
        .iter()
        .filter(|s| s.model == ModelKind::SteadyState)
    {
        let Some(row) = TABLE1.iter().find(|r| r.site == summary.group) else {
            continue;
        };
        let agg = summary.d_max.expect("table runs measure d_max");
        eprintln!(
            "{:<11} {:>6} {:>6} {:>5} {:>9.1} {:>8.1} ± {:.3}",
            row.site,
            row.n,
            row.m,
            row.dmax_web,
            row.mu_ss,
            agg.mean,
            agg.stdev.unwrap_or(0.0)
        );
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate {
            model,
            n,
            m,
            d,
            r,
            seq,
            seed,
            variant,
            format,
            out,
        } => {
            let (graph, record) = generate(model, n, m, d, r, seq, seed, variant)?;
            let text = match format {
                GraphFormat::Edges => write_edge_list(&graph),
                GraphFormat::Csv => degree_histogram(&graph).to_csv(),
                GraphFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&record)?;
                    s.push('\n');
                    s
                }
            };
            emit(out.as_deref(), &text)
        }
        Command::Analyze {
            path,
            kind,
            metrics,
            repeats,
            seed,
            workers,
            format,
            out,
        } => {
            let mut config = AnalyzeConfig::new(path);
            config.kind = kind;
            if let Some(metrics) = metrics {
                config.metrics = metrics;
            }
            config.repeats = repeats;
            config.base_seed = seed;
            let report = analyze_file(&config, execution(workers, false))?;
            emit(out.as_deref(), &render(&report, format))
        }
        Command::Table1 {
            sites,
            repeats,
            r,
            seed,
            variant,
            degree_seq,
            workers,
            no_timing,
            format,
            out,
        } => {
            let mut config = Table1Config {
                repeats,
                r,
                base_seed: seed,
                variant,
                degree_sequences: degree_seq.into_iter().collect::<BTreeMap<_, _>>(),
                ..Table1Config::default()
            };
            if let Some(sites) = sites {
                config.sites = sites;
            }
            let report = run_table1(&config, execution(workers, no_timing))?;
            print_table1_summary(&report);
            emit(out.as_deref(), &render(&report, format))
        }
        Command::Sweep {
            sizes,
            densities,
            r,
            checkpoints,
            repeats,
            seed,
            variant,
            workers,
            no_timing,
            format,
            out,
            histograms,
        } => {
            let checkpoints = checkpoints.unwrap_or_else(|| {
                let mut c = vec![0, 100_000.min(r), r];
                c.dedup();
                c
            });
            let config = SweepConfig {
                sizes,
                densities,
                r,
                checkpoints,
                repeats,
                base_seed: seed,
                variant,
            };
            let report = run_powerlaw_sweep(&config, execution(workers, no_timing))?;
            if let Some(dir) = histograms {
                std::fs::create_dir_all(&dir)
                    .with_context(|| format!("creating {}", dir.display()))?;
                for (stem, csv) in report.histogram_csvs() {
                    let path = dir.join(format!("{stem}.csv"));
                    std::fs::write(&path, csv)
                        .with_context(|| format!("writing {}", path.display()))?;
                }
            }
            if format == Format::Csv && report.runs.is_empty() {
                bail!("sweep produced no runs");
            }
            emit(out.as_deref(), &render(&report, format))
        }
    }
}

fn main() {
    if let Err(err) = run(Cli::parse()) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
