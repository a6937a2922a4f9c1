use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use nilgraph::config::{gf_up_to, parse_inline, zn_range, Families};
use nilgraph::export::{to_dot, to_json, write_edge_csv};
use nilgraph::graph::{build_graph_with, ReportOptions};
use nilgraph::harness::{all_cases, run_suite, select_cases, SuiteSettings, DEFAULT_MAX_ORDER};
use nilgraph::scan::{scan, write_csv, ScanOptions};
use nilgraph::{build_ring, InvariantReport, NilCleanProfile, Ring, RingSpec};

mod render;

#[derive(Parser)]
#[command(name = "nilgraph", version, about = "Nil clean graphs of finite rings")]
struct Cli {
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Largest ring order to build.
    #[arg(long, global = true, env = "NILGRAPH_MAX_ORDER")]
    max_order: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Idempotents, nilpotents and nil clean elements of a ring.
    Ring {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Export the nil clean graph.
    Graph {
        spec: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Fill DOT nodes by component.
        #[arg(long)]
        color_components: bool,
    },
    /// Every graph invariant of one ring.
    Invariants {
        spec: String,
        #[arg(long)]
        json: bool,
        /// Leave the per-edge colouring out of the JSON.
        #[arg(long)]
        no_edges: bool,
    },
    /// One row of invariants per ring, as CSV.
    Scan {
        /// Z_n for n in a..b, inclusive.
        #[arg(long)]
        zn_range: Option<String>,
        /// GF(p^k) for every prime power up to this bound.
        #[arg(long)]
        gf_bound: Option<u32>,
        /// File of ring specs, one or more per line.
        #[arg(long)]
        list: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check the claims about nil clean graphs over ring families.
    Verify {
        /// Config file or comma-separated specs; the default scan set otherwise.
        #[arg(long)]
        families: Option<String>,
        /// Comma-separated case ids, or `all`.
        #[arg(long, default_value = "all")]
        cases: String,
        /// Write the full report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn parse_spec(text: &str) -> Result<RingSpec> {
    let spec: RingSpec = text.parse()?;
    spec.validate()?;
    Ok(spec)
}

fn load_ring(text: &str, max_order: usize) -> Result<Ring> {
    let spec = parse_spec(text)?;
    match spec.order_bound() {
        Some(order) if order <= max_order as u64 => {}
        _ => bail!("{spec} is larger than the order cap {max_order} (see --max-order)"),
    }
    Ok(build_ring(&spec)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("cannot write to stdout"),
    }
}

fn parse_zn_range(text: &str) -> Result<(u32, u32)> {
    let (a, b) = text.split_once("..").context("expected a..b")?;
    Ok((
        a.trim().parse().context("bad range start")?,
        b.trim().parse().context("bad range end")?,
    ))
}

fn read_list(path: &Path) -> Result<Families> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut families = Families::default();
    for line in text.lines() {
        let line = line.split('#').next().unwrap().trim();
        if !line.is_empty() {
            families.extend(parse_inline(line)?.specs);
        }
    }
    Ok(families)
}

fn run(cli: Cli) -> Result<u8> {
    let cap = cli.max_order;
    let max_order = cap.unwrap_or(DEFAULT_MAX_ORDER);
    match cli.command {
        Command::Ring { spec, json } => {
            let r = load_ring(&spec, max_order)?;
            let doc = NilCleanProfile::compute(&r).document(&r);
            let text = if json {
                serde_json::to_string_pretty(&doc)? + "\n"
            } else {
                render::profile(&doc)
            };
            emit(None, &text)?;
        }
        Command::Graph {
            spec,
            format,
            out,
            color_components,
        } => {
            let r = load_ring(&spec, max_order)?;
            let profile = NilCleanProfile::compute(&r);
            let g = build_graph_with(&r, &profile.nilclean);
            match format {
                GraphFormat::Dot => emit(out.as_deref(), &to_dot(&g, color_components))?,
                GraphFormat::Json => emit(out.as_deref(), &(to_json(&g) + "\n"))?,
                GraphFormat::Csv => {
                    let mut buf = Vec::new();
                    write_edge_csv(&g, &mut buf)?;
                    emit(out.as_deref(), std::str::from_utf8(&buf)?)?;
                }
            }
        }
        Command::Invariants {
            spec,
            json,
            no_edges,
        } => {
            let r = load_ring(&spec, max_order)?;
            let profile = NilCleanProfile::compute(&r);
            let g = build_graph_with(&r, &profile.nilclean);
            let options = ReportOptions {
                edge_colors: !no_edges,
                ..ReportOptions::default()
            };
            let report = InvariantReport::compute(&g, &options);
            let text = if json {
                serde_json::to_string_pretty(&report)? + "\n"
            } else {
                render::invariants(&report)
            };
            emit(None, &text)?;
        }
        Command::Scan {
            zn_range: range,
            gf_bound,
            list,
            csv,
        } => {
            let mut families = Families::default();
            if let Some(range) = range {
                let (a, b) = parse_zn_range(&range)?;
                families.extend(zn_range(a, b));
            }
            if let Some(bound) = gf_bound {
                families.extend(gf_up_to(bound));
            }
            if let Some(path) = list {
                families.extend(read_list(&path)?.specs);
            }
            if families.specs.is_empty() {
                families = Families::default_scan();
            }
            let rows = scan(
                &families.specs,
                &ScanOptions {
                    max_order,
                    ..ScanOptions::default()
                },
            );
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            emit(csv.as_deref(), std::str::from_utf8(&buf)?)?;
        }
        Command::Verify {
            families,
            cases,
            json,
        } => {
            let families = match families {
                Some(arg) => Families::load(&arg)?,
                None => Families::default_scan(),
            };
            let cases = if cases.trim() == "all" {
                all_cases()
            } else {
                let ids: Vec<&str> = cases
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .collect();
                select_cases(&ids).map_err(|id| anyhow::anyhow!("unknown case `{id}`"))?
            };
            let settings = SuiteSettings {
                max_order: cap.or(families.max_order).unwrap_or(DEFAULT_MAX_ORDER),
                ..SuiteSettings::default()
            };
            let start = Instant::now();
            let report = run_suite(&families.specs, &cases, settings);
            eprintln!("wall time: {:.2}s", start.elapsed().as_secs_f64());
            if let Some(path) = json {
                emit(Some(&path), &(report.to_json() + "\n"))?;
            }
            emit(None, &render::suite(&report))?;
            return Ok(report.exit_code() as u8);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
