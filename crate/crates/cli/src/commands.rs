use std::fs;
use std::io::{self, Write};
use std::path::Path;

use hamburger::bench::{bench_pillow, bench_table};
use hamburger::cycles::{CombinedDigraph, CycleOracle, OracleConfig};
use hamburger::graph::{
    generalized_det, generalized_reduced_det, hamburger_det, reduced_det, GraphFile, GraphInput,
};
use hamburger::linalg::BigInteger;
use hamburger::propp::{
    pillow_count, render_report, report_rows, rho_series, CountSeries, DecompositionMode,
    ReportFormat, ReportRow, RhoSeries,
};
use hamburger::region::{region_digraph, PillowSteps, RegionFile};
use hamburger::schroeder::{schroeder_matrix, ModifiedSchroederTable};
use hamburger::tiling::{count_tilings, enumerate_tilings_bounded};
use hamburger::Error;
use rayon::prelude::*;

use crate::{Command, Failure, Format, Method, RegionArgs, RegionKind};

type CmdResult = Result<(), Failure>;

pub fn run(command: Command) -> CmdResult {
    match command {
        Command::Det { graph } => cmd_det(&graph),
        Command::Cycles { graph, max_systems } => cmd_cycles(&graph, max_systems),
        Command::Region(args) => cmd_region(&args),
        Command::Tilings {
            region,
            method,
            verify,
            max_cells,
        } => cmd_tilings(&region, method, verify, max_cells),
        Command::Propp {
            q,
            n_max,
            jobs,
            format,
            out,
        } => cmd_propp(&q, n_max, jobs, format, out.as_deref()),
        Command::Bench {
            n_max,
            q,
            jobs,
            no_timings,
        } => cmd_bench(q, n_max, jobs, !no_timings),
        Command::Schroeder { n, large } => {
            let text = if large {
                schroeder_matrix(n).to_text().replace(' ', "\t")
            } else {
                ModifiedSchroederTable::new(n).to_tsv()
            };
            print!("{text}");
            Ok(())
        }
    }
}

fn read_graph(path: &Path) -> Result<GraphInput, Failure> {
    let text = fs::read_to_string(path)?;
    Ok(GraphFile::parse(&text)?.to_input()?)
}

fn cmd_det(path: &Path) -> CmdResult {
    let (full, reduced) = match read_graph(path)? {
        GraphInput::Standard(h) => (hamburger_det(&h)?, reduced_det(&h)?),
        GraphInput::Generalized(g) => (generalized_det(&g)?, generalized_reduced_det(&g)?),
    };
    println!("full={full} reduced={reduced}");
    if full != reduced {
        return Err(Failure::Mismatch(format!("full {full} != reduced {reduced}")));
    }
    Ok(())
}

fn cmd_cycles(path: &Path, max_systems: u64) -> CmdResult {
    let input = read_graph(path)?;
    let (graph, det) = match &input {
        GraphInput::Standard(h) => (CombinedDigraph::from_standard(h)?, None),
        GraphInput::Generalized(g) => (CombinedDigraph::from_generalized(g)?, Some(generalized_det(g)?)),
    };
    let config = OracleConfig {
        max_systems,
        ..OracleConfig::default()
    };
    let oracle = CycleOracle::new(graph, config)?;
    let systems = oracle.systems()?;
    let summary = oracle.summary()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for s in &systems {
        writeln!(out, "{}", oracle.format_system(s))?;
    }
    writeln!(
        out,
        "systems={} c+={} c-={} positive_weight={} negative_weight={} signed_sum={}",
        summary.systems,
        summary.positive_systems,
        summary.negative_systems,
        summary.positive,
        summary.negative,
        summary.signed_sum()
    )?;
    if let Some(det) = det {
        writeln!(out, "det={det}")?;
    }
    Ok(())
}

fn cmd_region(args: &RegionArgs) -> CmdResult {
    let file = match args.kind {
        RegionKind::Diamond => RegionFile::Diamond { n: args.n },
        RegionKind::Pillow => RegionFile::Pillow {
            n: args.n,
            q: args
                .q
                .ok_or_else(|| Error::InvalidArgument("pillow needs --q".into()))?,
        },
        RegionKind::Generalized => RegionFile::Generalized(PillowSteps {
            n: args.n,
            top_left: args.top_left.clone(),
            top_right: args.top_right.clone(),
            bottom_left: args.bottom_left.clone(),
            bottom_right: args.bottom_right.clone(),
        }),
    };
    let region = file.region()?;
    let digraph = region_digraph(&region)?;
    fs::create_dir_all(&args.out)?;
    fs::write(args.out.join("region.txt"), file.to_text()?)?;
    fs::write(
        args.out.join("digraph.json"),
        GraphFile::from_standard(&digraph.graph).to_json(),
    )?;
    fs::write(args.out.join("map.txt"), region.render())?;
    println!(
        "cells={} k={} top_vertices={} bottom_vertices={}",
        region.cell_count(),
        digraph.graph.k(),
        digraph.graph.g1.vertex_count,
        digraph.graph.g2.vertex_count
    );
    Ok(())
}

fn count_with(method: Method, region: &hamburger::region::Region, max_cells: u64) -> Result<BigInteger, Failure> {
    Ok(match method {
        Method::Det => {
            let h = region_digraph(region)?.graph;
            let det = reduced_det(&h)?;
            if !det.is_integer() {
                return Err(Error::Invariant(format!("tiling determinant {det} is not an integer")).into());
            }
            det.to_integer()
        }
        Method::Dp => count_tilings(region)?,
        Method::Enum => BigInteger::from(enumerate_tilings_bounded(region, max_cells)?.len()),
    })
}

fn cmd_tilings(path: &Path, method: Method, verify: bool, max_cells: u64) -> CmdResult {
    let region = RegionFile::parse(&fs::read_to_string(path)?)?.region()?;
    let count = count_with(method, &region, max_cells)?;
    println!("{count}");
    if verify {
        let other = if method == Method::Dp { Method::Det } else { Method::Dp };
        let check = count_with(other, &region, max_cells)?;
        if check != count {
            return Err(Failure::Mismatch(format!(
                "{method:?} gives {count}, {other:?} gives {check}"
            )));
        }
        println!("verified: {} = {}", name(method), name(other));
    }
    Ok(())
}

fn name(m: Method) -> &'static str {
    match m {
        Method::Det => "det",
        Method::Dp => "dp",
        Method::Enum => "enum",
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Failure::Lib(Error::InvalidArgument(e.to_string())))
}

fn cmd_propp(qs: &[i64], n_max: usize, jobs: usize, format: Format, out: Option<&Path>) -> CmdResult {
    let mut qs = qs.to_vec();
    qs.sort_unstable();
    qs.dedup();
    let tasks: Vec<(i64, usize)> = qs.iter().flat_map(|&q| (1..=n_max).map(move |n| (q, n))).collect();
    let counts: Vec<Result<BigInteger, Error>> = pool(jobs)?.install(|| {
        tasks
            .par_iter()
            .map(|&(q, n)| pillow_count(q, n as i64))
            .collect()
    });
    let mut rows: Vec<ReportRow> = Vec::new();
    let mut rho: Vec<RhoSeries> = Vec::new();
    for &q in &qs {
        let mut entries = Vec::new();
        for (&(tq, n), c) in tasks.iter().zip(&counts) {
            if tq == q {
                entries.push((n, c.as_ref().map_err(clone_error)?.clone()));
            }
        }
        let q_rows = report_rows(&CountSeries { q, entries })?;
        rho.push(match q {
            1 | 3 => rho_series(q, n_max)?,
            _ => {
                let values: Vec<_> = q_rows
                    .iter()
                    .filter_map(|r| r.decomposition.as_ref().map(|d| (r.n, d.s.clone())))
                    .collect();
                RhoSeries::from_values(q, DecompositionMode::Squarefree, &values)
            }
        });
        summarize(q, &q_rows);
        rows.extend(q_rows);
    }
    let format = match format {
        Format::Csv => ReportFormat::Csv,
        Format::Txt => ReportFormat::Text,
    };
    let report = render_report(&rows, format);
    match out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            let ext = if format == ReportFormat::Csv { "csv" } else { "txt" };
            fs::write(dir.join(format!("propp.{ext}")), report)?;
            for series in &rho {
                fs::write(dir.join(format!("rho_q{}.csv", series.q)), series.to_csv())?;
            }
        }
        None => print!("{report}"),
    }
    Ok(())
}

fn clone_error(e: &Error) -> Error {
    match e {
        Error::SizeBound { what, actual, limit } => Error::SizeBound {
            what,
            actual: *actual,
            limit: *limit,
        },
        Error::Invariant(m) => Error::Invariant(m.clone()),
        other => Error::InvalidArgument(other.to_string()),
    }
}

fn summarize(q: i64, rows: &[ReportRow]) {
    let total = rows.len();
    let scanned = rows.iter().filter(|r| r.two_squares.is_some()).count();
    let squares = rows
        .iter()
        .filter(|r| r.two_squares.as_ref().is_some_and(|t| !t.representations.is_empty()))
        .count();
    let mut line = format!("q={q}: two-squares representation found for {squares}/{scanned}");
    if scanned < total {
        line.push_str(&format!(" ({} over budget)", total - scanned));
    }
    if q == 3 {
        let holds = rows.iter().filter(|r| r.propp == Some(true)).count();
        line.push_str(&format!("; generating-function check holds for {holds}/{total}"));
    }
    eprintln!("{line}");
}

fn cmd_bench(q: i64, n_max: usize, jobs: usize, timings: bool) -> CmdResult {
    let rows = pool(jobs)?.install(|| {
        (1..=n_max)
            .into_par_iter()
            .map(|n| bench_pillow(q, n))
            .collect::<Result<Vec<_>, Error>>()
    })?;
    print!("{}", bench_table(&rows, timings));
    Ok(())
}
