//! The `mineds` command line: enumerate, verify, bench and gen.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumerator::{EnumOptions, Enumerator};
use crate::error::{usage, Error, Result};
use crate::graph::Graph;
use crate::io::{format_solution, parse_edge_list, write_edge_list, LabeledGraph};
use crate::oracle::{self, fixtures, CnfFormula};
use crate::subset::EdgeSubset;
use crate::transversal::Instance;

#[derive(Parser, Debug)]
#[command(name = "mineds", version, about = "Enumerate minimal edge dominating sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every minimal edge dominating set, one per line.
    Enumerate {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Reverse)]
        algo: Algo,
        /// Stop after this many solutions.
        #[arg(long)]
        limit: Option<u64>,
        /// Write a JSON run report here.
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Compare the traversal with exhaustive search.
    Verify {
        path: Option<PathBuf>,
        /// Also check every level of the traversal against exhaustive search.
        #[arg(long)]
        level_check: bool,
        /// Verify every file in this directory.
        #[arg(long)]
        batch: Option<PathBuf>,
        #[arg(long, hide = true)]
        drop_child: Option<u64>,
    },
    /// Print a CSV of solution counts, delay and space for a graph family.
    Bench {
        /// One of triangles, crown, random.
        #[arg(long)]
        family: String,
        /// Inclusive size range `A..B`.
        #[arg(long)]
        sizes: String,
    },
    /// Write a generated graph as an edge list.
    Gen {
        /// Build the selection instance of this DIMACS CNF formula.
        #[arg(long, conflicts_with = "random", required_unless_present = "random")]
        sat: Option<PathBuf>,
        /// A random graph with N vertices, M edges and the given seed.
        #[arg(long, num_args = 3, value_names = ["N", "M", "SEED"])]
        random: Option<Vec<u64>>,
        #[arg(long, short)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Reverse,
    Brute,
}

/// Summary written by `enumerate --stats`.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct RunReport {
    pub solution_count: u64,
    pub max_delay_steps: u64,
    pub mean_delay_steps: f64,
    pub peak_live_sets: usize,
    pub wall_time_ms: f64,
    pub checksum: u64,
}

fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Hash of one solution from its edge ids.
pub fn solution_hash(s: &EdgeSubset) -> u64 {
    s.iter().fold(mix(s.len() as u64), |h, e| mix(h ^ (e as u64 + 1)))
}

/// Order-independent hash of a collection of solutions.
pub fn checksum<'a>(solutions: impl IntoIterator<Item = &'a EdgeSubset>) -> u64 {
    solutions.into_iter().fold(0u64, |acc, s| acc.wrapping_add(solution_hash(s)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Triangles,
    Crown,
    Random,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangles" => Ok(Family::Triangles),
            "crown" => Ok(Family::Crown),
            "random" => Ok(Family::Random),
            other => usage(format!("unknown family `{other}` (expected triangles, crown or random)")),
        }
    }
}

impl Family {
    /// Triangles: `size` disjoint triangles. Crown: the crown graph on
    /// `size + size` vertices. Random: `size` vertices and up to `2 * size`
    /// edges, seeded by `size`.
    pub fn graph(self, size: usize) -> Result<Graph> {
        match self {
            Family::Triangles => Ok(fixtures::triangles(size)),
            Family::Crown => Ok(fixtures::crown(size)),
            Family::Random => {
                let m = (2 * size).min(size * size.saturating_sub(1) / 2);
                oracle::random_graph(size, m, size as u64)
            }
        }
    }
}

/// One CSV row of `bench`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub m: usize,
    pub solutions: u64,
    pub max_delay: u64,
    pub peak_live: usize,
}

impl fmt::Display for BenchRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.m, self.solutions, self.max_delay, self.peak_live)
    }
}

pub fn bench_row(family: Family, size: usize) -> Result<BenchRow> {
    let inst = Instance::new(family.graph(size)?);
    let mut run = Enumerator::new(&inst);
    for event in run.by_ref() {
        event?;
    }
    let stats = run.stats();
    Ok(BenchRow {
        m: inst.edge_count(),
        solutions: stats.solutions,
        max_delay: stats.max_delay_steps,
        peak_live: stats.peak_live_sets,
    })
}

/// Parses an inclusive range `A..B` with `A <= B`.
pub fn parse_sizes(text: &str) -> Result<(usize, usize)> {
    let parsed = text
        .split_once("..")
        .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
    match parsed {
        Some((a, b)) if a <= b => Ok((a, b)),
        Some((a, b)) => usage(format!("empty size range {a}..{b}")),
        None => usage(format!("size range `{text}` is not of the form A..B")),
    }
}

fn read_graph(path: &Path) -> Result<LabeledGraph> {
    parse_edge_list(&fs::read_to_string(path)?)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Refused(_) => 3,
        _ => 1,
    }
}

/// Runs the command line with explicit output streams and returns the exit
/// code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Enumerate {
            path,
            algo,
            limit,
            stats,
        } => cmd_enumerate(&path, algo, limit, stats.as_deref(), out),
        Command::Verify {
            path,
            level_check,
            batch,
            drop_child,
        } => cmd_verify(path.as_deref(), batch.as_deref(), level_check, drop_child, out),
        Command::Bench { family, sizes } => cmd_bench(&family, &sizes, out),
        Command::Gen { sat, random, out: target } => cmd_gen(sat.as_deref(), random.as_deref(), &target),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn cmd_enumerate(
    path: &Path,
    algo: Algo,
    limit: Option<u64>,
    stats: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let lg = read_graph(path)?;
    let limit = limit.unwrap_or(u64::MAX);
    let started = Instant::now();
    let mut sum = 0u64;
    let mut count = 0u64;
    let (max_delay, total, peak) = match algo {
        Algo::Reverse => {
            let inst = Instance::new(lg.graph.clone());
            let mut run = Enumerator::new(&inst);
            while count < limit {
                let Some(event) = run.next() else { break };
                let s = event?.solution;
                writeln!(out, "{}", format_solution(&lg.graph, &lg.labels, &s))?;
                sum = sum.wrapping_add(solution_hash(&s));
                count += 1;
            }
            let st = run.stats();
            (st.max_delay_steps, st.total_steps, st.peak_live_sets)
        }
        Algo::Brute => {
            let all = oracle::brute_force_min_eds(&lg.graph)?;
            for s in all.iter().take(usize::try_from(limit).unwrap_or(usize::MAX)) {
                writeln!(out, "{}", format_solution(&lg.graph, &lg.labels, s))?;
                sum = sum.wrapping_add(solution_hash(s));
                count += 1;
            }
            (0, 0, all.len())
        }
    };
    if let Some(target) = stats {
        let report = RunReport {
            solution_count: count,
            max_delay_steps: max_delay,
            mean_delay_steps: if count == 0 { 0.0 } else { total as f64 / count as f64 },
            peak_live_sets: peak,
            wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
            checksum: sum,
        };
        let json = serde_json::to_string_pretty(&report).map_err(|e| Error::Internal(e.to_string()))?;
        fs::write(target, json + "\n")?;
    }
    Ok(0)
}

/// Outcome of comparing the traversal with exhaustive search on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Agree { solutions: usize },
    Differ { witness: String },
}

fn first_difference(g: &LabeledGraph, got: &[EdgeSubset], want: &[EdgeSubset], what: &str) -> Option<String> {
    let show = |s: &EdgeSubset| format!("{{{}}}", format_solution(&g.graph, &g.labels, s));
    if let Some(w) = got.windows(2).find(|w| w[0] == w[1]) {
        return Some(format!("{what}: {} produced twice", show(&w[0])));
    }
    if let Some(s) = want.iter().find(|s| got.binary_search(s).is_err()) {
        return Some(format!("{what}: missing {}", show(s)));
    }
    got.iter()
        .find(|s| want.binary_search(s).is_err())
        .map(|s| format!("{what}: unexpected {}", show(s)))
}

pub fn verify_graph(lg: &LabeledGraph, level_check: bool, drop_child: Option<u64>) -> Result<Verdict> {
    let inst = Instance::new(lg.graph.clone());
    let options = EnumOptions {
        trace_levels: level_check,
        drop_child,
    };
    let mut run = Enumerator::with_options(&inst, options);
    let mut got = Vec::new();
    for event in run.by_ref() {
        got.push(event?.solution);
    }
    got.sort();
    let want = oracle::brute_force_min_eds(&lg.graph)?;
    if let Some(witness) = first_difference(lg, &got, &want, "solutions") {
        return Ok(Verdict::Differ { witness });
    }
    if level_check {
        if run.stats().childless_nodes > 0 {
            return Ok(Verdict::Differ {
                witness: format!("{} visited sets had no child", run.stats().childless_nodes),
            });
        }
        let d = inst.decomposition();
        for i in 1..=inst.levels() {
            let mut level = run.trace()[i].clone();
            level.sort();
            let truth = oracle::brute_force_tr(&lg.graph, d, d.level_boundary(i))?;
            if let Some(witness) = first_difference(lg, &level, &truth, &format!("level {i}")) {
                return Ok(Verdict::Differ { witness });
            }
        }
    }
    Ok(Verdict::Agree { solutions: got.len() })
}

fn cmd_verify(
    path: Option<&Path>,
    batch: Option<&Path>,
    level_check: bool,
    drop_child: Option<u64>,
    out: &mut dyn Write,
) -> Result<i32> {
    let mut files: Vec<PathBuf> = path.map(Path::to_path_buf).into_iter().collect();
    if let Some(dir) = batch {
        let mut listed: Vec<PathBuf> = fs::read_dir(dir)?
            .map(|entry| entry.map(|e| e.path()))
            .collect::<std::io::Result<_>>()?;
        listed.retain(|p| p.is_file());
        listed.sort();
        files.extend(listed);
    }
    if files.is_empty() {
        return usage("verify needs a graph file or --batch DIR");
    }
    let outcomes: Vec<Result<Verdict>> = std::thread::scope(|scope| {
        let handles: Vec<_> = files
            .iter()
            .map(|f| scope.spawn(move || verify_graph(&read_graph(f)?, level_check, drop_child)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err(Error::Internal("verification thread panicked".into()))))
            .collect()
    });
    let mut code = 0;
    for (file, outcome) in files.iter().zip(outcomes) {
        match outcome? {
            Verdict::Agree { solutions } => writeln!(out, "ok {}: {solutions} solutions", file.display())?,
            Verdict::Differ { witness } => {
                writeln!(out, "MISMATCH {}: {witness}", file.display())?;
                code = 2;
            }
        }
    }
    Ok(code)
}

fn cmd_bench(family: &str, sizes: &str, out: &mut dyn Write) -> Result<i32> {
    let family: Family = family.parse()?;
    let (lo, hi) = parse_sizes(sizes)?;
    writeln!(out, "m,solutions,max_delay,peak_live")?;
    for size in lo..=hi {
        writeln!(out, "{}", bench_row(family, size)?)?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct ImtMeta<'a> {
    level: usize,
    base_transversal: Vec<String>,
    anchor: String,
    matched_edge: String,
    x: &'a str,
    y: &'a str,
}

fn cmd_gen(sat: Option<&Path>, random: Option<&[u64]>, target: &Path) -> Result<i32> {
    if let Some(cnf) = sat {
        let formula = CnfFormula::parse_dimacs(&fs::read_to_string(cnf)?)?;
        let imt = oracle::sat_to_imt(&formula)?;
        let g = &imt.graph;
        let edge_name = |e| {
            let (u, v) = g.endpoints(e);
            format!("{}-{}", imt.labels[u], imt.labels[v])
        };
        let meta = ImtMeta {
            level: imt.level,
            base_transversal: imt.base_transversal.iter().map(edge_name).collect(),
            anchor: edge_name(imt.anchor),
            matched_edge: edge_name(imt.matched_edge),
            x: &imt.labels[imt.x],
            y: &imt.labels[imt.y],
        };
        fs::write(target, write_edge_list(g, &imt.labels))?;
        let json = serde_json::to_string_pretty(&meta).map_err(|e| Error::Internal(e.to_string()))?;
        let mut sidecar = target.as_os_str().to_owned();
        sidecar.push(".meta.json");
        fs::write(PathBuf::from(sidecar), json + "\n")?;
        return Ok(0);
    }
    let Some(&[n, m, seed]) = random else {
        return usage("gen needs --sat FILE or --random N M SEED");
    };
    let g = oracle::random_graph(n as usize, m as usize, seed)?;
    fs::write(target, write_edge_list(&g, &crate::io::numeric_labels(g.vertex_count())))?;
    Ok(0)
}
