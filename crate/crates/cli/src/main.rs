//! `eqcolor`: equitable coloring solvers, validators, generators and exact
//! oracles from the command line.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 proven negative (no
//! coloring exists, or the checked coloring is invalid), 3 no applicable
//! algorithm or an exhausted search budget.

mod bench;
mod solve;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use equitable::generators::{generate, gk_list_assignment, Family};
use equitable::oracle::{
    decide_choosable, decide_equitable, decide_list, m0_exhaustive, m0_formula, Choosability, Decision,
    ListMode, SearchBudget,
};
use equitable::rng::Lcg;
use equitable::{check_coloring, io, Coloring, Graph, ListAssignment, Mode, Shift, ShiftLog};

use solve::{Algo, Solved};

const OK: u8 = 0;
const NEGATIVE: u8 = 2;
const NOT_APPLICABLE: u8 = 3;

#[derive(Parser)]
#[command(name = "eqcolor", version, about = "Equitable graph coloring")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct Budget {
    /// Search nodes before the exact search gives up.
    #[arg(long, default_value_t = 50_000_000)]
    node_limit: u64,
    /// Seconds before the exact search gives up.
    #[arg(long, default_value_t = 60)]
    time_limit: u64,
}

impl Budget {
    fn get(&self) -> SearchBudget {
        SearchBudget { node_limit: self.node_limit, time_limit: Some(Duration::from_secs(self.time_limit)) }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute an equitable k-coloring of a DIMACS graph.
    Color {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Write the shift trace ("v from to" per move).
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Solve on a random relabeling of the vertices drawn from this seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Coloring output file; stdout if absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Append the tab-separated run report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
        input: PathBuf,
    },
    /// Validate a coloring.
    Check {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = CheckMode::Equitable)]
        mode: CheckMode,
        /// List assignment for the list modes; lists 0..k everywhere if absent.
        #[arg(long)]
        lists: Option<PathBuf>,
        graph: PathBuf,
        coloring: PathBuf,
    },
    /// Write a generated graph as DIMACS.
    Gen {
        /// Family name, or a spec such as `kab:3,3+k:3`.
        family: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// For `gk`: also write the list assignment with no equitable coloring.
        #[arg(long)]
        lists: Option<PathBuf>,
    },
    /// Decide a coloring question exactly.
    Oracle {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = OracleMode::Equitable)]
        mode: OracleMode,
        #[arg(long)]
        lists: Option<PathBuf>,
        /// Decide k-choosability in the given mode instead.
        #[arg(long)]
        choosable: bool,
        /// Coloring on "yes"; the failing list assignment on a choosability "no".
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
        graph: PathBuf,
    },
    /// Minimum number of edges of an n-vertex graph with no equitable k-coloring.
    M0 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        verify_exhaustive: bool,
        /// Write the extremal graph found by the exhaustive search.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Time the hs solver on random graphs of growing size.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "500,1000,2000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
        /// k = max_degree + 1 + offset.
        #[arg(long, default_value_t = 0)]
        k_offset: usize,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckMode {
    Proper,
    Equitable,
    Nearly,
    List,
    Se,
    Proportional,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleMode {
    Equitable,
    Se,
    Proportional,
}

impl From<OracleMode> for ListMode {
    fn from(m: OracleMode) -> Self {
        match m {
            OracleMode::Equitable => ListMode::Equitable,
            OracleMode::Se => ListMode::Se,
            OracleMode::Proportional => ListMode::Proportional,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Cmd) -> Result<u8> {
    match cmd {
        Cmd::Color { k, algo, trace, seed, output, report, budget, input } => cmd_color(
            k,
            algo,
            trace.as_deref(),
            seed,
            output.as_deref(),
            report.as_deref(),
            budget.get(),
            &input,
        ),
        Cmd::Check { k, mode, lists, graph, coloring } => {
            cmd_check(k, mode, lists.as_deref(), &graph, &coloring)
        }
        Cmd::Gen { family, params, seed, output, lists } => {
            cmd_gen(&family, &params, seed, output.as_deref(), lists.as_deref())
        }
        Cmd::Oracle { k, mode, lists, choosable, certificate, budget, graph } => {
            cmd_oracle(k, mode, lists.as_deref(), choosable, certificate.as_deref(), budget.get(), &graph)
        }
        Cmd::M0 { n, k, verify_exhaustive, witness, budget } => {
            cmd_m0(n, k, verify_exhaustive, witness.as_deref(), budget.get())
        }
        Cmd::Bench { sizes, max_degree, k_offset, repeats, seed } => {
            cmd_bench(bench::BenchArgs { sizes, max_degree, k_offset, repeats, seed })
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::graph_from_dimacs(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_lists(path: &Path, n: usize) -> Result<ListAssignment> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::lists_from_text(&text, n).with_context(|| format!("parsing {}", path.display()))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// `perm[v]` is the label of `v` in the relabeled graph.
fn relabel(g: &Graph, seed: u64) -> (Graph, Vec<usize>) {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    Lcg::new(seed).shuffle(&mut perm);
    let h = Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).expect("relabeling");
    (h, perm)
}

#[allow(clippy::too_many_arguments)]
fn cmd_color(
    k: usize,
    algo: Algo,
    trace: Option<&Path>,
    seed: Option<u64>,
    output: Option<&Path>,
    report: Option<&Path>,
    budget: SearchBudget,
    input: &Path,
) -> Result<u8> {
    if k == 0 {
        bail!("--k must be positive");
    }
    let g = read_graph(input)?;
    let (h, perm) = match seed {
        Some(s) => relabel(&g, s),
        None => (g.clone(), (0..g.n()).collect()),
    };
    let start = Instant::now();
    let (used, solved) = solve::solve(&h, k, algo, budget)?;
    let wall = start.elapsed();
    let id = input.file_stem().map_or_else(|| "-".into(), |s| s.to_string_lossy().into_owned());
    let report_line = |outcome: &str, shifts: &str, verdict: &str| -> Result<()> {
        let line =
            format!("{id}\t{used}\t{k}\t{outcome}\t{shifts}\t{:.3}\t{verdict}\n", wall.as_secs_f64() * 1e3);
        eprint!("{line}");
        if let Some(p) = report {
            fs::OpenOptions::new()
                .create(true)
                .append(true)
                .open(p)
                .and_then(|mut f| f.write_all(line.as_bytes()))
                .with_context(|| format!("writing {}", p.display()))?;
        }
        Ok(())
    };
    match solved {
        Solved::Colored { coloring, log } => {
            let f = Coloring::from_colors((0..g.n()).map(|v| coloring.color(perm[v])).collect());
            let verdict = check_coloring(&g, &f, Mode::Equitable(k))?;
            let shifts = log.as_ref().map_or("-".into(), |l| l.shift_count().to_string());
            if !verdict.ok() {
                report_line("colored", &shifts, "invalid")?;
                bail!("{used} returned an invalid coloring: {}", verdict.violations[0]);
            }
            if let Some(t) = trace {
                let text = log.map_or_else(String::new, |l| io::trace_to_text(&unrelabel(&l, &perm)));
                fs::write(t, text).with_context(|| format!("writing {}", t.display()))?;
            }
            write_out(output, &io::coloring_to_text(&f))?;
            report_line("colored", &shifts, "ok")?;
            Ok(OK)
        }
        Solved::Infeasible(reason) => {
            report_line("infeasible", "-", "-")?;
            eprintln!("no equitable {k}-coloring: {reason}");
            Ok(NEGATIVE)
        }
        Solved::NotApplicable(reason) => {
            report_line("not-applicable", "-", "-")?;
            eprintln!("{reason}");
            Ok(NOT_APPLICABLE)
        }
    }
}

/// Maps the vertices of a log over the relabeled (and padded) graph back to
/// input labels; padding vertices keep their labels.
fn unrelabel(log: &ShiftLog, perm: &[usize]) -> ShiftLog {
    let mut inv: Vec<usize> = (0..perm.len()).collect();
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    ShiftLog::new(
        log.entries()
            .iter()
            .map(|s| Shift { vertex: inv.get(s.vertex).copied().unwrap_or(s.vertex), ..*s })
            .collect(),
    )
}

fn cmd_check(k: usize, mode: CheckMode, lists: Option<&Path>, graph: &Path, coloring: &Path) -> Result<u8> {
    let g = read_graph(graph)?;
    let text = fs::read_to_string(coloring).with_context(|| format!("reading {}", coloring.display()))?;
    let f =
        io::coloring_from_text(&text, g.n()).with_context(|| format!("parsing {}", coloring.display()))?;
    let l = match lists {
        Some(p) => read_lists(p, g.n())?,
        None => ListAssignment::constant(g.n(), k),
    };
    if l.k() != k {
        bail!("lists have {} colors each, --k is {k}", l.k());
    }
    let mode = match mode {
        CheckMode::Proper => Mode::Proper,
        CheckMode::Equitable => Mode::Equitable(k),
        CheckMode::Nearly => Mode::NearlyEquitable(k),
        CheckMode::List => Mode::EquitableList(&l),
        CheckMode::Se => Mode::SeList(&l),
        CheckMode::Proportional => Mode::Proportional(&l),
    };
    let verdict = match check_coloring(&g, &f, mode) {
        Ok(v) => v,
        Err(e @ equitable::ColoringError::ColorOutOfRange { .. }) => {
            println!("{e}");
            return Ok(NEGATIVE);
        }
        Err(e) => return Err(e.into()),
    };
    if verdict.ok() {
        println!("ok");
        return Ok(OK);
    }
    for v in &verdict.violations {
        println!("{v}");
    }
    Ok(NEGATIVE)
}

fn cmd_gen(
    family: &str,
    params: &[usize],
    seed: u64,
    output: Option<&Path>,
    lists: Option<&Path>,
) -> Result<u8> {
    let fam = if family.contains(':') || family.contains('+') {
        if !params.is_empty() {
            bail!("give parameters either in the spec or as arguments, not both");
        }
        Family::parse_spec(family)?
    } else {
        Family::parse(family, params)?
    };
    let g = generate(&fam, seed)?;
    write_out(output, &format!("c {fam} seed {seed}\n{}", io::graph_to_dimacs(&g)))?;
    if let Some(p) = lists {
        let Family::Gk(k) = fam else {
            bail!("--lists is only available for gk_example");
        };
        fs::write(p, io::lists_to_text(&gk_list_assignment(k)?))
            .with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(OK)
}

fn cmd_oracle(
    k: usize,
    mode: OracleMode,
    lists: Option<&Path>,
    choosable: bool,
    certificate: Option<&Path>,
    budget: SearchBudget,
    graph: &Path,
) -> Result<u8> {
    if k == 0 {
        bail!("--k must be positive");
    }
    let g = read_graph(graph)?;
    let answer = |label: &str, cert: Option<String>| -> Result<u8> {
        println!("{label}");
        if let (Some(p), Some(text)) = (certificate, cert) {
            fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
        }
        Ok(match label {
            "yes" => OK,
            "no" => NEGATIVE,
            _ => NOT_APPLICABLE,
        })
    };
    if choosable {
        if lists.is_some() {
            bail!("--choosable ranges over all list assignments; drop --lists");
        }
        return match decide_choosable(&g, k, mode.into(), budget)? {
            Choosability::Yes => answer("yes", None),
            Choosability::No(l) => answer("no", Some(io::lists_to_text(&l))),
            Choosability::Unknown => answer("unknown", None),
        };
    }
    let decision = match (lists, mode) {
        (None, OracleMode::Equitable) => decide_equitable(&g, k, budget)?,
        (Some(p), _) => {
            let l = read_lists(p, g.n())?;
            if l.k() != k {
                bail!("lists have {} colors each, --k is {k}", l.k());
            }
            decide_list(&g, &l, mode.into(), budget)?
        }
        (None, _) => decide_list(&g, &ListAssignment::constant(g.n(), k), mode.into(), budget)?,
    };
    match decision {
        Decision::Yes(f) => answer("yes", Some(io::coloring_to_text(&f))),
        d => answer(d.label(), None),
    }
}

fn cmd_m0(n: usize, k: usize, verify: bool, witness: Option<&Path>, budget: SearchBudget) -> Result<u8> {
    let formula = m0_formula(n, k)?;
    if !verify {
        println!("formula={formula}");
        return Ok(OK);
    }
    let found = m0_exhaustive(n, k, budget)?;
    let Some(value) = found.value else {
        println!("formula={formula} exhaustive=unknown");
        return Ok(NOT_APPLICABLE);
    };
    if let (Some(p), Some(w)) = (witness, &found.witness) {
        fs::write(p, io::graph_to_dimacs(w)).with_context(|| format!("writing {}", p.display()))?;
    }
    let pass = value == formula;
    println!("formula={formula} exhaustive={value} {}", if pass { "PASS" } else { "FAIL" });
    Ok(if pass { OK } else { NEGATIVE })
}

fn cmd_bench(args: bench::BenchArgs) -> Result<u8> {
    let rows = bench::run(&args)?;
    print!("{}", bench::render(&rows));
    let over: Vec<_> = rows.iter().filter(|r| r.max_shifts > r.bound).collect();
    for r in &over {
        eprintln!("n = {}: {} shifts exceed 2kn = {}", r.n, r.max_shifts, r.bound);
    }
    Ok(if over.is_empty() { OK } else { NEGATIVE })
}

#[cfg(test)]
mod tests {
    use super::*;
    use equitable::DETACHED;

    #[test]
    fn relabel_is_isomorphic() {
        let g = equitable::generators::random_graph_bounded_degree(30, 4, 3);
        let (h, perm) = relabel(&g, 9);
        assert_eq!(h.edge_count(), g.edge_count());
        assert!(g.edges().all(|(u, v)| h.has_edge(perm[u], perm[v])));
    }

    #[test]
    fn unrelabel_keeps_padding_and_detached() {
        let log = ShiftLog::new(vec![
            Shift { vertex: 0, from: 1, to: DETACHED, joint: true },
            Shift { vertex: 3, from: 0, to: 1, joint: false },
        ]);
        let back = unrelabel(&log, &[2, 0, 1]);
        assert_eq!(back.entries()[0].vertex, 1);
        assert_eq!(back.entries()[0].to, DETACHED);
        assert_eq!(back.entries()[1].vertex, 3);
    }

    #[test]
    fn cli_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
