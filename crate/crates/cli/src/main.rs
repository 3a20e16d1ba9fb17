mod selftest;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand};

use cliquemotif::solvers::naive_center_oracle;
use cliquemotif::{
    find_clique, parse_graph, parse_instance, round_trip, serialize_instance, solve, sweep, Graph, GraphSource,
    ReductionError, SolverConfig, SolverError, SweepSummary, Variant, Verdict,
};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_FORMAT: u8 = 65;
const EXIT_SOFTWARE: u8 = 70;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "cliquemotif", version, about = "Clique-to-motif reductions and exact motif solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a DIMACS graph to a motif instance file.
    Reduce {
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Symbol legend sidecar; unbounded variant only.
        #[arg(long)]
        legend: Option<PathBuf>,
    },
    /// Decide a motif instance file with the exact solver.
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        /// Use center enumeration instead of the offset search.
        #[arg(long)]
        naive: bool,
        #[arg(long, default_value_t = SolverConfig::default().naive_cap)]
        naive_cap: u64,
        #[arg(long, default_value_t = SolverConfig::default().dp_cap)]
        dp_cap: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Also write the report to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find the lexicographically least k-clique of a DIMACS graph.
    Clique {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Check clique existence against instance solvability.
    #[command(group(ArgGroup::new("source").required(true).args(["graph", "exhaustive_n", "random"])))]
    Verify {
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Every labeled graph on this many vertices.
        #[arg(long)]
        exhaustive_n: Option<usize>,
        /// Number of seeded random graphs.
        #[arg(long, requires_all = ["n", "seed"])]
        random: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run the built-in golden-vector checks.
    Selftest,
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    Variant::from_name(s).ok_or_else(|| format!("unknown variant '{s}' (expected unbounded, binary or consensus)"))
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn new(code: u8, msg: impl Into<String>) -> Self {
        Failure { code, msg: msg.into() }
    }
}

type Run = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Run {
    match command {
        Command::Reduce { variant, k, graph, out, legend } => reduce(variant, k, &graph, &out, legend.as_deref()),
        Command::Solve { input, naive, naive_cap, dp_cap, threads, out } => {
            let cfg = SolverConfig { naive_cap, dp_cap, threads, ..SolverConfig::default() };
            solve_file(&input, naive, &cfg, out.as_deref())
        }
        Command::Clique { k, graph } => clique(k, &graph),
        Command::Verify { variant, k, graph, exhaustive_n, random, n, seed } => {
            if k < 3 {
                return Err(Failure::new(EXIT_USAGE, format!("k = {k} is not supported (need k >= 3)")));
            }
            let cfg = SolverConfig::default();
            let summary = match (graph, exhaustive_n, random) {
                (Some(path), _, _) => {
                    let g = read_graph(&path)?;
                    let n = g.n();
                    SweepSummary {
                        variant,
                        n,
                        k,
                        source: GraphSource::Exhaustive,
                        reports: vec![round_trip(&g, k, variant, &cfg)],
                    }
                }
                (_, Some(n), _) => {
                    if n > 11 {
                        return Err(Failure::new(EXIT_USAGE, "exhaustive sweeps are limited to n <= 11"));
                    }
                    sweep(n, k, variant, GraphSource::Exhaustive, &cfg)
                }
                (_, _, Some(count)) => {
                    let (n, seed) = (n.expect("clap enforces --n"), seed.expect("clap enforces --seed"));
                    sweep(n, k, variant, GraphSource::SeededRandom { count, seed }, &cfg)
                }
                _ => unreachable!("clap enforces one graph source"),
            };
            print!("{summary}");
            Ok(if summary.fails() > 0 {
                EXIT_VERIFY
            } else if summary.inconclusive() > 0 {
                EXIT_SOFTWARE
            } else {
                0
            })
        }
        Command::Selftest => {
            let results = selftest::run();
            for (name, res) in &results {
                match res {
                    Ok(()) => println!("ok   {name}"),
                    Err(msg) => println!("FAIL {name}: {msg}"),
                }
            }
            let failed = results.iter().filter(|(_, r)| r.is_err()).count();
            println!("{} ok / {failed} failed", results.len() - failed);
            Ok(if failed == 0 { 0 } else { EXIT_VERIFY })
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::new(EXIT_FORMAT, format!("{}: {e}", path.display())))
}

fn reduce(variant: Variant, k: usize, graph: &Path, out: &Path, legend: Option<&Path>) -> Run {
    if legend.is_some() && variant != Variant::Unbounded {
        return Err(Failure::new(EXIT_USAGE, "--legend applies to the unbounded variant only"));
    }
    let g = read_graph(graph)?;
    let (inst, meta) = variant.reduce(&g, k).map_err(|e| match e {
        ReductionError::KTooSmall(_) => Failure::new(EXIT_USAGE, e.to_string()),
        _ => Failure::new(EXIT_SOFTWARE, e.to_string()),
    })?;
    write(out, &serialize_instance(&inst))?;
    if let (Some(path), Some(legend)) = (legend, &meta.legend) {
        write(path, &legend.to_text())?;
    }
    println!(
        "{variant}: n {} m {} k {} -> K {} L {} d {} A {}",
        meta.n(),
        meta.m(),
        k,
        inst.count(),
        inst.substring_len(),
        inst.budget(),
        inst.alphabet_size()
    );
    Ok(0)
}

fn solve_file(input: &Path, naive: bool, cfg: &SolverConfig, out: Option<&Path>) -> Run {
    let inst =
        parse_instance(&read(input)?).map_err(|e| Failure::new(EXIT_FORMAT, format!("{}: {e}", input.display())))?;
    let start = Instant::now();
    let solver_failure = |e: SolverError| match e {
        SolverError::ResourceCap(msg) => Failure::new(EXIT_SOFTWARE, format!("inconclusive: {msg}")),
        e => Failure::new(EXIT_SOFTWARE, e.to_string()),
    };
    let (verdict, text) = if naive {
        let outcome = naive_center_oracle(&inst, cfg.naive_cap).map_err(solver_failure)?;
        let mut text = verdict_text(&outcome.verdict);
        text.push_str(&format!("# centers_checked {}\n", outcome.centers_checked));
        (outcome.verdict, text)
    } else {
        let report = solve(&inst, cfg).map_err(solver_failure)?;
        let text = report.to_text();
        (report.verdict, text)
    };
    eprintln!("# elapsed_ms {}", start.elapsed().as_millis());
    print!("{text}");
    if let Some(path) = out {
        write(path, &text)?;
    }
    Ok(if verdict.is_sat() { 0 } else { EXIT_NEGATIVE })
}

fn verdict_text(verdict: &Verdict) -> String {
    match verdict {
        Verdict::Sat(sol) => {
            let offsets: Vec<String> = sol.offsets.iter().map(|o| o.to_string()).collect();
            format!("SAT\n{}\n{}\n", sol.center, offsets.join(" "))
        }
        Verdict::Unsat => "UNSAT\n".to_string(),
    }
}

fn clique(k: usize, graph: &Path) -> Run {
    if k == 0 {
        return Err(Failure::new(EXIT_USAGE, "k must be positive"));
    }
    let g = read_graph(graph)?;
    match find_clique(&g, k) {
        Some(c) => {
            println!("{c}");
            Ok(0)
        }
        None => {
            println!("no {k}-clique");
            Ok(EXIT_NEGATIVE)
        }
    }
}
