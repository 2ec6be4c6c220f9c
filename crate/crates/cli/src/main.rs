//! `tuve`: vertex enumeration for `{x : Ax >= 1, x >= 0}` with `A` a totally
//! unimodular 0/1 matrix, plus the hypergraph tools underneath it.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use tuve_core::dualizer::dualize_traced;
use tuve_core::hypergraph::{bits_line, edge_line};
use tuve_core::network::generate_network_instance;
use tuve_core::polyhedron::{enumerate_vertices, extreme_directions, EnumerationConfig};
use tuve_core::{
    detect, verify_dual_pair, DualizerConfig, Error, Hypergraph, TuMatrix, VerificationResult,
    VertexSet,
};

#[derive(Parser)]
#[command(name = "tuve", version, about)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Dualize by Berge multiplication instead of decomposing.
    #[arg(long, global = true)]
    oracle: bool,
    /// Trust the input matrix to be totally unimodular.
    #[arg(long, global = true)]
    no_tu_check: bool,
    /// Hand subproblems with min(n, m) at most this to the oracle.
    #[arg(long, global = true, value_name = "C")]
    threshold: Option<usize>,
    /// Write a JSON stats record to this file.
    #[arg(long, global = true, value_name = "PATH")]
    stats: Option<PathBuf>,
    /// Print the recursion tree (to stderr for `dualize` and `vertices`).
    #[arg(long, global = true)]
    trace: bool,
    /// Output rows as 1-based ids or as 0/1 strings.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ids,
    Bits,
}

#[derive(Subcommand)]
enum Cmd {
    /// Vertices of P(A,1) for the matrix in FILE (`-` reads stdin).
    Vertices {
        file: PathBuf,
        /// Also print the extreme directions after a `# directions` line.
        #[arg(long)]
        directions: bool,
    },
    /// Minimal transversals of a hypergraph.
    Dualize { file: PathBuf },
    /// Check that FAMILY is exactly the set of minimal transversals of HYPERGRAPH.
    CheckDual {
        hypergraph: PathBuf,
        family: PathBuf,
    },
    /// Test a matrix for total unimodularity.
    CheckTu { file: PathBuf },
    /// Show the decomposition rule that applies to a hypergraph.
    Decompose { file: PathBuf },
    /// Print a random network matrix.
    GenNetwork {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        tree: usize,
        #[arg(long)]
        paths: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("tuve: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::Parse { .. }) => 2,
        Some(Error::NotTotallyUnimodular) => 3,
        Some(Error::BudgetExceeded { .. }) => 4,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let opts = &cli.opts;
    let cfg = dualizer_config(opts)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match &cli.cmd {
        Cmd::Vertices { file, directions } => {
            let a = TuMatrix::parse(&read_input(file)?)?;
            let ecfg = EnumerationConfig {
                check_tu: !opts.no_tu_check,
                dualizer: cfg,
                ..EnumerationConfig::default()
            };
            let format = opts.format.unwrap_or(Format::Bits);
            let mut failed = Ok(());
            let summary = enumerate_vertices(&a, &ecfg, |t| {
                if failed.is_ok() {
                    failed = writeln!(out, "{}", render(t, a.cols(), format));
                }
            })?;
            failed?;
            if *directions {
                writeln!(out, "# directions")?;
                for d in extreme_directions(a.cols())? {
                    let t: VertexSet = (0..d.len()).filter(|&i| d[i] == 1).collect();
                    writeln!(out, "{}", render(t, a.cols(), format))?;
                }
            }
            if opts.trace {
                print_trace(&a.hypergraph()?, &cfg)?;
            }
            if let Some(path) = &opts.stats {
                write_json(path, &serde_json::to_value(&summary)?)?;
            }
        }
        Cmd::Dualize { file } => {
            let h = Hypergraph::parse(&read_input(file)?)?;
            let d = dualize_traced(&h, &cfg)?;
            let format = opts.format.unwrap_or(Format::Ids);
            for t in d.dual.iter() {
                writeln!(out, "{}", render(t, h.universe(), format))?;
            }
            if let Some(trace) = &d.trace {
                eprint!("{}", trace.render());
            }
            if let Some(path) = &opts.stats {
                write_json(path, &serde_json::to_value(&d.stats)?)?;
            }
        }
        Cmd::CheckDual { hypergraph, family } => {
            let h = Hypergraph::parse(&read_input(hypergraph)?)?;
            let x = Hypergraph::parse(&read_input(family)?)?;
            let verdict = verify_dual_pair(&h, &x, cfg.oracle_budget)?;
            match verdict {
                VerificationResult::Valid => writeln!(out, "valid")?,
                VerificationResult::NotMinimalTransversal(t) => {
                    writeln!(out, "not a minimal transversal: {}", edge_line(t))?
                }
                VerificationResult::Incomplete(t) => {
                    writeln!(out, "missing transversal: {}", edge_line(t))?
                }
            }
            out.flush()?;
            if !verdict.is_valid() {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::CheckTu { file } => {
            let a = TuMatrix::parse(&read_input(file)?)?;
            if !a.is_totally_unimodular(Default::default())? {
                return Err(Error::NotTotallyUnimodular.into());
            }
            writeln!(out, "totally unimodular")?;
        }
        Cmd::Decompose { file } => {
            let h = Hypergraph::parse(&read_input(file)?)?.minimized();
            writeln!(out, "{}", detect(&h, &cfg.detect_budget))?;
            if opts.trace {
                let d = dualize_traced(&h, &cfg)?;
                if let Some(trace) = &d.trace {
                    write!(out, "{}", trace.render())?;
                }
            }
        }
        Cmd::GenNetwork { seed, tree, paths } => {
            let a = generate_network_instance(*seed, *tree, *paths)?;
            write!(out, "{}", a.to_text())?;
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn dualizer_config(opts: &Opts) -> Result<DualizerConfig> {
    let mut cfg = DualizerConfig {
        trace: opts.trace,
        ..DualizerConfig::default()
    };
    if let Some(c) = opts.threshold {
        anyhow::ensure!(c >= 1, "--threshold must be at least 1");
        cfg.base_threshold = c;
    }
    if opts.oracle {
        cfg.base_threshold = usize::MAX;
    }
    if let Ok(raw) = std::env::var("TUVE_BUDGET") {
        let b: u64 = raw
            .trim()
            .parse()
            .with_context(|| format!("TUVE_BUDGET=`{raw}` is not a nonnegative integer"))?;
        cfg.oracle_budget.max_family = usize::try_from(b).unwrap_or(usize::MAX);
        cfg.detect_budget.max_candidates = b;
        cfg.detect_budget.network.max_steps = b;
    }
    Ok(cfg)
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn render(t: VertexSet, n: usize, format: Format) -> String {
    match format {
        Format::Ids => edge_line(t),
        Format::Bits => bits_line(t, n),
    }
}

fn print_trace(h: &Hypergraph, cfg: &DualizerConfig) -> Result<()> {
    if let Some(trace) = dualize_traced(h, cfg)?.trace {
        eprint!("{}", trace.render());
    }
    Ok(())
}

fn write_json(path: &Path, value: &serde_json::Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}
