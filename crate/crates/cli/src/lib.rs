//! Command implementations behind the `hyperconn` binary.
//!
//! Each command returns its stdout text and an exit code: 0 for success, 1
//! for a verification finding. Usage, I/O and parse problems come back as
//! errors and map to exit code 2.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperconn::connectivity::{edge_atom, edge_connectivity_oracle};
use hyperconn::constructions::standard_corpus;
use hyperconn::verify::{check_theorem, verify_uncrossing, Theorem, TheoremVerdict};
use hyperconn::{AnalysisOptions, AnalysisReport, Family, Hypergraph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDING: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hyperconn",
    version,
    about = "Hypergraph edge-connectivity and symmetry toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write an instance of a named family.
    Generate(GenerateArgs),
    /// Report structure, connectivity and symmetry of an instance file.
    Analyze(AnalyzeArgs),
    /// Run a verification suite.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Brute-force edge-connectivity and edge atom (n <= 20).
    Oracle { path: PathBuf },
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(Family::NAMES))]
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub offsets: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    pub base: Option<Vec<usize>>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// glued-complete only: accept n >= k + 1.
    #[arg(long)]
    pub permissive: bool,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub path: PathBuf,
    #[arg(long)]
    pub connectivity: bool,
    #[arg(long)]
    pub transitivity: bool,
    #[arg(long)]
    pub atom: bool,
    /// Print only the key=value block.
    #[arg(long)]
    pub machine: bool,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Uncrossing inequality: exhaustive on small corpus instances, then random samples.
    Lemma {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
    },
    /// Check kappa' = delta on every `.hg` file of a directory whose hypotheses hold.
    Theorem {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Mader,
    Main,
}

impl From<Which> for Theorem {
    fn from(w: Which) -> Self {
        match w {
            Which::Mader => Theorem::Mader,
            Which::Main => Theorem::Main,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub text: String,
    pub code: i32,
}

impl CommandOutput {
    fn ok(text: String) -> Self {
        Self {
            text,
            code: EXIT_OK,
        }
    }
}

pub fn run(cli: Cli) -> anyhow::Result<CommandOutput> {
    match cli.command {
        Command::Generate(args) => generate(&args),
        Command::Analyze(args) => analyze(&args),
        Command::Verify(VerifyCommand::Lemma { trials, seed, nmax }) => {
            verify_lemma(trials, seed, nmax)
        }
        Command::Verify(VerifyCommand::Theorem { corpus, which }) => {
            verify_theorem(&corpus, which.into())
        }
        Command::Oracle { path } => oracle(&path),
    }
}

pub fn read_hypergraph(path: &Path) -> anyhow::Result<Hypergraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Hypergraph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn require<T>(value: Option<T>, family: &str, flag: &str) -> anyhow::Result<T> {
    value.ok_or_else(|| anyhow!("family {family} requires --{flag}"))
}

pub fn family_from_args(args: &GenerateArgs) -> anyhow::Result<Family> {
    let f = args.family.as_str();
    Ok(match f {
        "complete" => Family::Complete {
            n: require(args.n, f, "n")?,
            k: require(args.k, f, "k")?,
        },
        "glued-complete" => Family::GluedComplete {
            n: require(args.n, f, "n")?,
            k: require(args.k, f, "k")?,
            permissive: args.permissive,
        },
        "affine" => Family::Affine {
            k: require(args.k, f, "k")?,
        },
        "affine-doubled" => Family::AffineDoubled {
            k: require(args.k, f, "k")?,
        },
        "cyclic-difference" => Family::CyclicDifference {
            n: require(args.n, f, "n")?,
            base: require(args.base.clone(), f, "base")?,
        },
        "circulant" => Family::Circulant {
            n: require(args.n, f, "n")?,
            offsets: require(args.offsets.clone(), f, "offsets")?,
        },
        "random" => Family::Random {
            n: require(args.n, f, "n")?,
            k: require(args.k, f, "k")?,
            m: require(args.m, f, "m")?,
            seed: require(args.seed, f, "seed")?,
        },
        other => bail!("unknown family {other:?}"),
    })
}

pub fn generate(args: &GenerateArgs) -> anyhow::Result<CommandOutput> {
    let family = family_from_args(args)?;
    let text = family.render()?;
    fs::write(&args.out, &text).with_context(|| format!("writing {}", args.out.display()))?;
    let h = Hypergraph::parse(&text)?;
    Ok(CommandOutput::ok(format!(
        "wrote {} ({family}: n={} m={})\n",
        args.out.display(),
        h.vertex_count(),
        h.edge_count()
    )))
}

pub fn analyze(args: &AnalyzeArgs) -> anyhow::Result<CommandOutput> {
    let h = read_hypergraph(&args.path)?;
    let report = AnalysisReport::analyze(
        &h,
        AnalysisOptions {
            connectivity: args.connectivity,
            transitivity: args.transitivity,
            atom: args.atom,
        },
    );
    let text = if args.machine {
        report.machine_block()
    } else {
        format!("{}\n{}", report.human(), report.machine_block())
    };
    Ok(CommandOutput::ok(text))
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn verify_lemma(trials: usize, seed: u64, nmax: usize) -> anyhow::Result<CommandOutput> {
    if trials == 0 {
        bail!("--trials must be at least 1");
    }
    let corpus: Vec<(String, Hypergraph)> = standard_corpus()
        .into_iter()
        .map(|f| Ok((f.slug(), f.build()?)))
        .collect::<anyhow::Result<_>>()?;
    let report = verify_uncrossing(&corpus, trials, seed, nmax)?;
    let mut out = String::new();
    writeln!(
        out,
        "exhaustive: {} instances, {} (X, Y) pairs",
        report.exhaustive_instances.len(),
        report.exhaustive_pairs
    )?;
    writeln!(
        out,
        "random: {} samples (seed {seed}, n <= {nmax})",
        report.random_samples
    )?;
    match &report.violation {
        None => {
            writeln!(out, "violations: 0")?;
            writeln!(out, "result: pass")?;
            Ok(CommandOutput::ok(out))
        }
        Some(v) => {
            writeln!(out, "violation in {}", v.instance)?;
            write!(out, "{}", v.hypergraph.serialize())?;
            writeln!(out, "X = {{{}}}", join(&v.x))?;
            writeln!(out, "Y = {{{}}}", join(&v.y))?;
            writeln!(
                out,
                "|d(X)|={} |d(Y)|={} |d(X|Y)|={} |d(X&Y)|={}",
                v.values.x, v.values.y, v.values.union, v.values.intersection
            )?;
            writeln!(out, "result: FAIL")?;
            Ok(CommandOutput {
                text: out,
                code: EXIT_FINDING,
            })
        }
    }
}

/// `.hg` files of a directory, sorted by file name.
pub fn corpus_files(dir: &Path) -> anyhow::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading corpus directory {}", dir.display()))?
        .map(|entry| entry.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    files.retain(|p| p.is_file() && p.extension().is_some_and(|e| e == "hg"));
    files.sort();
    Ok(files)
}

pub fn verify_theorem(dir: &Path, which: Theorem) -> anyhow::Result<CommandOutput> {
    let files = corpus_files(dir)?;
    let instances: Vec<(String, Hypergraph)> = files
        .iter()
        .map(|p| {
            let name = p
                .file_stem()
                .unwrap_or_default()
                .to_string_lossy()
                .into_owned();
            Ok((name, read_hypergraph(p)?))
        })
        .collect::<anyhow::Result<_>>()?;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    writeln!(
        out,
        "{:<32} {:>4} {:>3} {:>6} {:>9} {:>10} {:>5} {:>5}  verdict",
        "instance", "n", "k", "linear", "connected", "transitive", "kappa", "delta"
    )?;
    let (mut holds, mut fails, mut skipped) = (0, 0, 0);
    for (name, h) in &instances {
        let row = check_theorem(name, h, which);
        let verdict = match row.verdict {
            TheoremVerdict::Holds => {
                holds += 1;
                "pass".to_string()
            }
            TheoremVerdict::Fails => {
                fails += 1;
                "FAIL".to_string()
            }
            TheoremVerdict::Skipped(reason) => {
                skipped += 1;
                format!("skipped (hypothesis: {reason})")
            }
        };
        writeln!(
            out,
            "{:<32} {:>4} {:>3} {:>6} {:>9} {:>10} {:>5} {:>5}  {verdict}",
            name,
            h.vertex_count(),
            row.hypotheses
                .uniform_k
                .map_or("-".to_string(), |k| k.to_string()),
            yes_no(row.hypotheses.linear),
            yes_no(row.hypotheses.connected),
            yes_no(row.hypotheses.transitive),
            row.kappa.map_or("-".to_string(), |k| k.to_string()),
            row.delta,
        )?;
    }
    writeln!(
        out,
        "summary: {holds} pass, {fails} fail, {skipped} skipped"
    )?;
    if fails > 0 {
        writeln!(
            out,
            "CRITICAL: an instance meeting every hypothesis has kappa' != delta"
        )?;
    }
    Ok(CommandOutput {
        text: out,
        code: if fails > 0 { EXIT_FINDING } else { EXIT_OK },
    })
}

pub fn oracle(path: &Path) -> anyhow::Result<CommandOutput> {
    let h = read_hypergraph(path)?;
    let cut = edge_connectivity_oracle(&h)?;
    let mut out = String::new();
    writeln!(out, "kappa={}", cut.value)?;
    writeln!(out, "witness={}", join(&cut.side))?;
    match edge_atom(&h) {
        Ok(atom) => {
            writeln!(out, "atom={}", join(&atom.side))?;
            writeln!(out, "atom_boundary={}", atom.value)?;
        }
        Err(e) => writeln!(out, "atom=unavailable ({e})")?,
    }
    Ok(CommandOutput::ok(out))
}
