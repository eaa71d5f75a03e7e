use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use indr_core::collapse::{chordal_collapse_sequence, search_d_collapse, verify_collapse, SearchOutcome, DEFAULT_BUDGET};
use indr_core::homology::{hochster_betti, leray_number};
use indr_core::ideal::cochordal_split_tree;
use indr_core::{BettiTable, ClosedForm, Family, FieldSpec, Graph, SimplicialComplex, SquareFreeIdeal};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::{self, Check, CorpusKind, CorpusSpec};
use crate::format;

/// Exit status for a failed check, mismatch or invalid certificate.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Exit status for unreadable or unsupported input.
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "indr", version, about = "Higher independence complexes of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded Betti table of R/I_r(G).
    Betti(BettiArgs),
    /// Structural report for G and I_r(G).
    Check(CheckArgs),
    /// Vertex-splitting tree of I_r(G) for co-chordal G.
    Split(SplitArgs),
    /// Emit or verify an r-collapse certificate for Ind_r(G).
    Collapse(CollapseArgs),
    /// Run cross-checks over a seeded corpus.
    Corpus(CorpusArgs),
    /// Write a graph file.
    Generate(GenerateArgs),
}

#[derive(Debug, Args)]
pub struct Source {
    /// Graph file (`p n m` header, `e u v` lines).
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<PathBuf>,
    /// Named family: complete, star, path, cycle, path_complement,
    /// cycle_complement, kn_x.
    #[arg(long, requires = "n")]
    pub family: Option<Family>,
    /// Family parameter.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Coefficient characteristic for the homology oracle (0 or a prime).
    #[arg(long = "char", default_value_t = 2)]
    pub characteristic: u32,
    /// Run the oracle above the vertex limit.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Split,
    Closed,
    Oracle,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Grid,
    Machine,
}

#[derive(Debug, Args)]
pub struct BettiArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum, default_value_t = Method::Split)]
    pub method: Method,
    #[command(flatten)]
    pub oracle: OracleArgs,
    #[arg(long, value_enum, default_value_t = TableFormat::Grid)]
    pub format: TableFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub r: usize,
    #[command(flatten)]
    pub oracle: OracleArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SplitArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CollapseMode {
    Emit,
    Verify,
}

#[derive(Debug, Args)]
pub struct CollapseArgs {
    #[command(flatten)]
    pub source: Source,
    /// Complex file (`c n k` header, `f v...` lines) instead of Ind_r(G).
    #[arg(long, conflicts_with_all = ["graph", "family"])]
    pub complex: Option<PathBuf>,
    /// Collapse parameter; also selects Ind_r(G) for graph input.
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum, default_value_t = CollapseMode::Emit)]
    pub mode: CollapseMode,
    /// Certificate path: written by emit (stdout when absent), read by verify.
    #[arg(long)]
    pub cert: Option<PathBuf>,
    /// Fall back to exhaustive search when the graph is not co-chordal.
    #[arg(long)]
    pub search: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// random_cochordal, random_block_deleted_complete or a family name.
    #[arg(long, default_value = "random_cochordal")]
    pub kind: CorpusKind,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 3)]
    pub n_min: usize,
    #[arg(long, default_value_t = 7)]
    pub n_max: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated subset of split, reg, collapse, block.
    #[arg(long, value_delimiter = ',', default_values_t = Check::ALL.map(|c| c.name().to_string()))]
    pub checks: Vec<String>,
    #[command(flatten)]
    pub oracle: OracleArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, conflicts_with = "random")]
    pub family: Option<Family>,
    /// random_cochordal or random_block_deleted_complete.
    #[arg(long)]
    pub random: Option<CorpusKind>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A loaded graph and, for named families, the family parameter.
struct Loaded {
    graph: Graph,
    family: Option<(Family, usize)>,
}

fn load(source: &Source) -> anyhow::Result<Loaded> {
    match (&source.graph, source.family) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let graph = format::parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
            Ok(Loaded { graph, family: None })
        }
        (None, Some(family)) => {
            let n = source.n.context("--family needs --n")?;
            Ok(Loaded { graph: family.generate(n)?, family: Some((family, n)) })
        }
        (None, None) => bail!("give a graph with --graph <path> or --family <name> --n <k>"),
    }
}

fn field(args: &OracleArgs) -> anyhow::Result<FieldSpec> {
    Ok(FieldSpec::new(args.characteristic)?)
}

fn oracle_allowed(n: usize, args: &OracleArgs) -> bool {
    n <= CorpusSpec::ORACLE_LIMIT || args.allow_large
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Runs one command and returns the process exit code; errors map to
/// [`EXIT_INPUT_ERROR`] in `main`.
pub fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Betti(a) => betti(a),
        Command::Check(a) => check(a),
        Command::Split(a) => split(a),
        Command::Collapse(a) => collapse(a),
        Command::Corpus(a) => run_corpus(a),
        Command::Generate(a) => generate(a),
    }
}

fn render(t: &BettiTable, f: TableFormat) -> String {
    match f {
        TableFormat::Grid => format::write_betti_grid(t),
        TableFormat::Machine => format::write_betti_machine(t),
    }
}

fn betti(a: BettiArgs) -> anyhow::Result<i32> {
    let loaded = load(&a.source)?;
    let g = &loaded.graph;
    let methods: &[Method] = match a.method {
        Method::All => &[Method::Split, Method::Closed, Method::Oracle],
        ref m => std::slice::from_ref(m),
    };
    let single = methods.len() == 1;
    let mut tables: Vec<(&str, BettiTable)> = Vec::new();
    let mut out = String::new();
    for &m in methods {
        let table = match m {
            Method::Split => {
                if !g.is_cochordal() {
                    if single {
                        bail!("the complement of this graph is not chordal, so no split tree exists; try --method oracle");
                    }
                    out.push_str("# split: skipped, complement is not chordal\n");
                    continue;
                }
                ("split", BettiTable::from_split_tree(&cochordal_split_tree(g, a.r)?)?)
            }
            Method::Closed => {
                let form = loaded.family.and_then(|(f, n)| ClosedForm::for_family(f, n, a.r));
                match form {
                    Some(form) => ("closed", BettiTable::closed_form(form)?),
                    None if single => bail!("no closed form for this input; closed forms exist for complete, star, kn_x and path_complement"),
                    None => {
                        out.push_str("# closed: skipped, no closed form for this input\n");
                        continue;
                    }
                }
            }
            Method::Oracle => {
                if !oracle_allowed(g.n(), &a.oracle) {
                    if single {
                        bail!("oracle limited to n <= {}; pass --allow-large to override", CorpusSpec::ORACLE_LIMIT);
                    }
                    out.push_str("# oracle: skipped, graph too large\n");
                    continue;
                }
                let d = SimplicialComplex::ind_r(g, a.r)?;
                ("oracle", hochster_betti(&d, field(&a.oracle)?)?)
            }
            Method::All => unreachable!(),
        };
        if !single {
            out.push_str(&format!("# {}\n", table.0));
        }
        out.push_str(&render(&table.1, a.format));
        tables.push(table);
    }
    let agree = tables.windows(2).all(|w| w[0].1 == w[1].1);
    if !single {
        out.push_str(if agree { "MATCH\n" } else { "MISMATCH\n" });
    }
    emit(&a.out, &out)?;
    Ok(if agree { 0 } else { EXIT_CHECK_FAILED })
}

fn check(a: CheckArgs) -> anyhow::Result<i32> {
    let g = load(&a.source)?.graph;
    let f = field(&a.oracle)?;
    let p = g.structure_predicates();
    let ideal = SquareFreeIdeal::of_graph(&g, a.r)?;
    let d = SimplicialComplex::ind_r(&g, a.r)?;
    let cochordal = g.is_cochordal();
    let oracle_ok = oracle_allowed(g.n(), &a.oracle);
    let mut lines = vec![
        format!("vertices: {}", g.n()),
        format!("edges: {}", g.edge_count()),
        format!("chordal: {}", yes_no(g.is_chordal().is_some())),
        format!("co-chordal: {}", yes_no(cochordal)),
        format!("claw-free: {}", yes_no(p.claw_free)),
        format!("gap-free: {}", yes_no(p.gap_free)),
        format!(
            "leaves: {}",
            if p.leaves.is_empty() {
                "none".to_string()
            } else {
                p.leaves.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
            }
        ),
        format!("dim ind_1: {}", SimplicialComplex::ind_r(&g, 1)?.dimension()?),
        format!("krull dim R/I_r: {}", d.krull_dimension()?),
        format!("generators of I_r: {}", ideal.generators().len()),
    ];
    if ideal.is_zero() {
        lines.push("I_r: zero".to_string());
        lines.push("linear resolution: trivial".to_string());
    } else {
        let table = if cochordal {
            Some(("split", BettiTable::from_split_tree(&cochordal_split_tree(&g, a.r)?)?))
        } else if oracle_ok {
            Some(("oracle", hochster_betti(&d, f)?))
        } else {
            None
        };
        match table {
            Some((how, t)) => {
                lines.push(format!("linear resolution: {} ({how})", yes_no(t.has_linear_resolution(a.r + 1))));
                lines.push(format!("reg(I): {}", t.regularity(true)?));
            }
            None => lines.push("linear resolution: unknown (oracle skipped)".to_string()),
        }
    }
    if oracle_ok {
        lines.push(format!("leray: {}", leray_number(&d, f)));
    } else {
        lines.push("leray: skipped".to_string());
    }
    let mut out = lines.join("\n");
    out.push('\n');
    emit(&a.out, &out)?;
    Ok(0)
}

fn split(a: SplitArgs) -> anyhow::Result<i32> {
    let g = load(&a.source)?.graph;
    if !g.is_cochordal() {
        bail!("the complement of this graph is not chordal");
    }
    let t = cochordal_split_tree(&g, a.r)?;
    emit(&a.out, &format::write_split_tree(&t))?;
    Ok(0)
}

fn collapse(a: CollapseArgs) -> anyhow::Result<i32> {
    let (complex, graph) = match &a.complex {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            (format::parse_complex(&text).with_context(|| format!("parsing {}", path.display()))?, None)
        }
        None => {
            let g = load(&a.source)?.graph;
            (SimplicialComplex::ind_r(&g, a.r)?, Some(g))
        }
    };
    match a.mode {
        CollapseMode::Emit => {
            let seq = match graph {
                Some(g) if g.is_cochordal() => chordal_collapse_sequence(&g, a.r)?,
                _ if !a.search => bail!("input is not Ind_r of a co-chordal graph; pass --search to look for a collapse"),
                _ => match search_d_collapse(&complex, a.r, a.budget) {
                    SearchOutcome::Found(seq) => seq,
                    SearchOutcome::NotCollapsible => {
                        println!("NOT COLLAPSIBLE at d = {}", a.r);
                        return Ok(EXIT_CHECK_FAILED);
                    }
                    SearchOutcome::BudgetExhausted => {
                        println!("UNKNOWN: search budget of {} states exhausted", a.budget);
                        return Ok(EXIT_CHECK_FAILED);
                    }
                },
            };
            emit(&a.cert, &format::write_certificate(&seq))?;
            Ok(0)
        }
        CollapseMode::Verify => {
            let path: &Path = a.cert.as_deref().context("verify needs --cert <path>")?;
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let seq = format::parse_certificate(&text).with_context(|| format!("parsing {}", path.display()))?;
            match verify_collapse(&complex, &seq, seq.d) {
                Ok(()) => {
                    println!("VALID");
                    Ok(0)
                }
                Err(step) => {
                    println!("INVALID {step}");
                    Ok(EXIT_CHECK_FAILED)
                }
            }
        }
    }
}

fn run_corpus(a: CorpusArgs) -> anyhow::Result<i32> {
    let checks: Vec<Check> = a.checks.iter().map(|c| c.parse()).collect::<Result<_, String>>().map_err(anyhow::Error::msg)?;
    let spec = CorpusSpec { kind: a.kind, count: a.count, n_range: a.n_min..=a.n_max, seed: a.seed };
    let oracle = checks.iter().any(|c| matches!(c, Check::Split | Check::Regularity | Check::Collapse));
    spec.validate(oracle && !a.oracle.allow_large).map_err(anyhow::Error::msg)?;
    let report = corpus::run(&spec, &checks, field(&a.oracle)?);
    emit(&a.out, &report.to_string())?;
    Ok(if report.failures() == 0 { 0 } else { EXIT_CHECK_FAILED })
}

fn generate(a: GenerateArgs) -> anyhow::Result<i32> {
    let g = match (a.family, a.random) {
        (Some(f), _) => f.generate(a.n)?,
        (None, Some(kind)) => {
            if a.n == 0 {
                bail!("--n must be at least 1");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            match kind {
                CorpusKind::RandomCochordal => corpus::random_cochordal(&mut rng, a.n),
                CorpusKind::BlockDeletedComplete => corpus::random_block_deleted(&mut rng, a.n).0,
                CorpusKind::Named(f) => f.generate(a.n)?,
            }
        }
        (None, None) => bail!("give --family <name> or --random <kind>"),
    };
    emit(&a.out, &format::write_graph(&g))?;
    Ok(0)
}
