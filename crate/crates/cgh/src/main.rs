use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use cgh::constructions::{
    clique_union, lift_odd, partitioned_construction, short_pairs_construction,
    stack_free_construction, stack_witness, ConstructionReport, PairIndexMode,
};
use cgh::good::{enumerate_good_ends, Coloring};
use cgh::hypergraph::instance_rng;
use cgh::patterns::{
    contains_disjoint_segments, contains_stack, contains_tight_path, contains_zigzag, is_zigzag,
    StackMode,
};
use cgh::search::{extremal_table, max_edges_avoiding, PatternPredicate, SearchConfig, SymmetryMode};
use cgh::verify::{
    bound_values, check_end_count_inequality, check_good_path_inequalities, check_injections,
    check_link_recursion, check_odd_reduction, coloring_reduction, expected_counts_exact,
    expected_counts_sampled,
};
use cgh::{Cgh, Result};

/// Conventions: hypergraph files use the plain text format ("n r m" header,
/// one sorted edge per line). Structured results are JSON on stdout with the
/// tool version and the invocation parameters embedded. Relative --out paths
/// resolve under $CGH_OUT_DIR when that variable is set; files are written
/// via a temporary and an atomic rename. Exit code 3 means a search budget
/// was exhausted and the reported value is only a lower bound.
#[derive(Parser)]
#[command(name = "cgh", version, about = "convex geometric hypergraph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one of the extremal constructions.
    Construct {
        #[command(subcommand)]
        which: ConstructCmd,
    },
    /// Decide whether a hypergraph contains a given pattern.
    Detect {
        #[command(subcommand)]
        which: DetectCmd,
    },
    /// Exact extremal numbers by exhaustive search.
    Extremal(ExtremalArgs),
    /// Check the counting inequalities and bound formulas.
    Verify {
        #[command(subcommand)]
        which: VerifyCmd,
    },
}

#[derive(Args)]
struct OutArg {
    /// Write the hypergraph (text format) here; report JSON still goes to
    /// stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// All edges containing a pair at cyclic distance < k.
    ShortPairs {
        #[arg(long)] n: usize,
        #[arg(long)] r: usize,
        #[arg(long)] k: usize,
        #[command(flatten)] out: OutArg,
    },
    /// The layered stack-free family H(n, r, k).
    StackFree {
        #[arg(long)] n: usize,
        #[arg(long)] r: usize,
        #[arg(long)] k: usize,
        #[arg(long, value_enum, default_value_t = PairModeArg::Cyclic)]
        mode: PairModeArg,
        #[command(flatten)] out: OutArg,
    },
    /// Disjoint cliques of k consecutive vertices (graph case).
    CliqueUnion {
        #[arg(long)] n: usize,
        #[arg(long)] k: usize,
        #[command(flatten)] out: OutArg,
    },
    /// The partitioned lower-bound family (s | n, r | k-1).
    Partitioned {
        #[arg(long)] n: usize,
        #[arg(long)] r: usize,
        #[arg(long)] k: usize,
        #[command(flatten)] out: OutArg,
    },
    /// A canonical k-stack on the first kr vertices.
    StackWitness {
        #[arg(long)] n: usize,
        #[arg(long)] r: usize,
        #[arg(long)] k: usize,
        #[command(flatten)] out: OutArg,
    },
    /// Lift an odd-uniformity hypergraph by a block of new vertices.
    LiftOdd {
        #[arg(long)] input: PathBuf,
        #[arg(long)] x_count: usize,
        #[command(flatten)] out: OutArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PairModeArg {
    Cyclic,
    Adjacent,
}

impl From<PairModeArg> for PairIndexMode {
    fn from(m: PairModeArg) -> Self {
        match m {
            PairModeArg::Cyclic => PairIndexMode::Cyclic,
            PairModeArg::Adjacent => PairIndexMode::Adjacent,
        }
    }
}

#[derive(Subcommand)]
enum DetectCmd {
    TightPath {
        #[arg(long)] input: PathBuf,
        #[arg(long)] k: usize,
    },
    /// With --seq, validate that vertex sequence and print its witness
    /// (index-class segments); otherwise decide existence.
    Zigzag {
        #[arg(long)] input: PathBuf,
        #[arg(long)] k: usize,
        #[arg(long, value_delimiter = ',')]
        seq: Option<Vec<usize>>,
    },
    /// Exhaustive unless --budget is given; a sampled run needs --seed.
    Stack {
        #[arg(long)] input: PathBuf,
        #[arg(long)] k: usize,
        #[arg(long)] budget: Option<u64>,
        #[arg(long)] seed: Option<u64>,
    },
    /// Crossing-free matching of k chords (graph case).
    Matching {
        #[arg(long)] input: PathBuf,
        #[arg(long)] k: usize,
    },
    /// Good tight k-path with respect to the given coloring.
    GoodPath {
        #[arg(long)] input: PathBuf,
        #[arg(long)] k: usize,
        /// Comma-separated class of each vertex, e.g. 0,0,1,1,0,1.
        #[arg(long, value_delimiter = ',')]
        classes: Vec<usize>,
    },
}

#[derive(Args)]
struct ExtremalArgs {
    #[arg(long)] n: usize,
    #[arg(long)] r: usize,
    #[arg(long)] k: usize,
    #[arg(long, value_enum)]
    pattern: PatternArg,
    /// Symmetry group for the search reduction: convex (dihedral, sound
    /// for every pattern) or abstract (full relabeling, tight paths only).
    #[arg(long, value_enum, default_value_t = ModeArg::Convex)]
    mode: ModeArg,
    /// Node budget; exceeding it exits with code 3.
    #[arg(long)]
    budget: Option<u64>,
    /// Disable the first-edge symmetry reduction.
    #[arg(long)]
    no_symmetry: bool,
    /// Write the maximizing witness here in the hypergraph text format.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write a one-row CSV table (with the bound columns) here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Convex,
    Abstract,
}

#[derive(Clone, Copy, ValueEnum)]
enum PatternArg {
    TightPath,
    Zigzag,
    Stack,
    Matching,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// r|H| - (r-1)(k-1)|∂H| ≤ |S_k(H)|.
    EndsInequality {
        #[arg(long)] input: PathBuf,
        #[arg(long)] k: usize,
    },
    /// Injectivity of the extension and projection maps.
    Injections {
        #[arg(long)] input: PathBuf,
        #[arg(long)] k: usize,
    },
    /// Random-coloring reduction: exact expectations vs. a Monte Carlo run.
    Coloring {
        #[arg(long)] input: PathBuf,
        #[arg(long)] seed: u64,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
    },
    /// Good-path inequalities for one sampled class-regular restriction.
    GoodPaths {
        #[arg(long)] input: PathBuf,
        #[arg(long)] k: usize,
        #[arg(long)] seed: u64,
    },
    /// Odd-uniformity lift and the resulting edge bound.
    OddReduction {
        #[arg(long)] input: PathBuf,
        #[arg(long)] k: usize,
    },
    /// Maximum-degree link recursion bound.
    LinkRecursion {
        #[arg(long)] input: PathBuf,
        #[arg(long)] k: usize,
    },
    /// Evaluate every bound formula at (n, r, k).
    Bounds {
        #[arg(long)] n: usize,
        #[arg(long)] r: usize,
        #[arg(long)] k: usize,
    },
}

fn resolve_out(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var("CGH_OUT_DIR") {
            return Path::new(&dir).join(path);
        }
    }
    path.to_path_buf()
}

fn atomic_write(path: &Path, contents: &str) -> std::io::Result<()> {
    let path = resolve_out(path);
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, &path)?;
    Ok(())
}

fn load(path: &Path) -> Result<Cgh> {
    Cgh::from_text(&fs::read_to_string(path)?)
}

fn emit<C: Serialize, R: Serialize>(command: &str, config: C, result: R) {
    let doc = json!({
        "tool": "cgh",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "config": config,
        "result": result,
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
}

fn finish_construction(
    command: &str,
    config: serde_json::Value,
    report: &ConstructionReport,
    out: &OutArg,
) -> Result<()> {
    if let Some(path) = &out.out {
        atomic_write(path, &report.cgh.to_text())?;
    }
    emit(
        command,
        config,
        json!({
            "edge_count": report.edge_count,
            "predicted_leading_term": report.predicted_leading_term,
            "claim": report.claim,
            "notes": report.notes,
            "written": out.out.as_ref().map(|p| resolve_out(p)),
        }),
    );
    Ok(())
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Construct { which } => match which {
            ConstructCmd::ShortPairs { n, r, k, out } => {
                let rep = short_pairs_construction(n, r, k)?;
                finish_construction("construct short-pairs", json!({"n": n, "r": r, "k": k}), &rep, &out)?;
            }
            ConstructCmd::StackFree { n, r, k, mode, out } => {
                let rep = stack_free_construction(n, r, k, mode.into())?;
                let mode_name = match mode {
                    PairModeArg::Cyclic => "cyclic",
                    PairModeArg::Adjacent => "adjacent",
                };
                finish_construction(
                    "construct stack-free",
                    json!({"n": n, "r": r, "k": k, "mode": mode_name}),
                    &rep,
                    &out,
                )?;
            }
            ConstructCmd::CliqueUnion { n, k, out } => {
                let rep = clique_union(n, k)?;
                finish_construction("construct clique-union", json!({"n": n, "k": k}), &rep, &out)?;
            }
            ConstructCmd::Partitioned { n, r, k, out } => {
                let rep = partitioned_construction(n, r, k)?;
                finish_construction("construct partitioned", json!({"n": n, "r": r, "k": k}), &rep, &out)?;
            }
            ConstructCmd::StackWitness { n, r, k, out } => {
                let h = stack_witness(n, r, k)?;
                if let Some(path) = &out.out {
                    atomic_write(path, &h.to_text())?;
                }
                emit(
                    "construct stack-witness",
                    json!({"n": n, "r": r, "k": k}),
                    json!({"edge_count": h.len(), "written": out.out.as_ref().map(|p| resolve_out(p))}),
                );
            }
            ConstructCmd::LiftOdd { input, x_count, out } => {
                let h = load(&input)?;
                let lifted = lift_odd(&h, x_count)?;
                if let Some(path) = &out.out {
                    atomic_write(path, &lifted.to_text())?;
                }
                emit(
                    "construct lift-odd",
                    json!({"input": input, "x_count": x_count}),
                    json!({
                        "n": lifted.n(),
                        "r": lifted.r(),
                        "edge_count": lifted.len(),
                        "written": out.out.as_ref().map(|p| resolve_out(p)),
                    }),
                );
            }
        },
        Command::Detect { which } => match which {
            DetectCmd::TightPath { input, k } => {
                let h = load(&input)?;
                let found = contains_tight_path(&h, k);
                emit("detect tight-path", json!({"input": input, "k": k}), json!({"found": found}));
            }
            DetectCmd::Zigzag { input, k, seq } => {
                let h = load(&input)?;
                match seq {
                    Some(seq) => {
                        if seq.len() != k + h.r() - 1 {
                            return Err(cgh::CghError::InvalidParam(format!(
                                "a {k}-zigzag sequence has {} vertices, got {}",
                                k + h.r() - 1,
                                seq.len()
                            )));
                        }
                        let witness = is_zigzag(&h, &seq)?;
                        emit(
                            "detect zigzag",
                            json!({"input": input, "k": k, "seq": seq}),
                            json!({"found": witness.is_some(), "witness": witness}),
                        );
                    }
                    None => {
                        let found = contains_zigzag(&h, k)?;
                        emit("detect zigzag", json!({"input": input, "k": k}), json!({"found": found}));
                    }
                }
            }
            DetectCmd::Stack { input, k, budget, seed } => {
                let h = load(&input)?;
                let mode = match (budget, seed) {
                    (None, _) => StackMode::Exhaustive,
                    (Some(budget), Some(seed)) => StackMode::Sampled { budget, seed },
                    (Some(_), None) => {
                        return Err(cgh::CghError::InvalidParam(
                            "--budget needs an explicit --seed".into(),
                        ))
                    }
                };
                let found = contains_stack(&h, k, mode)?;
                emit(
                    "detect stack",
                    json!({"input": input, "k": k, "budget": budget, "seed": seed}),
                    json!({"found": found, "exhaustive": budget.is_none()}),
                );
            }
            DetectCmd::Matching { input, k } => {
                let h = load(&input)?;
                let found = contains_disjoint_segments(&h, k)?;
                emit("detect matching", json!({"input": input, "k": k}), json!({"found": found}));
            }
            DetectCmd::GoodPath { input, k, classes } => {
                let h = load(&input)?;
                let s = h.r() / 2;
                let coloring = Coloring::new(classes.clone(), s)?;
                let g = Cgh::from_edges(
                    h.n(),
                    h.r(),
                    h.edges().filter(|e| coloring.is_class_regular(e)).cloned().collect::<Vec<_>>(),
                )?;
                let ends = enumerate_good_ends(&g, &coloring, k)?;
                emit(
                    "detect good-path",
                    json!({"input": input, "k": k, "classes": classes}),
                    json!({"found": !ends.is_empty(), "good_ends": ends.len()}),
                );
            }
        },
        Command::Extremal(args) => {
            let k = args.k;
            let pattern = match args.pattern {
                PatternArg::TightPath => PatternPredicate::TightPath(k),
                PatternArg::Zigzag => PatternPredicate::Zigzag(k),
                PatternArg::Stack => PatternPredicate::Stack(k),
                PatternArg::Matching => PatternPredicate::DisjointSegments(k),
            };
            let symmetry = if args.no_symmetry {
                SymmetryMode::Off
            } else {
                match args.mode {
                    ModeArg::Convex => SymmetryMode::Dihedral,
                    ModeArg::Abstract => SymmetryMode::Full,
                }
            };
            let config = SearchConfig { node_budget: args.budget, symmetry };
            let result = max_edges_avoiding(args.n, args.r, pattern, &config)?;
            if let Some(path) = &args.out {
                let witness = Cgh::from_edges(args.n, args.r, result.witness.clone())?;
                atomic_write(path, &witness.to_text())?;
            }
            if let Some(path) = &args.csv {
                let csv = extremal_table(&[(args.n, args.r, pattern)], &config)?;
                atomic_write(path, &csv)?;
            }
            let exact = result.exact;
            emit(
                "extremal",
                json!({
                    "n": args.n, "r": args.r, "k": k,
                    "pattern": pattern.name(),
                    "budget": args.budget,
                    "symmetry": symmetry,
                    "witness_out": args.out.as_ref().map(|p| resolve_out(p)),
                    "csv_out": args.csv.as_ref().map(|p| resolve_out(p)),
                }),
                result,
            );
            if !exact {
                return Ok(ExitCode::from(3));
            }
        }
        Command::Verify { which } => match which {
            VerifyCmd::EndsInequality { input, k } => {
                let h = load(&input)?;
                let report = check_end_count_inequality(&h, k)?;
                emit("verify ends-inequality", json!({"input": input, "k": k}), report);
            }
            VerifyCmd::Injections { input, k } => {
                let h = load(&input)?;
                let (eq1, eq2) = check_injections(&h, k)?;
                emit("verify injections", json!({"input": input, "k": k}), json!([eq1, eq2]));
            }
            VerifyCmd::Coloring { input, seed, samples } => {
                let h = load(&input)?;
                let exact = expected_counts_exact(&h)?;
                let sampled = expected_counts_sampled(&h, samples, seed)?;
                let mut rng = instance_rng(seed, 0);
                let (coloring, g, parts) = coloring_reduction(&h, &mut rng)?;
                emit(
                    "verify coloring",
                    json!({"input": input, "seed": seed, "samples": samples}),
                    json!({
                        "exact": exact,
                        "sampled": sampled,
                        "one_draw": {
                            "classes": coloring.classes(),
                            "surviving_edges": g.len(),
                            "shadow_parts": parts.iter().map(|p| p.len()).collect::<Vec<_>>(),
                        },
                    }),
                );
            }
            VerifyCmd::GoodPaths { input, k, seed } => {
                let h = load(&input)?;
                let mut rng = instance_rng(seed, 0);
                let (coloring, g, _) = coloring_reduction(&h, &mut rng)?;
                let reports = check_good_path_inequalities(&g, &coloring, k)?;
                emit("verify good-paths", json!({"input": input, "k": k, "seed": seed}), reports);
            }
            VerifyCmd::OddReduction { input, k } => {
                let h = load(&input)?;
                let report = check_odd_reduction(&h, k)?;
                emit("verify odd-reduction", json!({"input": input, "k": k}), report);
            }
            VerifyCmd::LinkRecursion { input, k } => {
                let h = load(&input)?;
                let report = check_link_recursion(&h, k)?;
                emit("verify link-recursion", json!({"input": input, "k": k}), report);
            }
            VerifyCmd::Bounds { n, r, k } => {
                let values = bound_values(n, r, k)?;
                emit("verify bounds", json!({"n": n, "r": r, "k": k}), values);
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
