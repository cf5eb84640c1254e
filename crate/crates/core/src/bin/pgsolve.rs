use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use univ_parity::game::ParityGame;
use univ_parity::io::bench::bench_suite;
use univ_parity::io::generate::{generate, GeneratorSpec};
use univ_parity::io::pgsolver::{parse_pgsolver, write_pgsolver};
use univ_parity::io::report::{parse_report_json, verify_witness, write_report_json, ReportJson};
use univ_parity::io::{write_atomic, IoError};
use univ_parity::solvers::{PruningRule, SolverConfig, SolverKind, TreeChoice};
use univ_parity::symbolic::Layout;
use univ_parity::trees::{OrderedTree, TreeFamily};

#[derive(Parser)]
#[command(
    name = "pgsolve",
    version,
    about = "Solve, verify and generate parity games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a game in PGSolver format.
    Solve {
        file: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        /// Print the JSON report instead of a summary.
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a JSON report against a game.
    Verify {
        file: PathBuf,
        #[arg(long)]
        witness: PathBuf,
    },
    /// Generate a game.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(short, long, default_value_t = 8)]
        n: usize,
        #[arg(short, long, default_value_t = 4)]
        d: u32,
        #[arg(long, default_value_t = 1)]
        min_out: usize,
        #[arg(long, default_value_t = 3)]
        max_out: usize,
        #[arg(long, default_value_t = 4)]
        levels: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Inspect a universal tree.
    Trees {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(short)]
        n: usize,
        #[arg(short = 'H')]
        height: usize,
        #[arg(long, conflicts_with = "dump")]
        stats: bool,
        /// Print the tree as nested brackets.
        #[arg(long)]
        dump: bool,
    },
    /// Solve every game of a directory.
    Bench {
        #[arg(long)]
        suite: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct SolverArgs {
    #[arg(long, value_enum, default_value_t = SolverArg::Mz)]
    solver: SolverArg,
    /// complete, parys, succinct or explicit:<file> holding a bracket tree.
    #[arg(long, default_value = "succinct")]
    tree: String,
    #[arg(long, value_enum, default_value_t = RuleArg::None)]
    rule: RuleArg,
    #[arg(long, value_enum, default_value_t = SymbolicArg::Off)]
    symbolic: SymbolicArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverArg {
    Mz,
    MzEnhanced,
    Universal,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    None,
    EmptySet,
    ParysBlocks,
}

#[derive(Clone, Copy, ValueEnum)]
enum SymbolicArg {
    Off,
    PerFrame,
    Succinct,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Random,
    Cycle,
    Ladder,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    C,
    P,
    S,
}

/// Largest tree `trees --dump` prints.
const DUMP_LIMIT: u128 = 1 << 20;

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        usage(e)
    }
}

impl SolverArgs {
    fn config(&self) -> Result<SolverConfig, Failure> {
        let tree = match self.tree.as_str() {
            "complete" => TreeChoice::Complete,
            "parys" => TreeChoice::Parys,
            "succinct" => TreeChoice::Succinct,
            other => match other.strip_prefix("explicit:") {
                Some(path) => {
                    let text =
                        fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
                    let tree: OrderedTree =
                        text.parse().map_err(|e| usage(format!("{path}: {e}")))?;
                    TreeChoice::Explicit(Arc::new(tree))
                }
                None => return Err(usage(format!("unknown tree {other:?}"))),
            },
        };
        let config = SolverConfig {
            solver: match self.solver {
                SolverArg::Mz => SolverKind::Zielonka,
                SolverArg::MzEnhanced => SolverKind::ZielonkaEnhanced,
                SolverArg::Universal => SolverKind::Universal,
            },
            tree,
            rule: match self.rule {
                RuleArg::None => PruningRule::None,
                RuleArg::EmptySet => PruningRule::EmptySet,
                RuleArg::ParysBlocks => PruningRule::ParysBlocks,
            },
            symbolic: match self.symbolic {
                SymbolicArg::Off => None,
                SymbolicArg::PerFrame => Some(Layout::PerFrame),
                SymbolicArg::Succinct => Some(Layout::Succinct),
            },
        };
        config.check().map_err(usage)?;
        Ok(config)
    }
}

fn read_game(path: &Path) -> Result<ParityGame, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_pgsolver(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn list(vertices: &[usize]) -> String {
    vertices
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            file,
            solver,
            json,
            output,
        } => {
            let game = read_game(&file)?;
            let config = solver.config()?;
            let report = config.run(&game).map_err(usage)?;
            let doc = ReportJson::new(&game, &report, &config.to_string());
            let text = write_report_json(&doc);
            if let Some(path) = output {
                write_atomic(&path, text.as_bytes())?;
            }
            if json {
                print!("{text}");
            } else {
                println!("w_even: {}", list(&doc.w_even));
                println!("w_odd: {}", list(&doc.w_odd));
                println!("recursive_calls: {}", doc.stats.recursive_calls);
                println!("loop_iterations: {}", doc.stats.loop_iterations);
                if let Some(c) = &doc.symbolic {
                    println!("peak_live_variables: {}", c.peak_live_variables);
                    println!("set_ops: {}", c.set_ops);
                    println!("cpre_ops: {}", c.cpre_ops);
                }
            }
        }
        Command::Verify { file, witness } => {
            let game = read_game(&file)?;
            let text = fs::read_to_string(&witness)
                .map_err(|e| usage(format!("{}: {e}", witness.display())))?;
            let doc = parse_report_json(&text)?;
            let verdict = verify_witness(&game, &doc)?;
            if !verdict.accepted() {
                for problem in &verdict.problems {
                    eprintln!("{problem}");
                }
                return Err(Failure {
                    code: 1,
                    message: "witness rejected".into(),
                });
            }
            println!("witness accepted");
        }
        Command::Gen {
            kind,
            n,
            d,
            min_out,
            max_out,
            levels,
            seed,
            output,
        } => {
            let spec = match kind {
                GenKind::Random => GeneratorSpec::random(n, d, (min_out, max_out), seed),
                GenKind::Cycle => GeneratorSpec::Cycle { n, d },
                GenKind::Ladder => GeneratorSpec::Ladder { levels },
            };
            let game = generate(&spec)?;
            write_atomic(&output, write_pgsolver(&game).as_bytes())?;
        }
        Command::Trees {
            family,
            n,
            height,
            stats: _,
            dump,
        } => {
            let family = match family {
                FamilyArg::C => TreeFamily::Complete { n, h: height },
                FamilyArg::P => TreeFamily::Parys { n, h: height },
                FamilyArg::S => TreeFamily::Succinct { n, h: height },
            };
            let stats = family.stats().map_err(usage)?;
            if dump {
                if stats.nodes > DUMP_LIMIT {
                    return Err(usage(format!(
                        "the tree has {} nodes, refusing to dump",
                        stats.nodes
                    )));
                }
                println!("{}", family.materialize().map_err(usage)?.to_brackets());
            } else {
                println!("height={}", stats.height);
                println!("leaves={}", stats.leaves);
                println!("nodes={}", stats.nodes);
            }
        }
        Command::Bench {
            suite,
            solver,
            json,
        } => {
            let config = solver.config()?;
            let records = bench_suite(&suite, &config)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&records).expect("records serialise")
                );
            } else {
                for r in &records {
                    let peak = r
                        .peak_live_variables
                        .map_or("-".to_string(), |p| p.to_string());
                    println!(
                        "{}\tn={}\tcalls={}\titerations={}\tpeak_vars={}\t{:.3}ms",
                        r.game, r.vertices, r.recursive_calls, r.loop_iterations, peak, r.wall_ms
                    );
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("pgsolve: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
