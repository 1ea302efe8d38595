//! `distgi`: isomorphism testing for graphs close to a simple class.
//!
//! Exit codes: 0 yes, 1 no, 2 deletion distance exceeds `--k`,
//! 3 usage, input or parse error, 4 disagreement with `--oracle-check`.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use distgi::deletion::{enumerate_deletion_sets, enumerate_minimal_vertex_covers, enumerate_twin_covers};
use distgi::engine::{decide_with, FastReject};
use distgi::games::{parse_dimacs_cnf, solve_hitting_game, weighted_qcnf_search, HittingGameInstance};
use distgi::oracle::brute_force_gi;
use distgi::recognition::{find_forbidden_occurrence, is_member};
use distgi::{
    verify_isomorphism, BuiltinClass, EngineOptions, ForbiddenFamily, IsoError, IsoResult, ParamKind, Parameterization,
};
use serde_json::json;

use input::{read_family, read_graph, read_text, Format, InputError};
use report::{emit, Counts, Exceeded, OracleCheck, ParamEcho, RunReport, Verdict, Witness};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_EXCEEDED: u8 = 2;
const EXIT_ERROR: u8 = 3;
const EXIT_ORACLE: u8 = 4;
/// `--oracle-check` only runs the brute force up to this many vertices.
const ORACLE_MAX_N: usize = 9;
const THREADS_VAR: &str = "DISTGI_THREADS";

#[derive(Parser)]
#[command(
    name = "distgi",
    version,
    about = "Graph isomorphism parameterized by deletion distance to a graph class"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    Vc,
    TwinCover,
    DistClique,
    DistCograph,
    DistCluster,
    DistThreshold,
    /// Patterns from `--family-file`.
    DistFamily,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two graphs are isomorphic.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum)]
        param: Param,
        #[arg(long)]
        k: usize,
        /// Include the vertex mapping in the report.
        #[arg(long)]
        certificate: bool,
        /// Sequential search with reproducible witnesses.
        #[arg(long)]
        deterministic: bool,
        /// Re-check the verdict by brute force on graphs of at most 9 vertices.
        #[arg(long)]
        oracle_check: bool,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        #[arg(long)]
        family_file: Option<PathBuf>,
    },
    /// Test membership in a class; reports the first forbidden occurrence.
    Recognize {
        graph: PathBuf,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        family_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
    /// List minimal deletion sets of size at most k, one per line.
    Deletion {
        graph: PathBuf,
        /// A class name, `vertex-cover` or `twin-cover`.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        family_file: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        /// Print only the number of sets.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
    /// List minimal vertex covers of size at most k, one per line.
    Vc {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
    /// Brute-force reference computations (slow).
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Solve a game.
    Game {
        #[command(subcommand)]
        command: GameCommand,
    },
    /// Find a satisfying assignment with at most k true variables.
    Sat {
        #[arg(long)]
        dimacs_cnf: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exhaustive isomorphism test.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        certificate: bool,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum GameCommand {
    /// Alternating hitting-set game: one set per line.
    Hitting {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_ERROR);
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn configure_threads() -> Result<(), InputError> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .map_err(|_| InputError(format!("{THREADS_VAR} must be a positive integer, got `{value}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| InputError(e.to_string()))
}

fn run(command: Command) -> Result<u8, InputError> {
    match command {
        Command::Iso {
            first,
            second,
            param,
            k,
            certificate,
            deterministic,
            oracle_check,
            format,
            family_file,
        } => {
            let kind = param_kind(param, family_file.as_deref())?;
            let g1 = read_graph(&first, format)?;
            let g2 = read_graph(&second, format)?;
            let opts = EngineOptions {
                deterministic,
                verify_witness: false,
            };
            Ok(cmd_iso(
                &g1,
                &g2,
                Parameterization::new(kind, k),
                &opts,
                certificate,
                oracle_check,
            ))
        }
        Command::Recognize {
            graph,
            family,
            family_file,
            format,
        } => {
            let fam = read_family(family.as_deref(), family_file.as_deref())?;
            let g = read_graph(&graph, format)?;
            let member = is_member(&g, &fam);
            let occurrence = if member {
                None
            } else {
                find_forbidden_occurrence(&g, &fam)
            };
            emit(&json!({ "family": fam.name(), "member": member, "occurrence": occurrence }));
            Ok(if member { EXIT_YES } else { EXIT_NO })
        }
        Command::Deletion {
            graph,
            family,
            family_file,
            k,
            count,
            format,
        } => {
            let g = read_graph(&graph, format)?;
            let sets = match (family.as_deref(), family_file.as_deref()) {
                (Some("vertex-cover"), None) => enumerate_minimal_vertex_covers(&g, k),
                (Some("twin-cover"), None) => enumerate_twin_covers(&g, k),
                (name, file) => enumerate_deletion_sets(&g, &read_family(name, file)?, k),
            };
            if count {
                println!("{}", sets.len());
            } else {
                sets.iter().for_each(|s| println!("{s}"));
            }
            Ok(if sets.is_empty() { EXIT_NO } else { EXIT_YES })
        }
        Command::Vc { graph, k, format } => {
            let g = read_graph(&graph, format)?;
            let sets = enumerate_minimal_vertex_covers(&g, k);
            sets.iter().for_each(|s| println!("{s}"));
            Ok(if sets.is_empty() { EXIT_NO } else { EXIT_YES })
        }
        Command::Oracle {
            command:
                OracleCommand::Iso {
                    first,
                    second,
                    certificate,
                    format,
                },
        } => {
            let g1 = read_graph(&first, format)?;
            let g2 = read_graph(&second, format)?;
            let start = Instant::now();
            let result = brute_force_gi(&g1, &g2);
            let witness = result.witness().map(|f| {
                json!({
                    "verified": verify_isomorphism(&g1, &g2, f),
                    "mapping": certificate.then(|| f.as_slice().to_vec()),
                })
            });
            emit(&json!({
                "verdict": if result.is_isomorphic() { Verdict::Isomorphic } else { Verdict::NonIsomorphic },
                "witness": witness,
                "vertices": [g1.n(), g2.n()],
                "wall_time_ms": start.elapsed().as_secs_f64() * 1e3,
            }));
            Ok(if result.is_isomorphic() { EXIT_YES } else { EXIT_NO })
        }
        Command::Game {
            command: GameCommand::Hitting { file, k1, k2 },
        } => {
            let inst = HittingGameInstance::parse(&read_text(&file)?, k1, k2)
                .map_err(|e| InputError(format!("{}: {e}", file.display())))?;
            let outcome = solve_hitting_game(&inst);
            let first_move = outcome.winning_move.map(|e| inst.universe()[e].clone());
            emit(&json!({
                "player_one_wins": outcome.player_one_wins,
                "winning_move": first_move,
                "nodes": outcome.nodes,
            }));
            Ok(if outcome.player_one_wins { EXIT_YES } else { EXIT_NO })
        }
        Command::Sat { dimacs_cnf, k } => {
            let inst = parse_dimacs_cnf(&read_text(&dimacs_cnf)?, k)
                .map_err(|e| InputError(format!("{}: {e}", dimacs_cnf.display())))?;
            let search = weighted_qcnf_search(&inst);
            emit(&json!({
                "satisfiable": search.assignment.is_some(),
                "true_variables": search.assignment,
                "nodes": search.nodes,
            }));
            Ok(if search.assignment.is_some() { EXIT_YES } else { EXIT_NO })
        }
    }
}

fn param_kind(param: Param, family_file: Option<&std::path::Path>) -> Result<ParamKind, InputError> {
    let class = |c| Ok(ParamKind::DistanceToClass(ForbiddenFamily::builtin(c)));
    match (param, family_file) {
        (Param::DistFamily, Some(path)) => Ok(ParamKind::DistanceToClass(read_family(None, Some(path))?)),
        (Param::DistFamily, None) => Err(InputError("--param dist-family needs --family-file".into())),
        (_, Some(_)) => Err(InputError("--family-file only applies to --param dist-family".into())),
        (Param::Vc, None) => Ok(ParamKind::VertexCover),
        (Param::TwinCover, None) => Ok(ParamKind::TwinCover),
        (Param::DistClique, None) => Ok(ParamKind::DistanceToClique),
        (Param::DistCograph, None) => class(BuiltinClass::Cograph),
        (Param::DistCluster, None) => class(BuiltinClass::Cluster),
        (Param::DistThreshold, None) => class(BuiltinClass::Threshold),
    }
}

fn fast_reject_name(r: FastReject) -> &'static str {
    match r {
        FastReject::VertexCount => "vertex-count",
        FastReject::EdgeCount => "edge-count",
        FastReject::ColorCounts => "color-counts",
        FastReject::DeletionDistance => "deletion-distance",
    }
}

fn cmd_iso(
    g1: &distgi::Graph,
    g2: &distgi::Graph,
    param: Parameterization,
    opts: &EngineOptions,
    certificate: bool,
    oracle_check: bool,
) -> u8 {
    let start = Instant::now();
    let outcome = decide_with(g1, g2, &param, opts);
    let mut report = RunReport {
        verdict: Verdict::NonIsomorphic,
        witness: None,
        param: Some(ParamEcho {
            kind: param.kind.to_string(),
            k: param.k,
        }),
        vertices: [g1.n(), g2.n()],
        counts: Counts::default(),
        fast_reject: None,
        distance_exceeded: None,
        oracle_check: None,
        wall_time_ms: 0.0,
    };
    let mut code = match outcome {
        Ok(decision) => {
            let s = &decision.stats;
            report.counts = Counts {
                deletion_distance: s.deletion_distance,
                first_deletion_sets: s.first_sets,
                candidate_deletion_sets: s.candidate_sets,
                bijections_tried: s.bijections_tried,
            };
            report.fast_reject = s.fast_reject.map(|r| fast_reject_name(r).to_string());
            if let IsoResult::Isomorphic(f) = &decision.result {
                report.verdict = Verdict::Isomorphic;
                report.witness = Some(Witness {
                    verified: verify_isomorphism(g1, g2, f),
                    mapping: certificate.then(|| f.as_slice().to_vec()),
                });
            }
            if oracle_check && g1.n().max(g2.n()) <= ORACLE_MAX_N {
                let agrees = brute_force_gi(g1, g2).is_isomorphic() == decision.result.is_isomorphic();
                report.oracle_check = Some(OracleCheck { agrees });
            }
            if decision.result.is_isomorphic() {
                EXIT_YES
            } else {
                EXIT_NO
            }
        }
        Err(IsoError::DistanceExceeded { first, second, .. }) => {
            report.verdict = Verdict::DistanceExceeded;
            report.distance_exceeded = Some(Exceeded { first, second });
            EXIT_EXCEEDED
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_ERROR;
        }
    };
    let witness_failed = report.witness.as_ref().is_some_and(|w| !w.verified);
    let oracle_failed = report.oracle_check.as_ref().is_some_and(|c| !c.agrees);
    if witness_failed || oracle_failed {
        code = EXIT_ORACLE;
    }
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    emit(&report);
    code
}
