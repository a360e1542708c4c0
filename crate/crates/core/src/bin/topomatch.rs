//! Command-line front end: generate instances, validate drawings, run the
//! matching pipeline, query the exact oracle, and emit SVG snapshots.
//!
//! Exit codes: 0 ok, 1 validation failure, 2 guarantee or claim violation,
//! 3 I/O or argument error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use topomatch::cylinder::{validate_cylindrical, CylindricalDrawing};
use topomatch::gen::{self, GenKind, GenSpec};
use topomatch::matching::{solve, MatchingResult, RootPolicy};
use topomatch::model::{validate_simple, Drawing};
use topomatch::oracle::{max_disjoint_bruteforce, max_disjoint_cylindrical, DEFAULT_NODE_LIMIT};
use topomatch::svg;
use topomatch::Error;

#[derive(Parser)]
#[command(name = "topomatch", version, about = "Disjoint matchings in simple drawings of complete graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance.
    Gen(GenArgs),
    /// Validate a drawing or cylindrical drawing file.
    Validate { file: PathBuf },
    /// Run the matching pipeline on a complete drawing.
    Solve(SolveArgs),
    /// Exact maximum disjoint matching by branch and bound.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        limit: u64,
    },
    /// Solve and oracle, report the ratio.
    Compare {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        limit: u64,
    },
    /// Empirical distribution of maximum disjoint matchings over random
    /// cylinders of a given width.
    EstimateC(EstimateArgs),
    /// Render a drawing (optionally with a matching highlighted) to SVG.
    Svg(SvgArgs),
}

#[derive(Args)]
struct GenArgs {
    /// convex | random-points | cyl-selfhosted | cyl-random
    #[arg(long)]
    kind: String,
    /// Vertex count (drawing kinds).
    #[arg(long)]
    n: Option<usize>,
    /// Column count (cylinder kinds).
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    file: PathBuf,
    /// Root vertex, or "all" for the best over all roots.
    #[arg(long, default_value = "0")]
    root: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EstimateArgs {
    #[arg(long)]
    delta: usize,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    limit: u64,
}

#[derive(Args)]
struct SvgArgs {
    file: PathBuf,
    #[arg(short, long)]
    output: PathBuf,
    /// Matching result file whose edges get highlighted.
    #[arg(long)]
    matching: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Degeneracy(_) | Error::NotSimple(_) => 1,
        Error::GuaranteeViolation { .. }
        | Error::ClaimViolation { .. }
        | Error::EquivalenceViolation(_) => 2,
        _ => 3,
    }
}

/// Either kind of instance file, told apart by their schema.
enum Instance {
    Drawing(Drawing),
    Cylindrical(CylindricalDrawing),
}

fn load_instance(path: &PathBuf) -> Result<Instance, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    if let Ok(d) = Drawing::from_json_str(&text) {
        return Ok(Instance::Drawing(d));
    }
    CylindricalDrawing::from_json_str(&text).map(Instance::Cylindrical)
}

fn load_drawing(path: &PathBuf) -> Result<Drawing, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Drawing::from_json_str(&text)
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match output {
        Some(path) => {
            fs::write(path, content).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Gen(args) => {
            let (kind, size) = match args.kind.as_str() {
                "convex" => (GenKind::Convex, args.n),
                "random-points" => (GenKind::RandomPoints, args.n),
                "cyl-selfhosted" => (GenKind::CylSelfhosted, args.delta),
                "cyl-random" => (GenKind::CylRandom, args.delta),
                other => return Err(Error::InvalidInput(format!("unknown kind {other:?}"))),
            };
            let size = size.ok_or_else(|| {
                Error::InvalidInput("drawing kinds need --n, cylinder kinds need --delta".into())
            })?;
            let out = gen::generate(GenSpec {
                kind,
                size,
                seed: args.seed,
            })?;
            emit(&args.output, &out.to_json_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate { file } => match load_instance(&file)? {
            Instance::Drawing(d) => {
                let report = validate_simple(&d);
                print!("{}", report.summary());
                Ok(if report.ok() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                })
            }
            Instance::Cylindrical(c) => {
                let report = validate_cylindrical(&c, None);
                if report.ok() {
                    println!("ok: cylindrical drawing valid");
                    Ok(ExitCode::SUCCESS)
                } else {
                    for (kind, detail) in &report.violations {
                        println!("{kind:?}: {detail}");
                    }
                    Ok(ExitCode::from(1))
                }
            }
        },
        Command::Solve(args) => {
            let d = load_drawing(&args.file)?;
            let policy = match args.root.as_str() {
                "all" => RootPolicy::BestOfAll,
                v => RootPolicy::Fixed(v.parse().map_err(|_| {
                    Error::InvalidInput(format!("--root must be a vertex id or \"all\", got {v:?}"))
                })?),
            };
            let r = solve(&d, policy)?;
            println!("size {}", r.size);
            println!(
                "root {} u {} delta {} stage_a {} stage_b {} kept {} chains {:?}",
                r.stats.root,
                r.stats.u,
                r.stats.delta,
                r.stats.stage_a_size,
                r.stats.stage_b_size,
                r.stats.kept_count,
                r.stats.chain_lengths
            );
            if args.output.is_some() {
                emit(&args.output, &r.to_json_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { file, limit } => {
            let r = match load_instance(&file)? {
                Instance::Drawing(d) => max_disjoint_bruteforce(&d, limit)?,
                Instance::Cylindrical(c) => max_disjoint_cylindrical(&c, limit)?,
            };
            println!("optimum {}", r.optimum);
            println!("witness {:?}", r.witness);
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare { file, limit } => {
            let d = load_drawing(&file)?;
            let s = solve(&d, RootPolicy::Fixed(0))?;
            let o = max_disjoint_bruteforce(&d, limit)?;
            let ratio = s.size as f64 / o.optimum as f64;
            println!("solve {} oracle {} ratio {ratio:.4}", s.size, o.optimum);
            Ok(ExitCode::SUCCESS)
        }
        Command::EstimateC(args) => {
            if args.delta < 3 {
                return Err(Error::InvalidInput("--delta must be >= 3".into()));
            }
            let mut sizes = Vec::with_capacity(args.trials);
            let mut selfhosted = 0usize;
            // The reduction rarely produces wide cylinders; once it has
            // failed a few widths in a row, stop paying for the attempts.
            let mut selfhosted_misses = 0usize;
            for t in 0..args.trials {
                let trial_seed = args.seed.wrapping_add(t as u64);
                let hosted = if selfhosted_misses < 3 {
                    gen::cyl_selfhosted(args.delta, trial_seed).ok()
                } else {
                    None
                };
                let (c, hosted) = match hosted {
                    Some(c) => (c, true),
                    None => {
                        selfhosted_misses += 1;
                        (gen::cyl_random(args.delta, trial_seed)?, false)
                    }
                };
                if hosted {
                    selfhosted_misses = 0;
                    selfhosted += 1;
                }
                sizes.push(max_disjoint_cylindrical(&c, args.limit)?.optimum);
            }
            let min = sizes.iter().min().copied().unwrap_or(0);
            let mean = sizes.iter().sum::<usize>() as f64 / sizes.len().max(1) as f64;
            println!(
                "delta {} trials {} selfhosted {} random {} min {} mean {:.4}",
                args.delta,
                args.trials,
                selfhosted,
                args.trials - selfhosted,
                min,
                mean
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Svg(args) => {
            let d = load_drawing(&args.file)?;
            let highlight = match &args.matching {
                Some(path) => {
                    let text = fs::read_to_string(path)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    MatchingResult::from_json_str(&text, &d)?.edges
                }
                None => Vec::new(),
            };
            let content = svg::render(&d, &highlight);
            emit(&Some(args.output), &content)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
