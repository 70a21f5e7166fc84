//! `udisk-mis`: generate, solve, verify, diff, bench, and render maximum
//! independent set instances on unit disk graphs.
//!
//! Exit codes: 0 success (and "independent" verdicts), 1 usage or input
//! error (and "not independent" verdicts), 2 differential-suite hard
//! failure, 3 internal invariant violation.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use udisk_mis::approx::{approx2_solve, LineSolver};
use udisk_mis::line_solvers::{
    brute_force_solve, paper_dp_solve, pair_state_dp_solve, split_whole, DEFAULT_BRUTE_CAP,
};
use udisk_mis::strip::decompose;
use udisk_mis::toolkit::bench::bench_scaling;
use udisk_mis::toolkit::diff::{differential_test, reports_to_csv, DiffSummary};
use udisk_mis::toolkit::gen::{generate, GenMode, GenParams};
use udisk_mis::toolkit::io;
use udisk_mis::toolkit::render::render_svg;
use udisk_mis::{verify_independent, Convention, DiskId, Error, SolveResult, SolverKind};

#[derive(Parser)]
#[command(name = "udisk-mis", version, about = "Maximum independent set toolkit for unit disk graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a random instance file.
    Generate(GenerateArgs),
    /// Solve an instance file with a chosen algorithm.
    Solve(SolveArgs),
    /// Check whether a set of disk ids is independent.
    Verify(VerifyArgs),
    /// Run the differential suite against the brute-force oracle.
    Diff(DiffArgs),
    /// Measure solver scaling on growing stabbed-line instances.
    Bench(BenchArgs),
    /// Render an instance (and optionally a solution) as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Uniform,
    Clustered,
    Stabbed,
}

#[derive(Clone, Copy, ValueEnum)]
enum TangencyArg {
    /// Tangent disks are independent.
    Open,
    /// Tangent disks are adjacent.
    Closed,
}

impl From<TangencyArg> for Convention {
    fn from(t: TangencyArg) -> Convention {
        match t {
            TangencyArg::Open => Convention::Open,
            TangencyArg::Closed => Convention::Closed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Approx2Pairdp,
    Approx2Paperdp,
    PairDp,
    PaperDp,
    Brute,
}

impl AlgoArg {
    fn label(self) -> &'static str {
        match self {
            AlgoArg::Approx2Pairdp => "approx2-pairdp",
            AlgoArg::Approx2Paperdp => "approx2-paperdp",
            AlgoArg::PairDp => "pair-dp",
            AlgoArg::PaperDp => "paper-dp",
            AlgoArg::Brute => "brute",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchAlgoArg {
    PaperDp,
    PairDp,
    Brute,
    Approx2,
}

impl From<BenchAlgoArg> for SolverKind {
    fn from(a: BenchAlgoArg) -> SolverKind {
        match a {
            BenchAlgoArg::PaperDp => SolverKind::PaperDp,
            BenchAlgoArg::PairDp => SolverKind::PairDp,
            BenchAlgoArg::Brute => SolverKind::Brute,
            BenchAlgoArg::Approx2 => SolverKind::Approx2,
        }
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    radius: f64,
    #[arg(long)]
    seed: u64,
    /// Box width (uniform/clustered) or x-extent (stabbed).
    #[arg(long, default_value_t = 10.0)]
    width: f64,
    /// Box height; ignored in stabbed mode.
    #[arg(long, default_value_t = 10.0)]
    height: f64,
    /// Minimum pairwise center distance; default is 1e-6 * radius.
    #[arg(long)]
    min_sep: Option<f64>,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    algo: AlgoArg,
    /// Radius for CSV input (CSV files carry none).
    #[arg(long)]
    radius: Option<f64>,
    /// Stabbing line for pair-dp / paper-dp input.
    #[arg(long, default_value_t = 0.0)]
    line: f64,
    /// Also print the strip decomposition as JSON.
    #[arg(long)]
    dump_strips: bool,
    #[arg(long, value_enum, default_value = "open")]
    tangency: TangencyArg,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(short, long)]
    input: PathBuf,
    /// Comma-separated disk ids, e.g. --ids 1,4,9.
    #[arg(long)]
    ids: String,
    #[arg(long)]
    radius: Option<f64>,
    #[arg(long, value_enum, default_value = "open")]
    tangency: TangencyArg,
}

#[derive(Args)]
struct DiffArgs {
    /// stabbed: brute vs pair-dp vs paper-dp; general: brute vs approx2.
    #[arg(long, value_enum)]
    mode: DiffModeArg,
    /// Maximum instance size; per-trial sizes are drawn from 1..=n.
    #[arg(long)]
    n: usize,
    #[arg(long)]
    trials: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, value_enum, default_value = "open")]
    tangency: TangencyArg,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiffModeArg {
    Stabbed,
    General,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    algo: BenchAlgoArg,
    /// Comma-separated ascending sizes, e.g. --sizes 2000,4000,8000.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    reps: usize,
    #[arg(long, value_enum, default_value = "open")]
    tangency: TangencyArg,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(short, long)]
    input: PathBuf,
    /// Result JSON produced by `solve`; its selected disks are filled.
    #[arg(long)]
    result: Option<PathBuf>,
    /// Draw the strip decomposition lines.
    #[arg(long)]
    strips: bool,
    #[arg(long)]
    radius: Option<f64>,
    #[arg(short, long)]
    output: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Generate(args) => cmd_generate(args),
        Cmd::Solve(args) => cmd_solve(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Diff(args) => cmd_diff(args),
        Cmd::Bench(args) => cmd_bench(args),
        Cmd::Render(args) => cmd_render(args),
    }
}

fn brute_cap() -> Result<usize, Error> {
    match std::env::var("UDISK_BRUTE_CAP") {
        Ok(v) => v.parse().map_err(|_| {
            Error::InvalidArgument(format!("UDISK_BRUTE_CAP must be an integer, got {v:?}"))
        }),
        Err(_) => Ok(DEFAULT_BRUTE_CAP),
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<u8, Error> {
    let mode = match args.mode {
        ModeArg::Uniform => GenMode::Uniform {
            width: args.width,
            height: args.height,
        },
        ModeArg::Clustered => GenMode::Clustered {
            width: args.width,
            height: args.height,
        },
        ModeArg::Stabbed => GenMode::StabbedLine {
            x_extent: args.width,
        },
    };
    let mut params = GenParams::new(mode, args.n, args.radius, args.seed);
    if let Some(sep) = args.min_sep {
        params.min_sep = sep;
    }
    let inst = generate(&params)?;
    io::write_instance(&inst, &args.output)?;
    println!(
        "wrote {} disks (radius {}) to {}",
        inst.len(),
        inst.radius,
        args.output.display()
    );
    Ok(0)
}

fn cmd_solve(args: SolveArgs) -> Result<u8, Error> {
    let inst = io::read_instance(&args.input, args.radius)?;
    let conv = args.tangency.into();

    if args.dump_strips {
        let sa = decompose(&inst);
        let doc = serde_json::json!({
            "line_ys": sa.line_ys,
            "strips": sa.strips,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("strips serialize"));
    }

    let result: SolveResult = match args.algo {
        AlgoArg::Brute => {
            let ids: Vec<DiskId> = inst.ids().collect();
            brute_force_solve(&inst, &ids, conv, brute_cap()?)?
        }
        AlgoArg::PairDp => pair_state_dp_solve(&split_whole(&inst, args.line)?, conv)?,
        AlgoArg::PaperDp => paper_dp_solve(&split_whole(&inst, args.line)?, conv),
        AlgoArg::Approx2Pairdp => approx2_solve(&inst, LineSolver::PairDp, conv)?,
        AlgoArg::Approx2Paperdp => approx2_solve(&inst, LineSolver::PaperDp, conv)?,
    };

    let verified = verify_independent(&inst, &result.selected, conv)?;
    match &args.output {
        Some(path) => {
            io::write_result(&result, args.algo.label(), verified, path)?;
            println!(
                "{}: size {}, verified_independent {}, {:.3} ms -> {}",
                args.algo.label(),
                result.size,
                verified,
                result.elapsed.as_secs_f64() * 1e3,
                path.display()
            );
        }
        None => print!("{}", io::result_to_json(&result, args.algo.label(), verified)),
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Error> {
    let inst = io::read_instance(&args.input, args.radius)?;
    let mut ids = BTreeSet::new();
    for piece in args.ids.split(',').filter(|s| !s.trim().is_empty()) {
        let id: DiskId = piece.trim().parse().map_err(|_| {
            Error::InvalidArgument(format!("bad disk id {piece:?} in --ids"))
        })?;
        ids.insert(id);
    }
    let ok = verify_independent(&inst, &ids, args.tangency.into())?;
    if ok {
        println!("independent: {} disks, no intersecting pair", ids.len());
        Ok(0)
    } else {
        println!("NOT independent: some pair of the {} disks intersects", ids.len());
        Ok(1)
    }
}

fn cmd_diff(args: DiffArgs) -> Result<u8, Error> {
    let radius = 0.5;
    let params = match args.mode {
        DiffModeArg::Stabbed => GenParams::new(
            GenMode::StabbedLine {
                x_extent: (args.n.max(2) as f64) * radius,
            },
            args.n,
            radius,
            args.seed,
        ),
        DiffModeArg::General => GenParams::new(
            GenMode::Uniform {
                width: (args.n.max(2) as f64).sqrt() * 2.4 * radius,
                height: (args.n.max(2) as f64).sqrt() * 2.4 * radius,
            },
            args.n,
            radius,
            args.seed,
        ),
    };
    let reports = differential_test(&params, args.trials, args.tangency.into(), brute_cap()?)?;
    std::fs::write(&args.output, reports_to_csv(&reports))?;

    let summary = DiffSummary::of(&reports);
    println!(
        "{} trials: {} hard failures, {} overcounts (rate {:.4}), {} infeasible reconstructions",
        summary.trials,
        summary.hard_failures,
        summary.overcounts,
        summary.overcount_rate(),
        summary.infeasible_reconstructions,
    );
    println!("report written to {}", args.output.display());
    Ok(if summary.hard_failures > 0 { 2 } else { 0 })
}

fn cmd_bench(args: BenchArgs) -> Result<u8, Error> {
    let report = bench_scaling(
        args.algo.into(),
        &args.sizes,
        args.reps,
        args.tangency.into(),
        brute_cap()?,
    )?;
    print!("{}", report.table());
    if let Some(path) = &args.output {
        std::fs::write(path, report.to_csv())?;
        println!("csv written to {}", path.display());
    }
    Ok(0)
}

fn cmd_render(args: RenderArgs) -> Result<u8, Error> {
    let inst = io::read_instance(&args.input, args.radius)?;
    let result = match &args.result {
        Some(path) => {
            let file = io::result_from_json(&std::fs::read_to_string(path)?)?;
            let kind = match file.algo.as_str() {
                "pair-dp" => SolverKind::PairDp,
                "paper-dp" => SolverKind::PaperDp,
                "brute" => SolverKind::Brute,
                a if a.starts_with("approx2") => SolverKind::Approx2,
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unrecognized algo {other:?} in result file"
                    )))
                }
            };
            Some(SolveResult::new(
                file.selected.into_iter().collect(),
                kind,
                std::time::Duration::from_secs_f64(file.elapsed_ms / 1e3),
            ))
        }
        None => None,
    };
    let sa = args.strips.then(|| decompose(&inst));
    let svg = render_svg(&inst, result.as_ref(), sa.as_ref())?;
    std::fs::write(&args.output, svg)?;
    println!("svg written to {}", args.output.display());
    Ok(0)
}
