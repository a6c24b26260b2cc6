use std::path::PathBuf;
use std::process::ExitCode;

use bn_relax::harness::{
    bench, case_config, convergence_study, load_case_json, mesh_levels, study_csv, write_profile_csv,
    write_text,
};
use bn_relax::reference::{get_case, TestCase};
use bn_relax::scheme::{riemann_initial, run_observed, SchemeKind, StepRecord};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bnrelax", version, about = "1D Baer-Nunziato relaxation solver")]
#[command(arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// March a Riemann problem to its final time and write the profile.
    Run(RunArgs),
    /// Write the exact solution of a benchmark case.
    Exact {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=5))]
        case: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        cells: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// L1 errors and observed orders on meshes 100 * 2^n.
    Convergence {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=5))]
        case: u32,
        #[arg(long, value_enum)]
        scheme: Scheme,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=12))]
        levels: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Errors and wall time of both schemes on meshes 100 * 2^n.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=5))]
        case: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=12))]
        levels: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=5), conflicts_with = "config", required_unless_present = "config")]
    case: Option<u32>,
    /// JSON description of a custom Riemann problem.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    scheme: Scheme,
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    cells: u64,
    #[arg(long)]
    cfl: Option<f64>,
    #[arg(long)]
    out: PathBuf,
    /// Per-step diagnostic log (CSV).
    #[arg(long)]
    log: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Relax,
    Rusanov,
}

impl From<Scheme> for SchemeKind {
    fn from(s: Scheme) -> Self {
        match s {
            Scheme::Relax => SchemeKind::Relaxation,
            Scheme::Rusanov => SchemeKind::Rusanov,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bnrelax: {e}");
            ExitCode::from(1)
        }
    }
}

fn execute(cmd: Command) -> bn_relax::Result<()> {
    match cmd {
        Command::Run(args) => run_cmd(args),
        Command::Exact { case, cells, out } => {
            let case = get_case(case)?;
            let cfg = case.run_config(cells as usize, SchemeKind::Relaxation);
            let profile = case.exact_profile(cells as usize, case.t_max)?;
            write_profile_csv(&out, &cfg.centers(), &profile)
        }
        Command::Convergence {
            case,
            scheme,
            levels,
            out,
        } => {
            let case = get_case(case)?;
            let rows = convergence_study(&case, scheme.into(), &mesh_levels(levels as usize))?;
            report_failures(&rows);
            write_text(&out, &study_csv(&rows, false))
        }
        Command::Bench { case, levels, out } => {
            let case = get_case(case)?;
            let rows = bench(&case, &mesh_levels(levels as usize))?;
            report_failures(&rows);
            write_text(&out, &study_csv(&rows, true))
        }
    }
}

fn report_failures(rows: &[bn_relax::harness::LevelOutcome]) {
    for r in rows {
        if let bn_relax::harness::LevelOutcome::Failed { scheme, cells, message } = r {
            eprintln!("bnrelax: {} on {cells} cells failed: {message}", scheme.name());
        }
    }
}

fn run_cmd(args: RunArgs) -> bn_relax::Result<()> {
    let case: TestCase = match (&args.case, &args.config) {
        (Some(id), _) => get_case(*id)?,
        (None, Some(path)) => load_case_json(path)?,
        (None, None) => unreachable!("clap enforces --case or --config"),
    };
    let cfg = case_config(&case, args.cells as usize, args.scheme.into(), args.cfl);
    let init = riemann_initial(&case.left, &case.right, case.x0, &cfg, &case.eos)?;
    let out = run_observed(&init, &cfg, &case.eos, |_| {})?;
    write_profile_csv(&args.out, &out.x, &out.primitive(&case.eos)?)?;
    if let Some(path) = args.log {
        let mut text = String::from(StepRecord::CSV_HEADER);
        text.push('\n');
        for r in &out.log {
            text.push_str(&r.csv_row());
            text.push('\n');
        }
        write_text(&path, &text)?;
    }
    Ok(())
}
