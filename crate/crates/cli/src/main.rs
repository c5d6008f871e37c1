//! `kissing`: build layered sphere packings, inspect their nerves and check
//! the shell-area bound.
//!
//! Exit status: 0 when the command succeeds and its report passes, 1 when a
//! report fails, 2 on usage, parse or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kissing_core::construction::{build_d600, build_pn, default_seed, BuildMode};
use kissing_core::geom::{Point4, StereographicChart};
use kissing_core::io::{load_packing, packing_to_string};
use kissing_core::packing::{
    build_nerve, check_nerve_condition, packing_stats, validate_packing, NerveStrategy, Packing, DEFAULT_RTOL,
};
use kissing_core::report::{format_decimal, report_convergence, write_convergence_csv};
use kissing_core::shell::{shell_certificate, ShellParams};
use kissing_core::Error;

#[derive(Parser)]
#[command(
    name = "kissing",
    version,
    about = "Sphere packings with large average kissing number"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a constructed packing as JSON.
    Generate {
        #[command(subcommand)]
        what: Generate,
    },
    /// Check that no two balls overlap.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_RTOL)]
        rtol: f64,
    },
    /// Print the tangency graph as JSON.
    Nerve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::AllPairs)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = DEFAULT_RTOL)]
        rtol: f64,
    },
    /// Ball and tangency counts, average kissing number.
    Stats {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_RTOL)]
        rtol: f64,
    },
    /// Shell-area certificate for an r3 packing.
    Bound {
        file: PathBuf,
        #[arg(long)]
        rho: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_RTOL)]
        rtol: f64,
    },
    /// Stereographically project an s3 packing to r3.
    Project {
        file: PathBuf,
        /// Pole as w,x,y,z (normalized onto the unit sphere).
        #[arg(long, allow_hyphen_values = true)]
        pole: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV table of k(P_n) for n = 0..=max-n.
    Report {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum Generate {
    /// The 120 balls of radius 18° at the 600-cell vertices.
    D600 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The layered packing P_n.
    Pn {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Windowed)]
        mode: ModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Grid,
    #[value(name = "all_pairs", alias = "all-pairs")]
    AllPairs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Direct,
    Windowed,
}

enum Outcome {
    Pass,
    Fail,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. }
        | Error::InvariantViolation(_)
        | Error::UnsupportedChart(_)
        | Error::InvalidInput(_)
        | Error::PoleInBall { .. }
        | Error::Io(_) => 2,
        _ => 1,
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_pole(text: &str) -> Result<Point4, Error> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Error::InvalidInput(format!("pole {text:?}: {e}")))?;
    let coords: [f64; 4] = parts
        .try_into()
        .map_err(|_| Error::InvalidInput(format!("pole {text:?} needs four coordinates")))?;
    Point4::normalized(coords)
}

fn generate(what: Generate) -> Result<Outcome, Error> {
    match what {
        Generate::D600 { out } => {
            emit(&packing_to_string(&build_d600()), out.as_deref())?;
        }
        Generate::Pn { n, mode, out } => {
            let mode = match mode {
                ModeArg::Direct => BuildMode::Direct,
                ModeArg::Windowed => BuildMode::Windowed,
            };
            let seed = default_seed()?;
            let (packing, tallies) = build_pn(&seed, n, mode)?;
            emit(&packing_to_string(&packing), out.as_deref())?;
            let last = tallies[n];
            eprintln!(
                "P_{n}: {} balls, {} tangencies, k = {} ≈ {}",
                last.ball_count,
                last.tangency_count,
                last.k,
                format_decimal(last.k, 10)
            );
        }
    }
    Ok(Outcome::Pass)
}

fn verify(file: &Path, rtol: f64) -> Result<Outcome, Error> {
    let packing = load_packing(file)?;
    let rep = validate_packing(&packing, rtol);
    println!("chart: {}", packing.chart().name());
    println!("balls: {}", packing.len());
    println!("ok: {}", rep.ok);
    if let (Some(gap), Some(rel), Some((i, j))) = (rep.min_gap, rep.min_relative_gap, rep.pair) {
        println!("min_gap: {gap:e}");
        println!("min_relative_gap: {rel:e}");
        println!("pair: {i} {j}");
    }
    Ok(if rep.ok { Outcome::Pass } else { Outcome::Fail })
}

fn nerve(file: &Path, strategy: StrategyArg, rtol: f64) -> Result<Outcome, Error> {
    let packing = load_packing(file)?;
    let strategy = match strategy {
        StrategyArg::Grid => NerveStrategy::Grid,
        StrategyArg::AllPairs => NerveStrategy::AllPairs,
    };
    let g = build_nerve(&packing, rtol, strategy)?;
    let edges: Vec<String> = g.edges().iter().map(|(u, w)| format!("[{u},{w}]")).collect();
    let text = format!(
        "{{\"vertex_count\":{},\"edge_count\":{},\"edges\":[{}]}}\n",
        g.vertex_count(),
        g.edge_count(),
        edges.join(",")
    );
    emit(&text, None)?;
    Ok(Outcome::Pass)
}

fn load_with_nerve(file: &Path, rtol: f64) -> Result<(Packing, kissing_core::packing::NerveGraph), Error> {
    let packing = load_packing(file)?;
    let strategy = match packing.chart() {
        kissing_core::packing::Chart::R3 => NerveStrategy::Grid,
        kissing_core::packing::Chart::S3 => NerveStrategy::AllPairs,
    };
    let g = build_nerve(&packing, rtol, strategy)?;
    Ok((packing, g))
}

fn stats(file: &Path, rtol: f64) -> Result<Outcome, Error> {
    let (packing, g) = load_with_nerve(file, rtol)?;
    let s = packing_stats(&packing, &g)?;
    let degrees = (0..g.vertex_count()).map(|v| g.degree(v));
    let min_degree = degrees.clone().min().unwrap_or(0);
    let max_degree = degrees.max().unwrap_or(0);
    let condition = check_nerve_condition(s.ball_count as u64, s.tangency_count as u64);
    println!("chart: {}", packing.chart().name());
    println!("balls: {}", s.ball_count);
    println!("tangencies: {}", s.tangency_count);
    println!("k: {}", s.k);
    println!("k_decimal: {}", format_decimal(s.k, 10));
    println!("min_degree: {min_degree}");
    println!("max_degree: {max_degree}");
    println!("larger_neighbor_max: {}", s.larger_neighbor_max);
    println!("nerve_condition: {condition}");
    Ok(if condition && s.larger_neighbor_max <= 12 {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

fn bound(file: &Path, rho: Option<f64>, rtol: f64) -> Result<Outcome, Error> {
    let params = match rho {
        Some(r) => ShellParams::new(r)?,
        None => ShellParams::default(),
    };
    let (packing, g) = load_with_nerve(file, rtol)?;
    let rep = shell_certificate(&packing, &g, &params)?;
    println!("rho: {}", params.rho());
    println!("balls: {}", packing.len());
    println!("tangencies: {}", g.edge_count());
    println!("max_occupancy: {}", rep.max_occupancy);
    match rep.min_pair_sum {
        Some(s) => println!("min_pair_sum: {s}"),
        None => println!("min_pair_sum: none"),
    }
    println!("pair_sum_constant: {}", params.pair_sum_constant());
    println!("k: {} ({})", rep.k, format_decimal(rep.k, 10));
    println!("k_bound: {}", rep.k_bound);
    println!("pass: {}", rep.pass);
    Ok(if rep.pass { Outcome::Pass } else { Outcome::Fail })
}

fn project(file: &Path, pole: &str, out: Option<&Path>) -> Result<Outcome, Error> {
    let pole = parse_pole(pole)?;
    let packing = load_packing(file)?;
    let projected = packing.project(&StereographicChart::new(pole))?;
    emit(&packing_to_string(&projected), out)?;
    Ok(Outcome::Pass)
}

fn report(max_n: usize) -> Result<Outcome, Error> {
    let seed = default_seed()?;
    let rows = report_convergence(&seed, max_n)?;
    let stdout = std::io::stdout();
    write_convergence_csv(&rows, stdout.lock())?;
    Ok(Outcome::Pass)
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Generate { what } => generate(what),
        Command::Verify { file, rtol } => verify(&file, rtol),
        Command::Nerve { file, strategy, rtol } => nerve(&file, strategy, rtol),
        Command::Stats { file, rtol } => stats(&file, rtol),
        Command::Bound { file, rho, rtol } => bound(&file, rho, rtol),
        Command::Project { file, pole, out } => project(&file, &pole, out.as_deref()),
        Command::Report { max_n } => report(max_n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
