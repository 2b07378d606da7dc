use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use ripshadow::fixtures;
use ripshadow::geometry::Point;
use ripshadow::quasi::GroupPresentation;
use ripshadow_cli::*;

#[derive(Parser)]
#[command(name = "ripshadow", version, about = "Exact Rips, quasi-Rips and shadow complexes")]
struct Cli {
    /// Add wall-clock time to the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rips complex census, Betti numbers over Q and GF(2), integer H1.
    Rips {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        epsilon: String,
        #[arg(long, default_value_t = 3)]
        dim_cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Planar shadow, certificate verdict and optional loop verdict.
    Shadow {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        epsilon: String,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Closed walk as vertex indices, e.g. "0,1,2,3,0".
        #[arg(long = "loop")]
        loop_walk: Option<String>,
    },
    /// Presentation, blowup and placement as a quasi-Rips complex.
    Quasi {
        #[arg(
            long,
            value_enum,
            conflicts_with = "presentation",
            required_unless_present = "presentation"
        )]
        preset: Option<Preset>,
        #[arg(long)]
        presentation: Option<PathBuf>,
        /// Uncertainty interval "e,e'".
        #[arg(long)]
        interval: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank of H1 between two observations of the same points.
    Pair {
        #[arg(long)]
        points: PathBuf,
        /// "e1,e1',policy" with policy none | all | random:P | explicit:0-1;2-3
        #[arg(long, allow_hyphen_values = true)]
        lower: String,
        #[arg(long, allow_hyphen_values = true)]
        upper: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a built-in point set as a point-set document.
    Fixture {
        #[arg(value_enum)]
        name: FixtureName,
        /// Circumradius of the hexagon.
        #[arg(long, default_value = "11/20")]
        r: String,
        /// Half the number of points of the cross-polytope.
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Torus,
    Rp2,
    Klein,
}

#[derive(Clone, Copy, ValueEnum)]
enum FixtureName {
    Hexagon,
    CrossPolytope,
    FourD,
    CrossingTriangle,
    Annulus,
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => write_file(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn elapsed(start: Instant, on: bool) -> Option<f64> {
    on.then(|| start.elapsed().as_secs_f64() * 1000.0)
}

fn fixture_points(name: FixtureName, r: &str, k: usize) -> Result<Vec<Point>, CliError> {
    let fx = |e: fixtures::FixtureError| CliError::Audit(e.to_string());
    Ok(match name {
        FixtureName::Hexagon => fixtures::hexagon_points(&parse_scale(r)?).map_err(fx)?.points,
        FixtureName::CrossPolytope => fixtures::cross_polytope_points(k).map_err(fx)?.points,
        FixtureName::FourD => fixtures::four_d_points().map_err(fx)?.points,
        FixtureName::CrossingTriangle => fixtures::crossing_triangle_fixture().map_err(fx)?.0,
        FixtureName::Annulus => fixtures::annulus_ring().map_err(fx)?.0,
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    let start = Instant::now();
    match cli.command {
        Command::Rips {
            points,
            epsilon,
            dim_cap,
            out,
        } => {
            let mut report = cmd_rips(&read_points(&points)?, &parse_scale(&epsilon)?, dim_cap)?;
            report.timing_ms = elapsed(start, cli.timing);
            emit(out.as_deref(), &to_json(&report))
        }
        Command::Shadow {
            points,
            epsilon,
            svg,
            out,
            loop_walk,
        } => {
            let walk = loop_walk.as_deref().map(parse_loop).transpose()?;
            let mut output = cmd_shadow(&read_points(&points)?, &parse_scale(&epsilon)?, walk.as_deref())?;
            if let Some(p) = svg {
                write_file(&p, &output.svg)?;
            }
            output.report.timing_ms = elapsed(start, cli.timing);
            emit(out.as_deref(), &to_json(&output.report))
        }
        Command::Quasi {
            preset,
            presentation,
            interval,
            seed,
            out,
        } => {
            let p = match (preset, presentation) {
                (Some(name), _) => {
                    let key = match name {
                        Preset::Torus => "torus",
                        Preset::Rp2 => "rp2",
                        Preset::Klein => "klein",
                    };
                    GroupPresentation::preset(key).expect("built-in preset")
                }
                (None, Some(path)) => read_presentation(&path)?,
                (None, None) => return Err(CliError::Input("need --preset or --presentation".into())),
            };
            let mut report = cmd_quasi(&p, &parse_interval(&interval)?, seed)?;
            report.timing_ms = elapsed(start, cli.timing);
            emit(out.as_deref(), &to_json(&report))
        }
        Command::Pair {
            points,
            lower,
            upper,
            seed,
            out,
        } => {
            let pts = read_points(&points)?;
            let lower = parse_observation(&lower, seed)?;
            let upper = parse_observation(&upper, seed.wrapping_add(1))?;
            let mut report = cmd_pair(&pts, &lower, &upper)?;
            report.timing_ms = elapsed(start, cli.timing);
            emit(out.as_deref(), &to_json(&report))
        }
        Command::Fixture { name, r, k, out } => {
            let pts = fixture_points(name, &r, k)?;
            emit(out.as_deref(), &to_json(&PointSetDocument::from_points(&pts)))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
