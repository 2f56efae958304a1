//! `barbilliards`: classify triangular obstacles, iterate the circle map and
//! emit figures and sweep data.

mod commands;
mod report;
mod spec;
mod svg;
mod sweep;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use barbilliards::DEFAULT_BAND;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "barbilliards", version, about = "Bar billiards in the unit disk")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count inscribed triangles circumscribing a triangle
    Classify {
        /// "px,py:qx,qy:rx,ry" or {"P":[x,y],"Q":[x,y],"R":[x,y]}
        #[arg(short, long, allow_hyphen_values = true)]
        triangle: String,
        #[arg(long, default_value_t = DEFAULT_BAND)]
        band: f64,
        #[arg(long)]
        json: bool,
    },
    /// Estimate the rotation number of the circle map
    Rotation {
        #[arg(short, long, allow_hyphen_values = true)]
        triangle: String,
        #[arg(long, default_value_t = 100_000)]
        iters: usize,
        #[arg(long)]
        json: bool,
    },
    /// Iterate the circle map from a starting angle (in turns)
    Orbit {
        #[arg(short, long, allow_hyphen_values = true)]
        triangle: String,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        start: f64,
        #[arg(long, default_value_t = 12)]
        steps: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Tangency ellipse of the chord through two points
    Ellipse {
        /// "px,py:qx,qy"
        #[arg(long, allow_hyphen_values = true)]
        chord: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Construct the inscribed circumscribing triangles
    Inscribed {
        #[arg(short, long, allow_hyphen_values = true)]
        triangle: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Classify every third vertex on a grid over [-1, 1]^2
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        chord: String,
        #[arg(long, default_value_t = 201)]
        grid: usize,
        #[arg(long, default_value_t = DEFAULT_BAND)]
        band: f64,
        /// Iterations for the rotation estimate where m = 0
        #[arg(long, default_value_t = 2000)]
        iters: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Bracket the threshold size mu of a triangle shape
    Mu {
        /// "equilateral" or side ratios "a:b:c"
        #[arg(long, default_value = "equilateral")]
        shape: String,
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
        /// Translation samples per placement survey
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let result = match &cli.command {
        Command::Classify { triangle, band, json } => commands::classify(triangle, *band, *json, &mut out),
        Command::Rotation { triangle, iters, json } => commands::rotation(triangle, *iters, *json, &mut out),
        Command::Orbit { triangle, start, steps, svg } => {
            commands::orbit(triangle, *start, *steps, svg.as_ref(), &mut out)
        }
        Command::Ellipse { chord, svg } => commands::ellipse(chord, svg.as_ref(), &mut out),
        Command::Inscribed { triangle, svg } => commands::inscribed(triangle, svg.as_ref(), &mut out),
        Command::Sweep { chord, grid, band, iters, csv } => {
            commands::sweep_cmd(chord, *grid, *band, *iters, csv.as_ref(), &mut out, &mut io::stderr())
        }
        Command::Mu { shape, tol, samples, json } => commands::mu(shape, *tol, *samples, *json, &mut out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
