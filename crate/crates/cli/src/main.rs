//! `starlike`: radius tables, verification runs and plots.

mod output;
mod plot;

use std::f64::consts::SQRT_2;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use starlike_core::verify::{disk_equality_identities, verify_row};
use starlike_core::{
    disk_equality_rows, solve_radius, ClassId, Error, RadiusResult, RegionId, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "starlike",
    version,
    about = "Radii of starlikeness for ratio-characterized classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the radius table.
    Radii {
        #[command(flatten)]
        select: Selection,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check containment, violation, tangency and sharpness of each radius.
    Verify {
        #[command(flatten)]
        select: Selection,
        /// Samples on each covering circle.
        #[arg(long, default_value_t = 4096, value_parser = clap::value_parser!(u64).range(256..))]
        samples: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the region boundary, the covering circle at the radius, and the
    /// image of |z| = R under the extremal function.
    Plot {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long, value_enum)]
        region: RegionArg,
        #[command(flatten)]
        params: RegionParams,
        #[arg(long, default_value_t = 1e-14)]
        tol: f64,
        /// Points per curve.
        #[arg(long, default_value_t = 4096, value_parser = clap::value_parser!(u64).range(256..))]
        samples: u64,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Selection {
    #[arg(long, value_enum)]
    class: Option<ClassArg>,
    #[arg(long, value_enum)]
    region: Option<RegionArg>,
    #[command(flatten)]
    params: RegionParams,
    #[arg(long, default_value_t = 1e-14)]
    tol: f64,
}

#[derive(Args, Clone, Copy)]
struct RegionParams {
    /// Order of the half-plane Re w > alpha.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    /// Opening of the sector |arg w| < pi gamma / 2.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    gamma: f64,
    /// Center of the disk |w - c0| < d.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    c0: f64,
    /// Radius of the disk |w - c0| < d.
    #[arg(long, default_value_t = SQRT_2 - 1.0, allow_negative_numbers = true)]
    d: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    F1,
    F2,
    F3,
    F4,
}

impl From<ClassArg> for ClassId {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::F1 => ClassId::F1,
            ClassArg::F2 => ClassId::F2,
            ClassArg::F3 => ClassId::F3,
            ClassArg::F4 => ClassId::F4,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RegionArg {
    HalfPlane,
    Lemniscate,
    Parabola,
    Exponential,
    Cardioid,
    Sine,
    Lune,
    Rational,
    ReverseLemniscate,
    Sector,
    JanowskiDisk,
}

impl RegionArg {
    fn with(self, p: RegionParams) -> RegionId {
        match self {
            RegionArg::HalfPlane => RegionId::HalfPlane { alpha: p.alpha },
            RegionArg::Lemniscate => RegionId::Lemniscate,
            RegionArg::Parabola => RegionId::Parabola,
            RegionArg::Exponential => RegionId::Exponential,
            RegionArg::Cardioid => RegionId::Cardioid,
            RegionArg::Sine => RegionId::Sine,
            RegionArg::Lune => RegionId::Lune,
            RegionArg::Rational => RegionId::Rational,
            RegionArg::ReverseLemniscate => RegionId::ReverseLemniscate,
            RegionArg::Sector => RegionId::Sector { gamma: p.gamma },
            RegionArg::JanowskiDisk => RegionId::JanowskiDisk {
                center: p.c0,
                radius: p.d,
            },
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Table,
    Json,
    Csv,
    Svg,
}

/// Failure modes mapped onto the exit-code contract.
enum Failure {
    /// Verification found an unexpected failure (1).
    Verification,
    /// Bad argument or parameter (2).
    Usage(String),
    /// Output could not be written (3).
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Radii {
            select,
            format,
            out,
        } => {
            if format == Format::Svg {
                return Err(Failure::Usage(
                    "svg output is only available for `plot`".into(),
                ));
            }
            let rows = select_rows(&select)?;
            emit(out, &output::render_rows(&rows, format))
        }
        Command::Verify {
            select,
            samples,
            format,
            out,
        } => {
            if format == Format::Svg {
                return Err(Failure::Usage(
                    "svg output is only available for `plot`".into(),
                ));
            }
            let rows = select_rows(&select)?;
            let mut reports: Vec<VerificationReport> = Vec::new();
            for row in &rows {
                if matches!(row.region, RegionId::JanowskiDisk { .. }) && select.region.is_none() {
                    continue;
                }
                reports.extend(verify_row(row, samples as usize)?);
            }
            if includes_disk_equalities(&select) {
                reports.extend(disk_equality_identities(select.tol)?);
            }
            emit(out, &output::render_reports(&reports, &rows, format))?;
            if reports.iter().any(|r| r.is_unexpected_failure()) {
                Err(Failure::Verification)
            } else {
                Ok(())
            }
        }
        Command::Plot {
            class,
            region,
            params,
            tol,
            samples,
            format,
            out,
        } => {
            let row = solve_radius(class.into(), region.with(params), tol)?;
            let curves = plot::curves(&row, samples as usize)?;
            let doc = match format {
                Format::Svg => plot::svg(&row, &curves),
                Format::Csv => plot::csv(&curves),
                _ => return Err(Failure::Usage("plot supports --format svg or csv".into())),
            };
            emit(out, &doc)
        }
    }
}

fn includes_disk_equalities(select: &Selection) -> bool {
    select.region.is_none() && select.class.is_none_or(|c| c == ClassArg::F1)
}

fn select_rows(select: &Selection) -> Result<Vec<RadiusResult>, Failure> {
    let classes: Vec<ClassId> = match select.class {
        Some(c) => vec![c.into()],
        None => ClassId::ALL.to_vec(),
    };
    let regions: Vec<RegionId> = match select.region {
        Some(r) => vec![r.with(select.params)],
        None => RegionId::catalogue(select.params.alpha, select.params.gamma).to_vec(),
    };
    let mut rows = Vec::new();
    for &class in &classes {
        for &region in &regions {
            rows.push(solve_radius(class, region, select.tol)?);
        }
    }
    if includes_disk_equalities(select) {
        rows.extend(disk_equality_rows(select.tol)?);
    }
    Ok(rows)
}

fn emit(out: Option<PathBuf>, doc: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(&path, doc)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(doc.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::Io(format!("cannot write to stdout: {e}")))
        }
    }
}
