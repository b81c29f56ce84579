//! Command-line driver: analytic tables, Monte Carlo experiments, field dumps
//! and phase maps.
//!
//! Exit status is 0 on success, 1 when the arguments or a model precondition
//! are rejected and 2 when an experiment reports FAIL.

pub mod image;
pub mod svg;

use std::f64::consts::{PI, SQRT_2, TAU};
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analytics::{
    densities, mean_excess, nearest_vortex_cdf, nearest_vortex_conditional_mean, nearest_vortex_pdf, vortex_excess,
    DELTA_IRW,
};
use crate::error::Error;
use crate::flux::FluxParameter;
use crate::mc::{
    run_density_experiment, run_mean_gradient_experiment, run_nearest_vortex_experiment,
    run_pair_correlation_experiment, run_phase_integral_experiment, ComparisonReport, DEFAULT_DOMAIN_RADIUS,
    DEFAULT_SAMPLES,
};
use crate::moments::{moments, moments_closed};
use crate::specfun::{truncation_order, Accuracy};
use crate::synthesis::{EnsembleSpec, FieldSynthesizer, Grid, ModalCoefficients, SampledField, Truncation, DEFAULT_GRID_H};
use svg::{Chart, Series};

/// Beta values overlaid by `curves` when none are given.
pub const DEFAULT_CURVE_BETAS: [f64; 5] = [0.25, -0.25, 0.49, 0.05, 0.0];

/// Beta values tabulated by `excess` when none are given.
pub const DEFAULT_EXCESS_BETAS: [f64; 7] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.45, 0.49];

#[derive(Debug, Parser)]
#[command(name = "abwave", version, about = "Vortex statistics of Aharonov-Bohm random waves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalized ρ, Δ and Δ± against R for a set of fluxes.
    Curves(CurvesArgs),
    /// The six moments a–f against R.
    Moments(MomentsArgs),
    /// Monte Carlo cross-checks.
    #[command(subcommand)]
    Mc(McCommand),
    /// One field sample as a v1 dump and an optional phase map.
    Field(FieldArgs),
    /// Nearest-vortex density, distribution and conditional mean.
    NearestVortex(NearestArgs),
    /// Vortex excess N(R, β) and its mean N̄(β).
    Excess(ExcessArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// A single flux, given either whole or as its fractional part.
#[derive(Debug, Clone, Args)]
pub struct FluxArg {
    /// Dimensionless flux α.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "beta")]
    pub alpha: Option<f64>,
    /// Fractional flux β in (−½, ½].
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
}

impl FluxArg {
    fn resolve(&self, default: f64) -> Result<FluxParameter, CliError> {
        Ok(match (self.alpha, self.beta) {
            (Some(a), _) => FluxParameter::new(a)?,
            (None, Some(b)) => FluxParameter::from_beta(b)?,
            (None, None) => FluxParameter::new(default)?,
        })
    }
}

/// A list of fluxes.
#[derive(Debug, Clone, Args)]
pub struct FluxList {
    /// Comma-separated fluxes α.
    #[arg(long, allow_negative_numbers = true, value_delimiter = ',', conflicts_with = "beta")]
    pub alpha: Vec<f64>,
    /// Comma-separated fractional fluxes β.
    #[arg(long, allow_negative_numbers = true, value_delimiter = ',')]
    pub beta: Vec<f64>,
}

impl FluxList {
    fn resolve(&self, default: &[f64]) -> Result<Vec<FluxParameter>, CliError> {
        if !self.alpha.is_empty() {
            return self.alpha.iter().map(|&a| Ok(FluxParameter::new(a)?)).collect();
        }
        let betas = if self.beta.is_empty() { default } else { &self.beta };
        betas.iter().map(|&b| Ok(FluxParameter::from_beta(b)?)).collect()
    }
}

#[derive(Debug, Clone, Args)]
pub struct CurvesArgs {
    #[command(flatten)]
    pub flux: FluxList,
    #[arg(long, default_value_t = 20.0)]
    pub rmax: f64,
    #[arg(long, default_value_t = 400)]
    pub points: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct MomentsArgs {
    #[command(flatten)]
    pub flux: FluxArg,
    #[arg(long, default_value_t = 20.0)]
    pub rmax: f64,
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    /// Use the closed forms instead of the partial-wave sums.
    #[arg(long)]
    pub closed: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct Ensemble {
    #[command(flatten)]
    pub flux: FluxArg,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Half-width D of the sampled square [−D, D]².
    #[arg(long, default_value_t = DEFAULT_DOMAIN_RADIUS)]
    pub domain: f64,
    #[command(flatten)]
    pub output: Output,
}

impl Ensemble {
    fn spec(&self, default_alpha: f64) -> Result<EnsembleSpec, CliError> {
        Ok(EnsembleSpec::new(self.flux.resolve(default_alpha)?, self.seed, self.samples, self.domain)?)
    }
}

#[derive(Debug, Subcommand)]
pub enum McCommand {
    /// Radial histograms of vortices against ρ and Δ.
    Density {
        #[command(flatten)]
        ensemble: Ensemble,
        #[arg(long, default_value_t = DEFAULT_GRID_H)]
        grid_h: f64,
        #[arg(long, default_value_t = 0.25)]
        bin_width: f64,
    },
    /// Winding around centred circles against I(R, α).
    PhaseIntegral {
        #[command(flatten)]
        ensemble: Ensemble,
        #[arg(long, value_delimiter = ',', default_values_t = [1.0, 2.0, 4.0, 8.0, 12.0])]
        radii: Vec<f64>,
    },
    /// Circle-averaged phase gradient against n/R + c/a and 0.
    Gradient {
        #[command(flatten)]
        ensemble: Ensemble,
        #[arg(long, value_delimiter = ',', default_values_t = [1.0, 2.0, 4.0, 8.0, 12.0])]
        radii: Vec<f64>,
    },
    /// Pair correlations of an integer-flux ensemble.
    PairCorrelation {
        #[command(flatten)]
        ensemble: Ensemble,
        #[arg(long, default_value_t = DEFAULT_GRID_H)]
        grid_h: f64,
        #[arg(long, default_value_t = 0.25)]
        bin_width: f64,
        /// Largest separation binned.
        #[arg(long, default_value_t = 8.0)]
        rmax: f64,
        /// g is compared with its asymptote on bins from this separation on.
        #[arg(long, default_value_t = TAU)]
        asymptotic_from: f64,
    },
    /// Charge and distance of the vortex nearest the flux line.
    NearestVortex {
        #[command(flatten)]
        ensemble: Ensemble,
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        #[arg(long, default_value_t = 96)]
        n_theta: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [0.05, 0.1, 0.2, 0.3, 0.5, 0.75, 1.0])]
        cdf_radii: Vec<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldMode {
    /// One member of the random ensemble.
    Random,
    /// The incident plane wave (α = 0).
    Plane,
    /// The deterministic Aharonov–Bohm wave.
    Ab,
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    #[command(flatten)]
    pub flux: FluxArg,
    #[arg(long, value_enum, default_value_t = FieldMode::Random)]
    pub mode: FieldMode,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value_t = 0)]
    pub index: usize,
    /// Incidence direction Θ of the deterministic waves.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub incidence: f64,
    /// Half-width of the square.
    #[arg(long, default_value_t = 8.0)]
    pub rmax: f64,
    #[arg(long, default_value_t = 0.1)]
    pub grid_h: f64,
    /// Dump file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Phase map; SVG when the name ends in .svg, binary PPM otherwise.
    #[arg(long)]
    pub image: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct NearestArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 3.0)]
    pub rmax: f64,
    #[arg(long, default_value_t = 300)]
    pub points: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct ExcessArgs {
    #[command(flatten)]
    pub flux: FluxList,
    #[arg(long, default_value_t = 4.0 * PI)]
    pub rmax: f64,
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Model(#[from] Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

/// Outcome of a successful run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn of(reports: &[&ComparisonReport]) -> Status {
        if reports.iter().all(|r| r.pass) {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// R_max/points, 2R_max/points, …, R_max.
fn radial_grid(rmax: f64, points: usize) -> Result<Vec<f64>, CliError> {
    if !(rmax > 0.0) || !rmax.is_finite() || points == 0 {
        return Err(usage(format!("need rmax > 0 and points > 0, got {rmax} and {points}")));
    }
    Ok((1..=points).map(|k| rmax * k as f64 / points as f64).collect())
}

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn open_output<'a>(path: Option<&Path>, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(stdout),
    })
}

/// A table with a version line, a header and rows of numbers.
struct Table {
    tag: String,
    columns: Vec<&'static str>,
    rows: Vec<Vec<f64>>,
}

impl Table {
    fn write(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "# {}", self.tag)?;
        writeln!(out, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| num(v)).collect();
            writeln!(out, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

fn emit(output: &Output, table: &Table, charts: impl FnOnce() -> Vec<Chart>, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut out = open_output(output.out.as_deref(), stdout)?;
    match output.format {
        Format::Csv => table.write(&mut out)?,
        Format::Svg => out.write_all(svg::render(&charts()).as_bytes())?,
    }
    out.flush()?;
    Ok(())
}

/// Rows of `table` with column `key` equal to `v`, as (x, y) pairs.
fn column_series(table: &Table, key: usize, v: f64, x: usize, y: usize) -> Vec<(f64, f64)> {
    table.rows.iter().filter(|r| r[key] == v).map(|r| (r[x], r[y])).collect()
}

fn cmd_curves(a: &CurvesArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let fluxes = a.flux.resolve(&DEFAULT_CURVE_BETAS)?;
    let radii = radial_grid(a.rmax, a.points)?;
    let mut rows = Vec::new();
    for f in &fluxes {
        for &r in &radii {
            let (rho, delta) = densities(*f, r)?;
            let (plus, minus) = ((delta + rho) / (2.0 * DELTA_IRW), (delta - rho) / (2.0 * DELTA_IRW));
            rows.push(vec![f.beta(), r, rho / DELTA_IRW, delta / DELTA_IRW, plus, minus]);
        }
    }
    let table = Table {
        tag: "abwave-curves v1".into(),
        columns: vec!["beta", "R", "rho_norm", "delta_norm", "delta_plus", "delta_minus"],
        rows,
    };
    let charts = || {
        let mut rho = Chart::new("Charge density", "R", "rho / delta_irw");
        let mut delta = Chart::new("Vortex density", "R", "delta / delta_irw");
        for f in &fluxes {
            let label = format!("beta = {}", f.beta());
            rho.series.push(Series::new(label.clone(), column_series(&table, 0, f.beta(), 1, 2)));
            delta.series.push(Series::new(label, column_series(&table, 0, f.beta(), 1, 3)));
        }
        vec![rho, delta]
    };
    emit(&a.output, &table, charts, stdout)?;
    Ok(Status::Pass)
}

fn cmd_moments(a: &MomentsArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let flux = a.flux.resolve(0.25)?;
    let acc = Accuracy::default();
    let mut rows = Vec::new();
    for r in radial_grid(a.rmax, a.points)? {
        let m = if a.closed { moments_closed(flux, r, &acc)? } else { moments(flux, r)? };
        let mut row = vec![r];
        row.extend(m.as_array());
        rows.push(row);
    }
    let table = Table {
        tag: format!("abwave-moments v1 alpha={} closed={}", flux.alpha(), a.closed),
        columns: vec!["R", "a", "b", "c", "d", "e", "f"],
        rows,
    };
    let charts = || {
        let mut c = Chart::new(format!("Moments, alpha = {}", flux.alpha()), "R", "moment");
        for (k, name) in ["a", "b", "c", "d", "e", "f"].iter().enumerate() {
            c.series.push(Series::new(*name, table.rows.iter().map(|r| (r[0], r[k + 1])).collect()));
        }
        vec![c]
    };
    emit(&a.output, &table, charts, stdout)?;
    Ok(Status::Pass)
}

fn report_chart(report: &ComparisonReport) -> Chart {
    let bins = &report.bins;
    Chart::new(format!("{} (beta = {})", report.quantity, report.beta), "R", report.quantity.clone())
        .with_series(Series::new("analytic", bins.iter().map(|b| (b.r, b.analytic)).collect()))
        .with_series(Series::new("monte carlo", bins.iter().map(|b| (b.r, b.mc_estimate)).collect()))
        .with_series(Series::new("mc - 3 se", bins.iter().map(|b| (b.r, b.mc_estimate - 3.0 * b.std_error)).collect()))
        .with_series(Series::new("mc + 3 se", bins.iter().map(|b| (b.r, b.mc_estimate + 3.0 * b.std_error)).collect()))
}

/// Writes the reports (CSV blocks or stacked charts) and their summary lines.
fn emit_reports(
    output: &Output,
    reports: &[&ComparisonReport],
    notes: &[String],
    stdout: &mut dyn Write,
) -> Result<Status, CliError> {
    {
        let mut out = open_output(output.out.as_deref(), stdout)?;
        match output.format {
            Format::Csv => {
                for r in reports {
                    r.write_csv(&mut out)?;
                }
            }
            Format::Svg => {
                let charts: Vec<Chart> = reports.iter().map(|r| report_chart(r)).collect();
                out.write_all(svg::render(&charts).as_bytes())?;
            }
        }
        out.flush()?;
    }
    for note in notes {
        writeln!(stdout, "# {note}")?;
    }
    for r in reports {
        writeln!(stdout, "{}", r.summary_line())?;
    }
    Ok(Status::of(reports))
}

fn cmd_mc(c: &McCommand, stdout: &mut dyn Write) -> Result<Status, CliError> {
    match c {
        McCommand::Density {
            ensemble,
            grid_h,
            bin_width,
        } => {
            let rep = run_density_experiment(&ensemble.spec(0.25)?, *grid_h, *bin_width)?;
            emit_reports(&ensemble.output, &[&rep.rho, &rep.delta], &[], stdout)
        }
        McCommand::PhaseIntegral { ensemble, radii } => {
            let rep = run_phase_integral_experiment(&ensemble.spec(0.25)?, radii)?;
            emit_reports(&ensemble.output, &[&rep.report], &[], stdout)
        }
        McCommand::Gradient { ensemble, radii } => {
            let rep = run_mean_gradient_experiment(&ensemble.spec(0.25)?, radii)?;
            emit_reports(&ensemble.output, &[&rep.azimuthal, &rep.radial], &[], stdout)
        }
        McCommand::PairCorrelation {
            ensemble,
            grid_h,
            bin_width,
            rmax,
            asymptotic_from,
        } => {
            let spec = ensemble.spec(0.0)?;
            let rep = run_pair_correlation_experiment(&spec, *grid_h, *bin_width, *rmax, *asymptotic_from)?;
            let note = format!("g_plus first bin {} +/- {}", rep.g_plus_first.0, rep.g_plus_first.1);
            emit_reports(&ensemble.output, &[&rep.g_s, &rep.g], &[note], stdout)
        }
        McCommand::NearestVortex {
            ensemble,
            delta,
            n_theta,
            cdf_radii,
        } => {
            let rep = run_nearest_vortex_experiment(&ensemble.spec(0.45)?, *delta, *n_theta, cdf_radii)?;
            let notes = [
                format!("positive_fraction {} +/- {}", rep.positive_fraction, rep.positive_fraction_se),
                format!(
                    "conditional_mean delta={} mc {} +/- {} analytic {} from {} samples",
                    rep.delta, rep.conditional_mean, rep.conditional_mean_se, rep.analytic_conditional_mean, rep.below_delta
                ),
            ];
            emit_reports(&ensemble.output, &[&rep.cdf], &notes, stdout)
        }
    }
}

/// The field of `a` on its grid.
pub fn build_field(a: &FieldArgs) -> Result<(SampledField, u64), CliError> {
    let grid = Grid::new(a.rmax, a.grid_h)?;
    let flux = match a.mode {
        FieldMode::Plane => FluxParameter::new(0.0)?,
        _ => a.flux.resolve(0.25)?,
    };
    let l = truncation_order(grid.domain_radius() * SQRT_2);
    let synth = FieldSynthesizer::new(grid, flux, l)?;
    let field = match a.mode {
        FieldMode::Random => {
            let spec = EnsembleSpec::new(flux, a.seed, a.index + 1, grid.domain_radius())?
                .with_truncation(Truncation::Fixed(l));
            synth.synthesize_sample(&spec, a.index)?
        }
        FieldMode::Plane | FieldMode::Ab => {
            synth.synthesize(&ModalCoefficients::deterministic(flux, a.incidence, l), a.index)?
        }
    };
    Ok((field, a.seed))
}

fn cmd_field(a: &FieldArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let (field, seed) = build_field(a)?;
    {
        let mut out = open_output(a.out.as_deref(), stdout)?;
        image::write_field(&field, seed, &mut out)?;
        out.flush()?;
    }
    if let Some(path) = &a.image {
        let mut w = BufWriter::new(File::create(path)?);
        if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("svg")) {
            image::write_phase_svg(&field, &mut w)?;
        } else {
            image::write_ppm(&field, &mut w)?;
        }
        w.flush()?;
    }
    Ok(Status::Pass)
}

fn cmd_nearest(a: &NearestArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let mut rows = Vec::new();
    for r in radial_grid(a.rmax, a.points)? {
        rows.push(vec![
            r,
            nearest_vortex_pdf(a.beta, r)?,
            nearest_vortex_cdf(a.beta, r)?,
            nearest_vortex_conditional_mean(a.beta, r)?,
        ]);
    }
    let table = Table {
        tag: format!("abwave-nearest-vortex v1 beta={}", a.beta),
        columns: vec!["R", "pdf", "cdf", "conditional_mean"],
        rows,
    };
    let charts = || {
        let pick = |k: usize| table.rows.iter().map(|r| (r[0], r[k])).collect();
        vec![
            Chart::new(format!("Nearest vortex, beta = {}", a.beta), "R", "probability")
                .with_series(Series::new("pdf", pick(1)))
                .with_series(Series::new("cdf", pick(2))),
            Chart::new("Conditional mean distance", "delta", "<R_nv>_delta").with_series(Series::new("mean", pick(3))),
        ]
    };
    emit(&a.output, &table, charts, stdout)?;
    Ok(Status::Pass)
}

fn cmd_excess(a: &ExcessArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let fluxes = a.flux.resolve(&DEFAULT_EXCESS_BETAS)?;
    let radii = radial_grid(a.rmax, a.points)?;
    let mut rows = Vec::new();
    for f in &fluxes {
        let mean = mean_excess(*f)?;
        for &r in &radii {
            rows.push(vec![f.beta(), r, vortex_excess(*f, r)?, mean]);
        }
    }
    let table = Table {
        tag: "abwave-excess v1".into(),
        columns: vec!["beta", "R", "excess", "mean_excess"],
        rows,
    };
    let charts = || {
        let mut c = Chart::new("Vortex excess", "R", "N(R, beta)");
        let mut means = Vec::new();
        for f in &fluxes {
            let pts = column_series(&table, 0, f.beta(), 1, 2);
            means.push((f.beta(), table.rows.iter().find(|r| r[0] == f.beta()).map_or(f64::NAN, |r| r[3])));
            c.series.push(Series::new(format!("beta = {}", f.beta()), pts));
        }
        means.sort_by(|x, y| x.0.total_cmp(&y.0));
        vec![c, Chart::new("Mean excess", "beta", "mean N").with_series(Series::new("mean excess", means))]
    };
    emit(&a.output, &table, charts, stdout)?;
    Ok(Status::Pass)
}

/// Runs a parsed command; normal output goes to `stdout` unless redirected by
/// `--out`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<Status, CliError> {
    match &cli.command {
        Command::Curves(a) => cmd_curves(a, stdout),
        Command::Moments(a) => cmd_moments(a, stdout),
        Command::Mc(c) => cmd_mc(c, stdout),
        Command::Field(a) => cmd_field(a, stdout),
        Command::NearestVortex(a) => cmd_nearest(a, stdout),
        Command::Excess(a) => cmd_excess(a, stdout),
    }
}

/// Parses `args`, runs the command and maps the outcome to an exit status.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(2),
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
