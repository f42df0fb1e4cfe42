//! File formats and the `scfilter` command-line tool.

pub mod error;
pub mod formats;
pub mod json;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use scfilter::apps::{
    self, Component, DenoiseMethod, ExtractionMethod, PageRankContext, PageRankMethod, Regularizer, SubspaceNorms,
};
use scfilter::design::{self, DesignMode, DesignTargets, DesignWarning, FrequencyType, LsDesign};
use scfilter::linalg::CsrMatrix;
use scfilter::{fixtures, HodgeSpectrum, ShiftOperators, SimplicialComplex};

use crate::error::{CliError, CliResult};
use crate::formats::{Filter, FilterFile, SpectrumFile};

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 0x5c_f117e2;

#[derive(Debug, Parser)]
#[command(name = "scfilter", version, about = "Simplicial convolutional filters for edge flows")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simplex counts, block dimensions and distinct frequency counts.
    Info {
        #[arg(long)]
        sc: PathBuf,
        #[arg(long, default_value_t = 0.0)]
        group_tol: f64,
    },
    /// Eigenvalues per block as JSON.
    Spectrum {
        #[arg(long)]
        sc: PathBuf,
        #[arg(long, default_value_t = 0.0)]
        group_tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Hodge decomposition of a signal as JSON.
    Decompose {
        #[arg(long)]
        sc: PathBuf,
        #[arg(long)]
        signal: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Design a filter from a response spec.
    Design(DesignArgs),
    /// Frequency response of a filter on the spectrum of a complex, as CSV.
    Response {
        #[arg(long)]
        filter: PathBuf,
        #[arg(long)]
        sc: PathBuf,
        #[arg(long, default_value_t = 0.0)]
        group_tol: f64,
        /// Uniform grid of this many points per block instead of the eigenvalues.
        #[arg(long)]
        samples: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Apply a filter file to a signal.
    Filter {
        #[arg(long)]
        filter: PathBuf,
        #[arg(long)]
        sc: PathBuf,
        #[arg(long)]
        signal: PathBuf,
        /// Shift with the normalized Hodge Laplacian.
        #[arg(long)]
        normalized: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Extract the gradient, curl or harmonic component of a signal.
    Extract(ExtractArgs),
    /// Regularized denoising of a signal.
    Denoise(DenoiseArgs),
    /// Edge PageRank of one edge (JSON) or of every edge (CSV).
    Pagerank(PagerankArgs),
    /// Arbitrage detection and correction on an exchange-rate matrix.
    Arbitrage {
        #[command(subcommand)]
        action: ArbitrageCommand,
    },
    /// Synthetic inputs.
    Fixtures {
        #[command(subcommand)]
        action: FixturesCommand,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DesignMethodArg {
    /// Least squares on the distinct frequencies of `--sc`.
    Ls,
    /// Least squares with tied coefficients.
    Tied,
    /// Least squares on uniform frequency samples.
    Grid,
    /// Shifted Chebyshev series.
    Cheb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Joint,
    Decoupled,
}

impl From<ModeArg> for DesignMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Joint => DesignMode::Joint,
            ModeArg::Decoupled => DesignMode::Decoupled,
        }
    }
}

#[derive(Debug, Args)]
pub struct Orders {
    #[arg(long, default_value_t = 0)]
    pub order_lower: usize,
    #[arg(long, default_value_t = 0)]
    pub order_upper: usize,
    /// Sets both orders.
    #[arg(long)]
    pub order: Option<usize>,
}

impl Orders {
    fn resolve(&self) -> (usize, usize) {
        self.order.map_or((self.order_lower, self.order_upper), |o| (o, o))
    }
}

#[derive(Debug, Args)]
pub struct DesignArgs {
    #[arg(long, value_enum)]
    pub method: DesignMethodArg,
    #[arg(long)]
    pub spec: PathBuf,
    /// Complex whose spectrum the design targets; needed by `ls`/`tied`, and by `grid`/`cheb` when the
    /// spec has no frequency bounds.
    #[arg(long)]
    pub sc: Option<PathBuf>,
    #[command(flatten)]
    pub orders: Orders,
    #[arg(long, value_enum, default_value_t = ModeArg::Joint)]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Midpoint-rule nodes for the Chebyshev coefficients.
    #[arg(long)]
    pub quad_points: Option<usize>,
    #[arg(long, default_value_t = 0.0)]
    pub group_tol: f64,
    #[arg(long, default_value_t = apps::POWER_ITERATIONS)]
    pub power_steps: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComponentArg {
    Gradient,
    Curl,
    Harmonic,
}

impl From<ComponentArg> for Component {
    fn from(c: ComponentArg) -> Self {
        match c {
            ComponentArg::Gradient => Component::Gradient,
            ComponentArg::Curl => Component::Curl,
            ComponentArg::Harmonic => Component::Harmonic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExtractMethodArg {
    Spectral,
    Ls,
    Onesided,
    Tied,
    Cheb,
}

#[derive(Debug, Args)]
pub struct ExtractArgs {
    #[arg(long)]
    pub sc: PathBuf,
    #[arg(long)]
    pub signal: PathBuf,
    #[arg(long, value_enum)]
    pub component: ComponentArg,
    #[arg(long, value_enum, default_value_t = ExtractMethodArg::Spectral)]
    pub method: ExtractMethodArg,
    #[command(flatten)]
    pub orders: Orders,
    /// Logistic steepness for `cheb`.
    #[arg(long, default_value_t = 20.0)]
    pub steepness: f64,
    /// Logistic midpoint for `cheb`.
    #[arg(long, default_value_t = 0.5)]
    pub midpoint: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegularizerArg {
    Edge,
    Hodge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMethodArg {
    Exact,
    Grid,
    Cheb,
}

#[derive(Debug, Args)]
pub struct DenoiseArgs {
    #[arg(long)]
    pub sc: PathBuf,
    #[arg(long)]
    pub signal: PathBuf,
    #[arg(long, default_value_t = 0.5)]
    pub mu: f64,
    #[arg(long, value_enum, default_value_t = RegularizerArg::Hodge)]
    pub regularizer: RegularizerArg,
    #[arg(long, value_enum, default_value_t = SolveMethodArg::Exact)]
    pub method: SolveMethodArg,
    #[arg(long, default_value_t = 4)]
    pub order: usize,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct PagerankArgs {
    #[arg(long)]
    pub sc: PathBuf,
    #[arg(long, default_value_t = 0.01)]
    pub gamma: f64,
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    pub edge: Option<usize>,
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_enum, default_value_t = SolveMethodArg::Exact)]
    pub method: SolveMethodArg,
    #[arg(long, default_value_t = 61)]
    pub order: usize,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Subcommand)]
pub enum ArbitrageCommand {
    /// List triangles whose round trip gains more than the threshold.
    Check {
        #[arg(long)]
        market: PathBuf,
        #[arg(long, default_value_t = 0.003)]
        threshold: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Write the arbitrage-free market.
    Correct {
        #[arg(long)]
        market: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FixtureKind {
    /// Seven-node example complex.
    Toy,
    /// 82 nodes, 130 edges, about 12 triangles.
    London,
    /// 546 nodes, 1088 edges, about 112 triangles.
    Chicago,
    /// Seven-currency quote matrix.
    Market,
}

#[derive(Debug, Subcommand)]
pub enum FixturesCommand {
    Generate {
        #[arg(long, value_enum)]
        kind: FixtureKind,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

/// Parses `args` and runs the command. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    1
                }
            };
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(output: &Output, stdout: &mut dyn Write, write: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> CliResult<()> {
    match &output.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError::file(path, e))?;
            let mut w = BufWriter::new(file);
            write(&mut w).and_then(|()| w.flush()).map_err(|e| CliError::file(path, e))
        }
        None => Ok(write(stdout)?),
    }
}

fn emit_json<T: Serialize>(output: &Output, stdout: &mut dyn Write, value: &T) -> CliResult<()> {
    let text = json::to_string(value).map_err(|e| CliError::Data(e.to_string()))?;
    emit(output, stdout, |w| w.write_all(text.as_bytes()))
}

fn spectrum_of(sc: &SimplicialComplex) -> CliResult<HodgeSpectrum> {
    Ok(HodgeSpectrum::new(sc)?)
}

fn check_positive(name: &'static str, x: f64) -> CliResult<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--{name} must be positive")))
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    match command {
        Command::Info { sc, group_tol } => info(&sc, group_tol, stdout),
        Command::Spectrum { sc, group_tol, output } => {
            let s = spectrum_of(&formats::read_complex(&sc)?)?;
            emit_json(&output, stdout, &SpectrumFile::new(&s, group_tol))
        }
        Command::Decompose { sc, signal, output } => decompose(&sc, &signal, &output, stdout),
        Command::Design(args) => design_command(&args, stdout, stderr),
        Command::Response { filter, sc, group_tol, samples, output } => {
            response(&filter, &sc, group_tol, samples, &output, stdout)
        }
        Command::Filter { filter, sc, signal, normalized, output } => {
            let f = formats::read_filter(&filter)?;
            let sc = formats::read_complex(&sc)?;
            let flow = formats::read_signal(&signal, &sc)?;
            let ops = if normalized { ShiftOperators::normalized(&sc) } else { ShiftOperators::new(&sc) };
            let y = f.apply(&ops, &flow)?;
            emit(&output, stdout, |w| formats::write_signal(w, &y))
        }
        Command::Extract(args) => extract(&args, stdout, stderr),
        Command::Denoise(args) => denoise(&args, stdout),
        Command::Pagerank(args) => pagerank(&args, stdout),
        Command::Arbitrage { action } => arbitrage(action, stdout, stderr),
        Command::Fixtures { action: FixturesCommand::Generate { kind, seed, output } } => {
            let sc = match kind {
                FixtureKind::Market => {
                    return emit(&output, stdout, |w| formats::write_market(w, &fixtures::fx_market()));
                }
                FixtureKind::Toy => fixtures::toy_complex(),
                FixtureKind::London => fixtures::road_network(fixtures::LONDON_SHAPE, seed),
                FixtureKind::Chicago => fixtures::road_network(fixtures::CHICAGO_SHAPE, seed),
            };
            emit_json(&output, stdout, &formats::ComplexFile::from_complex(&sc))
        }
    }
}

fn info(path: &Path, group_tol: f64, stdout: &mut dyn Write) -> CliResult<()> {
    let sc = formats::read_complex(path)?;
    let s = spectrum_of(&sc)?;
    let (dg, dc) = s.distinct_frequencies(group_tol);
    let rows = [
        ("N0", sc.vertex_count()),
        ("N1", sc.edge_count()),
        ("N2", sc.triangle_count()),
        ("N_H", s.harmonic_dim()),
        ("N_G", s.gradient_dim()),
        ("N_C", s.curl_dim()),
        ("D_G", dg.len()),
        ("D_C", dc.len()),
    ];
    for (k, v) in rows {
        writeln!(stdout, "{k}={v}")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct Norms {
    total: f64,
    harmonic: f64,
    gradient: f64,
    curl: f64,
}

impl From<SubspaceNorms> for Norms {
    fn from(n: SubspaceNorms) -> Self {
        Norms { total: n.total, harmonic: n.harmonic, gradient: n.gradient, curl: n.curl }
    }
}

#[derive(Serialize)]
struct DecompositionFile {
    norms: Norms,
    gradient: Vec<f64>,
    curl: Vec<f64>,
    harmonic: Vec<f64>,
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn decompose(sc: &Path, signal: &Path, output: &Output, stdout: &mut dyn Write) -> CliResult<()> {
    let sc = formats::read_complex(sc)?;
    let flow = formats::read_signal(signal, &sc)?;
    let parts = spectrum_of(&sc)?.decompose(&flow)?;
    let norms = Norms {
        total: norm(&flow),
        harmonic: norm(&parts.harmonic),
        gradient: norm(&parts.gradient),
        curl: norm(&parts.curl),
    };
    let file = DecompositionFile { norms, gradient: parts.gradient, curl: parts.curl, harmonic: parts.harmonic };
    emit_json(output, stdout, &file)
}

fn report_ls(design: &LsDesign, stderr: &mut dyn Write) -> io::Result<()> {
    writeln!(stderr, "residual {:.6e}, condition {:.3e}", design.residual, design.condition)?;
    for w in &design.warnings {
        match w {
            DesignWarning::IllConditioned { condition } => {
                writeln!(stderr, "warning: ill-conditioned system (condition number {condition:.3e})")?
            }
            DesignWarning::OrderExceedsDistinct { order, distinct } => {
                writeln!(stderr, "warning: order {order} exceeds the {distinct} distinct frequencies")?
            }
        }
    }
    Ok(())
}

fn estimated_bounds(sc: &SimplicialComplex, steps: usize, seed: u64) -> (f64, f64) {
    let ops = ShiftOperators::new(sc);
    let est = |m: &CsrMatrix, s: u64| apps::LAMBDA_MAX_MARGIN * design::estimate_lambda_max(m, steps, s);
    (est(&ops.lower, seed), est(&ops.upper, seed.wrapping_add(1)))
}

/// Designs the filter described by `args`.
pub fn design_filter(args: &DesignArgs, stderr: &mut dyn Write) -> CliResult<Filter> {
    let spec_file = formats::read_spec(&args.spec)?;
    let sc = args.sc.as_deref().map(formats::read_complex).transpose()?;
    let (l1, l2) = args.orders.resolve();
    match args.method {
        DesignMethodArg::Ls | DesignMethodArg::Tied => {
            let sc = sc.ok_or_else(|| CliError::Usage("--sc is required for ls and tied designs".into()))?;
            let s = spectrum_of(&sc)?;
            let (qg, qc) = s.distinct_frequencies(args.group_tol);
            let lmax = s.lambda_max();
            let targets = DesignTargets::from_spec(&spec_file.to_spec((lmax, lmax)), &qg, &qc);
            let design = match (args.method, args.mode) {
                (DesignMethodArg::Tied, _) => design::ls_tied(&targets, args.orders.order.unwrap_or(l1.max(l2)))?,
                (_, ModeArg::Joint) => design::ls_joint(&targets, l1, l2)?,
                (_, ModeArg::Decoupled) => design::ls_decoupled(&targets, l1, l2)?,
            };
            report_ls(&design, stderr)?;
            Ok(Filter::Polynomial(design.coefficients))
        }
        DesignMethodArg::Grid | DesignMethodArg::Cheb => {
            let fallback = match (&sc, spec_file.has_bounds()) {
                (_, true) => (f64::NAN, f64::NAN),
                (Some(sc), false) => estimated_bounds(sc, args.power_steps, args.seed),
                (None, false) => {
                    return Err(CliError::Usage(
                        "the spec has no \"max\" bounds; pass --sc to estimate them".into(),
                    ))
                }
            };
            let spec = spec_file.to_spec(fallback);
            if args.method == DesignMethodArg::Grid {
                let design = design::grid_design(&spec, args.samples, args.samples, l1, l2, args.mode.into())?;
                report_ls(&design, stderr)?;
                Ok(Filter::Polynomial(design.coefficients))
            } else {
                let f = design::chebyshev_design(
                    &spec,
                    spec.gradient_range.1,
                    spec.curl_range.1,
                    l1,
                    l2,
                    args.quad_points,
                )?;
                let b = f.error_bound(&spec, 2001);
                writeln!(stderr, "approximation error bound {:.6e}", b.bound)?;
                Ok(Filter::Chebyshev(f))
            }
        }
    }
}

fn design_command(args: &DesignArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    let filter = design_filter(args, stderr)?;
    emit_json(&args.output, stdout, &FilterFile::from(&filter))
}

fn response(
    filter: &Path,
    sc: &Path,
    group_tol: f64,
    samples: Option<usize>,
    output: &Output,
    stdout: &mut dyn Write,
) -> CliResult<()> {
    let f = formats::read_filter(filter)?;
    let s = spectrum_of(&formats::read_complex(sc)?)?;
    let (qg, qc) = match samples {
        Some(m) => {
            let top = |v: &[f64]| v.last().copied().unwrap_or(0.0);
            (design::uniform_grid(0.0, top(s.gradient_values()), m), design::uniform_grid(0.0, top(s.curl_values()), m))
        }
        None => s.distinct_frequencies(group_tol),
    };
    let mut rows = Vec::new();
    if s.harmonic_dim() > 0 {
        rows.push((0.0, FrequencyType::Harmonic, f.response(0.0, FrequencyType::Harmonic)));
    }
    rows.extend(qg.iter().map(|&l| (l, FrequencyType::Gradient, f.response(l, FrequencyType::Gradient))));
    rows.extend(qc.iter().map(|&l| (l, FrequencyType::Curl, f.response(l, FrequencyType::Curl))));
    emit(output, stdout, |w| formats::write_response(w, &rows))
}

fn extract(args: &ExtractArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    let sc = formats::read_complex(&args.sc)?;
    let flow = formats::read_signal(&args.signal, &sc)?;
    let s = spectrum_of(&sc)?;
    let (l1, l2) = args.orders.resolve();
    let order = args.orders.order.unwrap_or(l1.max(l2));
    let method = match args.method {
        ExtractMethodArg::Spectral => ExtractionMethod::Spectral,
        ExtractMethodArg::Ls => ExtractionMethod::FilterLs { lower_order: l1, upper_order: l2 },
        ExtractMethodArg::Onesided => ExtractionMethod::FilterOneSided { order },
        ExtractMethodArg::Tied => ExtractionMethod::FilterTied { order },
        ExtractMethodArg::Cheb => {
            ExtractionMethod::FilterChebyshev { order, steepness: args.steepness, midpoint: args.midpoint }
        }
    };
    let e = apps::extract_component(&sc, &s, &flow, args.component.into(), method)?;
    match e.nrmse {
        Some(x) => writeln!(stderr, "nrmse {x:.6e}")?,
        None => writeln!(stderr, "nrmse undefined: the reference component is zero")?,
    }
    emit(&args.output, stdout, |w| formats::write_signal(w, &e.flow))
}

fn denoise(args: &DenoiseArgs, stdout: &mut dyn Write) -> CliResult<()> {
    check_positive("mu", args.mu)?;
    let sc = formats::read_complex(&args.sc)?;
    let flow = formats::read_signal(&args.signal, &sc)?;
    let regularizer = match args.regularizer {
        RegularizerArg::Edge => Regularizer::EdgeLaplacian,
        RegularizerArg::Hodge => Regularizer::HodgeLaplacian,
    };
    let method = match args.method {
        SolveMethodArg::Exact => DenoiseMethod::Exact,
        SolveMethodArg::Grid => DenoiseMethod::Grid { order: args.order, samples: args.samples },
        SolveMethodArg::Cheb => DenoiseMethod::Chebyshev { order: args.order },
    };
    let y = apps::denoise(&sc, &flow, args.mu, regularizer, method)?;
    emit(&args.output, stdout, |w| formats::write_signal(w, &y))
}

#[derive(Serialize)]
struct PageRankFile {
    edge: usize,
    u: usize,
    v: usize,
    norms_abs: Norms,
    norms_rel: Norms,
    pi: Vec<f64>,
}

fn pagerank(args: &PagerankArgs, stdout: &mut dyn Write) -> CliResult<()> {
    check_positive("gamma", args.gamma)?;
    let sc = formats::read_complex(&args.sc)?;
    let ctx = PageRankContext::new(&sc, args.gamma)?;
    let method = match args.method {
        SolveMethodArg::Exact => PageRankMethod::Exact,
        SolveMethodArg::Grid => PageRankMethod::Grid { order: args.order, samples: args.samples },
        SolveMethodArg::Cheb => PageRankMethod::Chebyshev { order: args.order },
    };
    if args.all {
        let results = ctx.all(method)?;
        return emit(&args.output, stdout, |w| formats::write_pagerank(w, &sc, &results));
    }
    let edge = args.edge.expect("clap requires --edge without --all");
    let r = ctx.single(edge, method)?;
    let [u, v] = sc.edges()[edge];
    let file = PageRankFile { edge, u, v, norms_abs: r.norms_abs.into(), norms_rel: r.norms_rel.into(), pi: r.pi };
    emit_json(&args.output, stdout, &file)
}

#[derive(Serialize)]
struct FlaggedTriangle {
    currencies: [String; 3],
    indices: [usize; 3],
    curl: f64,
    roundtrip: f64,
}

#[derive(Serialize)]
struct ArbitrageReport {
    threshold: f64,
    count: usize,
    triangles: Vec<FlaggedTriangle>,
}

fn arbitrage(action: ArbitrageCommand, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    match action {
        ArbitrageCommand::Check { market, threshold, output } => {
            let m = formats::read_market(&market)?;
            let flagged = apps::arbitrage_check(&m, threshold)?;
            let triangles = flagged
                .into_iter()
                .map(|t| FlaggedTriangle {
                    currencies: t.currencies.map(|i| m.names()[i].clone()),
                    indices: t.currencies,
                    curl: t.curl,
                    roundtrip: 1.0 + t.gain,
                })
                .collect::<Vec<_>>();
            emit_json(&output, stdout, &ArbitrageReport { threshold, count: triangles.len(), triangles })
        }
        ArbitrageCommand::Correct { market, output } => {
            let m = formats::read_market(&market)?;
            let c = apps::arbitrage_correct(&m)?;
            if let Some(e) = &c.fallback {
                writeln!(stderr, "warning: {e}; used the spectral gradient projector")?;
            }
            emit(&output, stdout, |w| formats::write_market(w, &c.market))
        }
    }
}
