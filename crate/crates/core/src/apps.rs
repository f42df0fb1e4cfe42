//! Applications: subcomponent extraction, edge-flow denoising, arbitrage-free exchange rates and
//! edge PageRank.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::Rng;

use crate::complex::SimplicialComplex;
use crate::design::{
    chebyshev_design, grid_design, ls_decoupled, ls_joint, ls_tied, ChebyshevFilter, DesignMode, DesignTargets,
    ResponseFn, ResponseSpec,
};
use crate::error::{check_len, Error, Result};
use crate::filter::{FilterCoefficients, ShiftOperators};
use crate::fixtures::gaussian_vector;
use crate::linalg::{norm, LinearOperator};
use crate::spectral::{hodge_laplacian, normalized_hodge_laplacian, HodgeSpectrum, ZERO_TOL_REL};

/// `||estimate - truth||_2 / ||truth||_2`.
pub fn nrmse(estimate: &[f64], truth: &[f64]) -> Result<f64> {
    check_len(truth.len(), estimate.len())?;
    let t = norm(truth);
    if t == 0.0 {
        return Err(Error::ZeroReference);
    }
    let d: f64 = estimate.iter().zip(truth).map(|(e, t)| (e - t) * (e - t)).sum();
    Ok(libm::sqrt(d) / t)
}

/// `U_1 1`: unit weight on every frequency.
pub fn flat_spectrum_flow(spectrum: &HodgeSpectrum) -> Vec<f64> {
    let u = spectrum.basis();
    u.column_sum().as_slice().to_vec()
}

/// `truth + n` with Gaussian `n` rescaled so that `nrmse(truth + n, truth) == target`.
pub fn add_noise_with_nrmse<R: Rng>(rng: &mut R, truth: &[f64], target: f64) -> Result<Vec<f64>> {
    let t = norm(truth);
    if t == 0.0 {
        return Err(Error::ZeroReference);
    }
    let noise = gaussian_vector(rng, truth.len());
    let scale = target * t / norm(&noise);
    Ok(truth.iter().zip(&noise).map(|(x, n)| x + scale * n).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    Gradient,
    Curl,
    Harmonic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtractionMethod {
    /// Projector from the eigenbasis.
    Spectral,
    /// Joint LS on indicator targets at the distinct frequencies.
    FilterLs { lower_order: usize, upper_order: usize },
    /// Joint LS with `alpha = beta`.
    FilterTied { order: usize },
    /// `h0 = 0` and a single polynomial on the wanted side only.
    FilterOneSided { order: usize },
    /// Chebyshev series of a logistic step `1 / (1 + exp(-k (lambda - midpoint)))`.
    FilterChebyshev { order: usize, steepness: f64, midpoint: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Extraction {
    pub flow: Vec<f64>,
    /// Against the spectral projection; `None` when that projection is zero.
    pub nrmse: Option<f64>,
}

fn indicator_targets(which: Component, spectrum: &HodgeSpectrum) -> DesignTargets {
    let (qg, qc) = spectrum.distinct_frequencies(spectrum.zero_tol());
    let (h, g, c) = match which {
        Component::Gradient => (0.0, 1.0, 0.0),
        Component::Curl => (0.0, 0.0, 1.0),
        Component::Harmonic => (1.0, 0.0, 0.0),
    };
    DesignTargets::constant(h, &qg, g, &qc, c)
}

/// Filter coefficients that extract `which`, for the polynomial methods.
pub fn extraction_filter(which: Component, spectrum: &HodgeSpectrum, method: ExtractionMethod) -> Result<FilterCoefficients> {
    let targets = indicator_targets(which, spectrum);
    let design = match method {
        ExtractionMethod::FilterLs { lower_order, upper_order } => ls_joint(&targets, lower_order, upper_order)?,
        ExtractionMethod::FilterTied { order } => ls_tied(&targets, order)?,
        ExtractionMethod::FilterOneSided { order } => match which {
            Component::Gradient => ls_decoupled(&targets, order, 0)?,
            Component::Curl => ls_decoupled(&targets, 0, order)?,
            Component::Harmonic => return Err(Error::UnsupportedCombination),
        },
        ExtractionMethod::Spectral | ExtractionMethod::FilterChebyshev { .. } => {
            return Err(Error::UnsupportedCombination)
        }
    };
    Ok(design.coefficients)
}

/// Chebyshev filter approximating the extraction of `which` with a logistic step.
pub fn extraction_chebyshev(
    which: Component,
    spectrum: &HodgeSpectrum,
    order: usize,
    steepness: f64,
    midpoint: f64,
) -> Result<ChebyshevFilter> {
    let step = ResponseFn::Logistic { k: steepness, midpoint };
    let at0 = step.eval(0.0);
    let (g0, gradient, curl) = match which {
        Component::Gradient => (at0, step, ResponseFn::Constant(at0)),
        Component::Curl => (at0, ResponseFn::Constant(at0), step),
        Component::Harmonic => {
            let t: Vec<(f64, f64)> = crate::design::uniform_grid(0.0, spectrum.lambda_max(), 4097)
                .into_iter()
                .map(|l| (l, 1.0 - step.eval(l)))
                .collect();
            (1.0 - at0, ResponseFn::Table(t.clone()), ResponseFn::Table(t))
        }
    };
    let lg = spectrum.gradient_values().last().copied().unwrap_or(0.0);
    let lc = spectrum.curl_values().last().copied().unwrap_or(0.0);
    let spec = ResponseSpec { g0, gradient, curl, gradient_range: (0.0, lg), curl_range: (0.0, lc) };
    let (lo, hi) = match which {
        Component::Gradient => (order, 0),
        Component::Curl => (0, order),
        Component::Harmonic => (order, order),
    };
    chebyshev_design(&spec, lg, lc, if lg > 0.0 { lo } else { 0 }, if lc > 0.0 { hi } else { 0 }, None)
}

pub fn extract_component(
    sc: &SimplicialComplex,
    spectrum: &HodgeSpectrum,
    flow: &[f64],
    which: Component,
    method: ExtractionMethod,
) -> Result<Extraction> {
    check_len(sc.edge_count(), flow.len())?;
    let parts = spectrum.decompose(flow)?;
    let reference = match which {
        Component::Gradient => parts.gradient,
        Component::Curl => parts.curl,
        Component::Harmonic => parts.harmonic,
    };
    let out = match method {
        ExtractionMethod::Spectral => reference.clone(),
        ExtractionMethod::FilterChebyshev { order, steepness, midpoint } => {
            extraction_chebyshev(which, spectrum, order, steepness, midpoint)?.apply(&ShiftOperators::new(sc), flow)?
        }
        _ => extraction_filter(which, spectrum, method)?.apply(&ShiftOperators::new(sc), flow)?,
    };
    let scale = norm(flow).max(1.0);
    let nrmse = if norm(&reference) <= 1e-12 * scale { None } else { Some(nrmse(&out, &reference)?) };
    Ok(Extraction { flow: out, nrmse })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regularizer {
    /// `P = L_{1,l}`.
    EdgeLaplacian,
    /// `P = L_1`.
    HodgeLaplacian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DenoiseMethod {
    Exact,
    Grid { order: usize, samples: usize },
    Chebyshev { order: usize },
}

/// Power iterations used to bound the spectrum when no eigendecomposition is at hand.
pub const POWER_ITERATIONS: usize = 200;
/// Safety factor on power-iteration estimates, which approach the top eigenvalue from below.
pub const LAMBDA_MAX_MARGIN: f64 = 1.02;

/// A denoising operator `(I + mu P)^{-1}` or an approximation of it.
#[derive(Debug, Clone, PartialEq)]
pub enum DenoisingFilter {
    Exact(DMatrix<f64>),
    Polynomial(FilterCoefficients),
    Chebyshev(ChebyshevFilter),
}

impl DenoisingFilter {
    pub fn apply(&self, ops: &ShiftOperators, flow: &[f64]) -> Result<Vec<f64>> {
        match self {
            DenoisingFilter::Exact(m) => {
                check_len(m.ncols(), flow.len())?;
                Ok(m.apply(flow))
            }
            DenoisingFilter::Polynomial(c) => c.apply(ops, flow),
            DenoisingFilter::Chebyshev(c) => c.apply(ops, flow),
        }
    }

    pub fn to_dense(&self, ops: &ShiftOperators) -> DMatrix<f64> {
        match self {
            DenoisingFilter::Exact(m) => m.clone(),
            DenoisingFilter::Polynomial(c) => c.to_dense(ops),
            DenoisingFilter::Chebyshev(c) => c.to_dense(ops),
        }
    }
}

pub fn denoising_filter(
    sc: &SimplicialComplex,
    mu: f64,
    regularizer: Regularizer,
    method: DenoiseMethod,
) -> Result<DenoisingFilter> {
    if !(mu > 0.0) {
        return Err(Error::InvalidParameter("mu must be positive"));
    }
    let ops = ShiftOperators::new(sc);
    let n = sc.edge_count();
    let with_upper = regularizer == Regularizer::HodgeLaplacian;
    match method {
        DenoiseMethod::Exact => {
            let l = hodge_laplacian(sc, 1)?;
            let p = if with_upper { l.total } else { l.lower };
            let a = DMatrix::<f64>::identity(n, n) + p * mu;
            let inv = a.cholesky().ok_or(Error::SingularSystem)?.inverse();
            Ok(DenoisingFilter::Exact(inv))
        }
        DenoiseMethod::Grid { .. } | DenoiseMethod::Chebyshev { .. } => {
            let lg = LAMBDA_MAX_MARGIN * crate::design::estimate_lambda_max(&ops.lower, POWER_ITERATIONS, 0);
            let lc = LAMBDA_MAX_MARGIN * crate::design::estimate_lambda_max(&ops.upper, POWER_ITERATIONS, 1);
            let shrink = ResponseFn::InverseShift { gamma: 1.0 / mu, scale: 1.0 / mu };
            let spec = ResponseSpec {
                g0: 1.0,
                gradient: shrink.clone(),
                curl: if with_upper { shrink } else { ResponseFn::Constant(1.0) },
                gradient_range: (ZERO_TOL_REL * lg, lg),
                curl_range: (ZERO_TOL_REL * lc, lc),
            };
            let upper_active = with_upper && lc > 0.0;
            match method {
                DenoiseMethod::Grid { order, samples } => {
                    let d = grid_design(&spec, samples, samples, order, if upper_active { order } else { 0 }, DesignMode::Joint)?;
                    Ok(DenoisingFilter::Polynomial(d.coefficients))
                }
                DenoiseMethod::Chebyshev { order } => {
                    let lo = if lg > 0.0 { order } else { 0 };
                    let c = chebyshev_design(&spec, lg, lc, lo, if upper_active { order } else { 0 }, None)?;
                    Ok(DenoisingFilter::Chebyshev(c))
                }
                DenoiseMethod::Exact => unreachable!(),
            }
        }
    }
}

/// Regularized denoising `argmin ||f_hat - f||^2 + mu f_hat^T P f_hat`, exact or approximated.
pub fn denoise(
    sc: &SimplicialComplex,
    noisy: &[f64],
    mu: f64,
    regularizer: Regularizer,
    method: DenoiseMethod,
) -> Result<Vec<f64>> {
    check_len(sc.edge_count(), noisy.len())?;
    denoising_filter(sc, mu, regularizer, method)?.apply(&ShiftOperators::new(sc), noisy)
}

/// Pairwise exchange rates; `rates[i][j]` is the amount of `j` bought by one unit of `i`.
/// `NaN` marks a missing quote.
#[derive(Debug, Clone, PartialEq)]
pub struct ExchangeMarket {
    names: Vec<String>,
    rates: Vec<Vec<f64>>,
}

impl ExchangeMarket {
    pub fn new(names: Vec<String>, rates: Vec<Vec<f64>>) -> Result<Self> {
        let n = names.len();
        check_len(n, rates.len())?;
        for (i, row) in rates.iter().enumerate() {
            check_len(n, row.len())?;
            for (j, &r) in row.iter().enumerate() {
                if i == j && (r - 1.0).abs() > 1e-12 {
                    return Err(Error::InvalidParameter("exchange rate diagonal must be 1"));
                }
                if !r.is_nan() && !(r > 0.0 && r.is_finite()) {
                    return Err(Error::NonPositiveRate { from: i, to: j });
                }
            }
        }
        Ok(ExchangeMarket { names, rates })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rates(&self) -> &[Vec<f64>] {
        &self.rates
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn rate(&self, from: usize, to: usize) -> f64 {
        self.rates[from][to]
    }

    pub fn is_complete(&self) -> bool {
        self.rates.iter().all(|row| row.iter().all(|r| !r.is_nan()))
    }

    /// Currency pairs `i < j` with a quote from `i` to `j`, and the complex over them with every
    /// 3-clique filled.
    pub fn complex(&self) -> Result<SimplicialComplex> {
        if self.is_empty() {
            return Err(Error::InvalidParameter("market has no currencies"));
        }
        let n = self.len();
        let edges: Vec<[usize; 2]> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| [i, j])).filter(|&[i, j]| !self.rates[i][j].is_nan()).collect();
        SimplicialComplex::with_inferred_triangles(n, &edges)
    }

    /// `f_ij = log r[i][j]` on every quoted pair `i < j`.
    pub fn log_flow(&self, sc: &SimplicialComplex) -> Vec<f64> {
        sc.edges().iter().map(|&[i, j]| libm::log(self.rates[i][j])).collect()
    }

    /// Rebuilds a market from a log-rate flow, with `r[j][i] = 1 / r[i][j]`.
    fn from_flow(&self, sc: &SimplicialComplex, flow: &[f64]) -> ExchangeMarket {
        let n = self.len();
        let mut rates = vec![vec![f64::NAN; n]; n];
        for (i, row) in rates.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        for (&[i, j], &f) in sc.edges().iter().zip(flow) {
            let r = libm::exp(f);
            rates[i][j] = r;
            rates[j][i] = 1.0 / r;
        }
        ExchangeMarket { names: self.names.clone(), rates }
    }
}

/// A triangle whose log-rate curl is non-zero.
#[derive(Debug, Clone, PartialEq)]
pub struct ArbitrageTriangle {
    /// Currency indices, ascending.
    pub currencies: [usize; 3],
    /// Log-rate curl `f_ij + f_jk - f_ik`.
    pub curl: f64,
    /// `exp(|curl|) - 1`.
    pub gain: f64,
}

/// Triangles whose round trip gains more than `threshold`.
pub fn arbitrage_check(market: &ExchangeMarket, threshold: f64) -> Result<Vec<ArbitrageTriangle>> {
    let sc = market.complex()?;
    let curl = crate::spectral::curl(&sc, &market.log_flow(&sc))?;
    Ok(sc
        .triangles()
        .iter()
        .zip(curl)
        .filter_map(|(t, c)| {
            let gain = libm::expm1(c.abs());
            let mut currencies = *t;
            currencies.sort_unstable();
            (gain > threshold).then_some(ArbitrageTriangle { currencies, curl: c, gain })
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArbitrageCorrection {
    pub market: ExchangeMarket,
    /// Set when the market was incomplete and the spectral gradient projector was used.
    pub fallback: Option<Error>,
}

/// Arbitrage-free correction: the gradient part of the log-rate flow, via `L_{1,l} / N0` on a
/// complete market and the spectral gradient projector otherwise.
pub fn arbitrage_correct(market: &ExchangeMarket) -> Result<ArbitrageCorrection> {
    let sc = market.complex()?;
    let flow = market.log_flow(&sc);
    if market.is_complete() {
        let ops = ShiftOperators::new(&sc);
        let n0 = market.len() as f64;
        let corrected: Vec<f64> = ops.lower.apply(&flow).into_iter().map(|x| x / n0).collect();
        return Ok(ArbitrageCorrection { market: market.from_flow(&sc, &corrected), fallback: None });
    }
    let (from, to) = (0..market.len())
        .flat_map(|i| (0..market.len()).map(move |j| (i, j)))
        .find(|&(i, j)| market.rates[i][j].is_nan())
        .expect("incomplete market has a missing quote");
    let spectrum = HodgeSpectrum::new(&sc)?;
    let gradient = spectrum.decompose(&flow)?.gradient;
    Ok(ArbitrageCorrection {
        market: market.from_flow(&sc, &gradient),
        fallback: Some(Error::IncompleteMarket { from, to }),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PageRankMethod {
    Exact,
    Grid { order: usize, samples: usize },
    Chebyshev { order: usize },
}

/// ℓ2 norms of a flow and of its harmonic, gradient and curl parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubspaceNorms {
    pub total: f64,
    pub harmonic: f64,
    pub gradient: f64,
    pub curl: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PageRankResult {
    pub edge: usize,
    pub pi: Vec<f64>,
    pub norms_abs: SubspaceNorms,
    pub norms_rel: SubspaceNorms,
}

/// Orthogonal projectors onto `im B1^T` and `im B2` through the small node and triangle
/// Laplacians: `B1^T L0^+ B1` and `B2 L2^+ B2^T`.
#[derive(Debug, Clone)]
pub struct HodgeProjector {
    b1: DMatrix<f64>,
    b2: DMatrix<f64>,
    l0_pinv: DMatrix<f64>,
    l2_pinv: DMatrix<f64>,
}

fn pseudo_inverse_psd(m: DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = m.nrows();
    if n == 0 {
        return Ok(m);
    }
    let eig = SymmetricEigen::try_new(m, f64::EPSILON, 0).ok_or(Error::EigenFailure)?;
    let top = eig.eigenvalues.amax();
    let tol = ZERO_TOL_REL * top.max(1.0);
    let inv = DVector::from_iterator(n, eig.eigenvalues.iter().map(|&l| if l > tol { 1.0 / l } else { 0.0 }));
    Ok(&eig.eigenvectors * DMatrix::from_diagonal(&inv) * eig.eigenvectors.transpose())
}

impl HodgeProjector {
    pub fn new(sc: &SimplicialComplex) -> Result<Self> {
        let b1 = sc.incidence(1)?.to_dense();
        let b2 = sc.incidence(2)?.to_dense();
        let l0_pinv = pseudo_inverse_psd(&b1 * b1.transpose())?;
        let l2_pinv = pseudo_inverse_psd(b2.transpose() * &b2)?;
        Ok(HodgeProjector { b1, b2, l0_pinv, l2_pinv })
    }

    /// `(gradient, curl, harmonic)` parts of `flow`.
    pub fn split(&self, flow: &[f64]) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
        check_len(self.b1.ncols(), flow.len())?;
        let f = DVector::from_column_slice(flow);
        let g = self.b1.transpose() * (&self.l0_pinv * (&self.b1 * &f));
        let c = &self.b2 * (&self.l2_pinv * (self.b2.transpose() * &f));
        let h = &f - &g - &c;
        Ok((g.as_slice().to_vec(), c.as_slice().to_vec(), h.as_slice().to_vec()))
    }

    pub fn norms(&self, flow: &[f64]) -> Result<SubspaceNorms> {
        let (g, c, h) = self.split(flow)?;
        Ok(SubspaceNorms { total: norm(flow), harmonic: norm(&h), gradient: norm(&g), curl: norm(&c) })
    }
}

/// Shared state for edge PageRank on one complex: normalized shift operators, the exact system
/// `gamma I + L_{1,n}` and the subspace projector.
pub struct PageRankContext {
    gamma: f64,
    ops: ShiftOperators,
    system: DMatrix<f64>,
    lu: nalgebra::LU<f64, nalgebra::Dyn, nalgebra::Dyn>,
    projector: HodgeProjector,
}

/// The normalized Hodge Laplacian has its spectrum in `[0, 1]`.
pub const NORMALIZED_LAMBDA_MAX: f64 = 1.0;

impl PageRankContext {
    pub fn new(sc: &SimplicialComplex, gamma: f64) -> Result<Self> {
        if !(gamma > 0.0) {
            return Err(Error::InvalidParameter("gamma must be positive"));
        }
        let normalized = normalized_hodge_laplacian(sc);
        let n = normalized.dim();
        let system = DMatrix::<f64>::identity(n, n) * gamma + normalized.to_dense();
        let lu = system.clone().lu();
        if !lu.is_invertible() {
            return Err(Error::SingularSystem);
        }
        let ops = ShiftOperators { lower: normalized.lower, upper: normalized.upper };
        Ok(PageRankContext { gamma, ops, system, lu, projector: HodgeProjector::new(sc)? })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn dim(&self) -> usize {
        self.ops.dim()
    }

    pub fn operators(&self) -> &ShiftOperators {
        &self.ops
    }

    /// `gamma I + L_{1,n}`.
    pub fn system(&self) -> &DMatrix<f64> {
        &self.system
    }

    /// The response `1 / (gamma + lambda)` on `[0, 1]`.
    pub fn response_spec(&self) -> ResponseSpec {
        ResponseSpec::uniform(
            ResponseFn::InverseShift { gamma: self.gamma, scale: 1.0 },
            NORMALIZED_LAMBDA_MAX,
        )
    }

    /// Grid design over `[zero_tol, 1]` on both blocks.
    pub fn grid_filter(&self, order: usize, samples: usize) -> Result<FilterCoefficients> {
        let mut spec = self.response_spec();
        spec.gradient_range.0 = ZERO_TOL_REL * NORMALIZED_LAMBDA_MAX;
        spec.curl_range.0 = ZERO_TOL_REL * NORMALIZED_LAMBDA_MAX;
        Ok(grid_design(&spec, samples, samples, order, order, DesignMode::Joint)?.coefficients)
    }

    pub fn chebyshev_filter(&self, order: usize) -> Result<ChebyshevFilter> {
        chebyshev_design(&self.response_spec(), NORMALIZED_LAMBDA_MAX, NORMALIZED_LAMBDA_MAX, order, order, None)
    }

    fn result(&self, edge: usize, pi: Vec<f64>) -> Result<PageRankResult> {
        let a = self.projector.norms(&pi)?;
        let rel = |x: f64| if a.total > 0.0 { x / a.total } else { 0.0 };
        let norms_rel = SubspaceNorms { total: rel(a.total), harmonic: rel(a.harmonic), gradient: rel(a.gradient), curl: rel(a.curl) };
        Ok(PageRankResult { edge, pi, norms_abs: a, norms_rel })
    }

    fn indicator(&self, edge: usize) -> Result<Vec<f64>> {
        if edge >= self.dim() {
            return Err(Error::IndexOutOfRange { index: edge, bound: self.dim() });
        }
        let mut f = vec![0.0; self.dim()];
        f[edge] = 1.0;
        Ok(f)
    }

    pub fn exact(&self, edge: usize) -> Result<PageRankResult> {
        let f = DVector::from_vec(self.indicator(edge)?);
        let pi = self.lu.solve(&f).ok_or(Error::SingularSystem)?;
        self.result(edge, pi.as_slice().to_vec())
    }

    pub fn with_polynomial(&self, edge: usize, filter: &FilterCoefficients) -> Result<PageRankResult> {
        let pi = filter.apply(&self.ops, &self.indicator(edge)?)?;
        self.result(edge, pi)
    }

    pub fn with_chebyshev(&self, edge: usize, filter: &ChebyshevFilter) -> Result<PageRankResult> {
        let pi = filter.apply(&self.ops, &self.indicator(edge)?)?;
        self.result(edge, pi)
    }

    /// PageRank of every edge; the filter is designed once.
    pub fn all(&self, method: PageRankMethod) -> Result<Vec<PageRankResult>> {
        let n = self.dim();
        match method {
            PageRankMethod::Exact => {
                let inv = self.lu.try_inverse().ok_or(Error::SingularSystem)?;
                (0..n).map(|e| self.result(e, inv.column(e).iter().copied().collect())).collect()
            }
            PageRankMethod::Grid { order, samples } => {
                let h = self.grid_filter(order, samples)?;
                (0..n).map(|e| self.with_polynomial(e, &h)).collect()
            }
            PageRankMethod::Chebyshev { order } => {
                let h = self.chebyshev_filter(order)?;
                (0..n).map(|e| self.with_chebyshev(e, &h)).collect()
            }
        }
    }

    pub fn single(&self, edge: usize, method: PageRankMethod) -> Result<PageRankResult> {
        match method {
            PageRankMethod::Exact => self.exact(edge),
            PageRankMethod::Grid { order, samples } => self.with_polynomial(edge, &self.grid_filter(order, samples)?),
            PageRankMethod::Chebyshev { order } => self.with_chebyshev(edge, &self.chebyshev_filter(order)?),
        }
    }
}

/// Edge PageRank `(gamma I + L_{1,n}) pi = 1_edge`, solved exactly or by a filter.
pub fn edge_pagerank(sc: &SimplicialComplex, gamma: f64, edge: usize, method: PageRankMethod) -> Result<PageRankResult> {
    if edge >= sc.edge_count() {
        return Err(Error::IndexOutOfRange { index: edge, bound: sc.edge_count() });
    }
    PageRankContext::new(sc, gamma)?.single(edge, method)
}
