//! Filter design: least squares on distinct frequencies (joint, decoupled, tied), grid-based
//! design on sampled frequencies, and shifted-Chebyshev series.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{check_len, Error, Result};
use crate::filter::{FilterCoefficients, ShiftOperators};
use crate::fixtures::gaussian_vector;
use crate::linalg::{dot, norm, LinearOperator};
use crate::spectral::HodgeSpectrum;

/// Condition numbers above this are reported as [`DesignWarning::IllConditioned`].
pub const ILL_CONDITIONED: f64 = 1e10;

/// A desired response as a function of frequency.
#[derive(Debug, Clone, PartialEq)]
pub enum ResponseFn {
    /// `(lambda, g)` pairs; evaluated exactly at listed frequencies and by linear interpolation
    /// (clamped at the ends) elsewhere.
    Table(Vec<(f64, f64)>),
    Constant(f64),
    /// `low` below `cutoff`, `high` from `cutoff` on.
    Step { cutoff: f64, low: f64, high: f64 },
    /// `1 / (1 + exp(-k (lambda - midpoint)))`.
    Logistic { k: f64, midpoint: f64 },
    /// `scale / (gamma + lambda)`.
    InverseShift { gamma: f64, scale: f64 },
}

impl ResponseFn {
    pub fn eval(&self, lambda: f64) -> f64 {
        match self {
            ResponseFn::Table(points) => table_eval(points, lambda),
            ResponseFn::Constant(c) => *c,
            ResponseFn::Step { cutoff, low, high } => {
                if lambda < *cutoff {
                    *low
                } else {
                    *high
                }
            }
            ResponseFn::Logistic { k, midpoint } => 1.0 / (1.0 + libm::exp(-k * (lambda - midpoint))),
            ResponseFn::InverseShift { gamma, scale } => scale / (gamma + lambda),
        }
    }
}

fn table_eval(points: &[(f64, f64)], lambda: f64) -> f64 {
    let mut sorted = points.to_vec();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    match sorted.as_slice() {
        [] => f64::NAN,
        [(_, g)] => *g,
        _ => {
            if let Some(&(_, g)) = sorted.iter().find(|p| p.0 == lambda) {
                return g;
            }
            let (first, last) = (sorted[0], sorted[sorted.len() - 1]);
            if lambda <= first.0 {
                return first.1;
            }
            if lambda >= last.0 {
                return last.1;
            }
            let k = sorted.iter().position(|p| p.0 > lambda).unwrap();
            let ((x0, y0), (x1, y1)) = (sorted[k - 1], sorted[k]);
            y0 + (y1 - y0) * (lambda - x0) / (x1 - x0)
        }
    }
}

/// Desired harmonic, gradient and curl responses together with the frequency interval of each block.
#[derive(Debug, Clone, PartialEq)]
pub struct ResponseSpec {
    pub g0: f64,
    pub gradient: ResponseFn,
    pub curl: ResponseFn,
    pub gradient_range: (f64, f64),
    pub curl_range: (f64, f64),
}

impl ResponseSpec {
    /// The same continuous response on both blocks over `[0, lambda_max]`, with `g0 = g(0)`.
    pub fn uniform(g: ResponseFn, lambda_max: f64) -> Self {
        ResponseSpec {
            g0: g.eval(0.0),
            gradient: g.clone(),
            curl: g,
            gradient_range: (0.0, lambda_max),
            curl_range: (0.0, lambda_max),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (lo, hi) in [self.gradient_range, self.curl_range] {
            if !(lo >= 0.0 && hi >= lo) {
                return Err(Error::InvalidParameter("frequency bounds must satisfy 0 <= min <= max"));
            }
        }
        Ok(())
    }
}

/// Tabulated targets at distinct frequencies, the right-hand side of the LS designs.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignTargets {
    pub g0: f64,
    pub gradient: Vec<(f64, f64)>,
    pub curl: Vec<(f64, f64)>,
}

impl DesignTargets {
    /// Evaluates `spec` at the given gradient and curl frequencies.
    pub fn from_spec(spec: &ResponseSpec, gradient_freqs: &[f64], curl_freqs: &[f64]) -> Self {
        DesignTargets {
            g0: spec.g0,
            gradient: gradient_freqs.iter().map(|&l| (l, spec.gradient.eval(l))).collect(),
            curl: curl_freqs.iter().map(|&l| (l, spec.curl.eval(l))).collect(),
        }
    }

    /// Same response value on every gradient (resp. curl) frequency.
    pub fn constant(g0: f64, gradient_freqs: &[f64], g_gradient: f64, curl_freqs: &[f64], g_curl: f64) -> Self {
        DesignTargets {
            g0,
            gradient: gradient_freqs.iter().map(|&l| (l, g_gradient)).collect(),
            curl: curl_freqs.iter().map(|&l| (l, g_curl)).collect(),
        }
    }

    fn rhs(&self) -> DVector<f64> {
        let mut g = vec![self.g0];
        g.extend(self.gradient.iter().map(|p| p.1));
        g.extend(self.curl.iter().map(|p| p.1));
        DVector::from_vec(g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DesignWarning {
    /// Raw (unscaled) system matrix condition number exceeded [`ILL_CONDITIONED`].
    IllConditioned { condition: f64 },
    /// A filter order exceeds the number of distinct frequencies it has to fit.
    OrderExceedsDistinct { order: usize, distinct: usize },
}

/// Result of a least-squares design.
#[derive(Debug, Clone, PartialEq)]
pub struct LsDesign {
    pub coefficients: FilterCoefficients,
    /// `||A c - g||_2` of the joint system.
    pub residual: f64,
    /// Condition number of the unscaled system matrix.
    pub condition: f64,
    pub warnings: Vec<DesignWarning>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DesignMode {
    Joint,
    Decoupled,
}

fn powers(lambda: f64, order: usize) -> impl Iterator<Item = f64> {
    (1..=order).scan(1.0, move |p, _| {
        *p *= lambda;
        Some(*p)
    })
}

/// The joint system matrix: an all-ones column, then the gradient and curl Vandermonde blocks.
pub fn joint_system(targets: &DesignTargets, lower_order: usize, upper_order: usize) -> DMatrix<f64> {
    let rows = 1 + targets.gradient.len() + targets.curl.len();
    let mut a = DMatrix::zeros(rows, 1 + lower_order + upper_order);
    a[(0, 0)] = 1.0;
    for (i, &(l, _)) in targets.gradient.iter().enumerate() {
        a[(1 + i, 0)] = 1.0;
        for (j, p) in powers(l, lower_order).enumerate() {
            a[(1 + i, 1 + j)] = p;
        }
    }
    let off = 1 + targets.gradient.len();
    for (i, &(l, _)) in targets.curl.iter().enumerate() {
        a[(off + i, 0)] = 1.0;
        for (j, p) in powers(l, upper_order).enumerate() {
            a[(off + i, 1 + lower_order + j)] = p;
        }
    }
    a
}

fn condition_number(a: &DMatrix<f64>) -> f64 {
    if a.is_empty() {
        return 1.0;
    }
    let sv = a.clone().singular_values();
    let (max, min) = (sv.max(), sv.min());
    if min > 0.0 {
        max / min
    } else {
        f64::INFINITY
    }
}

/// Rank-revealing least squares with unit-norm column scaling.
fn scaled_lstsq(a: &DMatrix<f64>, b: &DVector<f64>) -> DVector<f64> {
    let n = a.ncols();
    if n == 0 {
        return DVector::zeros(0);
    }
    let scales: Vec<f64> = (0..n).map(|j| {
        let s = a.column(j).norm();
        if s > 0.0 {
            s
        } else {
            1.0
        }
    }).collect();
    let mut scaled = a.clone();
    for (j, s) in scales.iter().enumerate() {
        scaled.column_mut(j).unscale_mut(*s);
    }
    let svd = scaled.svd(true, true);
    let tol = f64::EPSILON * (a.nrows().max(n) as f64) * svd.singular_values.max();
    let x = svd.solve(b, tol).expect("both factors were computed");
    DVector::from_iterator(n, x.iter().zip(&scales).map(|(v, s)| v / s))
}

fn order_warnings(targets: &DesignTargets, lower_order: usize, upper_order: usize, warnings: &mut Vec<DesignWarning>) {
    if lower_order > targets.gradient.len() {
        warnings.push(DesignWarning::OrderExceedsDistinct { order: lower_order, distinct: targets.gradient.len() });
    }
    if upper_order > targets.curl.len() {
        warnings.push(DesignWarning::OrderExceedsDistinct { order: upper_order, distinct: targets.curl.len() });
    }
}

fn finish(targets: &DesignTargets, coefficients: FilterCoefficients, mut warnings: Vec<DesignWarning>, condition: f64) -> LsDesign {
    let residual = joint_residual(targets, &coefficients);
    if condition > ILL_CONDITIONED {
        warnings.push(DesignWarning::IllConditioned { condition });
    }
    LsDesign { coefficients, residual, condition, warnings }
}

/// `||A c - g||_2` of the joint system for arbitrary coefficients.
pub fn joint_residual(targets: &DesignTargets, c: &FilterCoefficients) -> f64 {
    let mut r = (c.h0 - targets.g0) * (c.h0 - targets.g0);
    for &(l, g) in &targets.gradient {
        let e = c.gradient_response(l) - g;
        r += e * e;
    }
    for &(l, g) in &targets.curl {
        let e = c.curl_response(l) - g;
        r += e * e;
    }
    libm::sqrt(r)
}

fn check_targets(targets: &DesignTargets) -> Result<()> {
    if targets.gradient.is_empty() && targets.curl.is_empty() {
        Err(Error::EmptySpec)
    } else {
        Ok(())
    }
}

/// Joint least-squares design of `(h0, alpha, beta)` over the harmonic, gradient and curl targets.
pub fn ls_joint(targets: &DesignTargets, lower_order: usize, upper_order: usize) -> Result<LsDesign> {
    check_targets(targets)?;
    let a = joint_system(targets, lower_order, upper_order);
    let x = scaled_lstsq(&a, &targets.rhs());
    let coefficients = FilterCoefficients::new(
        x[0],
        x.rows(1, lower_order).iter().copied().collect(),
        x.rows(1 + lower_order, upper_order).iter().copied().collect(),
    );
    let mut warnings = Vec::new();
    order_warnings(targets, lower_order, upper_order, &mut warnings);
    Ok(finish(targets, coefficients, warnings, condition_number(&a)))
}

/// Decoupled design: `h0 = g0`, `alpha = Phi_G^+ (g_G - g0)`, `beta = Phi_C^+ (g_C - g0)`.
pub fn ls_decoupled(targets: &DesignTargets, lower_order: usize, upper_order: usize) -> Result<LsDesign> {
    check_targets(targets)?;
    let side = |points: &[(f64, f64)], order: usize| -> (Vec<f64>, f64) {
        if order == 0 || points.is_empty() {
            return (vec![0.0; order], 1.0);
        }
        let phi = DMatrix::from_fn(points.len(), order, |i, j| libm::pow(points[i].0, (j + 1) as f64));
        let rhs = DVector::from_iterator(points.len(), points.iter().map(|p| p.1 - targets.g0));
        (scaled_lstsq(&phi, &rhs).iter().copied().collect(), condition_number(&phi))
    };
    let (alpha, cond_g) = side(&targets.gradient, lower_order);
    let (beta, cond_c) = side(&targets.curl, upper_order);
    let mut warnings = Vec::new();
    order_warnings(targets, lower_order, upper_order, &mut warnings);
    Ok(finish(targets, FilterCoefficients::new(targets.g0, alpha, beta), warnings, cond_g.max(cond_c)))
}

/// Joint design with tied coefficients `alpha = beta`: a single polynomial in `L_1`.
pub fn ls_tied(targets: &DesignTargets, order: usize) -> Result<LsDesign> {
    check_targets(targets)?;
    let freqs: Vec<(f64, f64)> = targets.gradient.iter().chain(&targets.curl).copied().collect();
    let mut a = DMatrix::zeros(1 + freqs.len(), 1 + order);
    a[(0, 0)] = 1.0;
    for (i, &(l, _)) in freqs.iter().enumerate() {
        a[(1 + i, 0)] = 1.0;
        for (j, p) in powers(l, order).enumerate() {
            a[(1 + i, 1 + j)] = p;
        }
    }
    let x = scaled_lstsq(&a, &targets.rhs());
    let poly: Vec<f64> = x.rows(1, order).iter().copied().collect();
    let coefficients = FilterCoefficients::new(x[0], poly.clone(), poly);
    Ok(finish(targets, coefficients, Vec::new(), condition_number(&a)))
}

/// Power-iteration estimate of the dominant eigenvalue from a seeded Gaussian start.
/// Returns 0 for the zero operator.
pub fn estimate_lambda_max(op: &impl LinearOperator, iterations: usize, seed: u64) -> f64 {
    let n = op.dim();
    if n == 0 {
        return 0.0;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = gaussian_vector(&mut rng, n);
    let nx = norm(&x);
    x.iter_mut().for_each(|v| *v /= nx);
    let mut y = vec![0.0; n];
    for _ in 0..iterations.max(1) {
        op.apply_into(&x, &mut y);
        let ny = norm(&y);
        if ny == 0.0 {
            return 0.0;
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / ny;
        }
    }
    op.apply_into(&x, &mut y);
    dot(&x, &y)
}

/// `m` uniform samples on `[lo, hi]`, endpoints included.
pub fn uniform_grid(lo: f64, hi: f64, m: usize) -> Vec<f64> {
    match m {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..m).map(|i| lo + (hi - lo) * i as f64 / (m - 1) as f64).collect(),
    }
}

/// Grid-based design: `gradient_samples` and `curl_samples` uniform points in the two spec
/// intervals stand in for the unknown eigenvalues of the LS system.
pub fn grid_design(
    spec: &ResponseSpec,
    gradient_samples: usize,
    curl_samples: usize,
    lower_order: usize,
    upper_order: usize,
    mode: DesignMode,
) -> Result<LsDesign> {
    spec.validate()?;
    if gradient_samples < lower_order || curl_samples < upper_order {
        return Err(Error::InvalidParameter("grid needs at least as many samples as the filter order"));
    }
    let qg = uniform_grid(spec.gradient_range.0, spec.gradient_range.1, gradient_samples);
    let qc = uniform_grid(spec.curl_range.0, spec.curl_range.1, curl_samples);
    let targets = DesignTargets::from_spec(spec, &qg, &qc);
    match mode {
        DesignMode::Joint => ls_joint(&targets, lower_order, upper_order),
        DesignMode::Decoupled => ls_decoupled(&targets, lower_order, upper_order),
    }
}

/// Which frequency block a response is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrequencyType {
    Harmonic,
    Gradient,
    Curl,
}

/// `H_l + H_u - g0 I`, with `H_l = c_l0/2 I + sum_{l>=1} c_l P_l(L_{1,l})` on `[0, 2 omega_lower]`
/// and `H_u` likewise on `[0, 2 omega_upper]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevFilter {
    pub g0: f64,
    pub c_lower: Vec<f64>,
    pub c_upper: Vec<f64>,
    pub omega_lower: f64,
    pub omega_upper: f64,
}

/// Default midpoint-rule node count for the coefficient integrals.
pub fn default_quadrature_points(lower_order: usize, upper_order: usize) -> usize {
    256usize.max(8 * lower_order.max(upper_order))
}

/// `c_l = (2/pi) int_0^pi cos(l phi) g(omega (cos phi + 1)) dphi` for `l = 0..=order`, midpoint rule.
pub fn chebyshev_coefficients(g: impl Fn(f64) -> f64, omega: f64, order: usize, nodes: usize) -> Vec<f64> {
    let phis: Vec<f64> = (0..nodes).map(|j| (j as f64 + 0.5) * PI / nodes as f64).collect();
    let samples: Vec<f64> = phis.iter().map(|&p| g(omega * (libm::cos(p) + 1.0))).collect();
    (0..=order)
        .map(|l| {
            let s: f64 = phis.iter().zip(&samples).map(|(&p, &v)| libm::cos(l as f64 * p) * v).sum();
            2.0 * s / nodes as f64
        })
        .collect()
}

/// Shifted-Chebyshev design for a spec with `g_G(0) = g_C(0) = g0`.
///
/// An order of zero on one side keeps that side at the constant `g0`, so the filter reduces to the
/// other series alone.
pub fn chebyshev_design(
    spec: &ResponseSpec,
    lambda_max_gradient: f64,
    lambda_max_curl: f64,
    lower_order: usize,
    upper_order: usize,
    quadrature_points: Option<usize>,
) -> Result<ChebyshevFilter> {
    spec.validate()?;
    let (gg0, gc0) = (spec.gradient.eval(0.0), spec.curl.eval(0.0));
    let tol = 1e-12 * gg0.abs().max(1.0);
    if (gg0 - gc0).abs() > tol {
        return Err(Error::DomainMismatch { gradient: gg0, curl: gc0 });
    }
    if (gg0 - spec.g0).abs() > tol {
        return Err(Error::DomainMismatch { gradient: gg0, curl: spec.g0 });
    }
    let nodes = quadrature_points.unwrap_or_else(|| default_quadrature_points(lower_order, upper_order));
    if nodes == 0 {
        return Err(Error::InvalidParameter("quadrature needs at least one node"));
    }
    let side = |g: &ResponseFn, lambda_max: f64, order: usize| -> Result<(Vec<f64>, f64)> {
        if order == 0 {
            return Ok((vec![2.0 * spec.g0], lambda_max / 2.0));
        }
        if !(lambda_max > 0.0) {
            return Err(Error::InvalidParameter("Chebyshev domain needs lambda_max > 0"));
        }
        let omega = lambda_max / 2.0;
        Ok((chebyshev_coefficients(|l| g.eval(l), omega, order, nodes), omega))
    };
    let (c_lower, omega_lower) = side(&spec.gradient, lambda_max_gradient, lower_order)?;
    let (c_upper, omega_upper) = side(&spec.curl, lambda_max_curl, upper_order)?;
    Ok(ChebyshevFilter { g0: spec.g0, c_lower, c_upper, omega_lower, omega_upper })
}

/// `c_0/2 + sum_{l>=1} c_l T_l((lambda - omega)/omega)`.
pub fn chebyshev_series(c: &[f64], omega: f64, lambda: f64) -> f64 {
    let Some((&c0, rest)) = c.split_first() else {
        return 0.0;
    };
    if rest.is_empty() {
        return c0 / 2.0;
    }
    let x = (lambda - omega) / omega;
    let (mut prev, mut cur) = (1.0, x);
    let mut acc = c0 / 2.0 + rest[0] * x;
    for &cl in &rest[1..] {
        let next = 2.0 * x * cur - prev;
        acc += cl * next;
        prev = cur;
        cur = next;
    }
    acc
}

/// Chebyshev error bounds per block and their maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChebyshevBound {
    pub lower: f64,
    pub upper: f64,
    pub bound: f64,
}

impl ChebyshevFilter {
    pub fn lower_order(&self) -> usize {
        self.c_lower.len().saturating_sub(1)
    }

    pub fn upper_order(&self) -> usize {
        self.c_upper.len().saturating_sub(1)
    }

    /// Identity-term weight of `H_l`: its response on the kernel of `L_{1,l}`.
    pub fn p_lower0(&self) -> f64 {
        chebyshev_series(&self.c_lower, self.omega_lower, 0.0)
    }

    pub fn p_upper0(&self) -> f64 {
        chebyshev_series(&self.c_upper, self.omega_upper, 0.0)
    }

    /// Response of the assembled filter at `lambda` on the given block.
    pub fn response(&self, lambda: f64, kind: FrequencyType) -> f64 {
        match kind {
            FrequencyType::Harmonic => self.p_lower0() + self.p_upper0() - self.g0,
            FrequencyType::Gradient => {
                chebyshev_series(&self.c_lower, self.omega_lower, lambda) + self.p_upper0() - self.g0
            }
            FrequencyType::Curl => chebyshev_series(&self.c_upper, self.omega_upper, lambda) + self.p_lower0() - self.g0,
        }
    }

    /// Applies the filter with the three-term vector recursion on each shift operator.
    pub fn apply(&self, ops: &ShiftOperators, flow: &[f64]) -> Result<Vec<f64>> {
        check_len(ops.dim(), flow.len())?;
        let lower = series_apply(&ops.lower, &self.c_lower, self.omega_lower, flow);
        let upper = series_apply(&ops.upper, &self.c_upper, self.omega_upper, flow);
        Ok(lower.iter().zip(&upper).zip(flow).map(|((a, b), f)| a + b - self.g0 * f).collect())
    }

    /// Dense `H_l + H_u - g0 I` from explicit Chebyshev matrices.
    pub fn to_dense(&self, ops: &ShiftOperators) -> DMatrix<f64> {
        let n = ops.dim();
        let eye = DMatrix::<f64>::identity(n, n);
        let series = |shift: &DMatrix<f64>, c: &[f64], omega: f64| -> DMatrix<f64> {
            let mut h = &eye * (c[0] / 2.0);
            if c.len() == 1 {
                return h;
            }
            let p1 = shift * (1.0 / omega) - &eye;
            let (mut prev, mut cur) = (eye.clone(), p1.clone());
            h += &cur * c[1];
            for &cl in &c[2..] {
                let next = &p1 * &cur * 2.0 - &prev;
                h += &next * cl;
                prev = cur;
                cur = next;
            }
            h
        };
        series(&ops.lower.to_dense(), &self.c_lower, self.omega_lower)
            + series(&ops.upper.to_dense(), &self.c_upper, self.omega_upper)
            - &eye * self.g0
    }

    /// Sup of the gradient and curl response errors over uniform grids of `sample_count` points
    /// on `[0, 2 omega]`. These bound the operator error `||G - H||_2` up to grid resolution.
    pub fn error_bound(&self, spec: &ResponseSpec, sample_count: usize) -> ChebyshevBound {
        let sup = |lambda_max: f64, kind: FrequencyType, g: &ResponseFn| {
            uniform_grid(0.0, lambda_max, sample_count.max(2))
                .into_iter()
                .map(|l| (self.response(l, kind) - g.eval(l)).abs())
                .fold(0.0, f64::max)
        };
        let lower = sup(2.0 * self.omega_lower, FrequencyType::Gradient, &spec.gradient);
        let upper = sup(2.0 * self.omega_upper, FrequencyType::Curl, &spec.curl);
        ChebyshevBound { lower, upper, bound: lower.max(upper) }
    }
}

fn series_apply(shift: &crate::linalg::CsrMatrix, c: &[f64], omega: f64, flow: &[f64]) -> Vec<f64> {
    let mut acc: Vec<f64> = flow.iter().map(|x| x * c[0] / 2.0).collect();
    if c.len() == 1 {
        return acc;
    }
    let n = flow.len();
    let mut tmp = vec![0.0; n];
    // P1 w = L w / omega - w
    let mut p1 = |w: &[f64], out: &mut [f64]| {
        shift.apply_into(w, &mut tmp);
        for i in 0..n {
            out[i] = tmp[i] / omega - w[i];
        }
    };
    let mut prev = flow.to_vec();
    let mut cur = vec![0.0; n];
    p1(&prev, &mut cur);
    acc.iter_mut().zip(&cur).for_each(|(a, w)| *a += c[1] * w);
    let mut next = vec![0.0; n];
    for &cl in &c[2..] {
        p1(&cur, &mut next);
        for i in 0..n {
            next[i] = 2.0 * next[i] - prev[i];
            acc[i] += cl * next[i];
        }
        core::mem::swap(&mut prev, &mut cur);
        core::mem::swap(&mut cur, &mut next);
    }
    acc
}

/// Convenience wrapper: `filter` applied on the Hodge Laplacians of `sc`.
pub fn chebyshev_apply(filter: &ChebyshevFilter, sc: &crate::complex::SimplicialComplex, flow: &[f64]) -> Result<Vec<f64>> {
    check_len(sc.edge_count(), flow.len())?;
    filter.apply(&ShiftOperators::new(sc), flow)
}

/// `U_1 diag(g) U_1^T` for the response `spec` on the eigenvalues of `spectrum`.
pub fn desired_operator(spectrum: &HodgeSpectrum, spec: &ResponseSpec) -> DMatrix<f64> {
    let u = spectrum.basis();
    let mut g = vec![spec.g0; spectrum.harmonic_dim()];
    g.extend(spectrum.gradient_values().iter().map(|&l| spec.gradient.eval(l)));
    g.extend(spectrum.curl_values().iter().map(|&l| spec.curl.eval(l)));
    &u * DMatrix::from_diagonal(&DVector::from_vec(g)) * u.transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use approx::assert_abs_diff_eq;

    fn toy_distinct() -> (Vec<f64>, Vec<f64>, HodgeSpectrum) {
        let spec = HodgeSpectrum::new(&fixtures::toy_complex()).unwrap();
        let (g, c) = spec.distinct_frequencies(0.0);
        (g, c, spec)
    }

    #[test]
    fn response_families() {
        assert_eq!(ResponseFn::Constant(2.0).eval(7.0), 2.0);
        let step = ResponseFn::Step { cutoff: 1.0, low: 0.0, high: 1.0 };
        assert_eq!((step.eval(0.5), step.eval(1.0)), (0.0, 1.0));
        assert_abs_diff_eq!(ResponseFn::Logistic { k: 100.0, midpoint: 0.01 }.eval(0.01), 0.5);
        assert_abs_diff_eq!(ResponseFn::InverseShift { gamma: 0.01, scale: 1.0 }.eval(0.99), 1.0);
        let t = ResponseFn::Table(vec![(2.0, 4.0), (0.0, 0.0)]);
        assert_eq!((t.eval(0.0), t.eval(1.0), t.eval(3.0)), (0.0, 2.0, 4.0));
    }

    #[test]
    fn joint_design_extracts_gradient_exactly() {
        let (g, c, spec) = toy_distinct();
        let targets = DesignTargets::constant(0.0, &g, 1.0, &c, 0.0);
        let d = ls_joint(&targets, g.len(), c.len()).unwrap();
        assert!(d.residual < 1e-8, "residual {}", d.residual);
        let h = d.coefficients.to_dense(&ShiftOperators::new(&fixtures::toy_complex()));
        assert!((h - spec.gradient_projector()).norm() < 1e-6);
    }

    #[test]
    fn constant_targets_give_constant_filter() {
        let (g, c, _) = toy_distinct();
        let targets = DesignTargets::constant(0.7, &g, 0.7, &c, 0.7);
        for (l1, l2) in [(0, 0), (2, 1), (6, 3)] {
            for d in [ls_joint(&targets, l1, l2).unwrap(), ls_decoupled(&targets, l1, l2).unwrap()] {
                assert_abs_diff_eq!(d.coefficients.h0, 0.7, epsilon = 1e-10);
                assert!(d.coefficients.alpha.iter().chain(&d.coefficients.beta).all(|x| x.abs() < 1e-8));
                assert!(d.residual < 1e-9);
            }
        }
    }

    #[test]
    fn empty_targets_are_rejected() {
        let t = DesignTargets { g0: 1.0, gradient: vec![], curl: vec![] };
        assert_eq!(ls_joint(&t, 0, 0).unwrap_err(), Error::EmptySpec);
        assert_eq!(ls_decoupled(&t, 0, 0).unwrap_err(), Error::EmptySpec);
    }

    #[test]
    fn random_square_targets_fit_exactly_and_decoupled_agrees() {
        let (g, c, _) = toy_distinct();
        let vals = [0.3, -1.2, 0.8, 2.0, 0.1, -0.4, 1.5, 0.9, -0.7];
        let targets = DesignTargets {
            g0: 0.25,
            gradient: g.iter().zip(&vals[..6]).map(|(&l, &v)| (l, v)).collect(),
            curl: c.iter().zip(&vals[6..]).map(|(&l, &v)| (l, v)).collect(),
        };
        let j = ls_joint(&targets, 6, 3).unwrap();
        let d = ls_decoupled(&targets, 6, 3).unwrap();
        assert!(j.residual < 1e-8);
        assert_abs_diff_eq!(j.coefficients.h0, d.coefficients.h0, epsilon = 1e-8);
        for (a, b) in j.coefficients.alpha.iter().chain(&j.coefficients.beta).zip(d.coefficients.alpha.iter().chain(&d.coefficients.beta)) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-8);
        }
        // underdetermined order: decoupled never beats joint
        let j3 = ls_joint(&targets, 3, 2).unwrap();
        let d3 = ls_decoupled(&targets, 3, 2).unwrap();
        assert!(d3.residual >= j3.residual - 1e-12);
    }

    #[test]
    fn order_above_distinct_count_warns() {
        let (g, c, _) = toy_distinct();
        let targets = DesignTargets::constant(0.0, &g, 1.0, &c, 0.0);
        let d = ls_joint(&targets, 7, 3).unwrap();
        assert!(d.warnings.contains(&DesignWarning::OrderExceedsDistinct { order: 7, distinct: 6 }));
    }

    #[test]
    fn power_iteration() {
        let eye = DMatrix::<f64>::identity(4, 4);
        assert_abs_diff_eq!(estimate_lambda_max(&eye, 1, 3), 1.0, epsilon = 1e-12);
        let d = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0, 5.0]));
        assert_abs_diff_eq!(estimate_lambda_max(&d, 100, 3), 5.0, epsilon = 1e-6);
        assert_eq!(estimate_lambda_max(&DMatrix::<f64>::zeros(3, 3), 10, 0), 0.0);
        assert_eq!(estimate_lambda_max(&d, 10, 42), estimate_lambda_max(&d, 10, 42));
    }

    #[test]
    fn grid_design_on_constant_spec() {
        let spec = ResponseSpec::uniform(ResponseFn::Constant(3.0), 5.0);
        let d = grid_design(&spec, 10, 10, 4, 4, DesignMode::Joint).unwrap();
        assert_abs_diff_eq!(d.coefficients.h0, 3.0, epsilon = 1e-9);
        assert!(d.coefficients.alpha.iter().all(|x| x.abs() < 1e-8));
        assert!(grid_design(&spec, 3, 10, 4, 4, DesignMode::Joint).is_err());
    }

    #[test]
    fn uniform_grid_endpoints() {
        assert_eq!(uniform_grid(0.0, 1.0, 3), vec![0.0, 0.5, 1.0]);
        assert_eq!(uniform_grid(0.2, 1.0, 1), vec![0.2]);
    }

    #[test]
    fn chebyshev_of_constant() {
        let spec = ResponseSpec::uniform(ResponseFn::Constant(1.5), 4.0);
        let f = chebyshev_design(&spec, 4.0, 4.0, 6, 3, None).unwrap();
        assert_abs_diff_eq!(f.c_lower[0], 3.0, epsilon = 1e-12);
        assert!(f.c_lower[1..].iter().all(|c| c.abs() < 1e-12));
        for l in [0.0, 1.0, 3.9] {
            for kind in [FrequencyType::Harmonic, FrequencyType::Gradient, FrequencyType::Curl] {
                assert_abs_diff_eq!(f.response(l, kind), 1.5, epsilon = 1e-12);
            }
        }
        assert!(f.error_bound(&spec, 200).bound < 1e-12);
    }

    #[test]
    fn chebyshev_of_identity_function() {
        // g(lambda) = lambda on [0, 2 omega]: c0 = 2 omega, c1 = omega
        let omega = 1.7;
        let c = chebyshev_coefficients(|l| l, omega, 5, 256);
        assert_abs_diff_eq!(c[0], 2.0 * omega, epsilon = 1e-12);
        assert_abs_diff_eq!(c[1], omega, epsilon = 1e-12);
        assert!(c[2..].iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn mismatched_zero_responses_are_rejected() {
        let spec = ResponseSpec {
            g0: 1.0,
            gradient: ResponseFn::Constant(1.0),
            curl: ResponseFn::Constant(0.5),
            gradient_range: (0.0, 1.0),
            curl_range: (0.0, 1.0),
        };
        assert!(matches!(chebyshev_design(&spec, 1.0, 1.0, 3, 3, None), Err(Error::DomainMismatch { .. })));
    }

    #[test]
    fn chebyshev_apply_matches_dense_and_response() {
        let sc = fixtures::toy_complex();
        let ops = ShiftOperators::new(&sc);
        let spectrum = HodgeSpectrum::new(&sc).unwrap();
        let spec = ResponseSpec::uniform(ResponseFn::InverseShift { gamma: 1.0, scale: 1.0 }, 5.5);
        let f = chebyshev_design(&spec, 5.5, 4.5, 7, 4, None).unwrap();
        let flow: Vec<f64> = (0..10).map(|i| (i as f64 * 1.3).sin()).collect();
        let dense = f.to_dense(&ops);
        let via_dense = &dense * DVector::from_vec(flow.clone());
        for (a, b) in f.apply(&ops, &flow).unwrap().iter().zip(via_dense.iter()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-9);
        }
        let u = spectrum.basis();
        let diag = u.transpose() * &dense * &u;
        let mut i = 0;
        for _ in 0..spectrum.harmonic_dim() {
            assert_abs_diff_eq!(diag[(i, i)], f.response(0.0, FrequencyType::Harmonic), epsilon = 1e-9);
            i += 1;
        }
        for &l in spectrum.gradient_values() {
            assert_abs_diff_eq!(diag[(i, i)], f.response(l, FrequencyType::Gradient), epsilon = 1e-9);
            i += 1;
        }
        for &l in spectrum.curl_values() {
            assert_abs_diff_eq!(diag[(i, i)], f.response(l, FrequencyType::Curl), epsilon = 1e-9);
            i += 1;
        }
    }

    #[test]
    fn odd_order_identity_weight_is_the_value_at_zero() {
        let f = ChebyshevFilter { g0: 0.0, c_lower: vec![2.0, 0.5, 0.25, 0.125], c_upper: vec![0.0], omega_lower: 1.0, omega_upper: 1.0 };
        assert_abs_diff_eq!(f.p_lower0(), 1.0 - 0.5 + 0.25 - 0.125);
    }
}
