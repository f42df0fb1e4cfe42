//! Simplicial convolutional filters: shift-and-sum application, the round-based distributed
//! simulation, and frequency responses.

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DMatrix;

use crate::complex::SimplicialComplex;
use crate::error::{check_len, Result};
use crate::linalg::{CsrMatrix, LinearOperator};
use crate::spectral::{edge_laplacians_sparse, normalized_hodge_laplacian, HodgeSpectrum};

/// The pair of shift operators a filter is a polynomial in.
///
/// Usually `(L_{1,l}, L_{1,u})` of a complex; [`ShiftOperators::normalized`] gives the two parts
/// of the normalized Hodge Laplacian instead.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftOperators {
    pub lower: CsrMatrix,
    pub upper: CsrMatrix,
}

impl ShiftOperators {
    pub fn new(sc: &SimplicialComplex) -> Self {
        let (lower, upper) = edge_laplacians_sparse(sc);
        ShiftOperators { lower, upper }
    }

    pub fn normalized(sc: &SimplicialComplex) -> Self {
        let n = normalized_hodge_laplacian(sc);
        ShiftOperators { lower: n.lower, upper: n.upper }
    }

    pub fn dim(&self) -> usize {
        self.lower.nrows()
    }

    /// Max off-diagonal row counts `(D_l, D_u)`: the most neighbours any edge exchanges with.
    pub fn max_degrees(&self) -> (usize, usize) {
        (self.lower.max_off_diagonal_degree(), self.upper.max_off_diagonal_degree())
    }
}

/// `(h0, alpha, beta)` of `H = h0 I + sum alpha_l L_l^l + sum beta_l L_u^l`.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterCoefficients {
    pub h0: f64,
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
}

/// Filter response on each frequency block; one entry per eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyResponse {
    pub at_harmonic: f64,
    pub at_gradient: Vec<(f64, f64)>,
    pub at_curl: Vec<(f64, f64)>,
}

impl FilterCoefficients {
    pub fn new(h0: f64, alpha: Vec<f64>, beta: Vec<f64>) -> Self {
        FilterCoefficients { h0, alpha, beta }
    }

    pub fn identity() -> Self {
        Self::new(1.0, Vec::new(), Vec::new())
    }

    pub fn lower_order(&self) -> usize {
        self.alpha.len()
    }

    pub fn upper_order(&self) -> usize {
        self.beta.len()
    }

    pub fn is_finite(&self) -> bool {
        self.h0.is_finite() && self.alpha.iter().chain(&self.beta).all(|c| c.is_finite())
    }

    /// `h0 + sum alpha_l lambda^l`.
    pub fn gradient_response(&self, lambda: f64) -> f64 {
        self.h0 + power_series(&self.alpha, lambda)
    }

    /// `h0 + sum beta_l lambda^l`.
    pub fn curl_response(&self, lambda: f64) -> f64 {
        self.h0 + power_series(&self.beta, lambda)
    }

    pub fn frequency_response(&self, spectrum: &HodgeSpectrum) -> FrequencyResponse {
        FrequencyResponse {
            at_harmonic: self.h0,
            at_gradient: spectrum.gradient_values().iter().map(|&l| (l, self.gradient_response(l))).collect(),
            at_curl: spectrum.curl_values().iter().map(|&l| (l, self.curl_response(l))).collect(),
        }
    }

    /// Applies the filter by repeated shifting, never forming matrix powers.
    pub fn apply(&self, ops: &ShiftOperators, flow: &[f64]) -> Result<Vec<f64>> {
        check_len(ops.dim(), flow.len())?;
        let mut out: Vec<f64> = flow.iter().map(|x| self.h0 * x).collect();
        accumulate_powers(&ops.lower, &self.alpha, flow, &mut out);
        accumulate_powers(&ops.upper, &self.beta, flow, &mut out);
        Ok(out)
    }

    /// Dense `H` built from explicit matrix powers.
    pub fn to_dense(&self, ops: &ShiftOperators) -> DMatrix<f64> {
        let n = ops.dim();
        let mut h = DMatrix::identity(n, n) * self.h0;
        for (shift, coeffs) in [(&ops.lower, &self.alpha), (&ops.upper, &self.beta)] {
            let s = shift.to_dense();
            let mut power = DMatrix::identity(n, n);
            for c in coeffs {
                power = &power * &s;
                h += &power * *c;
            }
        }
        h
    }
}

fn power_series(coeffs: &[f64], lambda: f64) -> f64 {
    // Horner on sum_{l>=1} c_l lambda^l
    coeffs.iter().rev().fold(0.0, |acc, c| (acc + c) * lambda)
}

fn accumulate_powers(shift: &CsrMatrix, coeffs: &[f64], flow: &[f64], out: &mut [f64]) {
    if coeffs.is_empty() {
        return;
    }
    let mut cur = flow.to_vec();
    let mut next = vec![0.0; flow.len()];
    for c in coeffs {
        shift.apply_into(&cur, &mut next);
        core::mem::swap(&mut cur, &mut next);
        for (o, x) in out.iter_mut().zip(&cur) {
            *o += c * x;
        }
    }
}

/// `L_{1,l} f` by one sparse product.
pub fn shift_lower(sc: &SimplicialComplex, flow: &[f64]) -> Result<Vec<f64>> {
    check_len(sc.edge_count(), flow.len())?;
    Ok(ShiftOperators::new(sc).lower.apply(flow))
}

/// `L_{1,u} f` by one sparse product.
pub fn shift_upper(sc: &SimplicialComplex, flow: &[f64]) -> Result<Vec<f64>> {
    check_len(sc.edge_count(), flow.len())?;
    Ok(ShiftOperators::new(sc).upper.apply(flow))
}

/// Applies `coeffs` to `flow` on the Hodge Laplacians of `sc`.
pub fn apply(sc: &SimplicialComplex, coeffs: &FilterCoefficients, flow: &[f64]) -> Result<Vec<f64>> {
    check_len(sc.edge_count(), flow.len())?;
    coeffs.apply(&ShiftOperators::new(sc), flow)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftKind {
    Lower,
    Upper,
}

/// One synchronous round: which shift ran, how many values each edge received, and the state after.
#[derive(Debug, Clone, PartialEq)]
pub struct Round {
    pub kind: ShiftKind,
    pub messages_per_edge: Vec<usize>,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistributedShift {
    /// `L_{1,l}^{rounds_lower} f`.
    pub lower: Vec<f64>,
    /// `L_{1,u}^{rounds_upper} f`.
    pub upper: Vec<f64>,
    pub rounds: Vec<Round>,
}

impl DistributedShift {
    pub fn total_messages(&self) -> usize {
        self.rounds.iter().flat_map(|r| r.messages_per_edge.iter()).sum()
    }

    pub fn max_messages_per_edge(&self, kind: ShiftKind) -> usize {
        self.rounds
            .iter()
            .filter(|r| r.kind == kind)
            .flat_map(|r| r.messages_per_edge.iter().copied())
            .max()
            .unwrap_or(0)
    }
}

/// Per-edge local view: neighbour index and the coupling weight derived from shared faces.
struct LocalView {
    self_weight: f64,
    neighbors: Vec<(usize, f64)>,
}

fn lower_views(sc: &SimplicialComplex) -> Vec<LocalView> {
    // B1[v, e] for a vertex v of edge e: -1 at the tail, +1 at the head
    let sign_at = |e: usize, v: usize| if sc.edges()[e][0] == v { -1.0 } else { 1.0 };
    (0..sc.edge_count())
        .map(|i| {
            let neighbors = sc
                .lower_neighborhood(1, i)
                .expect("valid edge")
                .into_iter()
                .map(|j| {
                    let w = sc.edges()[i]
                        .iter()
                        .filter(|v| sc.edges()[j].contains(v))
                        .map(|&v| sign_at(i, v) * sign_at(j, v))
                        .sum();
                    (j, w)
                })
                .collect();
            LocalView { self_weight: 2.0, neighbors }
        })
        .collect()
}

fn upper_views(sc: &SimplicialComplex) -> Vec<LocalView> {
    let b2 = sc.incidence(2).expect("order 2");
    (0..sc.edge_count())
        .map(|i| {
            let cofaces = sc.triangles_at_edge(i);
            let neighbors = sc
                .upper_neighborhood(1, i)
                .expect("valid edge")
                .into_iter()
                .map(|j| {
                    let w = cofaces.iter().map(|&t| f64::from(b2.get(i, t)) * f64::from(b2.get(j, t))).sum();
                    (j, w)
                })
                .collect();
            LocalView { self_weight: cofaces.len() as f64, neighbors }
        })
        .collect()
}

fn run_rounds(views: &[LocalView], kind: ShiftKind, rounds: usize, flow: &[f64], trace: &mut Vec<Round>) -> Vec<f64> {
    let mut state = flow.to_vec();
    for _ in 0..rounds {
        let mut messages_per_edge = Vec::with_capacity(views.len());
        let next: Vec<f64> = views
            .iter()
            .enumerate()
            .map(|(i, view)| {
                messages_per_edge.push(view.neighbors.len());
                view.self_weight * state[i] + view.neighbors.iter().map(|&(j, w)| w * state[j]).sum::<f64>()
            })
            .collect();
        state = next;
        trace.push(Round { kind, messages_per_edge, values: state.clone() });
    }
    state
}

/// Simulates synchronous message passing where each edge only reads the values of its lower
/// (resp. upper) neighbours. After the rounds, `lower = L_{1,l}^{rounds_lower} f` and
/// `upper = L_{1,u}^{rounds_upper} f`.
pub fn distributed_shift(
    sc: &SimplicialComplex,
    flow: &[f64],
    rounds_lower: usize,
    rounds_upper: usize,
) -> Result<DistributedShift> {
    check_len(sc.edge_count(), flow.len())?;
    let mut rounds = Vec::with_capacity(rounds_lower + rounds_upper);
    let lower = run_rounds(&lower_views(sc), ShiftKind::Lower, rounds_lower, flow, &mut rounds);
    let upper = run_rounds(&upper_views(sc), ShiftKind::Upper, rounds_upper, flow, &mut rounds);
    Ok(DistributedShift { lower, upper, rounds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::spectral::hodge_laplacian;
    use approx::assert_abs_diff_eq;
    use nalgebra::DVector;

    fn indicator(n: usize, i: usize) -> Vec<f64> {
        let mut f = vec![0.0; n];
        f[i] = 1.0;
        f
    }

    #[test]
    fn shifts_annihilate_harmonic_flow() {
        let sc = fixtures::toy_complex();
        let spec = HodgeSpectrum::new(&sc).unwrap();
        let h: Vec<f64> = spec.harmonic_basis().column(0).iter().copied().collect();
        assert!(shift_lower(&sc, &h).unwrap().iter().all(|x| x.abs() < 1e-12));
        assert!(shift_upper(&sc, &h).unwrap().iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn lower_shift_of_indicator_stays_local() {
        let sc = fixtures::toy_complex();
        let i = sc.edge_index(4, 5).unwrap();
        let out = shift_lower(&sc, &indicator(10, i)).unwrap();
        let mut allowed = sc.lower_neighborhood(1, i).unwrap();
        allowed.push(i);
        for (j, v) in out.iter().enumerate() {
            assert_eq!(*v != 0.0, allowed.contains(&j), "edge {j}");
        }
    }

    #[test]
    fn shifts_match_dense_laplacians() {
        let sc = fixtures::toy_complex();
        let lap = hodge_laplacian(&sc, 1).unwrap();
        let f: Vec<f64> = (0..10).map(|i| (i as f64 * 0.7).sin()).collect();
        let fv = DVector::from_vec(f.clone());
        for (a, b) in shift_lower(&sc, &f).unwrap().iter().zip((&lap.lower * &fv).iter()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
        for (a, b) in shift_upper(&sc, &f).unwrap().iter().zip((&lap.upper * &fv).iter()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
        assert!(shift_lower(&sc, &[1.0]).is_err());
    }

    #[test]
    fn trivial_filters() {
        let sc = fixtures::toy_complex();
        let f: Vec<f64> = (0..10).map(|i| i as f64 - 4.5).collect();
        assert_eq!(apply(&sc, &FilterCoefficients::identity(), &f).unwrap(), f);
        let one_lower = FilterCoefficients::new(0.0, vec![1.0], vec![]);
        assert_eq!(apply(&sc, &one_lower, &f).unwrap(), shift_lower(&sc, &f).unwrap());
    }

    #[test]
    fn apply_matches_dense_polynomial() {
        let sc = fixtures::toy_complex();
        let ops = ShiftOperators::new(&sc);
        let coeffs = FilterCoefficients::new(0.3, vec![0.5, -0.2, 0.01], vec![-0.4, 0.07]);
        let f: Vec<f64> = (0..10).map(|i| (i as f64).cos()).collect();
        let dense = coeffs.to_dense(&ops) * DVector::from_vec(f.clone());
        for (a, b) in coeffs.apply(&ops, &f).unwrap().iter().zip(dense.iter()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-10);
        }
    }

    #[test]
    fn frequency_response_matches_diagonalization() {
        let sc = fixtures::toy_complex();
        let spec = HodgeSpectrum::new(&sc).unwrap();
        let coeffs = FilterCoefficients::new(0.7, vec![0.2, -0.05], vec![0.1, 0.02, -0.01]);
        let u = spec.basis();
        let diag = u.transpose() * coeffs.to_dense(&ShiftOperators::new(&sc)) * &u;
        let resp = coeffs.frequency_response(&spec);
        let mut expected = vec![resp.at_harmonic; spec.harmonic_dim()];
        expected.extend(resp.at_gradient.iter().map(|p| p.1));
        expected.extend(resp.at_curl.iter().map(|p| p.1));
        for (i, e) in expected.iter().enumerate() {
            assert_abs_diff_eq!(diag[(i, i)], *e, epsilon = 1e-10);
        }
        let identity = FilterCoefficients::identity().frequency_response(&spec);
        assert!(identity.at_gradient.iter().chain(&identity.at_curl).all(|p| p.1 == 1.0));
    }

    #[test]
    fn tied_coefficients_give_identical_response_functions() {
        let c = FilterCoefficients::new(0.1, vec![1.0, -0.3, 0.2], vec![1.0, -0.3, 0.2]);
        for lam in [0.0, 0.5, 2.0, 3.3] {
            assert_eq!(c.gradient_response(lam), c.curl_response(lam));
        }
    }

    #[test]
    fn distributed_zero_rounds() {
        let sc = fixtures::toy_complex();
        let f = indicator(10, 3);
        let d = distributed_shift(&sc, &f, 0, 0).unwrap();
        assert_eq!((d.lower.clone(), d.upper.clone()), (f.clone(), f));
        assert_eq!(d.total_messages(), 0);
    }

    #[test]
    fn distributed_two_lower_rounds_match_dense() {
        let sc = fixtures::toy_complex();
        let lap = hodge_laplacian(&sc, 1).unwrap();
        let i = sc.edge_index(4, 5).unwrap();
        let f = indicator(10, i);
        let d = distributed_shift(&sc, &f, 2, 2).unwrap();
        let fv = DVector::from_vec(f);
        assert_eq!(d.lower.as_slice(), (&lap.lower * &lap.lower * &fv).as_slice());
        assert_eq!(d.upper.as_slice(), (&lap.upper * &lap.upper * &fv).as_slice());
        let (dl, du) = ShiftOperators::new(&sc).max_degrees();
        assert!(d.max_messages_per_edge(ShiftKind::Lower) <= dl);
        assert!(d.max_messages_per_edge(ShiftKind::Upper) <= du);
        let per_round: usize = (0..10).map(|e| sc.lower_neighborhood(1, e).unwrap().len()).sum::<usize>()
            + (0..10).map(|e| sc.upper_neighborhood(1, e).unwrap().len()).sum::<usize>();
        assert_eq!(d.total_messages(), 2 * per_round);
    }
}
