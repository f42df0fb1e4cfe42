//! Hodge Laplacians, their eigendecomposition into harmonic, gradient and curl blocks, the
//! simplicial Fourier transform and the Hodge decomposition of edge flows.
//!
//! Gradient eigenpairs come from the lower Laplacian `L_{1,l} = B1^T B1` and curl eigenpairs from
//! the upper Laplacian `L_{1,u} = B2 B2^T`. Since `L_{1,l} L_{1,u} = 0`, their nonzero eigenvectors
//! are orthogonal and together with the kernel of `L_1` form an eigenbasis of `L_1`. A frequency
//! shared by both blocks is therefore still attributed to the correct block.

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::complex::SimplicialComplex;
use crate::error::{check_len, Error, Result};
use crate::linalg::CsrMatrix;

/// Relative threshold separating zero from nonzero eigenvalues: `zero_tol = ZERO_TOL_REL * lambda_max(L_1)`.
pub const ZERO_TOL_REL: f64 = 1e-8;

/// Lower, upper and total Hodge Laplacians of one order, dense.
#[derive(Debug, Clone, PartialEq)]
pub struct HodgeLaplacians {
    pub lower: DMatrix<f64>,
    pub upper: DMatrix<f64>,
    pub total: DMatrix<f64>,
}

/// `L_k = B_k^T B_k + B_{k+1} B_{k+1}^T` for `k` in `{0, 1, 2}`.
pub fn hodge_laplacian(sc: &SimplicialComplex, k: usize) -> Result<HodgeLaplacians> {
    let n = sc.count(k)?;
    let lower = match k {
        0 => DMatrix::zeros(n, n),
        _ => {
            let b = sc.incidence(k)?.to_dense();
            b.transpose() * b
        }
    };
    let upper = match k {
        2 => DMatrix::zeros(n, n),
        _ => {
            let b = sc.incidence(k + 1)?.to_dense();
            &b * b.transpose()
        }
    };
    let total = &lower + &upper;
    Ok(HodgeLaplacians { lower, upper, total })
}

/// Sparse `(L_{1,l}, L_{1,u})` of the edge space.
pub fn edge_laplacians_sparse(sc: &SimplicialComplex) -> (CsrMatrix, CsrMatrix) {
    let b1 = sc.incidence(1).expect("order 1").to_csr();
    let b2 = sc.incidence(2).expect("order 2").to_csr();
    (b1.transpose().matmul(&b1), b2.matmul(&b2.transpose()))
}

/// The normalized 1-Hodge Laplacian
/// `L_{1,n} = D2 B1^T D1^{-1} B1 + B2 D3 B2^T D2^{-1}`, with
/// `D2 = max(diag(|B2| 1), I)`, `D1 = 2 diag(|B1| D2 1)` and `D3 = I / 3`.
///
/// The operator is not symmetric, but `D2^{-1/2} L_{1,n} D2^{1/2}` is, so its eigenvalues are real.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedHodgeLaplacian {
    pub lower: CsrMatrix,
    pub upper: CsrMatrix,
    /// Diagonal of `D2`.
    pub edge_weights: Vec<f64>,
}

pub fn normalized_hodge_laplacian(sc: &SimplicialComplex) -> NormalizedHodgeLaplacian {
    let b1 = sc.incidence(1).expect("order 1");
    let b2 = sc.incidence(2).expect("order 2");
    let d2: Vec<f64> = (0..sc.edge_count()).map(|e| (sc.triangles_at_edge(e).len() as f64).max(1.0)).collect();
    let mut d1 = vec![0.0; sc.vertex_count()];
    for (v, e, _) in b1.entries() {
        d1[v] += d2[e];
    }
    let d1_inv: Vec<f64> = d1.iter().map(|&d| if d > 0.0 { 1.0 / (2.0 * d) } else { 0.0 }).collect();
    let d2_inv: Vec<f64> = d2.iter().map(|d| 1.0 / d).collect();
    let ones_e = vec![1.0; sc.edge_count()];
    let ones_t = vec![1.0; sc.triangle_count()];

    let b1 = b1.to_csr();
    let b1t = b1.transpose();
    // D2 B1^T D1^{-1} B1
    let lower = b1t.scale(&d2, &d1_inv).matmul(&b1);
    // B2 D3 B2^T D2^{-1}
    let b2 = b2.to_csr();
    let third = vec![1.0 / 3.0; sc.triangle_count()];
    let upper = b2.scale(&ones_e, &third).matmul(&b2.transpose().scale(&ones_t, &d2_inv));
    NormalizedHodgeLaplacian { lower, upper, edge_weights: d2 }
}

impl NormalizedHodgeLaplacian {
    pub fn dim(&self) -> usize {
        self.edge_weights.len()
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        self.lower.to_dense() + self.upper.to_dense()
    }

    /// `D2^{-1/2} M D2^{1/2}` of a dense operator `M` in the edge space.
    pub fn symmetrize(&self, m: &DMatrix<f64>) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |i, j| m[(i, j)] * libm::sqrt(self.edge_weights[j] / self.edge_weights[i]))
    }

    /// Real eigenvalues of `L_{1,n}`, ascending, via its symmetrized form.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let sym = self.symmetrize(&self.to_dense());
        let sym = (&sym + sym.transpose()) * 0.5;
        let eig = SymmetricEigen::try_new(sym, f64::EPSILON, 0).ok_or(Error::EigenFailure)?;
        let mut v: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        v.sort_by(f64::total_cmp);
        Ok(v)
    }
}

/// Simplicial Fourier coefficients of an edge flow, split by block.
#[derive(Debug, Clone, PartialEq)]
pub struct Embeddings {
    pub harmonic: Vec<f64>,
    pub gradient: Vec<f64>,
    pub curl: Vec<f64>,
}

/// Gradient, curl and harmonic parts of an edge flow.
#[derive(Debug, Clone, PartialEq)]
pub struct HodgeComponents {
    pub gradient: Vec<f64>,
    pub curl: Vec<f64>,
    pub harmonic: Vec<f64>,
}

/// Edge-space eigenbasis of `L_1` partitioned into harmonic, gradient and curl blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct HodgeSpectrum {
    harmonic: DMatrix<f64>,
    gradient: DMatrix<f64>,
    curl: DMatrix<f64>,
    gradient_values: Vec<f64>,
    curl_values: Vec<f64>,
    zero_tol: f64,
    lambda_max: f64,
}

fn sorted_eigen(m: DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let n = m.nrows();
    if n == 0 {
        return Ok((Vec::new(), m));
    }
    let eig = SymmetricEigen::try_new(m, f64::EPSILON, 0).ok_or(Error::EigenFailure)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    Ok((values, vectors))
}

/// Columns of `vectors` whose eigenvalue passes `keep`, each with its largest-magnitude entry positive.
fn select(values: &[f64], vectors: &DMatrix<f64>, keep: impl Fn(f64) -> bool) -> (Vec<f64>, DMatrix<f64>) {
    let idx: Vec<usize> = (0..values.len()).filter(|&i| keep(values[i])).collect();
    let mut out = DMatrix::zeros(vectors.nrows(), idx.len());
    for (dst, &src) in idx.iter().enumerate() {
        let mut col = vectors.column(src).clone_owned();
        let pivot = col.iter().copied().fold(0.0f64, |best, x| if x.abs() > best.abs() { x } else { best });
        if pivot < 0.0 {
            col.neg_mut();
        }
        out.set_column(dst, &col);
    }
    (idx.iter().map(|&i| values[i]).collect(), out)
}

impl HodgeSpectrum {
    /// Eigendecomposes the edge space of `sc`.
    pub fn new(sc: &SimplicialComplex) -> Result<Self> {
        let lap = hodge_laplacian(sc, 1)?;
        let (lower_vals, lower_vecs) = sorted_eigen(lap.lower)?;
        let (upper_vals, upper_vecs) = sorted_eigen(lap.upper)?;
        let lambda_max = lower_vals.last().copied().unwrap_or(0.0).max(upper_vals.last().copied().unwrap_or(0.0));
        let zero_tol = ZERO_TOL_REL * lambda_max;
        let (gradient_values, gradient) = select(&lower_vals, &lower_vecs, |l| l > zero_tol);
        let (curl_values, curl) = select(&upper_vals, &upper_vecs, |l| l > zero_tol);
        let (total_vals, total_vecs) = sorted_eigen(lap.total)?;
        let (_, harmonic) = select(&total_vals, &total_vecs, |l| l <= zero_tol);
        Ok(HodgeSpectrum { harmonic, gradient, curl, gradient_values, curl_values, zero_tol, lambda_max })
    }

    pub fn dim(&self) -> usize {
        self.gradient.nrows()
    }

    pub fn harmonic_dim(&self) -> usize {
        self.harmonic.ncols()
    }

    pub fn gradient_dim(&self) -> usize {
        self.gradient.ncols()
    }

    pub fn curl_dim(&self) -> usize {
        self.curl.ncols()
    }

    pub fn harmonic_basis(&self) -> &DMatrix<f64> {
        &self.harmonic
    }

    pub fn gradient_basis(&self) -> &DMatrix<f64> {
        &self.gradient
    }

    pub fn curl_basis(&self) -> &DMatrix<f64> {
        &self.curl
    }

    /// Gradient frequencies, ascending, one per eigenvector.
    pub fn gradient_values(&self) -> &[f64] {
        &self.gradient_values
    }

    pub fn curl_values(&self) -> &[f64] {
        &self.curl_values
    }

    pub fn zero_tol(&self) -> f64 {
        self.zero_tol
    }

    pub fn lambda_max(&self) -> f64 {
        self.lambda_max
    }

    /// `[U_H U_G U_C]`.
    pub fn basis(&self) -> DMatrix<f64> {
        let n = self.dim();
        let mut u = DMatrix::zeros(n, n);
        let (h, g) = (self.harmonic_dim(), self.gradient_dim());
        u.columns_mut(0, h).copy_from(&self.harmonic);
        u.columns_mut(h, g).copy_from(&self.gradient);
        u.columns_mut(h + g, self.curl_dim()).copy_from(&self.curl);
        u
    }

    /// Eigenvalues in the order of [`Self::basis`]: zeros, then gradient, then curl frequencies.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut v = vec![0.0; self.harmonic_dim()];
        v.extend_from_slice(&self.gradient_values);
        v.extend_from_slice(&self.curl_values);
        v
    }

    /// Distinct gradient and curl frequencies under single-linkage grouping with `grouping_tol`.
    pub fn distinct_frequencies(&self, grouping_tol: f64) -> (Vec<f64>, Vec<f64>) {
        (
            distinct_frequencies(&self.gradient_values, grouping_tol),
            distinct_frequencies(&self.curl_values, grouping_tol),
        )
    }

    pub fn sft(&self, flow: &[f64]) -> Result<Embeddings> {
        check_len(self.dim(), flow.len())?;
        let f = DVector::from_column_slice(flow);
        let project = |u: &DMatrix<f64>| (u.transpose() * &f).as_slice().to_vec();
        Ok(Embeddings { harmonic: project(&self.harmonic), gradient: project(&self.gradient), curl: project(&self.curl) })
    }

    pub fn inverse_sft(&self, emb: &Embeddings) -> Result<Vec<f64>> {
        check_len(self.harmonic_dim(), emb.harmonic.len())?;
        check_len(self.gradient_dim(), emb.gradient.len())?;
        check_len(self.curl_dim(), emb.curl.len())?;
        let f = &self.harmonic * DVector::from_column_slice(&emb.harmonic)
            + &self.gradient * DVector::from_column_slice(&emb.gradient)
            + &self.curl * DVector::from_column_slice(&emb.curl);
        Ok(f.as_slice().to_vec())
    }

    /// `f_G = U_G U_G^T f`, `f_C = U_C U_C^T f`, `f_H = f - f_G - f_C`.
    pub fn decompose(&self, flow: &[f64]) -> Result<HodgeComponents> {
        check_len(self.dim(), flow.len())?;
        let f = DVector::from_column_slice(flow);
        let gradient = &self.gradient * (self.gradient.transpose() * &f);
        let curl = &self.curl * (self.curl.transpose() * &f);
        let harmonic = &f - &gradient - &curl;
        Ok(HodgeComponents {
            gradient: gradient.as_slice().to_vec(),
            curl: curl.as_slice().to_vec(),
            harmonic: harmonic.as_slice().to_vec(),
        })
    }

    pub fn gradient_projector(&self) -> DMatrix<f64> {
        &self.gradient * self.gradient.transpose()
    }

    pub fn curl_projector(&self) -> DMatrix<f64> {
        &self.curl * self.curl.transpose()
    }

    pub fn harmonic_projector(&self) -> DMatrix<f64> {
        &self.harmonic * self.harmonic.transpose()
    }
}

/// Hodge decomposition of `flow` on `sc`.
pub fn hodge_decompose(sc: &SimplicialComplex, flow: &[f64]) -> Result<HodgeComponents> {
    check_len(sc.edge_count(), flow.len())?;
    HodgeSpectrum::new(sc)?.decompose(flow)
}

/// Net flow at each node, `B1 f`.
pub fn divergence(sc: &SimplicialComplex, flow: &[f64]) -> Result<Vec<f64>> {
    check_len(sc.edge_count(), flow.len())?;
    let b1 = sc.incidence(1)?;
    let mut out = vec![0.0; sc.vertex_count()];
    for (v, e, s) in b1.entries() {
        out[v] += f64::from(s) * flow[e];
    }
    Ok(out)
}

/// Circulation around each triangle, `B2^T f`.
pub fn curl(sc: &SimplicialComplex, flow: &[f64]) -> Result<Vec<f64>> {
    check_len(sc.edge_count(), flow.len())?;
    let b2 = sc.incidence(2)?;
    let mut out = vec![0.0; sc.triangle_count()];
    for (e, t, s) in b2.entries() {
        out[t] += f64::from(s) * flow[e];
    }
    Ok(out)
}

/// Groups ascending-sorted values, starting a new group whenever the gap to the previous value
/// exceeds `grouping_tol`, and returns the group means.
pub fn distinct_frequencies(values: &[f64], grouping_tol: f64) -> Vec<f64> {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i] - sorted[i - 1] > grouping_tol {
            let group = &sorted[start..i];
            out.push(group.iter().sum::<f64>() / group.len() as f64);
            start = i;
        }
    }
    out
}
