//! Order-2 simplicial complexes: nodes, oriented edges and oriented triangles.
//!
//! Every simplex is stored as an ordered vertex tuple whose order *is* its orientation. Complexes
//! built through [`SimplicialComplex::new`] use the reference orientation (ascending vertex
//! tuples, lexicographically ordered lists). [`SimplicialComplex::permute`] and
//! [`SimplicialComplex::reorient`] produce complexes whose tuples deviate from that, which is how
//! the relabelled incidence matrices `P_{k-1} B_k P_k^T` and `D_{k-1} B_k D_k` arise.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::CsrMatrix;

/// Signed incidence matrix `B_k` with entries in `{-1, 0, +1}`, stored column by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedIncidence {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, i8)>>,
}

impl SignedIncidence {
    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Nonzeros of column `c`, sorted by row.
    pub fn column(&self, c: usize) -> &[(usize, i8)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> i8 {
        self.columns[c].iter().find(|(i, _)| *i == r).map_or(0, |(_, s)| *s)
    }

    /// All nonzeros as `(row, col, sign)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i8)> + '_ {
        self.columns.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |&(r, s)| (r, c, s)))
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.rows, self.cols);
        for (r, c, s) in self.entries() {
            m[(r, c)] = f64::from(s);
        }
        m
    }

    pub fn to_csr(&self) -> CsrMatrix {
        CsrMatrix::from_triplets(
            self.rows,
            self.cols,
            self.entries().map(|(r, c, s)| (r, c, f64::from(s))).collect(),
        )
    }

    /// Nonzero entries of the integer product `self * rhs`. Empty exactly when the product is zero.
    pub fn integer_product(&self, rhs: &SignedIncidence) -> BTreeMap<(usize, usize), i64> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (c, col) in rhs.columns.iter().enumerate() {
            for &(k, s) in col {
                for &(r, t) in &self.columns[k] {
                    *out.entry((r, c)).or_insert(0) += i64::from(s) * i64::from(t);
                }
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

/// Relabelling of nodes, edges and triangles. `perm[old] = new` for each order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationPlan {
    pub node_perm: Vec<usize>,
    pub edge_perm: Vec<usize>,
    pub triangle_perm: Vec<usize>,
}

impl PermutationPlan {
    pub fn identity(sc: &SimplicialComplex) -> Self {
        PermutationPlan {
            node_perm: (0..sc.vertex_count()).collect(),
            edge_perm: (0..sc.edge_count()).collect(),
            triangle_perm: (0..sc.triangle_count()).collect(),
        }
    }

    /// Moves entry `i` of `values` to position `perm[i]`.
    pub fn apply(perm: &[usize], values: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; values.len()];
        for (i, &p) in perm.iter().enumerate() {
            out[p] = values[i];
        }
        out
    }
}

/// Orientation flips for edges and triangles. Nodes keep their trivial orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationPlan {
    pub edge_signs: Vec<i8>,
    pub triangle_signs: Vec<i8>,
}

impl OrientationPlan {
    pub fn identity(sc: &SimplicialComplex) -> Self {
        OrientationPlan { edge_signs: vec![1; sc.edge_count()], triangle_signs: vec![1; sc.triangle_count()] }
    }

    /// Multiplies each value by its sign.
    pub fn apply(signs: &[i8], values: &[f64]) -> Vec<f64> {
        values.iter().zip(signs).map(|(v, s)| v * f64::from(*s)).collect()
    }
}

fn sorted2(e: [usize; 2]) -> [usize; 2] {
    if e[0] <= e[1] {
        e
    } else {
        [e[1], e[0]]
    }
}

fn sorted3(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

/// An order-2 simplicial complex with the inclusion property.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    edges: Vec<[usize; 2]>,
    triangles: Vec<[usize; 3]>,
    edge_lookup: BTreeMap<[usize; 2], usize>,
    edges_at_vertex: Vec<Vec<usize>>,
    triangles_at_edge: Vec<Vec<usize>>,
    triangle_edges: Vec<[usize; 3]>,
}

impl SimplicialComplex {
    /// Builds a complex in the reference orientation from raw, possibly unsorted lists.
    ///
    /// Vertex tuples are sorted, repeated simplices merged and the lists ordered
    /// lexicographically. Every triangle must have all three of its edges in `edges`.
    pub fn new(vertex_count: usize, edges: &[[usize; 2]], triangles: &[[usize; 3]]) -> Result<Self> {
        let edges: BTreeSet<[usize; 2]> = edges.iter().map(|e| sorted2(*e)).collect();
        let triangles: BTreeSet<[usize; 3]> = triangles.iter().map(|t| sorted3(*t)).collect();
        Self::from_oriented(vertex_count, edges.into_iter().collect(), triangles.into_iter().collect())
    }

    /// Builds a complex whose tuples carry their own orientation; lists are kept in the given order.
    pub fn from_oriented(vertex_count: usize, edges: Vec<[usize; 2]>, triangles: Vec<[usize; 3]>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidParameter("vertex_count must be positive"));
        }
        let mut edge_lookup = BTreeMap::new();
        let mut edges_at_vertex = vec![Vec::new(); vertex_count];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                if v >= vertex_count {
                    return Err(Error::IndexOutOfRange { index: v, bound: vertex_count });
                }
            }
            if e[0] == e[1] {
                return Err(Error::DegenerateSimplex([e[0], e[1], e[1]]));
            }
            let key = sorted2(*e);
            if edge_lookup.insert(key, i).is_some() {
                return Err(Error::DuplicateSimplex([key[0], key[1], key[1]]));
            }
            edges_at_vertex[e[0]].push(i);
            edges_at_vertex[e[1]].push(i);
        }

        let mut seen = BTreeSet::new();
        let mut triangles_at_edge = vec![Vec::new(); edges.len()];
        let mut triangle_edges = Vec::with_capacity(triangles.len());
        for (t, tri) in triangles.iter().enumerate() {
            for &v in tri {
                if v >= vertex_count {
                    return Err(Error::IndexOutOfRange { index: v, bound: vertex_count });
                }
            }
            let key = sorted3(*tri);
            if key[0] == key[1] || key[1] == key[2] {
                return Err(Error::DegenerateSimplex(*tri));
            }
            if !seen.insert(key) {
                return Err(Error::DuplicateSimplex(key));
            }
            let mut ids = [0usize; 3];
            for (slot, face) in [[key[0], key[1]], [key[0], key[2]], [key[1], key[2]]].into_iter().enumerate() {
                let &e = edge_lookup.get(&face).ok_or(Error::MissingFace { triangle: key, edge: face })?;
                ids[slot] = e;
                triangles_at_edge[e].push(t);
            }
            triangle_edges.push(ids);
        }

        Ok(SimplicialComplex {
            vertex_count,
            edges,
            triangles,
            edge_lookup,
            edges_at_vertex,
            triangles_at_edge,
            triangle_edges,
        })
    }

    /// Fills every 3-clique of the edge list with a triangle.
    pub fn with_inferred_triangles(vertex_count: usize, edges: &[[usize; 2]]) -> Result<Self> {
        let triangles = infer_triangles(vertex_count, edges);
        Self::new(vertex_count, edges, &triangles)
    }

    /// Complete graph on `n` nodes with every triple filled.
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        let mut triangles = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push([i, j]);
                for k in j + 1..n {
                    triangles.push([i, j, k]);
                }
            }
        }
        Self::new(n, &edges, &triangles)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    /// `N_k` for `k` in `{0, 1, 2}`.
    pub fn count(&self, k: usize) -> Result<usize> {
        match k {
            0 => Ok(self.vertex_count),
            1 => Ok(self.edges.len()),
            2 => Ok(self.triangles.len()),
            _ => Err(Error::UnsupportedOrder(k)),
        }
    }

    /// Oriented edges `(tail, head)`.
    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Index of the edge on vertices `{u, v}`, in either order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_lookup.get(&sorted2([u, v])).copied()
    }

    /// `+1` if edge `i` is stored in ascending vertex order, `-1` otherwise.
    pub fn edge_orientation(&self, i: usize) -> i8 {
        if self.edges[i][0] < self.edges[i][1] {
            1
        } else {
            -1
        }
    }

    /// Indices of the three edges of triangle `t`: faces `{a,b}`, `{a,c}`, `{b,c}` of its sorted tuple.
    pub fn triangle_edges(&self, t: usize) -> [usize; 3] {
        self.triangle_edges[t]
    }

    pub fn triangles_at_edge(&self, e: usize) -> &[usize] {
        &self.triangles_at_edge[e]
    }

    pub fn edges_at_vertex(&self, v: usize) -> &[usize] {
        &self.edges_at_vertex[v]
    }

    /// Signed incidence matrix `B_k` for `k` in `{1, 2}`.
    pub fn incidence(&self, k: usize) -> Result<SignedIncidence> {
        match k {
            1 => {
                let columns = self
                    .edges
                    .iter()
                    .map(|&[tail, head]| {
                        let mut col = vec![(tail, -1i8), (head, 1i8)];
                        col.sort_unstable();
                        col
                    })
                    .collect();
                Ok(SignedIncidence { rows: self.vertex_count, cols: self.edges.len(), columns })
            }
            2 => {
                let columns = self
                    .triangles
                    .iter()
                    .map(|&[a, b, c]| {
                        // boundary of [a,b,c] is [b,c] - [a,c] + [a,b]
                        let mut col: Vec<(usize, i8)> = [([a, b], 1i8), ([a, c], -1), ([b, c], 1)]
                            .into_iter()
                            .map(|(face, coef)| {
                                let e = self.edge_lookup[&sorted2(face)];
                                let agrees = self.edges[e] == face;
                                (e, if agrees { coef } else { -coef })
                            })
                            .collect();
                        col.sort_unstable();
                        col
                    })
                    .collect();
                Ok(SignedIncidence { rows: self.edges.len(), cols: self.triangles.len(), columns })
            }
            _ => Err(Error::UnsupportedOrder(k)),
        }
    }

    /// `k`-simplices sharing a `(k-1)`-face with simplex `i`, excluding `i`, sorted.
    pub fn lower_neighborhood(&self, k: usize, i: usize) -> Result<Vec<usize>> {
        self.check_index(k, i)?;
        let set: BTreeSet<usize> = match k {
            0 => BTreeSet::new(),
            1 => self.edges[i].iter().flat_map(|&v| self.edges_at_vertex[v].iter().copied()).collect(),
            _ => self.triangle_edges[i]
                .iter()
                .flat_map(|&e| self.triangles_at_edge[e].iter().copied())
                .collect(),
        };
        Ok(set.into_iter().filter(|&j| j != i).collect())
    }

    /// `k`-simplices that are faces of a common `(k+1)`-simplex with `i`, excluding `i`, sorted.
    pub fn upper_neighborhood(&self, k: usize, i: usize) -> Result<Vec<usize>> {
        self.check_index(k, i)?;
        let set: BTreeSet<usize> = match k {
            0 => self.edges_at_vertex[i]
                .iter()
                .map(|&e| {
                    let [a, b] = self.edges[e];
                    if a == i {
                        b
                    } else {
                        a
                    }
                })
                .collect(),
            1 => self.triangles_at_edge[i]
                .iter()
                .flat_map(|&t| self.triangle_edges[t].iter().copied())
                .collect(),
            _ => BTreeSet::new(),
        };
        Ok(set.into_iter().filter(|&j| j != i).collect())
    }

    fn check_index(&self, k: usize, i: usize) -> Result<()> {
        let bound = self.count(k)?;
        if i < bound {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, bound })
        }
    }

    /// Relabels nodes, edges and triangles; the result has incidence matrices `P_{k-1} B_k P_k^T`.
    pub fn permute(&self, plan: &PermutationPlan) -> Result<Self> {
        check_bijection(&plan.node_perm, self.vertex_count)?;
        check_bijection(&plan.edge_perm, self.edges.len())?;
        check_bijection(&plan.triangle_perm, self.triangles.len())?;
        let node = |v: usize| plan.node_perm[v];
        let mut edges = vec![[0usize; 2]; self.edges.len()];
        for (i, &[a, b]) in self.edges.iter().enumerate() {
            edges[plan.edge_perm[i]] = [node(a), node(b)];
        }
        let mut triangles = vec![[0usize; 3]; self.triangles.len()];
        for (t, &[a, b, c]) in self.triangles.iter().enumerate() {
            triangles[plan.triangle_perm[t]] = [node(a), node(b), node(c)];
        }
        Self::from_oriented(self.vertex_count, edges, triangles)
    }

    /// Flips orientations; the result has incidence matrices `D_{k-1} B_k D_k` with `D_0 = I`.
    pub fn reorient(&self, plan: &OrientationPlan) -> Result<Self> {
        crate::error::check_len(self.edges.len(), plan.edge_signs.len())?;
        crate::error::check_len(self.triangles.len(), plan.triangle_signs.len())?;
        let edges = self
            .edges
            .iter()
            .zip(&plan.edge_signs)
            .map(|(&[a, b], &s)| if s < 0 { [b, a] } else { [a, b] })
            .collect();
        let triangles = self
            .triangles
            .iter()
            .zip(&plan.triangle_signs)
            .map(|(&[a, b, c], &s)| if s < 0 { [b, a, c] } else { [a, b, c] })
            .collect();
        Self::from_oriented(self.vertex_count, edges, triangles)
    }
}

fn check_bijection(perm: &[usize], n: usize) -> Result<()> {
    crate::error::check_len(n, perm.len())?;
    let mut hit = vec![false; n];
    for &p in perm {
        if p >= n {
            return Err(Error::IndexOutOfRange { index: p, bound: n });
        }
        if hit[p] {
            return Err(Error::InvalidParameter("permutation is not a bijection"));
        }
        hit[p] = true;
    }
    Ok(())
}

/// Every 3-clique of the graph as a sorted triangle, in lexicographic order.
///
/// Out-of-range and self-loop edges are ignored.
pub fn infer_triangles(vertex_count: usize, edges: &[[usize; 2]]) -> Vec<[usize; 3]> {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); vertex_count];
    for &e in edges {
        let [u, v] = sorted2(e);
        if u != v && v < vertex_count {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    let mut out = Vec::new();
    for u in 0..vertex_count {
        for &v in adj[u].range(u + 1..) {
            for &w in adj[v].range(v + 1..) {
                if adj[u].contains(&w) {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}
