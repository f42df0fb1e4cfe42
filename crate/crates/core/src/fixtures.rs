//! Reference complexes and generators used by tests, the acceptance suite and `fixtures generate`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::apps::ExchangeMarket;
use crate::complex::{infer_triangles, OrientationPlan, PermutationPlan, SimplicialComplex};

/// Seven nodes, ten edges, three filled triangles and one unfilled square (3-4-5-6 in 1-based
/// labels), giving one harmonic dimension, six distinct gradient and three distinct curl
/// frequencies.
pub const TOY_EDGES: [[usize; 2]; 10] =
    [[0, 1], [0, 2], [1, 2], [1, 3], [2, 3], [2, 5], [3, 4], [4, 5], [4, 6], [5, 6]];
pub const TOY_TRIANGLES: [[usize; 3]; 3] = [[0, 1, 2], [1, 2, 3], [4, 5, 6]];

pub fn toy_complex() -> SimplicialComplex {
    SimplicialComplex::new(7, &TOY_EDGES, &TOY_TRIANGLES).expect("toy fixture is valid")
}

pub const CURRENCIES: [&str; 7] = ["USD", "EUR", "CNY", "HKD", "GBP", "JPY", "AUD"];

/// Seven-currency quote matrix, 2021-07-12 10:30 UTC; row `i`, column `j` is the amount of `j`
/// bought by one unit of `i`.
pub const FX_QUOTES: [[f64; 7]; 7] = [
    [1.0, 0.8422, 6.3739, 7.7666, 0.7207, 110.1020, 1.3377],
    [1.1873, 1.0, 7.5681, 9.2218, 0.8557, 130.7314, 1.5883],
    [0.1539, 0.1321, 1.0, 1.2185, 0.1131, 17.2683, 0.2099],
    [0.1288, 0.1085, 0.8207, 1.0, 0.0928, 14.1718, 0.1723],
    [1.3871, 1.1685, 8.8414, 10.7732, 1.0, 152.6758, 1.8557],
    [0.0091, 0.0077, 0.0579, 0.0706, 0.0066, 1.0, 0.0122],
    [0.7475, 0.6299, 4.7602, 5.8001, 0.5385, 82.1837, 1.0],
];

/// Published arbitrage-free correction of [`FX_QUOTES`], four decimals.
pub const FX_CORRECTED: [[f64; 7]; 7] = [
    [1.0, 0.8422, 6.3738, 7.7665, 0.7208, 110.0171, 1.3385],
    [1.1874, 1.0, 7.5680, 9.2216, 0.8559, 130.6292, 1.5893],
    [0.1569, 0.1321, 1.0, 1.2185, 0.1131, 17.2608, 0.2100],
    [0.1288, 0.1084, 0.8207, 1.0, 0.0928, 14.1656, 0.1723],
    [1.3873, 1.1684, 8.8425, 10.7746, 1.0, 152.6286, 1.8557],
    [0.0091, 0.0077, 0.0579, 0.0706, 0.0066, 1.0, 0.0122],
    [0.7471, 0.6292, 4.7618, 5.8022, 0.5385, 82.1919, 1.0],
];

pub fn fx_market() -> ExchangeMarket {
    let names = CURRENCIES.iter().map(|s| alloc::string::String::from(*s)).collect();
    let rates = FX_QUOTES.iter().map(|r| r.to_vec()).collect();
    ExchangeMarket::new(names, rates).expect("fixture quotes are positive")
}

/// Shape of a road-network-like complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NetworkShape {
    pub nodes: usize,
    pub edges: usize,
    pub triangles: usize,
}

/// 82 crossings, 130 streets, 12 triangles.
pub const LONDON_SHAPE: NetworkShape = NetworkShape { nodes: 82, edges: 130, triangles: 12 };
/// 546 nodes, 1088 edges, 112 triangles.
pub const CHICAGO_SHAPE: NetworkShape = NetworkShape { nodes: 546, edges: 1088, triangles: 112 };

/// Planar-ish road network: random points in the unit square joined by a Euclidean spanning
/// tree, then by the shortest remaining pairs until `shape.edges` is reached. A pair is skipped
/// when it would push the 3-clique count past `shape.triangles`. Every 3-clique is filled.
pub fn road_network(shape: NetworkShape, seed: u64) -> SimplicialComplex {
    let NetworkShape { nodes: n, edges: target_edges, triangles: target_triangles } = shape;
    assert!(n >= 2 && target_edges + 1 >= n, "need at least a spanning tree");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<(f64, f64)> = (0..n).map(|_| (rng.random::<f64>(), rng.random::<f64>())).collect();
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let (dx, dy) = (pts[i].0 - pts[j].0, pts[i].1 - pts[j].1);
            pairs.push((dx * dx + dy * dy, i, j));
        }
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut edges = Vec::with_capacity(target_edges);
    let mut used = vec![false; pairs.len()];
    for (k, &(_, i, j)) in pairs.iter().enumerate() {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            adj[i].insert(j);
            adj[j].insert(i);
            edges.push([i, j]);
            used[k] = true;
        }
    }
    let mut triangles = 0usize;
    for (k, &(_, i, j)) in pairs.iter().enumerate() {
        if edges.len() >= target_edges {
            break;
        }
        if used[k] {
            continue;
        }
        let closes = adj[i].intersection(&adj[j]).count();
        if triangles + closes <= target_triangles {
            triangles += closes;
            adj[i].insert(j);
            adj[j].insert(i);
            edges.push([i, j]);
        }
    }
    SimplicialComplex::with_inferred_triangles(n, &edges).expect("generated edges are valid")
}

/// Erdos-Renyi graph on `nodes` vertices with edge probability `p`, every 3-clique filled.
pub fn random_clique_complex<R: Rng>(rng: &mut R, nodes: usize, p: f64) -> SimplicialComplex {
    let mut edges = Vec::new();
    for i in 0..nodes {
        for j in i + 1..nodes {
            if rng.random::<f64>() < p {
                edges.push([i, j]);
            }
        }
    }
    let triangles = infer_triangles(nodes, &edges);
    SimplicialComplex::new(nodes, &edges, &triangles).expect("generated edges are valid")
}

pub fn random_permutation<R: Rng>(rng: &mut R, sc: &SimplicialComplex) -> PermutationPlan {
    let mut shuffled = |n: usize| {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        p
    };
    PermutationPlan {
        node_perm: shuffled(sc.vertex_count()),
        edge_perm: shuffled(sc.edge_count()),
        triangle_perm: shuffled(sc.triangle_count()),
    }
}

pub fn random_orientation<R: Rng>(rng: &mut R, sc: &SimplicialComplex) -> OrientationPlan {
    let mut signs = |n: usize| (0..n).map(|_| if rng.random::<bool>() { 1 } else { -1 }).collect();
    OrientationPlan { edge_signs: signs(sc.edge_count()), triangle_signs: signs(sc.triangle_count()) }
}

/// Standard-normal vector.
pub fn gaussian_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    use rand_distr::{Distribution, StandardNormal};
    (0..n).map(|_| StandardNormal.sample(rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn road_networks_hit_their_shape() {
        for (shape, seed) in [(LONDON_SHAPE, 1), (CHICAGO_SHAPE, 2)] {
            let sc = road_network(shape, seed);
            assert_eq!(sc.vertex_count(), shape.nodes);
            assert_eq!(sc.edge_count(), shape.edges);
            assert!(sc.triangle_count() <= shape.triangles);
            assert!(sc.triangle_count() + 3 >= shape.triangles, "got {}", sc.triangle_count());
        }
    }

    #[test]
    fn generators_are_seeded() {
        assert_eq!(road_network(LONDON_SHAPE, 9), road_network(LONDON_SHAPE, 9));
        let a = random_clique_complex(&mut ChaCha8Rng::seed_from_u64(4), 20, 0.3);
        let b = random_clique_complex(&mut ChaCha8Rng::seed_from_u64(4), 20, 0.3);
        assert_eq!(a, b);
    }
}
