//! Benchmark graph families and random graphs.

mod gk;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub use gk::{build_gk, doors_unguarded, CycleName, GkDescriptor, Role};

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::Input(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    positive("path length", n)?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)).collect())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Input(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// `n` isolated vertices.
pub fn empty(n: usize) -> Result<Graph> {
    positive("vertex count", n)?;
    Graph::new(n, Vec::new())
}

/// Parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    positive("part size", m)?;
    positive("part size", n)?;
    let edges = (0..m)
        .flat_map(|u| (m..m + n).map(move |v| (u, v)))
        .collect();
    Graph::new(m + n, edges)
}

/// Vertices are bit strings of length `d`; edges join strings at Hamming distance 1.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d > 20 {
        return Err(Error::Input(format!("hypercube dimension {d} too large")));
    }
    let n = 1usize << d;
    let mut edges = Vec::with_capacity(d * n / 2);
    for v in 0..n {
        for bit in 0..d {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::new(n, edges)
}

/// `m` rows by `n` columns; vertex `(r, c)` is `r * n + c`.
pub fn grid(m: usize, n: usize) -> Result<Graph> {
    positive("grid rows", m)?;
    positive("grid columns", n)?;
    let id = |r: usize, c: usize| -> Vertex { r * n + c };
    let mut edges = Vec::new();
    for r in 0..m {
        for c in 0..n {
            if c + 1 < n {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < m {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::new(m * n, edges)
}

/// Erdős–Rényi `G(n, p)`, reproducible from `seed`. Pairs are visited in
/// lexicographic order.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Input(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_counts() {
        let p = path(4).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (4, 3));
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert!(cycle(2).is_err());
        assert_eq!(complete_bipartite(2, 3).unwrap().edge_count(), 6);
        let q = hypercube(3).unwrap();
        assert_eq!((q.vertex_count(), q.edge_count()), (8, 12));
        for d in 0..6 {
            assert_eq!(hypercube(d).unwrap().edge_count(), d << d >> 1);
        }
        for (m, n) in [(1, 1), (2, 3), (3, 3), (4, 2)] {
            assert_eq!(grid(m, n).unwrap().edge_count(), m * (n - 1) + n * (m - 1));
        }
        assert_eq!(empty(2).unwrap().edge_count(), 0);
        assert!(path(0).is_err());
    }

    #[test]
    fn gnp_extremes_and_reproducibility() {
        assert_eq!(random_gnp(5, 0.0, 7).unwrap().edge_count(), 0);
        assert_eq!(random_gnp(5, 1.0, 7).unwrap().edge_count(), 10);
        assert_eq!(random_gnp(9, 0.5, 42).unwrap(), random_gnp(9, 0.5, 42).unwrap());
        assert!(random_gnp(3, 1.5, 0).is_err());
    }

    #[test]
    fn gnp_edge_count_is_binomial() {
        // Binomial(28, 1/2): mean 14, sd sqrt(7). The mean over 1000
        // samples has sd sqrt(7/1000).
        let samples = 1000;
        let total: usize = (0..samples)
            .map(|s| random_gnp(8, 0.5, s).unwrap().edge_count())
            .sum();
        let mean = total as f64 / samples as f64;
        let sd = (7.0f64 / samples as f64).sqrt();
        assert!((mean - 14.0).abs() < 3.0 * sd, "mean {mean}");
    }
}
