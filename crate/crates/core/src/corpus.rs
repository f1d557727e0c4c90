//! Deterministic graph corpora for the verification sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{CameronWalkerSpec, Graph};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("random edges are in range")
}

/// `count` graphs with `min_n <= n <= max_n`; the edge density cycles through
/// nine levels from 0.1 to 0.9.
pub fn random_corpus(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|i| {
            let n = rng.random_range(min_n..=max_n);
            let p = 0.1 + 0.1 * (i % 9) as f64;
            random_graph(&mut rng, n, p)
        })
        .collect()
}

/// Every labeled graph on `n` vertices (`2^(n(n-1)/2)` of them).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 64, "too many graphs to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).expect("valid pairs")
    })
}

/// Nondecreasing part-size lists with `1 <= k <= max_parts` parts, each of
/// size `1..=max_size`.
pub fn multipartite_partitions(max_parts: usize, max_size: usize) -> Vec<Vec<usize>> {
    fn extend(cur: &mut Vec<usize>, max_parts: usize, max_size: usize, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_parts {
            return;
        }
        let lo = cur.last().copied().unwrap_or(1);
        for m in lo..=max_size {
            cur.push(m);
            extend(cur, max_parts, max_size, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_parts, max_size, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Connected bipartite edge sets between `x` and `y` vertices, by rejection.
fn random_connected_core<R: Rng>(rng: &mut R, x: usize, y: usize) -> Vec<(usize, usize)> {
    loop {
        let edges: Vec<_> = (1..=x)
            .flat_map(|i| (1..=y).map(move |j| (i, j)))
            .filter(|_| rng.random_bool(0.5))
            .collect();
        let spec = CameronWalkerSpec {
            x_size: x,
            y_size: y,
            core_edges: edges.clone(),
            leaves: vec![1; x],
            triangles: vec![0; y],
        };
        if spec.validate().is_ok() {
            return edges;
        }
    }
}

/// A random valid Cameron-Walker specification with at most `max_vertices`
/// vertices in the resulting graph (`max_vertices >= 3`).
pub fn random_cameron_walker<R: Rng>(rng: &mut R, max_vertices: usize) -> CameronWalkerSpec {
    assert!(
        max_vertices >= 3,
        "smallest Cameron-Walker graph has 3 vertices"
    );
    loop {
        let x = rng.random_range(1..=3);
        let y = rng.random_range(1..=3);
        let spec = CameronWalkerSpec {
            x_size: x,
            y_size: y,
            core_edges: random_connected_core(rng, x, y),
            leaves: (0..x).map(|_| rng.random_range(1..=3)).collect(),
            triangles: (0..y).map(|_| rng.random_range(0..=2)).collect(),
        };
        if spec.vertex_count() <= max_vertices {
            return spec;
        }
    }
}

/// Every valid specification with `|X| + |Y| <= max_core`, leaf counts in
/// `1..=max_leaves` and triangle counts in `0..=max_triangles`.
pub fn all_cameron_walker(
    max_core: usize,
    max_leaves: usize,
    max_triangles: usize,
) -> Vec<CameronWalkerSpec> {
    let mut out = Vec::new();
    for x in 1..max_core {
        for y in 1..=max_core - x {
            let pairs: Vec<_> = (1..=x).flat_map(|i| (1..=y).map(move |j| (i, j))).collect();
            for mask in 0u64..1 << pairs.len() {
                let core_edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                for leaves in counts(x, 1, max_leaves) {
                    for triangles in counts(y, 0, max_triangles) {
                        let spec = CameronWalkerSpec {
                            x_size: x,
                            y_size: y,
                            core_edges: core_edges.clone(),
                            leaves: leaves.clone(),
                            triangles,
                        };
                        if spec.validate().is_ok() {
                            out.push(spec);
                        }
                    }
                }
            }
        }
    }
    out
}

/// All vectors of length `len` with entries in `lo..=hi`.
fn counts(len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible() {
        assert_eq!(random_corpus(7, 20, 1, 10), random_corpus(7, 20, 1, 10));
        assert_ne!(random_corpus(7, 20, 1, 10), random_corpus(8, 20, 1, 10));
        assert!(random_corpus(1, 50, 2, 6)
            .iter()
            .all(|g| (2..=6).contains(&g.order())));
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(all_graphs(0).count(), 1);
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(multipartite_partitions(2, 3).len(), 3 + 6);
        // Multisets of size k from 5 values: C(5 + k - 1, k) = 5, 15, 35, 70.
        assert_eq!(multipartite_partitions(4, 5).len(), 125);
    }

    #[test]
    fn cameron_walker_generators() {
        let mut rng = seeded_rng(3);
        for _ in 0..30 {
            let spec = random_cameron_walker(&mut rng, 16);
            assert!(spec.validate().is_ok());
            assert!(spec.vertex_count() <= 16);
        }
        let all = all_cameron_walker(2, 2, 1);
        // Single core edge, f in {1,2}, t in {0,1}.
        assert_eq!(all.len(), 4);
    }
}
