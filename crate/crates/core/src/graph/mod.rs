//! Finite simple graphs on the vertex set `1..=n`.
//!
//! Adjacency is held as one bit-set row per vertex (0-based internally); every
//! public method speaks 1-based labels. Graphs are immutable once built: the
//! deletion operations return a fresh graph whose surviving vertices are
//! relabeled consecutively in their original order.

mod build;
pub mod format;
mod mis;

pub use build::{
    cameron_walker, complete_multipartite, cycle_graph, edgeless_graph, path_graph, suspension,
    CameronWalkerSpec,
};
pub use mis::{maximal_independent_sets, maximal_independent_sets_capped, DEFAULT_MIS_LIMIT};

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A finite simple graph with vertices labeled `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

/// A set of 1-based vertex labels, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

/// Old label -> new label after a deletion; `None` for deleted vertices.
/// Index 0 is unused so that `map[v]` works with 1-based `v`.
pub type Relabeling = Vec<Option<usize>>;

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        VertexSet {
            members: (1..=n).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    fn to_bits(&self, n: usize) -> Result<FixedBitSet> {
        let mut bits = FixedBitSet::with_capacity(n);
        for &v in &self.members {
            check_vertex(v, n)?;
            bits.insert(v - 1);
        }
        Ok(bits)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v == 0 || v > n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

impl Graph {
    /// Builds a graph from 1-based edge pairs. Repeated edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u - 1].insert(v - 1);
            g.adj[v - 1].insert(u - 1);
        }
        g.debug_check();
        Ok(g)
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
        }
    }

    pub(crate) fn from_rows(adj: Vec<FixedBitSet>) -> Self {
        let g = Graph { adj };
        g.debug_check();
        g
    }

    fn debug_check(&self) {
        if cfg!(debug_assertions) {
            let n = self.adj.len();
            for (i, row) in self.adj.iter().enumerate() {
                debug_assert!(!row.contains(i), "self-loop at {}", i + 1);
                for j in row.ones() {
                    debug_assert!(j < n);
                    debug_assert!(
                        self.adj[j].contains(i),
                        "asymmetric edge {}-{}",
                        i + 1,
                        j + 1
                    );
                }
            }
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let n = self.order();
        u >= 1 && v >= 1 && u <= n && v <= n && self.adj[u - 1].contains(v - 1)
    }

    /// Degree of `v`. Panics if `v` is out of range.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones(..)
    }

    /// Neighbors of `v` in increasing order. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v - 1].ones().map(|j| j + 1)
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, row) in self.adj.iter().enumerate() {
            out.extend(row.ones().filter(|&j| j > i).map(|j| (i + 1, j + 1)));
        }
        out
    }

    pub(crate) fn rows(&self) -> &[FixedBitSet] {
        &self.adj
    }

    /// Induced subgraph on `keep` (0-based bit-set), relabeled in order.
    fn induced_on_bits(&self, keep: &FixedBitSet) -> (Graph, Relabeling) {
        let n = self.order();
        let mut map = vec![None; n + 1];
        let kept: Vec<usize> = keep.ones().collect();
        for (new, &old) in kept.iter().enumerate() {
            map[old + 1] = Some(new + 1);
        }
        let m = kept.len();
        let rows = kept
            .iter()
            .map(|&old| {
                let mut row = FixedBitSet::with_capacity(m);
                for j in self.adj[old].ones() {
                    if let Some(new) = map[j + 1] {
                        row.insert(new - 1);
                    }
                }
                row
            })
            .collect();
        (Graph::from_rows(rows), map)
    }

    /// Induced subgraph on `set`, together with the old -> new relabeling.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Relabeling)> {
        let bits = set.to_bits(self.order())?;
        Ok(self.induced_on_bits(&bits))
    }

    /// `G \ S`: the induced subgraph on the complement of `set`.
    pub fn remove_set(&self, set: &VertexSet) -> Result<(Graph, Relabeling)> {
        let mut bits = set.to_bits(self.order())?;
        bits.toggle_range(..);
        Ok(self.induced_on_bits(&bits))
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.delete_vertex_with_map(v).map(|(g, _)| g)
    }

    pub fn delete_vertex_with_map(&self, v: usize) -> Result<(Graph, Relabeling)> {
        check_vertex(v, self.order())?;
        self.remove_set(&VertexSet::new([v]))
    }

    /// `G - N[v]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Graph> {
        self.delete_closed_neighborhood_with_map(v).map(|(g, _)| g)
    }

    pub fn delete_closed_neighborhood_with_map(&self, v: usize) -> Result<(Graph, Relabeling)> {
        check_vertex(v, self.order())?;
        let mut closed = self.adj[v - 1].clone();
        closed.insert(v - 1);
        closed.toggle_range(..);
        Ok(self.induced_on_bits(&closed))
    }

    /// Maximal connected vertex sets, sorted by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            seen.insert(start);
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u + 1);
                for w in self.adj[u].ones() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// True iff no edge has both endpoints in `set`.
    pub fn is_independent(&self, set: &VertexSet) -> Result<bool> {
        let bits = set.to_bits(self.order())?;
        Ok(bits.ones().all(|i| self.adj[i].is_disjoint(&bits)))
    }

    /// True iff every edge has an endpoint in `cover`.
    pub fn is_vertex_cover(&self, cover: &VertexSet) -> Result<bool> {
        let bits = cover.to_bits(self.order())?;
        Ok(self
            .adj
            .iter()
            .enumerate()
            .filter(|(i, _)| !bits.contains(*i))
            .all(|(_, row)| row.is_subset(&bits)))
    }

    /// True iff `set` is independent and dominates every vertex outside it.
    pub fn is_maximal_independent(&self, set: &VertexSet) -> Result<bool> {
        let bits = set.to_bits(self.order())?;
        for (i, row) in self.adj.iter().enumerate() {
            if bits.contains(i) {
                if !row.is_disjoint(&bits) {
                    return Ok(false);
                }
            } else if row.is_disjoint(&bits) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `V(G) \ set`.
    pub fn complement_of(&self, set: &VertexSet) -> Result<VertexSet> {
        let bits = set.to_bits(self.order())?;
        Ok((1..=self.order())
            .filter(|&v| !bits.contains(v - 1))
            .collect())
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order();
        let total = n + other.order();
        let mut rows = Vec::with_capacity(total);
        for row in &self.adj {
            let mut r = row.clone();
            r.grow(total);
            rows.push(r);
        }
        for row in &other.adj {
            let mut r = FixedBitSet::with_capacity(total);
            r.extend(row.ones().map(|j| j + n));
            rows.push(r);
        }
        Graph::from_rows(rows)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::new(v.iter().copied())
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(
            Graph::new(3, &[(0, 1)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 0, n: 3 }
        );
        assert_eq!(Graph::new(2, &[(2, 2)]), Err(Error::SelfLoop(2)));
    }

    #[test]
    fn build_small_graphs() {
        let tri = Graph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(tri, cycle_graph(3).unwrap());
        assert_eq!(tri.size(), 3);

        let single = Graph::new(1, &[]).unwrap();
        assert_eq!(single.order(), 1);
        assert_eq!(single.size(), 0);

        let p4 = Graph::new(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p4, path_graph(4));

        let dup = Graph::new(2, &[(1, 2), (2, 1), (1, 2)]).unwrap();
        assert_eq!(dup.edges(), vec![(1, 2)]);
    }

    #[test]
    fn delete_vertex_examples() {
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(c4.delete_vertex(1).unwrap(), path_graph(3));
        assert!(path_graph(1).delete_vertex(1).unwrap().is_empty());
        assert!(c4.delete_vertex(5).is_err());

        // K_{2,3}: part {1,2}, part {3,4,5}.
        let k23 = complete_multipartite(&[2, 3]).unwrap();
        let star = Graph::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(k23.delete_vertex(1).unwrap(), star);
        assert_eq!(k23.delete_vertex(2).unwrap(), star);
    }

    #[test]
    fn delete_vertex_relabels_in_order() {
        let (g, map) = path_graph(5).delete_vertex_with_map(3).unwrap();
        assert_eq!(map, vec![None, Some(1), Some(2), None, Some(3), Some(4)]);
        assert_eq!(g.edges(), vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn delete_closed_neighborhood_examples() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(c5.delete_closed_neighborhood(1).unwrap(), path_graph(2));

        let star = complete_multipartite(&[1, 4]).unwrap();
        assert!(star.delete_closed_neighborhood(1).unwrap().is_empty());

        let (g, map) = cycle_graph(6)
            .unwrap()
            .delete_closed_neighborhood_with_map(1)
            .unwrap();
        assert_eq!(g, path_graph(3));
        assert_eq!((map[3], map[4], map[5]), (Some(1), Some(2), Some(3)));
        assert!(cycle_graph(6)
            .unwrap()
            .delete_closed_neighborhood(7)
            .is_err());
    }

    #[test]
    fn components() {
        assert_eq!(
            cycle_graph(5).unwrap().connected_components(),
            vec![VertexSet::full(5)]
        );
        assert!(Graph::edgeless(0).connected_components().is_empty());
        let g = Graph::new(3, &[(2, 3)]).unwrap();
        assert_eq!(g.connected_components(), vec![set(&[1]), set(&[2, 3])]);
        let g = Graph::new(3, &[(1, 3)]).unwrap();
        assert_eq!(g.connected_components(), vec![set(&[1, 3]), set(&[2])]);
    }

    #[test]
    fn set_predicates() {
        let c4 = cycle_graph(4).unwrap();
        assert!(c4.is_independent(&set(&[1, 3])).unwrap());
        assert!(!c4.is_independent(&set(&[1, 2])).unwrap());
        assert!(c4.is_independent(&VertexSet::empty()).unwrap());
        assert!(c4.is_independent(&set(&[9])).is_err());

        assert!(c4.is_vertex_cover(&set(&[1, 3])).unwrap());
        let c5 = cycle_graph(5).unwrap();
        assert!(!c5.is_vertex_cover(&set(&[1, 3])).unwrap());
        assert!(c5.is_vertex_cover(&VertexSet::full(5)).unwrap());

        assert!(c5.is_maximal_independent(&set(&[1, 3])).unwrap());
        assert!(!cycle_graph(6)
            .unwrap()
            .is_maximal_independent(&set(&[1]))
            .unwrap());
        assert!(cycle_graph(6)
            .unwrap()
            .is_maximal_independent(&set(&[1, 4]))
            .unwrap());
        assert!(path_graph(4).is_maximal_independent(&set(&[1, 4])).unwrap());
        assert!(!path_graph(4).is_maximal_independent(&set(&[1, 2])).unwrap());
    }

    #[test]
    fn display_vertex_set() {
        assert_eq!(set(&[3, 1, 3]).to_string(), "{1,3}");
        assert_eq!(VertexSet::empty().to_string(), "{}");
    }

    #[test]
    fn disjoint_union_shifts_labels() {
        let g = path_graph(2).disjoint_union(&cycle_graph(3).unwrap());
        assert_eq!(g.edges(), vec![(1, 2), (3, 4), (3, 5), (4, 5)]);
    }
}
