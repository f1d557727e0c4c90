//! Constructors for the graph families used throughout the crate.

use fixedbitset::FixedBitSet;

use super::{check_vertex, Graph, VertexSet};
use crate::error::{Error, Result};

/// `n` isolated vertices.
pub fn edgeless_graph(n: usize) -> Graph {
    Graph::edgeless(n)
}

/// The path `1 - 2 - ... - n`. `path_graph(0)` is the empty graph.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges).expect("path edges are valid")
}

/// The cycle `1 - 2 - ... - n - 1`, for `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((n, 1));
    Graph::new(n, &edges)
}

/// `K_{m_1,...,m_k}` with the parts labeled consecutively: part 1 is
/// `1..=m_1`, part 2 is `m_1+1..=m_1+m_2`, and so on.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::EmptyPart);
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let rows = (0..n)
        .map(|i| {
            let mut row = FixedBitSet::with_capacity(n);
            row.extend((0..n).filter(|&j| part_of[j] != part_of[i]));
            row
        })
        .collect();
    Ok(Graph::from_rows(rows))
}

/// A Cameron-Walker graph described by its bipartite core `X ⊔ Y`, the
/// number of leaves hanging off each `x_i`, and the number of pendant
/// triangles hanging off each `y_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CameronWalkerSpec {
    /// `|X|`.
    pub x_size: usize,
    /// `|Y|`.
    pub y_size: usize,
    /// Core edges `(i, j)` meaning `x_i y_j`, with `1 <= i <= |X|`, `1 <= j <= |Y|`.
    pub core_edges: Vec<(usize, usize)>,
    /// `f_i >= 1` for each `x_i`.
    pub leaves: Vec<usize>,
    /// `t_j >= 0` for each `y_j`.
    pub triangles: Vec<usize>,
}

impl CameronWalkerSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCameronWalker(msg));
        if self.x_size == 0 || self.y_size == 0 {
            return bad("both core parts must be nonempty".into());
        }
        if self.leaves.len() != self.x_size {
            return bad(format!(
                "expected {} leaf counts, got {}",
                self.x_size,
                self.leaves.len()
            ));
        }
        if self.triangles.len() != self.y_size {
            return bad(format!(
                "expected {} triangle counts, got {}",
                self.y_size,
                self.triangles.len()
            ));
        }
        if let Some(i) = self.leaves.iter().position(|&f| f == 0) {
            return bad(format!("x_{} has no leaf", i + 1));
        }
        for &(i, j) in &self.core_edges {
            if i == 0 || i > self.x_size || j == 0 || j > self.y_size {
                return bad(format!("core edge x_{i} y_{j} out of range"));
            }
        }
        if !self.core_graph_unchecked().is_connected() {
            return bad("core graph is disconnected".into());
        }
        Ok(())
    }

    /// The bipartite core with `x_i` labeled `i` and `y_j` labeled `|X| + j`.
    pub fn core_graph(&self) -> Result<Graph> {
        self.validate()?;
        Ok(self.core_graph_unchecked())
    }

    fn core_graph_unchecked(&self) -> Graph {
        let edges: Vec<_> = self
            .core_edges
            .iter()
            .map(|&(i, j)| (i, self.x_size + j))
            .collect();
        Graph::new(self.x_size + self.y_size, &edges).expect("core edges checked by caller")
    }

    /// `|X| + |Y| + F + 2T`.
    pub fn vertex_count(&self) -> usize {
        self.x_size
            + self.y_size
            + self.leaves.iter().sum::<usize>()
            + 2 * self.triangles.iter().sum::<usize>()
    }
}

/// Builds the Cameron-Walker graph of `spec`.
///
/// Labeling: `x_1..x_n` are `1..=n`, `y_1..y_m` are `n+1..=n+m`; then come
/// the leaves of `x_1`, the leaves of `x_2`, ...; then the pendant triangles
/// of `y_1`, `y_2`, ..., each contributing two consecutive labels.
pub fn cameron_walker(spec: &CameronWalkerSpec) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = spec.core_graph()?.edges();
    let mut next = spec.x_size + spec.y_size + 1;
    for (i, &f) in spec.leaves.iter().enumerate() {
        for _ in 0..f {
            edges.push((i + 1, next));
            next += 1;
        }
    }
    for (j, &t) in spec.triangles.iter().enumerate() {
        let y = spec.x_size + j + 1;
        for _ in 0..t {
            edges.extend([(y, next), (y, next + 1), (next, next + 1)]);
            next += 2;
        }
    }
    Graph::new(next - 1, &edges)
}

/// The `C`-suspension `G(C)`: a new vertex `n + 1` adjacent exactly to `C`.
pub fn suspension(g: &Graph, attach: &VertexSet) -> Result<Graph> {
    if attach.is_empty() {
        return Err(Error::EmptySuspensionSet);
    }
    let n = g.order();
    for v in attach.iter() {
        check_vertex(v, n)?;
    }
    let mut rows: Vec<FixedBitSet> = g
        .rows()
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.grow(n + 1);
            r
        })
        .collect();
    let mut apex = FixedBitSet::with_capacity(n + 1);
    for v in attach.iter() {
        apex.insert(v - 1);
        rows[v - 1].insert(n);
    }
    rows.push(apex);
    Ok(Graph::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        assert_eq!(cycle_graph(3).unwrap().size(), 3);
        assert_eq!(cycle_graph(2), Err(Error::CycleTooShort(2)));
        assert!(path_graph(0).is_empty());
        assert_eq!(path_graph(1).order(), 1);

        let k23 = complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(k23.order(), 5);
        assert_eq!(k23.size(), 6);
        assert!(!k23.has_edge(1, 2));
        assert!(k23.has_edge(2, 3));
        assert_eq!(complete_multipartite(&[]), Err(Error::EmptyPart));
        assert_eq!(complete_multipartite(&[2, 0]), Err(Error::EmptyPart));
        assert_eq!(complete_multipartite(&[1, 1]).unwrap(), path_graph(2));
    }

    fn edge_spec(leaves: usize, tri: usize) -> CameronWalkerSpec {
        CameronWalkerSpec {
            x_size: 1,
            y_size: 1,
            core_edges: vec![(1, 1)],
            leaves: vec![leaves],
            triangles: vec![tri],
        }
    }

    #[test]
    fn cameron_walker_labeling() {
        let g = cameron_walker(&edge_spec(1, 1)).unwrap();
        // x1=1, y1=2, leaf=3, triangle on 4,5.
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (2, 4), (2, 5), (4, 5)]);

        // x1 with a leaf, joined to y1: a path on three vertices.
        let p3 = cameron_walker(&edge_spec(1, 0)).unwrap();
        assert_eq!(p3.edges(), vec![(1, 2), (1, 3)]);
        assert_eq!(p3.order(), 3);

        let tree = cameron_walker(&CameronWalkerSpec {
            x_size: 2,
            y_size: 1,
            core_edges: vec![(1, 1), (2, 1)],
            leaves: vec![1, 1],
            triangles: vec![0],
        })
        .unwrap();
        assert_eq!(tree.order(), 5);
        assert_eq!(tree.size(), 4);
        assert!(tree.is_connected());
    }

    #[test]
    fn cameron_walker_rejects_invalid() {
        assert!(cameron_walker(&edge_spec(0, 1)).is_err());
        let disconnected = CameronWalkerSpec {
            x_size: 2,
            y_size: 2,
            core_edges: vec![(1, 1), (2, 2)],
            leaves: vec![1, 1],
            triangles: vec![0, 0],
        };
        assert!(matches!(
            cameron_walker(&disconnected),
            Err(Error::InvalidCameronWalker(_))
        ));
        let mut out_of_range = edge_spec(1, 0);
        out_of_range.core_edges.push((1, 2));
        assert!(cameron_walker(&out_of_range).is_err());
        let mut wrong_len = edge_spec(1, 0);
        wrong_len.triangles.push(0);
        assert!(cameron_walker(&wrong_len).is_err());
    }

    #[test]
    fn suspension_shapes() {
        let c3 = cycle_graph(3).unwrap();
        let g = suspension(&c3, &VertexSet::new([1])).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (1, 4), (2, 3)]);

        let cone = suspension(&path_graph(3), &VertexSet::full(3)).unwrap();
        assert_eq!(cone.degree(4), 3);

        let g = suspension(&path_graph(4), &VertexSet::new([1, 4])).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(g, cycle_graph(5).unwrap());

        assert_eq!(
            suspension(&c3, &VertexSet::empty()),
            Err(Error::EmptySuspensionSet)
        );
        assert!(suspension(&c3, &VertexSet::new([4])).is_err());
    }
}
