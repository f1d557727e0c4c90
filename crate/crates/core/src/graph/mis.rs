//! Enumeration of maximal independent sets.
//!
//! Vertices are decided in label order (include before exclude). A vertex's
//! domination "deadline" is the largest label in its closed neighborhood; once
//! that label has been decided the vertex must be in the set or have a chosen
//! neighbor, otherwise the branch is dead. Every surviving leaf is therefore a
//! maximal independent set, and each set is produced once.

use fixedbitset::FixedBitSet;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

pub const DEFAULT_MIS_LIMIT: usize = 24;

/// All maximal independent sets of `g`, ordered by size then lexicographically.
pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    maximal_independent_sets_capped(g, DEFAULT_MIS_LIMIT)
}

pub fn maximal_independent_sets_capped(g: &Graph, limit: usize) -> Result<Vec<VertexSet>> {
    let n = g.order();
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "maximal independent set enumeration",
            n,
            limit,
        });
    }
    let rows = g.rows();
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, row) in rows.iter().enumerate() {
        let deadline = row.ones().next_back().map_or(u, |last| last.max(u));
        due[deadline].push(u);
    }

    let mut search = Search {
        rows,
        due: &due,
        chosen: FixedBitSet::with_capacity(n),
        out: Vec::new(),
    };
    search.branch(0);
    let mut out = search.out;
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

struct Search<'a> {
    rows: &'a [FixedBitSet],
    due: &'a [Vec<usize>],
    chosen: FixedBitSet,
    out: Vec<VertexSet>,
}

impl Search<'_> {
    fn branch(&mut self, v: usize) {
        if v == self.rows.len() {
            self.out.push(self.chosen.ones().map(|i| i + 1).collect());
            return;
        }
        if self.rows[v].is_disjoint(&self.chosen) {
            self.chosen.insert(v);
            if self.dominated_through(v) {
                self.branch(v + 1);
            }
            self.chosen.set(v, false);
        }
        if self.dominated_through(v) {
            self.branch(v + 1);
        }
    }

    /// Every vertex whose deadline is `v` is chosen or has a chosen neighbor.
    fn dominated_through(&self, v: usize) -> bool {
        self.due[v]
            .iter()
            .all(|&u| self.chosen.contains(u) || !self.rows[u].is_disjoint(&self.chosen))
    }
}
