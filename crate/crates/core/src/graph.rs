//! Simple undirected graphs, used to build edge ideals.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Loop-free simple graph on vertices `0..n`. Edges are stored as sorted
/// pairs `(u, v)` with `u < v`, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Outcome of a breadth-first 2-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Color (0 or 1) of each vertex.
    Bipartite(Vec<u8>),
    /// Vertices of an odd cycle, in traversal order.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite(_))
    }
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, count: n });
                }
            }
            if u == v {
                return Err(Error::GraphLoop(u));
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(Graph { n, edges: out })
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument("a cycle needs at least 3 vertices".into()));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// Graph on `n` vertices whose edges are the set bits of `mask`, indexed
    /// in the order `(0,1), (0,2), ..., (1,2), ...`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        if pairs.len() > 64 {
            return Err(Error::CapExceeded { what: "edge mask vertices".into(), limit: 11 });
        }
        Graph::new(n, pairs.into_iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| e))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Breadth-first 2-coloring of every component.
    pub fn bipartition(&self) -> Bipartition {
        let adj = self.adjacency();
        let mut color: Vec<Option<u8>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(0);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("colored on enqueue");
                for &v in &adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(1 - cu);
                            parent[v] = u;
                            depth[v] = depth[u] + 1;
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => {
                            return Bipartition::OddCycle(odd_cycle(u, v, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartition::Bipartite(color.into_iter().map(|c| c.unwrap_or(0)).collect())
    }
}

/// Closes the two tree paths from `u` and `v` at their lowest common ancestor.
fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_odd_cycle(g: &Graph, cyc: &[usize]) {
        assert!(cyc.len() % 2 == 1, "{cyc:?}");
        for i in 0..cyc.len() {
            let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
            assert!(g.edges().contains(&(a.min(b), a.max(b))), "{cyc:?}");
        }
    }

    #[test]
    fn construction_rules() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::GraphLoop(1)));
        assert!(Graph::new(3, [(0, 3)]).is_err());
        let g = Graph::new(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn bipartite_examples() {
        assert!(Graph::cycle(4).unwrap().bipartition().is_bipartite());
        assert!(Graph::new(0, []).unwrap().bipartition().is_bipartite());
        assert!(Graph::new(5, []).unwrap().bipartition().is_bipartite());
        let tri = Graph::cycle(3).unwrap();
        match tri.bipartition() {
            Bipartition::OddCycle(c) => {
                assert_eq!(c.len(), 3);
                check_odd_cycle(&tri, &c);
            }
            b => panic!("{b:?}"),
        }
    }

    #[test]
    fn odd_cycle_witnesses_are_closed_walks() {
        for n in 3..8 {
            for mask in 0u64..(1 << (n * (n - 1) / 2)).min(4096) {
                let g = Graph::from_edge_mask(n, mask).unwrap();
                if let Bipartition::OddCycle(c) = g.bipartition() {
                    check_odd_cycle(&g, &c);
                }
            }
        }
    }
}
