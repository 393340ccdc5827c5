//! Simple undirected graphs: boards, 1-skeleta, and the inputs of Hom
//! complexes and graph connections.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) is out of range")]
    OutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("unknown graph name {0:?} (expected kN, cN, pN or MxN)")]
    UnknownName(String),
}

/// An undirected graph without loops or multiple edges on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;
    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::new(raw.vertex_count, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            vertex_count: g.n,
            edges: g.edges,
        }
    }
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::OutOfRange(a, b));
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
            list.push((u, v));
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        list.sort_unstable();
        Ok(Graph { n, edges: list, adj })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::new(n, edges).unwrap()
    }

    /// The cycle `C_n` on `0..n` (requires `n ≥ 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// The `rows × cols` grid graph; cell `(r, c)` is vertex `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::new(rows * cols, edges).unwrap()
    }

    /// Parses `kN`, `cN`, `pN` (path on N vertices) or `MxN` (grid).
    pub fn from_name(name: &str) -> Result<Self, GraphError> {
        let lower = name.trim().to_ascii_lowercase();
        let bad = || GraphError::UnknownName(name.to_string());
        if let Some((r, c)) = lower.split_once('x') {
            let r: usize = r.parse().map_err(|_| bad())?;
            let c: usize = c.parse().map_err(|_| bad())?;
            return Ok(Graph::grid(r, c));
        }
        let (kind, num) = lower.split_at(1.min(lower.len()));
        let n: usize = num.parse().map_err(|_| bad())?;
        match kind {
            "k" => Ok(Graph::complete(n)),
            "c" if n >= 3 => Ok(Graph::cycle(n)),
            "p" => Ok(Graph::path(n)),
            _ => Err(bad()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|nb| nb.len() == d).then_some(d)
    }

    /// Connected component label per vertex, labels in order of discovery.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// BFS parents from `root`, visiting neighbors in increasing order.
    /// `parent[root] == Some(root)`; unreachable vertices get `None`.
    pub fn bfs_parents(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.n];
        parent[root] = Some(root);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if parent[w].is_none() {
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// Proper 2-coloring by BFS, or an odd cycle (as a closed vertex walk
    /// without the repeated endpoint) proving none exists.
    pub fn two_coloring(&self) -> Result<Vec<u8>, Vec<usize>> {
        let mut color: Vec<Option<u8>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(0);
            parent[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(1 - cu);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Err(odd_cycle(u, w, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_ok()
    }

    /// True iff no edge joins two vertices of the same color.
    pub fn is_proper_coloring(&self, colors: &[u8]) -> bool {
        colors.len() == self.n && self.edges.iter().all(|&(u, v)| colors[u] != colors[v])
    }
}

fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
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

    fn is_closed_cycle(g: &Graph, cycle: &[usize]) -> bool {
        (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
    }

    #[test]
    fn named_graphs() {
        assert_eq!(Graph::from_name("k4").unwrap().edge_count(), 6);
        assert_eq!(Graph::from_name("C5").unwrap().edge_count(), 5);
        assert_eq!(Graph::from_name("4x4").unwrap().edge_count(), 24);
        assert!(Graph::from_name("q3").is_err());
        assert!(Graph::from_name("c2").is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(Graph::new(2, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2, [(0, 2)]), Err(GraphError::OutOfRange(0, 2)));
    }

    #[test]
    fn odd_cycle_witness() {
        for n in [3, 5, 7, 9] {
            let g = Graph::cycle(n);
            let cycle = g.two_coloring().unwrap_err();
            assert_eq!(cycle.len() % 2, 1);
            assert!(is_closed_cycle(&g, &cycle));
        }
        // triangle hanging off a long path
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let cycle = g.two_coloring().unwrap_err();
        assert_eq!(cycle.len(), 3);
        assert!(is_closed_cycle(&g, &cycle));
    }

    #[test]
    fn bipartite_coloring() {
        let g = Graph::grid(3, 4);
        let colors = g.two_coloring().unwrap();
        assert!(g.is_proper_coloring(&colors));
        assert_eq!(g.regularity(), None);
        assert_eq!(Graph::cycle(6).regularity(), Some(2));
        assert!(Graph::cycle(6).is_connected());
        assert!(!Graph::new(3, [(0, 1)]).unwrap().is_connected());
    }
}
