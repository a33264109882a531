//! Simple undirected graphs on the vertex set `{1, .., n}`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::GraphError;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an unordered pair so that the smaller vertex comes first.
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph with 1-based vertex ids.
///
/// Construction validates the edge set once; afterwards the value is
/// immutable and every query is pure.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting self-loops, ids outside
    /// `1..=n` and repeated pairs (`(2,1)` repeats `(1,2)`).
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if !set.insert(edge(u, v)) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    fn from_edge_set(n: usize, edges: BTreeSet<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// Edges in ascending order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    /// Sorted neighbors of `v`. Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        (1..=self.n).contains(&v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&edge(u, v))
    }

    /// Returns a copy with the edge `{u, v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut edges = self.edges.clone();
        if !edges.remove(&edge(u, v)) {
            return Err(GraphError::MissingEdge { u, v });
        }
        Ok(Self::from_edge_set(self.n, edges))
    }

    /// Returns a copy with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        Graph::new(self.n, self.edges().chain(std::iter::once((u, v))))
    }

    /// Removes and adds edges in one step; removals are applied first.
    pub fn edit(&self, remove: &[Edge], add: &[Edge]) -> Result<Self, GraphError> {
        let mut edges = self.edges.clone();
        for &(u, v) in remove {
            if !edges.remove(&edge(u, v)) {
                return Err(GraphError::MissingEdge { u, v });
            }
        }
        for &(u, v) in add {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if u == 0 || v == 0 || u > self.n || v > self.n {
                return Err(GraphError::OutOfRange { u, v, n: self.n });
            }
            if !edges.insert(edge(u, v)) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
        }
        Ok(Self::from_edge_set(self.n, edges))
    }

    /// Returns a graph on `n + extra` vertices containing this one.
    pub fn with_extra_vertices(&self, extra: usize, add: &[Edge]) -> Result<Self, GraphError> {
        Graph::new(self.n + extra, self.edges().chain(add.iter().copied()))
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v - 1]`.
    ///
    /// `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation);
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p == 0 || p > self.n || std::mem::replace(&mut seen[p - 1], true) {
                return Err(GraphError::BadPermutation);
            }
        }
        Graph::new(self.n, self.edges().map(|(u, v)| (perm[u - 1], perm[v - 1])))
    }

    /// Breadth-first hop counts from `src`; `None` for unreachable vertices.
    /// Index `i` holds the distance to vertex `i + 1`.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src - 1] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u - 1].unwrap_or(0);
            for &w in self.neighbors(u) {
                if dist[w - 1].is_none() {
                    dist[w - 1] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(1).iter().all(Option::is_some)
    }

    /// Shortest-path length between `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        for w in [u, v] {
            if !self.contains_vertex(w) {
                return Err(GraphError::OutOfRange { u, v, n: self.n });
            }
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(self.bfs_distances(u)[v - 1].unwrap_or(0))
    }

    /// Length of a shortest cycle, or `None` for a forest.
    ///
    /// Runs a BFS from every vertex; a non-tree edge `{u, w}` met during the
    /// search from `r` closes a closed walk of length `d(u) + d(w) + 1`
    /// through `r`, and the minimum over all roots is the girth.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in self.vertices() {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![0usize; self.n];
            dist[root - 1] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if dist[w - 1] == usize::MAX {
                        dist[w - 1] = dist[u - 1] + 1;
                        parent[w - 1] = u;
                        queue.push_back(w);
                    } else if parent[u - 1] != w {
                        let len = dist[u - 1] + dist[w - 1] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Two-colorability test.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None; self.n];
        for start in self.vertices() {
            if color[start - 1].is_some() {
                continue;
            }
            color[start - 1] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u - 1].unwrap_or(false);
                for &w in self.neighbors(u) {
                    match color[w - 1] {
                        None => {
                            color[w - 1] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Connected with as many edges as vertices.
    pub fn is_unicyclic(&self) -> bool {
        self.size() == self.n && self.is_connected()
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.n && self.is_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cycle_graph, make_u_ng, path_graph};

    #[test]
    fn triangle_is_accepted() {
        let g = Graph::new(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(g.girth(), Some(3));
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(Graph::new(2, [(1, 1)]), Err(GraphError::SelfLoop { vertex: 1 }));
    }

    #[test]
    fn rejects_out_of_range_and_duplicates() {
        assert_eq!(
            Graph::new(3, [(1, 4)]),
            Err(GraphError::OutOfRange { u: 1, v: 4, n: 3 })
        );
        assert_eq!(
            Graph::new(3, [(1, 2), (2, 1)]),
            Err(GraphError::DuplicateEdge { u: 2, v: 1 })
        );
        assert_eq!(Graph::new(0, []), Err(GraphError::Empty));
    }

    #[test]
    fn u54_from_edge_list() {
        let g = Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5)]).unwrap();
        assert!(g.is_unicyclic());
        assert_eq!(g.girth(), Some(4));
        assert_eq!(g.degree(1), 3);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle_graph(7).unwrap().girth(), Some(7));
        assert_eq!(path_graph(5).unwrap().girth(), None);
        assert_eq!(make_u_ng(12, 10).unwrap().girth(), Some(10));
    }

    #[test]
    fn girth_of_u_ng_range() {
        for n in 4..=14 {
            for g in 3..n {
                assert_eq!(make_u_ng(n, g).unwrap().girth(), Some(g), "U({n},{g})");
            }
        }
    }

    #[test]
    fn distances() {
        let c10 = cycle_graph(10).unwrap();
        assert_eq!(c10.distance(1, 6).unwrap(), 5);
        assert_eq!(c10.distance(3, 3).unwrap(), 0);
        for i in 1..=10usize {
            for j in 1..=10usize {
                let diff = i.abs_diff(j);
                assert_eq!(c10.distance(i, j).unwrap(), diff.min(10 - diff));
            }
        }
        let disconnected = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(disconnected.distance(1, 3), Err(GraphError::Disconnected));
    }

    #[test]
    fn distance_on_u95_matches_path_enumeration() {
        // Oracle: shortest simple path by exhaustive DFS.
        fn dfs(g: &Graph, at: usize, target: usize, seen: &mut Vec<bool>, len: usize) -> usize {
            if at == target {
                return len;
            }
            let mut best = usize::MAX;
            for &w in g.neighbors(at) {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    best = best.min(dfs(g, w, target, seen, len + 1));
                    seen[w - 1] = false;
                }
            }
            best
        }
        let g = make_u_ng(9, 5).unwrap();
        let mut seen = vec![false; 9];
        seen[0] = true;
        let brute = dfs(&g, 1, 9, &mut seen, 0);
        assert_eq!(brute, 5);
        assert_eq!(g.distance(1, 9).unwrap(), brute);
    }

    #[test]
    fn bipartite_examples() {
        assert!(make_u_ng(10, 6).unwrap().is_bipartite());
        assert!(!make_u_ng(10, 5).unwrap().is_bipartite());
        assert!(crate::constructors::make_ubar_ng(10, 5).unwrap().is_bipartite());
    }

    #[test]
    fn edit_and_relabel() {
        let g = cycle_graph(4).unwrap();
        let h = g.edit(&[(1, 2)], &[(1, 3)]).unwrap();
        assert!(h.has_edge(3, 1));
        assert!(!h.has_edge(1, 2));
        assert!(g.edit(&[(1, 3)], &[]).is_err());
        let r = g.relabel(&[2, 3, 4, 1]).unwrap();
        assert_eq!(r, g);
        assert_eq!(g.relabel(&[1, 1, 2, 3]), Err(GraphError::BadPermutation));
    }
}
