//! Recovery of the cycle and the attached trees of a unicyclic graph.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{edge, Edge, Graph};

/// The unique cycle of a unicyclic graph together with the tree hanging at
/// each cycle vertex.
///
/// All per-vertex vectors are parallel to `cycle`. The cycle starts at its
/// smallest vertex and continues towards the smaller of that vertex's two
/// cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnicyclicDecomposition {
    n: usize,
    cycle: Vec<usize>,
    attach: Vec<usize>,
    trees: Vec<Vec<usize>>,
}

impl UnicyclicDecomposition {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn girth(&self) -> usize {
        self.cycle.len()
    }

    /// Cycle vertices in cyclic order.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// Index of `v` in `cycle()`.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.cycle.iter().position(|&c| c == v)
    }

    /// Number of vertices of the tree attached at cycle vertex `v`.
    pub fn attach_size(&self, v: usize) -> Option<usize> {
        self.position(v).map(|p| self.attach[p])
    }

    /// Attached tree sizes in cycle order.
    pub fn attach_sizes(&self) -> &[usize] {
        &self.attach
    }

    /// Non-cycle vertices hanging at cycle vertex `v`, in BFS order from `v`.
    pub fn tree_vertices(&self, v: usize) -> Option<&[usize]> {
        self.position(v).map(|p| self.trees[p].as_slice())
    }

    /// Cycle vertices carrying a non-empty tree, in cycle order.
    pub fn c_set(&self) -> Vec<usize> {
        self.cycle
            .iter()
            .zip(&self.attach)
            .filter(|(_, &l)| l > 0)
            .map(|(&v, _)| v)
            .collect()
    }

    /// Distance between two cycle vertices measured along the cycle (equal
    /// to their graph distance).
    pub fn cycle_distance(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        let pu = self.position(u).ok_or(GraphError::NotOnCycle(u))?;
        let pv = self.position(v).ok_or(GraphError::NotOnCycle(v))?;
        let diff = pu.abs_diff(pv);
        Ok(diff.min(self.girth() - diff))
    }

    /// The cycle edges, `{cycle[i], cycle[i+1]}` for each `i`.
    pub fn cycle_edges(&self) -> Vec<Edge> {
        let g = self.girth();
        (0..g)
            .map(|i| edge(self.cycle[i], self.cycle[(i + 1) % g]))
            .collect()
    }

    /// For odd girth, the cycle edge whose endpoints both lie at cycle
    /// distance `(g-1)/2` from `j`.
    pub fn opposite_edge(&self, j: usize) -> Result<Edge, GraphError> {
        let g = self.girth();
        if g.is_multiple_of(2) {
            return Err(GraphError::EvenCycle(g));
        }
        let p = self.position(j).ok_or(GraphError::NotOnCycle(j))?;
        let a = self.cycle[(p + (g - 1) / 2) % g];
        let b = self.cycle[(p + g.div_ceil(2)) % g];
        Ok(edge(a, b))
    }
}

/// Finds the unique cycle by stripping leaves (what survives is the
/// 2-core) and assigns every stripped vertex to the cycle vertex it reaches
/// without re-entering the cycle.
pub fn decompose_unicyclic(graph: &Graph) -> Result<UnicyclicDecomposition, GraphError> {
    let n = graph.order();
    if !graph.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if graph.size() != n {
        return Err(GraphError::NotUnicyclic { n, m: graph.size() });
    }

    let mut degree = graph.degrees();
    let mut stripped = vec![false; n];
    let mut leaves: VecDeque<usize> = graph.vertices().filter(|&v| degree[v - 1] == 1).collect();
    while let Some(v) = leaves.pop_front() {
        stripped[v - 1] = true;
        for &w in graph.neighbors(v) {
            if !stripped[w - 1] {
                degree[w - 1] -= 1;
                if degree[w - 1] == 1 {
                    leaves.push_back(w);
                }
            }
        }
    }

    let on_cycle = |v: usize| !stripped[v - 1];
    let start = graph
        .vertices()
        .find(|&v| on_cycle(v))
        .ok_or(GraphError::NotUnicyclic { n, m: graph.size() })?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = graph
        .neighbors(start)
        .iter()
        .copied()
        .filter(|&w| on_cycle(w))
        .min()
        .ok_or(GraphError::NotUnicyclic { n, m: graph.size() })?;
    while cur != start {
        cycle.push(cur);
        let next = graph
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| on_cycle(w) && w != prev)
            .ok_or(GraphError::NotUnicyclic { n, m: graph.size() })?;
        prev = cur;
        cur = next;
    }

    let mut trees = Vec::with_capacity(cycle.len());
    for &c in &cycle {
        let mut members = Vec::new();
        let mut queue = VecDeque::from([c]);
        let mut seen = vec![false; n];
        seen[c - 1] = true;
        while let Some(u) = queue.pop_front() {
            for &w in graph.neighbors(u) {
                if !seen[w - 1] && !on_cycle(w) {
                    seen[w - 1] = true;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        trees.push(members);
    }
    let attach = trees.iter().map(Vec::len).collect();
    Ok(UnicyclicDecomposition { n, cycle, attach, trees })
}
