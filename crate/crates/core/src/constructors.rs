//! Named graphs, labeled so that vertex ids can be addressed directly.
//!
//! `U(n, g)`: cycle `1-2-..-g-1` with the path `g, g+1, .., n` hanging at
//! vertex `g`, so `g` is adjacent to `1`, `g-1` and `g+1`.

use crate::error::GraphError;
use crate::graph::Graph;

fn invalid(msg: String) -> GraphError {
    GraphError::InvalidParameters(msg)
}

fn cycle_edges(g: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=g).map(move |i| (i, i % g + 1))
}

pub fn cycle_graph(g: usize) -> Result<Graph, GraphError> {
    if g < 3 {
        return Err(invalid(format!("cycle length {g} < 3")));
    }
    Graph::new(g, cycle_edges(g))
}

pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    Graph::new(n, (1..n).map(|i| (i, i + 1)))
}

/// `K_{1,n-1}` centered at vertex 1.
pub fn star_graph(n: usize) -> Result<Graph, GraphError> {
    Graph::new(n, (2..=n).map(|i| (1, i)))
}

/// Cycle on `g` vertices with a path on `n - g` vertices hanging at `g`.
pub fn make_u_ng(n: usize, g: usize) -> Result<Graph, GraphError> {
    if g < 3 || n <= g {
        return Err(invalid(format!("U(n, g) needs n > g >= 3, got n={n}, g={g}")));
    }
    Graph::new(n, cycle_edges(g).chain((g..n).map(|i| (i, i + 1))))
}

/// The tree left after deleting the edge `{(g-1)/2, (g+1)/2}` from `U(n, g)`,
/// `g` odd.
pub fn make_ubar_ng(n: usize, g: usize) -> Result<Graph, GraphError> {
    if g.is_multiple_of(2) {
        return Err(invalid(format!("girth {g} must be odd")));
    }
    make_u_ng(n, g)?.without_edge((g - 1) / 2, g.div_ceil(2))
}

/// Cycle `C_g` with one pendant vertex at each listed cycle position; the
/// pendants get ids `g+1, g+2, ..` in list order.
pub fn make_cycle_with_pendants(g: usize, positions: &[usize]) -> Result<Graph, GraphError> {
    let mut seen = vec![false; g + 1];
    for &p in positions {
        if p == 0 || p > g {
            return Err(invalid(format!("position {p} is not on the {g}-cycle")));
        }
        if std::mem::replace(&mut seen[p], true) {
            return Err(invalid(format!("position {p} listed twice")));
        }
    }
    if g < 3 {
        return Err(invalid(format!("cycle length {g} < 3")));
    }
    let pendants = positions.iter().enumerate().map(|(k, &p)| (p, g + 1 + k));
    Graph::new(g + positions.len(), cycle_edges(g).chain(pendants))
}

/// Seven-vertex spider: center 1, legs `1-2-5`, `1-3-6`, `1-4-7`.
pub fn make_spider_s1() -> Graph {
    Graph::new(7, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7)])
        .expect("fixed edge list is valid")
}
