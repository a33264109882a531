//! Graph surgeries that never increase the Laplacian spectral radius.

use std::collections::BTreeMap;

use crate::decompose::{decompose_unicyclic, UnicyclicDecomposition};
use crate::error::{GraphError, TransformError};
use crate::graph::{Edge, Graph};

/// Two paths hanging at a common vertex `v`: `path_p = [v, v_1, .., v_k]`
/// and `path_q = [v, u_1, .., u_l]` with `l >= k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraftSite {
    pub path_p: Vec<usize>,
    pub path_q: Vec<usize>,
}

impl GraftSite {
    pub fn new(path_p: Vec<usize>, path_q: Vec<usize>) -> Self {
        GraftSite { path_p, path_q }
    }

    pub fn anchor(&self) -> usize {
        self.path_p[0]
    }

    /// Length `k` of the shorter path.
    pub fn k(&self) -> usize {
        self.path_p.len() - 1
    }

    /// Length `l` of the longer path.
    pub fn l(&self) -> usize {
        self.path_q.len() - 1
    }

    fn validate(&self, graph: &Graph) -> Result<(), TransformError> {
        let bad = |m: String| Err(TransformError::MalformedSite(m));
        if self.path_p.len() < 2 || self.path_q.len() < 2 {
            return bad("both paths need at least one vertex besides the anchor".into());
        }
        if self.path_p[0] != self.path_q[0] {
            return bad(format!(
                "paths start at different anchors {} and {}",
                self.path_p[0], self.path_q[0]
            ));
        }
        if self.k() > self.l() {
            return bad(format!("need l >= k, got k={} l={}", self.k(), self.l()));
        }
        let mut used = vec![false; graph.order() + 1];
        for &w in self.path_p.iter().chain(&self.path_q[1..]) {
            if !graph.contains_vertex(w) {
                return bad(format!("{w} is not a vertex"));
            }
            if std::mem::replace(&mut used[w], true) {
                return bad(format!("vertex {w} appears twice"));
            }
        }
        for path in [&self.path_p, &self.path_q] {
            for pair in path.windows(2) {
                if !graph.has_edge(pair[0], pair[1]) {
                    return bad(format!("{}-{} is not an edge", pair[0], pair[1]));
                }
            }
            let last = path.len() - 1;
            for (i, &w) in path.iter().enumerate().skip(1) {
                let want = if i == last { 1 } else { 2 };
                if graph.degree(w) != want {
                    return bad(format!(
                        "vertex {w} has degree {}, expected {want}",
                        graph.degree(w)
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Moves the last edge of the shorter path onto the tip of the longer one:
/// removes `{v_{k-1}, v_k}` (with `v_0 = v`) and adds `{u_l, v_k}`. The
/// result is `G_{k-1, l+1}`.
pub fn graft_edge(graph: &Graph, site: &GraftSite) -> Result<Graph, TransformError> {
    site.validate(graph)?;
    let k = site.k();
    let l = site.l();
    let moved = site.path_p[k];
    Ok(graph.edit(&[(site.path_p[k - 1], moved)], &[(site.path_q[l], moved)])?)
}

/// Outward (away-from-cycle) children in every attached tree of a unicyclic
/// graph, plus depth from the cycle.
struct Forest {
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
}

fn outward_forest(graph: &Graph, decomp: &UnicyclicDecomposition) -> Forest {
    let n = graph.order();
    let mut children = vec![Vec::new(); n + 1];
    let mut depth = vec![0; n + 1];
    let mut on_cycle = vec![false; n + 1];
    for &c in decomp.cycle() {
        on_cycle[c] = true;
    }
    for &c in decomp.cycle() {
        let mut stack = vec![(c, 0usize)];
        while let Some((u, parent)) = stack.pop() {
            for &w in graph.neighbors(u) {
                if w != parent && !on_cycle[w] {
                    children[u].push(w);
                    depth[w] = depth[u] + 1;
                    stack.push((w, u));
                }
            }
        }
    }
    Forest { children, depth }
}

/// Follows the unique outward child chain from `start` to its tip.
fn chain_from(forest: &Forest, start: usize) -> Vec<usize> {
    let mut path = vec![start];
    let mut cur = start;
    while let Some(&next) = forest.children[cur].first() {
        path.push(next);
        cur = next;
    }
    path
}

/// Grafts until every attached tree is a path hanging at its cycle vertex.
///
/// Each step picks the deepest vertex with two or more outward branches
/// (ties: smallest id); all its branches are then paths. The shortest branch
/// is grafted onto the longest, ties going to the smaller tip id. Returns the
/// flattened graph and the number of grafts performed.
pub fn flatten_trees(graph: &Graph) -> Result<(Graph, usize), TransformError> {
    let mut current = graph.clone();
    let decomp = decompose_unicyclic(graph)?;
    let mut grafts = 0;
    loop {
        let forest = outward_forest(&current, &decomp);
        let branching = current
            .vertices()
            .filter(|&w| forest.children[w].len() >= 2)
            .max_by(|&a, &b| forest.depth[a].cmp(&forest.depth[b]).then(b.cmp(&a)));
        let Some(w) = branching else {
            return Ok((current, grafts));
        };
        let mut branches: Vec<Vec<usize>> = forest.children[w]
            .iter()
            .map(|&c| chain_from(&forest, c))
            .collect();
        // (length, tip) ascending: first is the shortest, last the longest.
        branches.sort_by_key(|b| (b.len(), *b.last().unwrap_or(&0)));
        let shortest = &branches[0];
        let longest = branches
            .iter()
            .skip(1)
            .max_by(|a, b| {
                a.len()
                    .cmp(&b.len())
                    .then(b.last().unwrap_or(&0).cmp(a.last().unwrap_or(&0)))
            })
            .unwrap_or(shortest);
        let site = GraftSite::new(
            std::iter::once(w).chain(shortest.iter().copied()).collect(),
            std::iter::once(w).chain(longest.iter().copied()).collect(),
        );
        current = graft_edge(&current, &site)?;
        grafts += 1;
    }
}

/// The path hanging at each loaded cycle vertex of a flattened unicyclic
/// graph, listed from the vertex adjacent to the cycle out to the tip.
pub fn pendant_paths(
    graph: &Graph,
    decomp: &UnicyclicDecomposition,
) -> Result<BTreeMap<usize, Vec<usize>>, TransformError> {
    let forest = outward_forest(graph, decomp);
    let mut paths = BTreeMap::new();
    for &c in decomp.cycle() {
        match forest.children[c].as_slice() {
            [] => {}
            [first] => {
                let path = chain_from(&forest, *first);
                if path.iter().any(|&w| forest.children[w].len() > 1) {
                    return Err(TransformError::NotFlattened(format!(
                        "tree at {c} is not a path"
                    )));
                }
                paths.insert(c, path);
            }
            _ => {
                return Err(TransformError::NotFlattened(format!(
                    "cycle vertex {c} carries more than one branch"
                )))
            }
        }
    }
    Ok(paths)
}

fn check_ordering(
    paths: &BTreeMap<usize, Vec<usize>>,
    ordering: &[usize],
) -> Result<(), TransformError> {
    let mut sorted = ordering.to_vec();
    sorted.sort_unstable();
    let expected: Vec<usize> = paths.keys().copied().collect();
    if sorted != expected {
        return Err(TransformError::BadOrdering { ordering: ordering.to_vec(), expected });
    }
    Ok(())
}

/// For `j = 2..r`, detaches the path at `i_j` and hangs it from the tip of
/// the path that was at `i_{j-1}` (head to tail, orientation kept).
fn chain_edits(paths: &BTreeMap<usize, Vec<usize>>, ordering: &[usize]) -> (Vec<Edge>, Vec<Edge>) {
    let mut remove = Vec::new();
    let mut add = Vec::new();
    for pair in ordering.windows(2) {
        let (prev, cur) = (pair[0], pair[1]);
        let head = paths[&cur][0];
        let prev_tip = *paths[&prev].last().unwrap_or(&prev);
        remove.push((cur, head));
        add.push((prev_tip, head));
    }
    (remove, add)
}

/// Concatenates the pendant paths of a flattened unicyclic graph into one
/// path hanging at `ordering[0]`.
pub fn chain_paths(g1: &Graph, ordering: &[usize]) -> Result<Graph, TransformError> {
    let decomp = decompose_unicyclic(g1)?;
    let paths = pendant_paths(g1, &decomp)?;
    check_ordering(&paths, ordering)?;
    let (remove, add) = chain_edits(&paths, ordering);
    Ok(g1.edit(&remove, &add)?)
}

/// Odd girth only: deletes the cycle edge opposite `ordering[0]`, then
/// chains the pendant paths as in [`chain_paths`]. The result is a tree.
pub fn open_and_chain(g1: &Graph, ordering: &[usize]) -> Result<Graph, TransformError> {
    let decomp = decompose_unicyclic(g1)?;
    let paths = pendant_paths(g1, &decomp)?;
    check_ordering(&paths, ordering)?;
    let first = *ordering
        .first()
        .ok_or_else(|| TransformError::BadOrdering { ordering: vec![], expected: vec![] })?;
    let opposite = decomp.opposite_edge(first)?;
    let (mut remove, add) = chain_edits(&paths, ordering);
    remove.push(opposite);
    Ok(g1.edit(&remove, &add)?)
}

/// Deletes the cycle edge opposite cycle vertex `j` of an odd-girth
/// unicyclic graph, leaving a spanning tree.
pub fn open_cycle(graph: &Graph, j: usize) -> Result<Graph, TransformError> {
    let decomp = decompose_unicyclic(graph)?;
    let (a, b) = decomp.opposite_edge(j)?;
    Ok(graph.without_edge(a, b)?)
}

/// Attaches `s` paths of `k` new vertices at `v`, returning the graph without
/// and with the extra edges among path tips.
///
/// New vertices are numbered after the base: path `i` (1-based) uses ids
/// `base.n + (i-1)k + 1 ..= base.n + ik`, the first adjacent to `v` and the
/// last being the tip. `tip_edges` lists pairs of path indices.
pub fn guo_pair(
    base: &Graph,
    v: usize,
    s: usize,
    k: usize,
    tip_edges: &[(usize, usize)],
) -> Result<(Graph, Graph), TransformError> {
    let bad = |m: String| Err(TransformError::BadAttachment(m));
    if !base.contains_vertex(v) {
        return bad(format!("{v} is not a vertex of the base graph"));
    }
    if s < 2 || k < 1 {
        return bad(format!("need s >= 2 and k >= 1, got s={s} k={k}"));
    }
    if tip_edges.is_empty() || tip_edges.len() > s * (s - 1) / 2 {
        return bad(format!("need 1..={} tip edges, got {}", s * (s - 1) / 2, tip_edges.len()));
    }
    let n0 = base.order();
    let vertex = |path: usize, step: usize| n0 + (path - 1) * k + step;
    let mut attach = Vec::with_capacity(s * k);
    for path in 1..=s {
        attach.push((v, vertex(path, 1)));
        for step in 1..k {
            attach.push((vertex(path, step), vertex(path, step + 1)));
        }
    }
    let plain = base.with_extra_vertices(s * k, &attach)?;
    let mut extra = Vec::with_capacity(tip_edges.len());
    for &(a, b) in tip_edges {
        if a == 0 || b == 0 || a > s || b > s || a == b {
            return bad(format!("({a}, {b}) is not a pair of distinct path indices in 1..={s}"));
        }
        extra.push((vertex(a, k), vertex(b, k)));
    }
    let joined = plain.edit(&[], &extra).map_err(|e| match e {
        GraphError::DuplicateEdge { .. } => {
            TransformError::BadAttachment("tip edge listed twice".into())
        }
        other => other.into(),
    })?;
    Ok((plain, joined))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::constructors::*;
    use crate::spectra::laplacian_spectral_radius as lambda;

    #[test]
    fn graft_on_cherry() {
        let g = star_graph(3).unwrap();
        let site = GraftSite::new(vec![1, 2], vec![1, 3]);
        let h = graft_edge(&g, &site).unwrap();
        assert!(is_isomorphic(&h, &path_graph(3).unwrap()));
        assert!(h.has_edge(3, 2));
        assert!(h.degree(1) == 1);
    }

    #[test]
    fn graft_decreases_lambda_on_trees() {
        // Base edge 1-7, with legs of length 2 and 3 at vertex 1.
        let g = Graph::new(7, [(1, 2), (2, 3), (1, 4), (4, 5), (5, 6), (1, 7)]).unwrap();
        let site = GraftSite::new(vec![1, 2, 3], vec![1, 4, 5, 6]);
        let h = graft_edge(&g, &site).unwrap();
        assert_eq!(h.order(), g.order());
        assert_eq!(h.size(), g.size());
        assert!(lambda(&h).unwrap() < lambda(&g).unwrap() - 1e-9);
    }

    #[test]
    fn graft_rejects_malformed_sites() {
        let g = Graph::new(6, [(1, 2), (2, 3), (1, 4), (4, 5), (5, 6)]).unwrap();
        let cases = [
            GraftSite::new(vec![1, 4, 5, 6], vec![1, 2, 3]),
            GraftSite::new(vec![1, 2], vec![1, 4, 5, 6]),
            GraftSite::new(vec![1, 3], vec![1, 4]),
            GraftSite::new(vec![1], vec![1, 4]),
            GraftSite::new(vec![2, 3], vec![1, 4]),
        ];
        for site in cases {
            assert!(matches!(graft_edge(&g, &site), Err(TransformError::MalformedSite(_))), "{site:?}");
        }
    }

    #[test]
    fn flatten_is_noop_on_u() {
        let u = make_u_ng(10, 4).unwrap();
        let (f, grafts) = flatten_trees(&u).unwrap();
        assert_eq!(grafts, 0);
        assert_eq!(f, u);
    }

    #[test]
    fn flatten_cherry_on_c4() {
        // C_4 with K_{1,2} attached by its center at vertex 4.
        let g = Graph::new(7, [(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 6), (5, 7)]).unwrap();
        let (f, grafts) = flatten_trees(&g).unwrap();
        assert!(grafts >= 1);
        assert!(is_isomorphic(&f, &make_u_ng(7, 4).unwrap()));
        assert!(lambda(&f).unwrap() < lambda(&g).unwrap() - 1e-9);
        let (again, more) = flatten_trees(&f).unwrap();
        assert_eq!(more, 0);
        assert_eq!(again, f);
    }

    #[test]
    fn flatten_two_pendants_on_c5() {
        let g = Graph::new(7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (5, 6), (5, 7)]).unwrap();
        let (f, grafts) = flatten_trees(&g).unwrap();
        assert_eq!(grafts, 1);
        assert!(is_isomorphic(&f, &make_u_ng(7, 5).unwrap()));
        assert!(lambda(&f).unwrap() <= lambda(&g).unwrap() + 1e-9);
    }

    #[test]
    fn flatten_keeps_loads() {
        // Two trees: a cherry at 1 and a spider at 3.
        let g = Graph::new(
            11,
            [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (1, 6), (3, 7), (7, 8), (7, 9), (9, 10), (8, 11)],
        )
        .unwrap();
        let (f, _) = flatten_trees(&g).unwrap();
        let before = decompose_unicyclic(&g).unwrap();
        let after = decompose_unicyclic(&f).unwrap();
        assert_eq!(before.attach_sizes(), after.attach_sizes());
        assert_eq!(before.c_set(), after.c_set());
        let paths = pendant_paths(&f, &after).unwrap();
        assert_eq!(paths[&1].len(), 2);
        assert_eq!(paths[&3].len(), 5);
    }

    #[test]
    fn chain_two_paths_on_c4() {
        let g1 = Graph::new(
            9,
            [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6), (6, 7), (3, 8), (8, 9)],
        )
        .unwrap();
        let g2 = chain_paths(&g1, &[1, 3]).unwrap();
        assert!(is_isomorphic(&g2, &make_u_ng(9, 4).unwrap()));
        assert_eq!(g2.size(), 9);
        assert_eq!(chain_paths(&g1, &[1]), Err(TransformError::BadOrdering {
            ordering: vec![1],
            expected: vec![1, 3],
        }));
    }

    #[test]
    fn chain_single_path_is_identity() {
        let u = make_u_ng(8, 5).unwrap();
        assert_eq!(chain_paths(&u, &[5]).unwrap(), u);
    }

    #[test]
    fn chain_rejects_unflattened() {
        let g = Graph::new(7, [(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 6), (5, 7)]).unwrap();
        assert!(matches!(chain_paths(&g, &[4]), Err(TransformError::NotFlattened(_))));
    }

    #[test]
    fn open_and_chain_gives_ubar() {
        // C_5 with paths of 2 at vertex 1 and 1 at vertex 3.
        let g1 = Graph::new(8, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6), (6, 7), (3, 8)])
            .unwrap();
        let h3 = open_and_chain(&g1, &[1, 3]).unwrap();
        assert!(h3.is_tree());
        assert!(is_isomorphic(&h3, &make_ubar_ng(8, 5).unwrap()));
    }

    #[test]
    fn open_cycle_examples() {
        for (n, g) in [(9, 7), (8, 5), (12, 3)] {
            let opened = open_cycle(&make_u_ng(n, g).unwrap(), g).unwrap();
            assert_eq!(opened, make_ubar_ng(n, g).unwrap());
        }
        let u97 = make_u_ng(9, 7).unwrap();
        let t = open_cycle(&u97, 7).unwrap();
        assert!((lambda(&t).unwrap() - lambda(&u97).unwrap()).abs() <= 1e-9);
        let p5 = open_cycle(&cycle_graph(5).unwrap(), 1).unwrap();
        assert!(is_isomorphic(&p5, &path_graph(5).unwrap()));
        assert!(matches!(
            open_cycle(&make_u_ng(7, 4).unwrap(), 4),
            Err(TransformError::Graph(GraphError::EvenCycle(4)))
        ));
    }

    #[test]
    fn guo_smallest_case() {
        let (plain, joined) = guo_pair(&path_graph(1).unwrap(), 1, 2, 1, &[(1, 2)]).unwrap();
        assert!(is_isomorphic(&plain, &path_graph(3).unwrap()));
        assert!(is_isomorphic(&joined, &cycle_graph(3).unwrap()));
        assert!((lambda(&plain).unwrap() - lambda(&joined).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn guo_on_c4() {
        let (plain, joined) = guo_pair(&cycle_graph(4).unwrap(), 2, 2, 2, &[(1, 2)]).unwrap();
        assert_eq!(plain.order(), 8);
        assert_eq!(joined.size(), plain.size() + 1);
        assert!((lambda(&plain).unwrap() - lambda(&joined).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn guo_builds_u_from_spine() {
        for (n, g) in [(9, 7), (8, 5), (12, 9), (6, 3)] {
            let spine = path_graph(n - g + 1).unwrap();
            let (plain, joined) = guo_pair(&spine, 1, 2, (g - 1) / 2, &[(1, 2)]).unwrap();
            assert!(is_isomorphic(&joined, &make_u_ng(n, g).unwrap()));
            assert!(is_isomorphic(&plain, &make_ubar_ng(n, g).unwrap()));
            assert!((lambda(&plain).unwrap() - lambda(&joined).unwrap()).abs() <= 1e-9);
        }
    }

    #[test]
    fn guo_rejects_bad_tips() {
        let base = cycle_graph(4).unwrap();
        assert!(guo_pair(&base, 1, 2, 1, &[(1, 3)]).is_err());
        assert!(guo_pair(&base, 1, 2, 1, &[(1, 1)]).is_err());
        assert!(guo_pair(&base, 1, 3, 1, &[(1, 2), (2, 1)]).is_err());
        assert!(guo_pair(&base, 1, 1, 1, &[(1, 2)]).is_err());
        assert!(guo_pair(&base, 1, 2, 1, &[]).is_err());
    }
}
