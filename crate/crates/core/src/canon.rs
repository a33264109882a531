//! Canonical labeling for small graphs.
//!
//! The canonical form is the lexicographically smallest upper-triangle
//! adjacency string over the leaves of an individualization-refinement
//! search. Cells are refined to an equitable partition, starting from the
//! (degree, distance profile) partition. When branching on a cell, only one
//! vertex per twin class is tried: swapping two twins is an automorphism
//! that fixes everything individualized so far, so their subtrees yield the
//! same set of leaf strings.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::Graph;

/// Canonical byte string of a graph; equal exactly for isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bits
    }
}

/// `"<n>:<hex>"`, the hex being the packed upper triangle (row-major,
/// most significant bit first).
impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for b in &self.bits {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

struct Bits {
    words: usize,
    rows: Vec<u64>,
}

impl Bits {
    fn new(graph: &Graph) -> Self {
        let n = graph.order();
        let words = n.div_ceil(64);
        let mut rows = vec![0u64; n * words];
        for (u, v) in graph.edges() {
            let (a, b) = (u - 1, v - 1);
            rows[a * words + b / 64] |= 1 << (b % 64);
            rows[b * words + a / 64] |= 1 << (a % 64);
        }
        Bits { words, rows }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    fn count_in(&self, v: usize, mask: &[u64]) -> u32 {
        self.row(v).iter().zip(mask).map(|(a, b)| (a & b).count_ones()).sum()
    }

    /// `N(u) \ {v} == N(v) \ {u}`.
    fn twins(&self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.row(u), self.row(v));
        (0..self.words).all(|w| {
            let mut a = ru[w];
            let mut b = rv[w];
            if v / 64 == w {
                a &= !(1 << (v % 64));
            }
            if u / 64 == w {
                b &= !(1 << (u % 64));
            }
            a == b
        })
    }
}

type Partition = Vec<Vec<usize>>;

fn cell_mask(cell: &[usize], words: usize) -> Vec<u64> {
    let mut mask = vec![0u64; words];
    for &v in cell {
        mask[v / 64] |= 1 << (v % 64);
    }
    mask
}

/// Splits cells by neighbor counts into every cell until stable.
fn refine(bits: &Bits, mut part: Partition) -> Partition {
    loop {
        let masks: Vec<Vec<u64>> = part.iter().map(|c| cell_mask(c, bits.words)).collect();
        let mut next: Partition = Vec::with_capacity(part.len());
        let mut changed = false;
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| bits.count_in(v, m)).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            if keyed.first().map(|k| &k.0) != keyed.last().map(|k| &k.0) {
                changed = true;
            }
        }
        part = next;
        if !changed {
            return part;
        }
    }
}

fn initial_partition(graph: &Graph) -> Partition {
    let n = graph.order();
    let mut keyed: Vec<((usize, Vec<usize>), usize)> = graph
        .vertices()
        .map(|v| {
            let mut profile: Vec<usize> = graph
                .bfs_distances(v)
                .into_iter()
                .map(|d| d.unwrap_or(usize::MAX))
                .collect();
            profile.sort_unstable();
            ((graph.degree(v), profile), v - 1)
        })
        .collect();
    keyed.sort();
    let mut part = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || keyed[i].0 != keyed[start].0 {
            part.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
            start = i;
        }
    }
    part
}

fn leaf_string(bits: &Bits, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u8; total.div_ceil(8)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits.adjacent(order[i], order[j]) {
                out[k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    out
}

fn search(bits: &Bits, part: Partition, best: &mut Option<Vec<u8>>) {
    let target = part
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let order: Vec<usize> = part.iter().map(|c| c[0]).collect();
        let s = leaf_string(bits, &order);
        if best.as_ref().is_none_or(|b| s < *b) {
            *best = Some(s);
        }
        return;
    };
    let cell = &part[t];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&u| bits.twins(u, v)) {
            continue;
        }
        tried.push(v);
        let mut child: Partition = Vec::with_capacity(part.len() + 1);
        child.extend(part[..t].iter().cloned());
        child.push(vec![v]);
        child.push(cell.iter().copied().filter(|&w| w != v).collect());
        child.extend(part[t + 1..].iter().cloned());
        search(bits, refine(bits, child), best);
    }
}

/// Canonical form of `graph`.
pub fn canonical_form(graph: &Graph) -> CanonicalForm {
    let bits = Bits::new(graph);
    let part = refine(&bits, initial_partition(graph));
    let mut best = None;
    search(&bits, part, &mut best);
    CanonicalForm { n: graph.order(), bits: best.unwrap_or_default() }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_relabel(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
        let mut perm: Vec<usize> = g.vertices().collect();
        perm.shuffle(rng);
        g.relabel(&perm).unwrap()
    }

    #[test]
    fn relabeled_u74_is_isomorphic() {
        let u = make_u_ng(7, 4).unwrap();
        let r = u.relabel(&[7, 3, 5, 1, 2, 6, 4]).unwrap();
        assert_ne!(u, r);
        assert!(is_isomorphic(&u, &r));
        assert!(!is_isomorphic(&u, &make_u_ng(7, 3).unwrap()));
    }

    #[test]
    fn six_vertex_girth_four_family_distinct() {
        let graphs = [
            make_u_ng(6, 4).unwrap(),
            make_cycle_with_pendants(4, &[1, 3]).unwrap(),
            make_cycle_with_pendants(4, &[1, 2]).unwrap(),
            Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (1, 6)]).unwrap(),
        ];
        let mut forms: Vec<_> = graphs.iter().map(canonical_form).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), 4);
    }

    #[test]
    fn invariant_under_thousand_relabelings() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let graphs = [
            make_u_ng(9, 4).unwrap(),
            make_ubar_ng(11, 7).unwrap(),
            make_cycle_with_pendants(10, &[1, 3, 6, 8]).unwrap(),
            make_spider_s1(),
            cycle_graph(12).unwrap(),
            star_graph(10).unwrap(),
        ];
        for g in &graphs {
            let base = canonical_form(g);
            for _ in 0..1000 {
                assert_eq!(canonical_form(&random_relabel(g, &mut rng)), base);
            }
        }
    }

    #[test]
    fn separates_cospectral_like_pairs() {
        // Same degree sequence, different structure.
        let a = make_cycle_with_pendants(6, &[1, 2]).unwrap();
        let b = make_cycle_with_pendants(6, &[1, 3]).unwrap();
        let c = make_cycle_with_pendants(6, &[1, 4]).unwrap();
        assert!(!is_isomorphic(&a, &b));
        assert!(!is_isomorphic(&b, &c));
        assert!(!is_isomorphic(&a, &c));
        let c6 = cycle_graph(6).unwrap();
        let two_triangles =
            Graph::new(6, [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]).unwrap();
        assert!(!is_isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn display_format() {
        let p2 = path_graph(2).unwrap();
        assert_eq!(canonical_form(&p2).to_string(), "2:80");
        let k1 = path_graph(1).unwrap();
        assert_eq!(canonical_form(&k1).to_string(), "1:");
    }
}
