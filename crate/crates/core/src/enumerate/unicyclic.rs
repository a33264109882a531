//! Isomorphism-free stream of connected unicyclic graphs with given order
//! and girth.
//!
//! A unicyclic graph is a cycle `c_1 .. c_g` with a rooted tree hanging at
//! each `c_i` (rooted at `c_i` itself, so a bare cycle vertex is the
//! one-vertex tree). Two such graphs are isomorphic exactly when their tree
//! sequences agree up to a rotation or reflection of the cycle, so each
//! class is emitted once as the lexicographically smallest of its `2g`
//! symmetric images.

use crate::error::GraphError;
use crate::graph::Graph;

use super::trees::{parents, rooted_trees};

/// Streaming generator; see [`unicyclic_graphs`].
#[derive(Debug, Clone)]
pub struct UnicyclicGraphs {
    n: usize,
    g: usize,
    /// `trees[s]`: canonical level sequences on `s` vertices.
    trees: Vec<Vec<Vec<usize>>>,
    /// `offset[s]`: global id of the first tree on `s` vertices.
    offset: Vec<usize>,
    sizes: Vec<usize>,
    choice: Vec<usize>,
    done: bool,
}

/// Every connected unicyclic graph on `n` vertices with girth `g`, once per
/// isomorphism class. Cycle vertices are `1..=g`; tree vertices follow in
/// cycle order, each tree in preorder.
pub fn unicyclic_graphs(n: usize, g: usize) -> Result<UnicyclicGraphs, GraphError> {
    if g < 3 || g > n {
        return Err(GraphError::InvalidParameters(format!(
            "need 3 <= g <= n, got n={n}, g={g}"
        )));
    }
    let largest = n - g + 1;
    let trees: Vec<Vec<Vec<usize>>> = (0..=largest).map(|s| rooted_trees(s).collect()).collect();
    let mut offset = vec![0; largest + 2];
    for s in 0..=largest {
        offset[s + 1] = offset[s] + trees[s].len();
    }
    let mut sizes = vec![1; g];
    sizes[g - 1] = largest;
    Ok(UnicyclicGraphs {
        n,
        g,
        trees,
        offset,
        sizes,
        choice: vec![0; g],
        done: false,
    })
}

impl UnicyclicGraphs {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn girth(&self) -> usize {
        self.g
    }

    /// Next composition of `n` into `g` positive parts in lexicographic
    /// order: bump the rightmost part that still has slack behind it.
    fn next_sizes(&mut self) -> bool {
        let g = self.g;
        let mut tail = self.sizes[g - 1];
        for i in (0..g - 1).rev() {
            // parts i+1..g sum to `tail`, over g-1-i slots
            if tail > g - 1 - i {
                self.sizes[i] += 1;
                let remaining = tail - 1;
                for part in &mut self.sizes[i + 1..g - 1] {
                    *part = 1;
                }
                self.sizes[g - 1] = remaining - (g - 2 - i);
                return true;
            }
            tail += self.sizes[i];
        }
        false
    }

    fn advance(&mut self) {
        for i in (0..self.g).rev() {
            if self.choice[i] + 1 < self.trees[self.sizes[i]].len() {
                self.choice[i] += 1;
                for c in &mut self.choice[i + 1..] {
                    *c = 0;
                }
                return;
            }
        }
        self.choice.iter_mut().for_each(|c| *c = 0);
        if !self.next_sizes() {
            self.done = true;
        }
    }

    fn ids(&self) -> Vec<usize> {
        self.sizes
            .iter()
            .zip(&self.choice)
            .map(|(&s, &c)| self.offset[s] + c)
            .collect()
    }

    fn build(&self) -> Graph {
        let g = self.g;
        let mut edges: Vec<(usize, usize)> = (1..=g).map(|i| (i, i % g + 1)).collect();
        let mut next_id = g + 1;
        for (pos, (&s, &c)) in self.sizes.iter().zip(&self.choice).enumerate() {
            let levels = &self.trees[s][c];
            let mut ids = Vec::with_capacity(levels.len());
            ids.push(pos + 1);
            for _ in 1..levels.len() {
                ids.push(next_id);
                next_id += 1;
            }
            for (i, parent) in parents(levels).into_iter().enumerate() {
                if let Some(p) = parent {
                    edges.push((ids[p], ids[i]));
                }
            }
        }
        Graph::new(self.n, edges).expect("generated edges are valid")
    }
}

/// True when `seq` is not larger than any rotation or reflection of itself.
pub(crate) fn is_dihedral_minimum(seq: &[usize]) -> bool {
    let g = seq.len();
    for shift in 0..g {
        for reflect in [false, true] {
            if shift == 0 && !reflect {
                continue;
            }
            let image = (0..g).map(|i| {
                if reflect {
                    seq[(shift + g - i) % g]
                } else {
                    seq[(shift + i) % g]
                }
            });
            for (a, b) in image.zip(seq) {
                match a.cmp(b) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => break,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    true
}

impl Iterator for UnicyclicGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while !self.done {
            let keep = is_dihedral_minimum(&self.ids());
            let graph = keep.then(|| self.build());
            self.advance();
            if graph.is_some() {
                return graph;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use std::collections::BTreeSet;

    #[test]
    fn small_family_counts() {
        assert_eq!(unicyclic_graphs(5, 4).unwrap().count(), 1);
        assert_eq!(unicyclic_graphs(6, 4).unwrap().count(), 4);
        assert_eq!(unicyclic_graphs(7, 6).unwrap().count(), 1);
        assert_eq!(unicyclic_graphs(8, 6).unwrap().count(), 5);
        assert_eq!(unicyclic_graphs(6, 6).unwrap().count(), 1);
    }

    #[test]
    fn total_unicyclic_counts() {
        // Connected unicyclic graphs by order, summed over girth.
        let totals: Vec<usize> = (3..=10)
            .map(|n| (3..=n).map(|g| unicyclic_graphs(n, g).unwrap().count()).sum())
            .collect();
        assert_eq!(totals, vec![1, 2, 5, 13, 33, 89, 240, 657]);
    }

    #[test]
    fn members_are_valid_and_distinct() {
        for (n, g) in [(9, 3), (10, 4), (10, 7), (11, 5)] {
            let mut forms = BTreeSet::new();
            for graph in unicyclic_graphs(n, g).unwrap() {
                assert!(graph.is_unicyclic());
                assert_eq!(graph.girth(), Some(g));
                assert!(forms.insert(canonical_form(&graph)), "duplicate in ({n},{g})");
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(unicyclic_graphs(4, 5).is_err());
        assert!(unicyclic_graphs(4, 2).is_err());
    }

    #[test]
    fn dihedral_minimum() {
        assert!(is_dihedral_minimum(&[0, 0, 1]));
        assert!(!is_dihedral_minimum(&[0, 1, 0]));
        assert!(is_dihedral_minimum(&[0, 1, 2, 0, 2]));
        assert!(!is_dihedral_minimum(&[0, 2, 1, 0, 1]));
    }
}
