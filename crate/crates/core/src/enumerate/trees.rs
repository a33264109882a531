//! Rooted trees as canonical level sequences.
//!
//! A rooted tree on `s` vertices is written as the depths of its vertices
//! in preorder, children visited in decreasing subtree order. The canonical
//! sequence of a tree is the lexicographically largest over child orderings.
//! The successor rule walks from the path `[0, 1, .., s-1]` down to the star
//! `[0, 1, 1, .., 1]`, emitting every isomorphism class exactly once.

/// Iterator over canonical level sequences of rooted trees of one size.
#[derive(Debug, Clone)]
pub struct RootedTrees {
    current: Option<Vec<usize>>,
}

/// All rooted trees on `size` vertices. A tree needs a root, so `size = 0`
/// yields nothing.
pub fn rooted_trees(size: usize) -> RootedTrees {
    RootedTrees { current: (size > 0).then(|| (0..size).collect()) }
}

impl Iterator for RootedTrees {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        // Last position deeper than a child of the root.
        if let Some(p) = out.iter().rposition(|&d| d > 1) {
            let q = out[..p]
                .iter()
                .rposition(|&d| d == out[p] - 1)
                .expect("a vertex at depth >= 2 has an ancestor one level up");
            let mut next = out.clone();
            for i in p..next.len() {
                next[i] = next[i - (p - q)];
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Parent index of every non-root vertex of a level sequence (`None` for the
/// root at index 0).
pub fn parents(levels: &[usize]) -> Vec<Option<usize>> {
    let mut stack: Vec<usize> = Vec::new();
    let mut out = Vec::with_capacity(levels.len());
    for (i, &d) in levels.iter().enumerate() {
        stack.truncate(d);
        out.push(stack.last().copied());
        stack.push(i);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=10).map(|s| rooted_trees(s).count()).collect();
        assert_eq!(counts, vec![0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719]);
    }

    #[test]
    fn size_four_sequences() {
        let all: Vec<Vec<usize>> = rooted_trees(4).collect();
        assert_eq!(
            all,
            vec![vec![0, 1, 2, 3], vec![0, 1, 2, 2], vec![0, 1, 2, 1], vec![0, 1, 1, 1]]
        );
    }

    #[test]
    fn parent_links() {
        assert_eq!(parents(&[0, 1, 2, 1, 2, 2]), vec![None, Some(0), Some(1), Some(0), Some(3), Some(3)]);
    }
}
