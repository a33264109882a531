//! Orderings of the loaded cycle vertices along which pendant paths can be
//! chained without increasing the spectral radius.
//!
//! Write `C` for the cycle vertices carrying a tree and `l_v` for the size of
//! the tree at `v`. An ordering `i_1 .. i_r` of `C` satisfies the prefix
//! condition with factor `f` when `l_{i_1} + .. + l_{i_{j-1}} >= f d(i_1, i_j)`
//! for every `j >= 2`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::decompose::UnicyclicDecomposition;
use crate::error::TheoryError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AttachOrdering {
    pub sequence: Vec<usize>,
    pub factor: usize,
}

impl AttachOrdering {
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }
}

fn check_factor(factor: usize) -> Result<(), TheoryError> {
    match factor {
        1 | 2 => Ok(()),
        _ => Err(TheoryError::BadFactor(factor)),
    }
}

fn loads(d: &UnicyclicDecomposition) -> BTreeMap<usize, usize> {
    d.cycle()
        .iter()
        .zip(d.attach_sizes())
        .filter(|(_, &l)| l > 0)
        .map(|(&v, &l)| (v, l))
        .collect()
}

fn dist(d: &UnicyclicDecomposition, u: usize, v: usize) -> usize {
    d.cycle_distance(u, v).expect("loaded vertices lie on the cycle")
}

fn best_pair(
    d: &UnicyclicDecomposition,
    loads: &BTreeMap<usize, usize>,
    factor: usize,
) -> Option<(usize, usize)> {
    let mut best: Option<(i64, usize, usize)> = None;
    for (&i, &li) in loads {
        for &j in loads.keys() {
            if i == j {
                continue;
            }
            let slack = li as i64 - (factor * dist(d, i, j)) as i64;
            if slack < 0 {
                continue;
            }
            // BTreeMap order visits (i, j) lexicographically, so a strict
            // improvement keeps the smallest pair among ties.
            if best.is_none_or(|(s, _, _)| slack > s) {
                best = Some((slack, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// A pair `(i, j)` of distinct loaded vertices with `l_i >= factor d(i, j)`,
/// maximizing `l_i - factor d(i, j)` and then smallest in `(i, j)`.
pub fn find_pair(
    d: &UnicyclicDecomposition,
    factor: usize,
) -> Result<Option<(usize, usize)>, TheoryError> {
    check_factor(factor)?;
    let loads = loads(d);
    if loads.len() < 2 {
        return Err(TheoryError::TooFewLoaded(loads.len()));
    }
    Ok(best_pair(d, &loads, factor))
}

/// Whether `sequence` lists every loaded vertex once and satisfies the
/// prefix condition.
pub fn prefix_condition_holds(d: &UnicyclicDecomposition, sequence: &[usize], factor: usize) -> bool {
    let loads = loads(d);
    let mut seen: Vec<usize> = sequence.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != sequence.len() || !seen.iter().eq(loads.keys()) {
        return false;
    }
    let Some(&first) = sequence.first() else {
        return true;
    };
    let mut sum = 0;
    for &v in sequence {
        if v != first && sum < factor * dist(d, first, v) {
            return false;
        }
        sum += loads[&v];
    }
    true
}

/// Whether some ordering satisfies the prefix condition.
///
/// With the first vertex fixed, taking any vertex the current sum can reach
/// never hurts, since the sum only grows; so a greedy closure per start
/// vertex decides existence.
pub fn ordering_exists(d: &UnicyclicDecomposition, factor: usize) -> bool {
    let loads = loads(d);
    loads.keys().any(|&s| {
        let mut left: Vec<usize> = loads.keys().copied().filter(|&v| v != s).collect();
        let mut sum = loads[&s];
        loop {
            let before = left.len();
            left.retain(|&v| {
                if sum >= factor * dist(d, s, v) {
                    sum += loads[&v];
                    false
                } else {
                    true
                }
            });
            if left.is_empty() {
                return true;
            }
            if left.len() == before {
                return false;
            }
        }
    })
}

fn induct(
    d: &UnicyclicDecomposition,
    mut loads: BTreeMap<usize, usize>,
    factor: usize,
) -> Option<Vec<usize>> {
    if loads.len() == 1 {
        return Some(loads.into_keys().collect());
    }
    let (big, small) = best_pair(d, &loads, factor)?;
    let moved = loads.remove(&small).expect("pair vertices are loaded");
    *loads.get_mut(&big).expect("pair vertices are loaded") += moved;
    let mut seq = induct(d, loads, factor)?;
    let at = seq.iter().position(|&v| v == big).expect("big stays in the instance");
    seq.insert(at + 1, small);
    Some(seq)
}

/// Builds an ordering by induction on `|C|`: find a pair `(i, j)` with
/// `l_i >= factor d(i, j)`, move `j`'s load onto `i`, order the smaller
/// instance, then place `j` right after `i`. `None` when some step finds no
/// pair.
pub fn build_ordering(
    d: &UnicyclicDecomposition,
    factor: usize,
) -> Result<Option<AttachOrdering>, TheoryError> {
    check_factor(factor)?;
    let loads = loads(d);
    if loads.len() < 2 {
        return Err(TheoryError::TooFewLoaded(loads.len()));
    }
    let Some(sequence) = induct(d, loads, factor) else {
        return Ok(None);
    };
    if !prefix_condition_holds(d, &sequence, factor) {
        return Err(TheoryError::OrderingCheckFailed(sequence));
    }
    Ok(Some(AttachOrdering { sequence, factor }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::make_cycle_with_pendants;
    use crate::decompose::decompose_unicyclic;
    use crate::graph::Graph;

    fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
        if items.len() <= 1 {
            return vec![items.to_vec()];
        }
        let mut out = Vec::new();
        for (k, &x) in items.iter().enumerate() {
            let mut rest = items.to_vec();
            rest.remove(k);
            for mut p in permutations(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn c10_with_opposite_leaves_has_no_ordering() {
        let g = make_cycle_with_pendants(10, &[1, 6]).unwrap();
        let d = decompose_unicyclic(&g).unwrap();
        assert_eq!(find_pair(&d, 1).unwrap(), None);
        assert_eq!(build_ordering(&d, 1).unwrap(), None);
        assert!(!ordering_exists(&d, 1));
        assert!(permutations(&d.c_set()).iter().all(|p| !prefix_condition_holds(&d, p, 1)));
    }

    #[test]
    fn two_paths_on_adjacent_vertices() {
        // C4 with a 3-path at 1 and a 2-path at 2.
        let g = Graph::new(
            9,
            [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (5, 6), (6, 7), (2, 8), (8, 9)],
        )
        .unwrap();
        let d = decompose_unicyclic(&g).unwrap();
        let (i, j) = find_pair(&d, 1).unwrap().unwrap();
        assert!(d.attach_size(i).unwrap() >= d.cycle_distance(i, j).unwrap());
        assert_eq!((i, j), (1, 2));
        let o = build_ordering(&d, 1).unwrap().unwrap();
        assert_eq!(o.sequence, vec![1, 2]);
    }

    #[test]
    fn two_loaded_vertices_give_big_then_small() {
        // C6, loads 1 at vertex 1 and 3 at vertex 3.
        let g = Graph::new(
            10,
            [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 7), (3, 8), (8, 9), (9, 10)],
        )
        .unwrap();
        let d = decompose_unicyclic(&g).unwrap();
        assert_eq!(build_ordering(&d, 1).unwrap().unwrap().sequence, vec![3, 1]);
        assert_eq!(build_ordering(&d, 2).unwrap(), None);
        assert!(!ordering_exists(&d, 2));
    }

    #[test]
    fn build_agrees_with_exhaustive_search() {
        let g = make_cycle_with_pendants(8, &[1, 2, 4, 7]).unwrap();
        let d = decompose_unicyclic(&g).unwrap();
        for factor in [1, 2] {
            let any = permutations(&d.c_set()).iter().any(|p| prefix_condition_holds(&d, p, factor));
            assert_eq!(ordering_exists(&d, factor), any);
            if let Some(o) = build_ordering(&d, factor).unwrap() {
                assert!(any);
                assert!(prefix_condition_holds(&d, &o.sequence, factor));
            }
        }
    }

    #[test]
    fn argument_errors() {
        let g = make_cycle_with_pendants(5, &[1]).unwrap();
        let d = decompose_unicyclic(&g).unwrap();
        assert_eq!(find_pair(&d, 1), Err(TheoryError::TooFewLoaded(1)));
        assert_eq!(build_ordering(&d, 3), Err(TheoryError::BadFactor(3)));
    }
}
