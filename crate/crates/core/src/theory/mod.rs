//! Executable forms of the inequalities behind the minimality of `U(n, g)`.

mod eigvec;
mod fseq;
mod ordering;
mod witness;

pub use eigvec::{
    check_ubar_eigvec, check_ung_eigvec_even, path_recursion_residual, ubar_odd_clauses,
    ung_even_clauses, ClauseResult, ClauseStatus, EigvecReport, DOUBLING_THRESHOLD, STRICT_MARGIN,
};
pub use fseq::{
    check_f_properties, f_sequence, FClause, FFailure, FPropertyReport, FSequence,
    MONOTONE_THRESHOLD, RATIO_THRESHOLD,
};
pub use ordering::{
    build_ordering, find_pair, ordering_exists, prefix_condition_holds, AttachOrdering,
};
pub use witness::{witness_vector, WitnessVector, MAX_WITNESS_GIRTH};

use serde::Serialize;

/// Why the minimality of `U(n, g)` is known for a given `(n, g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coverage {
    /// Even girth and `n >= 2g - 1`.
    EvenCovered,
    /// Odd girth and `n >= 3g - 1`.
    OddCovered,
    Girth3,
    Girth4Or6,
    Uncovered,
}

/// Every reason that applies to `(n, g)`, or `[Uncovered]`.
pub fn check_theorem_hypotheses(n: usize, g: usize) -> Vec<Coverage> {
    let mut out = Vec::new();
    if g.is_multiple_of(2) && n + 1 >= 2 * g {
        out.push(Coverage::EvenCovered);
    }
    if g % 2 == 1 && n + 1 >= 3 * g {
        out.push(Coverage::OddCovered);
    }
    if g == 3 {
        out.push(Coverage::Girth3);
    }
    if g == 4 || g == 6 {
        out.push(Coverage::Girth4Or6);
    }
    if out.is_empty() {
        out.push(Coverage::Uncovered);
    }
    out
}
