//! Isomorphism-free generation of unicyclic graphs and exhaustive
//! verification of the spectral minimizer.

mod trees;
mod unicyclic;
mod verify;

pub use trees::{parents, rooted_trees, RootedTrees};
pub use unicyclic::{unicyclic_graphs, UnicyclicGraphs};
pub use verify::{
    verify_minimizer, verify_minimizer_jobs, LambdaEntry, NearTie, VerificationReport,
    CSV_DECIMALS, NEAR_TIE_GAP, UNIQUE_MARGIN,
};
