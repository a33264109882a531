//! Integer test vector on `U(g + g/2, g)`, `g` even, whose signless
//! Rayleigh quotient is exactly `9/2`.
//!
//! With `k = g/2`: `a_g = 2^k` and `a_i = a_{g-i} = a_{g+i} = 2^{k-i}` for
//! `1 <= i <= k`. Then `Σ a_j² = 2(4^k - 1)` and
//! `Σ_{edges} (a_u + a_v)² = 9(4^k - 1)`.

use num_rational::Ratio;
use serde::Serialize;

use crate::constructors::make_u_ng;
use crate::error::{GraphError, TheoryError};

/// Largest girth for which every quantity fits in `u128`.
pub const MAX_WITNESS_GIRTH: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessVector {
    pub g: usize,
    pub k: usize,
    /// `a[j - 1]` is the entry at vertex `j`.
    pub a: Vec<u128>,
    pub a_sq: u128,
    pub edge_sum: u128,
}

impl WitnessVector {
    pub fn order(&self) -> usize {
        self.g + self.k
    }

    /// `edge_sum / a_sq` as an exact fraction.
    pub fn rayleigh(&self) -> Ratio<u128> {
        Ratio::new(self.edge_sum, self.a_sq)
    }

    pub fn as_f64(&self) -> Vec<f64> {
        self.a.iter().map(|&v| v as f64).collect()
    }
}

pub fn witness_vector(g: usize) -> Result<WitnessVector, TheoryError> {
    if g % 2 == 1 || g < 4 {
        return Err(TheoryError::OddGirth(g));
    }
    if g > MAX_WITNESS_GIRTH {
        return Err(GraphError::InvalidParameters(format!(
            "girth {g} exceeds {MAX_WITNESS_GIRTH}"
        ))
        .into());
    }
    let k = g / 2;
    let n = g + k;
    let mut a = vec![0u128; n];
    a[g - 1] = 1 << k;
    for i in 1..=k {
        let v = 1u128 << (k - i);
        a[i - 1] = v;
        a[g - i - 1] = v;
        a[g + i - 1] = v;
    }
    let graph = make_u_ng(n, g)?;
    let a_sq = a.iter().map(|v| v * v).sum();
    let edge_sum = graph
        .edges()
        .map(|(u, v)| (a[u - 1] + a[v - 1]).pow(2))
        .sum();
    Ok(WitnessVector { g, k, a, a_sq, edge_sum })
}
