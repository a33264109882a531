//! Orderings of the Perron components of `B(U(n, g))` (even `g`) and of
//! `B(Ū(n, g))` (odd `g`), with vertex ids as produced by the constructors.
//!
//! Strict inequalities pass when their smallest margin exceeds
//! [`STRICT_MARGIN`]; equalities pass when their largest deviation is within
//! the caller's tolerance. Clauses conditioned on `μ` are reported as not
//! applicable below their threshold.

use serde::Serialize;

use crate::constructors::{make_u_ng, make_ubar_ng};
use crate::error::TheoryError;
use crate::spectra::{perron_vector, PerronVector, DEFAULT_TOL};

use super::fseq::{f_values, RATIO_THRESHOLD};

/// Smallest margin accepted for a strict component inequality.
pub const STRICT_MARGIN: f64 = 1e-9;
/// `μ` threshold for the doubling clauses on even girth.
pub const DOUBLING_THRESHOLD: f64 = 4.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClauseResult {
    pub clause: &'static str,
    pub status: ClauseStatus,
    /// Smallest margin for inequalities, largest deviation for equalities.
    pub measured: Option<f64>,
    pub statement: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigvecReport {
    pub n: usize,
    pub g: usize,
    pub mu: f64,
    pub clauses: Vec<ClauseResult>,
    /// Margin of `x_j > x_{j+1}` at the last index of the cycle range.
    pub boundary_margin: Option<f64>,
    /// Largest deviation from the pendant-path recursion.
    pub tail_residual: f64,
}

impl EigvecReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.status != ClauseStatus::Fail)
    }

    pub fn clause(&self, name: &str) -> Option<&ClauseResult> {
        self.clauses.iter().find(|c| c.clause == name)
    }
}

fn strict(clause: &'static str, statement: &'static str, margins: &[f64]) -> ClauseResult {
    let m = margins.iter().copied().fold(f64::INFINITY, f64::min);
    if margins.is_empty() {
        return ClauseResult { clause, status: ClauseStatus::NotApplicable, measured: None, statement };
    }
    let status = if m > STRICT_MARGIN { ClauseStatus::Pass } else { ClauseStatus::Fail };
    ClauseResult { clause, status, measured: Some(m), statement }
}

fn equal(clause: &'static str, statement: &'static str, devs: &[f64], tol: f64) -> ClauseResult {
    let m = devs.iter().copied().fold(0.0, f64::max);
    let status = if m <= tol { ClauseStatus::Pass } else { ClauseStatus::Fail };
    ClauseResult { clause, status, measured: Some(m), statement }
}

fn skipped(clause: &'static str, statement: &'static str) -> ClauseResult {
    ClauseResult { clause, status: ClauseStatus::NotApplicable, measured: None, statement }
}

/// Largest `|x_{v_i} - f_{k-i}(μ) x_{v_{i+1}}|` along a pendant path
/// `v_0 v_1 .. v_k` (listed from the attachment vertex outwards).
pub fn path_recursion_residual(p: &PerronVector, path: &[usize]) -> f64 {
    let k = path.len() - 1;
    if k == 0 {
        return 0.0;
    }
    let f = f_values(p.mu, k);
    (0..k)
        .map(|i| (p.x(path[i]) - f[k - i - 1] * p.x(path[i + 1])).abs())
        .fold(0.0, f64::max)
}

/// Checks the component orderings of an already computed Perron vector of
/// `U(n, g)`, `g` even.
pub fn ung_even_clauses(n: usize, g: usize, p: &PerronVector, tol: f64) -> EigvecReport {
    let x = |v: usize| p.x(v);
    let half = g / 2;
    let sym: Vec<f64> = (1..=half).map(|j| (x(j) - x(g - j)).abs()).collect();
    let tail: Vec<f64> = (g..n).map(|j| x(j) - x(j + 1)).collect();
    let mut cyc: Vec<f64> = vec![x(g) - x(1)];
    cyc.extend((1..half).map(|j| x(j) - x(j + 1)));
    let boundary_margin = (half >= 2).then(|| x(half - 1) - x(half));

    let mut clauses = vec![
        equal("i", "x_j = x_{g-j}, 1 <= j <= g/2", &sym, tol),
        strict("ii", "x_j > x_{j+1}, g <= j <= n-1", &tail),
        strict("iii", "x_g > x_1 and x_j > x_{j+1}, 1 <= j <= g/2-1", &cyc),
    ];
    if p.mu >= DOUBLING_THRESHOLD {
        let mut doubling: Vec<f64> = (g..n).map(|j| x(j) - 2.0 * x(j + 1)).collect();
        doubling.push(2.0 * x(1) - x(g));
        doubling.extend((1..half).map(|j| 2.0 * x(j + 1) - x(j)));
        clauses.push(strict(
            "iv",
            "x_j > 2x_{j+1} (g <= j < n), x_g < 2x_1, x_j < 2x_{j+1} (1 <= j < g/2)",
            &doubling,
        ));
        let reach: Vec<f64> = (1..=half.min(n - g)).map(|i| x(i) - x(g + i)).collect();
        clauses.push(strict("v", "x_i > x_{g+i}, 1 <= i <= min(g/2, n-g)", &reach));
    } else {
        clauses.push(skipped("iv", "requires mu >= 4.5"));
        clauses.push(skipped("v", "requires mu >= 4.5"));
    }
    let path: Vec<usize> = (g..=n).collect();
    EigvecReport {
        n,
        g,
        mu: p.mu,
        clauses,
        boundary_margin,
        tail_residual: path_recursion_residual(p, &path),
    }
}

/// Checks the component orderings of an already computed Perron vector of
/// `Ū(n, g)`, `g` odd.
pub fn ubar_odd_clauses(n: usize, g: usize, p: &PerronVector, tol: f64) -> EigvecReport {
    let x = |v: usize| p.x(v);
    let half = (g - 1) / 2;
    let sym: Vec<f64> = (1..=half).map(|j| (x(j) - x(g - j)).abs()).collect();
    let tail: Vec<f64> = (g..n).map(|j| x(j) - x(j + 1)).collect();
    let mut cyc: Vec<f64> = vec![x(g) - x(1)];
    cyc.extend((1..half).map(|j| x(j) - x(j + 1)));
    let boundary_margin = (half >= 2).then(|| x(half - 1) - x(half));

    let mut clauses = vec![
        equal("i", "x_j = x_{g-j}, 1 <= j <= (g-1)/2", &sym, tol),
        strict("ii", "x_j > x_{j+1}, g <= j <= n-1", &tail),
        strict("iii", "x_g > x_1 and x_j > x_{j+1}, 1 <= j <= (g-3)/2", &cyc),
    ];
    if p.mu >= RATIO_THRESHOLD {
        let reach: Vec<f64> = (1..=half.min((n - g) / 2)).map(|i| x(i) - x(g + 2 * i)).collect();
        clauses.push(strict("iv", "x_i > x_{g+2i}, 1 <= i <= min((g-1)/2, (n-g)/2)", &reach));
    } else {
        clauses.push(skipped("iv", "requires mu >= 4.383"));
    }
    let tail_path: Vec<usize> = (g..=n).collect();
    let cycle_path: Vec<usize> = std::iter::once(g).chain(1..=half).collect();
    let tail_residual =
        path_recursion_residual(p, &tail_path).max(path_recursion_residual(p, &cycle_path));
    EigvecReport { n, g, mu: p.mu, clauses, boundary_margin, tail_residual }
}

/// Builds `U(n, g)` (even `g`), computes its Perron vector and checks the
/// component orderings.
pub fn check_ung_eigvec_even(n: usize, g: usize, tol: f64) -> Result<EigvecReport, TheoryError> {
    if g % 2 == 1 || g < 4 {
        return Err(TheoryError::OddGirth(g));
    }
    let p = perron_vector(&make_u_ng(n, g)?, DEFAULT_TOL)?;
    Ok(ung_even_clauses(n, g, &p, tol))
}

/// Builds `Ū(n, g)` (odd `g`), computes its Perron vector and checks the
/// component orderings and the pendant-path recursion.
pub fn check_ubar_eigvec(n: usize, g: usize, tol: f64) -> Result<EigvecReport, TheoryError> {
    if g.is_multiple_of(2) || g < 3 {
        return Err(TheoryError::EvenGirth(g));
    }
    let p = perron_vector(&make_ubar_ng(n, g)?, DEFAULT_TOL)?;
    Ok(ubar_odd_clauses(n, g, &p, tol))
}
