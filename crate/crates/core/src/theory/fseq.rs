//! The continued-fraction recursion `f_1(y) = y - 1`,
//! `f_i(y) = y - 2 - 1/f_{i-1}(y)` governing Perron components along a
//! pendant path of the signless Laplacian.

use serde::Serialize;

use crate::error::TheoryError;

/// Lower end of the range where `f_i(y) > y/(y-2)` and
/// `f_i(y) f_{i+1}(y) > f_j(y)` hold.
pub const RATIO_THRESHOLD: f64 = 4.383;

/// Lower end of the range where the sequence is decreasing and above 1.
pub const MONOTONE_THRESHOLD: f64 = 4.0;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FSequence {
    pub y: f64,
    /// `values[i - 1] = f_i(y)`.
    pub values: Vec<f64>,
}

impl FSequence {
    /// `f_i(y)`, 1-based.
    pub fn f(&self, i: usize) -> f64 {
        self.values[i - 1]
    }
}

/// The recursion without the domain guard. Callers evaluating it at a
/// numerically computed eigenvalue use this so that rounding just below 4
/// does not abort a check.
pub(crate) fn f_values(y: f64, imax: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(imax);
    let mut prev = y - 1.0;
    for i in 1..=imax {
        if i > 1 {
            prev = y - 2.0 - 1.0 / prev;
        }
        out.push(prev);
    }
    out
}

/// `f_1(y), .., f_imax(y)`; refuses `y < 4`.
pub fn f_sequence(y: f64, imax: usize) -> Result<FSequence, TheoryError> {
    if !y.is_finite() || y < MONOTONE_THRESHOLD {
        return Err(TheoryError::ArgumentTooSmall(y));
    }
    if imax == 0 {
        return Err(TheoryError::NoTerms);
    }
    Ok(FSequence { y, values: f_values(y, imax) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FClause {
    /// `f_i(y) > y / (y - 2)`
    AboveRatio,
    /// `f_i(y) > f_{i+1}(y) > 1`
    Decreasing,
    /// `f_i(y) f_{i+1}(y) > f_j(y)`
    ProductDominates,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FFailure {
    pub y: f64,
    pub clause: FClause,
    pub i: usize,
    pub j: Option<usize>,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FPropertyReport {
    pub imax: usize,
    pub points: usize,
    pub checks: usize,
    /// Grid points below a clause's threshold, counted per clause.
    pub not_applicable: usize,
    /// Smallest margin seen over all evaluated inequalities.
    pub min_margin: f64,
    pub failures: Vec<FFailure>,
}

impl FPropertyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the three inequalities pointwise on `y_grid` for `1 <= i, j <= imax`.
pub fn check_f_properties(y_grid: &[f64], imax: usize) -> Result<FPropertyReport, TheoryError> {
    if imax == 0 {
        return Err(TheoryError::NoTerms);
    }
    let mut report = FPropertyReport {
        imax,
        points: y_grid.len(),
        checks: 0,
        not_applicable: 0,
        min_margin: f64::INFINITY,
        failures: Vec::new(),
    };
    let record = |report: &mut FPropertyReport, y, clause, i, j, margin: f64| {
        report.checks += 1;
        report.min_margin = report.min_margin.min(margin);
        if margin.is_nan() || margin <= 0.0 {
            report.failures.push(FFailure { y, clause, i, j, margin });
        }
    };
    for &y in y_grid {
        if y.is_nan() || y < MONOTONE_THRESHOLD {
            report.not_applicable += 3;
            continue;
        }
        let f = f_values(y, imax + 1);
        // f_{i+1} - f_{i+2} = (f_i - f_{i+1}) / (f_i f_{i+1}), free of cancellation.
        let mut step = 1.0 + 1.0 / f[0];
        for i in 0..imax {
            record(&mut report, y, FClause::Decreasing, i + 1, None, step.min(f[i + 1] - 1.0));
            step /= f[i] * f[i + 1];
        }
        if y < RATIO_THRESHOLD {
            report.not_applicable += 2;
            continue;
        }
        let ratio = y / (y - 2.0);
        for (i, &fi) in f[..imax].iter().enumerate() {
            record(&mut report, y, FClause::AboveRatio, i + 1, None, fi - ratio);
        }
        for (i, pair) in f.windows(2).take(imax).enumerate() {
            let product = pair[0] * pair[1];
            for (j, &fj) in f[..imax].iter().enumerate() {
                record(&mut report, y, FClause::ProductDominates, i + 1, Some(j + 1), product - fj);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_terms() {
        let s = f_sequence(5.0, 3).unwrap();
        assert_eq!(s.f(1), 4.0);
        assert_eq!(s.f(2), 2.75);
        // 3 - 1/2.75
        assert!((s.f(3) - (3.0 - 4.0 / 11.0)).abs() < 1e-15);
    }

    #[test]
    fn third_term_at_threshold() {
        // Direct evaluation: f1 = 3.383, f2 = 2.383 - 1/3.383, f3 = 2.383 - 1/f2.
        let f1: f64 = 3.383;
        let f2 = 2.383 - 1.0 / f1;
        let f3 = 2.383 - 1.0 / f2;
        let s = f_sequence(4.383, 3).unwrap();
        assert!((s.f(3) - f3).abs() < 1e-15);
        assert!((s.f(3) - 1.9040).abs() < 1e-4, "{}", s.f(3));
    }

    #[test]
    fn refuses_small_arguments() {
        assert_eq!(f_sequence(3.9, 5), Err(TheoryError::ArgumentTooSmall(3.9)));
        assert!(f_sequence(f64::NAN, 5).is_err());
        assert_eq!(f_sequence(4.0, 0), Err(TheoryError::NoTerms));
    }

    #[test]
    fn properties_at_threshold_and_beyond() {
        let r = check_f_properties(&[4.383], 50).unwrap();
        assert!(r.passed(), "{:?}", r.failures.first());
        let r = check_f_properties(&[10.0], 50).unwrap();
        assert!(r.passed());
        let s = f_sequence(10.0, 50).unwrap();
        assert!(s.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn decrease_margin_survives_convergence() {
        // Consecutive terms agree to the last bit long before i = 50.
        let s = f_sequence(4.383, 50).unwrap();
        assert_eq!(s.f(40), s.f(41));
        let r = check_f_properties(&[4.383], 50).unwrap();
        assert!(r.min_margin > 0.0);
    }

    #[test]
    fn ratio_clause_at_four_and_a_half() {
        let s = f_sequence(4.5, 1).unwrap();
        assert_eq!(s.f(1), 3.5);
        assert!(s.f(1) > 4.5 / 2.5);
    }

    #[test]
    fn below_ratio_threshold_only_monotonicity_is_checked() {
        let r = check_f_properties(&[4.1], 10).unwrap();
        assert_eq!(r.checks, 10);
        assert_eq!(r.not_applicable, 2);
        assert!(r.passed());
    }
}
