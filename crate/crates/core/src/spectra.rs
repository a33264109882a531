//! Dense symmetric eigensolver and the spectral quantities of a graph.
//!
//! Row/column `i` of every matrix built here corresponds to vertex `i + 1`.
//! `λ(G)` is the largest eigenvalue of `L = D - A`, `μ(G)` the largest
//! eigenvalue of the signless Laplacian `B = D + A`.

use serde::Serialize;

use crate::error::SpectraError;
use crate::graph::Graph;

/// Relative off-diagonal threshold used when none is given.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Sweep cap for the Jacobi iteration.
pub const MAX_SWEEPS: usize = 64;
/// Iteration cap for the power method.
pub const MAX_POWER_ITERATIONS: usize = 1_000_000;

/// Dense real symmetric matrix stored row-major; symmetric by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        SymmetricMatrix { order, data: vec![0.0; order * order] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] = value;
        self.data[j * self.order + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

fn degree_plus(graph: &Graph, sign: f64) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(graph.order());
    for v in graph.vertices() {
        m.set(v - 1, v - 1, graph.degree(v) as f64);
    }
    for (u, v) in graph.edges() {
        m.set(u - 1, v - 1, sign);
    }
    m
}

/// `L(G) = D(G) - A(G)`.
pub fn laplacian(graph: &Graph) -> SymmetricMatrix {
    degree_plus(graph, -1.0)
}

/// `B(G) = D(G) + A(G)`.
pub fn signless(graph: &Graph) -> SymmetricMatrix {
    degree_plus(graph, 1.0)
}

/// Eigenvalues in ascending order, with the largest eigenpair residual
/// `max ‖M x - θ x‖₂` measured against the input matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub residual: f64,
    pub sweeps: usize,
}

impl Spectrum {
    pub fn largest(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn smallest(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }
}

/// Spectrum plus unit eigenvectors; `vectors[k]` belongs to `eigenvalues[k]`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub spectrum: Spectrum,
    pub vectors: Vec<Vec<f64>>,
}

fn check_tol(tol: f64) -> Result<(), SpectraError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(SpectraError::BadTolerance(tol))
    }
}

/// Cyclic Jacobi: sweep over all `(p, q)` pairs with `p < q`, zeroing each
/// off-diagonal entry by a plane rotation, until the off-diagonal Frobenius
/// mass drops below `tol · ‖M‖_F`.
pub fn eigen_symmetric(m: &SymmetricMatrix, tol: f64) -> Result<EigenDecomposition, SpectraError> {
    check_tol(tol)?;
    let n = m.order();
    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let threshold = tol * m.frobenius_norm();
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectraError::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut pairs: Vec<(f64, Vec<f64>)> = (0..n)
        .map(|j| (a[j * n + j], (0..n).map(|k| v[k * n + j]).collect()))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));

    let residual = pairs
        .iter()
        .map(|(theta, x)| {
            m.mul_vec(x)
                .iter()
                .zip(x)
                .map(|(mx, xi)| (mx - theta * xi).powi(2))
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max);
    let (eigenvalues, vectors) = pairs.into_iter().unzip();
    Ok(EigenDecomposition {
        spectrum: Spectrum { eigenvalues, residual, sweeps },
        vectors,
    })
}

pub fn eigenvalues_symmetric(m: &SymmetricMatrix, tol: f64) -> Result<Spectrum, SpectraError> {
    eigen_symmetric(m, tol).map(|d| d.spectrum)
}

/// `λ(G)`.
pub fn laplacian_spectral_radius(graph: &Graph) -> Result<f64, SpectraError> {
    Ok(eigenvalues_symmetric(&laplacian(graph), DEFAULT_TOL)?.largest())
}

/// `μ(G)` from the full eigensolver (the power method is the second route).
pub fn signless_spectral_radius(graph: &Graph) -> Result<f64, SpectraError> {
    Ok(eigenvalues_symmetric(&signless(graph), DEFAULT_TOL)?.largest())
}

/// Positive unit eigenvector of `B(G)` for `μ(G)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerronVector {
    pub mu: f64,
    /// `components[i]` belongs to vertex `i + 1`.
    pub components: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
}

impl PerronVector {
    /// Component of vertex `v` (1-based).
    pub fn x(&self, v: usize) -> f64 {
        self.components[v - 1]
    }
}

/// Power iteration on `B(G)` from the all-ones direction, stopped once both
/// the Rayleigh quotient change and the residual `‖Bx - μx‖₂` are below
/// `tol`.
pub fn perron_vector(graph: &Graph, tol: f64) -> Result<PerronVector, SpectraError> {
    check_tol(tol)?;
    if !graph.is_connected() {
        return Err(SpectraError::Disconnected);
    }
    let n = graph.order();
    if n == 1 {
        return Ok(PerronVector { mu: 0.0, components: vec![1.0], iterations: 0, residual: 0.0 });
    }
    let b = signless(graph);
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut mu = f64::NAN;
    let mut residual = f64::INFINITY;
    for it in 1..=MAX_POWER_ITERATIONS {
        let y = b.mul_vec(&x);
        let next_mu: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        residual = y
            .iter()
            .zip(&x)
            .map(|(yi, xi)| (yi - next_mu * xi).powi(2))
            .sum::<f64>()
            .sqrt();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let done = (next_mu - mu).abs() < tol && residual < tol;
        mu = next_mu;
        if done {
            return Ok(PerronVector { mu, components: x, iterations: it, residual });
        }
        x = y.into_iter().map(|v| v / norm).collect();
    }
    Err(SpectraError::PowerIterationStalled { iterations: MAX_POWER_ITERATIONS, residual })
}

/// `Σ_{edges} (x_u + x_v)² / Σ x_i²`, the Rayleigh quotient of `B(G)`.
pub fn rayleigh_b(graph: &Graph, x: &[f64]) -> Result<f64, SpectraError> {
    if x.len() != graph.order() {
        return Err(SpectraError::LengthMismatch { expected: graph.order(), got: x.len() });
    }
    let norm_sq: f64 = x.iter().map(|v| v * v).sum();
    if norm_sq == 0.0 {
        return Err(SpectraError::ZeroVector);
    }
    let form: f64 = graph
        .edges()
        .map(|(u, v)| (x[u - 1] + x[v - 1]).powi(2))
        .sum();
    Ok(form / norm_sq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn p2_laplacian() {
        let l = laplacian(&path_graph(2).unwrap());
        assert_eq!(l.data, vec![1.0, -1.0, -1.0, 1.0]);
        let s = eigenvalues_symmetric(&l, DEFAULT_TOL).unwrap();
        assert!(close(s.eigenvalues[0], 0.0, 1e-14));
        assert!(close(s.eigenvalues[1], 2.0, 1e-14));
    }

    #[test]
    fn triangle_signless() {
        let b = signless(&cycle_graph(3).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(b.get(i, j), if i == j { 2.0 } else { 1.0 });
            }
        }
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let l = laplacian(&make_u_ng(11, 5).unwrap());
        for i in 0..l.order() {
            assert_eq!(l.row(i).iter().sum::<f64>(), 0.0);
        }
    }

    #[test]
    fn star_hits_degree_bound() {
        let s = eigenvalues_symmetric(&laplacian(&star_graph(5).unwrap()), DEFAULT_TOL).unwrap();
        assert!(close(s.largest(), 5.0, 1e-12));
    }

    #[test]
    fn u64_radius() {
        let lam = laplacian_spectral_radius(&make_u_ng(6, 4).unwrap()).unwrap();
        assert!(close(lam, 4.5615, 1e-3), "{lam}");
    }

    #[test]
    fn residual_and_zero_eigenvalue() {
        for n in 4..=16 {
            for g in 3..n {
                let s = eigenvalues_symmetric(&laplacian(&make_u_ng(n, g).unwrap()), DEFAULT_TOL)
                    .unwrap();
                assert!(s.residual <= 1e-9, "residual {}", s.residual);
                assert!(s.smallest().abs() <= 1e-9);
                assert!(s.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn zero_eigenvector_is_all_ones() {
        let d = eigen_symmetric(&laplacian(&make_u_ng(8, 5).unwrap()), DEFAULT_TOL).unwrap();
        let v0 = &d.vectors[0];
        let c = 1.0 / 8f64.sqrt();
        assert!(v0.iter().all(|x| close(x.abs(), c, 1e-9)));
    }

    #[test]
    fn regular_graph_perron() {
        let p = perron_vector(&cycle_graph(3).unwrap(), DEFAULT_TOL).unwrap();
        assert!(close(p.mu, 4.0, 1e-12));
        for x in &p.components {
            assert!(close(*x, 1.0 / 3f64.sqrt(), 1e-12));
        }
    }

    #[test]
    fn perron_matches_jacobi_and_bipartite_equality() {
        let u86 = make_u_ng(8, 6).unwrap();
        let p = perron_vector(&u86, DEFAULT_TOL).unwrap();
        let lam = laplacian_spectral_radius(&u86).unwrap();
        assert!(close(p.mu, lam, 1e-9));
        assert!(close(lam, 4.4989, 1e-3));
        assert!(close(p.mu, signless_spectral_radius(&u86).unwrap(), 10.0 * DEFAULT_TOL));
        assert!(p.components.iter().all(|&x| x > 0.0));
        let norm: f64 = p.components.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!(close(norm, 1.0, 1e-12));
    }

    #[test]
    fn ubar_perron_equals_u_radius() {
        let p = perron_vector(&make_ubar_ng(9, 7).unwrap(), DEFAULT_TOL).unwrap();
        let lam = laplacian_spectral_radius(&make_u_ng(9, 7).unwrap()).unwrap();
        assert!(close(p.mu, lam, 1e-9));
        assert!(close(lam, 4.4605, 1e-3));
    }

    #[test]
    fn perron_rejects_disconnected() {
        let g = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(perron_vector(&g, DEFAULT_TOL), Err(SpectraError::Disconnected));
    }

    #[test]
    fn rayleigh_examples() {
        let c4 = cycle_graph(4).unwrap();
        assert!(close(rayleigh_b(&c4, &[1.0; 4]).unwrap(), 4.0, 1e-15));
        assert_eq!(rayleigh_b(&c4, &[0.0; 4]), Err(SpectraError::ZeroVector));
        assert_eq!(
            rayleigh_b(&c4, &[1.0; 3]),
            Err(SpectraError::LengthMismatch { expected: 4, got: 3 })
        );
        let u = make_u_ng(6, 4).unwrap();
        let r = rayleigh_b(&u, &[2.0, 1.0, 2.0, 4.0, 2.0, 1.0]).unwrap();
        assert!(close(r, 4.5, 1e-14));
    }

    #[test]
    fn bad_tolerance() {
        let m = laplacian(&cycle_graph(3).unwrap());
        assert_eq!(eigenvalues_symmetric(&m, 0.0), Err(SpectraError::BadTolerance(0.0)));
    }
}
