use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::{CMatrix, MatrixPair};
use crate::error::{Error, Result};

/// Coefficients of `det(λ I - A)` in descending powers of `λ`, via the
/// Faddeev–LeVerrier recursion. The leading coefficient is exactly one.
pub fn faddeev_leverrier(a: &CMatrix) -> Vec<Complex64> {
    let n = a.nrows();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[0] = Complex64::new(1.0, 0.0);
    let mut mk = CMatrix::zeros(n, n);
    for k in 1..=n {
        mk = a * &mk;
        for d in 0..n {
            mk[(d, d)] += coeffs[k - 1];
        }
        let amk = a * &mk;
        coeffs[k] = -amk.trace() / k as f64;
    }
    coeffs
}

/// Characteristic polynomial of `s·M1 + u·M2`, descending powers.
pub fn char_poly_at<P: MatrixPair>(pair: &P, s: f64, u: f64) -> Vec<Complex64> {
    let [m1, m2] = pair.complex_members();
    let m = m1.map(|e| e * s) + m2.map(|e| e * u);
    faddeev_leverrier(&m)
}

/// `n` Chebyshev points of the first kind on `[-1, 1]`.
pub fn chebyshev_nodes(n: usize) -> Vec<f64> {
    (0..n).map(|i| ((2 * i + 1) as f64 * PI / (2 * n) as f64).cos()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IsospectralCertificate {
    pub ok: bool,
    pub max_coeff_gap: f64,
    /// Points per axis of the Chebyshev tensor grid that was evaluated.
    pub grid_points: usize,
}

/// Compare characteristic polynomials of `s·A1 + u·A2` and `s·B1 + u·B2` on a
/// Chebyshev tensor grid. The coefficients are polynomials of total degree at
/// most `m` in `(s, u)`, so agreement on an `(m+1) x (m+1)` grid of distinct
/// nodes forces agreement for every `Z`. `grid_size` is the number of points
/// per axis and is raised to `m + 1` when smaller.
pub fn check_isospectral<P: MatrixPair, Q: MatrixPair>(
    a: &P,
    b: &Q,
    grid_size: usize,
    tol: f64,
) -> Result<IsospectralCertificate> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), actual: b.dim() });
    }
    let n = grid_size.max(a.dim() + 1);
    let nodes = chebyshev_nodes(n);
    let mut gap: f64 = 0.0;
    for &s in &nodes {
        for &u in &nodes {
            let pa = char_poly_at(a, s, u);
            let pb = char_poly_at(b, s, u);
            for (x, y) in pa.iter().zip(&pb) {
                gap = gap.max((x - y).norm());
            }
        }
    }
    Ok(IsospectralCertificate { ok: gap <= tol, max_coeff_gap: gap, grid_points: n })
}
