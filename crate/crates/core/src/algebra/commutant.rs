use nalgebra::DMatrix;

use super::{CMatrix, MatrixPair};

/// Relative singular-value cutoff for null-space decisions; the reference
/// scale is the largest singular value floored at one.
pub const NULL_SPACE_RTOL: f64 = 1e-9;

/// `tr((M1² + M2²)²)`, an invariant of the equivalence action (unitary or
/// orthogonal conjugation, sign changes of `Z1`/`Z2`, complex conjugation).
pub fn equivalence_invariant<P: MatrixPair>(pair: &P) -> f64 {
    let [a, b] = pair.complex_members();
    let s = &a * &a + &b * &b;
    let t = (&s * &s).trace();
    debug_assert!(t.im.abs() <= 1e-12 * t.re.abs().max(1.0), "invariant has imaginary part {}", t.im);
    t.re
}

/// Real matrix of the linear map `τ ↦ ([M1, τ], [M2, τ])` restricted to the
/// Lie algebra spanned by `pair.lie_algebra_basis()`. Rows are the real and
/// imaginary parts of both commutators, one column per basis element.
pub fn commutator_matrix<P: MatrixPair>(pair: &P) -> DMatrix<f64> {
    let [a, b] = pair.complex_members();
    let basis = pair.lie_algebra_basis();
    let n = pair.dim();
    let rows = 4 * n * n;
    let mut out = DMatrix::zeros(rows, basis.len());
    for (col, tau) in basis.iter().enumerate() {
        let ca: CMatrix = &a * tau - tau * &a;
        let cb: CMatrix = &b * tau - tau * &b;
        for (k, z) in ca.iter().chain(cb.iter()).enumerate() {
            out[(2 * k, col)] = z.re;
            out[(2 * k + 1, col)] = z.im;
        }
    }
    out
}

/// Dimension of the commutant of the pair inside `su(m)` (resp. `so(3)`).
/// Zero means the pair is generic.
pub fn commutant_dimension<P: MatrixPair>(pair: &P) -> usize {
    let mat = commutator_matrix(pair);
    let cols = mat.ncols();
    if cols == 0 {
        return 0;
    }
    let sv = mat.singular_values();
    let scale = sv.iter().cloned().fold(0.0_f64, f64::max).max(1.0);
    let rank = sv.iter().filter(|&&s| s >= NULL_SPACE_RTOL * scale).count();
    cols - rank
}
