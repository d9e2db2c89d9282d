use nalgebra::Matrix3;
use num_complex::Complex64;

use super::{CMatrix, SkewMapPair, SymMapPair, TorusWeight};

/// The continuous isospectral family `j(t): R^2 -> su(3)`.
///
/// `J1 = diag(-i, 0, i)` does not depend on `t`; `J2(t)` is real
/// antisymmetric with entries `cos t` next to the diagonal and `√2 sin t` in
/// the corner.
pub fn family_j(t: f64) -> SkewMapPair {
    let i = Complex64::new(0.0, 1.0);
    let mut j1 = CMatrix::zeros(3, 3);
    j1[(0, 0)] = -i;
    j1[(2, 2)] = i;
    let (c, s) = (t.cos(), std::f64::consts::SQRT_2 * t.sin());
    let j2 = CMatrix::from_row_slice(
        3,
        3,
        &[0.0, c, s, -c, 0.0, c, -s, -c, 0.0].map(|x| Complex64::new(x, 0.0)),
    );
    SkewMapPair::new(j1, j2).expect("family_j is su(3)-valued")
}

/// The isospectral, nonequivalent pair `(c, c')` on `S^5`. Both share
/// `C1 = diag(-1, 0, 1)`.
pub fn pair_c() -> (SymMapPair, SymMapPair) {
    let r2 = std::f64::consts::SQRT_2;
    let c1 = Matrix3::new(-1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0);
    let c2 = Matrix3::new(0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0);
    let c2p = Matrix3::new(0.0, 0.0, r2, 0.0, 0.0, 0.0, r2, 0.0, 0.0);
    (
        SymMapPair::new(c1, c2).expect("c is Sym0-valued"),
        SymMapPair::new(c1, c2p).expect("c' is Sym0-valued"),
    )
}

/// The vector `Z = m1 Z1 + m2 Z2` identified with `μ` through the basis
/// `{Z1, Z2}`.
pub fn dual_vector(mu: TorusWeight) -> (f64, f64) {
    (mu.m1 as f64, mu.m2 as f64)
}
