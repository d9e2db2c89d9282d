use nalgebra::{ComplexField, DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::{max_abs, CMatrix};
use crate::error::{Error, Result};

/// Sorted eigenvalue lists must agree to this tolerance before a witness is built.
pub const WITNESS_SPECTRUM_TOL: f64 = 1e-8;
/// Bound on `max |A X A^{-1} - X'|` for an accepted witness.
pub const WITNESS_TOL: f64 = 1e-8;

/// A special unitary (resp. special orthogonal) `A` with `A X A^{-1} ≈ X'`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugationWitness<T: nalgebra::Scalar> {
    pub matrix: DMatrix<T>,
    /// Max-norm of `A X A^{-1} - X'`.
    pub residual: f64,
}

/// Eigendecomposition of a hermitian matrix with ascending eigenvalues and
/// correspondingly permuted eigenvector columns.
fn sorted_eigen<T: ComplexField<RealField = f64>>(h: DMatrix<T>) -> (Vec<f64>, DMatrix<T>) {
    let n = h.nrows();
    let eig = SymmetricEigen::new(h);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])].clone());
    (values, vectors)
}

fn spectrum_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |acc, (x, y)| acc.max((x - y).abs()))
}

/// Witness in `SU(n)` for two isospectral skew-hermitian matrices.
///
/// Both `iX` and `iX'` are diagonalized with eigenvalues sorted ascending,
/// `A = V U*` maps eigenspaces onto eigenspaces, and the determinant is then
/// removed by the scalar `e^{-iθ/n}`.
pub fn unitary_witness(x: &CMatrix, xp: &CMatrix) -> Result<ConjugationWitness<Complex64>> {
    let n = x.nrows();
    if xp.nrows() != n || x.ncols() != n || xp.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: xp.nrows() });
    }
    let i = Complex64::new(0.0, 1.0);
    let (ev, u) = sorted_eigen(x.map(|e| e * i));
    let (evp, v) = sorted_eigen(xp.map(|e| e * i));
    let gap = spectrum_gap(&ev, &evp);
    if gap > WITNESS_SPECTRUM_TOL {
        return Err(Error::NotIsospectral { gap });
    }
    let mut a = &v * u.adjoint();
    let det = a.determinant();
    let phase = Complex64::from_polar(1.0, -det.arg() / n as f64);
    a.iter_mut().for_each(|e| *e *= phase);
    let residual = max_abs(&(&a * x * a.adjoint() - xp));
    if residual > WITNESS_TOL {
        return Err(Error::WitnessResidual { residual });
    }
    Ok(ConjugationWitness { matrix: a, residual })
}

/// Witness in `SO(n)` for two isospectral real symmetric matrices. A column
/// of the target eigenbasis is flipped when needed to make `det A = 1`.
pub fn rotation_witness(x: &DMatrix<f64>, xp: &DMatrix<f64>) -> Result<ConjugationWitness<f64>> {
    let n = x.nrows();
    if xp.nrows() != n || x.ncols() != n || xp.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: xp.nrows() });
    }
    let (ev, u) = sorted_eigen(x.clone());
    let (evp, mut v) = sorted_eigen(xp.clone());
    let gap = spectrum_gap(&ev, &evp);
    if gap > WITNESS_SPECTRUM_TOL {
        return Err(Error::NotIsospectral { gap });
    }
    let mut a = &v * u.transpose();
    if a.determinant() < 0.0 {
        v.column_mut(0).neg_mut();
        a = &v * u.transpose();
    }
    let residual = (&a * x * a.transpose() - xp).amax();
    if residual > WITNESS_TOL {
        return Err(Error::WitnessResidual { residual });
    }
    Ok(ConjugationWitness { matrix: a, residual })
}
