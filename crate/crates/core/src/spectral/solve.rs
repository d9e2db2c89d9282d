use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::assembly::{HMatrix, WeightBlock};

/// Mass eigenvalues below this fraction of the largest are treated as null.
pub const MASS_NULL_RTOL: f64 = 1e-10;

fn mass_range(mass: &HMatrix) -> (Vec<f64>, HMatrix) {
    let eig = SymmetricEigen::new(mass.clone());
    let max = eig.eigenvalues.iter().fold(0.0_f64, |a, &b| a.max(b));
    let keep: Vec<usize> = (0..mass.nrows()).filter(|&k| eig.eigenvalues[k] > MASS_NULL_RTOL * max).collect();
    let vals = keep.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vecs = DMatrix::from_fn(mass.nrows(), keep.len(), |r, c| eig.eigenvectors[(r, keep[c])]);
    (vals, vecs)
}

/// Dimension of the mass range after null filtering.
pub fn mass_filtered_rank(mass: &HMatrix) -> usize {
    if mass.is_empty() {
        return 0;
    }
    mass_range(mass).0.len()
}

/// Ascending eigenvalues of `S v = μ M v` on the range of `M`.
pub fn solve_block(block: &WeightBlock) -> Vec<f64> {
    if block.mass.is_empty() {
        return Vec::new();
    }
    let (vals, vecs) = mass_range(&block.mass);
    // B = U D^{-1/2} whitens the mass: B* M B = I
    let mut b = vecs;
    for (c, v) in vals.iter().enumerate() {
        let s = Complex64::new(1.0 / v.sqrt(), 0.0);
        b.column_mut(c).iter_mut().for_each(|z| *z *= s);
    }
    let mut reduced = b.adjoint() * &block.stiffness * &b;
    // symmetrize away roundoff before the hermitian solver
    reduced = (&reduced + reduced.adjoint()).map(|z| z * 0.5);
    let mut out: Vec<f64> = SymmetricEigen::new(reduced).eigenvalues.iter().copied().collect();
    out.sort_by(f64::total_cmp);
    out
}
