//! Matrix-level layer.
//!
//! A torus-invariant deformation on `S^{2m+1}` is driven by a linear map from
//! the torus Lie algebra `R^2` into either `su(m)` (the [`SkewMapPair`]) or,
//! for `m = 2`, into traceless symmetric `3x3` matrices (the [`SymMapPair`]).
//! Both are stored through their values on the standard basis `Z1, Z2`.

mod charpoly;
mod commutant;
mod families;
mod hopf_lift;
mod witness;

pub use charpoly::{char_poly_at, chebyshev_nodes, check_isospectral, faddeev_leverrier, IsospectralCertificate};
pub use commutant::{commutant_dimension, commutator_matrix, equivalence_invariant, NULL_SPACE_RTOL};
pub use families::{dual_vector, family_j, pair_c};
pub use hopf_lift::{hopf_sample_points, lift_residual, su2_lift, LIFT_TOL};
pub use witness::{rotation_witness, unitary_witness, ConjugationWitness, WITNESS_SPECTRUM_TOL, WITNESS_TOL};

use nalgebra::{DMatrix, Matrix3};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

/// Entrywise tolerance for the structural invariants of the pairs.
pub const STRUCTURE_TOL: f64 = 1e-12;

/// Common view of the two pair types used by the generic predicates.
pub trait MatrixPair {
    /// Size of the matrices.
    fn dim(&self) -> usize;

    /// Both members as complex matrices.
    fn complex_members(&self) -> [CMatrix; 2];

    /// A real basis of the Lie algebra whose commutant defines genericity
    /// (`su(m)` resp. `so(3)`), as complex matrices.
    fn lie_algebra_basis(&self) -> Vec<CMatrix>;
}

/// Values `J1 = j(Z1)`, `J2 = j(Z2)` of a linear map `j: R^2 -> su(m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMapPair {
    j1: CMatrix,
    j2: CMatrix,
}

impl SkewMapPair {
    pub fn new(j1: CMatrix, j2: CMatrix) -> Result<Self> {
        let m = j1.nrows();
        if m < 2 {
            return Err(Error::InvalidPair(format!("m = {m} < 2")));
        }
        for (k, j) in [&j1, &j2].into_iter().enumerate() {
            if j.nrows() != m || j.ncols() != m {
                return Err(Error::DimensionMismatch { expected: m, actual: j.nrows().max(j.ncols()) });
            }
            let defect = max_abs(&(j.adjoint() + j));
            if defect > STRUCTURE_TOL {
                return Err(Error::InvalidPair(format!("J{} is not skew-hermitian (defect {defect:.3e})", k + 1)));
            }
            let tr = j.trace().norm();
            if tr > STRUCTURE_TOL {
                return Err(Error::InvalidPair(format!("J{} has trace {tr:.3e}", k + 1)));
            }
        }
        Ok(Self { j1, j2 })
    }

    pub fn zero(m: usize) -> Self {
        Self { j1: CMatrix::zeros(m, m), j2: CMatrix::zeros(m, m) }
    }

    pub fn m(&self) -> usize {
        self.j1.nrows()
    }

    pub fn j1(&self) -> &CMatrix {
        &self.j1
    }

    pub fn j2(&self) -> &CMatrix {
        &self.j2
    }

    /// `j(Z)` for `Z = z1 Z1 + z2 Z2`.
    pub fn at(&self, z: (f64, f64)) -> CMatrix {
        self.j1.map(|e| e * z.0) + self.j2.map(|e| e * z.1)
    }

    /// The pair `Z -> A j(Ψ Z) A^{-1}` (optionally with complex conjugation
    /// `Q` composed into `A`), i.e. the image under the equivalence action.
    pub fn transformed(&self, a: &CMatrix, sign: SignSymmetry, conjugate: bool) -> Self {
        let apply = |j: &CMatrix, eps: f64| {
            let j = if conjugate { j.map(|e| e.conj()) } else { j.clone() };
            (a * j * a.adjoint()).map(|e| e * eps)
        };
        Self { j1: apply(&self.j1, sign.eps1 as f64), j2: apply(&self.j2, sign.eps2 as f64) }
    }
}

impl MatrixPair for SkewMapPair {
    fn dim(&self) -> usize {
        self.m()
    }

    fn complex_members(&self) -> [CMatrix; 2] {
        [self.j1.clone(), self.j2.clone()]
    }

    fn lie_algebra_basis(&self) -> Vec<CMatrix> {
        su_basis(self.m())
    }
}

/// Values `C1 = c(Z1)`, `C2 = c(Z2)` of a linear map `c: R^2 -> Sym0(R^3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMapPair {
    c1: Matrix3<f64>,
    c2: Matrix3<f64>,
}

impl SymMapPair {
    pub fn new(c1: Matrix3<f64>, c2: Matrix3<f64>) -> Result<Self> {
        for (k, c) in [&c1, &c2].into_iter().enumerate() {
            let defect = (c - c.transpose()).amax();
            if defect > STRUCTURE_TOL {
                return Err(Error::InvalidPair(format!("C{} is not symmetric (defect {defect:.3e})", k + 1)));
            }
            if c.trace().abs() > STRUCTURE_TOL {
                return Err(Error::InvalidPair(format!("C{} has trace {:.3e}", k + 1, c.trace())));
            }
        }
        Ok(Self { c1, c2 })
    }

    pub fn zero() -> Self {
        Self { c1: Matrix3::zeros(), c2: Matrix3::zeros() }
    }

    pub fn c1(&self) -> &Matrix3<f64> {
        &self.c1
    }

    pub fn c2(&self) -> &Matrix3<f64> {
        &self.c2
    }

    pub fn at(&self, z: (f64, f64)) -> Matrix3<f64> {
        self.c1 * z.0 + self.c2 * z.1
    }

    /// The pair `Z -> E c(Ψ Z) E^{-1}` for an orthogonal `E`.
    pub fn transformed(&self, e: &Matrix3<f64>, sign: SignSymmetry) -> Self {
        Self {
            c1: e * self.c1 * e.transpose() * sign.eps1 as f64,
            c2: e * self.c2 * e.transpose() * sign.eps2 as f64,
        }
    }
}

impl MatrixPair for SymMapPair {
    fn dim(&self) -> usize {
        3
    }

    fn complex_members(&self) -> [CMatrix; 2] {
        [to_complex(&self.c1), to_complex(&self.c2)]
    }

    fn lie_algebra_basis(&self) -> Vec<CMatrix> {
        so_basis(3)
    }
}

/// A torus weight `μ ∈ L*`, written in the basis dual to `{Z1, Z2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TorusWeight {
    pub m1: i64,
    pub m2: i64,
}

impl TorusWeight {
    pub const ZERO: TorusWeight = TorusWeight { m1: 0, m2: 0 };

    pub fn new(m1: i64, m2: i64) -> Self {
        Self { m1, m2 }
    }

    pub fn is_zero(&self) -> bool {
        self.m1 == 0 && self.m2 == 0
    }

    pub fn negated(&self) -> Self {
        Self { m1: -self.m1, m2: -self.m2 }
    }

    /// All weights with `|m1|, |m2| <= bound`, lexicographically ordered.
    pub fn box_range(bound: i64) -> Vec<TorusWeight> {
        let mut out = Vec::new();
        for m1 in -bound..=bound {
            for m2 in -bound..=bound {
                out.push(TorusWeight { m1, m2 });
            }
        }
        out
    }
}

/// An element of the group of sign changes preserving `{±Z1}` and `{±Z2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignSymmetry {
    pub eps1: i8,
    pub eps2: i8,
}

impl SignSymmetry {
    pub fn all() -> [SignSymmetry; 4] {
        [
            SignSymmetry { eps1: 1, eps2: 1 },
            SignSymmetry { eps1: 1, eps2: -1 },
            SignSymmetry { eps1: -1, eps2: 1 },
            SignSymmetry { eps1: -1, eps2: -1 },
        ]
    }

    pub fn apply(&self, z: (f64, f64)) -> (f64, f64) {
        (self.eps1 as f64 * z.0, self.eps2 as f64 * z.1)
    }
}

pub(crate) fn to_complex(c: &Matrix3<f64>) -> CMatrix {
    CMatrix::from_fn(3, 3, |i, j| Complex64::new(c[(i, j)], 0.0))
}

pub(crate) fn max_abs(a: &CMatrix) -> f64 {
    a.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

/// Real basis of `su(m)`: `E_ij - E_ji`, `i(E_ij + E_ji)` for `i < j`, and
/// `i(E_kk - E_{k+1,k+1})`.
pub fn su_basis(m: usize) -> Vec<CMatrix> {
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let mut basis = Vec::with_capacity(m * m - 1);
    for r in 0..m {
        for c in (r + 1)..m {
            let mut a = CMatrix::zeros(m, m);
            a[(r, c)] = one;
            a[(c, r)] = -one;
            basis.push(a);
            let mut b = CMatrix::zeros(m, m);
            b[(r, c)] = i;
            b[(c, r)] = i;
            basis.push(b);
        }
    }
    for k in 0..m.saturating_sub(1) {
        let mut d = CMatrix::zeros(m, m);
        d[(k, k)] = i;
        d[(k + 1, k + 1)] = -i;
        basis.push(d);
    }
    basis
}

/// Real basis `E_ij - E_ji` (`i < j`) of `so(n)`.
pub fn so_basis(n: usize) -> Vec<CMatrix> {
    let one = Complex64::new(1.0, 0.0);
    let mut basis = Vec::new();
    for r in 0..n {
        for c in (r + 1)..n {
            let mut a = CMatrix::zeros(n, n);
            a[(r, c)] = one;
            a[(c, r)] = -one;
            basis.push(a);
        }
    }
    basis
}
