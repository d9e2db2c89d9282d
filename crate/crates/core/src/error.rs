use thiserror::Error;

use crate::algebra::TorusWeight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid matrix pair: {0}")]
    InvalidPair(String),

    #[error("matrices are not isospectral (eigenvalue gap {gap:.3e})")]
    NotIsospectral { gap: f64 },

    #[error("conjugation witness residual {residual:.3e} exceeds tolerance")]
    WitnessResidual { residual: f64 },

    #[error("witness for weight ({}, {}) failed: {source}", .weight.m1, .weight.m2)]
    WitnessFailed {
        weight: TorusWeight,
        #[source]
        source: Box<Error>,
    },

    #[error("matrix is not a rotation (orthogonality defect {defect:.3e}, det {det:.6})")]
    NotARotation { defect: f64, det: f64 },

    #[error("vector is not tangent at the base point (defect {defect:.3e})")]
    NotTangent { defect: f64 },

    #[error("point is off the surface: {0}")]
    OffSurface(String),

    #[error("degenerate point: {0}")]
    DegeneratePoint(String),

    #[error("operation requires a form without bump profile")]
    BumpAttached,

    #[error("invalid bump profile: {0}")]
    InvalidBump(String),

    #[error("invalid quadrature orders: {0}")]
    InvalidOrders(String),

    #[error("quadrature symmetry order {order} too small for basis degree {degree} (need >= {})", 2 * .degree + 1)]
    SymmetryViolation { order: usize, degree: usize },

    #[error("invalid basis degree {0}; must be >= 1")]
    InvalidDegree(usize),

    #[error("test polynomial mixes torus weights ({}, {}) and ({}, {})", .first.m1, .first.m2, .second.m1, .second.m2)]
    MixedWeight {
        first: TorusWeight,
        second: TorusWeight,
    },

    #[error("spectrum metadata mismatch: {0}")]
    MetadataMismatch(String),

    #[error("form and quadrature disagree on m ({form} vs {quadrature})")]
    FormMismatch { form: usize, quadrature: usize },
}
