//! Galerkin verification of isospectrality.
//!
//! Polynomials restricted to the sphere (or to `M_{a,b}`) are split by torus
//! weight, and mass and stiffness matrices of `g_λ` are integrated with a
//! product rule that is invariant under a discrete subtorus. Each weight block
//! is solved as a generalized hermitian eigenproblem. Pointwise checks of the
//! intertwining condition and of the gradient-norm identity complement the
//! spectra.

mod assembly;
mod basis;
mod quadrature;
mod report;
mod solve;
mod verify;

pub use assembly::{assemble_blocks, hermitian_defect, HMatrix, WeightBlock};
pub use basis::{build_basis, Monomial, MonomialBasis, WeightedPolynomial};
pub use quadrature::{build_quadrature, gauss_jacobi_unit, surface_volume, QuadOrders, QuadratureRule};
pub use report::{
    compare_spectra, compute_spectrum, report_csv, report_json, BlockGap, BlockSpectrum, SpectrumComparison,
    SpectrumReport,
};
pub use solve::{mass_filtered_rank, solve_block, MASS_NULL_RTOL};
pub use verify::{apply_block, rayleigh_identity_check, verify_star, IdentityWitness, PairWitness, WitnessProvider};
