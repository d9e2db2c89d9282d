//! Isospectral, nonisometric torus-invariant metrics on odd-dimensional spheres.
//!
//! The crate is split into three layers:
//!
//! * [`algebra`]: the matrix pairs `j: R^2 -> su(m)` and `c: R^2 -> Sym0(R^3)`,
//!   their isospectrality certificates, equivalence invariants, genericity
//!   (commutant) tests, conjugation witnesses and the SU(2) -> SO(3) lift.
//! * [`geometry`]: pointwise geometry on `S^{2m+1} ⊂ C^m ⊕ C` and on the
//!   product tori `M_{a,b}`: torus action, vertical fields, the admissible
//!   1-forms, the deformed metrics `g_λ`, bump scaling and curvature formulas.
//! * [`spectral`]: torus-symmetric quadrature, a polynomial Galerkin
//!   discretization of the Laplacian split by torus weight, spectra comparison
//!   and the pointwise checks behind the isospectrality argument.

pub mod algebra;
pub mod error;
pub mod geometry;
pub mod spectral;

pub use error::{Error, Result};
