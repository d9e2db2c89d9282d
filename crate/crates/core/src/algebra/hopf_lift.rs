use std::sync::OnceLock;

use nalgebra::{Matrix2, Matrix3, Rotation3, UnitQuaternion};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::geometry::hopf_p;

/// Bound on the sampled defect `|P(A p) - E P(p)|` of an accepted lift.
pub const LIFT_TOL: f64 = 1e-9;

const ROTATION_TOL: f64 = 1e-10;
const SAMPLE_COUNT: usize = 64;
const SAMPLE_SEED: u64 = 0x4f50_4c49_4654;

#[derive(Clone, Copy, Debug)]
enum MatrixOp {
    Identity,
    Conjugate,
    Transpose,
    Adjoint,
}

/// How the quaternion of a rotation is turned into an element of `SU(2)`
/// acting on `C^2 = R^4` compatibly with `hopf_p`: an axis relabeling applied
/// to `E` before extracting the quaternion, and an involution on the result.
#[derive(Clone, Copy, Debug)]
struct LiftConvention {
    axes: [usize; 3],
    op: MatrixOp,
}

/// Deterministic sample points of `R^4` used to verify lifts.
pub fn hopf_sample_points() -> &'static [[f64; 4]] {
    static POINTS: OnceLock<Vec<[f64; 4]>> = OnceLock::new();
    POINTS.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        (0..SAMPLE_COUNT).map(|_| std::array::from_fn(|_| StandardNormal.sample(&mut rng))).collect()
    })
}

fn apply_su2(a: &Matrix2<Complex64>, p: &[f64; 4]) -> [f64; 4] {
    let z1 = Complex64::new(p[0], p[1]);
    let z2 = Complex64::new(p[2], p[3]);
    let w1 = a[(0, 0)] * z1 + a[(0, 1)] * z2;
    let w2 = a[(1, 0)] * z1 + a[(1, 1)] * z2;
    [w1.re, w1.im, w2.re, w2.im]
}

/// `max_p |P(A p) - E P(p)|` over [`hopf_sample_points`].
pub fn lift_residual(a: &Matrix2<Complex64>, e: &Matrix3<f64>) -> f64 {
    hopf_sample_points().iter().fold(0.0, |acc, p| {
        let lhs = hopf_p(&apply_su2(a, p));
        let rhs = e * nalgebra::Vector3::from(hopf_p(p));
        let d = (0..3).fold(0.0_f64, |d, k| d.max((lhs[k] - rhs[k]).abs()));
        acc.max(d)
    })
}

fn quaternion_candidate(e: &Matrix3<f64>, conv: LiftConvention) -> Matrix2<Complex64> {
    let ax = conv.axes;
    let relabeled = Matrix3::from_fn(|r, c| e[(ax[r], ax[c])]);
    let q = UnitQuaternion::from_rotation_matrix(&Rotation3::from_matrix_unchecked(relabeled));
    let (w, x, y, z) = (q.w, q.i, q.j, q.k);
    // w·I - i(x σx + y σy + z σz)
    let a = Matrix2::new(
        Complex64::new(w, -z),
        Complex64::new(-y, -x),
        Complex64::new(y, -x),
        Complex64::new(w, z),
    );
    match conv.op {
        MatrixOp::Identity => a,
        MatrixOp::Conjugate => a.map(|v| v.conj()),
        MatrixOp::Transpose => a.transpose(),
        MatrixOp::Adjoint => a.adjoint(),
    }
}

/// The convention is fixed once by requiring `P∘A = E∘P` on the sample
/// points for rotations about each coordinate axis and one generic rotation.
fn convention() -> LiftConvention {
    static CONVENTION: OnceLock<LiftConvention> = OnceLock::new();
    *CONVENTION.get_or_init(|| {
        let probes = [
            Rotation3::from_axis_angle(&nalgebra::Vector3::x_axis(), 0.7),
            Rotation3::from_axis_angle(&nalgebra::Vector3::y_axis(), 0.7),
            Rotation3::from_axis_angle(&nalgebra::Vector3::z_axis(), 0.7),
            Rotation3::from_euler_angles(0.3, -1.1, 2.0),
        ];
        let axis_orders = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
        let ops = [MatrixOp::Identity, MatrixOp::Conjugate, MatrixOp::Transpose, MatrixOp::Adjoint];
        for axes in axis_orders {
            for op in ops {
                let conv = LiftConvention { axes, op };
                let fits = probes.iter().all(|r| {
                    let e = *r.matrix();
                    lift_residual(&quaternion_candidate(&e, conv), &e) < 1e-12
                });
                if fits {
                    return conv;
                }
            }
        }
        panic!("no quaternion convention matches the Hopf projection");
    })
}

/// A preimage `A ∈ SU(2)` of the rotation `E` under the double cover
/// determined by `hopf_p`, i.e. `P(A p) = E P(p)` for all `p ∈ R^4`.
pub fn su2_lift(e: &Matrix3<f64>) -> Result<Matrix2<Complex64>> {
    let defect = (e * e.transpose() - Matrix3::identity()).amax();
    let det = e.determinant();
    if defect > ROTATION_TOL || (det - 1.0).abs() > ROTATION_TOL {
        return Err(Error::NotARotation { defect, det });
    }
    let a = quaternion_candidate(e, convention());
    let residual = lift_residual(&a, e);
    if residual > LIFT_TOL {
        return Err(Error::WitnessResidual { residual });
    }
    Ok(a)
}
