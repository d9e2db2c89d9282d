use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use super::assembly::NodeMetric;
use super::basis::WeightedPolynomial;
use crate::algebra::{dual_vector, su2_lift, rotation_witness, unitary_witness, CMatrix, TorusWeight};
use crate::error::{Error, Result};
use crate::geometry::{eval_form, random_point, random_tangent, AdmissibleForm, AmbientPoint, FormKind, Surface, TangentVector};

/// Supplies `A_Z ∈ SU(m)` for `Z = dual_vector(μ)`; `F_μ = (A_Z, Id)`.
pub trait WitnessProvider {
    fn witness(&self, mu: TorusWeight) -> Result<CMatrix>;
}

/// `A_Z = Id` for every weight.
#[derive(Clone, Copy, Debug)]
pub struct IdentityWitness {
    pub m: usize,
}

impl WitnessProvider for IdentityWitness {
    fn witness(&self, _mu: TorusWeight) -> Result<CMatrix> {
        Ok(CMatrix::identity(self.m, self.m))
    }
}

/// Witnesses computed from the matrix data of two forms of the same kind:
/// `j'_Z = A j_Z A^{-1}` directly, or `c'_Z = E c_Z E^{-1}` lifted to `SU(2)`.
#[derive(Clone, Debug)]
pub struct PairWitness {
    a: FormKind,
    b: FormKind,
}

impl PairWitness {
    pub fn new(a: &AdmissibleForm, b: &AdmissibleForm) -> Result<Self> {
        match (&a.kind, &b.kind) {
            (FormKind::Su(x), FormKind::Su(y)) if x.m() == y.m() => {}
            (FormKind::Sym(_), FormKind::Sym(_)) => {}
            _ => return Err(Error::InvalidPair("forms are of different kinds or sizes".into())),
        }
        Ok(Self { a: a.kind.clone(), b: b.kind.clone() })
    }
}

impl WitnessProvider for PairWitness {
    fn witness(&self, mu: TorusWeight) -> Result<CMatrix> {
        let z = dual_vector(mu);
        let wrap = |e: Error| Error::WitnessFailed { weight: mu, source: Box::new(e) };
        if self.a == self.b {
            let n = match &self.a {
                FormKind::Su(x) => x.m(),
                FormKind::Sym(_) => 2,
            };
            return Ok(CMatrix::identity(n, n));
        }
        match (&self.a, &self.b) {
            (FormKind::Su(x), FormKind::Su(y)) => {
                if mu.is_zero() {
                    return Ok(CMatrix::identity(x.m(), x.m()));
                }
                Ok(unitary_witness(&x.at(z), &y.at(z)).map_err(wrap)?.matrix)
            }
            (FormKind::Sym(x), FormKind::Sym(y)) => {
                if mu.is_zero() {
                    return Ok(CMatrix::identity(2, 2));
                }
                let to_dyn = |c: nalgebra::Matrix3<f64>| DMatrix::from_iterator(3, 3, c.iter().copied());
                let e = rotation_witness(&to_dyn(x.at(z)), &to_dyn(y.at(z))).map_err(wrap)?.matrix;
                let e3 = nalgebra::Matrix3::from_iterator(e.iter().copied());
                let a = su2_lift(&e3).map_err(wrap)?;
                Ok(CMatrix::from_iterator(2, 2, a.iter().copied()))
            }
            _ => unreachable!("checked in PairWitness::new"),
        }
    }
}

/// `(A, Id)` applied to a real `2m+2` vector.
pub fn apply_block(a: &CMatrix, v: &[f64]) -> Vec<f64> {
    let m = a.nrows();
    let mut out = v.to_vec();
    for r in 0..m {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in 0..m {
            acc += a[(r, c)] * Complex64::new(v[2 * c], v[2 * c + 1]);
        }
        out[2 * r] = acc.re;
        out[2 * r + 1] = acc.im;
    }
    out
}

/// `(A, Id)ᵀ` applied to a complex-valued gradient vector.
fn apply_block_transpose(a: &CMatrix, g: &[Complex64]) -> Vec<Complex64> {
    // the real matrix of w ↦ A w has entries [[Re, -Im], [Im, Re]] per complex entry
    let m = a.nrows();
    let mut out = g.to_vec();
    for c in 0..m {
        let (mut x, mut y) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for r in 0..m {
            let e = a[(r, c)];
            x += g[2 * r] * e.re + g[2 * r + 1] * e.im;
            y += -g[2 * r] * e.im + g[2 * r + 1] * e.re;
        }
        out[2 * c] = x;
        out[2 * c + 1] = y;
    }
    out
}

fn mu_apply(mu: TorusWeight, l: [f64; 2]) -> f64 {
    mu.m1 as f64 * l[0] + mu.m2 as f64 * l[1]
}

/// `max |(μ∘λ)(v) − (μ∘λ')(F_μ* v)|` over random unit-sphere samples.
pub fn verify_star<W: WitnessProvider + ?Sized, R: Rng + ?Sized>(
    form_a: &AdmissibleForm,
    form_b: &AdmissibleForm,
    mu: TorusWeight,
    provider: &W,
    sample_count: usize,
    rng: &mut R,
) -> Result<f64> {
    let m = form_a.m();
    if form_b.m() != m {
        return Err(Error::FormMismatch { form: m, quadrature: form_b.m() });
    }
    let a = provider.witness(mu)?;
    let mut worst = 0.0_f64;
    for _ in 0..sample_count {
        let x = random_point(m, Surface::Sphere, rng);
        let v = random_tangent(&x, Surface::Sphere, rng);
        let fx = AmbientPoint::new(m, apply_block(&a, x.coords()))?;
        let fv = apply_block(&a, &v);
        let lhs = mu_apply(mu, eval_form(form_a, &TangentVector::new(x, v)?)?);
        let rhs = mu_apply(mu, eval_form(form_b, &TangentVector::new(fx, fv)?)?);
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// `max |‖dφ‖_{g_λ}(x) − ‖dψ‖_{g_λ'}(F_μ x)|` with `φ = ψ ∘ F_μ`, over all
/// test polynomials `ψ` of weight `μ` and sphere points `x`.
pub fn rayleigh_identity_check<W: WitnessProvider + ?Sized>(
    form_a: &AdmissibleForm,
    form_b: &AdmissibleForm,
    mu: TorusWeight,
    provider: &W,
    test_polynomials: &[WeightedPolynomial],
    points: &[AmbientPoint],
) -> Result<f64> {
    for psi in test_polynomials {
        if psi.weight() != mu {
            return Err(Error::MixedWeight { first: mu, second: psi.weight() });
        }
    }
    let a = provider.witness(mu)?;
    let m = form_a.m();
    let mut worst = 0.0_f64;
    for x in points {
        let fx = AmbientPoint::new(m, apply_block(&a, x.coords()))?;
        let metric_a = NodeMetric::new(form_a, x, Surface::Sphere)?;
        let metric_b = NodeMetric::new(form_b, &fx, Surface::Sphere)?;
        for psi in test_polynomials {
            let (_, grad_psi) = psi.eval_with_gradient(&fx);
            let grad_phi = apply_block_transpose(&a, &grad_psi);
            let lhs = metric_a.norm_sq(&grad_phi).sqrt();
            let rhs = metric_b.norm_sq(&grad_psi).sqrt();
            worst = worst.max((lhs - rhs).abs());
        }
    }
    Ok(worst)
}
