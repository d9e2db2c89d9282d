use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

use super::{dot, hopf_jacobian, hopf_p, AmbientPoint, BumpProfile, TangentVector};
use crate::algebra::{CMatrix, SkewMapPair, SymMapPair};
use crate::error::{Error, Result};

/// The matrix data driving a form.
#[derive(Clone, Debug, PartialEq)]
pub enum FormKind {
    /// `λ^k = |p|²⟨J_k p, X⟩ − ⟨X, ip⟩⟨J_k p, ip⟩` on `S^{2m+1}`.
    Su(SkewMapPair),
    /// `λ^k = ⟨C_k P(p) × P(p), P_* X⟩` on `S^5` (`m = 2`).
    Sym(SymMapPair),
}

/// A torus-invariant horizontal `R^2`-valued 1-form, optionally scaled by a
/// bump function `f = φ(|p|², |q|²)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AdmissibleForm {
    pub kind: FormKind,
    pub bump: Option<BumpProfile>,
}

impl AdmissibleForm {
    pub fn su(pair: SkewMapPair) -> Self {
        Self { kind: FormKind::Su(pair), bump: None }
    }

    pub fn sym(pair: SymMapPair) -> Self {
        Self { kind: FormKind::Sym(pair), bump: None }
    }

    /// The zero form on `S^{2m+1}`.
    pub fn zero(m: usize) -> Self {
        if m == 2 {
            Self::sym(SymMapPair::zero())
        } else {
            Self::su(SkewMapPair::zero(m))
        }
    }

    pub fn with_bump(mut self, bump: BumpProfile) -> Self {
        self.bump = Some(bump);
        self
    }

    pub fn unbumped(&self) -> Self {
        Self { kind: self.kind.clone(), bump: None }
    }

    pub fn m(&self) -> usize {
        match &self.kind {
            FormKind::Su(j) => j.m(),
            FormKind::Sym(_) => 2,
        }
    }

    /// Ambient covectors `L^k` with `λ^k(v) = ⟨L^k, v⟩` at `pt` (bump included).
    pub fn covectors(&self, pt: &AmbientPoint) -> Result<[Vec<f64>; 2]> {
        if pt.m() != self.m() {
            return Err(Error::DimensionMismatch { expected: 2 * self.m() + 2, actual: pt.coords().len() });
        }
        let f = match &self.bump {
            Some(b) => {
                let f = b.phi(pt.p_norm_sq(), pt.q_norm_sq());
                if f == 0.0 {
                    let n = pt.coords().len();
                    return Ok([vec![0.0; n], vec![0.0; n]]);
                }
                f
            }
            None => 1.0,
        };
        let mut out = match &self.kind {
            FormKind::Su(j) => [su_covector(j.j1(), pt), su_covector(j.j2(), pt)],
            FormKind::Sym(c) => [sym_covector(c.c1(), pt), sym_covector(c.c2(), pt)],
        };
        if f != 1.0 {
            out.iter_mut().for_each(|l| l.iter_mut().for_each(|x| *x *= f));
        }
        Ok(out)
    }
}

fn su_covector(j: &CMatrix, pt: &AmbientPoint) -> Vec<f64> {
    let m = pt.m();
    let p = pt.p();
    let jp: Vec<Complex64> = (0..m).map(|r| (0..m).map(|c| j[(r, c)] * p[c]).sum()).collect();
    // ⟨Jp, ip⟩ = Re Σ conj(Jp_k) · i p_k
    let jp_ip: f64 = jp.iter().zip(&p).map(|(a, b)| (a.conj() * Complex64::i() * b).re).sum();
    let r2 = pt.p_norm_sq();
    let mut l = vec![0.0; 2 * m + 2];
    for k in 0..m {
        let ip = Complex64::i() * p[k];
        let v = jp[k] * r2 - ip * jp_ip;
        l[2 * k] = v.re;
        l[2 * k + 1] = v.im;
    }
    l
}

fn sym_covector(c: &Matrix3<f64>, pt: &AmbientPoint) -> Vec<f64> {
    let p: [f64; 4] = pt.p_part().try_into().expect("m = 2");
    let hp = Vector3::from(hopf_p(&p));
    let w = (c * hp).cross(&hp);
    let jac = hopf_jacobian(&p);
    let mut l = vec![0.0; 6];
    for (col, lc) in l.iter_mut().take(4).enumerate() {
        *lc = (0..3).map(|r| jac[r][col] * w[r]).sum();
    }
    l
}

/// `(λ¹(v), λ²(v))`.
pub fn eval_form(form: &AdmissibleForm, v: &TangentVector) -> Result<[f64; 2]> {
    let [l1, l2] = form.covectors(&v.base)?;
    Ok([dot(&l1, &v.coords), dot(&l2, &v.coords)])
}
