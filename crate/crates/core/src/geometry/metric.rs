use nalgebra::DMatrix;

use super::{dot, mul_i, AdmissibleForm, AmbientPoint, TangentVector};
use crate::error::{Error, Result};

/// Relative tangency tolerance for frame vectors.
const TANGENT_RTOL: f64 = 1e-10;

/// The metric `g_λ` at one point in a `g0`-frame.
#[derive(Clone, Debug)]
pub struct MetricSample {
    pub base: AmbientPoint,
    pub frame: Vec<TangentVector>,
    pub gram: DMatrix<f64>,
}

impl MetricSample {
    pub fn det(&self) -> f64 {
        self.gram.determinant()
    }
}

/// Vertical vector `λ(v)*` for covector values `(l1, l2)`.
fn lifted(pt: &AmbientPoint, v: &[f64], l: &[Vec<f64>; 2]) -> Vec<f64> {
    let (z1, z2) = (dot(&l[0], v), dot(&l[1], v));
    let split = 2 * pt.m();
    let ix = mul_i(pt.coords());
    v.iter()
        .zip(&ix)
        .enumerate()
        .map(|(k, (x, y))| x + if k < split { z1 * y } else { z2 * y })
        .collect()
}

/// Gram matrix `⟨F_i + λ(F_i)*, F_j + λ(F_j)*⟩` from precomputed covectors.
pub fn metric_gram_from_covectors(pt: &AmbientPoint, covectors: &[Vec<f64>; 2], frame: &[Vec<f64>]) -> DMatrix<f64> {
    let shifted: Vec<Vec<f64>> = frame.iter().map(|f| lifted(pt, f, covectors)).collect();
    let d = frame.len();
    let mut g = DMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let v = dot(&shifted[i], &shifted[j]);
            g[(i, j)] = v;
            g[(j, i)] = v;
        }
    }
    g
}

/// `g_λ` at `pt` in the given frame. Frame vectors must be tangent to the
/// sphere through `pt`.
pub fn metric_gram(form: &AdmissibleForm, pt: &AmbientPoint, frame: &[TangentVector]) -> Result<MetricSample> {
    let r = dot(pt.coords(), pt.coords()).sqrt();
    for f in frame {
        if f.coords.len() != pt.coords().len() {
            return Err(Error::DimensionMismatch { expected: pt.coords().len(), actual: f.coords.len() });
        }
        let scale = r * dot(&f.coords, &f.coords).sqrt();
        let defect = dot(&f.coords, pt.coords()).abs();
        if defect > TANGENT_RTOL * scale.max(1.0) {
            return Err(Error::NotTangent { defect });
        }
    }
    let covectors = form.covectors(pt)?;
    let raw: Vec<Vec<f64>> = frame.iter().map(|f| f.coords.clone()).collect();
    Ok(MetricSample {
        base: pt.clone(),
        frame: frame.to_vec(),
        gram: metric_gram_from_covectors(pt, &covectors, &raw),
    })
}
