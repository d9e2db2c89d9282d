use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::dot;
use crate::error::{Error, Result};

/// Tolerance for on-surface and tangency checks of inputs.
const SURFACE_TOL: f64 = 1e-10;

/// A point of `R^{2m+2} = C^m ⊕ C`.
#[derive(Clone, Debug, PartialEq)]
pub struct AmbientPoint {
    m: usize,
    coords: Vec<f64>,
}

impl AmbientPoint {
    pub fn new(m: usize, coords: Vec<f64>) -> Result<Self> {
        if coords.len() != 2 * m + 2 {
            return Err(Error::DimensionMismatch { expected: 2 * m + 2, actual: coords.len() });
        }
        Ok(Self { m, coords })
    }

    pub fn from_complex(p: &[Complex64], q: Complex64) -> Self {
        let mut coords = Vec::with_capacity(2 * p.len() + 2);
        for z in p.iter().chain(std::iter::once(&q)) {
            coords.push(z.re);
            coords.push(z.im);
        }
        Self { m: p.len(), coords }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// The `k`-th complex coordinate; `k = m` is `q`.
    pub fn z(&self, k: usize) -> Complex64 {
        Complex64::new(self.coords[2 * k], self.coords[2 * k + 1])
    }

    pub fn p(&self) -> Vec<Complex64> {
        (0..self.m).map(|k| self.z(k)).collect()
    }

    pub fn q(&self) -> Complex64 {
        self.z(self.m)
    }

    pub fn p_part(&self) -> &[f64] {
        &self.coords[..2 * self.m]
    }

    pub fn q_part(&self) -> &[f64] {
        &self.coords[2 * self.m..]
    }

    pub fn p_norm_sq(&self) -> f64 {
        dot(self.p_part(), self.p_part())
    }

    pub fn q_norm_sq(&self) -> f64 {
        dot(self.q_part(), self.q_part())
    }
}

/// Surfaces on which frames, quadrature and tangency are defined.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Surface {
    /// The unit sphere `S^{2m+1}`.
    Sphere,
    /// `M_{a,b} = S_a^{2m-1} × S_b^1`.
    Product { a: f64, b: f64 },
}

impl Surface {
    /// Real dimension for a given `m`.
    pub fn dimension(&self, m: usize) -> usize {
        match self {
            Surface::Sphere => 2 * m + 1,
            Surface::Product { .. } => 2 * m,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Surface::Sphere => "sphere".to_string(),
            Surface::Product { a, b } => format!("product(a={a},b={b})"),
        }
    }

    pub fn contains(&self, pt: &AmbientPoint, tol: f64) -> bool {
        match *self {
            Surface::Sphere => (pt.p_norm_sq() + pt.q_norm_sq() - 1.0).abs() <= tol,
            Surface::Product { a, b } => {
                (pt.p_norm_sq().sqrt() - a).abs() <= tol && (pt.q_norm_sq().sqrt() - b).abs() <= tol
            }
        }
    }

    /// Unit normals spanning the normal space at `pt`.
    pub(crate) fn normals(&self, pt: &AmbientPoint) -> Result<Vec<Vec<f64>>> {
        let n = pt.coords.len();
        match self {
            Surface::Sphere => {
                let r = dot(&pt.coords, &pt.coords).sqrt();
                if r == 0.0 {
                    return Err(Error::DegeneratePoint("origin has no sphere frame".into()));
                }
                Ok(vec![pt.coords.iter().map(|x| x / r).collect()])
            }
            Surface::Product { .. } => {
                let (a, b) = (pt.p_norm_sq().sqrt(), pt.q_norm_sq().sqrt());
                if a == 0.0 || b == 0.0 {
                    return Err(Error::DegeneratePoint(format!("|p| = {a}, |q| = {b}")));
                }
                let split = 2 * pt.m;
                let np = (0..n).map(|k| if k < split { pt.coords[k] / a } else { 0.0 }).collect();
                let nq = (0..n).map(|k| if k >= split { pt.coords[k] / b } else { 0.0 }).collect();
                Ok(vec![np, nq])
            }
        }
    }

    /// Largest violation of the tangency conditions for `v` at `pt`.
    pub fn tangency_defect(&self, pt: &AmbientPoint, v: &[f64]) -> f64 {
        let split = 2 * pt.m;
        match self {
            Surface::Sphere => dot(v, &pt.coords).abs(),
            Surface::Product { .. } => dot(&v[..split], pt.p_part())
                .abs()
                .max(dot(&v[split..], pt.q_part()).abs()),
        }
    }
}

/// A vector `(X, U) ∈ T_p R^{2m} ⊕ T_q R^2` attached to a base point.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentVector {
    pub base: AmbientPoint,
    pub coords: Vec<f64>,
}

impl TangentVector {
    pub fn new(base: AmbientPoint, coords: Vec<f64>) -> Result<Self> {
        if coords.len() != base.coords.len() {
            return Err(Error::DimensionMismatch { expected: base.coords.len(), actual: coords.len() });
        }
        Ok(Self { base, coords })
    }

    pub fn is_tangent_to(&self, surface: Surface, tol: f64) -> bool {
        surface.tangency_defect(&self.base, &self.coords) <= tol
    }
}

/// Multiplication by `i` on each complex coordinate: `(x, y) ↦ (-y, x)`.
pub fn mul_i(v: &[f64]) -> Vec<f64> {
    v.chunks_exact(2).flat_map(|c| [-c[1], c[0]]).collect()
}

fn rotate_pairs(v: &[f64], split: usize, a: f64, b: f64) -> Vec<f64> {
    let (ca, sa) = (a.cos(), a.sin());
    let (cb, sb) = (b.cos(), b.sin());
    v.chunks_exact(2)
        .enumerate()
        .flat_map(|(k, c)| {
            let (co, si) = if 2 * k < split { (ca, sa) } else { (cb, sb) };
            [co * c[0] - si * c[1], si * c[0] + co * c[1]]
        })
        .collect()
}

/// `exp(a Z1 + b Z2) · (p, q) = (e^{ia} p, e^{ib} q)`.
pub fn torus_act(a: f64, b: f64, pt: &AmbientPoint) -> AmbientPoint {
    AmbientPoint { m: pt.m, coords: rotate_pairs(&pt.coords, 2 * pt.m, a, b) }
}

/// Differential of the torus action: `(X, U) ↦ (e^{ia} X, e^{ib} U)` at the
/// moved base point.
pub fn push_forward(a: f64, b: f64, v: &TangentVector) -> TangentVector {
    TangentVector {
        base: torus_act(a, b, &v.base),
        coords: rotate_pairs(&v.coords, 2 * v.base.m, a, b),
    }
}

/// The vertical field `Z*` of `Z = z1 Z1 + z2 Z2` at `pt`: `(i z1 p, i z2 q)`.
pub fn vertical_field(z: (f64, f64), pt: &AmbientPoint) -> TangentVector {
    let split = 2 * pt.m;
    let ix = mul_i(&pt.coords);
    let coords = ix.iter().enumerate().map(|(k, v)| if k < split { z.0 * v } else { z.1 * v }).collect();
    TangentVector { base: pt.clone(), coords }
}

/// Orthonormal basis of the tangent space at `pt` as raw ambient vectors.
///
/// The ambient basis vectors are projected to the tangent space and
/// Gram–Schmidt is run with largest-residual pivoting (lowest index on ties),
/// so the frame depends only on `pt`.
pub fn frame_vectors(pt: &AmbientPoint, surface: Surface) -> Result<Vec<Vec<f64>>> {
    let n = pt.coords.len();
    let d = surface.dimension(pt.m);
    let normals = surface.normals(pt)?;
    let mut candidates: Vec<Vec<f64>> = (0..n)
        .map(|k| {
            let mut e = vec![0.0; n];
            e[k] = 1.0;
            for nv in &normals {
                let c = nv[k];
                e.iter_mut().zip(nv).for_each(|(x, y)| *x -= c * y);
            }
            e
        })
        .collect();
    let mut used = vec![false; n];
    let mut frame: Vec<Vec<f64>> = Vec::with_capacity(d);
    for _ in 0..d {
        let mut best = None;
        let mut best_norm = -1.0;
        for (k, c) in candidates.iter().enumerate() {
            if used[k] {
                continue;
            }
            let norm = dot(c, c);
            if norm > best_norm {
                best_norm = norm;
                best = Some(k);
            }
        }
        let k = best.expect("candidate set larger than tangent dimension");
        if best_norm <= 1e-20 {
            return Err(Error::DegeneratePoint("tangent frame collapsed".into()));
        }
        used[k] = true;
        let mut v = candidates[k].clone();
        // second pass restores orthogonality lost to cancellation
        for _ in 0..2 {
            for nv in normals.iter().chain(frame.iter()) {
                let c = dot(&v, nv);
                v.iter_mut().zip(nv).for_each(|(x, y)| *x -= c * y);
            }
        }
        let norm = dot(&v, &v).sqrt();
        v.iter_mut().for_each(|x| *x /= norm);
        for (j, c) in candidates.iter_mut().enumerate() {
            if !used[j] {
                let proj = dot(c, &v);
                c.iter_mut().zip(&v).for_each(|(x, y)| *x -= proj * y);
            }
        }
        frame.push(v);
    }
    Ok(frame)
}

/// Orthonormal (for `g0`) tangent frame at a point of `surface`.
pub fn tangent_frame(pt: &AmbientPoint, surface: Surface) -> Result<Vec<TangentVector>> {
    if let Surface::Product { a, b } = surface {
        if a * b == 0.0 {
            return Err(Error::DegeneratePoint(format!("product surface with a·b = {}", a * b)));
        }
    }
    if !surface.contains(pt, SURFACE_TOL) {
        return Err(Error::OffSurface(format!("point not on {}", surface.label())));
    }
    Ok(frame_vectors(pt, surface)?
        .into_iter()
        .map(|coords| TangentVector { base: pt.clone(), coords })
        .collect())
}
