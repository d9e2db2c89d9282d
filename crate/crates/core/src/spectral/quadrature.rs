use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{sphere_volume, AmbientPoint, Surface};

/// Gauss–Legendre points per radial variable and circle points `K` per torus angle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadOrders {
    pub radial: usize,
    pub angular: usize,
}

impl QuadOrders {
    pub fn new(radial: usize, angular: usize) -> Result<Self> {
        if radial == 0 || angular == 0 {
            return Err(Error::InvalidOrders(format!("{radial}:{angular}")));
        }
        Ok(Self { radial, angular })
    }

    /// Parses a comma-separated list such as `"4:9,6:17"`.
    pub fn parse_list(s: &str) -> Result<Vec<Self>> {
        let out: Vec<Self> = s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect::<Result<_>>()?;
        if out.is_empty() {
            return Err(Error::InvalidOrders("empty list".into()));
        }
        Ok(out)
    }
}

impl FromStr for QuadOrders {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidOrders(format!("expected RADIAL:ANGULAR, got {s:?}"));
        let (r, k) = s.trim().split_once(':').ok_or_else(bad)?;
        Self::new(r.trim().parse().map_err(|_| bad())?, k.trim().parse().map_err(|_| bad())?)
    }
}

impl fmt::Display for QuadOrders {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.radial, self.angular)
    }
}

#[derive(Clone, Debug)]
pub struct QuadratureRule {
    pub m: usize,
    pub surface: Surface,
    pub orders: QuadOrders,
    pub nodes: Vec<AmbientPoint>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// Order `K` of the discrete torus subgroup `Z_K × Z_K` preserving the nodes.
    pub fn symmetry_order(&self) -> usize {
        self.orders.angular
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Sum of the weights with Neumaier compensation; plain summation over
    /// millions of nodes drifts by about `len · ε`.
    pub fn total_weight(&self) -> f64 {
        let (mut sum, mut comp) = (0.0_f64, 0.0_f64);
        for &w in &self.weights {
            let t = sum + w;
            comp += if sum.abs() >= w.abs() { (sum - t) + w } else { (w - t) + sum };
            sum = t;
        }
        sum + comp
    }
}

/// Gauss–Jacobi nodes and weights for `∫_0^1 t^alpha g(t) dt`, exact for
/// polynomials `g` of degree `< 2n` (Golub–Welsch on the Jacobi matrix).
pub fn gauss_jacobi_unit(n: usize, alpha: u32) -> (Vec<f64>, Vec<f64>) {
    // Jacobi polynomials on [-1, 1] with weight (1 + x)^b, then t = (1 + x) / 2
    let b = alpha as f64;
    let mut jac = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        let kf = k as f64;
        let s = 2.0 * kf + b;
        jac[(k, k)] = if k == 0 { b / (b + 2.0) } else { b * b / (s * (s + 2.0)) };
        if k + 1 < n {
            let k1 = kf + 1.0;
            let s1 = 2.0 * k1 + b;
            let off = (4.0 * k1 * k1 * (k1 + b) * (k1 + b) / (s1 * s1 * (s1 + 1.0) * (s1 - 1.0))).sqrt();
            jac[(k, k + 1)] = off;
            jac[(k + 1, k)] = off;
        }
    }
    let eig = SymmetricEigen::new(jac);
    // ∫_0^1 t^b dt
    let mass = 1.0 / (b + 1.0);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| (0.5 * (1.0 + eig.eigenvalues[i]), mass * eig.eigenvectors[(0, i)].powi(2)))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    pairs.into_iter().unzip()
}

/// Nodes on the unit `S^{2n-1} ⊂ C^n` as complex tuples with weights.
///
/// `z = (√t σ, √(1-t) e^{iθ})` with `σ ∈ S^{2n-3}`; the volume element is
/// `½ t^{n-2} dt dσ dθ`, integrated by Gauss–Jacobi in `t` (weight
/// `t^{n-2}`) and a uniform `K`-point rule in `θ`.
fn odd_sphere(n: usize, orders: QuadOrders) -> Vec<(Vec<Complex64>, f64)> {
    let k = orders.angular;
    let circle: Vec<Complex64> = (0..k).map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / k as f64)).collect();
    let dtheta = 2.0 * PI / k as f64;
    if n == 1 {
        return circle.into_iter().map(|z| (vec![z], dtheta)).collect();
    }
    let inner = odd_sphere(n - 1, orders);
    let (ts, wts) = gauss_jacobi_unit(orders.radial, n as u32 - 2);
    let mut out = Vec::with_capacity(ts.len() * inner.len() * k);
    for (t, wt) in ts.iter().zip(&wts) {
        let (rs, rc) = (t.sqrt(), (1.0 - t).sqrt());
        let radial_weight = 0.5 * wt;
        for (sigma, ws) in &inner {
            for e in &circle {
                let mut z: Vec<Complex64> = sigma.iter().map(|s| s * rs).collect();
                z.push(e * rc);
                out.push((z, radial_weight * ws * dtheta));
            }
        }
    }
    out
}

/// Torus-symmetric product rule on the sphere `S^{2m+1}` or on `M_{a,b}`.
pub fn build_quadrature(m: usize, surface: Surface, orders: QuadOrders) -> Result<QuadratureRule> {
    QuadOrders::new(orders.radial, orders.angular)?;
    if m == 0 {
        return Err(Error::DimensionMismatch { expected: 1, actual: 0 });
    }
    let (nodes, weights) = match surface {
        Surface::Sphere => odd_sphere(m + 1, orders)
            .into_iter()
            .map(|(z, w)| (AmbientPoint::from_complex(&z[..m], z[m]), w))
            .unzip(),
        Surface::Product { a, b } => {
            if a <= 0.0 || b <= 0.0 {
                return Err(Error::DegeneratePoint(format!("a = {a}, b = {b}")));
            }
            let k = orders.angular;
            let scale = a.powi(2 * m as i32 - 1) * 2.0 * PI * b / k as f64;
            let mut nodes = Vec::new();
            let mut weights = Vec::new();
            for (sigma, ws) in odd_sphere(m, orders) {
                let p: Vec<Complex64> = sigma.iter().map(|s| s * a).collect();
                for j in 0..k {
                    let q = Complex64::from_polar(b, 2.0 * PI * j as f64 / k as f64);
                    nodes.push(AmbientPoint::from_complex(&p, q));
                    weights.push(ws * scale);
                }
            }
            (nodes, weights)
        }
    };
    Ok(QuadratureRule { m, surface, orders, nodes, weights })
}

/// Closed-form volume of the surface.
pub fn surface_volume(m: usize, surface: Surface) -> f64 {
    match surface {
        Surface::Sphere => sphere_volume(m),
        Surface::Product { a, b } => a.powi(2 * m as i32 - 1) * sphere_volume(m - 1) * 2.0 * PI * b,
    }
}
