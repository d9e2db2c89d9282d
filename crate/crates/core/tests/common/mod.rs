//! Seeded generators and independent reference computations shared by the
//! integration suites.

#![allow(dead_code)]

use isospec_core::algebra::{CMatrix, SkewMapPair, SymMapPair};
use isospec_core::geometry::{eval_form, AdmissibleForm, AmbientPoint, Surface, TangentVector};
use nalgebra::{DMatrix, DVector, Matrix3};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub const DEFAULT_SEED: u64 = 0x1505_9EC7;

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn normal<R: Rng>(rng: &mut R) -> f64 {
    StandardNormal.sample(rng)
}

pub fn random_complex_matrix<R: Rng>(n: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| Complex64::new(normal(rng), normal(rng)))
}

/// Random element of `su(n)`.
pub fn random_su<R: Rng>(n: usize, rng: &mut R) -> CMatrix {
    let a = random_complex_matrix(n, rng);
    let mut s = (&a - a.adjoint()).map(|z| z * 0.5);
    let tr = s.trace() / n as f64;
    for k in 0..n {
        s[(k, k)] -= tr;
    }
    s
}

pub fn random_skew_pair<R: Rng>(n: usize, rng: &mut R) -> SkewMapPair {
    SkewMapPair::new(random_su(n, rng), random_su(n, rng)).unwrap()
}

pub fn random_sym0<R: Rng>(rng: &mut R) -> Matrix3<f64> {
    let a = Matrix3::from_fn(|_, _| normal(rng));
    let mut s = (a + a.transpose()) * 0.5;
    let tr = s.trace() / 3.0;
    for k in 0..3 {
        s[(k, k)] -= tr;
    }
    s
}

pub fn random_sym_pair<R: Rng>(rng: &mut R) -> SymMapPair {
    SymMapPair::new(random_sym0(rng), random_sym0(rng)).unwrap()
}

/// Haar-ish random special unitary matrix from a QR factorization.
pub fn random_special_unitary<R: Rng>(n: usize, rng: &mut R) -> CMatrix {
    let qr = random_complex_matrix(n, rng).qr();
    let (q, r) = (qr.q(), qr.r());
    let mut u = q.clone();
    for k in 0..n {
        let d = r[(k, k)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        u.column_mut(k).iter_mut().for_each(|z| *z *= phase);
    }
    let det = u.determinant();
    let fix = Complex64::from_polar(1.0, -det.arg() / n as f64);
    u.map(|z| z * fix)
}

pub fn random_rotation<R: Rng>(rng: &mut R) -> Matrix3<f64> {
    let qr = Matrix3::from_fn(|_, _| normal(rng)).qr();
    let mut q = qr.q();
    if q.determinant() < 0.0 {
        q.column_mut(0).neg_mut();
    }
    q
}

/// Coefficients of `Π (λ - e_k)` in descending powers.
pub fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (k, v) in c.iter().enumerate() {
            next[k] += v;
            next[k + 1] -= v * r;
        }
        c = next;
    }
    c
}

/// Dimension of `{τ ∈ su(n) : [M1, τ] = [M2, τ] = 0}` from the full real
/// system on all `2n²` real entries of `τ`, including the constraints
/// `τ + τ* = 0` and `Im tr τ = 0`.
pub fn commutant_dim_su_oracle(m1: &CMatrix, m2: &CMatrix) -> usize {
    let n = m1.nrows();
    let unknowns = 2 * n * n;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let unit = |k: usize| -> CMatrix {
        let (entry, imag) = (k / 2, k % 2 == 1);
        let mut t = CMatrix::zeros(n, n);
        t[(entry / n, entry % n)] = if imag { Complex64::new(0.0, 1.0) } else { Complex64::new(1.0, 0.0) };
        t
    };
    let images: Vec<[CMatrix; 4]> = (0..unknowns)
        .map(|k| {
            let t = unit(k);
            let tr = CMatrix::from_element(1, 1, t.trace());
            [m1 * &t - &t * m1, m2 * &t - &t * m2, &t + t.adjoint(), tr]
        })
        .collect();
    let counts = [n * n, n * n, n * n, 1];
    for (block, &cnt) in counts.iter().enumerate() {
        for e in 0..cnt {
            for part in 0..2 {
                if block == 3 && part == 0 {
                    continue;
                }
                rows.push(
                    images
                        .iter()
                        .map(|img| {
                            let z = img[block].as_slice()[e];
                            if part == 0 { z.re } else { z.im }
                        })
                        .collect(),
                );
            }
        }
    }
    nullity(&rows, unknowns)
}

/// Dimension of `{τ ∈ so(3) : [C1, τ] = [C2, τ] = 0}` on all 9 entries of `τ`.
pub fn commutant_dim_so3_oracle(c1: &Matrix3<f64>, c2: &Matrix3<f64>) -> usize {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let images: Vec<[Matrix3<f64>; 3]> = (0..9)
        .map(|k| {
            let mut t = Matrix3::zeros();
            t[(k / 3, k % 3)] = 1.0;
            [c1 * t - t * c1, c2 * t - t * c2, t + t.transpose()]
        })
        .collect();
    for block in 0..3 {
        for e in 0..9 {
            rows.push(images.iter().map(|img| img[block].as_slice()[e]).collect());
        }
    }
    nullity(&rows, 9)
}

fn nullity(rows: &[Vec<f64>], cols: usize) -> usize {
    let a = DMatrix::from_fn(rows.len(), cols, |r, c| rows[r][c]);
    let sv = a.svd(false, false).singular_values;
    let max = sv.iter().fold(0.0_f64, |x, &y| x.max(y)).max(1.0);
    cols - sv.iter().filter(|&&s| s > 1e-9 * max).count()
}

/// Straight transcription of the `su`-type form with complex vectors.
pub fn su_form_reference(j: &CMatrix, pt: &AmbientPoint, v: &[f64]) -> f64 {
    let m = pt.m();
    let p = DVector::from_vec(pt.p());
    let x = DVector::from_fn(m, |k, _| Complex64::new(v[2 * k], v[2 * k + 1]));
    let real_inner = |a: &DVector<Complex64>, b: &DVector<Complex64>| a.dotc(b).re;
    let jp = j * &p;
    let ip = p.map(|z| z * Complex64::i());
    p.norm_squared() * real_inner(&jp, &x) - real_inner(&x, &ip) * real_inner(&jp, &ip)
}

/// `P(p) = ½ (z* σ_z z, z* σ_x z, z* σ_y z)` with `z = (p1, p2)`.
pub fn hopf_reference(p: &[f64]) -> [f64; 3] {
    let z1 = Complex64::new(p[0], p[1]);
    let z2 = Complex64::new(p[2], p[3]);
    let cross = z1.conj() * z2;
    [0.5 * (z1.norm_sqr() - z2.norm_sqr()), cross.re, cross.im]
}

/// The `sym`-type form with `P_*X` from polarization of the quadratic map.
pub fn sym_form_reference(c: &Matrix3<f64>, pt: &AmbientPoint, v: &[f64]) -> f64 {
    let p = &pt.coords()[..4];
    let x = &v[..4];
    let sum: Vec<f64> = p.iter().zip(x).map(|(a, b)| a + b).collect();
    let (pp, px, ps) = (hopf_reference(p), hopf_reference(x), hopf_reference(&sum));
    let dp = nalgebra::Vector3::from_fn(|k, _| ps[k] - pp[k] - px[k]);
    let y = nalgebra::Vector3::from(pp);
    (c * y).cross(&y).dot(&dp)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rescales the `p` and `q` parts to norms `a`, `b`, with the derivative of the
/// rescaling applied to `dir`.
fn retract(u: &[f64], dir: &[f64], split: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; u.len()];
    let mut dx = vec![0.0; u.len()];
    for (range, r) in [(0..split, a), (split..u.len(), b)] {
        let (us, ds) = (&u[range.clone()], &dir[range.clone()]);
        let n = dot(us, us).sqrt();
        let proj = dot(us, ds) / (n * n);
        for (k, i) in range.enumerate() {
            x[i] = r * us[k] / n;
            dx[i] = r * (ds[k] - proj * us[k]) / n;
        }
    }
    (x, dx)
}

/// Finite-difference `dλ(X, Y)` on `M_{a,b}` in the chart
/// `σ(s, t) = R(x + sX + tY)`, `R` the normwise rescaling onto `M_{a,b}`:
/// `dλ(X, Y) = ∂_s λ(∂_t σ) − ∂_t λ(∂_s σ)` by central differences with one
/// Richardson step.
pub fn dlambda_finite_difference(form: &AdmissibleForm, a: f64, b: f64, x: &AmbientPoint, xv: &[f64], yv: &[f64]) -> [f64; 2] {
    let split = 2 * x.m();
    let pull = |s: f64, t: f64, along_t: bool| -> [f64; 2] {
        let u: Vec<f64> = (0..xv.len()).map(|k| x.coords()[k] + s * xv[k] + t * yv[k]).collect();
        let dir = if along_t { yv } else { xv };
        let (pt, d) = retract(&u, dir, split, a, b);
        let pt = AmbientPoint::new(x.m(), pt).unwrap();
        eval_form(form, &TangentVector::new(pt, d).unwrap()).unwrap()
    };
    let central = |h: f64| -> [f64; 2] {
        let bp = pull(h, 0.0, true);
        let bm = pull(-h, 0.0, true);
        let ap = pull(0.0, h, false);
        let am = pull(0.0, -h, false);
        [
            (bp[0] - bm[0] - ap[0] + am[0]) / (2.0 * h),
            (bp[1] - bm[1] - ap[1] + am[1]) / (2.0 * h),
        ]
    };
    let h = 1e-4;
    let (d1, d2) = (central(h), central(h / 2.0));
    [(4.0 * d2[0] - d1[0]) / 3.0, (4.0 * d2[1] - d1[1]) / 3.0]
}

/// `‖dφ‖²` for `φ` of torus weight `μ` through the closed form
/// `|∇_T φ − i φ (μ1 L¹ + μ2 L²)_T|²`, `L^k` the ambient covectors of `λ`.
pub fn weighted_gradient_norm_sq(
    form: &AdmissibleForm,
    surface: Surface,
    pt: &AmbientPoint,
    mu: (f64, f64),
    value: Complex64,
    grad: &[Complex64],
) -> f64 {
    let [l1, l2] = form.covectors(pt).unwrap();
    let mut w: Vec<Complex64> = grad
        .iter()
        .enumerate()
        .map(|(k, g)| g - Complex64::i() * value * (mu.0 * l1[k] + mu.1 * l2[k]))
        .collect();
    let n = pt.coords().len();
    let split = 2 * pt.m();
    let normals: Vec<Vec<f64>> = match surface {
        Surface::Sphere => vec![pt.coords().to_vec()],
        Surface::Product { .. } => vec![
            (0..n).map(|k| if k < split { pt.coords()[k] } else { 0.0 }).collect(),
            (0..n).map(|k| if k >= split { pt.coords()[k] } else { 0.0 }).collect(),
        ],
    };
    for nv in normals {
        let nn = dot(&nv, &nv);
        let c: Complex64 = w.iter().zip(&nv).map(|(z, r)| z * r).sum::<Complex64>() / nn;
        w.iter_mut().zip(&nv).for_each(|(z, r)| *z -= c * r);
    }
    w.iter().map(|z| z.norm_sqr()).sum()
}

/// `∫_{S^{2n-1}} Π |z_k|^{2a_k} = 2π^n Π a_k! / (n - 1 + Σ a_k)!`.
pub fn sphere_moment(exps: &[u32]) -> f64 {
    let fact = |k: u32| (1..=k).map(f64::from).product::<f64>();
    let n = exps.len() as u32;
    let total: u32 = exps.iter().sum();
    2.0 * std::f64::consts::PI.powi(n as i32) * exps.iter().map(|&a| fact(a)).product::<f64>() / fact(n - 1 + total)
}

/// Round `S^{2m+1}` spectrum on polynomials of degree `≤ n`: eigenvalue
/// `k(k + 2m)` with the dimension of degree-`k` harmonics.
pub fn round_sphere_spectrum(m: usize, n: usize) -> Vec<(f64, usize)> {
    let dim = 2 * m + 2;
    let binom = |a: usize, b: usize| (1..=b).fold(1usize, |acc, i| acc * (a + 1 - i) / i);
    (0..=n)
        .map(|k| {
            let hk = binom(dim + k - 1, k) - if k >= 2 { binom(dim + k - 3, k - 2) } else { 0 };
            ((k * (k + dim - 2)) as f64, hk)
        })
        .collect()
}

/// Closed-form dimension of degree-`k` harmonics on `S^5`.
pub fn s5_harmonic_dim(k: usize) -> usize {
    (k + 1) * (k + 2) * (k + 2) * (k + 3) / 12
}
pub mod invariants;
