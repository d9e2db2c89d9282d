use nalgebra::Vector3;

use super::{dot, hopf_dp, hopf_p, mul_i, AdmissibleForm, AmbientPoint, FormKind, Surface};
use crate::algebra::CMatrix;
use crate::error::{Error, Result};

const SURFACE_TOL: f64 = 1e-10;

fn check_product(surface: Surface, pt: &AmbientPoint, vs: &[&[f64]]) -> Result<(f64, f64)> {
    let Surface::Product { a, b } = surface else {
        return Err(Error::OffSurface("curvature formulas live on a product surface".into()));
    };
    if a <= 0.0 || b <= 0.0 {
        return Err(Error::DegeneratePoint(format!("a = {a}, b = {b}")));
    }
    if !surface.contains(pt, SURFACE_TOL) {
        return Err(Error::OffSurface(format!("point not on {}", surface.label())));
    }
    for v in vs {
        if v.len() != pt.coords().len() {
            return Err(Error::DimensionMismatch { expected: pt.coords().len(), actual: v.len() });
        }
        let defect = surface.tangency_defect(pt, v);
        if defect > SURFACE_TOL * dot(v, v).sqrt().max(1.0) {
            return Err(Error::NotTangent { defect });
        }
    }
    Ok((a, b))
}

/// Real matrix action of a complex `J` on the `p`-block of a real vector.
fn apply_complex(j: &CMatrix, x: &[f64]) -> Vec<f64> {
    let m = j.nrows();
    let mut out = vec![0.0; 2 * m];
    for r in 0..m {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for c in 0..m {
            acc += j[(r, c)] * num_complex::Complex64::new(x[2 * c], x[2 * c + 1]);
        }
        out[2 * r] = acc.re;
        out[2 * r + 1] = acc.im;
    }
    out
}

/// `2a²⟨J X^h, Y^h⟩ − 2⟨Jp, ip⟩⟨iX, Y⟩` with `X^h` the part of `X` orthogonal to `ip`.
fn su_raw(j: &CMatrix, p: &[f64], a2: f64, x: &[f64], y: &[f64]) -> f64 {
    let ip = mul_i(p);
    let horizontal = |v: &[f64]| -> Vec<f64> {
        let c = dot(v, &ip) / a2;
        v.iter().zip(&ip).map(|(v, w)| v - c * w).collect()
    };
    let (xh, yh) = (horizontal(x), horizontal(y));
    let jp = apply_complex(j, p);
    2.0 * a2 * dot(&apply_complex(j, &xh), &yh) - 2.0 * dot(&jp, &ip) * dot(&mul_i(x), y)
}

/// `3⟨C P(p) × P_*X, P_*Y⟩`, i.e. `3a³⟨C x × X̄, Ȳ⟩` with `x = P(p)/a`.
fn sym_raw(c: &nalgebra::Matrix3<f64>, p: &[f64; 4], x: &[f64; 4], y: &[f64; 4]) -> f64 {
    let hp = Vector3::from(hopf_p(p));
    let (px, py) = (Vector3::from(hopf_dp(p, x)), Vector3::from(hopf_dp(p, y)));
    3.0 * (c * hp).cross(&px).dot(&py)
}

/// Exterior derivative `(dλ¹, dλ²)(X, Y)` of the form restricted to
/// `M_{a,b}`, in closed form.
pub fn curvature_dlambda(
    form: &AdmissibleForm,
    surface: Surface,
    pt: &AmbientPoint,
    x: &[f64],
    y: &[f64],
) -> Result<[f64; 2]> {
    if form.bump.is_some() {
        return Err(Error::BumpAttached);
    }
    if pt.m() != form.m() {
        return Err(Error::DimensionMismatch { expected: 2 * form.m() + 2, actual: pt.coords().len() });
    }
    let (a, _) = check_product(surface, pt, &[x, y])?;
    let split = 2 * pt.m();
    let (p, xp, yp) = (pt.p_part(), &x[..split], &y[..split]);
    // averaging both orders makes the result antisymmetric bit-for-bit
    let anti = |raw: &dyn Fn(&[f64], &[f64]) -> f64| 0.5 * (raw(xp, yp) - raw(yp, xp));
    Ok(match &form.kind {
        FormKind::Su(j) => {
            let a2 = a * a;
            [anti(&|u, v| su_raw(j.j1(), p, a2, u, v)), anti(&|u, v| su_raw(j.j2(), p, a2, u, v))]
        }
        FormKind::Sym(c) => {
            let p4: [f64; 4] = p.try_into().expect("m = 2");
            let (c1, c2) = (c.c1(), c.c2());
            [
                anti(&|u, v| sym_raw(c1, &p4, u.try_into().unwrap(), v.try_into().unwrap())),
                anti(&|u, v| sym_raw(c2, &p4, u.try_into().unwrap(), v.try_into().unwrap())),
            ]
        }
    })
}

/// The round connection form `(⟨X, ip⟩/a², ⟨U, iq⟩/b²)` at a point of `M_{a,b}`.
pub fn connection_form_0(pt: &AmbientPoint, v: &[f64]) -> Result<[f64; 2]> {
    let (a2, b2) = (pt.p_norm_sq(), pt.q_norm_sq());
    if a2 == 0.0 || b2 == 0.0 {
        return Err(Error::DegeneratePoint(format!("|p|² = {a2}, |q|² = {b2}")));
    }
    if v.len() != pt.coords().len() {
        return Err(Error::DimensionMismatch { expected: pt.coords().len(), actual: v.len() });
    }
    let split = 2 * pt.m();
    let ix = mul_i(pt.coords());
    Ok([dot(&v[..split], &ix[..split]) / a2, dot(&v[split..], &ix[split..]) / b2])
}
