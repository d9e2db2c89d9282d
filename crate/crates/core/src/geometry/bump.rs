use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{random_point, sphere_volume, AmbientPoint, Surface};
use crate::error::{Error, Result};

/// Smooth compactly supported `φ` on `[0, 1]^2`, realized as a product of
/// standard mollifiers normalized to equal `amplitude` at the center:
///
/// `φ(s, u) = amplitude · exp(2 - 1/(1 - w1²) - 1/(1 - w2²))` for
/// `|w_k| < 1`, `w = ((s - s0)/r1, (u - u0)/r2)`, and zero otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BumpProfile {
    pub center: (f64, f64),
    pub radii: (f64, f64),
    pub amplitude: f64,
}

impl BumpProfile {
    pub fn new(center: (f64, f64), radii: (f64, f64), amplitude: f64) -> Result<Self> {
        let in_unit = |x: f64| (0.0..=1.0).contains(&x);
        if !in_unit(center.0) || !in_unit(center.1) {
            return Err(Error::InvalidBump(format!("center {center:?} outside [0,1]^2")));
        }
        if !(radii.0 > 0.0 && radii.1 > 0.0) {
            return Err(Error::InvalidBump(format!("radii {radii:?} must be positive")));
        }
        if amplitude == 0.0 || !amplitude.is_finite() {
            return Err(Error::InvalidBump(format!("amplitude {amplitude} must be finite and nonzero")));
        }
        Ok(Self { center, radii, amplitude })
    }

    /// `φ(s, u)`.
    pub fn phi(&self, s: f64, u: f64) -> f64 {
        let w1 = (s - self.center.0) / self.radii.0;
        let w2 = (u - self.center.1) / self.radii.1;
        if w1.abs() >= 1.0 || w2.abs() >= 1.0 {
            return 0.0;
        }
        self.amplitude * (2.0 - 1.0 / (1.0 - w1 * w1) - 1.0 / (1.0 - w2 * w2)).exp()
    }

    /// Whether `(|p|², |q|²)` lies in the open support rectangle.
    pub fn in_support(&self, s: f64, u: f64) -> bool {
        ((s - self.center.0) / self.radii.0).abs() < 1.0 && ((u - self.center.1) / self.radii.1).abs() < 1.0
    }

    /// Whether the open support rectangle meets the segment `{(s, 1 - s)}`,
    /// i.e. whether `f` is nonzero somewhere on the unit sphere.
    pub fn meets_sphere(&self) -> bool {
        let lo = (self.center.0 - self.radii.0).max(1.0 - self.center.1 - self.radii.1).max(0.0);
        let hi = (self.center.0 + self.radii.0).min(1.0 - self.center.1 + self.radii.1).min(1.0);
        lo < hi
    }
}

/// `f(p, q) = φ(|p|², |q|²)`.
pub fn bump_eval(profile: &BumpProfile, pt: &AmbientPoint) -> f64 {
    profile.phi(pt.p_norm_sq(), pt.q_norm_sq())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VolumeEstimate {
    pub volume: f64,
    pub std_error: f64,
    pub samples: usize,
    pub hits: usize,
}

/// Monte Carlo estimate of the `g0`-volume of `{f ≠ 0} ⊂ S^{2m+1}` from
/// uniformly distributed points.
pub fn estimate_support_volume<R: Rng + ?Sized>(
    profile: &BumpProfile,
    m: usize,
    samples: usize,
    rng: &mut R,
) -> Result<VolumeEstimate> {
    if !profile.meets_sphere() {
        return Err(Error::InvalidBump("support does not meet the sphere".into()));
    }
    let mut hits = 0usize;
    for _ in 0..samples {
        let x = random_point(m, Surface::Sphere, rng);
        if profile.in_support(x.p_norm_sq(), x.q_norm_sq()) {
            hits += 1;
        }
    }
    let n = samples.max(1) as f64;
    let frac = hits as f64 / n;
    let vol = sphere_volume(m);
    Ok(VolumeEstimate {
        volume: frac * vol,
        std_error: vol * (frac * (1.0 - frac) / n).sqrt(),
        samples,
        hits,
    })
}
