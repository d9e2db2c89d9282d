use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{dot, AmbientPoint, Surface};

fn gaussian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    (0..n).map(|_| StandardNormal.sample(rng)).collect()
}

/// A uniformly distributed point of the surface (normalized Gaussians).
pub fn random_point<R: Rng + ?Sized>(m: usize, surface: Surface, rng: &mut R) -> AmbientPoint {
    let mut v = gaussian(2 * m + 2, rng);
    match surface {
        Surface::Sphere => {
            let r = dot(&v, &v).sqrt();
            v.iter_mut().for_each(|x| *x /= r);
        }
        Surface::Product { a, b } => {
            let (p, q) = v.split_at_mut(2 * m);
            let rp = dot(p, p).sqrt();
            let rq = dot(q, q).sqrt();
            p.iter_mut().for_each(|x| *x *= a / rp);
            q.iter_mut().for_each(|x| *x *= b / rq);
        }
    }
    AmbientPoint::new(m, v).expect("length 2m+2")
}

/// A Gaussian ambient vector projected to the tangent space at `pt`.
pub fn random_tangent<R: Rng + ?Sized>(pt: &AmbientPoint, surface: Surface, rng: &mut R) -> Vec<f64> {
    let mut v = gaussian(pt.coords().len(), rng);
    let normals = surface.normals(pt).expect("nondegenerate point");
    for _ in 0..2 {
        for n in &normals {
            let c = dot(&v, n);
            v.iter_mut().zip(n).for_each(|(x, y)| *x -= c * y);
        }
    }
    v
}
