//! Pointwise differential geometry on `S^{2m+1} ⊂ C^m ⊕ C = R^{2m+2}` and on
//! the torus-invariant product submanifolds `M_{a,b} = {|p| = a, |q| = b}`.
//!
//! Real coordinates follow the ordering `(Re p1, Im p1, …, Re pm, Im pm,
//! Re q, Im q)`. The torus `T = R^2 / 2πZ^2` acts by
//! `(p, q) ↦ (e^{ia} p, e^{ib} q)`.

mod bump;
mod curvature;
mod form;
mod hopf;
mod metric;
mod point;
mod sampling;

pub use bump::{bump_eval, estimate_support_volume, BumpProfile, VolumeEstimate};
pub use curvature::{connection_form_0, curvature_dlambda};
pub use form::{eval_form, AdmissibleForm, FormKind};
pub use hopf::{hopf_dp, hopf_jacobian, hopf_p};
pub use metric::{metric_gram, metric_gram_from_covectors, MetricSample};
pub use point::{
    frame_vectors, mul_i, push_forward, tangent_frame, torus_act, vertical_field, AmbientPoint, Surface,
    TangentVector,
};
pub use sampling::{random_point, random_tangent};

/// Volume of the unit sphere `S^{2m+1}`, `2π^{m+1} / m!`.
pub fn sphere_volume(m: usize) -> f64 {
    let fact: f64 = (1..=m).map(|k| k as f64).product();
    2.0 * std::f64::consts::PI.powi(m as i32 + 1) / fact
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
