use std::collections::BTreeMap;

use nalgebra::{Cholesky, DMatrix, Dyn};
use num_complex::Complex64;
use rayon::prelude::*;

use super::basis::{MonomialBasis, PowerTable};
use super::quadrature::QuadratureRule;
use super::solve::mass_filtered_rank;
use crate::algebra::TorusWeight;
use crate::error::{Error, Result};
use crate::geometry::{frame_vectors, metric_gram_from_covectors, AdmissibleForm, AmbientPoint, Surface};

pub type HMatrix = DMatrix<Complex64>;

/// Nodes per work item; fixed so that the reduction order never depends on
/// the thread count.
const CHUNK: usize = 1024;

/// Mass and stiffness matrices over the basis functions of one torus weight.
#[derive(Clone, Debug)]
pub struct WeightBlock {
    pub weight: TorusWeight,
    /// Positions of the block's functions in the basis.
    pub indices: Vec<usize>,
    pub mass: HMatrix,
    pub stiffness: HMatrix,
    pub filtered_rank: usize,
}

/// `g_λ` at a point, factored for evaluating `‖dφ‖²`.
pub(crate) struct NodeMetric {
    frame: Vec<Vec<f64>>,
    chol: Cholesky<f64, Dyn>,
}

impl NodeMetric {
    pub(crate) fn new(form: &AdmissibleForm, pt: &AmbientPoint, surface: Surface) -> Result<Self> {
        let frame = frame_vectors(pt, surface)?;
        let cov = form.covectors(pt)?;
        let gram = metric_gram_from_covectors(pt, &cov, &frame);
        let chol = Cholesky::new(gram).ok_or_else(|| Error::DegeneratePoint("metric not positive definite".into()))?;
        Ok(Self { frame, chol })
    }

    /// `C^{-1} (⟨∇φ, F_a⟩)_a` where `G = C Cᵀ`; its squared norm is `‖dφ‖²_{g_λ}`.
    pub(crate) fn whiten(&self, grad: &[Complex64], out: &mut [Complex64]) {
        let l = self.chol.l_dirty();
        let d = self.frame.len();
        for a in 0..d {
            let mut c: Complex64 = self.frame[a].iter().zip(grad).map(|(f, g)| g * f).sum();
            for b in 0..a {
                c -= out[b] * l[(a, b)];
            }
            out[a] = c / l[(a, a)];
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.frame.len()
    }

    pub(crate) fn norm_sq(&self, grad: &[Complex64]) -> f64 {
        let mut h = vec![Complex64::new(0.0, 0.0); self.dim()];
        self.whiten(grad, &mut h);
        h.iter().map(|z| z.norm_sqr()).sum()
    }
}

struct Partial {
    mass: Vec<HMatrix>,
    stiffness: Vec<HMatrix>,
}

impl Partial {
    fn zeros(sizes: &[usize]) -> Self {
        Self {
            mass: sizes.iter().map(|&n| HMatrix::zeros(n, n)).collect(),
            stiffness: sizes.iter().map(|&n| HMatrix::zeros(n, n)).collect(),
        }
    }

    fn add(&mut self, other: &Partial) {
        for (a, b) in self.mass.iter_mut().zip(&other.mass) {
            *a += b;
        }
        for (a, b) in self.stiffness.iter_mut().zip(&other.stiffness) {
            *a += b;
        }
    }
}

/// Galerkin mass and stiffness blocks of `g_λ` on the quadrature surface.
///
/// Mixed-weight entries integrate to zero on a `Z_K × Z_K`-invariant rule, so
/// only same-weight pairs are accumulated.
pub fn assemble_blocks(basis: &MonomialBasis, quad: &QuadratureRule, form: &AdmissibleForm) -> Result<Vec<WeightBlock>> {
    if form.m() != quad.m || basis.m != quad.m {
        return Err(Error::FormMismatch { form: form.m(), quadrature: quad.m });
    }
    if quad.symmetry_order() < 2 * basis.degree + 1 {
        return Err(Error::SymmetryViolation { order: quad.symmetry_order(), degree: basis.degree });
    }
    let slices: BTreeMap<TorusWeight, Vec<usize>> = basis.weight_slices();
    let sizes: Vec<usize> = slices.values().map(Vec::len).collect();
    let groups: Vec<&Vec<usize>> = slices.values().collect();
    let n = basis.len();
    let amb = 2 * quad.m + 2;
    let d = quad.surface.dimension(quad.m);

    let partials: Vec<Partial> = quad
        .nodes
        .par_chunks(CHUNK)
        .zip(quad.weights.par_chunks(CHUNK))
        .map(|(nodes, weights)| -> Result<Partial> {
            let mut acc = Partial::zeros(&sizes);
            let mut values = vec![Complex64::new(0.0, 0.0); n];
            let mut whitened = vec![Complex64::new(0.0, 0.0); n * d];
            let mut grad = vec![Complex64::new(0.0, 0.0); amb];
            for (pt, &w) in nodes.iter().zip(weights) {
                let metric = NodeMetric::new(form, pt, quad.surface)?;
                let table = PowerTable::new(pt, basis.degree);
                for (k, mono) in basis.entries.iter().enumerate() {
                    values[k] = table.eval(mono, &mut grad);
                    metric.whiten(&grad, &mut whitened[k * d..(k + 1) * d]);
                }
                for (g, idx) in groups.iter().enumerate() {
                    let (mass, stiff) = (&mut acc.mass[g], &mut acc.stiffness[g]);
                    for (i, &bi) in idx.iter().enumerate() {
                        let hi = &whitened[bi * d..(bi + 1) * d];
                        for (j, &bj) in idx.iter().enumerate().skip(i) {
                            let hj = &whitened[bj * d..(bj + 1) * d];
                            let s: Complex64 = hi.iter().zip(hj).map(|(a, b)| a * b.conj()).sum();
                            mass[(i, j)] += values[bi] * values[bj].conj() * w;
                            stiff[(i, j)] += s * w;
                        }
                    }
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;

    let mut total = Partial::zeros(&sizes);
    for p in &partials {
        total.add(p);
    }
    Ok(slices
        .into_iter()
        .zip(total.mass.into_iter().zip(total.stiffness))
        .map(|((weight, indices), (mut mass, mut stiffness))| {
            for i in 0..indices.len() {
                for j in 0..i {
                    mass[(i, j)] = mass[(j, i)].conj();
                    stiffness[(i, j)] = stiffness[(j, i)].conj();
                }
                mass[(i, i)].im = 0.0;
                stiffness[(i, i)].im = 0.0;
            }
            let filtered_rank = mass_filtered_rank(&mass);
            WeightBlock { weight, indices, mass, stiffness, filtered_rank }
        })
        .collect())
}

/// Largest entrywise hermiticity defect of a matrix.
pub fn hermitian_defect(h: &HMatrix) -> f64 {
    (h - h.adjoint()).iter().fold(0.0, |acc, z| acc.max(z.norm()))
}
