use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::algebra::TorusWeight;
use crate::error::{Error, Result};
use crate::geometry::AmbientPoint;

/// `Π_k z_k^{a_k} z̄_k^{b_k}` over the complex coordinates `(p_1, …, p_m, q)`.
/// Exponents are stored interleaved as `[a_1, b_1, …, a_{m+1}, b_{m+1}]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.len() < 4 || !exps.len().is_multiple_of(2) {
            return Err(Error::DimensionMismatch { expected: 4, actual: exps.len() });
        }
        Ok(Self { exps })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn m(&self) -> usize {
        self.exps.len() / 2 - 1
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// `(|α| − |β|, γ − δ)`.
    pub fn weight(&self) -> TorusWeight {
        let m = self.m();
        let m1: i64 = (0..m).map(|k| self.exps[2 * k] as i64 - self.exps[2 * k + 1] as i64).sum();
        TorusWeight::new(m1, self.exps[2 * m] as i64 - self.exps[2 * m + 1] as i64)
    }
}

/// All monomials of total degree `≤ N` in `C^m ⊕ C`, sorted by exponent tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialBasis {
    pub m: usize,
    pub degree: usize,
    pub entries: Vec<Monomial>,
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Basis indices grouped by torus weight, in weight order.
    pub fn weight_slices(&self) -> BTreeMap<TorusWeight, Vec<usize>> {
        let mut out: BTreeMap<TorusWeight, Vec<usize>> = BTreeMap::new();
        for (k, e) in self.entries.iter().enumerate() {
            out.entry(e.weight()).or_default().push(k);
        }
        out
    }

    /// The same set with entries reordered by `perm` (entry `k` becomes `entries[perm[k]]`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self { m: self.m, degree: self.degree, entries: perm.iter().map(|&k| self.entries[k].clone()).collect() }
    }
}

fn enumerate(slots: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() == slots {
        out.push(prefix.clone());
        return;
    }
    for e in 0..=budget {
        prefix.push(e);
        enumerate(slots, budget - e, prefix, out);
        prefix.pop();
    }
}

pub fn build_basis(m: usize, n: usize) -> Result<MonomialBasis> {
    if n < 1 {
        return Err(Error::InvalidDegree(n));
    }
    if m < 1 {
        return Err(Error::DimensionMismatch { expected: 1, actual: m });
    }
    let mut raw = Vec::new();
    enumerate(2 * m + 2, n as u32, &mut Vec::new(), &mut raw);
    raw.sort();
    Ok(MonomialBasis { m, degree: n, entries: raw.into_iter().map(|exps| Monomial { exps }).collect() })
}

/// Powers `z_k^e` and `z̄_k^e` at one point, `e = 0..=N`.
pub(crate) struct PowerTable {
    pow: Vec<Vec<Complex64>>,
    cpow: Vec<Vec<Complex64>>,
}

impl PowerTable {
    pub(crate) fn new(pt: &AmbientPoint, n: usize) -> Self {
        let mut pow = Vec::with_capacity(pt.m() + 1);
        let mut cpow = Vec::with_capacity(pt.m() + 1);
        for k in 0..=pt.m() {
            let z = pt.z(k);
            let mut p = vec![Complex64::new(1.0, 0.0); n + 1];
            for e in 1..=n {
                p[e] = p[e - 1] * z;
            }
            cpow.push(p.iter().map(|w| w.conj()).collect());
            pow.push(p);
        }
        Self { pow, cpow }
    }

    /// Value and real-coordinate gradient `(∂_x, ∂_y)` per complex slot.
    pub(crate) fn eval(&self, mono: &Monomial, grad: &mut [Complex64]) -> Complex64 {
        let e = &mono.exps;
        let slots = e.len() / 2;
        let factor = |k: usize| self.pow[k][e[2 * k] as usize] * self.cpow[k][e[2 * k + 1] as usize];
        let factors: Vec<Complex64> = (0..slots).map(factor).collect();
        let value = factors.iter().product();
        for k in 0..slots {
            let (a, b) = (e[2 * k] as usize, e[2 * k + 1] as usize);
            let rest: Complex64 = factors.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, f)| f).product();
            let dz = if a > 0 { self.pow[k][a - 1] * self.cpow[k][b] * a as f64 } else { Complex64::new(0.0, 0.0) };
            let dzb = if b > 0 { self.pow[k][a] * self.cpow[k][b - 1] * b as f64 } else { Complex64::new(0.0, 0.0) };
            grad[2 * k] = (dz + dzb) * rest;
            grad[2 * k + 1] = Complex64::i() * (dz - dzb) * rest;
        }
        value
    }
}

/// A finite combination of monomials sharing one torus weight.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedPolynomial {
    terms: Vec<(Complex64, Monomial)>,
    weight: TorusWeight,
    m: usize,
}

impl WeightedPolynomial {
    pub fn new(terms: Vec<(Complex64, Monomial)>) -> Result<Self> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::InvalidDegree(0));
        };
        let (weight, m) = (first.weight(), first.m());
        for (_, mono) in &terms {
            if mono.m() != m {
                return Err(Error::DimensionMismatch { expected: 2 * m + 2, actual: mono.exps.len() });
            }
            if mono.weight() != weight {
                return Err(Error::MixedWeight { first: weight, second: mono.weight() });
            }
        }
        Ok(Self { terms, weight, m })
    }

    pub fn weight(&self) -> TorusWeight {
        self.weight
    }

    pub fn terms(&self) -> &[(Complex64, Monomial)] {
        &self.terms
    }

    fn max_degree(&self) -> usize {
        self.terms.iter().map(|(_, t)| t.degree() as usize).max().unwrap_or(0)
    }

    /// Value and complex-valued real gradient at `pt`.
    pub fn eval_with_gradient(&self, pt: &AmbientPoint) -> (Complex64, Vec<Complex64>) {
        let table = PowerTable::new(pt, self.max_degree());
        let n = 2 * self.m + 2;
        let mut grad = vec![Complex64::new(0.0, 0.0); n];
        let mut g = vec![Complex64::new(0.0, 0.0); n];
        let mut value = Complex64::new(0.0, 0.0);
        for (c, mono) in &self.terms {
            value += c * table.eval(mono, &mut g);
            grad.iter_mut().zip(&g).for_each(|(acc, x)| *acc += c * x);
        }
        (value, grad)
    }
}
