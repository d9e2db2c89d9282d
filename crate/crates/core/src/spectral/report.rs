use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::assembly::assemble_blocks;
use super::basis::MonomialBasis;
use super::quadrature::{QuadOrders, QuadratureRule};
use super::solve::solve_block;
use crate::algebra::TorusWeight;
use crate::error::{Error, Result};
use crate::geometry::{AdmissibleForm, Surface};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockSpectrum {
    pub weight: TorusWeight,
    pub eigenvalues: Vec<f64>,
}

/// Per-weight Galerkin spectra of one metric.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub surface: Surface,
    pub m: usize,
    pub degree: usize,
    pub orders: QuadOrders,
    pub blocks: Vec<BlockSpectrum>,
}

impl SpectrumReport {
    /// All eigenvalues of all blocks, ascending.
    pub fn pooled(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.blocks.iter().flat_map(|b| b.eigenvalues.iter().copied()).collect();
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn block(&self, weight: TorusWeight) -> Option<&BlockSpectrum> {
        self.blocks.iter().find(|b| b.weight == weight)
    }
}

/// Assembles and solves every weight block.
pub fn compute_spectrum(basis: &MonomialBasis, quad: &QuadratureRule, form: &AdmissibleForm) -> Result<SpectrumReport> {
    let blocks = assemble_blocks(basis, quad, form)?;
    let spectra = blocks
        .par_iter()
        .map(|b| BlockSpectrum { weight: b.weight, eigenvalues: solve_block(b) })
        .collect();
    Ok(SpectrumReport { surface: quad.surface, m: quad.m, degree: basis.degree, orders: quad.orders, blocks: spectra })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockGap {
    pub weight: TorusWeight,
    pub gaps: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumComparison {
    pub max_gap: f64,
    pub ok: bool,
    pub tol: f64,
    pub blocks: Vec<BlockGap>,
}

/// Sort-and-match comparison of two reports, block by block.
pub fn compare_spectra(a: &SpectrumReport, b: &SpectrumReport, tol: f64) -> Result<SpectrumComparison> {
    if a.m != b.m || a.degree != b.degree || a.orders != b.orders || a.surface != b.surface {
        return Err(Error::MetadataMismatch(format!(
            "(m={}, N={}, {}, {}) vs (m={}, N={}, {}, {})",
            a.m,
            a.degree,
            a.orders,
            a.surface.label(),
            b.m,
            b.degree,
            b.orders,
            b.surface.label()
        )));
    }
    if a.blocks.len() != b.blocks.len() {
        return Err(Error::MetadataMismatch(format!("{} vs {} weight blocks", a.blocks.len(), b.blocks.len())));
    }
    let mut max_gap = 0.0_f64;
    let mut blocks = Vec::with_capacity(a.blocks.len());
    for (x, y) in a.blocks.iter().zip(&b.blocks) {
        if x.weight != y.weight || x.eigenvalues.len() != y.eigenvalues.len() {
            return Err(Error::MetadataMismatch(format!(
                "block ({}, {}) of size {} vs block ({}, {}) of size {}",
                x.weight.m1,
                x.weight.m2,
                x.eigenvalues.len(),
                y.weight.m1,
                y.weight.m2,
                y.eigenvalues.len()
            )));
        }
        let gaps: Vec<f64> = x.eigenvalues.iter().zip(&y.eigenvalues).map(|(u, v)| (u - v).abs()).collect();
        max_gap = gaps.iter().fold(max_gap, |acc, &g| acc.max(g));
        blocks.push(BlockGap { weight: x.weight, gaps });
    }
    Ok(SpectrumComparison { max_gap, ok: max_gap <= tol, tol, blocks })
}

#[derive(Serialize)]
struct QuadratureJson {
    orders: [usize; 2],
    #[serde(rename = "K")]
    k: usize,
}

#[derive(Serialize)]
struct BlockJson<'a> {
    weight: [i64; 2],
    eigenvalues: &'a [f64],
    #[serde(skip_serializing_if = "Option::is_none")]
    eigenvalues_b: Option<&'a [f64]>,
}

#[derive(Serialize)]
struct ComparisonJson {
    max_gap: f64,
    ok: bool,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    surface: String,
    m: usize,
    #[serde(rename = "N")]
    n: usize,
    quadrature: QuadratureJson,
    blocks: Vec<BlockJson<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    comparison: Option<ComparisonJson>,
    seed: u64,
}

/// JSON document for one report, or for a compared pair when `other` is given.
pub fn report_json(a: &SpectrumReport, other: Option<(&SpectrumReport, &SpectrumComparison)>, seed: u64) -> String {
    let blocks = a
        .blocks
        .iter()
        .enumerate()
        .map(|(k, blk)| BlockJson {
            weight: [blk.weight.m1, blk.weight.m2],
            eigenvalues: &blk.eigenvalues,
            eigenvalues_b: other.map(|(b, _)| b.blocks[k].eigenvalues.as_slice()),
        })
        .collect();
    let doc = ReportJson {
        surface: a.surface.label(),
        m: a.m,
        n: a.degree,
        quadrature: QuadratureJson { orders: [a.orders.radial, a.orders.angular], k: a.orders.angular },
        blocks,
        comparison: other.map(|(_, c)| ComparisonJson { max_gap: c.max_gap, ok: c.ok }),
        seed,
    };
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

/// CSV with one row per eigenvalue: `weight_m1,weight_m2,index,value_A,value_B,gap`.
/// Without a second report the last two columns are empty.
pub fn report_csv(a: &SpectrumReport, b: Option<&SpectrumReport>) -> String {
    let mut out = String::from("weight_m1,weight_m2,index,value_A,value_B,gap\n");
    for (k, blk) in a.blocks.iter().enumerate() {
        for (i, v) in blk.eigenvalues.iter().enumerate() {
            let (vb, gap) = match b {
                Some(b) => {
                    let w = b.blocks[k].eigenvalues[i];
                    (format!("{w:.17e}"), format!("{:.17e}", (v - w).abs()))
                }
                None => (String::new(), String::new()),
            };
            let _ = writeln!(out, "{},{},{},{:.17e},{},{}", blk.weight.m1, blk.weight.m2, i, v, vb, gap);
        }
    }
    out
}
