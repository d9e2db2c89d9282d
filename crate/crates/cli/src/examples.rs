//! The matrix pairs an experiment runs on.

use anyhow::{bail, ensure, Result};
use isospec_core::algebra::{family_j, pair_c, SkewMapPair, SymMapPair};
use isospec_core::geometry::AdmissibleForm;
use nalgebra::{DMatrix, Matrix3};
use num_complex::Complex64;

use crate::config::{CustomKind, CustomPair, Example, Settings};

#[derive(Clone, Debug)]
pub struct Member {
    pub label: String,
    pub form: AdmissibleForm,
    /// Whether the pair is expected to be generic, when known.
    pub expected_generic: Option<bool>,
}

pub fn members(s: &Settings) -> Result<Vec<Member>> {
    match s.example {
        Example::S5Pair => {
            let (c, cp) = pair_c();
            Ok(vec![
                Member { label: "c".into(), form: AdmissibleForm::sym(c), expected_generic: Some(true) },
                Member { label: "c'".into(), form: AdmissibleForm::sym(cp), expected_generic: Some(true) },
            ])
        }
        Example::S7Family => Ok(s
            .t
            .iter()
            .map(|&t| Member {
                label: format!("j(t={t})"),
                form: AdmissibleForm::su(family_j(t)),
                expected_generic: Some(t.cos().abs() > 1e-12),
            })
            .collect()),
        Example::Custom => {
            let custom = s.custom.as_ref().expect("validated in Settings::resolve");
            Ok(vec![
                Member { label: "A".into(), form: custom_form(custom, &custom.a)?, expected_generic: None },
                Member { label: "B".into(), form: custom_form(custom, &custom.b)?, expected_generic: None },
            ])
        }
    }
}

fn custom_form(c: &CustomPair, pair: &[Vec<f64>; 2]) -> Result<AdmissibleForm> {
    match c.kind {
        CustomKind::Sym => {
            for v in pair {
                ensure!(v.len() == 9, "sym matrices need 9 entries, got {}", v.len());
            }
            let c1 = Matrix3::from_row_slice(&pair[0]);
            let c2 = Matrix3::from_row_slice(&pair[1]);
            Ok(AdmissibleForm::sym(SymMapPair::new(c1, c2)?))
        }
        CustomKind::Su => {
            let Some(m) = c.m else { bail!("su custom pairs need m") };
            let [j1, j2] = [&pair[0], &pair[1]].map(|v| complex_matrix(m, v));
            Ok(AdmissibleForm::su(SkewMapPair::new(j1?, j2?)?))
        }
    }
}

fn complex_matrix(m: usize, v: &[f64]) -> Result<DMatrix<Complex64>> {
    ensure!(v.len() == 2 * m * m, "su matrices need {} interleaved entries, got {}", 2 * m * m, v.len());
    let entries: Vec<Complex64> = v.chunks(2).map(|c| Complex64::new(c[0], c[1])).collect();
    Ok(DMatrix::from_row_slice(m, m, &entries))
}
