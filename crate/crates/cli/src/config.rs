//! Experiment configuration: a TOML file with one table per command, merged
//! with command-line overrides.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Example {
    S5Pair,
    S7Family,
    Custom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Both,
}

impl Format {
    pub fn json(self) -> bool {
        matches!(self, Format::Json | Format::Both)
    }

    pub fn csv(self) -> bool {
        matches!(self, Format::Csv | Format::Both)
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub example: Option<Example>,
    pub t: Option<Vec<f64>>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    #[serde(default)]
    pub invariants: InvariantsSection,
    #[serde(default)]
    pub spectrum: SpectrumSection,
    #[serde(default)]
    pub verify: VerifySection,
    #[serde(default)]
    pub bump: BumpSection,
    pub custom: Option<CustomPair>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantsSection {
    pub grid_size: Option<usize>,
    pub tol: Option<f64>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumSection {
    pub degree: Option<usize>,
    pub quad_orders: Option<String>,
    pub tol: Option<f64>,
    pub zero_form: Option<bool>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifySection {
    pub weight_bound: Option<i64>,
    pub samples: Option<usize>,
    pub polynomials: Option<usize>,
    pub points: Option<usize>,
    pub tol: Option<f64>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BumpSection {
    pub center: Option<[f64; 2]>,
    pub radii: Option<[f64; 2]>,
    pub amplitude: Option<f64>,
    pub eps: Option<f64>,
    pub samples: Option<usize>,
    pub tol: Option<f64>,
}

/// Two matrix pairs given entrywise. `sym` pairs are 3x3 real row-major;
/// `su` pairs are `m x m` complex row-major with interleaved real and
/// imaginary parts.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomPair {
    pub kind: CustomKind,
    pub m: Option<usize>,
    pub a: [Vec<f64>; 2],
    pub b: [Vec<f64>; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CustomKind {
    Sym,
    Su,
}

pub fn load(path: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Fully resolved settings shared by all commands.
#[derive(Clone, Debug)]
pub struct Settings {
    pub example: Example,
    pub t: Vec<f64>,
    pub seed: u64,
    pub out: PathBuf,
    pub format: Format,
    pub grid_size: usize,
    pub invariants_tol: f64,
    pub degree: usize,
    pub quad_orders: String,
    pub spectrum_tol: f64,
    pub zero_form: bool,
    pub weight_bound: i64,
    pub samples: usize,
    pub polynomials: usize,
    pub points: usize,
    pub verify_tol: f64,
    pub bump_center: [f64; 2],
    pub bump_radii: [f64; 2],
    pub bump_amplitude: f64,
    pub eps: f64,
    pub bump_samples: usize,
    pub bump_tol: f64,
    pub custom: Option<CustomPair>,
}

pub const DEFAULT_SEED: u64 = 20_240_607;

/// Values given on the command line; `None` falls back to the file, then to
/// the built-in default.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub example: Option<Example>,
    pub t: Option<Vec<f64>>,
    pub degree: Option<usize>,
    pub quad_orders: Option<String>,
    pub tol: Option<f64>,
    pub eps: Option<f64>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub zero_form: bool,
}

impl Settings {
    pub fn resolve(file: FileConfig, cli: Overrides) -> Result<Self> {
        let example = cli.example.or(file.example).unwrap_or(Example::S5Pair);
        let default_t = match example {
            Example::S7Family => vec![0.0, 0.3, std::f64::consts::FRAC_PI_2],
            _ => vec![0.0, 0.7],
        };
        let degree = cli.degree.or(file.spectrum.degree).unwrap_or(match example {
            Example::S7Family => 2,
            _ => 3,
        });
        let default_orders = match example {
            Example::S7Family => "4:7,5:11",
            _ => "4:9,6:17",
        };
        let s = Settings {
            example,
            t: cli.t.or(file.t).unwrap_or(default_t),
            seed: cli.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
            out: cli.out.or(file.out).unwrap_or_else(|| PathBuf::from("isospec-out")),
            format: cli.format.or(file.format).unwrap_or(Format::Both),
            grid_size: file.invariants.grid_size.unwrap_or(4),
            invariants_tol: cli.tol.or(file.invariants.tol).unwrap_or(1e-12),
            degree,
            quad_orders: cli.quad_orders.or(file.spectrum.quad_orders).unwrap_or_else(|| default_orders.into()),
            spectrum_tol: cli.tol.or(file.spectrum.tol).unwrap_or(1e-6),
            zero_form: cli.zero_form || file.spectrum.zero_form.unwrap_or(false),
            weight_bound: file.verify.weight_bound.unwrap_or(5),
            samples: file.verify.samples.unwrap_or(1000),
            polynomials: file.verify.polynomials.unwrap_or(20),
            points: file.verify.points.unwrap_or(200),
            verify_tol: cli.tol.or(file.verify.tol).unwrap_or(1e-9),
            bump_center: file.bump.center.unwrap_or([0.02, 0.98]),
            bump_radii: file.bump.radii.unwrap_or([0.05, 0.05]),
            bump_amplitude: file.bump.amplitude.unwrap_or(1.0),
            eps: cli.eps.or(file.bump.eps).unwrap_or(0.01),
            bump_samples: file.bump.samples.unwrap_or(1_000_000),
            bump_tol: cli.tol.or(file.bump.tol).unwrap_or(1e-10),
            custom: file.custom,
        };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        if self.degree < 1 {
            bail!("degree must be at least 1");
        }
        for (name, v) in [
            ("invariants tol", self.invariants_tol),
            ("spectrum tol", self.spectrum_tol),
            ("verify tol", self.verify_tol),
            ("bump tol", self.bump_tol),
            ("eps", self.eps),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                bail!("{name} must be positive, got {v}");
            }
        }
        if self.t.is_empty() {
            bail!("t list is empty");
        }
        if self.example == Example::Custom && self.custom.is_none() {
            bail!("example = custom requires a [custom] table in the config file");
        }
        Ok(())
    }
}
