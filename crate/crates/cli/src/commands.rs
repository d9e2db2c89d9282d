//! The four experiments. Each returns a verdict; reports are written to the
//! output directory in a fixed order.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use isospec_core::algebra::{check_isospectral, commutant_dimension, equivalence_invariant, TorusWeight};
use isospec_core::geometry::{
    estimate_support_volume, frame_vectors, metric_gram_from_covectors, random_point, sphere_volume, AdmissibleForm,
    BumpProfile, FormKind, Surface,
};
use isospec_core::spectral::{
    build_basis, build_quadrature, compare_spectra, compute_spectrum, rayleigh_identity_check, report_csv,
    report_json, verify_star, PairWitness, QuadOrders, SpectrumReport, WeightedPolynomial,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;
use serde_json::json;

use crate::config::Settings;
use crate::examples::{members, Member};

/// Invariant differences below this are treated as equal.
const SEPARATION_TOL: f64 = 1e-8;

/// Gaps at or below this level are roundoff and ignored by the trend check.
const GAP_NOISE_FLOOR: f64 = 1e-12;

/// Points drawn when checking that the metric is untouched outside the bump.
const DEVIATION_POINTS: usize = 20_000;

/// Tangent samples per weight for the bumped condition check.
const BUMP_STAR_SAMPLES: usize = 200;

/// A separate deterministic stream per task, so adding a task does not shift
/// the draws of another.
fn stream(seed: u64, task: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(task);
    rng
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(name);
    fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))
}

fn write_json(s: &Settings, name: &str, value: &serde_json::Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write(&s.out, name, &text)
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn invariants(s: &Settings) -> Result<bool> {
    let members = members(s)?;
    #[derive(Serialize)]
    struct Row {
        label: String,
        invariant: f64,
        commutant_dimension: usize,
        generic: bool,
        expected_generic: Option<bool>,
    }
    let rows: Vec<Row> = members
        .iter()
        .map(|mb| {
            let (invariant, dim) = match &mb.form.kind {
                FormKind::Su(p) => (equivalence_invariant(p), commutant_dimension(p)),
                FormKind::Sym(p) => (equivalence_invariant(p), commutant_dimension(p)),
            };
            Row {
                label: mb.label.clone(),
                invariant,
                commutant_dimension: dim,
                generic: dim == 0,
                expected_generic: mb.expected_generic,
            }
        })
        .collect();

    let mut comparisons = Vec::new();
    let mut iso_ok = true;
    for (i, j) in all_pairs(members.len()) {
        let cert = match (&members[i].form.kind, &members[j].form.kind) {
            (FormKind::Su(a), FormKind::Su(b)) => check_isospectral(a, b, s.grid_size, s.invariants_tol)?,
            (FormKind::Sym(a), FormKind::Sym(b)) => check_isospectral(a, b, s.grid_size, s.invariants_tol)?,
            _ => anyhow::bail!("{} and {} are of different kinds", members[i].label, members[j].label),
        };
        iso_ok &= cert.ok;
        comparisons.push(json!({
            "a": members[i].label, "b": members[j].label,
            "ok": cert.ok, "max_coeff_gap": cert.max_coeff_gap, "grid_points": cert.grid_points,
        }));
    }
    let (lo, hi) = rows.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), r| (l.min(r.invariant), h.max(r.invariant)));
    let separation = hi - lo > SEPARATION_TOL;
    let generic_ok = rows.iter().all(|r| r.expected_generic.is_none_or(|e| e == r.generic));
    let verdict = iso_ok && separation && generic_ok;

    println!("{:<24} {:>20} {:>10} {:>8}", "member", "invariant", "commutant", "generic");
    for r in &rows {
        println!("{:<24} {:>20.12} {:>10} {:>8}", r.label, r.invariant, r.commutant_dimension, r.generic);
    }
    println!("isospectral: {iso_ok}");
    println!("separation: {}", if separation { "present" } else { "absent" });
    println!("genericity as expected: {generic_ok}");

    if s.format.json() {
        write_json(
            s,
            "invariants.json",
            &json!({
                "example": s.example, "seed": s.seed, "members": rows, "comparisons": comparisons,
                "isospectral": iso_ok, "separation": separation, "genericity_as_expected": generic_ok, "ok": verdict,
            }),
        )?;
    }
    if s.format.csv() {
        let mut csv = String::from("label,invariant,commutant_dimension,generic\n");
        for r in &rows {
            csv += &format!("{},{:.17e},{},{}\n", r.label, r.invariant, r.commutant_dimension, r.generic);
        }
        write(&s.out, "invariants.csv", &csv)?;
    }
    Ok(verdict)
}

fn levels(s: &Settings) -> Result<Vec<QuadOrders>> {
    Ok(QuadOrders::parse_list(&s.quad_orders)?)
}

fn level_tag(o: QuadOrders) -> String {
    format!("{}x{}", o.radial, o.angular)
}

pub fn spectrum(s: &Settings) -> Result<bool> {
    let members = members(s)?;
    if s.zero_form {
        return zero_spectrum(s, members[0].form.m());
    }
    let m = members[0].form.m();
    let basis = build_basis(m, s.degree)?;
    let mut summary = Vec::new();
    let mut finest_ok = true;
    let mut max_gaps = Vec::new();
    for orders in levels(s)? {
        let quad = build_quadrature(m, Surface::Sphere, orders)?;
        let spectra: Vec<SpectrumReport> =
            members.iter().map(|mb| compute_spectrum(&basis, &quad, &mb.form)).collect::<Result<_, _>>()?;
        let mut comparisons = Vec::new();
        let mut level_max = 0.0_f64;
        finest_ok = true;
        for (i, j) in all_pairs(members.len()) {
            let cmp = compare_spectra(&spectra[i], &spectra[j], s.spectrum_tol)?;
            println!(
                "{} {} vs {}: max gap {:.3e} {}",
                orders,
                members[i].label,
                members[j].label,
                cmp.max_gap,
                if cmp.ok { "ok" } else { "FAIL" }
            );
            let stem = format!("spectrum-{}-{i}-{j}", level_tag(orders));
            if s.format.json() {
                let mut text = report_json(&spectra[i], Some((&spectra[j], &cmp)), s.seed);
                text.push('\n');
                write(&s.out, &format!("{stem}.json"), &text)?;
            }
            if s.format.csv() {
                write(&s.out, &format!("{stem}.csv"), &report_csv(&spectra[i], Some(&spectra[j])))?;
            }
            finest_ok &= cmp.ok;
            level_max = level_max.max(cmp.max_gap);
            comparisons.push(json!({
                "a": members[i].label, "b": members[j].label, "max_gap": cmp.max_gap, "ok": cmp.ok,
            }));
        }
        max_gaps.push(level_max);
        summary.push(json!({ "orders": [orders.radial, orders.angular], "comparisons": comparisons }));
    }
    let non_increasing = max_gaps.windows(2).all(|w| w[1] <= w[0].max(GAP_NOISE_FLOOR));
    let listing: Vec<String> = max_gaps.iter().map(|g| format!("{g:.3e}")).collect();
    println!("max gap by level: [{}], non-increasing: {non_increasing}", listing.join(", "));
    if s.format.json() {
        write_json(
            s,
            "spectrum-summary.json",
            &json!({
                "example": s.example, "seed": s.seed, "N": s.degree, "tol": s.spectrum_tol,
                "members": members.iter().map(|mb| &mb.label).collect::<Vec<_>>(),
                "levels": summary, "non_increasing": non_increasing, "ok": finest_ok,
            }),
        )?;
    }
    Ok(finest_ok)
}

/// Degree-`k` harmonic eigenvalue and multiplicity on the round `S^{2m+1}`.
fn round_eigenspace(m: usize, k: usize) -> (f64, usize) {
    let n = 2 * m + 2;
    let binom = |a: usize, b: usize| (1..=b).fold(1usize, |acc, i| acc * (a + 1 - i) / i);
    let dim = binom(n + k - 1, k) - if k >= 2 { binom(n + k - 3, k - 2) } else { 0 };
    ((k * (k + n - 2)) as f64, dim)
}

fn zero_spectrum(s: &Settings, m: usize) -> Result<bool> {
    let basis = build_basis(m, s.degree)?;
    let form = AdmissibleForm::zero(m);
    let mut ok = true;
    for orders in levels(s)? {
        let quad = build_quadrature(m, Surface::Sphere, orders)?;
        let report = compute_spectrum(&basis, &quad, &form)?;
        let pooled = report.pooled();
        let mut worst = 0.0_f64;
        let mut matched = 0;
        let mut level_ok = true;
        for k in 0..=s.degree {
            let (target, mult) = round_eigenspace(m, k);
            let near: Vec<f64> = pooled.iter().copied().filter(|v| (v - target).abs() <= 0.5).collect();
            worst = near.iter().fold(worst, |w, v| w.max((v - target).abs()));
            level_ok &= near.len() == mult;
            matched += near.len();
        }
        level_ok &= matched == pooled.len() && worst <= s.spectrum_tol;
        println!("{orders} zero form: {} eigenvalues, max deviation from round {worst:.3e} {}", pooled.len(), if level_ok { "ok" } else { "FAIL" });
        let stem = format!("spectrum-zero-{}", level_tag(orders));
        if s.format.json() {
            let mut text = report_json(&report, None, s.seed);
            text.push('\n');
            write(&s.out, &format!("{stem}.json"), &text)?;
        }
        if s.format.csv() {
            write(&s.out, &format!("{stem}.csv"), &report_csv(&report, None))?;
        }
        ok &= level_ok;
    }
    Ok(ok)
}

fn random_polynomial(m: usize, degree: usize, rng: &mut ChaCha8Rng) -> Result<(TorusWeight, WeightedPolynomial)> {
    let basis = build_basis(m, degree)?;
    let slices = basis.weight_slices();
    let weights: Vec<&TorusWeight> = slices.keys().collect();
    let mu = *weights[rng.random_range(0..weights.len())];
    let terms = slices[&mu]
        .iter()
        .map(|&k| {
            let c = Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
            (c, basis.entries[k].clone())
        })
        .collect();
    Ok((mu, WeightedPolynomial::new(terms)?))
}

pub fn verify(s: &Settings) -> Result<bool> {
    let members = members(s)?;
    let mut rows = Vec::new();
    let mut ok = true;
    for (k, (i, j)) in all_pairs(members.len()).into_iter().enumerate() {
        let (a, b) = (&members[i], &members[j]);
        let m = a.form.m();
        let provider = PairWitness::new(&a.form, &b.form)?;
        let mut rng = stream(s.seed, k as u64);
        let mut star = 0.0_f64;
        for mu in TorusWeight::box_range(s.weight_bound) {
            star = star.max(verify_star(&a.form, &b.form, mu, &provider, s.samples, &mut rng)?);
        }
        let points: Vec<_> = (0..s.points).map(|_| random_point(m, Surface::Sphere, &mut rng)).collect();
        let mut rayleigh = 0.0_f64;
        for _ in 0..s.polynomials {
            let (mu, psi) = random_polynomial(m, s.degree, &mut rng)?;
            let r = rayleigh_identity_check(&a.form, &b.form, mu, &provider, std::slice::from_ref(&psi), &points)?;
            rayleigh = rayleigh.max(r);
        }
        let pair_ok = star <= s.verify_tol && rayleigh <= s.verify_tol;
        ok &= pair_ok;
        println!(
            "{} vs {}: condition residual {star:.3e}, Rayleigh residual {rayleigh:.3e} {}",
            a.label,
            b.label,
            if pair_ok { "ok" } else { "FAIL" }
        );
        rows.push(json!({
            "a": a.label, "b": b.label, "weight_bound": s.weight_bound, "samples": s.samples,
            "polynomials": s.polynomials, "points": s.points,
            "star_residual": star, "rayleigh_residual": rayleigh, "ok": pair_ok,
        }));
    }
    if s.format.json() {
        write_json(s, "verify.json", &json!({ "example": s.example, "seed": s.seed, "tol": s.verify_tol, "pairs": rows, "ok": ok }))?;
    }
    if s.format.csv() {
        let mut csv = String::from("a,b,star_residual,rayleigh_residual,ok\n");
        for r in &rows {
            csv += &format!(
                "{},{},{:.17e},{:.17e},{}\n",
                r["a"].as_str().unwrap_or_default(),
                r["b"].as_str().unwrap_or_default(),
                r["star_residual"].as_f64().unwrap_or_default(),
                r["rayleigh_residual"].as_f64().unwrap_or_default(),
                r["ok"]
            );
        }
        write(&s.out, "verify.csv", &csv)?;
    }
    Ok(ok)
}

/// Largest entrywise difference between the deformed and round metric over
/// random sphere points outside the support.
fn deviation_outside(form: &AdmissibleForm, profile: &BumpProfile, rng: &mut ChaCha8Rng) -> Result<(f64, usize)> {
    let m = form.m();
    let mut worst = 0.0_f64;
    let mut outside = 0;
    for _ in 0..DEVIATION_POINTS {
        let x = random_point(m, Surface::Sphere, rng);
        if profile.in_support(x.p_norm_sq(), x.q_norm_sq()) {
            continue;
        }
        outside += 1;
        let frame = frame_vectors(&x, Surface::Sphere)?;
        let g = metric_gram_from_covectors(&x, &form.covectors(&x)?, &frame);
        for (i, fi) in frame.iter().enumerate() {
            for (j, fj) in frame.iter().enumerate() {
                let g0: f64 = fi.iter().zip(fj).map(|(a, b)| a * b).sum();
                worst = worst.max((g[(i, j)] - g0).abs());
            }
        }
    }
    Ok((worst, outside))
}

pub fn bump(s: &Settings) -> Result<bool> {
    let members = members(s)?;
    let profile = BumpProfile::new(
        (s.bump_center[0], s.bump_center[1]),
        (s.bump_radii[0], s.bump_radii[1]),
        s.bump_amplitude,
    )?;
    let m = members[0].form.m();
    let mut rng = stream(s.seed, 0);
    let est = estimate_support_volume(&profile, m, s.bump_samples, &mut rng)?;
    let eps = s.eps * sphere_volume(m);
    let small = est.volume + 3.0 * est.std_error < eps;
    println!(
        "support volume {:.6} ± {:.6} ({} of {} samples), ε = {eps:.6}: {}",
        est.volume,
        est.std_error,
        est.hits,
        est.samples,
        if small { "ok" } else { "FAIL" }
    );

    let bumped: Vec<Member> = members
        .iter()
        .map(|mb| Member { form: mb.form.clone().with_bump(profile), ..mb.clone() })
        .collect();
    let mut rng = stream(s.seed, 1);
    let (deviation, outside) = deviation_outside(&bumped[0].form, &profile, &mut rng)?;
    println!("deviation outside support {deviation:e} at {outside} points");

    let mut rng = stream(s.seed, 2);
    let mut star = 0.0_f64;
    let mut pairs = Vec::new();
    for (i, j) in all_pairs(bumped.len()) {
        let provider = PairWitness::new(&members[i].form, &members[j].form)?;
        let mut worst = 0.0_f64;
        for mu in TorusWeight::box_range(s.weight_bound) {
            worst = worst.max(verify_star(&bumped[i].form, &bumped[j].form, mu, &provider, BUMP_STAR_SAMPLES, &mut rng)?);
        }
        println!("bumped {} vs {}: condition residual {worst:.3e}", bumped[i].label, bumped[j].label);
        pairs.push(json!({ "a": bumped[i].label, "b": bumped[j].label, "star_residual": worst }));
        star = star.max(worst);
    }
    let ok = small && deviation == 0.0 && star <= s.bump_tol;
    if s.format.json() {
        write_json(
            s,
            "bump.json",
            &json!({
                "example": s.example, "seed": s.seed,
                "profile": { "center": s.bump_center, "radii": s.bump_radii, "amplitude": s.bump_amplitude },
                "volume": { "estimate": est.volume, "std_error": est.std_error, "samples": est.samples, "hits": est.hits,
                            "eps": eps, "eps_fraction": s.eps, "ok": small },
                "deviation": { "max": deviation, "points_outside": outside },
                "pairs": pairs, "tol": s.bump_tol, "ok": ok,
            }),
        )?;
    }
    if s.format.csv() {
        let csv = format!(
            "volume,std_error,eps,deviation,star_residual\n{:.17e},{:.17e},{:.17e},{:.17e},{:.17e}\n",
            est.volume, est.std_error, eps, deviation, star
        );
        write(&s.out, "bump.csv", &csv)?;
    }
    Ok(ok)
}
