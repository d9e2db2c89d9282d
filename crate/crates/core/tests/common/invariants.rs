//! Randomized invariant checks. Each check draws its own inputs from the
//! generator and returns an error message on violation.

use isospec_core::algebra::{
    char_poly_at, check_isospectral, commutant_dimension, equivalence_invariant, rotation_witness, su2_lift,
    unitary_witness, CMatrix, SignSymmetry, SkewMapPair, SymMapPair, TorusWeight,
};
use isospec_core::geometry::{
    bump_eval, eval_form, metric_gram, push_forward, random_point, random_tangent, tangent_frame, torus_act,
    vertical_field, AdmissibleForm, AmbientPoint, BumpProfile, Surface, TangentVector,
};
use isospec_core::spectral::{
    apply_block, assemble_blocks, build_basis, build_quadrature, hermitian_defect, solve_block, verify_star,
    MonomialBasis, PairWitness, QuadOrders, QuadratureRule,
};
use nalgebra::{DMatrix, Matrix3};
use num_complex::Complex64;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::*;

pub type Check = fn(&mut ChaCha8Rng) -> Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

/// Polynomial roots by Durand–Kerner iteration.
pub fn roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[0];
    let c: Vec<Complex64> = coeffs.iter().map(|z| z / lead).collect();
    let eval = |x: Complex64| c.iter().fold(Complex64::new(0.0, 0.0), |acc, k| acc * x + k);
    let seed = Complex64::new(0.4, 0.9);
    let scale = 1.0 + c.iter().skip(1).map(|z| z.norm()).fold(0.0, f64::max);
    let mut r: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * scale).collect();
    for _ in 0..500 {
        let prev = r.clone();
        for i in 0..n {
            let denom: Complex64 = (0..n).filter(|&j| j != i).map(|j| r[i] - r[j]).product();
            let step = eval(r[i]) / denom;
            r[i] -= step;
        }
        if r.iter().zip(&prev).all(|(a, b)| (a - b).norm() < 1e-15 * scale) {
            break;
        }
    }
    r
}

fn random_pair_any(rng: &mut ChaCha8Rng) -> (Option<SkewMapPair>, Option<SymMapPair>) {
    if rng.random_bool(0.5) {
        (Some(random_skew_pair(rng.random_range(2..=4), rng)), None)
    } else {
        (None, Some(random_sym_pair(rng)))
    }
}

// ---------------------------------------------------------------- algebra

pub fn char_poly_roots_on_axis(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (s, u) = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    match random_pair_any(rng) {
        (Some(j), _) => {
            for r in roots(&char_poly_at(&j, s, u)) {
                ensure(r.re.abs() <= 1e-10, || format!("skew root {r} not imaginary"))?;
            }
        }
        (_, Some(c)) => {
            for r in roots(&char_poly_at(&c, s, u)) {
                ensure(r.im.abs() <= 1e-10, || format!("symmetric root {r} not real"))?;
            }
        }
        _ => unreachable!(),
    }
    Ok(())
}

pub fn char_poly_matches_eigenvalues(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let j = random_skew_pair(rng.random_range(2..=4), rng);
    let (s, u) = (0.3, -0.7);
    let x = j.at((s, u));
    // iX is hermitian; eigenvalues of X are -i times its eigenvalues
    let eig = nalgebra::SymmetricEigen::new(x.map(|z| z * Complex64::i()));
    let ev: Vec<Complex64> = eig.eigenvalues.iter().map(|&e| Complex64::new(0.0, -e)).collect();
    let expected = poly_from_roots(&ev);
    let got = char_poly_at(&j, s, u);
    let gap = expected.iter().zip(&got).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    ensure(gap <= 1e-9, || format!("coefficient gap {gap:e}"))
}

pub fn invariant_under_equivalence(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let sign = *SignSymmetry::all().choose(rng).unwrap();
    match random_pair_any(rng) {
        (Some(j), _) => {
            let a = random_special_unitary(j.m(), rng);
            let t = j.transformed(&a, sign, rng.random_bool(0.5));
            let (x, y) = (equivalence_invariant(&j), equivalence_invariant(&t));
            ensure((x - y).abs() <= 1e-10 * x.abs().max(1.0), || format!("{x} vs {y}"))
        }
        (_, Some(c)) => {
            let t = c.transformed(&random_rotation(rng), sign);
            let (x, y) = (equivalence_invariant(&c), equivalence_invariant(&t));
            ensure((x - y).abs() <= 1e-10 * x.abs().max(1.0), || format!("{x} vs {y}"))
        }
        _ => unreachable!(),
    }
}

pub fn isospectral_reflexive_symmetric(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = rng.random_range(2..=4);
    let (a, b) = (random_skew_pair(m, rng), random_skew_pair(m, rng));
    let same = check_isospectral(&a, &a, 4, 1e-12).unwrap();
    ensure(same.ok && same.max_coeff_gap == 0.0, || format!("self gap {}", same.max_coeff_gap))?;
    let (ab, ba) = (check_isospectral(&a, &b, 4, 1e-12).unwrap(), check_isospectral(&b, &a, 4, 1e-12).unwrap());
    ensure(ab.ok == ba.ok && ab.max_coeff_gap == ba.max_coeff_gap, || "asymmetric certificate".into())
}

pub fn witness_residual_bound(rng: &mut ChaCha8Rng) -> Result<(), String> {
    if rng.random_bool(0.5) {
        let n = rng.random_range(2..=4);
        let x = random_su(n, rng);
        let u = random_special_unitary(n, rng);
        let xp = &u * &x * u.adjoint();
        let w = unitary_witness(&x, &xp).map_err(|e| e.to_string())?;
        let unitary = (&w.matrix * w.matrix.adjoint() - CMatrix::identity(n, n)).iter().map(|z| z.norm()).fold(0.0, f64::max);
        let det = (w.matrix.determinant() - Complex64::new(1.0, 0.0)).norm();
        ensure(w.residual <= 1e-8 && unitary <= 1e-10 && det <= 1e-10, || {
            format!("residual {:e}, unitarity {unitary:e}, det {det:e}", w.residual)
        })
    } else {
        let c = random_sym0(rng);
        let e = random_rotation(rng);
        let to_dyn = |m: Matrix3<f64>| DMatrix::from_iterator(3, 3, m.iter().copied());
        let w = rotation_witness(&to_dyn(c), &to_dyn(e * c * e.transpose())).map_err(|e| e.to_string())?;
        let orth = (&w.matrix * w.matrix.transpose() - DMatrix::identity(3, 3)).amax();
        let det = (w.matrix.determinant() - 1.0).abs();
        ensure(w.residual <= 1e-8 && orth <= 1e-10 && det <= 1e-10, || {
            format!("residual {:e}, orthogonality {orth:e}, det {det:e}", w.residual)
        })
    }
}

/// Pairs with prescribed commutant: random, commuting (`J2` a polynomial in
/// `J1`), block diagonal, or zero.
fn structured_skew_pair(rng: &mut ChaCha8Rng) -> SkewMapPair {
    let m = rng.random_range(2..=4);
    match rng.random_range(0..4) {
        0 => random_skew_pair(m, rng),
        1 => {
            let j1 = random_su(m, rng);
            let scale = rng.random_range(-2.0..2.0);
            let mut j2 = j1.map(|z| z * scale);
            let sq = &j1 * &j1 * Complex64::i();
            let tr = sq.trace() / m as f64;
            j2 += sq;
            for k in 0..m {
                j2[(k, k)] -= tr;
            }
            // conjugating by a random unitary hides the structure
            let u = random_special_unitary(m, rng);
            SkewMapPair::new(&u * j1 * u.adjoint(), &u * j2 * u.adjoint()).unwrap()
        }
        2 => {
            let k = rng.random_range(1..m);
            let block = |rng: &mut ChaCha8Rng| {
                let (a, b) = (random_su(k, rng), random_su(m - k, rng));
                let mut x = CMatrix::zeros(m, m);
                x.view_mut((0, 0), (k, k)).copy_from(&a);
                x.view_mut((k, k), (m - k, m - k)).copy_from(&b);
                x
            };
            let u = random_special_unitary(m, rng);
            let (x, y) = (block(rng), block(rng));
            SkewMapPair::new(&u * x * u.adjoint(), &u * y * u.adjoint()).unwrap()
        }
        _ => SkewMapPair::zero(m),
    }
}

pub fn commutant_matches_oracle(rng: &mut ChaCha8Rng) -> Result<(), String> {
    if rng.random_bool(0.75) {
        let j = structured_skew_pair(rng);
        let (got, want) = (commutant_dimension(&j), commutant_dim_su_oracle(j.j1(), j.j2()));
        ensure(got == want, || format!("su({}) commutant {got} vs oracle {want}", j.m()))
    } else {
        let c = match rng.random_range(0..3) {
            0 => random_sym_pair(rng),
            1 => {
                let c1 = random_sym0(rng);
                SymMapPair::new(c1, c1 * 2.0).unwrap()
            }
            _ => {
                // both axially symmetric about one rotated axis: one-dimensional commutant
                let e = random_rotation(rng);
                let d = |rng: &mut ChaCha8Rng| {
                    let a = rng.random_range(-1.0..1.0);
                    Matrix3::from_diagonal(&nalgebra::Vector3::new(a, a, -2.0 * a))
                };
                SymMapPair::new(e * d(rng) * e.transpose(), e * d(rng) * e.transpose()).unwrap()
            }
        };
        let (got, want) = (commutant_dimension(&c), commutant_dim_so3_oracle(c.c1(), c.c2()));
        ensure(got == want, || format!("so(3) commutant {got} vs oracle {want}"))
    }
}

// --------------------------------------------------------------- geometry

/// A random form of either kind, optionally with a bump whose support meets
/// a broad band of the sphere.
pub fn random_form(rng: &mut ChaCha8Rng, bumped: bool) -> AdmissibleForm {
    let form = if rng.random_bool(0.5) {
        AdmissibleForm::su(random_skew_pair(rng.random_range(2..=3), rng))
    } else {
        AdmissibleForm::sym(random_sym_pair(rng))
    };
    if bumped {
        let s0 = rng.random_range(0.2..0.8);
        form.with_bump(BumpProfile::new((s0, 1.0 - s0), (0.4, 0.4), rng.random_range(0.5..3.0)).unwrap())
    } else {
        form
    }
}

fn random_tangent_vector(form: &AdmissibleForm, rng: &mut ChaCha8Rng) -> TangentVector {
    let x = random_point(form.m(), Surface::Sphere, rng);
    let v = random_tangent(&x, Surface::Sphere, rng);
    TangentVector::new(x, v).unwrap()
}

fn torus_invariance_with(rng: &mut ChaCha8Rng, bumped: bool) -> Result<(), String> {
    let form = random_form(rng, bumped);
    let v = random_tangent_vector(&form, rng);
    let (a, b) = (rng.random_range(-7.0..7.0), rng.random_range(-7.0..7.0));
    let (x, y) = (eval_form(&form, &v).unwrap(), eval_form(&form, &push_forward(a, b, &v)).unwrap());
    let gap = (x[0] - y[0]).abs().max((x[1] - y[1]).abs());
    ensure(gap <= 1e-12, || format!("torus invariance gap {gap:e}"))
}

fn horizontality_with(rng: &mut ChaCha8Rng, bumped: bool) -> Result<(), String> {
    let form = random_form(rng, bumped);
    let x = random_point(form.m(), Surface::Sphere, rng);
    let z = (rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
    let l = eval_form(&form, &vertical_field(z, &x)).unwrap();
    ensure(l[0].abs() <= 1e-14 && l[1].abs() <= 1e-14, || format!("vertical value {l:?}"))
}

fn unit_volume_with(rng: &mut ChaCha8Rng, bumped: bool) -> Result<(), String> {
    let form = random_form(rng, bumped);
    let surface = if rng.random_bool(0.5) {
        Surface::Sphere
    } else {
        Surface::Product { a: rng.random_range(0.3..1.0), b: rng.random_range(0.3..1.0) }
    };
    let x = random_point(form.m(), surface, rng);
    let frame = tangent_frame(&x, surface).unwrap();
    let s = metric_gram(&form, &x, &frame).unwrap();
    let det = s.gram.determinant();
    let sym = (&s.gram - s.gram.transpose()).amax();
    let pd = s.gram.clone().cholesky().is_some();
    ensure((det - 1.0).abs() <= 1e-10 && sym <= 1e-12 && pd, || format!("det {det}, asymmetry {sym:e}, pd {pd}"))
}

/// `λ_{Z}(v)` equals `λ'_{Z}(F v)` at `F x` when the two pairs are conjugate
/// by `F = (A, Id)` for every `Z`.
fn equivariance_with(rng: &mut ChaCha8Rng, bumped: bool) -> Result<(), String> {
    let base = random_form(rng, bumped);
    let (a, other) = match &base.kind {
        isospec_core::geometry::FormKind::Su(j) => {
            let a = random_special_unitary(j.m(), rng);
            let t = j.transformed(&a, SignSymmetry::all()[0], false);
            (a, AdmissibleForm { kind: isospec_core::geometry::FormKind::Su(t), bump: base.bump })
        }
        isospec_core::geometry::FormKind::Sym(c) => {
            let e = random_rotation(rng);
            let lift = su2_lift(&e).map_err(|e| e.to_string())?;
            let t = c.transformed(&e, SignSymmetry::all()[0]);
            let a = CMatrix::from_iterator(2, 2, lift.iter().copied());
            (a, AdmissibleForm { kind: isospec_core::geometry::FormKind::Sym(t), bump: base.bump })
        }
    };
    let v = random_tangent_vector(&base, rng);
    let fx = AmbientPoint::new(base.m(), apply_block(&a, v.base.coords())).unwrap();
    let fv = TangentVector::new(fx, apply_block(&a, &v.coords)).unwrap();
    let (x, y) = (eval_form(&base, &v).unwrap(), eval_form(&other, &fv).unwrap());
    let gap = (x[0] - y[0]).abs().max((x[1] - y[1]).abs());
    ensure(gap <= 1e-10, || format!("equivariance gap {gap:e}"))
}

pub fn form_torus_invariance(rng: &mut ChaCha8Rng) -> Result<(), String> {
    torus_invariance_with(rng, false)
}
pub fn form_horizontality(rng: &mut ChaCha8Rng) -> Result<(), String> {
    horizontality_with(rng, false)
}
pub fn metric_unit_volume(rng: &mut ChaCha8Rng) -> Result<(), String> {
    unit_volume_with(rng, false)
}
pub fn form_equivariance(rng: &mut ChaCha8Rng) -> Result<(), String> {
    equivariance_with(rng, false)
}
pub fn bumped_torus_invariance(rng: &mut ChaCha8Rng) -> Result<(), String> {
    torus_invariance_with(rng, true)
}
pub fn bumped_horizontality(rng: &mut ChaCha8Rng) -> Result<(), String> {
    horizontality_with(rng, true)
}
pub fn bumped_unit_volume(rng: &mut ChaCha8Rng) -> Result<(), String> {
    unit_volume_with(rng, true)
}
pub fn bumped_equivariance(rng: &mut ChaCha8Rng) -> Result<(), String> {
    equivariance_with(rng, true)
}

pub fn bump_torus_invariance(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let s0 = rng.random_range(0.1..0.9);
    let b = BumpProfile::new((s0, 1.0 - s0), (0.3, 0.3), 1.0).unwrap();
    let x = random_point(rng.random_range(1..=3), Surface::Sphere, rng);
    let y = torus_act(rng.random_range(-7.0..7.0), rng.random_range(-7.0..7.0), &x);
    let gap = (bump_eval(&b, &x) - bump_eval(&b, &y)).abs();
    ensure(gap <= 1e-14, || format!("bump gap {gap:e}"))
}

// --------------------------------------------------------------- spectral

struct SmallProblem {
    basis: MonomialBasis,
    quad: QuadratureRule,
}

fn small_problem(m: usize) -> &'static SmallProblem {
    use std::sync::OnceLock;
    static S5: OnceLock<SmallProblem> = OnceLock::new();
    static S7: OnceLock<SmallProblem> = OnceLock::new();
    let cell = if m == 2 { &S5 } else { &S7 };
    cell.get_or_init(|| SmallProblem {
        basis: build_basis(m, 2).unwrap(),
        quad: build_quadrature(m, Surface::Sphere, QuadOrders::new(3, 5).unwrap()).unwrap(),
    })
}

fn pooled_by_weight(blocks: &[isospec_core::spectral::WeightBlock]) -> Vec<(TorusWeight, Vec<f64>)> {
    blocks.iter().map(|b| (b.weight, solve_block(b))).collect()
}

pub fn basis_permutation_independence(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let form = AdmissibleForm::sym(random_sym_pair(rng));
    let prob = small_problem(2);
    let mut perm: Vec<usize> = (0..prob.basis.len()).collect();
    perm.shuffle(rng);
    let a = pooled_by_weight(&assemble_blocks(&prob.basis, &prob.quad, &form).unwrap());
    let b = pooled_by_weight(&assemble_blocks(&prob.basis.permuted(&perm), &prob.quad, &form).unwrap());
    let mut gap = 0.0_f64;
    for ((wa, ea), (wb, eb)) in a.iter().zip(&b) {
        ensure(wa == wb && ea.len() == eb.len(), || "block structure changed".into())?;
        gap = ea.iter().zip(eb).fold(gap, |g, (x, y)| g.max((x - y).abs()));
    }
    ensure(gap <= 1e-12, || format!("permutation gap {gap:e}"))
}

pub fn mass_independent_of_metric(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let bumped = rng.random_bool(0.3);
    let form = random_form(rng, bumped);
    let prob = small_problem(form.m());
    let a = assemble_blocks(&prob.basis, &prob.quad, &form).unwrap();
    let b = assemble_blocks(&prob.basis, &prob.quad, &AdmissibleForm::zero(form.m())).unwrap();
    let gap = a
        .iter()
        .zip(&b)
        .map(|(x, y)| (&x.mass - &y.mass).iter().map(|z| z.norm()).fold(0.0, f64::max))
        .fold(0.0, f64::max);
    ensure(gap <= 1e-12, || format!("mass gap {gap:e}"))
}

pub fn block_structure(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let bumped = rng.random_bool(0.3);
    let form = random_form(rng, bumped);
    let prob = small_problem(form.m());
    for b in assemble_blocks(&prob.basis, &prob.quad, &form).unwrap() {
        ensure(hermitian_defect(&b.stiffness) <= 1e-10, || "stiffness not hermitian".into())?;
        let min_mass = nalgebra::SymmetricEigen::new(b.mass.clone()).eigenvalues.min();
        let scale = b.mass.iter().map(|z| z.norm()).fold(0.0, f64::max);
        ensure(min_mass >= -1e-12 * scale.max(1.0), || format!("mass eigenvalue {min_mass:e}"))?;
        let ev = solve_block(&b);
        ensure(ev.len() == b.filtered_rank, || "eigenvalue count differs from filtered rank".into())?;
        ensure(ev.windows(2).all(|w| w[0] <= w[1]), || "eigenvalues not sorted".into())?;
        ensure(ev.iter().all(|&e| e >= -1e-9), || format!("negative eigenvalue in {ev:?}"))?;
    }
    Ok(())
}

pub fn conjugate_blocks_agree(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let form = random_form(rng, false);
    let prob = small_problem(form.m());
    let spectra = pooled_by_weight(&assemble_blocks(&prob.basis, &prob.quad, &form).unwrap());
    let find = |w: TorusWeight| spectra.iter().find(|(x, _)| *x == w).map(|(_, e)| e);
    for (w, e) in &spectra {
        let other = find(w.negated()).ok_or("missing conjugate block")?;
        let gap = e.iter().zip(other).fold(0.0_f64, |g, (x, y)| g.max((x - y).abs()));
        ensure(gap <= 1e-10 && e.len() == other.len(), || format!("weight {w:?} conjugate gap {gap:e}"))?;
    }
    Ok(())
}

pub fn quadrature_volume_and_symmetry(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = rng.random_range(1..=3);
    let surface = if rng.random_bool(0.5) {
        Surface::Sphere
    } else {
        Surface::Product { a: rng.random_range(0.2..1.5), b: rng.random_range(0.2..1.5) }
    };
    let orders = QuadOrders::new(rng.random_range(1..=4), rng.random_range(1..=7)).unwrap();
    let q = build_quadrature(m, surface, orders).unwrap();
    let vol = isospec_core::spectral::surface_volume(m, surface);
    ensure((q.total_weight() - vol).abs() <= 1e-10 * vol.max(1.0), || format!("volume {} vs {vol}", q.total_weight()))?;
    ensure(q.weights.iter().all(|&w| w > 0.0), || "nonpositive weight".into())?;
    // every node moved by a generator of Z_K × Z_K lands on a node of equal weight
    let k = q.symmetry_order() as f64;
    let step = 2.0 * std::f64::consts::PI / k;
    let (a, b) = if rng.random_bool(0.5) { (step, 0.0) } else { (0.0, step) };
    let key = |x: &AmbientPoint| x.coords().iter().map(|c| (c * 1e9).round() as i64).collect::<Vec<_>>();
    let index: std::collections::HashMap<Vec<i64>, f64> = q.nodes.iter().map(key).zip(q.weights.iter().copied()).collect();
    for (x, w) in q.nodes.iter().zip(&q.weights) {
        let y = torus_act(a, b, x);
        let found = index.get(&key(&y)).or_else(|| {
            // rounding boundary: try nearest neighbours by brute force
            q.nodes.iter().position(|z| z.coords().iter().zip(y.coords()).all(|(u, v)| (u - v).abs() < 1e-12)).map(|i| &q.weights[i])
        });
        ensure(found.is_some_and(|fw| (fw - w).abs() <= 1e-15 * w.max(1.0)), || "node set not torus invariant".into())?;
    }
    Ok(())
}

pub fn bumped_verify_star(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c, cp) = isospec_core::algebra::pair_c();
    let s0 = rng.random_range(0.2..0.8);
    let bump = BumpProfile::new((s0, 1.0 - s0), (0.3, 0.3), rng.random_range(0.5..3.0)).unwrap();
    let (a, b) = (AdmissibleForm::sym(c), AdmissibleForm::sym(cp));
    let provider = PairWitness::new(&a, &b).unwrap();
    let mu = TorusWeight::new(rng.random_range(-5..=5), rng.random_range(-5..=5));
    let r = verify_star(&a.with_bump(bump), &b.with_bump(bump), mu, &provider, 20, rng).map_err(|e| e.to_string())?;
    ensure(r <= 1e-10, || format!("bumped residual {r:e}"))
}

/// Every check with its name and trial count.
pub fn all_checks() -> Vec<(&'static str, Check, usize)> {
    vec![
        ("char_poly_roots_on_axis", char_poly_roots_on_axis as Check, 500),
        ("char_poly_matches_eigenvalues", char_poly_matches_eigenvalues, 500),
        ("invariant_under_equivalence", invariant_under_equivalence, 500),
        ("isospectral_reflexive_symmetric", isospectral_reflexive_symmetric, 300),
        ("witness_residual_bound", witness_residual_bound, 1000),
        ("commutant_matches_oracle", commutant_matches_oracle, 200),
        ("form_torus_invariance", form_torus_invariance, 500),
        ("form_horizontality", form_horizontality, 500),
        ("metric_unit_volume", metric_unit_volume, 500),
        ("form_equivariance", form_equivariance, 500),
        ("bumped_torus_invariance", bumped_torus_invariance, 500),
        ("bumped_horizontality", bumped_horizontality, 500),
        ("bumped_unit_volume", bumped_unit_volume, 500),
        ("bumped_equivariance", bumped_equivariance, 500),
        ("bump_torus_invariance", bump_torus_invariance, 500),
        ("basis_permutation_independence", basis_permutation_independence, 200),
        ("mass_independent_of_metric", mass_independent_of_metric, 200),
        ("block_structure", block_structure, 200),
        ("conjugate_blocks_agree", conjugate_blocks_agree, 200),
        ("quadrature_volume_and_symmetry", quadrature_volume_and_symmetry, 200),
        ("bumped_verify_star", bumped_verify_star, 200),
    ]
}
