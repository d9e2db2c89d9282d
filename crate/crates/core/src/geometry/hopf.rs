/// The Hopf projection `P: R^4 -> R^3`,
/// `(α, β, γ, δ) ↦ (½(α² + β² - γ² - δ²), αγ + βδ, αδ - βγ)`, extended to all
/// of `R^4`. It maps the 3-sphere of radius `a` onto the 2-sphere of radius `a²/2`.
pub fn hopf_p(p: &[f64; 4]) -> [f64; 3] {
    let [al, be, ga, de] = *p;
    [0.5 * (al * al + be * be - ga * ga - de * de), al * ga + be * de, al * de - be * ga]
}

/// Rows are the gradients of the three components of [`hopf_p`] at `p`.
pub fn hopf_jacobian(p: &[f64; 4]) -> [[f64; 4]; 3] {
    let [al, be, ga, de] = *p;
    [[al, be, -ga, -de], [ga, de, al, be], [de, -ga, -be, al]]
}

/// Directional derivative `P_{*p}(X)`.
pub fn hopf_dp(p: &[f64; 4], x: &[f64; 4]) -> [f64; 3] {
    let jac = hopf_jacobian(p);
    jac.map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
}
