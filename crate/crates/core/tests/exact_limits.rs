use scrambling_core::exact::{holevo_exact, thermo_limit};

#[test]
fn finite_curves_pinch_towards_the_limit() {
    let (n0, h0) = (19usize, 8usize);
    for r in 1..n0 {
        let gaps: Vec<f64> = (1..=4)
            .map(|k| {
                let (n, big_n, h) = (k * r, k * n0, k * h0);
                let limit = thermo_limit(n as f64 / big_n as f64, h as f64 / big_n as f64).unwrap();
                (holevo_exact(n, big_n, h).unwrap() / h as f64 - limit).abs()
            })
            .collect();
        assert!(
            gaps.windows(2).all(|w| w[1] < w[0]),
            "n/N = {r}/{n0}: {gaps:?}"
        );
    }
}

#[test]
fn piecewise_limit_at_76_qubits() {
    let (big_n, h) = (76usize, 32usize);
    let mut violations = Vec::new();
    for n in 1..=big_n {
        let chi = holevo_exact(n, big_n, h).unwrap();
        let r = n as f64 / big_n as f64;
        let (target, tol) = if r <= 0.45 {
            (0.0, 1e-3)
        } else if (0.55..=0.68).contains(&r) {
            ((2 * n - big_n) as f64, 1e-2)
        } else if r >= 0.75 {
            (h as f64, 1e-3)
        } else {
            continue;
        };
        if (chi - target).abs() >= tol {
            violations.push((n, chi - target));
        }
    }
    assert!(violations.is_empty(), "(n, chi - target): {violations:?}");
}
