#![allow(dead_code)]

/// Gauss–Legendre nodes and weights on [-1, 1] by Newton iteration.
pub fn gauss_legendre(order: usize) -> Vec<(f64, f64)> {
    let n = order as f64;
    let mut out = Vec::with_capacity(order);
    for i in 0..order {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=order {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// `∫_0^∞ f(x) dx` for integrands that behave like `x^p` (p > -1) at the
/// origin and decay like a Gaussian. Substituting `x = e^s` turns the
/// endpoint power into an exponential decay, then composite Gauss–Legendre
/// on `s ∈ [s_lo, s_hi]`.
pub fn half_line_integral(f: impl Fn(f64) -> f64, s_lo: f64, s_hi: f64) -> f64 {
    let rule = gauss_legendre(20);
    let panels = 240;
    let h = (s_hi - s_lo) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = s_lo + (p as f64 + 0.5) * h;
        for &(t, w) in &rule {
            let s = mid + 0.5 * h * t;
            let x = s.exp();
            total += 0.5 * h * w * f(x) * x;
        }
    }
    total
}
