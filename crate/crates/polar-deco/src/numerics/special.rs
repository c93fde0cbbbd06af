//! Small special-function helpers: Gauss-Legendre rules, sinc, Bessel J0.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

static GL_CACHE: LazyLock<Mutex<HashMap<usize, Arc<(Vec<f64>, Vec<f64>)>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> Arc<(Vec<f64>, Vec<f64>)> {
    assert!(n >= 1, "Gauss-Legendre order must be positive");
    let mut cache = GL_CACHE.lock().unwrap();
    if let Some(rule) = cache.get(&n) {
        return rule.clone();
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Newton iteration from the Chebyshev-like initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    let rule = Arc::new((nodes, weights));
    cache.insert(n, rule.clone());
    rule
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Integrate `f` over [a, b] with the fixed n-point Gauss-Legendre rule.
pub fn gl_integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let rule = gauss_legendre(n);
    let (nodes, weights) = rule.as_ref();
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for (x, w) in nodes.iter().zip(weights) {
        sum += w * f(mid + half * x);
    }
    sum * half
}

/// sin(x)/x, continuous at zero.
pub fn sinc(x: f64) -> f64 {
    let ax = x.abs();
    if ax < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Bessel J0 from its integral representation (1/π)∫₀^π cos(x sin t) dt, by
/// the trapezoid rule, which converges super-exponentially for this periodic
/// integrand.
pub fn bessel_j0(x: f64) -> f64 {
    let ax = x.abs();
    let n = 48 + (0.75 * ax) as usize;
    let h = std::f64::consts::PI / n as f64;
    // endpoints: cos(x sin 0) = cos(x sin π) = 1
    let mut sum = 1.0;
    for i in 1..n {
        let t = i as f64 * h;
        sum += (ax * t.sin()).cos();
    }
    sum * h / std::f64::consts::PI
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_rule_exactness() {
        // degree-9 polynomial exact with 5 nodes
        let f = |x: f64| 3.0 * x.powi(9) - x.powi(6) + 2.0 * x.powi(2) + 1.0;
        let exact = -2.0 / 7.0 + 4.0 / 3.0 + 2.0;
        assert!((gl_integrate(f, -1.0, 1.0, 5) - exact).abs() < 1e-13);
    }

    #[test]
    fn gl_gaussian() {
        let v = gl_integrate(|x| (-x * x).exp(), 0.0, 8.0, 80);
        assert!((v - std::f64::consts::PI.sqrt() / 2.0).abs() < 1e-13);
    }

    #[test]
    fn bessel_values() {
        // Abramowitz & Stegun reference values
        assert!((bessel_j0(0.0) - 1.0).abs() < 1e-14);
        assert!((bessel_j0(1.0) - 0.765_197_686_557_966_6).abs() < 1e-12);
        assert!((bessel_j0(5.0) - (-0.177_596_771_314_338_3)).abs() < 1e-12);
        assert!((bessel_j0(40.0) - 0.007_385_796_256_380_476).abs() < 1e-12);
    }

    #[test]
    fn sinc_continuity() {
        assert!((sinc(0.0) - 1.0).abs() < 1e-15);
        assert!((sinc(1e-5) - (1e-5f64).sin() / 1e-5).abs() < 1e-15);
        assert!((sinc(2.0) - (2.0f64).sin() / 2.0).abs() < 1e-15);
    }
}
