//! Deterministic quadrature and the special functions the physics modules
//! build on. Everything here is pure: same inputs and spec give bit-identical
//! results.

mod dawson;
mod gamma;
mod special;

pub use dawson::{dawson_d, dawson_f};
pub use gamma::gamma;
pub use special::{bessel_j0, gauss_legendre, gl_integrate, sinc};

use crate::{Error, Result};

/// Tolerances and budget for adaptive quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            rel_tol: 1e-8,
            abs_tol: 1e-12,
            max_subdivisions: 200,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::invalid("rel_tol", "must be positive and finite"));
        }
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::invalid("abs_tol", "must be positive and finite"));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::invalid("max_subdivisions", "must be at least 1"));
        }
        Ok(())
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    fn tolerance_for(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// Quadrature output; `converged == false` is the explicit accuracy flag and
/// is never silently dropped by callers that use [`QuadResult::strict`].
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadResult {
    /// Value, or an `Unconverged` error carrying the estimate.
    pub fn strict(self, operation: &'static str) -> Result<f64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::Unconverged {
                operation,
                estimate: self.error,
                tolerance: f64::NAN,
            })
        }
    }
}

/// Integration domain. Semi-infinite rays are mapped to (0, 1] through
/// x = a + (1 - t)/t, so ∫ₐ^∞ f dx = ∫₀¹ f(a + (1-t)/t) dt/t².
#[derive(Debug, Clone, Copy)]
pub enum Domain {
    Finite(f64, f64),
    SemiInfinite(f64),
}

/// Adaptive Gauss-Kronrod (G7-K15) quadrature.
pub fn quadrature_1d<F: Fn(f64) -> f64>(
    f: F,
    domain: Domain,
    spec: &QuadratureSpec,
) -> Result<QuadResult> {
    spec.validate()?;
    match domain {
        Domain::Finite(a, b) => {
            if !a.is_finite() || !b.is_finite() {
                return Err(Error::invalid("domain", "finite interval required"));
            }
            if a >= b {
                return Err(Error::invalid("domain", format!("empty interval [{a}, {b}]")));
            }
            adaptive(&f, a, b, spec)
        }
        Domain::SemiInfinite(a) => {
            if !a.is_finite() {
                return Err(Error::invalid("domain", "ray origin must be finite"));
            }
            let g = |t: f64| {
                let x = a + (1.0 - t) / t;
                f(x) / (t * t)
            };
            adaptive(&g, 0.0, 1.0, spec)
        }
    }
}

struct Interval {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<QuadResult> {
    let (value, error) = gk15(f, a, b)?;
    let mut intervals = vec![Interval { a, b, value, error }];
    let mut total = value;
    let mut total_error = error;
    let mut evaluations = 15;

    for _ in 0..spec.max_subdivisions {
        if total_error <= spec.tolerance_for(total) {
            return Ok(QuadResult {
                value: total,
                error: total_error,
                evaluations,
                converged: true,
            });
        }
        let worst = intervals
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .expect("nonempty interval list");
        let iv = intervals.swap_remove(worst);
        let mid = 0.5 * (iv.a + iv.b);
        let (v1, e1) = gk15(f, iv.a, mid)?;
        let (v2, e2) = gk15(f, mid, iv.b)?;
        evaluations += 30;
        total += v1 + v2 - iv.value;
        total_error += e1 + e2 - iv.error;
        intervals.push(Interval {
            a: iv.a,
            b: mid,
            value: v1,
            error: e1,
        });
        intervals.push(Interval {
            a: mid,
            b: iv.b,
            value: v2,
            error: e2,
        });
    }

    let converged = total_error <= spec.tolerance_for(total);
    Ok(QuadResult {
        value: total,
        error: total_error,
        evaluations,
        converged,
    })
}

// Kronrod-15 abscissae (positive half) and weights, with the embedded
// Gauss-7 weights, QUADPACK values.
const XGK: [f64; 8] = [
    0.991_455_371_120_813,
    0.949_107_912_342_759,
    0.864_864_423_359_769,
    0.741_531_185_599_394,
    0.586_087_235_467_691,
    0.405_845_151_377_397,
    0.207_784_955_007_898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529,
    0.063_092_092_629_979,
    0.104_790_010_322_250,
    0.140_653_259_715_525,
    0.169_004_726_639_267,
    0.190_350_578_064_785,
    0.204_432_940_075_298,
    0.209_482_141_084_728,
];
const WG: [f64; 4] = [
    0.129_484_966_168_870,
    0.279_705_391_489_277,
    0.381_830_050_505_119,
    0.417_959_183_673_469,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<(f64, f64)> {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(mid);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut resabs = WGK[7] * fc.abs();
    let mut fv = [0.0f64; 15];
    fv[7] = fc;
    for (i, x) in XGK.iter().enumerate().take(7) {
        let dx = half * x;
        let f1 = f(mid - dx);
        let f2 = f(mid + dx);
        fv[i] = f1;
        fv[14 - i] = f2;
        kronrod += WGK[i] * (f1 + f2);
        resabs += WGK[i] * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            gauss += WG[i / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for (i, v) in fv.iter().enumerate().take(7) {
        resasc += WGK[i] * ((v - mean).abs() + (fv[14 - i] - mean).abs());
    }
    let value = kronrod * half;
    resabs *= half.abs();
    resasc *= half.abs();
    if !value.is_finite() {
        return Err(Error::NonFinite("quadrature integrand"));
    }
    let mut err = ((kronrod - gauss) * half).abs();
    if resasc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / resasc).powf(1.5);
        err = if scale < 1.0 { resasc * scale } else { resasc };
    }
    let eps = f64::EPSILON;
    if resabs > f64::MIN_POSITIVE / (50.0 * eps) {
        err = err.max(50.0 * eps * resabs);
    }
    Ok((value, err))
}

/// (1/4π) ∫ g(β, α) sinβ dβ dα over the unit sphere, by a Gauss-Legendre rule
/// in cosβ crossed with the trapezoid rule in α, doubled until the spec's
/// tolerance is met.
pub fn sphere_average<G: Fn(f64, f64) -> f64>(g: G, spec: &QuadratureSpec) -> Result<QuadResult> {
    spec.validate()?;
    let mut prev: Option<f64> = None;
    let mut evaluations = 0;
    let mut value = 0.0;
    let mut error = f64::INFINITY;
    for level in 0..6 {
        let n_beta = 24 << level;
        let n_alpha = 48 << level;
        let rule = gauss_legendre(n_beta);
        let (nodes, weights) = rule.as_ref();
        let d_alpha = 2.0 * std::f64::consts::PI / n_alpha as f64;
        let mut sum = 0.0;
        for (c, w) in nodes.iter().zip(weights) {
            let beta = c.acos();
            let mut ring = 0.0;
            for j in 0..n_alpha {
                ring += g(beta, j as f64 * d_alpha);
            }
            sum += w * ring * d_alpha;
        }
        evaluations += n_beta * n_alpha;
        value = sum / (4.0 * std::f64::consts::PI);
        if !value.is_finite() {
            return Err(Error::NonFinite("sphere_average integrand"));
        }
        if let Some(p) = prev {
            error = (value - p).abs();
            if error <= spec.tolerance_for(value) {
                return Ok(QuadResult {
                    value,
                    error,
                    evaluations,
                    converged: true,
                });
            }
        }
        prev = Some(value);
    }
    Ok(QuadResult {
        value,
        error,
        evaluations,
        converged: false,
    })
}

/// Isotropic 3-D Fourier transform of a radial function,
/// f̃(P) = (1/(2π²ħ²P)) ∫₀^∞ dR R f(R) sin(PR/ħ),
/// summed between consecutive zeros of the sine with Euler acceleration of
/// the alternating tail.
pub fn radial_fourier3<F: Fn(f64) -> f64>(
    f: F,
    p: f64,
    hbar: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult> {
    spec.validate()?;
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::invalid("p", "momentum must be positive and finite"));
    }
    let k = p / hbar;
    let seg = std::f64::consts::PI / k;
    let integrand = |r: f64| r * f(r) * (k * r).sin();

    let mut euler = EulerSum::new();
    let mut evaluations = 0;
    let mut sum = 0.0;
    let mut stable = 0;
    let mut converged = false;
    let mut last_increment = f64::INFINITY;
    const MAX_SEGMENTS: usize = 4000;
    for j in 0..MAX_SEGMENTS {
        let (term, _) = gk15(&integrand, j as f64 * seg, (j + 1) as f64 * seg)?;
        evaluations += 15;
        let new_sum = euler.add(term);
        last_increment = (new_sum - sum).abs();
        sum = new_sum;
        if j >= 8 && last_increment <= 0.1 * spec.tolerance_for(sum) {
            stable += 1;
            if stable >= 3 {
                converged = true;
                break;
            }
        } else {
            stable = 0;
        }
    }
    let prefactor = 1.0 / (2.0 * std::f64::consts::PI.powi(2) * hbar * hbar * p);
    Ok(QuadResult {
        value: prefactor * sum,
        error: prefactor * last_increment.max(f64::EPSILON * sum.abs()),
        evaluations,
        converged,
    })
}

/// Euler transformation of an (eventually) alternating series.
struct EulerSum {
    wksp: Vec<f64>,
    nterm: usize,
    sum: f64,
}

impl EulerSum {
    fn new() -> Self {
        EulerSum {
            wksp: Vec::with_capacity(64),
            nterm: 0,
            sum: 0.0,
        }
    }

    fn add(&mut self, term: f64) -> f64 {
        if self.nterm == 0 {
            self.wksp.push(term);
            self.nterm = 1;
            self.sum = 0.5 * term;
        } else {
            let mut tmp = self.wksp[0];
            self.wksp[0] = term;
            for j in 0..self.nterm - 1 {
                let dum = self.wksp[j + 1];
                self.wksp[j + 1] = 0.5 * (self.wksp[j] + tmp);
                tmp = dum;
            }
            let next = 0.5 * (self.wksp[self.nterm - 1] + tmp);
            if self.wksp.len() == self.nterm {
                self.wksp.push(next);
            } else {
                self.wksp[self.nterm] = next;
            }
            if next.abs() <= self.wksp[self.nterm - 1].abs() {
                self.sum += 0.5 * next;
                self.nterm += 1;
            } else {
                self.sum += next;
            }
        }
        self.sum
    }
}
