//! Certificates that the Alexander polynomial of `K(n, m)` has a simple root
//! on the unit circle, plus a generic sign-change root finder for
//! palindromic polynomials.
//!
//! On the unit circle the family polynomial is, up to a nonvanishing factor
//! on `(0, 2pi/3)`, the real function
//!
//! ```text
//! g(theta) = 2 cos(theta/2) cos((n+3m) theta) + cos((n - 3/2) theta)
//! ```
//!
//! For `n = 1` this factors as `cos(theta/2) (2 cos((1+3m) theta) + 1)` and
//! the root `(2pi/3)/(1+3m)` is explicit. For `n >= 2` the certificate shows
//! `g > 0` at `theta0 = (pi/2)/(n+3m)`, `g < 0` at
//! `theta1 = (pi/2)/(n + 3m/2 - 3/4)`, and `-g' > 0` on the whole interval.
//!
//! All checks are in `f64` with explicit margins; this is not interval
//! arithmetic.

use std::f64::consts::PI;

use serde::Serialize;

use crate::alexander::closed_form_family;
use crate::error::{Error, Result};
use crate::family::FamilyParams;
use crate::laurent::LaurentPoly;

pub const DEFAULT_BISECTION_TOL: f64 = 1e-12;
pub const RESIDUAL_BOUND: f64 = 1e-8;
pub const DEFAULT_GRID_FACTOR: usize = 8;

const PANELS_PER_FREQUENCY: usize = 64;
const MAX_PANEL_SPLITS: u32 = 24;

pub fn g_theta(params: FamilyParams, theta: f64) -> f64 {
    let big = params.twist_frequency() as f64;
    let small = params.n() as f64 - 1.5;
    2.0 * (theta / 2.0).cos() * (big * theta).cos() + (small * theta).cos()
}

pub fn g_prime_theta(params: FamilyParams, theta: f64) -> f64 {
    let big = params.twist_frequency() as f64;
    let small = params.n() as f64 - 1.5;
    -(theta / 2.0).sin() * (big * theta).cos()
        - 2.0 * big * (theta / 2.0).cos() * (big * theta).sin()
        - small * (small * theta).sin()
}

/// Lower bound for `-g'` on the certified interval: `sin((n + 3m + 1/2) theta)`.
pub fn slope_lower_bound(params: FamilyParams, theta: f64) -> f64 {
    ((params.twist_frequency() as f64 + 0.5) * theta).sin()
}

/// Bound on `|g''|`: sum of squared frequencies of the three cosines.
pub fn second_derivative_bound(params: FamilyParams) -> f64 {
    let big = params.twist_frequency() as f64;
    let small = params.n() as f64 - 1.5;
    (big + 0.5).powi(2) + big.powi(2) + small.powi(2)
}

/// Minimum `|g|` accepted at an interval endpoint.
pub fn sign_margin(params: FamilyParams) -> f64 {
    1e-9 + 16.0 * f64::EPSILON * (params.twist_frequency() as f64 + 2.0)
}

fn derivative_margin(params: FamilyParams) -> f64 {
    1e-9 + 16.0 * f64::EPSILON * (params.twist_frequency() as f64 + 2.0).powi(2)
}

/// `(pi/2)/(n + 3m)` and `(pi/2)/(n + 3m/2 - 3/4)`.
pub fn family_interval(params: FamilyParams) -> (f64, f64) {
    let n = params.n() as f64;
    let m = params.m() as f64;
    (
        (PI / 2.0) / (n + 3.0 * m),
        (PI / 2.0) / (n + 1.5 * m - 0.75),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    ExactCosine,
    IntervalSignChange,
}

impl CertificateKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertificateKind::ExactCosine => "ExactCosine",
            CertificateKind::IntervalSignChange => "IntervalSignChange",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum MonotoneWitness {
    /// `n = 1`: the root is explicit and `g'` there is
    /// `-2(1+3m) cos(theta*/2) sin(2pi/3)`.
    ExactRoot { derivative_at_root: f64 },
    /// `n >= 2`: `-g'` checked positive on every panel of a subdivision.
    Panels {
        panels: usize,
        /// Smallest `sin((n+3m+1/2) theta)` seen at a panel endpoint.
        min_sine_bound: f64,
        /// Smallest certified lower bound for `-g'` over any panel.
        min_slope: f64,
        lipschitz: f64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootCertificate {
    pub params: FamilyParams,
    pub kind: CertificateKind,
    pub theta_lo: f64,
    pub theta_hi: f64,
    pub theta_star: f64,
    pub g_at_lo: f64,
    pub g_at_hi: f64,
    pub witness: MonotoneWitness,
}

/// Field order matches the documented certificate JSON.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateJson {
    pub kind: &'static str,
    pub theta_lo: f64,
    pub theta_hi: f64,
    pub theta_star: f64,
    pub g_lo: f64,
    pub g_hi: f64,
    pub residual: f64,
}

impl RootCertificate {
    pub fn to_json(&self, residual: f64) -> CertificateJson {
        CertificateJson {
            kind: self.kind.as_str(),
            theta_lo: self.theta_lo,
            theta_hi: self.theta_hi,
            theta_star: self.theta_star,
            g_lo: self.g_at_lo,
            g_hi: self.g_at_hi,
            residual,
        }
    }
}

pub fn certify_family_root(params: FamilyParams) -> Result<RootCertificate> {
    certify_family_root_with_tol(params, DEFAULT_BISECTION_TOL)
}

pub fn certify_family_root_with_tol(params: FamilyParams, tol: f64) -> Result<RootCertificate> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameters(format!("bisection tolerance {tol}")));
    }
    let fail = |msg: String| Err(Error::CertificationFailed(format!("{params}: {msg}")));
    let margin = sign_margin(params);
    let big = params.twist_frequency() as f64;

    if params.n() == 1 {
        let theta_star = (2.0 * PI / 3.0) / big;
        let theta_lo = (PI / 2.0) / big;
        let theta_hi = PI / big;
        let g_at_lo = g_theta(params, theta_lo);
        let g_at_hi = g_theta(params, theta_hi);
        if !(g_at_lo > margin && g_at_hi < -margin) {
            return fail(format!("endpoint signs g({theta_lo}) = {g_at_lo}, g({theta_hi}) = {g_at_hi}"));
        }
        let derivative_at_root = g_prime_theta(params, theta_star);
        if derivative_at_root.abs() <= derivative_margin(params) {
            return fail(format!("g' vanishes at the explicit root ({derivative_at_root})"));
        }
        if g_theta(params, theta_star).abs() > margin {
            return fail("explicit root does not annihilate g".into());
        }
        return Ok(RootCertificate {
            params,
            kind: CertificateKind::ExactCosine,
            theta_lo,
            theta_hi,
            theta_star,
            g_at_lo,
            g_at_hi,
            witness: MonotoneWitness::ExactRoot { derivative_at_root },
        });
    }

    let (theta_lo, theta_hi) = family_interval(params);
    if !(0.0 < theta_lo && theta_lo < theta_hi && theta_hi <= 2.0 * PI / 7.0 + 1e-15) {
        return fail(format!("interval ({theta_lo}, {theta_hi}) out of range"));
    }
    let g_at_lo = g_theta(params, theta_lo);
    let g_at_hi = g_theta(params, theta_hi);
    if g_at_lo <= margin {
        return fail(format!("g(theta0) = {g_at_lo} is not positive"));
    }
    if g_at_hi >= -margin {
        return fail(format!("g(theta1) = {g_at_hi} is not negative"));
    }

    let witness = check_monotone(params, theta_lo, theta_hi)
        .map_err(|msg| Error::CertificationFailed(format!("{params}: {msg}")))?;
    let theta_star = bisect(|x| g_theta(params, x), theta_lo, theta_hi, tol);
    if !(theta_lo < theta_star && theta_star < theta_hi) {
        return fail("bisection left the interval".into());
    }
    Ok(RootCertificate {
        params,
        kind: CertificateKind::IntervalSignChange,
        theta_lo,
        theta_hi,
        theta_star,
        g_at_lo,
        g_at_hi,
        witness,
    })
}

// Splits [lo, hi] into 64 (n+3m) panels. On a panel of width h with
// endpoint values s0, s1 of -g', a Lipschitz constant L for -g' gives
// -g' >= (s0 + s1 - L h) / 2 throughout. Panels that do not clear the
// margin are halved.
fn check_monotone(params: FamilyParams, lo: f64, hi: f64) -> std::result::Result<MonotoneWitness, String> {
    let lipschitz = second_derivative_bound(params);
    let eps = derivative_margin(params);
    let panels = PANELS_PER_FREQUENCY * params.twist_frequency() as usize;
    let width = (hi - lo) / panels as f64;

    let slope = |x: f64| -g_prime_theta(params, x);
    let mut min_sine_bound = f64::INFINITY;
    let mut min_slope = f64::INFINITY;
    let mut stack: Vec<(f64, f64, u32)> = Vec::new();
    for i in (0..panels).rev() {
        let a = lo + width * i as f64;
        let b = if i + 1 == panels { hi } else { lo + width * (i + 1) as f64 };
        stack.push((a, b, 0));
    }

    while let Some((a, b, depth)) = stack.pop() {
        let (sa, sb) = (slope(a), slope(b));
        for (x, s) in [(a, sa), (b, sb)] {
            let bound = slope_lower_bound(params, x);
            if s < bound - eps {
                return Err(format!("-g'({x}) = {s} is below sin((n+3m+1/2)theta) = {bound}"));
            }
            min_sine_bound = min_sine_bound.min(bound);
        }
        let certified = 0.5 * (sa + sb - lipschitz * (b - a));
        if certified > eps {
            min_slope = min_slope.min(certified);
        } else if depth < MAX_PANEL_SPLITS {
            let mid = 0.5 * (a + b);
            stack.push((mid, b, depth + 1));
            stack.push((a, mid, depth + 1));
        } else {
            return Err(format!("could not certify -g' > 0 on [{a}, {b}]"));
        }
    }
    Ok(MonotoneWitness::Panels {
        panels,
        min_sine_bound,
        min_slope,
        lipschitz,
    })
}

/// Bisection on a sign change `f(lo) > 0 > f(hi)` (or the reverse) down to
/// width `tol`; returns the midpoint of the final bracket.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let lo_positive = f(lo) > 0.0;
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = f(mid);
        if v == 0.0 {
            return mid;
        }
        if (v > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `|Delta(e^{i theta*})|` for the closed-form family polynomial.
pub fn verify_root_against_delta(params: FamilyParams, cert: &RootCertificate) -> Result<f64> {
    let t = cert.theta_star;
    if !(t > 0.0 && t < 2.0 * PI / 3.0) {
        return Err(Error::CertificationFailed(format!(
            "theta* = {t} is outside (0, 2pi/3)"
        )));
    }
    let delta = closed_form_family(params)?;
    let residual = delta.eval_unit_circle(t).norm();
    if residual.is_nan() || residual >= RESIDUAL_BOUND {
        return Err(Error::ResidualTooLarge(residual));
    }
    Ok(residual)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnitCircleRoot {
    pub theta_lo: f64,
    pub theta_hi: f64,
    pub theta_star: f64,
    /// The cosine form changes sign across the root.
    pub odd_multiplicity: bool,
    /// Numerical judgement: sign change and a derivative clearly away from 0.
    pub simple: bool,
}

/// Sign-change roots `e^{i theta}`, `theta` in `(0, pi)`, of a palindromic
/// polynomial of even span.
///
/// The centered cosine form is sampled on `grid_factor * span` uniform
/// intervals. Roots of even multiplicity, or pairs of roots closer than the
/// grid spacing, are not reported.
pub fn find_simple_roots(p: &LaurentPoly, grid_factor: usize) -> Result<Vec<UnitCircleRoot>> {
    let form = p.centered_cosine_form()?;
    let span = p.span() as usize;
    if span == 0 || grid_factor == 0 {
        return Ok(Vec::new());
    }
    let cells = grid_factor * span;
    let grid: Vec<f64> = (0..=cells).map(|i| PI * i as f64 / cells as f64).collect();
    let values: Vec<f64> = grid.iter().map(|&x| form.eval(x)).collect();
    let scale = form.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let threshold = 1e-6 * scale * span as f64;

    let mut roots = Vec::new();
    for i in 0..cells {
        let (a, b) = (values[i], values[i + 1]);
        if a == 0.0 && i > 0 {
            let odd = values[i - 1] * b < 0.0;
            let simple = odd && form.derivative(grid[i]).abs() > threshold;
            roots.push(UnitCircleRoot {
                theta_lo: grid[i - 1],
                theta_hi: grid[i + 1],
                theta_star: grid[i],
                odd_multiplicity: odd,
                simple,
            });
        } else if a * b < 0.0 {
            let star = bisect(|x| form.eval(x), grid[i], grid[i + 1], DEFAULT_BISECTION_TOL);
            roots.push(UnitCircleRoot {
                theta_lo: grid[i],
                theta_hi: grid[i + 1],
                theta_star: star,
                odd_multiplicity: true,
                simple: form.derivative(star).abs() > threshold,
            });
        }
    }
    Ok(roots)
}
