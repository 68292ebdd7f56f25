//! Closed forms for the gamma-function series behind the second-order sum.
//!
//! The central identity is
//!
//! ```text
//! sum_{n>=1} Gamma(n) Gamma(gamma-1) / (n Gamma(n+gamma-1)) = psi1(gamma - 1)
//! ```
//!
//! with the special cases `pi²/6` (`gamma = 2`), `pi²/2` (`gamma = 3/2`),
//! the integer shifts `psi1(m) = pi²/6 - sum_{k<m} 1/k²`, and the
//! multiplication formula `psi1(mz) = m^-2 sum_k psi1(z + k/m)`. The second-order
//! sum `G` splits as `G = F + R` where
//!
//! ```text
//! F = (gamma-1) / (4 e²) [2F1(e, e; gamma-1; 1) - 1 - e²/(gamma-1)],   e = alpha/2 - 1
//! R = sum_{n>=1} (alpha/2)_n² / (4 n (n+1) (gamma)_n n!)
//! ```
//!
//! and as `alpha -> 2`, `F -> (gamma-1) psi1(gamma-1)/4 - 1/4`.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Bound, Error, Result};
use crate::perturb::{g_closed_form, ALPHA2_SWITCH};
use crate::specfun::series::{sum_power_tail, PowerTailSeries};
use crate::specfun::{
    gauss_2f1_unit, log_gamma_signed, phyp_unit, trigamma, HypergeometricSpec, SeriesValue,
    DEFAULT_MAX_TERMS,
};

/// Which identity an [`IdentityReport`] checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `sum Gamma(n)Gamma(gamma-1)/(n Gamma(n+gamma-1)) = psi1(gamma-1)`
    TrigammaSeries,
    /// the trigamma series at `gamma = 2` equals `pi²/6`
    Basel,
    /// the trigamma series at `gamma = m+1` plus `sum_{k=2}^m 1/(k-1)²` equals `pi²/6`
    IntegerShift,
    /// the trigamma series at `gamma = 3/2` equals `pi²/2`
    HalfInteger,
    /// the trigamma series at `gamma = mz+1` equals `m^-2 sum_k psi1(z + k/m)`
    Multiplication,
    /// `R(gamma, 2) = 2F1(1,1;gamma+1;1)/(4 gamma) - (gamma-1) psi1(gamma-1)/4 + 1/4`
    ResidualAtAlphaTwo,
    /// `R = alpha²/(16 gamma) 4F3(..) - F`
    ResidualSplit,
    /// a `2F1` at unit argument summed directly versus Gauss's gamma ratio
    GaussSummation,
    /// `F(gamma, 2 + 2 eps)` approaching `(gamma-1) psi1(gamma-1)/4 - 1/4`
    FLimit,
}

impl IdentityId {
    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::TrigammaSeries => "trigamma_series",
            IdentityId::Basel => "basel",
            IdentityId::IntegerShift => "integer_shift",
            IdentityId::HalfInteger => "half_integer",
            IdentityId::Multiplication => "multiplication",
            IdentityId::ResidualAtAlphaTwo => "residual_alpha_two",
            IdentityId::ResidualSplit => "residual_split",
            IdentityId::GaussSummation => "gauss_summation",
            IdentityId::FLimit => "f_limit",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Series side against closed side of one identity at one parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub lhs: f64,
    pub rhs: f64,
    pub parameters: Vec<(&'static str, f64)>,
    pub tolerance: f64,
    pub error: Option<Error>,
}

impl IdentityReport {
    fn new(id: IdentityId, parameters: Vec<(&'static str, f64)>, tolerance: f64, sides: Result<(f64, f64)>) -> Self {
        let (lhs, rhs, error) = match sides {
            Ok((l, r)) => (l, r, None),
            Err(e) => (f64::NAN, f64::NAN, Some(e)),
        };
        IdentityReport { id, lhs, rhs, parameters, tolerance, error }
    }

    /// `|lhs - rhs|`.
    pub fn residual(&self) -> f64 {
        (self.lhs - self.rhs).abs()
    }

    pub fn passed(&self) -> bool {
        self.error.is_none() && self.residual() <= self.tolerance
    }

    pub fn parameter(&self, name: &str) -> Option<f64> {
        self.parameters.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }
}

fn check_gamma_above_one(gamma: f64) -> Result<()> {
    if gamma > 1.0 && gamma.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfBounds { bound: Bound::GammaAboveOne, alpha: f64::NAN, gamma })
    }
}

fn check_raabe(gamma: f64, alpha: f64) -> Result<()> {
    if alpha < gamma + 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfBounds { bound: Bound::Raabe, alpha, gamma })
    }
}

/// `F(gamma, alpha)` from Gauss's closed form of the `2F1`.
pub fn f_function(gamma: f64, alpha: f64) -> Result<f64> {
    f_with_bound(gamma, alpha).map(|(v, _)| v)
}

/// `F` together with an estimate of its rounding error, which grows like
/// `(alpha/2 - 1)^-2` near the singular point.
pub(crate) fn f_with_bound(gamma: f64, alpha: f64) -> Result<(f64, f64)> {
    check_gamma_above_one(gamma)?;
    let e = 0.5 * alpha - 1.0;
    if (alpha - 2.0).abs() < ALPHA2_SWITCH {
        return Err(Error::Singular(format!("F is undefined at alpha = 2 (alpha = {alpha})")));
    }
    check_raabe(gamma, alpha)?;
    let c = gamma - 1.0;
    let h = gauss_2f1_unit(e, e, c)?;
    let pref = c / (4.0 * e * e);
    let value = pref * (h - 1.0 - e * e / c);
    // four log-gammas of size |ln Gamma| feed the exponent
    let spread: f64 = [c, c - 2.0 * e, c - e]
        .iter()
        .map(|&x| log_gamma_signed(x).map(|(l, _)| l.abs()).unwrap_or(0.0))
        .sum();
    let bound = pref * h.abs() * 8.0 * f64::EPSILON * (2.0 + spread);
    Ok((value, bound))
}

/// Closed form of `F` at `gamma = 3/2`:
/// `1/(8 e²) [2F1(e, e; 1/2; 1) - 1 - 2 e²]` with `e = alpha/2 - 1`.
pub fn f_half_integer(alpha: f64) -> Result<f64> {
    let e = 0.5 * alpha - 1.0;
    if (alpha - 2.0).abs() < ALPHA2_SWITCH {
        return Err(Error::Singular(format!("F is undefined at alpha = 2 (alpha = {alpha})")));
    }
    check_raabe(1.5, alpha)?;
    Ok((gauss_2f1_unit(e, e, 0.5)? - 1.0 - 2.0 * e * e) / (8.0 * e * e))
}

/// The flawed `gamma = 3/2` form without the factor 2 on the subtracted
/// term, `1/(8 e²) [2F1(e, e; 1/2; 1) - 1 - e²]`. Kept only so tests can
/// assert it is not what [`f_function`] computes.
pub fn f_half_integer_flawed(alpha: f64) -> Result<f64> {
    let e = 0.5 * alpha - 1.0;
    if (alpha - 2.0).abs() < ALPHA2_SWITCH {
        return Err(Error::Singular(format!("F is undefined at alpha = 2 (alpha = {alpha})")));
    }
    check_raabe(1.5, alpha)?;
    Ok((gauss_2f1_unit(e, e, 0.5)? - 1.0 - e * e) / (8.0 * e * e))
}

/// `F` as the series `sum_{n>=1} (alpha/2)_n² / (4 (n+1) (gamma)_n n!)`.
pub fn f_series_sum(gamma: f64, alpha: f64, tolerance: f64) -> Result<SeriesValue> {
    check_gamma_above_one(gamma)?;
    check_raabe(gamma, alpha)?;
    let a = 0.5 * alpha;
    if a == 0.0 {
        return Ok(SeriesValue::exact(0.0, 0));
    }
    let series = PowerTailSeries {
        first_term: a * a / (8.0 * gamma),
        first_index: 1,
        ratio: |n: usize| {
            let n = n as f64;
            (a + n) * (a + n) * (n + 1.0) / ((n + 2.0) * (gamma + n) * (n + 1.0))
        },
        decay: gamma + 1.0 - alpha,
        asymptotic_from: (4.0 * (a + gamma) + 32.0) as usize,
    };
    Ok(sum_power_tail(&series, tolerance, DEFAULT_MAX_TERMS))
}

/// `R = sum_{n>=1} (alpha/2)_n² / (4 n (n+1) (gamma)_n n!)`.
pub fn residual_series(gamma: f64, alpha: f64, tolerance: f64) -> Result<SeriesValue> {
    check_raabe(gamma, alpha)?;
    if !(gamma > 0.0) || !(alpha >= 0.0) {
        return Err(Error::invalid(format!("need gamma > 0 and alpha >= 0, got {gamma}, {alpha}")));
    }
    let a = 0.5 * alpha;
    if a == 0.0 {
        return Ok(SeriesValue::exact(0.0, 0));
    }
    let series = PowerTailSeries {
        first_term: a * a / (8.0 * gamma),
        first_index: 1,
        ratio: |n: usize| {
            let n = n as f64;
            (a + n) * (a + n) * n / ((n + 2.0) * (gamma + n) * (n + 1.0))
        },
        decay: gamma + 2.0 - alpha,
        asymptotic_from: (4.0 * (a + gamma) + 32.0) as usize,
    };
    Ok(sum_power_tail(&series, tolerance, DEFAULT_MAX_TERMS))
}

/// `sum_{n>=1} Gamma(n) Gamma(gamma-1) / (n Gamma(n+gamma-1))`, which equals `psi1(gamma - 1)`.
pub fn trigamma_series_sum(gamma: f64, tolerance: f64, max_terms: usize) -> Result<SeriesValue> {
    check_gamma_above_one(gamma)?;
    let c = gamma - 1.0;
    let series = PowerTailSeries {
        first_term: 1.0 / c,
        first_index: 1,
        ratio: |n: usize| {
            let n = n as f64;
            n * n / ((n + 1.0) * (n + c))
        },
        decay: c,
        asymptotic_from: (4.0 * gamma + 32.0) as usize,
    };
    Ok(sum_power_tail(&series, tolerance, max_terms))
}

fn series_value(v: SeriesValue) -> Result<f64> {
    if v.converged {
        Ok(v.value)
    } else {
        Err(Error::Divergent(format!(
            "series not converged after {} terms (tail bound {:e})",
            v.terms_used, v.tail_bound
        )))
    }
}

/// Series inside a report are summed ten times tighter than the report's tolerance.
fn series_target(tolerance: f64) -> f64 {
    0.1 * tolerance
}

fn trigamma_series(gamma: f64, tolerance: f64) -> Result<f64> {
    series_value(trigamma_series_sum(gamma, series_target(tolerance), DEFAULT_MAX_TERMS)?)
}

/// Series for `psi1(gamma - 1)` against the asymptotic trigamma.
pub fn trigamma_series_report(gamma: f64, tolerance: f64) -> IdentityReport {
    let sides = (|| Ok((trigamma_series(gamma, tolerance)?, trigamma(gamma - 1.0)?)))();
    IdentityReport::new(IdentityId::TrigammaSeries, vec![("gamma", gamma)], tolerance, sides)
}

/// The series at `gamma = 2` against `pi²/6`.
pub fn basel_report(tolerance: f64) -> IdentityReport {
    let sides = trigamma_series(2.0, tolerance).map(|s| (s, PI * PI / 6.0));
    IdentityReport::new(IdentityId::Basel, vec![("gamma", 2.0)], tolerance, sides)
}

/// The series at `gamma = 3/2` against `pi²/2`.
pub fn half_integer_report(tolerance: f64) -> IdentityReport {
    let sides = trigamma_series(1.5, tolerance).map(|s| (s, PI * PI / 2.0));
    IdentityReport::new(IdentityId::HalfInteger, vec![("gamma", 1.5)], tolerance, sides)
}

/// `series(gamma = m+1) + sum_{k=2}^m 1/(k-1)²` against `pi²/6`.
pub fn integer_shift_report(m: u32, tolerance: f64) -> IdentityReport {
    let gamma = m as f64 + 1.0;
    let sides = (|| {
        if m < 1 {
            return Err(Error::invalid("integer shift needs m >= 1"));
        }
        let finite: f64 = (2..=m).map(|k| 1.0 / ((k - 1) as f64).powi(2)).sum();
        Ok((trigamma_series(gamma, tolerance)? + finite, PI * PI / 6.0))
    })();
    IdentityReport::new(IdentityId::IntegerShift, vec![("m", m as f64), ("gamma", gamma)], tolerance, sides)
}

/// `series(gamma = mz+1)` against `m^-2 sum_{k<m} psi1(z + k/m)`.
pub fn multiplication_identity(m: u32, z: f64) -> IdentityReport {
    multiplication_report(m, z, 1e-9)
}

pub fn multiplication_report(m: u32, z: f64, tolerance: f64) -> IdentityReport {
    let sides = (|| {
        if m < 1 || !(z > 0.0) {
            return Err(Error::invalid(format!("need m >= 1 and z > 0, got m = {m}, z = {z}")));
        }
        let mf = m as f64;
        let lhs = trigamma_series(mf * z + 1.0, tolerance)?;
        let mut rhs = 0.0;
        for k in 0..m {
            rhs += trigamma(z + k as f64 / mf)?;
        }
        Ok((lhs, rhs / (mf * mf)))
    })();
    IdentityReport::new(IdentityId::Multiplication, vec![("m", m as f64), ("z", z)], tolerance, sides)
}

/// `R(gamma, alpha)` against `alpha²/(16 gamma) 4F3(..) - F`.
pub fn residual_split_report(gamma: f64, alpha: f64, tolerance: f64) -> IdentityReport {
    let sides = (|| {
        let r = series_value(residual_series(gamma, alpha, series_target(tolerance))?)?;
        let g = series_value(g_closed_form(gamma, alpha, series_target(tolerance))?)?;
        Ok((r, g - f_function(gamma, alpha)?))
    })();
    IdentityReport::new(
        IdentityId::ResidualSplit,
        vec![("gamma", gamma), ("alpha", alpha)],
        tolerance,
        sides,
    )
}

/// `R(gamma, 2)` against its finite closed form.
pub fn residual_alpha_two_report(gamma: f64, tolerance: f64) -> IdentityReport {
    let sides = (|| {
        check_gamma_above_one(gamma)?;
        let r = series_value(residual_series(gamma, 2.0, series_target(tolerance))?)?;
        let c = gamma - 1.0;
        let rhs = gauss_2f1_unit(1.0, 1.0, gamma + 1.0)? / (4.0 * gamma) - c * trigamma(c)? / 4.0 + 0.25;
        Ok((r, rhs))
    })();
    IdentityReport::new(IdentityId::ResidualAtAlphaTwo, vec![("gamma", gamma)], tolerance, sides)
}

/// `2F1(a, b; c; 1)` summed as a series against the gamma-function ratio.
pub fn gauss_summation_report(a: f64, b: f64, c: f64, tolerance: f64) -> IdentityReport {
    let sides = (|| {
        let spec = HypergeometricSpec::unit(&[a, b], &[c])?;
        let series = series_value(phyp_unit(&spec, series_target(tolerance), DEFAULT_MAX_TERMS)?)?;
        Ok((series, gauss_2f1_unit(a, b, c)?))
    })();
    IdentityReport::new(
        IdentityId::GaussSummation,
        vec![("a", a), ("b", b), ("c", c)],
        tolerance,
        sides,
    )
}

/// One point of [`FLimitCheck`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FLimitPoint {
    pub epsilon: f64,
    pub value: f64,
    pub residual: f64,
}

/// `F(gamma, 2 + 2 eps)` for a decreasing sequence of `eps`.
#[derive(Debug, Clone, PartialEq)]
pub struct FLimitCheck {
    pub gamma: f64,
    pub limit: f64,
    pub points: Vec<FLimitPoint>,
}

impl FLimitCheck {
    pub fn is_monotone(&self) -> bool {
        self.points.windows(2).all(|w| w[1].residual < w[0].residual)
    }

    /// `residual[i+1] / residual[i]`; about `eps[i+1] / eps[i]` for a first-order approach.
    pub fn rates(&self) -> Vec<f64> {
        self.points.windows(2).map(|w| w[1].residual / w[0].residual).collect()
    }

    /// Passes when the residuals shrink monotonically and the last one is
    /// below `relative * |limit|`.
    pub fn report(&self, relative: f64) -> IdentityReport {
        let last = self.points.last();
        let sides = match last {
            None => Err(Error::invalid("empty epsilon sequence")),
            Some(_) if !self.is_monotone() => Err(Error::Divergent(format!(
                "residuals do not decrease: {:?}",
                self.points.iter().map(|p| p.residual).collect::<Vec<_>>()
            ))),
            Some(p) => Ok((p.value, self.limit)),
        };
        let mut parameters = vec![("gamma", self.gamma)];
        if let Some(p) = last {
            parameters.push(("epsilon", p.epsilon));
        }
        IdentityReport::new(IdentityId::FLimit, parameters, relative * self.limit.abs(), sides)
    }
}

/// Smallest `eps` accepted by [`f_limit_check`]; below it rounding in the
/// `eps^-2` prefactor dominates.
pub const F_LIMIT_EPSILON_FLOOR: f64 = 1e-5;

/// Evaluates `F(gamma, 2 + 2 eps)` through the gamma ratio
/// `Gamma(c) Gamma(c - 2 eps) / Gamma(c - eps)²` (`c = gamma - 1`), which
/// avoids the `0/0` of the series form.
pub fn f_limit_check(gamma: f64, epsilons: &[f64]) -> Result<FLimitCheck> {
    check_gamma_above_one(gamma)?;
    for w in epsilons.windows(2) {
        if !(w[1] < w[0]) {
            return Err(Error::invalid("epsilon sequence must be strictly decreasing"));
        }
    }
    let c = gamma - 1.0;
    let limit = c * trigamma(c)? / 4.0 - 0.25;
    let mut points = Vec::with_capacity(epsilons.len());
    for &eps in epsilons {
        if !(eps >= F_LIMIT_EPSILON_FLOOR) {
            return Err(Error::invalid(format!(
                "epsilon {eps} below the floor {F_LIMIT_EPSILON_FLOOR}"
            )));
        }
        let (l0, s0) = log_gamma_signed(c)?;
        let (l2, s2) = log_gamma_signed(c - 2.0 * eps)?;
        let (l1, _) = log_gamma_signed(c - eps)?;
        if s0 * s2 < 0.0 {
            return Err(Error::invalid(format!("gamma ratio changes sign at eps = {eps}")));
        }
        let value = c / (4.0 * eps * eps) * (l0 + l2 - 2.0 * l1).exp_m1() - 0.25;
        points.push(FLimitPoint { epsilon: eps, value, residual: (value - limit).abs() });
    }
    Ok(FLimitCheck { gamma, limit, points })
}

/// Default `eps` sequence for the limit check.
pub const F_LIMIT_EPSILONS: [f64; 3] = [1e-2, 1e-3, 1e-4];

/// Relative bound on the terminal residual of the limit check.
pub const F_LIMIT_RELATIVE: f64 = 1e-3;

/// Exponents used for the residual split at each grid point.
const SPLIT_ALPHAS: [f64; 3] = [0.5, 1.0, 1.5];

/// Every identity at every grid point, in grid order. Errors are recorded
/// in the offending report rather than aborting the suite.
pub fn run_identity_suite(gamma_grid: &[f64], tolerance: f64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for &gamma in gamma_grid {
        out.push(trigamma_series_report(gamma, tolerance));
        if gamma == 2.0 {
            out.push(basel_report(tolerance));
        }
        if gamma == 1.5 {
            out.push(half_integer_report(tolerance));
        }
        let shift = gamma - 1.0;
        if shift >= 2.0 && shift.fract() == 0.0 && shift <= 64.0 {
            out.push(integer_shift_report(shift as u32, tolerance));
        }
        for m in 2..=4u32 {
            out.push(multiplication_report(m, (gamma - 1.0) / m as f64, tolerance));
        }
        out.push(gauss_summation_report(1.0, 1.0, gamma + 1.0, tolerance));
        out.push(gauss_summation_report(-0.5, -0.5, gamma - 1.0, tolerance));
        for &alpha in SPLIT_ALPHAS.iter().filter(|&&a| a < gamma + 1.0) {
            out.push(residual_split_report(gamma, alpha, tolerance));
        }
        out.push(residual_alpha_two_report(gamma, tolerance));
        out.push(match f_limit_check(gamma, &F_LIMIT_EPSILONS) {
            Ok(check) => check.report(F_LIMIT_RELATIVE),
            Err(e) => IdentityReport::new(IdentityId::FLimit, vec![("gamma", gamma)], tolerance, Err(e)),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_at_half_integer_example() {
        let expect = PI / 4.0 - 0.75;
        assert!((f_function(1.5, 1.0).unwrap() - expect).abs() < 1e-14);
        assert!((f_half_integer(1.0).unwrap() - expect).abs() < 1e-14);
        assert!((f_half_integer_flawed(1.0).unwrap() - (PI / 4.0 - 0.625)).abs() < 1e-14);
    }

    #[test]
    fn f_rejections() {
        assert!(matches!(f_function(2.0, 2.0), Err(Error::Singular(_))));
        assert_eq!(f_function(1.5, 2.5).unwrap_err().bound(), Some(Bound::Raabe));
        assert_eq!(f_function(1.0, 1.0).unwrap_err().bound(), Some(Bound::GammaAboveOne));
    }

    #[test]
    fn residual_examples() {
        let r = residual_series(1.5, 2.0, 1e-13).unwrap();
        assert!((r.value - (0.75 - PI * PI / 16.0)).abs() < 1e-11);
        assert!((r.value - 0.133_149_724_931_915).abs() < 1e-11);
        assert_eq!(residual_series(2.0, 0.0, 1e-12).unwrap().value, 0.0);
    }

    #[test]
    fn trigamma_series_examples() {
        let v = trigamma_series_sum(2.0, 1e-13, DEFAULT_MAX_TERMS).unwrap();
        assert!((v.value - PI * PI / 6.0).abs() < 1e-10);
        let v = trigamma_series_sum(1.5, 1e-13, DEFAULT_MAX_TERMS).unwrap();
        assert!((v.value - PI * PI / 2.0).abs() < 1e-10);
        let v = trigamma_series_sum(4.0, 1e-13, DEFAULT_MAX_TERMS).unwrap();
        assert!((v.value - (PI * PI / 6.0 - 1.25)).abs() < 1e-10);
        assert!(trigamma_series_sum(1.0, 1e-12, 100).is_err());
    }

    #[test]
    fn multiplication_examples() {
        let r = multiplication_identity(1, 0.7);
        assert!(r.passed(), "{r:?}");
        let r = multiplication_identity(2, 0.5);
        assert!((r.lhs - PI * PI / 6.0).abs() < 1e-10 && r.residual() < 1e-10);
        let r = multiplication_identity(2, 1.0);
        assert!((r.lhs - (PI * PI / 6.0 - 1.0)).abs() < 1e-10 && r.residual() < 1e-10);
        assert!(multiplication_identity(0, 1.0).error.is_some());
    }

    #[test]
    fn f_limit_examples() {
        let c = f_limit_check(2.0, &F_LIMIT_EPSILONS).unwrap();
        assert!((c.limit - (PI * PI / 24.0 - 0.25)).abs() < 1e-14);
        assert!(c.is_monotone());
        for r in c.rates() {
            assert!(r > 0.1 / 3.0 && r < 0.3, "rate {r}");
        }
        let c = f_limit_check(1.5, &F_LIMIT_EPSILONS).unwrap();
        assert!((c.limit - (PI * PI / 16.0 - 0.25)).abs() < 1e-14);
        assert!(c.report(F_LIMIT_RELATIVE).passed());
        assert!(f_limit_check(2.0, &[1e-6]).is_err());
        assert!(f_limit_check(2.0, &[1e-3, 1e-2]).is_err());
    }

    #[test]
    fn suite_shapes() {
        assert!(run_identity_suite(&[], 1e-9).is_empty());
        let edge = run_identity_suite(&[1.0], 1e-9);
        assert!(edge.iter().any(|r| r.error.is_some()));
        let good = run_identity_suite(&[2.0], 1e-9);
        for r in &good {
            assert!(r.passed(), "{r:?}");
        }
        let both = run_identity_suite(&[1.0, 2.0], 1e-9);
        assert_eq!(both.len(), edge.len() + good.len());
        assert_eq!(both[edge.len()..], good[..]);
    }
}
