//! Second-order weak-coupling expansion of the ground energy,
//! `E(lambda) = E0 + c1 lambda + c2 lambda² + O(lambda³)`, with
//!
//! ```text
//! E0 = 2 sqrt(B) gamma
//! c1 = B^(alpha/4) Gamma(gamma - alpha/2) / Gamma(gamma)
//! c2 = -B^((alpha-1)/2) (Gamma(gamma - alpha/2) / Gamma(gamma))² G
//! G  = sum_{n>=1} (alpha/2)_n² / (4 n (gamma)_n n!)
//!    = alpha² / (16 gamma) 4F3(1, 1, alpha/2+1, alpha/2+1; gamma+1, 2, 2; 1)
//! ```
//!
//! `G` converges for `alpha < gamma + 1`. At `alpha = 2` it has the exact
//! value `1 / (4 (gamma - 1)³)` after the prefactor, so
//! `c2 = -sqrt(B) / (4 (gamma - 1)³)`.

use crate::error::{Error, Result};
use crate::gseries::{f_with_bound, residual_series};
use crate::matelem::{effective_params, DimensionSpec, PotentialParams};
use crate::specfun::series::{sum_power_tail, PowerTailSeries};
use crate::specfun::{log_gamma, phyp_unit, HypergeometricSpec, SeriesValue, DEFAULT_MAX_TERMS};

/// Below this distance from `alpha = 2` the exact rational `c2` is used.
pub const ALPHA2_SWITCH: f64 = 1e-8;

/// How `c2` was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    DirectSum,
    FgSplit,
    Alpha2Exact,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::DirectSum => "direct_sum",
            Method::FgSplit => "fg_split",
            Method::Alpha2Exact => "alpha2_exact",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `(E0, c1, c2)` for one set of (effective) parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyExpansion {
    pub e0: f64,
    pub c1: f64,
    pub c2: f64,
    pub method: Method,
    /// Convergence data of the `c2` series; `None` for the exact `alpha = 2` form.
    pub c2_series: Option<SeriesValue>,
    /// Parameters actually used, after any dimensional substitution.
    pub params: PotentialParams,
}

impl EnergyExpansion {
    /// `E0 + c1 lambda + c2 lambda²`.
    pub fn energy(&self, lambda: f64) -> f64 {
        self.e0 + lambda * (self.c1 + lambda * self.c2)
    }
}

fn ln_gamma_ratio(params: &PotentialParams) -> Result<f64> {
    let g = params.gamma();
    Ok(log_gamma(g - 0.5 * params.alpha())? - log_gamma(g)?)
}

/// `B^(alpha/4) Gamma(gamma - alpha/2) / Gamma(gamma)`; requires `alpha < 2 gamma`.
pub fn first_order(params: &PotentialParams) -> Result<f64> {
    params.check_matrix_element_bound(params.alpha())?;
    Ok((0.25 * params.alpha() * params.b().ln() + ln_gamma_ratio(params)?).exp())
}

/// `(B^((alpha-1)/2), (Gamma(gamma - alpha/2) / Gamma(gamma))²)`, whose product multiplies `-G`.
///
/// Series tolerances are applied to `c2` at `B = 1`, so `G` and with it the
/// `B` scaling of `c2` do not depend on `B`.
fn second_order_prefactor(params: &PotentialParams) -> Result<(f64, f64)> {
    Ok((
        (0.5 * (params.alpha() - 1.0) * params.b().ln()).exp(),
        (2.0 * ln_gamma_ratio(params)?).exp(),
    ))
}

/// `G = alpha² / (16 gamma) 4F3(1, 1, alpha/2+1, alpha/2+1; gamma+1, 2, 2; 1)`.
pub fn g_closed_form(gamma: f64, alpha: f64, tolerance: f64) -> Result<SeriesValue> {
    if alpha == 0.0 {
        return Ok(SeriesValue::exact(0.0, 0));
    }
    let scale = alpha * alpha / (16.0 * gamma);
    let a = 0.5 * alpha + 1.0;
    let spec = HypergeometricSpec::unit(&[1.0, 1.0, a, a], &[gamma + 1.0, 2.0, 2.0])?;
    Ok(phyp_unit(&spec, tolerance / scale, DEFAULT_MAX_TERMS)?.scaled(scale))
}

/// Ratio `t_{n+1} / t_n` of consecutive terms of the direct `G` sum.
pub fn g_term_ratio(n: usize, gamma: f64, alpha: f64) -> f64 {
    let n = n as f64;
    let a = 0.5 * alpha;
    (a + n) * (a + n) * n / ((n + 1.0) * (n + 1.0) * (gamma + n))
}

/// `G` by summing `(alpha/2)_n² / (4 n (gamma)_n n!)` term by term.
pub fn g_direct_sum(gamma: f64, alpha: f64, tolerance: f64, max_terms: usize) -> Result<SeriesValue> {
    let a = 0.5 * alpha;
    if a == 0.0 {
        return Ok(SeriesValue::exact(0.0, 0));
    }
    let series = PowerTailSeries {
        first_term: a * a / (4.0 * gamma),
        first_index: 1,
        ratio: |n| g_term_ratio(n, gamma, alpha),
        decay: gamma + 1.0 - alpha,
        asymptotic_from: (4.0 * (a + gamma) + 32.0) as usize,
    };
    Ok(sum_power_tail(&series, tolerance, max_terms))
}

fn check_series_domain(params: &PotentialParams, tolerance: f64) -> Result<()> {
    if !(tolerance > 0.0) {
        return Err(Error::invalid(format!("tolerance must be positive, got {tolerance}")));
    }
    params.check_raabe_bound()
}

/// `c2` from the closed `4F3` form. `tolerance` applies to `c2` at `B = 1`.
pub fn c2_closed_form(params: &PotentialParams, tolerance: f64) -> Result<SeriesValue> {
    check_series_domain(params, tolerance)?;
    let (b_scale, pref) = second_order_prefactor(params)?;
    let g = g_closed_form(params.gamma(), params.alpha(), tolerance / pref)?;
    Ok(g.scaled(-pref).scaled(b_scale))
}

/// `c2` from the direct second-order sum over excited states.
pub fn c2_direct_sum(params: &PotentialParams, tolerance: f64, max_terms: usize) -> Result<SeriesValue> {
    check_series_domain(params, tolerance)?;
    let (b_scale, pref) = second_order_prefactor(params)?;
    let g = g_direct_sum(params.gamma(), params.alpha(), tolerance / pref, max_terms)?;
    Ok(g.scaled(-pref).scaled(b_scale))
}

/// `c2` from `G = F + R`: `F` in closed `2F1` form and the faster residual
/// `R = sum (alpha/2)_n² / (4 n (n+1) (gamma)_n n!)` summed directly.
///
/// `F` is singular at `alpha = 2`, where this fails with [`Error::Singular`].
pub fn c2_fg_split(params: &PotentialParams, tolerance: f64) -> Result<SeriesValue> {
    check_series_domain(params, tolerance)?;
    let (gamma, alpha) = (params.gamma(), params.alpha());
    let (b_scale, pref) = second_order_prefactor(params)?;
    let (f, f_err) = f_with_bound(gamma, alpha)?;
    let r = residual_series(gamma, alpha, tolerance / pref)?;
    let g = SeriesValue {
        value: f + r.value,
        terms_used: r.terms_used,
        tail_bound: r.tail_bound + f_err,
        converged: r.converged,
    };
    Ok(g.scaled(-pref).scaled(b_scale))
}

/// `-sqrt(B) / (4 (gamma - 1)³)`, the exact `c2` at `alpha = 2`.
pub fn c2_alpha2_exact(params: &PotentialParams) -> Result<f64> {
    let d = params.gamma() - 1.0;
    if !(d > 0.0) {
        return Err(Error::invalid(format!("need gamma > 1, got {}", params.gamma())));
    }
    Ok(-params.b().sqrt() / (4.0 * d * d * d))
}

/// `(E0, c1, c2)` for `params`, after the substitution `A -> A_eff` when a
/// dimension is given. `c2` comes from the closed form except within
/// [`ALPHA2_SWITCH`] of `alpha = 2`, where the exact value is used.
pub fn expand_energy(
    params: &PotentialParams,
    dim: Option<&DimensionSpec>,
    tolerance: f64,
) -> Result<EnergyExpansion> {
    let params = match dim {
        Some(d) => effective_params(params, d)?,
        None => *params,
    };
    check_series_domain(&params, tolerance)?;
    let e0 = 2.0 * params.b().sqrt() * params.gamma();
    let c1 = first_order(&params)?;
    let (c2, method, c2_series) = if (params.alpha() - 2.0).abs() < ALPHA2_SWITCH {
        (c2_alpha2_exact(&params)?, Method::Alpha2Exact, None)
    } else {
        let s = c2_closed_form(&params, tolerance)?;
        (s.value, Method::ClosedForm, Some(s))
    };
    Ok(EnergyExpansion { e0, c1, c2, method, c2_series, params })
}
