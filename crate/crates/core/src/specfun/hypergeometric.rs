//! Generalized hypergeometric series at unit argument and Gauss's
//! closed form for 2F1(a, b; c; 1).

use super::gamma::{is_nonpositive_integer, log_gamma_signed};
use super::series::{sum_power_tail, PowerTailSeries, SeriesValue};
use crate::error::{Error, Result};

/// Parameters of `pFq(a_1..a_p; b_1..b_q; z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeometricSpec {
    pub numerator: Vec<f64>,
    pub denominator: Vec<f64>,
    pub argument: f64,
}

impl HypergeometricSpec {
    /// A series at `z = 1`; fails if a denominator parameter is a pole.
    pub fn unit(numerator: &[f64], denominator: &[f64]) -> Result<Self> {
        let spec = HypergeometricSpec {
            numerator: numerator.to_vec(),
            denominator: denominator.to_vec(),
            argument: 1.0,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(b) = self.denominator.iter().find(|&&b| is_nonpositive_integer(b)) {
            return Err(Error::invalid(format!(
                "denominator parameter {b} is zero or a negative integer"
            )));
        }
        if self.numerator.iter().chain(&self.denominator).any(|p| !p.is_finite()) {
            return Err(Error::invalid("hypergeometric parameters must be finite"));
        }
        Ok(())
    }

    /// `sum(b) - sum(a)`; the series at `z = 1` converges iff this is positive.
    pub fn excess(&self) -> f64 {
        self.denominator.iter().sum::<f64>() - self.numerator.iter().sum::<f64>()
    }

    /// Number of terms if some numerator parameter is a nonpositive integer.
    fn terminating_length(&self) -> Option<usize> {
        self.numerator
            .iter()
            .filter(|&&a| is_nonpositive_integer(a))
            .map(|&a| (-a) as usize + 1)
            .min()
    }

    fn ratio(&self, n: usize) -> f64 {
        let n = n as f64;
        let mut r = self.argument / (n + 1.0);
        for a in &self.numerator {
            r *= a + n;
        }
        for b in &self.denominator {
            r /= b + n;
        }
        r
    }
}

/// Sums `pFq(...; 1)` term by term.
///
/// Terminating series are summed exactly. Otherwise the terms decay like
/// `n^(-1-s)` with `s = sum(b) - sum(a)` and the tail is controlled by
/// [`series`](super::series) machinery; if `max_terms` runs out the result
/// carries `converged == false` and the best available tail bound.
pub fn phyp_unit(spec: &HypergeometricSpec, tolerance: f64, max_terms: usize) -> Result<SeriesValue> {
    spec.validate()?;
    if spec.argument != 1.0 {
        return Err(Error::invalid(format!(
            "only unit argument is supported, got z = {}",
            spec.argument
        )));
    }
    if !(tolerance > 0.0) {
        return Err(Error::invalid(format!("tolerance must be positive, got {tolerance}")));
    }

    if let Some(len) = spec.terminating_length() {
        let mut term = 1.0;
        let mut sum = super::series::CompensatedSum::default();
        for n in 0..len {
            sum.add(term);
            term *= spec.ratio(n);
        }
        return Ok(SeriesValue::exact(sum.value(), len));
    }

    let s = spec.excess();
    if !(s > 0.0) {
        return Err(Error::Divergent(format!(
            "sum(b) - sum(a) = {s} must be positive for convergence at z = 1"
        )));
    }

    let scale = spec
        .numerator
        .iter()
        .chain(&spec.denominator)
        .fold(1.0f64, |m, p| m.max(p.abs()));
    let series = PowerTailSeries {
        first_term: 1.0,
        first_index: 0,
        ratio: |n| spec.ratio(n),
        decay: s,
        asymptotic_from: (4.0 * scale) as usize + 32,
    };
    Ok(sum_power_tail(&series, tolerance, max_terms))
}

/// `2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))`.
///
/// Evaluated in log space with a sign accumulator, so `c - a` and `c - b`
/// may be negative; a pole of either gives the exact value zero.
pub fn gauss_2f1_unit(a: f64, b: f64, c: f64) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return Err(Error::invalid(format!("c = {c} is zero or a negative integer")));
    }
    let excess = c - a - b;
    if !(excess > 0.0) {
        return Err(Error::Divergent(format!(
            "2F1 at z = 1 needs c - a - b > 0, got {excess}"
        )));
    }
    if a == 0.0 || b == 0.0 {
        return Ok(1.0);
    }
    if is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b) {
        return Ok(0.0);
    }
    let (l1, s1) = log_gamma_signed(c)?;
    let (l2, s2) = log_gamma_signed(excess)?;
    let (l3, s3) = log_gamma_signed(c - a)?;
    let (l4, s4) = log_gamma_signed(c - b)?;
    Ok(s1 * s2 * s3 * s4 * (l1 + l2 - l3 - l4).exp())
}
