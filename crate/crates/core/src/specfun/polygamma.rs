//! Digamma, trigamma and higher polygamma functions.
//!
//! All three shift the argument upward with the recurrence
//! `psi^(n)(x+1) = psi^(n)(x) + (-1)^n n! x^(-n-1)` and then use the
//! asymptotic series with Bernoulli-number coefficients.

use std::f64::consts::PI;

use super::gamma::{is_nonpositive_integer, sin_pi, BERNOULLI_EVEN};
use crate::error::{Error, Result};

const SHIFT_TO: f64 = 12.0;

fn check_pole(function: &'static str, x: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::invalid(format!("{function} requires finite x, got {x}")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { function, x });
    }
    Ok(())
}

/// The digamma function `psi(x) = d/dx ln Gamma(x)`.
pub fn digamma(x: f64) -> Result<f64> {
    check_pole("digamma", x)?;
    if x < 0.0 {
        // psi(x) = psi(1 - x) - pi cot(pi x)
        let s = sin_pi(x);
        let c = sin_pi(x + 0.5);
        return Ok(digamma(1.0 - x)? - PI * c / s);
    }
    let mut acc = 0.0;
    let mut y = x;
    while y < SHIFT_TO {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut series = 0.0;
    let mut p = inv2;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate().take(8) {
        series += b / (2 * j + 2) as f64 * p;
        p *= inv2;
    }
    Ok(acc + y.ln() - 0.5 / y - series)
}

/// The trigamma function `psi^(1)(x)`.
pub fn trigamma(x: f64) -> Result<f64> {
    check_pole("trigamma", x)?;
    let mut acc = 0.0;
    let mut y = x;
    while y < SHIFT_TO {
        acc += 1.0 / (y * y);
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut p = inv2 * inv;
    for b in BERNOULLI_EVEN.iter().take(8) {
        series += b * p;
        p *= inv2;
    }
    Ok(acc + inv + 0.5 * inv2 + series)
}

/// The polygamma function `psi^(n)(x)` for `n >= 1`.
pub fn polygamma(n: u32, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::invalid("polygamma order must be >= 1; use digamma for n = 0"));
    }
    check_pole("polygamma", x)?;
    if n == 1 {
        return trigamma(x);
    }
    let nf = n as f64;
    let n_fact: f64 = (1..=n).map(|k| k as f64).product();
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 }; // (-1)^(n+1)

    // psi^(n)(x) = (-1)^(n+1) n! sum_k (x+k)^(-n-1)
    let threshold = SHIFT_TO.max(nf + 10.0);
    let mut head = 0.0;
    let mut y = x;
    while y < threshold {
        head += y.powi(-(n as i32) - 1);
        y += 1.0;
    }

    // (n-1)!/y^n + n!/(2 y^(n+1)) + sum_k B_2k (2k+n-1)!/((2k)! y^(2k+n))
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut tail = n_fact / nf * inv.powi(n as i32) + 0.5 * n_fact * inv.powi(n as i32 + 1);
    // ratio (2k+n-1)!/(2k)! built incrementally from k = 1
    let mut coef = n_fact * (nf + 1.0) / 2.0; // (n+1)!/2!
    let mut p = inv.powi(n as i32 + 2);
    for (j, b) in BERNOULLI_EVEN.iter().enumerate().take(8) {
        let k = (j + 1) as f64;
        if j > 0 {
            coef *= (2.0 * k + nf - 2.0) * (2.0 * k + nf - 1.0) / ((2.0 * k - 1.0) * (2.0 * k));
        }
        tail += b * coef * p;
        p *= inv2;
    }
    Ok(sign * (n_fact * head + tail))
}
