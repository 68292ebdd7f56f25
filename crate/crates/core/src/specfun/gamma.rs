//! Log-gamma, signed log-gamma and Pochhammer symbols.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Bernoulli numbers B_2, B_4, ..., B_20.
pub(crate) const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

const ZETA_TERMS: usize = 48;

/// `zeta(k) - 1` for k = 2..ZETA_TERMS+1, by Euler-Maclaurin with a direct head of 11 terms.
fn zeta_minus_one() -> &'static [f64; ZETA_TERMS] {
    static TABLE: OnceLock<[f64; ZETA_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        const HEAD: usize = 12;
        let big_n = HEAD as f64;
        let mut out = [0.0; ZETA_TERMS];
        for (i, slot) in out.iter_mut().enumerate() {
            let k = (i + 2) as f64;
            // tail first so the small pieces accumulate before the large head terms
            let mut tail = big_n.powf(1.0 - k) / (k - 1.0) + 0.5 * big_n.powf(-k);
            let mut rising = k; // (k)_{2j-1}
            let mut fact = 2.0; // (2j)!
            for (j, b) in BERNOULLI_EVEN.iter().enumerate().take(8) {
                let j = j + 1;
                if j > 1 {
                    rising *= (k + (2 * j - 3) as f64) * (k + (2 * j - 2) as f64);
                    fact *= ((2 * j - 1) * (2 * j)) as f64;
                }
                tail += b / fact * rising * big_n.powf(-k - (2 * j - 1) as f64);
            }
            let mut sum = tail;
            for n in (2..HEAD).rev() {
                sum += (n as f64).powf(-k);
            }
            *slot = sum;
        }
        out
    })
}

/// sum_{k>=2} (-1)^k (zeta(k) - 1) z^k / k, for |z| <= 0.5.
fn zeta_tail_series(z: f64) -> f64 {
    let zeta = zeta_minus_one();
    let mut acc = 0.0;
    let mut power = z * z;
    for (i, zm1) in zeta.iter().enumerate() {
        let k = (i + 2) as f64;
        let term = zm1 * power / k;
        acc += if i % 2 == 0 { term } else { -term };
        if term.abs() < 1e-18 * acc.abs().max(1e-300) {
            break;
        }
        power *= z;
    }
    acc
}

/// ln Gamma(1 + z) for |z| <= 0.5, from the zeta Taylor series about 1.
fn ln_gamma_1p(z: f64) -> f64 {
    (1.0 - EULER_GAMMA) * z - z.ln_1p() + zeta_tail_series(z)
}

/// ln Gamma(2 + z) = ln Gamma(1 + z) + ln(1 + z); the logarithms cancel exactly.
fn ln_gamma_2p(z: f64) -> f64 {
    (1.0 - EULER_GAMMA) * z + zeta_tail_series(z)
}

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate().take(8) {
        let k = (2 * j + 2) as f64;
        corr += b / (k * (k - 1.0)) * p;
        p *= inv2;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + corr
}

/// Natural logarithm of the gamma function for `x > 0`.
///
/// Close to the zeros of ln Gamma at 1 and 2 a Taylor series keeps full
/// relative accuracy; large arguments use Stirling's series.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::invalid(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(log_gamma_pos(x))
}

pub(crate) fn log_gamma_pos(x: f64) -> f64 {
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    if x < 0.5 {
        return ln_gamma_1p(x) - x.ln();
    }
    if x <= 1.5 {
        return ln_gamma_1p(x - 1.0);
    }
    if x <= 2.5 {
        return ln_gamma_2p(x - 2.0);
    }
    if x < 15.0 {
        let mut y = x;
        let mut prod = 1.0;
        while y > 2.5 {
            y -= 1.0;
            prod *= y;
        }
        return ln_gamma_2p(y - 2.0) + prod.ln();
    }
    stirling(x)
}

/// `sin(pi x)` with exact zeros at the integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    if r == 0.0 || r == 1.0 {
        return 0.0;
    }
    if r < 0.5 {
        (PI * r).sin()
    } else if r < 1.5 {
        -(PI * (r - 1.0)).sin()
    } else {
        (PI * (r - 2.0)).sin()
    }
}

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// `(ln |Gamma(x)|, sign Gamma(x))` for any real `x` that is not a pole.
pub fn log_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() {
        return Err(Error::invalid(format!("log_gamma_signed requires finite x, got {x}")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { function: "gamma", x });
    }
    if x > 0.0 {
        return Ok((log_gamma_pos(x), 1.0));
    }
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    let s = sin_pi(x);
    Ok((PI.ln() - s.abs().ln() - log_gamma_pos(1.0 - x), s.signum()))
}

/// Rising factorial `z (z+1) ... (z+n-1)`, evaluated as a plain product.
///
/// `pochhammer(z, 0) == 1` for every `z`, and nonpositive integer `z`
/// gives an exact zero once the factor `z + k = 0` is reached.
pub fn pochhammer(z: f64, n: usize) -> f64 {
    let mut p = 1.0;
    for k in 0..n {
        let f = z + k as f64;
        if f == 0.0 {
            return 0.0;
        }
        p *= f;
    }
    p
}

/// `ln (a)_n` for `a > 0`, as a sum of logarithms.
pub(crate) fn ln_pochhammer_pos(a: f64, n: usize) -> f64 {
    debug_assert!(a > 0.0);
    if n > 64 {
        return log_gamma_pos(a + n as f64) - log_gamma_pos(a);
    }
    let mut p = 1.0;
    let mut acc = 0.0;
    for k in 0..n {
        p *= a + k as f64;
        if p > 1e280 {
            acc += p.ln();
            p = 1.0;
        }
    }
    acc + p.ln()
}

pub(crate) fn ln_factorial(n: usize) -> f64 {
    ln_pochhammer_pos(1.0, n)
}
