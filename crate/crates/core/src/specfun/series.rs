//! Summation of slowly convergent series with power-law tails.
//!
//! Every series handled here has terms that decay like `C n^(-1-s)` with a
//! known exponent `s > 0`: hypergeometric series at unit argument and the
//! gamma-ratio series built from them. Two tail treatments are used:
//!
//! * an integral comparison, `sum_{k >= n} t_k ~ t_n n / s`, which stops
//!   the summation early once it falls below the tolerance, and
//! * Richardson extrapolation over partial sums at doubling term counts,
//!   which removes the `N^(-s)`, `N^(-s-1)`, ... components of the
//!   remainder one after the other.
//!
//! The second is what makes `s` as small as 0.2 tractable.

/// A summed series together with how far it can be trusted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub terms_used: usize,
    /// Bound on `|value - exact|`. Always non-negative.
    pub tail_bound: f64,
    pub converged: bool,
}

impl SeriesValue {
    pub fn exact(value: f64, terms_used: usize) -> Self {
        SeriesValue { value, terms_used, tail_bound: 0.0, converged: true }
    }

    /// `factor * self`, with the bound scaled to match.
    pub fn scaled(self, factor: f64) -> Self {
        SeriesValue {
            value: self.value * factor,
            tail_bound: self.tail_bound * factor.abs(),
            ..self
        }
    }
}

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_MAX_TERMS: usize = 2_000_000;

const FIRST_CHECKPOINT: usize = 128;
const MAX_RICHARDSON_ORDER: usize = 8;

/// Neumaier compensated sum.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Description of a series `sum_{n >= first_index} t_n`.
pub(crate) struct PowerTailSeries<R: Fn(usize) -> f64> {
    pub first_term: f64,
    pub first_index: usize,
    /// `t_{n+1} / t_n`, for `n >= first_index`.
    pub ratio: R,
    /// Decay exponent: `t_n ~ C n^(-1-s)`.
    pub decay: f64,
    /// Index after which the integral comparison is trusted.
    pub asymptotic_from: usize,
}

struct Richardson {
    decay: f64,
    rows: Vec<Vec<f64>>,
    max_abs_partial: f64,
}

impl Richardson {
    fn new(decay: f64) -> Self {
        Richardson { decay, rows: Vec::new(), max_abs_partial: 0.0 }
    }

    /// Push the partial sum at the next doubled term count; returns
    /// `(estimate, error bound)` once three checkpoints are available.
    fn push(&mut self, partial: f64) -> Option<(f64, f64)> {
        self.max_abs_partial = self.max_abs_partial.max(partial.abs());
        let mut row = vec![partial];
        if let Some(prev) = self.rows.last() {
            let order = prev.len().min(MAX_RICHARDSON_ORDER);
            for j in 1..=order {
                let f = 2f64.powf(self.decay + (j - 1) as f64);
                let next = (f * row[j - 1] - prev[j - 1]) / (f - 1.0);
                row.push(next);
            }
        }
        self.rows.push(row);
        if self.rows.len() < 3 {
            return None;
        }
        let cur = self.rows.last().unwrap();
        let prev = &self.rows[self.rows.len() - 2];
        let j = cur.len() - 1;
        let best = cur[j];
        let d1 = (best - cur[j - 1]).abs();
        let d2 = (best - prev[prev.len() - 1]).abs();
        // amplification of rounding in the partial sums
        let mut lebesgue = 1.0;
        for k in 1..=j {
            let f = 2f64.powf(self.decay + (k - 1) as f64);
            lebesgue *= (f + 1.0) / (f - 1.0);
        }
        let floor = lebesgue * 8.0 * f64::EPSILON * self.max_abs_partial;
        Some((best, 2.0 * d1.max(d2) + floor))
    }
}

pub(crate) fn sum_power_tail<R: Fn(usize) -> f64>(
    series: &PowerTailSeries<R>,
    tolerance: f64,
    max_terms: usize,
) -> SeriesValue {
    let s = series.decay;
    debug_assert!(s > 0.0);
    let mut acc = CompensatedSum::default();
    let mut term = series.first_term;
    let mut index = series.first_index;
    let mut count = 0usize;
    let mut next_checkpoint = FIRST_CHECKPOINT;
    let mut richardson = Richardson::new(s);
    let mut best: Option<(f64, f64)> = None;

    while count < max_terms {
        acc.add(term);
        count += 1;
        term *= (series.ratio)(index);
        index += 1;
        if term == 0.0 {
            return SeriesValue::exact(acc.value(), count);
        }

        if index >= series.asymptotic_from {
            let estimate = term * index as f64 / s;
            if estimate.abs() <= tolerance {
                return SeriesValue {
                    value: acc.value() + estimate,
                    terms_used: count,
                    tail_bound: estimate.abs(),
                    converged: true,
                };
            }
        }

        if count == next_checkpoint {
            next_checkpoint *= 2;
            if let Some((value, err)) = richardson.push(acc.value()) {
                if count >= series.asymptotic_from && err <= tolerance {
                    return SeriesValue { value, terms_used: count, tail_bound: err, converged: true };
                }
                if best.is_none_or(|(_, e)| err < e) {
                    best = Some((value, err));
                }
            }
        }
    }

    let crude = term * index as f64 / s;
    match best {
        Some((value, err)) if err < crude.abs() => {
            SeriesValue { value, terms_used: count, tail_bound: err, converged: false }
        }
        _ => SeriesValue {
            value: acc.value() + crude,
            terms_used: count,
            tail_bound: crude.abs(),
            converged: false,
        },
    }
}
