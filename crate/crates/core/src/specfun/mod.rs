//! Special functions underlying every gamma ratio and series in the crate.
//!
//! All functions are pure and thread-safe.

mod gamma;
mod hypergeometric;
mod polygamma;
pub(crate) mod series;

pub use gamma::{log_gamma, log_gamma_signed, pochhammer, EULER_GAMMA};
pub use hypergeometric::{gauss_2f1_unit, phyp_unit, HypergeometricSpec};
pub use polygamma::{digamma, polygamma, trigamma};
pub use series::{SeriesValue, DEFAULT_MAX_TERMS, DEFAULT_TOLERANCE};

pub(crate) use gamma::{ln_factorial, ln_pochhammer_pos, log_gamma_pos};
