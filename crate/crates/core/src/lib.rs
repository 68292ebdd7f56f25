pub mod error;
pub mod gseries;
pub mod matelem;
pub mod perturb;
pub mod specfun;
pub mod varoracle;

pub use error::{Bound, Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/special-functions.md")]
    mod special_functions {}
    #[doc = include_str!("../../../book/src/oscillator-basis.md")]
    mod oscillator_basis {}
    #[doc = include_str!("../../../book/src/perturbation.md")]
    mod perturbation {}
    #[doc = include_str!("../../../book/src/gamma-series.md")]
    mod gamma_series {}
    #[doc = include_str!("../../../book/src/variational-oracle.md")]
    mod variational_oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
