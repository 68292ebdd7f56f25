use std::fmt;

/// The inequality a parameter set failed to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// `alpha < 2 gamma`: the singular integral `<m|x^-alpha|n>` exists.
    MatrixElement,
    /// `alpha < gamma + 1`: Raabe's test for the second-order sum.
    Raabe,
    /// `gamma > 1`.
    GammaAboveOne,
}

impl Bound {
    pub fn inequality(&self) -> &'static str {
        match self {
            Bound::MatrixElement => "alpha < 2*gamma",
            Bound::Raabe => "alpha < gamma + 1",
            Bound::GammaAboveOne => "gamma > 1",
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Bound::MatrixElement => "matrix-element integrability bound",
            Bound::Raabe => "Raabe convergence bound",
            Bound::GammaAboveOne => "gamma lower bound",
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name(), self.inequality())
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{bound} violated: alpha = {alpha}, gamma = {gamma}")]
    OutOfBounds { bound: Bound, alpha: f64, gamma: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{function} has a pole at x = {x}")]
    Pole { function: &'static str, x: f64 },

    #[error("divergent series: {0}")]
    Divergent(String),

    #[error("singular parameter: {0}")]
    Singular(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// The violated bound, when this is a parameter-domain error.
    pub fn bound(&self) -> Option<Bound> {
        match self {
            Error::OutOfBounds { bound, .. } => Some(*bound),
            _ => None,
        }
    }
}
