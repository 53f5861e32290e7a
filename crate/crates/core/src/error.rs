use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the set on which the operation is defined.
    #[error("{what} = {value} is outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("pole at z = {0}")]
    Pole(f64),

    /// A region or solver parameter is out of range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("no admissible radius: {0}")]
    NoSolution(String),

    /// The query point is too close to a sampled edge to resolve membership.
    #[error("point ({re}, {im}) lies within {tol:e} of a sampled boundary edge")]
    Indeterminate { re: f64, im: f64, tol: f64 },

    #[error("{0}")]
    Misuse(String),
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64, domain: &'static str) -> Self {
        Error::Domain {
            what,
            value,
            domain,
        }
    }
}
