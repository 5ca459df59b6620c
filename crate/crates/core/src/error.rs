use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the range the formula is stated for.
    #[error("{name} = {value} is out of domain (requires {requires})")]
    Domain {
        name: &'static str,
        value: f64,
        requires: &'static str,
    },

    #[error("hypergeometric series did not converge within {max_terms} terms")]
    SeriesNonConvergence { max_terms: usize },

    /// The objective has the same sign at both ends of the bracket, even
    /// after expansion.
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("bisection did not reach tolerance within {max_iter} iterations")]
    RootNonConvergence { max_iter: usize },

    #[error("envelope search passed the split-count cap {cap}")]
    SplitCap { cap: u64 },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, requires: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            requires,
        }
    }
}
