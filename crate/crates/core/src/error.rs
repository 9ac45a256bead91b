use alloc::string::String;

use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `t` is too small for the padded partition `nu^(t)` to exist.
    #[error("cannot pad {nu} to size {t}: need t >= {needed}")]
    PadTooSmall { nu: Partition, t: usize, needed: usize },

    /// An operation whose result is integral by construction produced a
    /// fraction.
    #[error("non-integral result in {0}")]
    NonIntegralResult(String),

    #[error("not a character: multiplicity of {partition} is {value}")]
    NotACharacter { partition: Partition, value: String },

    #[error("stabilization not observed before t = {max_t} (last t tried: {last_t})")]
    OracleBudgetExceeded { max_t: usize, last_t: usize },

    #[error("degree {requested} exceeds the supported maximum {max}")]
    DegreeTooLarge { requested: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
