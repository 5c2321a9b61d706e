use alloc::string::String;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument is outside the range where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A polynomial does not satisfy the hypothesis of the requested bound.
    #[error("hypothesis violated: {0}")]
    Class(String),

    /// The coefficient support does not describe a lacunary profile.
    #[error("profile rejected: {0}")]
    Rejected(String),

    /// A numerical procedure hit its work cap before reaching the requested accuracy.
    #[error("resource limit reached after {work} evaluations; achievable error {achievable_err:e}")]
    Resource { work: u64, achievable_err: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => {
        $crate::error::Error::Domain(alloc::format!($($arg)*))
    };
}

macro_rules! class {
    ($($arg:tt)*) => {
        $crate::error::Error::Class(alloc::format!($($arg)*))
    };
}

pub(crate) use class;
pub(crate) use domain;
