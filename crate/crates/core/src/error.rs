use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter is outside the domain of the operation.
    #[error("{name} must be {constraint} (got {value})")]
    Domain {
        name: &'static str,
        constraint: &'static str,
        value: f64,
    },
    #[error("quadratic in r^n has no positive root")]
    NoPositiveRoot,
    #[error("no extremal map for class {0}")]
    UnsupportedClass(&'static str),
    #[error("no closed-form radius covers class {class} with target {target}")]
    Uncovered {
        class: &'static str,
        target: &'static str,
    },
}

impl Error {
    pub(crate) fn domain(name: &'static str, constraint: &'static str, value: f64) -> Self {
        Error::Domain {
            name,
            constraint,
            value,
        }
    }
}

/// `Ok(())` iff `n ≥ 1`.
pub(crate) fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n", "≥ 1", 0.0));
    }
    Ok(())
}

pub(crate) fn check_unit_r(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::domain("r", "in [0, 1)", r));
    }
    Ok(())
}
