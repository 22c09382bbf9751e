//! File formats, seeded generators, verification campaigns and the command
//! line front end for `ordlab-core`.

pub mod campaign;
pub mod checks;
pub mod error;
pub mod io;
pub mod random;

use ordlab_core::Limits;

pub use error::{exit, LabError, LabResult};

/// Environment variable overriding the element limits.
pub const MAX_ELEMENTS_VAR: &str = "ORDLAB_MAX_ELEMENTS";

/// Default limits, with both element bounds replaced by `ORDLAB_MAX_ELEMENTS`
/// when it is set (clamped to 64).
pub fn limits_from_env() -> LabResult<Limits> {
    match std::env::var(MAX_ELEMENTS_VAR) {
        Ok(v) => limits_with_max(&v),
        Err(std::env::VarError::NotPresent) => Ok(Limits::default()),
        Err(e) => Err(LabError::Usage(format!("{MAX_ELEMENTS_VAR}: {e}"))),
    }
}

pub fn limits_with_max(value: &str) -> LabResult<Limits> {
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| {
            LabError::Usage(format!(
                "{MAX_ELEMENTS_VAR} must be a positive integer, got {value:?}"
            ))
        })?;
    Ok(Limits {
        exhaustive_elements: n.min(64),
        relational_elements: n.min(64),
        ..Limits::default()
    })
}
