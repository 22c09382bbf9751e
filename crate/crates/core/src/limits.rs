use crate::error::{Error, Result};
use crate::set::MAX_CARRIER;

/// Resource guards for exhaustive operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Carrier bound for operations that walk all `2^n` subsets.
    pub exhaustive_elements: usize,
    /// Carrier bound for relational operations (order, products, topologies).
    pub relational_elements: usize,
    /// Bound on the number of candidate maps `|M|^|L|` scanned by hom enumeration.
    pub map_candidates: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exhaustive_elements: 20,
            relational_elements: MAX_CARRIER,
            map_candidates: 50_000_000,
        }
    }
}

impl Limits {
    /// Same defaults, with the exhaustive bound replaced (clamped to the mask width).
    pub fn with_exhaustive(elements: usize) -> Self {
        Limits {
            exhaustive_elements: elements.min(MAX_CARRIER),
            ..Limits::default()
        }
    }

    pub(crate) fn check_exhaustive(&self, what: &'static str, n: usize) -> Result<()> {
        guard(what, n as u128, self.exhaustive_elements as u128)
    }

    pub(crate) fn check_relational(&self, what: &'static str, n: u128) -> Result<()> {
        guard(what, n, self.relational_elements.min(MAX_CARRIER) as u128)
    }
}

pub(crate) fn guard(what: &'static str, size: u128, limit: u128) -> Result<()> {
    if size > limit {
        Err(Error::LimitExceeded { what, size, limit })
    } else {
        Ok(())
    }
}
