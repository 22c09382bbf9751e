use alloc::string::String;
use core::fmt;

/// Errors raised by constructors and checks in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    EmptyCarrier,
    DuplicateLabel(String),
    IndexOutOfRange {
        index: usize,
        size: usize,
    },
    /// The cover digraph has a cycle through the given element.
    Cycle {
        element: usize,
    },
    /// A listed edge is implied by the others (or repeated); only Hasse covers are accepted.
    NotACover {
        lower: usize,
        upper: usize,
    },
    LimitExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    NotALattice,
    /// Two structures that must share a carrier do not.
    CarrierMismatch {
        expected: usize,
        found: usize,
    },
    /// A map does not assign a valid codomain element to every domain element.
    MapNotTotal {
        expected: usize,
        found: usize,
    },
    MapOutOfRange {
        element: usize,
        image: usize,
    },
    /// A filter would contain the empty set.
    EmptyFilter,
    /// `lower <= upper` is required for an interval.
    NotAnInterval {
        lower: usize,
        upper: usize,
    },
    NotCompleteHom,
    NotSuperFilter,
    /// A family of sets fails a topology axiom.
    NotATopology,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyCarrier => write!(f, "a poset needs at least one element"),
            Error::DuplicateLabel(l) => write!(f, "duplicate label {l:?}"),
            Error::IndexOutOfRange { index, size } => {
                write!(f, "index {index} out of range for {size} elements")
            }
            Error::Cycle { element } => {
                write!(f, "cover relation has a cycle through element {element}")
            }
            Error::NotACover { lower, upper } => write!(
                f,
                "edge ({lower},{upper}) is not a cover: it is repeated, reflexive or implied by other edges"
            ),
            Error::LimitExceeded { what, size, limit } => {
                write!(f, "{what}: size {size} exceeds limit {limit}")
            }
            Error::NotALattice => write!(f, "poset is not a lattice"),
            Error::CarrierMismatch { expected, found } => {
                write!(f, "carrier size mismatch: expected {expected}, found {found}")
            }
            Error::MapNotTotal { expected, found } => {
                write!(f, "map assigns {found} values, domain has {expected} elements")
            }
            Error::MapOutOfRange { element, image } => {
                write!(f, "element {element} maps to {image}, outside the codomain")
            }
            Error::EmptyFilter => write!(f, "filter base would admit the empty set"),
            Error::NotAnInterval { lower, upper } => {
                write!(f, "element {lower} is not below element {upper}")
            }
            Error::NotCompleteHom => write!(f, "map is not a complete homomorphism"),
            Error::NotSuperFilter => write!(f, "second filter does not contain the first"),
            Error::NotATopology => write!(f, "family is not closed under union and intersection"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
