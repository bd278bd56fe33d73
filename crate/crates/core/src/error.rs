use thiserror::Error;

use crate::elements::PropertyName;
use crate::radicals::DeltaComputation;
use crate::ring::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring order must be positive")]
    ZeroOrder,

    #[error("ring of order {order} exceeds the size cap of {cap}")]
    SizeCap { order: u128, cap: usize },

    #[error("right ideal lattice exceeds {cap} members")]
    LatticeCap { cap: usize },

    #[error("ring axioms violated: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Axioms(Vec<Violation>),

    #[error("malformed ring tables: {0}")]
    Malformed(String),

    #[error("bimodule axiom `{axiom}` fails at {witness:?}")]
    Bimodule { axiom: &'static str, witness: Vec<usize> },

    #[error("{0} is not a right ideal")]
    NotRightIdeal(String),

    #[error("{0} is not a two-sided ideal")]
    NotTwoSidedIdeal(String),

    #[error("element {element} out of range for a ring of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("the two Jacobson radical computations disagree: maximal-ideal route {by_ideals:?}, unit route {by_units:?}")]
    JacobsonMismatch { by_ideals: Vec<usize>, by_units: Vec<usize> },

    #[error("the five delta characterizations disagree")]
    DeltaDisagreement(Box<DeltaComputation>),

    #[error("internal consistency fault: {0}")]
    Fault(String),

    #[error("`{0}` is a ring-level property and cannot be decided for a single element")]
    RingLevelProperty(PropertyName),

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("bad preset `{input}`: {reason}")]
    Preset { input: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
