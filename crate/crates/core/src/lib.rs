//! Finite unital rings from Cayley tables: ideals, the Jacobson radical, δ(R),
//! quasipolar/clean-type element properties and a theorem harness that checks
//! claims about them over a catalog of small rings.

#![forbid(unsafe_code)]

pub mod analysis;
pub mod elements;
pub mod error;
pub mod ideals;
pub mod preset;
pub mod radicals;
pub mod report;
pub mod ring;
pub mod set;
pub mod verify;

pub use analysis::Analysis;
pub use elements::{
    element_property, idempotents_lift, ring_property, spectral_candidates, Certificate, PropertyName, RingVerdict,
    SpectralFlavor,
};
pub use error::{Error, Result};
pub use preset::{build_from_input, IdealSpec, Recipe};
pub use radicals::DeltaComputation;
pub use report::RingReport;
pub use ring::{FiniteRing, Limits};
pub use set::ElementSet;
