use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Every property the toolkit can decide. The first group is element-level; the
/// rest only make sense for a whole ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyName {
    Quasipolar,
    NilQuasipolar,
    JQuasipolar,
    DeltaQuasipolar,
    WeaklyDeltaQuasipolar,
    Clean,
    StronglyClean,
    JClean,
    StronglyJClean,
    UniquelyClean,
    DeltaRClean,
    StronglyDeltaRClean,
    UniquelyDeltaRClean,
    Boolean,
    Abelian,
    Local,
    Semisimple,
    VonNeumannRegular,
    StronglyRegular,
    StronglyPiRegular,
    Exchange,
    RightPp,
}

impl PropertyName {
    pub const ALL: [PropertyName; 22] = [
        PropertyName::Quasipolar,
        PropertyName::NilQuasipolar,
        PropertyName::JQuasipolar,
        PropertyName::DeltaQuasipolar,
        PropertyName::WeaklyDeltaQuasipolar,
        PropertyName::Clean,
        PropertyName::StronglyClean,
        PropertyName::JClean,
        PropertyName::StronglyJClean,
        PropertyName::UniquelyClean,
        PropertyName::DeltaRClean,
        PropertyName::StronglyDeltaRClean,
        PropertyName::UniquelyDeltaRClean,
        PropertyName::Boolean,
        PropertyName::Abelian,
        PropertyName::Local,
        PropertyName::Semisimple,
        PropertyName::VonNeumannRegular,
        PropertyName::StronglyRegular,
        PropertyName::StronglyPiRegular,
        PropertyName::Exchange,
        PropertyName::RightPp,
    ];

    pub fn as_str(self) -> &'static str {
        use PropertyName::*;
        match self {
            Quasipolar => "quasipolar",
            NilQuasipolar => "nil-quasipolar",
            JQuasipolar => "j-quasipolar",
            DeltaQuasipolar => "delta-quasipolar",
            WeaklyDeltaQuasipolar => "weakly-delta-quasipolar",
            Clean => "clean",
            StronglyClean => "strongly-clean",
            JClean => "j-clean",
            StronglyJClean => "strongly-j-clean",
            UniquelyClean => "uniquely-clean",
            DeltaRClean => "delta-r-clean",
            StronglyDeltaRClean => "strongly-delta-r-clean",
            UniquelyDeltaRClean => "uniquely-delta-r-clean",
            Boolean => "boolean",
            Abelian => "abelian",
            Local => "local",
            Semisimple => "semisimple",
            VonNeumannRegular => "von-neumann-regular",
            StronglyRegular => "strongly-regular",
            StronglyPiRegular => "strongly-pi-regular",
            Exchange => "exchange",
            RightPp => "right-pp",
        }
    }

    /// Whether the property is defined per element (a ring has it when every
    /// element does).
    pub fn is_element_level(self) -> bool {
        (self as usize) <= PropertyName::UniquelyDeltaRClean as usize
    }

    pub fn is_uniqueness(self) -> bool {
        matches!(self, PropertyName::UniquelyClean | PropertyName::UniquelyDeltaRClean)
    }
}

impl fmt::Display for PropertyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PropertyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PropertyName::ALL
            .iter()
            .copied()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}
