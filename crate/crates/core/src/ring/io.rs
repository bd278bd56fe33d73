use std::path::Path;

use serde::{Deserialize, Serialize};

use super::FiniteRing;
use crate::error::{Error, Result};

/// On-disk JSON form of a ring. Tables are row-major: `add[i][j]` is `i + j`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingFile {
    pub name: String,
    pub order: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&FiniteRing> for RingFile {
    fn from(ring: &FiniteRing) -> Self {
        RingFile {
            name: ring.name().to_string(),
            order: ring.order(),
            zero: ring.zero(),
            one: ring.one(),
            add: ring.add_table(),
            mul: ring.mul_table(),
            labels: ring.labels().map(<[String]>::to_vec),
        }
    }
}

impl RingFile {
    /// Converts to a ring, refusing tables that violate any ring axiom.
    pub fn into_ring(self) -> Result<FiniteRing> {
        if self.order != self.add.len() {
            return Err(Error::Malformed(format!(
                "declared order {} but the add table has {} rows",
                self.order,
                self.add.len()
            )));
        }
        FiniteRing::new_checked(self.name, &self.add, &self.mul, self.zero, self.one, self.labels)
    }
}

impl FiniteRing {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&RingFile::from(self)).expect("ring file serializes")
    }

    /// Parses and validates a ring file.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: RingFile = serde_json::from_str(text)?;
        file.into_ring()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut text = self.to_json();
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_upper_triangular, build_zmod, Limits};

    #[test]
    fn json_round_trip() {
        let limits = Limits::default();
        let t = build_upper_triangular(&build_zmod(2, &limits).unwrap(), 2, &limits).unwrap();
        let back = FiniteRing::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn rejects_invalid_tables() {
        let limits = Limits::default();
        let z4 = build_zmod(4, &limits).unwrap();
        let mut file = RingFile::from(&z4);
        file.mul[2][2] = 1;
        let text = serde_json::to_string(&file).unwrap();
        assert!(matches!(FiniteRing::from_json(&text), Err(Error::Axioms(_))));

        let mut file = RingFile::from(&z4);
        file.add[0][0] = 9;
        assert!(matches!(file.into_ring(), Err(Error::Malformed(_))));

        let mut file = RingFile::from(&z4);
        file.order = 5;
        assert!(matches!(file.into_ring(), Err(Error::Malformed(_))));
    }
}
