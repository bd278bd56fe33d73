//! Textual ring recipes.
//!
//! ```text
//! recipe  := "zmod:" N
//!          | ("mat" | "tri" | "cdtri") ":" K ":" recipe
//!          | "product:" item ("," item)*
//!          | "dorroh:" item "," item
//!          | "quot:" item "," ideal
//! item    := "(" recipe ")" | recipe
//! ideal   := "delta" | "jacobson" | "{" N ("," N)* "}"
//! ```
//!
//! Parenthesize an item whenever it contains a comma itself. Dorroh recipes use
//! the integer action of the base on the bimodule; explicit action tables come
//! from a JSON file instead (see [`DorrohFile`]).

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::two_sided_closure;
use crate::radicals::{delta, jacobson};
use crate::ring::{
    build_constant_diagonal_triangular, build_dorroh, build_matrix_ring, build_product, build_quotient,
    build_upper_triangular, build_zmod, DorrohData, FiniteRing, Limits, RingFile,
};
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealSpec {
    Delta,
    Jacobson,
    /// Two-sided ideal generated by the listed elements.
    Generated(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    Zmod(usize),
    Product(Vec<Recipe>),
    Matrix { k: usize, base: Box<Recipe> },
    UpperTriangular { k: usize, base: Box<Recipe> },
    ConstantDiagonal { k: usize, base: Box<Recipe> },
    Dorroh { base: Box<Recipe>, bimodule: Box<Recipe> },
    Quotient { ring: Box<Recipe>, ideal: IdealSpec },
}

impl Recipe {
    pub fn build(&self, limits: &Limits) -> Result<FiniteRing> {
        match self {
            Recipe::Zmod(n) => build_zmod(*n, limits),
            Recipe::Product(parts) => {
                let rings = parts.iter().map(|p| p.build(limits)).collect::<Result<Vec<_>>>()?;
                build_product(&rings, limits)
            }
            Recipe::Matrix { k, base } => build_matrix_ring(&base.build(limits)?, *k, limits),
            Recipe::UpperTriangular { k, base } => build_upper_triangular(&base.build(limits)?, *k, limits),
            Recipe::ConstantDiagonal { k, base } => {
                build_constant_diagonal_triangular(&base.build(limits)?, *k, limits)
            }
            Recipe::Dorroh { .. } => build_dorroh(&self.dorroh_data(limits).expect("dorroh recipe")?, limits),
            Recipe::Quotient { ring, ideal } => {
                let ring = ring.build(limits)?;
                let (ideal, suffix) = match ideal {
                    IdealSpec::Delta => (delta(&ring, limits)?.consensus, "delta".to_string()),
                    IdealSpec::Jacobson => (jacobson(&ring, limits)?, "J".to_string()),
                    IdealSpec::Generated(gens) => {
                        for &g in gens {
                            ring.check_element(g)?;
                        }
                        let gens_set = ElementSet::from_indices(ring.order(), gens.iter().copied());
                        let list = gens.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                        (two_sided_closure(&ring, &gens_set), format!("<{list}>"))
                    }
                };
                let name = format!("{}/{suffix}", ring.name());
                Ok(build_quotient(&ring, &ideal)?.ring.with_name(name))
            }
        }
    }

    /// The validated-on-build Dorroh input of a `dorroh:` recipe.
    pub fn dorroh_data(&self, limits: &Limits) -> Option<Result<DorrohData>> {
        match self {
            Recipe::Dorroh { base, bimodule } => Some((|| {
                DorrohData::integer_action(base.build(limits)?, bimodule.build(limits)?)
            })()),
            _ => None,
        }
    }
}

fn write_item(f: &mut fmt::Formatter<'_>, item: &Recipe) -> fmt::Result {
    let text = item.to_string();
    if text.contains(',') {
        write!(f, "({text})")
    } else {
        f.write_str(&text)
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Zmod(n) => write!(f, "zmod:{n}"),
            Recipe::Product(parts) => {
                f.write_str("product:")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write_item(f, part)?;
                }
                Ok(())
            }
            Recipe::Matrix { k, base } => write!(f, "mat:{k}:{base}"),
            Recipe::UpperTriangular { k, base } => write!(f, "tri:{k}:{base}"),
            Recipe::ConstantDiagonal { k, base } => write!(f, "cdtri:{k}:{base}"),
            Recipe::Dorroh { base, bimodule } => {
                f.write_str("dorroh:")?;
                write_item(f, base)?;
                f.write_str(",")?;
                write_item(f, bimodule)
            }
            Recipe::Quotient { ring, ideal } => {
                f.write_str("quot:")?;
                write_item(f, ring)?;
                match ideal {
                    IdealSpec::Delta => f.write_str(",delta"),
                    IdealSpec::Jacobson => f.write_str(",jacobson"),
                    IdealSpec::Generated(g) => {
                        write!(f, ",{{{}}}", g.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
                    }
                }
            }
        }
    }
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn fail<T>(&self, reason: impl Into<String>) -> Result<T> {
        Err(Error::Preset { input: self.input.to_string(), reason: format!("{} (at offset {})", reason.into(), self.pos) })
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.fail(format!("expected `{token}`"))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.fail("expected a number");
        }
        let text = &self.rest()[..digits];
        let value = text.parse().or_else(|_| self.fail("number too large"))?;
        self.pos += digits;
        Ok(value)
    }

    fn positive(&mut self) -> Result<usize> {
        match self.number()? {
            0 => self.fail("expected a positive number"),
            n => Ok(n),
        }
    }

    fn item(&mut self) -> Result<Recipe> {
        if self.eat("(") {
            let inner = self.recipe()?;
            self.expect(")")?;
            Ok(inner)
        } else {
            self.recipe()
        }
    }

    fn recipe(&mut self) -> Result<Recipe> {
        let keyword_len = self.rest().find(':').unwrap_or(0);
        let keyword = &self.rest()[..keyword_len];
        if keyword_len == 0 {
            return self.fail("expected `<kind>:`");
        }
        self.pos += keyword_len + 1;
        match keyword {
            "zmod" => Ok(Recipe::Zmod(self.positive()?)),
            "mat" | "tri" | "cdtri" => {
                let k = self.positive()?;
                self.expect(":")?;
                let base = Box::new(self.recipe()?);
                Ok(match keyword {
                    "mat" => Recipe::Matrix { k, base },
                    "tri" => Recipe::UpperTriangular { k, base },
                    _ => Recipe::ConstantDiagonal { k, base },
                })
            }
            "product" => {
                let mut parts = vec![self.item()?];
                while self.eat(",") {
                    parts.push(self.item()?);
                }
                Ok(Recipe::Product(parts))
            }
            "dorroh" => {
                let base = Box::new(self.item()?);
                self.expect(",")?;
                let bimodule = Box::new(self.item()?);
                Ok(Recipe::Dorroh { base, bimodule })
            }
            "quot" => {
                let ring = Box::new(self.item()?);
                self.expect(",")?;
                let ideal = if self.eat("delta") {
                    IdealSpec::Delta
                } else if self.eat("jacobson") {
                    IdealSpec::Jacobson
                } else if self.eat("{") {
                    let mut gens = vec![self.number()?];
                    while self.eat(",") {
                        gens.push(self.number()?);
                    }
                    self.expect("}")?;
                    IdealSpec::Generated(gens)
                } else {
                    return self.fail("expected `delta`, `jacobson` or `{...}`");
                };
                Ok(Recipe::Quotient { ring, ideal })
            }
            other => {
                self.pos -= keyword_len + 1;
                self.fail(format!("unknown ring kind `{other}`"))
            }
        }
    }
}

impl FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser { input: s.trim(), pos: 0 };
        let recipe = parser.recipe()?;
        if !parser.rest().is_empty() {
            return parser.fail("trailing input");
        }
        Ok(recipe)
    }
}

/// JSON input for a Dorroh extension with explicit action tables.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DorrohFile {
    pub base: RingFile,
    pub bimodule: RingFile,
    pub left_action: Vec<Vec<usize>>,
    pub right_action: Vec<Vec<usize>>,
}

impl DorrohFile {
    pub fn into_data(self) -> Result<DorrohData> {
        Ok(DorrohData {
            base: self.base.into_ring()?,
            bimodule: self.bimodule.into_ring()?,
            left_action: self.left_action,
            right_action: self.right_action,
        })
    }
}

/// Builds a ring from a preset string or from a JSON file (a ring file or a
/// Dorroh file). Existing paths take precedence.
pub fn build_from_input(input: &str, limits: &Limits) -> Result<FiniteRing> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        let value: serde_json::Value = serde_json::from_str(&text)?;
        if value.get("bimodule").is_some() {
            let file: DorrohFile = serde_json::from_value(value)?;
            return build_dorroh(&file.into_data()?, limits);
        }
        let file: RingFile = serde_json::from_value(value)?;
        let ring = file.into_ring()?;
        limits.check_order(ring.order() as u128)?;
        return Ok(ring);
    }
    input.parse::<Recipe>()?.build(limits)
}
