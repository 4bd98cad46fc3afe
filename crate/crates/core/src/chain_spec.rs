//! Flat key-value chain records.
//!
//! ```text
//! # octant 2-chain
//! unit = degrees
//! lengths = 1.5707963267948966, 1.5707963267948966
//! angles = 90
//! curvature = 1
//! ```
//!
//! `unit` and `lengths` are required; `angles` may be omitted for a single
//! edge. Lists are comma separated. Blank lines and `#` comments are ignored.

use std::fmt;
use std::str::FromStr;

use crate::chain::ConvexChain;
use crate::error::{GeomError, Result};
use crate::kernel::Curvature;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleUnit {
    Radians,
    Degrees,
}

impl AngleUnit {
    pub fn to_radians(self, x: f64) -> f64 {
        match self {
            AngleUnit::Radians => x,
            AngleUnit::Degrees => x.to_radians(),
        }
    }
}

impl fmt::Display for AngleUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AngleUnit::Radians => "radians",
            AngleUnit::Degrees => "degrees",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainSpec {
    pub lengths: Vec<f64>,
    /// In `unit`.
    pub angles: Vec<f64>,
    pub unit: AngleUnit,
    pub curvature: Option<Curvature>,
}

fn parse_list(key: &str, value: &str, line: usize) -> Result<Vec<f64>> {
    if value.trim().is_empty() {
        return Ok(Vec::new());
    }
    value
        .split(',')
        .map(|item| {
            item.trim().parse::<f64>().map_err(|_| {
                GeomError::Domain(format!(
                    "line {line}: bad number {:?} in {key}",
                    item.trim()
                ))
            })
        })
        .collect()
}

impl ChainSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let (mut lengths, mut angles, mut unit, mut curvature) = (None, None, None, None);
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let Some((key, value)) = body.split_once('=') else {
                return Err(GeomError::Domain(format!(
                    "line {line}: expected key = value"
                )));
            };
            let (key, value) = (key.trim(), value.trim());
            let duplicate = match key {
                "lengths" => lengths.replace(parse_list(key, value, line)?).is_some(),
                "angles" => angles.replace(parse_list(key, value, line)?).is_some(),
                "unit" => {
                    let u = match value {
                        "radians" | "rad" => AngleUnit::Radians,
                        "degrees" | "deg" => AngleUnit::Degrees,
                        _ => {
                            return Err(GeomError::Domain(format!(
                                "line {line}: unknown unit {value:?}"
                            )))
                        }
                    };
                    unit.replace(u).is_some()
                }
                "curvature" | "kappa" => {
                    let k: f64 = value.parse().map_err(|_| {
                        GeomError::Domain(format!("line {line}: bad curvature {value:?}"))
                    })?;
                    curvature.replace(Curvature::new(k)?).is_some()
                }
                _ => {
                    return Err(GeomError::Domain(format!(
                        "line {line}: unknown key {key:?}"
                    )))
                }
            };
            if duplicate {
                return Err(GeomError::Domain(format!(
                    "line {line}: duplicate key {key:?}"
                )));
            }
        }
        let spec = ChainSpec {
            lengths: lengths.ok_or_else(|| GeomError::domain("missing key \"lengths\""))?,
            angles: angles.unwrap_or_default(),
            unit: unit.ok_or_else(|| GeomError::domain("missing key \"unit\""))?,
            curvature,
        };
        spec.to_chain()?;
        Ok(spec)
    }

    pub fn from_chain(chain: &ConvexChain, curvature: Option<Curvature>) -> Self {
        ChainSpec {
            lengths: chain.edge_lengths().to_vec(),
            angles: chain.interior_angles().to_vec(),
            unit: AngleUnit::Radians,
            curvature,
        }
    }

    pub fn angles_radians(&self) -> Vec<f64> {
        self.angles
            .iter()
            .map(|&a| self.unit.to_radians(a))
            .collect()
    }

    pub fn to_chain(&self) -> Result<ConvexChain> {
        ConvexChain::new(self.lengths.clone(), self.angles_radians())
    }
}

impl FromStr for ChainSpec {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self> {
        ChainSpec::parse(s)
    }
}

fn join(xs: &[f64]) -> String {
    xs.iter()
        .map(|x| format!("{x:?}"))
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "unit = {}", self.unit)?;
        writeln!(f, "lengths = {}", join(&self.lengths))?;
        writeln!(f, "angles = {}", join(&self.angles))?;
        if let Some(k) = self.curvature {
            writeln!(f, "curvature = {:?}", k.kappa())?;
        }
        Ok(())
    }
}
