//! Built-in body catalogs and the body-definition file format.
//!
//! Three planet period sets are kept separate because the headline
//! results change materially with the chosen approximation:
//! `coarse` (Mars 9/5, Jupiter 12, Saturn 30 years) yields a 20-year
//! great conjunction and a 180-year triple conjunction, while `alt`
//! (1.8, 11.8, 29.5) moves the triple conjunction to 531 years.
//! The `refined` set (Jupiter 11.86, Saturn 29.46) drives the
//! conjunction-series table. Mars's coarse 1.8-year period is the
//! traditional round value, not the measured ~1.88.
//!
//! Body files hold one body per line: `name period unit`, where the
//! period is a rational (`9/5`) or decimal (`29.46`) literal. Blank
//! lines and `#` comments are ignored.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::kinematics::{Body, KinematicsError, Unit};
use crate::ratio::Ratio;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown body `{name}`; available: {}", available.join(", "))]
    UnknownBody {
        name: String,
        available: Vec<String>,
    },
    #[error("bad body definition on line {line}: {reason} in `{text}`")]
    BadBodyLine {
        line: usize,
        reason: String,
        text: String,
    },
    #[error(transparent)]
    Kinematics(#[from] KinematicsError),
}

/// Named built-in period sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogSet {
    /// Clock hands: second 1/60 h, minute 1 h, hour 12 h.
    Clock,
    /// Round planet periods: Mars 9/5, Jupiter 12, Saturn 30 years.
    Coarse,
    /// Jupiter 11.86, Saturn 29.46 years.
    Refined,
    /// Mars 1.8, Jupiter 11.8, Saturn 29.5 years.
    Alt,
}

impl CatalogSet {
    pub const ALL: [CatalogSet; 4] = [
        CatalogSet::Clock,
        CatalogSet::Coarse,
        CatalogSet::Refined,
        CatalogSet::Alt,
    ];
}

impl fmt::Display for CatalogSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogSet::Clock => write!(f, "clock"),
            CatalogSet::Coarse => write!(f, "coarse"),
            CatalogSet::Refined => write!(f, "refined"),
            CatalogSet::Alt => write!(f, "alt"),
        }
    }
}

impl FromStr for CatalogSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "clock" => Ok(CatalogSet::Clock),
            "coarse" => Ok(CatalogSet::Coarse),
            "refined" => Ok(CatalogSet::Refined),
            "alt" => Ok(CatalogSet::Alt),
            other => Err(format!(
                "unknown catalog `{other}` (expected clock, coarse, refined, or alt)"
            )),
        }
    }
}

fn must(name: &str, num: i128, den: i128, unit: Unit) -> Body {
    Body::new(name, Ratio::new(num, den).unwrap(), unit).unwrap()
}

/// The bodies of a built-in set.
pub fn catalog(set: CatalogSet) -> Vec<Body> {
    match set {
        CatalogSet::Clock => vec![
            must("second", 1, 60, Unit::Hours),
            must("minute", 1, 1, Unit::Hours),
            must("hour", 12, 1, Unit::Hours),
        ],
        CatalogSet::Coarse => vec![
            must("mars", 9, 5, Unit::Years),
            must("jupiter", 12, 1, Unit::Years),
            must("saturn", 30, 1, Unit::Years),
        ],
        CatalogSet::Refined => vec![
            must("jupiter", 593, 50, Unit::Years),
            must("saturn", 1473, 50, Unit::Years),
        ],
        CatalogSet::Alt => vec![
            must("mars", 9, 5, Unit::Years),
            must("jupiter", 59, 5, Unit::Years),
            must("saturn", 59, 2, Unit::Years),
        ],
    }
}

/// Case-insensitive lookup; the error lists every available name.
pub fn lookup<'a>(bodies: &'a [Body], name: &str) -> Result<&'a Body, CatalogError> {
    bodies
        .iter()
        .find(|b| b.name().eq_ignore_ascii_case(name))
        .ok_or_else(|| CatalogError::UnknownBody {
            name: name.to_string(),
            available: bodies.iter().map(|b| b.name().to_string()).collect(),
        })
}

/// Parses a body-definition file (`name period unit` per line).
pub fn parse_body_file(text: &str) -> Result<Vec<Body>, CatalogError> {
    let mut bodies = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let bad = |reason: String| CatalogError::BadBodyLine {
            line,
            reason,
            text: raw.trim().to_string(),
        };
        if fields.len() != 3 {
            return Err(bad(format!(
                "expected `name period unit`, found {} field(s)",
                fields.len()
            )));
        }
        let period: Ratio = fields[1].parse().map_err(|e| bad(format!("{e}")))?;
        let unit: Unit = fields[2].parse().map_err(bad)?;
        let body = Body::new(fields[0], period, unit).map_err(|e| bad(e.to_string()))?;
        bodies.push(body);
    }
    Ok(bodies)
}
