//! Uniform circular motion: bodies, angular velocities, exact angular
//! positions, and the synodic (conjunction) period.
//!
//! A body with period `T` sweeps `360/T` degrees per time unit. Two
//! bodies starting together meet again whenever their relative angle
//! is a multiple of 360°, which happens every
//! `S = t_a * t_b / (t_b - t_a)` time units — the synodic period. All
//! of this is computed in exact rational arithmetic; conjunction
//! equalities below are exact, not approximate.
//!
//! Earth's own motion cancels in planet–planet conjunctions (the
//! relative angular velocity seen from Earth equals the heliocentric
//! difference), so planet pairs are treated heliocentrically.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::ratio::{self, Ratio, RatioError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KinematicsError {
    #[error("period must be positive, got {0}")]
    NonPositivePeriod(String),
    #[error("unit mismatch: {0} vs {1}")]
    UnitMismatch(Unit, Unit),
    #[error("degenerate pair: bodies never separate (equal periods {0})")]
    DegeneratePair(String),
    #[error(transparent)]
    Ratio(#[from] RatioError),
}

/// Time unit a body's period is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    Hours,
    Years,
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unit::Hours => write!(f, "hours"),
            Unit::Years => write!(f, "years"),
        }
    }
}

impl FromStr for Unit {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "h" | "hr" | "hrs" | "hour" | "hours" => Ok(Unit::Hours),
            "y" | "yr" | "yrs" | "year" | "years" => Ok(Unit::Years),
            other => Err(format!("unknown unit `{other}`")),
        }
    }
}

/// A named object revolving uniformly with an exact period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Body {
    name: String,
    period: Ratio,
    unit: Unit,
}

impl Body {
    pub fn new(
        name: impl Into<String>,
        period: Ratio,
        unit: Unit,
    ) -> Result<Self, KinematicsError> {
        if !period.is_positive() {
            return Err(KinematicsError::NonPositivePeriod(period.to_string()));
        }
        Ok(Body {
            name: name.into(),
            period,
            unit,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn period(&self) -> Ratio {
        self.period
    }

    pub fn unit(&self) -> Unit {
        self.unit
    }
}

/// Angular velocity in degrees per time unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AngularVelocity {
    value: Ratio,
    unit: Unit,
}

impl AngularVelocity {
    pub fn value(&self) -> Ratio {
        self.value
    }

    pub fn unit(&self) -> Unit {
        self.unit
    }
}

/// An exact angle normalized into `[0, 360)` degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle(Ratio);

const FULL_TURN: Ratio = Ratio::from_int(360);

impl Angle {
    pub const ZERO: Angle = Angle(ratio::ZERO);

    /// Reduces any rational degree value into `[0, 360)`.
    pub fn from_degrees(degrees: Ratio) -> Result<Self, RatioError> {
        Ok(Angle(degrees.rem_euclid(FULL_TURN)?))
    }

    pub fn degrees(&self) -> Ratio {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Exact circular distance to another angle, in `[0, 180]`.
    pub fn circular_distance(&self, other: &Angle) -> Ratio {
        let d = (self.0 - other.0).rem_euclid(FULL_TURN).expect("mod 360");
        let complement = FULL_TURN - d;
        if d <= complement {
            d
        } else {
            complement
        }
    }
}

impl fmt::Display for Angle {
    /// Formats as fixed-point degrees; precision (default 2) affects
    /// display only, never the stored value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places = f.precision().unwrap_or(2);
        write!(f, "{}°", self.0.to_decimal_string(places))
    }
}

/// `360 / period`, exact.
pub fn angular_velocity(body: &Body) -> Result<AngularVelocity, KinematicsError> {
    Ok(AngularVelocity {
        value: FULL_TURN.try_div(body.period)?,
        unit: body.unit,
    })
}

/// Angular velocity of `body` relative to `reference` (signed).
pub fn relative_angular_velocity(body: &Body, reference: &Body) -> Result<Ratio, KinematicsError> {
    if body.unit != reference.unit {
        return Err(KinematicsError::UnitMismatch(body.unit, reference.unit));
    }
    let wb = angular_velocity(body)?.value;
    let wr = angular_velocity(reference)?.value;
    Ok(wb.try_sub(wr)?)
}

/// Position at time `t` for a body starting at angle 0:
/// `(360/period) * t  mod 360`, exact for rational `t`.
pub fn position(body: &Body, t: Ratio) -> Result<Angle, KinematicsError> {
    let swept = angular_velocity(body)?.value.try_mul(t)?;
    Ok(Angle::from_degrees(swept)?)
}

/// Mean time between successive conjunctions of two bodies:
/// `t_a * t_b / (t_b - t_a)` with `t_a < t_b` (arguments are reordered
/// internally if given the other way around).
///
/// Equal periods are rejected: such a pair is always or never in
/// conjunction and the formula is singular.
///
/// ```
/// use conjunct_core::kinematics::{synodic_period, Body, Unit};
/// use conjunct_core::ratio::Ratio;
///
/// let jupiter = Body::new("jupiter", Ratio::from_int(12), Unit::Years)?;
/// let saturn = Body::new("saturn", Ratio::from_int(30), Unit::Years)?;
/// assert_eq!(synodic_period(&jupiter, &saturn)?, Ratio::from_int(20));
/// # Ok::<(), conjunct_core::kinematics::KinematicsError>(())
/// ```
pub fn synodic_period(a: &Body, b: &Body) -> Result<Ratio, KinematicsError> {
    if a.unit != b.unit {
        return Err(KinematicsError::UnitMismatch(a.unit, b.unit));
    }
    if a.period == b.period {
        return Err(KinematicsError::DegeneratePair(a.period.to_string()));
    }
    let (fast, slow) = if a.period < b.period { (a, b) } else { (b, a) };
    let product = fast.period.try_mul(slow.period)?;
    let gap = slow.period.try_sub(fast.period)?;
    Ok(product.try_div(gap)?)
}

/// All conjunction instants `k·S` in `(0, horizon]`, exact.
pub fn conjunction_times(
    a: &Body,
    b: &Body,
    horizon: Ratio,
) -> Result<Vec<Ratio>, KinematicsError> {
    let s = synodic_period(a, b)?;
    let count = horizon.try_div(s)?.floor().max(0);
    let mut times = Vec::with_capacity(count as usize);
    for k in 1..=count {
        times.push(s.try_mul(Ratio::from_int(k))?);
    }
    Ok(times)
}
