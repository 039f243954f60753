//! Conjunction event series, trigon plane geometry, and the
//! synchronization-cycle search.
//!
//! Successive conjunctions of a pair are separated by the synodic
//! period `S` in time and by a fixed longitude advance `Δ` on the
//! reference circle, so event `n` sits at longitude `n·Δ mod 360`
//! after `n·S` time units. Consecutive events land ~Δ apart, which
//! for the Jupiter–Saturn pair groups events into three slowly
//! drifting families (`n mod 3`) whose members trace a slowly
//! rotating near-equilateral triangle — the trigon.
//!
//! `Δ` is an explicit parameter rather than always being derived from
//! the periods: the traditional value 245.56° does not match direct
//! evaluation of `(360/29.46)·19.85 ≈ 242.57°`, and keeping `Δ` free
//! lets either figure be reproduced. See [`advance_angle`] for the
//! formula path.
//!
//! Longitudes are computed in double precision by multiplication
//! (`n·Δ`, never repeated addition); values here are display-rounded,
//! not exact rationals.

use thiserror::Error;

use crate::angle::wrap_deg;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeriesError {
    #[error("{name} must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },
}

/// Parameters of a conjunction series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesParams {
    synodic: f64,
    advance_deg: f64,
    radius: f64,
    epoch_longitude_deg: f64,
}

impl SeriesParams {
    /// `advance_deg` is the longitude step Δ between consecutive
    /// events; `synodic` is the time step S in years.
    pub fn new(advance_deg: f64, synodic: f64) -> Result<Self, SeriesError> {
        if !(synodic > 0.0 && synodic.is_finite()) {
            return Err(SeriesError::NonPositive {
                name: "synodic",
                value: synodic,
            });
        }
        if !advance_deg.is_finite() {
            return Err(SeriesError::NonPositive {
                name: "advance",
                value: advance_deg,
            });
        }
        Ok(SeriesParams {
            synodic,
            advance_deg: wrap_deg(advance_deg),
            radius: 1.0,
            epoch_longitude_deg: 0.0,
        })
    }

    pub fn with_radius(mut self, radius: f64) -> Result<Self, SeriesError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(SeriesError::NonPositive {
                name: "radius",
                value: radius,
            });
        }
        self.radius = radius;
        Ok(self)
    }

    pub fn with_epoch_longitude(mut self, degrees: f64) -> Self {
        self.epoch_longitude_deg = wrap_deg(degrees);
        self
    }

    pub fn synodic(&self) -> f64 {
        self.synodic
    }

    pub fn advance_deg(&self) -> f64 {
        self.advance_deg
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn epoch_longitude_deg(&self) -> f64 {
        self.epoch_longitude_deg
    }
}

/// One conjunction of the series: the `index`-th return of the pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjunctionEvent {
    index: u32,
    elapsed: f64,
    longitude_deg: f64,
    family: u8,
}

impl ConjunctionEvent {
    pub fn index(&self) -> u32 {
        self.index
    }

    /// Time since the epoch event, `index · S`.
    pub fn elapsed(&self) -> f64 {
        self.elapsed
    }

    /// Longitude from the epoch event, `index · Δ mod 360`.
    pub fn longitude_deg(&self) -> f64 {
        self.longitude_deg
    }

    /// Residue class `index mod 3`.
    pub fn family(&self) -> u8 {
        self.family
    }
}

/// A cycle length `k` scored against the two synchronization criteria:
/// spatial (how far `k·Δ` lands from the origin longitude) and
/// calendar (how far `k·S` lands from a whole number of years).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleCandidate {
    k: u32,
    angular_offset_deg: f64,
    east: bool,
    time_offset: f64,
    total_years: f64,
    angular_record: bool,
    time_record: bool,
}

impl CycleCandidate {
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Circular distance of `k·Δ mod 360` from 0°, in `[0, 180]`.
    pub fn angular_offset_deg(&self) -> f64 {
        self.angular_offset_deg
    }

    /// Whether the cycle closes east of the origin (wrapped advance in
    /// `(0, 180]`) rather than west.
    pub fn east(&self) -> bool {
        self.east
    }

    /// Distance of `k·S` from the nearest whole time unit, in `[0, 0.5]`.
    pub fn time_offset(&self) -> f64 {
        self.time_offset
    }

    pub fn total_years(&self) -> f64 {
        self.total_years
    }

    /// True if this `k` strictly improved on every smaller `k`'s
    /// angular offset.
    pub fn angular_record(&self) -> bool {
        self.angular_record
    }

    /// True if this `k` strictly improved on every smaller `k`'s
    /// time offset.
    pub fn time_record(&self) -> bool {
        self.time_record
    }
}

/// Longitude swept by the slower body during one synodic period:
/// `(360/slow_period) · synodic`, wrapped into `[0, 360)`.
///
/// Evaluating this at the 11.86/29.46 periods gives ≈ 242.57°, not
/// the traditionally printed 245.56°; pass the traditional value
/// directly to [`SeriesParams::new`] to reproduce the classical table.
pub fn advance_angle(slow_period: f64, synodic: f64) -> f64 {
    assert!(
        slow_period > 0.0 && slow_period.is_finite(),
        "slow_period must be positive"
    );
    assert!(
        synodic >= 0.0 && synodic.is_finite(),
        "synodic must be >= 0"
    );
    wrap_deg(360.0 / slow_period * synodic)
}

/// Events `n = 0..count-1` of the series.
pub fn generate_series(params: &SeriesParams, count: u32) -> Vec<ConjunctionEvent> {
    (0..count)
        .map(|n| ConjunctionEvent {
            index: n,
            elapsed: f64::from(n) * params.synodic,
            longitude_deg: wrap_deg(params.epoch_longitude_deg + f64::from(n) * params.advance_deg),
            family: (n % 3) as u8,
        })
        .collect()
}

/// Plane positions of the first `count` events on a circle of the
/// configured radius: `(r·cos λ, r·sin λ)`.
pub fn trigon_points(params: &SeriesParams, count: u32) -> Vec<(f64, f64)> {
    generate_series(params, count)
        .iter()
        .map(|e| {
            let lambda = e.longitude_deg().to_radians();
            (params.radius * lambda.cos(), params.radius * lambda.sin())
        })
        .collect()
}

/// Partitions events by `index mod 3`. Within each family, consecutive
/// members sit a constant `(3Δ) mod 360` apart in longitude.
pub fn classify_families(events: &[ConjunctionEvent]) -> [Vec<ConjunctionEvent>; 3] {
    let mut families: [Vec<ConjunctionEvent>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for e in events {
        families[usize::from(e.family())].push(*e);
    }
    families
}

/// Scores every cycle length `k = 1..=k_max` and returns those worth
/// reporting: all `k` within either tolerance, plus the running-best
/// (record-setting) `k` for each criterion independently. Records
/// require strict improvement. Sorted by `k`.
pub fn cycle_search(
    params: &SeriesParams,
    k_max: u32,
    angular_tol_deg: f64,
    time_tol: f64,
) -> Vec<CycleCandidate> {
    assert!(k_max >= 1, "k_max must be at least 1");
    assert!(
        angular_tol_deg >= 0.0 && time_tol >= 0.0,
        "tolerances must be non-negative"
    );
    let mut out = Vec::new();
    let mut best_angular = f64::INFINITY;
    let mut best_time = f64::INFINITY;
    for k in 1..=k_max {
        let wrapped = wrap_deg(f64::from(k) * params.advance_deg);
        let angular_offset = wrapped.min(360.0 - wrapped);
        let total = f64::from(k) * params.synodic;
        let time_offset = (total - total.round()).abs();

        let angular_record = angular_offset < best_angular;
        let time_record = time_offset < best_time;
        if angular_record {
            best_angular = angular_offset;
        }
        if time_record {
            best_time = time_offset;
        }

        if angular_record
            || time_record
            || angular_offset <= angular_tol_deg
            || time_offset <= time_tol
        {
            out.push(CycleCandidate {
                k,
                angular_offset_deg: angular_offset,
                east: wrapped <= 180.0,
                time_offset,
                total_years: total,
                angular_record,
                time_record,
            });
        }
    }
    out
}
