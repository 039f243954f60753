//! Brute-force verification by simulation.
//!
//! Instead of trusting the closed-form results, this module steps
//! uniform circular motion through small time increments, watches the
//! wrapped angular difference of a pair as a continuous signed
//! function, and refines each sign change by bisection. Tracking the
//! signed difference (rather than raw mod-360 values) keeps 360°
//! wraps from masquerading as conjunctions; with `dt < S/2` the
//! relative angle moves less than half a turn per step, so a branch
//! jump and a genuine zero crossing are distinguishable and no event
//! can be missed.
//!
//! Bisection, not Newton: the tracked function is piecewise linear in
//! the uniform model, so bracketing convergence is guaranteed.

use thiserror::Error;

use crate::angle::{circular_distance_deg, wrap_deg, wrap_signed_deg};
use crate::kinematics::{synodic_period, Body, KinematicsError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),
    #[error(
        "step too coarse for Nyquist-style guarantee: dt = {dt} must be below S/2 = {half_synodic}"
    )]
    StepTooCoarse { dt: f64, half_synodic: f64 },
    #[error("alignment needs at least 2 bodies, got {0}")]
    TooFewBodies(usize),
    #[error(transparent)]
    Kinematics(#[from] KinematicsError),
}

/// Time grid and refinement settings for a simulation run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    dt: f64,
    t_end: f64,
    refine_tol: f64,
}

impl SimConfig {
    pub fn new(dt: f64, t_end: f64, refine_tol: f64) -> Result<Self, OracleError> {
        if !(dt > 0.0 && dt.is_finite() && t_end > dt && t_end.is_finite()) {
            return Err(OracleError::InvalidConfig(format!(
                "need 0 < dt < t_end, got dt = {dt}, t_end = {t_end}"
            )));
        }
        if !(refine_tol > 0.0 && refine_tol < dt) {
            return Err(OracleError::InvalidConfig(format!(
                "need 0 < refine_tol < dt, got refine_tol = {refine_tol}, dt = {dt}"
            )));
        }
        Ok(SimConfig {
            dt,
            t_end,
            refine_tol,
        })
    }

    /// Grid step `S/100` for the pair, refinement tolerance capped at
    /// `1e-9` time units.
    pub fn auto_for_pair(a: &Body, b: &Body, t_end: f64) -> Result<Self, OracleError> {
        let s = synodic_period(a, b)?.to_f64();
        let dt = s / 100.0;
        SimConfig::new(dt, t_end, (dt * 1e-5).min(1e-9))
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn refine_tol(&self) -> f64 {
        self.refine_tol
    }
}

fn position_deg(body: &Body, t: f64) -> f64 {
    wrap_deg(360.0 / body.period().to_f64() * t)
}

/// Signed wrapped angle from `b` to `a` at time `t`, in `(-180, 180]`.
fn relative_angle_deg(a: &Body, b: &Body, t: f64) -> f64 {
    wrap_signed_deg(position_deg(a, t) - position_deg(b, t))
}

fn bisect<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut f_lo = f(lo);
    // Shrink to a quarter of the requested tolerance so the returned
    // midpoint sits well inside it.
    for _ in 0..200 {
        if hi - lo < tol * 0.25 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // below f64 resolution
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_lo < 0.0) == (f_mid < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// All conjunction instants of a pair in `(0, t_end]`, each within
/// `refine_tol` of a true conjunction. Requires `dt < S/2`; no event
/// is missed under that guarantee.
pub fn detect_pair_conjunctions(
    a: &Body,
    b: &Body,
    cfg: &SimConfig,
) -> Result<Vec<f64>, OracleError> {
    let synodic = synodic_period(a, b)?.to_f64();
    if cfg.dt >= synodic / 2.0 {
        return Err(OracleError::StepTooCoarse {
            dt: cfg.dt,
            half_synodic: synodic / 2.0,
        });
    }

    let f = |t: f64| relative_angle_deg(a, b, t);
    let mut events = Vec::new();
    let mut prev_t = 0.0;
    let mut prev_f = f(0.0);
    let mut k: u64 = 1;
    loop {
        let t = (k as f64 * cfg.dt).min(cfg.t_end);
        let ft = f(t);
        if ft == 0.0 {
            events.push(t);
        } else if prev_f != 0.0 && (prev_f < 0.0) != (ft < 0.0) && (ft - prev_f).abs() < 180.0 {
            events.push(bisect(&f, prev_t, t, cfg.refine_tol));
        }
        if t >= cfg.t_end {
            break;
        }
        prev_t = t;
        prev_f = ft;
        k += 1;
    }
    Ok(events)
}

/// Earliest instant in `(0, t_end]` at which every pair of bodies is
/// within `angular_tol_deg` of conjunction, refined to the underlying
/// pair-conjunction time; `None` if the horizon ends first.
///
/// Any simultaneous conjunction of all bodies is in particular a
/// conjunction of the first two, so the scan runs over the refined
/// conjunction events of that pair and checks the remaining pairwise
/// separations at each.
pub fn detect_alignment(
    bodies: &[Body],
    angular_tol_deg: f64,
    cfg: &SimConfig,
) -> Result<Option<f64>, OracleError> {
    if bodies.len() < 2 {
        return Err(OracleError::TooFewBodies(bodies.len()));
    }
    let unit = bodies[0].unit();
    for b in &bodies[1..] {
        if b.unit() != unit {
            return Err(KinematicsError::UnitMismatch(unit, b.unit()).into());
        }
    }
    let events = detect_pair_conjunctions(&bodies[0], &bodies[1], cfg)?;
    'events: for t in events {
        for (i, a) in bodies.iter().enumerate() {
            for b in &bodies[i + 1..] {
                let gap = circular_distance_deg(position_deg(a, t), position_deg(b, t));
                if gap > angular_tol_deg {
                    continue 'events;
                }
            }
        }
        return Ok(Some(t));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, CatalogSet};
    use crate::kinematics::Unit;
    use crate::ratio::Ratio;

    fn body(name: &str, num: i128, den: i128, unit: Unit) -> Body {
        Body::new(name, Ratio::new(num, den).unwrap(), unit).unwrap()
    }

    #[test]
    fn clock_pair_yields_eleven_conjunctions_in_twelve_hours() {
        let minute = body("minute", 1, 1, Unit::Hours);
        let hour = body("hour", 12, 1, Unit::Hours);
        let cfg = SimConfig::auto_for_pair(&minute, &hour, 12.0).unwrap();
        let events = detect_pair_conjunctions(&minute, &hour, &cfg).unwrap();
        assert_eq!(events.len(), 11);
        for (i, t) in events.iter().enumerate() {
            let expected = (i as f64 + 1.0) * 12.0 / 11.0;
            assert!(
                (t - expected).abs() <= cfg.refine_tol(),
                "event {i}: {t} vs {expected}"
            );
        }
    }

    #[test]
    fn horizon_shorter_than_synodic_yields_nothing() {
        let minute = body("minute", 1, 1, Unit::Hours);
        let hour = body("hour", 12, 1, Unit::Hours);
        let cfg = SimConfig::new(0.01, 1.0, 1e-9).unwrap();
        assert!(detect_pair_conjunctions(&minute, &hour, &cfg)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn coarse_great_conjunctions_land_on_multiples_of_twenty() {
        let jupiter = body("jupiter", 12, 1, Unit::Years);
        let saturn = body("saturn", 30, 1, Unit::Years);
        let cfg = SimConfig::auto_for_pair(&jupiter, &saturn, 100.0).unwrap();
        let events = detect_pair_conjunctions(&jupiter, &saturn, &cfg).unwrap();
        assert_eq!(events.len(), 5);
        for (event, expected) in events.iter().zip([20.0, 40.0, 60.0, 80.0, 100.0]) {
            assert!((event - expected).abs() <= cfg.refine_tol());
        }
    }

    #[test]
    fn too_coarse_a_step_is_rejected() {
        let jupiter = body("jupiter", 12, 1, Unit::Years);
        let saturn = body("saturn", 30, 1, Unit::Years);
        let cfg = SimConfig::new(10.0, 100.0, 1e-9).unwrap();
        assert!(matches!(
            detect_pair_conjunctions(&jupiter, &saturn, &cfg),
            Err(OracleError::StepTooCoarse { .. })
        ));
    }

    #[test]
    fn config_validation() {
        assert!(SimConfig::new(0.0, 1.0, 1e-9).is_err());
        assert!(SimConfig::new(1.0, 0.5, 1e-9).is_err());
        assert!(SimConfig::new(0.1, 1.0, 0.2).is_err());
        assert!(SimConfig::new(0.1, 1.0, 0.0).is_err());
    }

    #[test]
    fn clock_hands_align_at_noon_and_midnight_only() {
        let hands = catalog(CatalogSet::Clock);
        let cfg = SimConfig::auto_for_pair(&hands[0], &hands[1], 13.0).unwrap();
        let t = detect_alignment(&hands, 0.01, &cfg).unwrap().unwrap();
        assert!((t - 12.0).abs() < 1e-6, "got {t}");
        // Nothing before 12 hours.
        let cfg_short = SimConfig::auto_for_pair(&hands[0], &hands[1], 11.9).unwrap();
        assert_eq!(detect_alignment(&hands, 0.01, &cfg_short).unwrap(), None);
    }

    #[test]
    fn single_pair_alignment_matches_first_conjunction() {
        let jupiter = body("jupiter", 12, 1, Unit::Years);
        let saturn = body("saturn", 30, 1, Unit::Years);
        let pair = [jupiter.clone(), saturn.clone()];
        let cfg = SimConfig::auto_for_pair(&jupiter, &saturn, 50.0).unwrap();
        let aligned = detect_alignment(&pair, 0.01, &cfg).unwrap().unwrap();
        let first = detect_pair_conjunctions(&jupiter, &saturn, &cfg).unwrap()[0];
        assert_eq!(aligned, first);
    }

    #[test]
    fn coarse_triple_conjunction_recurs_after_180_years() {
        let planets = catalog(CatalogSet::Coarse);
        let cfg = SimConfig::auto_for_pair(&planets[0], &planets[1], 200.0).unwrap();
        let t = detect_alignment(&planets, 0.01, &cfg).unwrap().unwrap();
        assert!((t - 180.0).abs() < 1e-6, "got {t}");
    }

    #[test]
    fn mixed_units_are_rejected() {
        let h = body("h", 1, 1, Unit::Hours);
        let y1 = body("y1", 2, 1, Unit::Years);
        let y2 = body("y2", 3, 1, Unit::Years);
        let cfg = SimConfig::new(0.001, 1.0, 1e-9).unwrap();
        assert!(detect_alignment(&[y1, y2, h], 0.1, &cfg).is_err());
    }
}
