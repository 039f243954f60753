//! Simultaneous conjunction of several bodies.
//!
//! All bodies starting together are next aligned after the least
//! common integer multiple of the pairwise synodic periods. For any
//! spanning set of pairs the lcm is the same, so the fold runs over
//! every pair and the redundancy doubles as a consistency check on
//! the arithmetic.
//!
//! Periods are exact rationals by construction, which is what makes a
//! common period exist at all; with incommensurable periods a perfect
//! multi-body conjunction need never recur.

use thiserror::Error;

use crate::kinematics::{synodic_period, Body, KinematicsError};
use crate::ratio::{lcm_ratio, Ratio, RatioError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlignmentError {
    #[error("alignment needs at least 2 bodies, got {0}")]
    TooFewBodies(usize),
    #[error(transparent)]
    Kinematics(#[from] KinematicsError),
    #[error(transparent)]
    Ratio(#[from] RatioError),
}

/// Synodic period of one pair, labeled by body names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSynodic {
    pub first: String,
    pub second: String,
    pub synodic: Ratio,
}

/// Result of an alignment computation: every pairwise synodic period
/// and their least common integer multiple.
#[derive(Debug, Clone, PartialEq)]
pub struct AlignmentReport {
    bodies: Vec<Body>,
    pairwise: Vec<PairSynodic>,
    period: Ratio,
}

impl AlignmentReport {
    pub fn bodies(&self) -> &[Body] {
        &self.bodies
    }

    pub fn pairwise(&self) -> &[PairSynodic] {
        &self.pairwise
    }

    /// The least positive time that is an integer multiple of every
    /// pairwise synodic period.
    pub fn period(&self) -> Ratio {
        self.period
    }
}

/// Mean interval between simultaneous conjunctions of all `bodies`.
///
/// Requires at least two bodies with pairwise distinct periods in the
/// same unit. Duplicated periods make a pair degenerate (never
/// separating) and are rejected.
pub fn alignment_period(bodies: &[Body]) -> Result<AlignmentReport, AlignmentError> {
    if bodies.len() < 2 {
        return Err(AlignmentError::TooFewBodies(bodies.len()));
    }
    let mut pairwise = Vec::new();
    for (i, a) in bodies.iter().enumerate() {
        for b in &bodies[i + 1..] {
            pairwise.push(PairSynodic {
                first: a.name().to_string(),
                second: b.name().to_string(),
                synodic: synodic_period(a, b)?,
            });
        }
    }

    let fold = |pairs: &[&PairSynodic]| -> Result<Ratio, AlignmentError> {
        let mut acc = pairs[0].synodic;
        for p in &pairs[1..] {
            acc = lcm_ratio(acc, p.synodic)?;
        }
        Ok(acc)
    };

    let all: Vec<&PairSynodic> = pairwise.iter().collect();
    let period = fold(&all)?;

    // A spanning star of pairs alone determines the alignment period;
    // folding over all pairs must agree with it.
    let star: Vec<&PairSynodic> = pairwise
        .iter()
        .filter(|p| p.first == bodies[0].name())
        .collect();
    if !star.is_empty() {
        let star_period = fold(&star)?;
        assert_eq!(
            star_period, period,
            "pairwise lcm fold is inconsistent: star {star_period} vs all-pairs {period}"
        );
    }
    // For three bodies, any two pairs already determine the period.
    if bodies.len() == 3 {
        for skip in 0..3 {
            let two: Vec<&PairSynodic> = pairwise
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, p)| p)
                .collect();
            let partial = fold(&two)?;
            assert_eq!(
                partial, period,
                "two-pair lcm disagrees with three-pair lcm"
            );
        }
    }

    Ok(AlignmentReport {
        bodies: bodies.to_vec(),
        pairwise,
        period,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, CatalogSet};
    use crate::kinematics::{position, Unit};

    fn r(num: i128, den: i128) -> Ratio {
        Ratio::new(num, den).unwrap()
    }

    #[test]
    fn clock_hands_align_every_12_hours() {
        let report = alignment_period(&catalog(CatalogSet::Clock)).unwrap();
        assert_eq!(report.period(), Ratio::from_int(12));
        let synodics: Vec<Ratio> = report.pairwise().iter().map(|p| p.synodic).collect();
        assert!(synodics.contains(&r(1, 59))); // second-minute
        assert!(synodics.contains(&r(12, 719))); // second-hour
        assert!(synodics.contains(&r(12, 11))); // minute-hour
    }

    #[test]
    fn coarse_planets_align_every_180_years() {
        let report = alignment_period(&catalog(CatalogSet::Coarse)).unwrap();
        assert_eq!(report.period(), Ratio::from_int(180));
        let synodics: Vec<Ratio> = report.pairwise().iter().map(|p| p.synodic).collect();
        assert!(synodics.contains(&r(36, 17)));
        assert!(synodics.contains(&Ratio::from_int(20)));
        assert!(synodics.contains(&r(90, 47)));
    }

    #[test]
    fn alt_periods_move_the_triple_conjunction_to_531_years() {
        let report = alignment_period(&catalog(CatalogSet::Alt)).unwrap();
        assert_eq!(report.period(), Ratio::from_int(531));
        let js = report
            .pairwise()
            .iter()
            .find(|p| p.first == "jupiter" && p.second == "saturn")
            .unwrap();
        assert_eq!(js.synodic, r(59, 3));
    }

    #[test]
    fn two_bodies_reduce_to_the_synodic_period() {
        let coarse = catalog(CatalogSet::Coarse);
        let report = alignment_period(&coarse[1..]).unwrap(); // jupiter, saturn
        assert_eq!(report.period(), Ratio::from_int(20));
        assert_eq!(report.pairwise().len(), 1);
    }

    #[test]
    fn all_bodies_meet_at_the_alignment_period() {
        for set in [CatalogSet::Clock, CatalogSet::Coarse, CatalogSet::Alt] {
            let bodies = catalog(set);
            let report = alignment_period(&bodies).unwrap();
            let t = report.period();
            let reference = position(&bodies[0], t).unwrap();
            for b in &bodies[1..] {
                assert_eq!(position(b, t).unwrap(), reference, "{set}: {}", b.name());
            }
            // The period is an integer multiple of every pairwise synodic.
            for p in report.pairwise() {
                assert!(
                    (t / p.synodic).is_integer(),
                    "{set}: {} {}",
                    p.first,
                    p.second
                );
            }
        }
    }

    #[test]
    fn no_smaller_multiple_of_the_first_synodic_aligns_everyone() {
        let bodies = catalog(CatalogSet::Coarse);
        let report = alignment_period(&bodies).unwrap();
        let first = report.pairwise()[0].synodic; // mars-jupiter 36/17
        let steps = (report.period() / first).numer(); // exact integer count
        for k in 1..steps {
            let t = first * Ratio::from_int(k);
            let reference = position(&bodies[0], t).unwrap();
            let all_equal = bodies[1..]
                .iter()
                .all(|b| position(b, t).unwrap() == reference);
            assert!(!all_equal, "premature alignment at {t}");
        }
    }

    #[test]
    fn degenerate_and_undersized_inputs_are_rejected() {
        let a = Body::new("a", Ratio::from_int(5), Unit::Years).unwrap();
        let b = Body::new("b", Ratio::from_int(5), Unit::Years).unwrap();
        assert!(matches!(
            alignment_period(&[a.clone(), b]),
            Err(AlignmentError::Kinematics(KinematicsError::DegeneratePair(
                _
            )))
        ));
        assert!(matches!(
            alignment_period(&[a]),
            Err(AlignmentError::TooFewBodies(1))
        ));
        assert!(matches!(
            alignment_period(&[]),
            Err(AlignmentError::TooFewBodies(0))
        ));
    }
}
