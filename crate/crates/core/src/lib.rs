//! A clock model of planetary conjunctions.
//!
//! Bodies revolve uniformly on circles with exact rational periods,
//! like the hands of a clock. From that single assumption the crate
//! computes, in exact arithmetic wherever the inputs are rational:
//!
//! - synodic periods `t_a·t_b/(t_b − t_a)` and exact conjunction
//!   instants ([`kinematics`]),
//! - conjunction event series on the reference circle, trigon
//!   geometry, and synchronization-cycle searches ([`series`]),
//! - simultaneous multi-body conjunction periods via the lcm of
//!   rationals `lcm(a/b, c/d) = lcm(a,c)/gcd(b,d)` ([`alignment`],
//!   [`ratio`]),
//! - ecliptic ↔ equatorial coordinate transforms and conjunction
//!   predicates ([`coords`]).
//!
//! Every analytic result can be cross-checked against a brute-force
//! time-stepping simulation ([`oracle`]).

pub mod alignment;
pub mod angle;
pub mod catalog;
pub mod coords;
pub mod kinematics;
pub mod oracle;
pub mod ratio;
pub mod series;

pub use alignment::{alignment_period, AlignmentReport};
pub use catalog::{catalog, CatalogSet};
pub use kinematics::{position, synodic_period, Angle, Body, Unit};
pub use oracle::{detect_alignment, detect_pair_conjunctions, SimConfig};
pub use ratio::{lcm_ratio, Ratio};
pub use series::{cycle_search, generate_series, SeriesParams};
