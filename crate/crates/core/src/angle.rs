//! Floating-point angle wrapping and circular distance.
//!
//! Shared by the series generator, the coordinate predicates, and the
//! simulation oracle. Exact (rational) angles live in
//! [`crate::kinematics::Angle`].

/// Wraps into `[0, 360)`.
pub fn wrap_deg(x: f64) -> f64 {
    let w = x.rem_euclid(360.0);
    // rem_euclid of a tiny negative value can round up to exactly 360.
    if w >= 360.0 {
        0.0
    } else {
        w
    }
}

/// Wraps into `(-180, 180]`.
pub fn wrap_signed_deg(x: f64) -> f64 {
    let w = wrap_deg(x);
    if w > 180.0 {
        w - 360.0
    } else {
        w
    }
}

/// Circular distance between two directions, in `[0, 180]`.
pub fn circular_distance_deg(a: f64, b: f64) -> f64 {
    let d = wrap_deg(a - b);
    d.min(360.0 - d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_stays_in_range() {
        assert_eq!(wrap_deg(720.0), 0.0);
        assert_eq!(wrap_deg(-30.0), 330.0);
        assert_eq!(wrap_deg(-1e-30), 0.0);
        assert!(wrap_deg(359.999_999) < 360.0);
    }

    #[test]
    fn circular_distance_handles_wraparound() {
        assert!((circular_distance_deg(359.9, 0.05) - 0.15).abs() < 1e-9);
        assert_eq!(circular_distance_deg(90.0, 270.0), 180.0);
        assert_eq!(circular_distance_deg(10.0, 10.0), 0.0);
    }

    #[test]
    fn signed_wrap_covers_half_open_interval() {
        assert_eq!(wrap_signed_deg(190.0), -170.0);
        assert_eq!(wrap_signed_deg(180.0), 180.0);
        assert_eq!(wrap_signed_deg(-190.0), 170.0);
    }
}
