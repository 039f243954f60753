//! Geocentric spherical coordinates: the ecliptic and equatorial
//! frames, the obliquity rotation between them, sexagesimal parsing
//! and formatting, and conjunction predicates.
//!
//! The two frames share the x-axis, which points at the vernal
//! equinox; their fundamental planes meet at the obliquity angle
//! (≈ 23.4°). The change of frame is a single rotation about that
//! shared axis, so the equinox direction `(1, 0, 0)` is a fixed
//! vector (eigenvalue 1) of the transform.
//!
//! Matrix convention: [`ecl_to_eq_matrix`] acts on column vectors of
//! ecliptic components and produces equatorial components. The same
//! transform is often written in transposed form for row vectors;
//! only the sign of the two `sin` entries moves. The convention here
//! is pinned by two facts it must reproduce: the ecliptic north pole
//! lies at RA 18h, declination `90° − φ`, and the point at ecliptic
//! longitude 90° on the ecliptic has declination `+φ`.

use std::str::FromStr;

use thiserror::Error;

use crate::angle::{circular_distance_deg, wrap_deg};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoordsError {
    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: f64 },
    #[error("malformed sexagesimal literal `{input}`: {reason}")]
    ParseSexagesimal { input: String, reason: String },
}

/// Angle between the ecliptic and equatorial planes, degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Obliquity(f64);

impl Obliquity {
    pub fn new(degrees: f64) -> Result<Self, CoordsError> {
        if !(0.0..90.0).contains(&degrees) {
            return Err(CoordsError::OutOfRange {
                what: "obliquity",
                value: degrees,
            });
        }
        Ok(Obliquity(degrees))
    }

    pub fn degrees(&self) -> f64 {
        self.0
    }
}

impl Default for Obliquity {
    fn default() -> Self {
        Obliquity(23.4)
    }
}

/// Position on the celestial sphere in the ecliptic frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EclipticCoord {
    longitude_deg: f64,
    latitude_deg: f64,
}

impl EclipticCoord {
    pub fn new(longitude_deg: f64, latitude_deg: f64) -> Result<Self, CoordsError> {
        if !(-90.0..=90.0).contains(&latitude_deg) {
            return Err(CoordsError::OutOfRange {
                what: "ecliptic latitude",
                value: latitude_deg,
            });
        }
        if !longitude_deg.is_finite() {
            return Err(CoordsError::OutOfRange {
                what: "ecliptic longitude",
                value: longitude_deg,
            });
        }
        Ok(EclipticCoord {
            longitude_deg: if latitude_deg.abs() == 90.0 {
                0.0
            } else {
                wrap_deg(longitude_deg)
            },
            latitude_deg,
        })
    }

    pub fn longitude_deg(&self) -> f64 {
        self.longitude_deg
    }

    pub fn latitude_deg(&self) -> f64 {
        self.latitude_deg
    }

    /// At the poles the longitude is undefined and stored as 0 by
    /// convention.
    pub fn is_polar(&self) -> bool {
        self.latitude_deg.abs() == 90.0
    }
}

/// Position on the celestial sphere in the equatorial frame. Right
/// ascension is kept in hours (24h = 360°).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquatorialCoord {
    ra_hours: f64,
    declination_deg: f64,
}

impl EquatorialCoord {
    pub fn new(ra_hours: f64, declination_deg: f64) -> Result<Self, CoordsError> {
        if !(-90.0..=90.0).contains(&declination_deg) {
            return Err(CoordsError::OutOfRange {
                what: "declination",
                value: declination_deg,
            });
        }
        if !ra_hours.is_finite() {
            return Err(CoordsError::OutOfRange {
                what: "right ascension",
                value: ra_hours,
            });
        }
        Ok(EquatorialCoord {
            ra_hours: if declination_deg.abs() == 90.0 {
                0.0
            } else {
                wrap_deg(ra_hours * 15.0) / 15.0
            },
            declination_deg,
        })
    }

    pub fn ra_hours(&self) -> f64 {
        self.ra_hours
    }

    pub fn declination_deg(&self) -> f64 {
        self.declination_deg
    }

    /// At the poles the right ascension is undefined and stored as 0
    /// by convention.
    pub fn is_polar(&self) -> bool {
        self.declination_deg.abs() == 90.0
    }
}

/// A 3×3 rotation matrix acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3 {
    m: [[f64; 3]; 3],
}

impl Rotation3 {
    pub fn rows(&self) -> [[f64; 3]; 3] {
        self.m
    }

    pub fn apply(&self, v: [f64; 3]) -> [f64; 3] {
        let m = &self.m;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }

    pub fn transpose(&self) -> Rotation3 {
        let m = &self.m;
        Rotation3 {
            m: [
                [m[0][0], m[1][0], m[2][0]],
                [m[0][1], m[1][1], m[2][1]],
                [m[0][2], m[1][2], m[2][2]],
            ],
        }
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Max absolute deviation of `MᵀM` from the identity.
    pub fn orthogonality_error(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let dot: f64 = self.m.iter().map(|row| row[i] * row[j]).sum();
                let expected = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - expected).abs());
            }
        }
        worst
    }
}

/// Rotation taking ecliptic components to equatorial components.
/// The first row and column are exactly `(1, 0, 0)`: the vernal
/// equinox direction is fixed.
pub fn ecl_to_eq_matrix(obliquity: Obliquity) -> Rotation3 {
    let phi = obliquity.degrees().to_radians();
    let (s, c) = phi.sin_cos();
    Rotation3 {
        m: [[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]],
    }
}

fn to_cartesian(lon_deg: f64, lat_deg: f64) -> [f64; 3] {
    let lon = lon_deg.to_radians();
    let lat = lat_deg.to_radians();
    [lat.cos() * lon.cos(), lat.cos() * lon.sin(), lat.sin()]
}

// Below this in-plane magnitude a vector counts as polar: the
// longitude is undefined there and pinned to 0 instead of whatever
// atan2 makes of rounding dust.
const POLE_EPS: f64 = 1e-12;

fn to_spherical(v: [f64; 3]) -> (f64, f64) {
    if v[0].hypot(v[1]) < POLE_EPS {
        return (0.0, if v[2] >= 0.0 { 90.0 } else { -90.0 });
    }
    let lat = v[2].clamp(-1.0, 1.0).asin().to_degrees();
    let lon = wrap_deg(v[1].atan2(v[0]).to_degrees());
    (lon, lat)
}

/// Ecliptic → equatorial via the obliquity rotation.
pub fn ecl_to_eq(c: &EclipticCoord, obliquity: Obliquity) -> EquatorialCoord {
    let v = to_cartesian(c.longitude_deg, c.latitude_deg);
    let w = ecl_to_eq_matrix(obliquity).apply(v);
    let (lon, lat) = to_spherical(w);
    EquatorialCoord {
        ra_hours: lon / 15.0,
        declination_deg: lat,
    }
}

/// Equatorial → ecliptic via the transposed rotation.
pub fn eq_to_ecl(c: &EquatorialCoord, obliquity: Obliquity) -> EclipticCoord {
    let v = to_cartesian(c.ra_hours * 15.0, c.declination_deg);
    let w = ecl_to_eq_matrix(obliquity).transpose().apply(v);
    let (lon, lat) = to_spherical(w);
    EclipticCoord {
        longitude_deg: lon,
        latitude_deg: lat,
    }
}

/// Which sexagesimal notation a value uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SexKind {
    /// `20h 10m 58s`
    Hours,
    /// `300° 26′ 17″`
    Degrees,
}

impl SexKind {
    fn unit_suffixes(&self) -> [&'static [&'static str]; 3] {
        match self {
            SexKind::Hours => [&["h"], &["m"], &["s"]],
            SexKind::Degrees => [&["°", "d"], &["′", "'"], &["″", "\"", "''"]],
        }
    }

    fn canonical(&self) -> [&'static str; 3] {
        match self {
            SexKind::Hours => ["h", "m", "s"],
            SexKind::Degrees => ["°", "′", "″"],
        }
    }
}

/// Parses `20h 10m 58s` or `300° 26′ 17″` (ASCII `'`/`"` accepted) to
/// decimal hours or degrees. Minutes and seconds must be below 60.
pub fn parse_sexagesimal(text: &str, kind: SexKind) -> Result<f64, CoordsError> {
    let err = |reason: &str| CoordsError::ParseSexagesimal {
        input: text.to_string(),
        reason: reason.to_string(),
    };
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != 3 {
        return Err(err("expected three space-separated components"));
    }
    let suffixes = kind.unit_suffixes();
    let mut values = [0.0f64; 3];
    for (i, raw) in parts.iter().enumerate() {
        let body = suffixes[i]
            .iter()
            .find_map(|suf| raw.strip_suffix(suf))
            .ok_or_else(|| err(&format!("component {} lacks its unit suffix", i + 1)))?;
        let allow_sign = i == 0;
        let digits = if allow_sign {
            body.strip_prefix(['-', '+']).unwrap_or(body)
        } else {
            body
        };
        let fractional_ok = i == 2;
        let well_formed = if fractional_ok {
            !digits.is_empty()
                && digits.bytes().all(|b| b.is_ascii_digit() || b == b'.')
                && digits.bytes().filter(|b| *b == b'.').count() <= 1
        } else {
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !well_formed {
            return Err(err(&format!("component {} is not a number", i + 1)));
        }
        values[i] = body.parse().map_err(|_| err("unparseable component"))?;
        if i > 0 && values[i] >= 60.0 {
            return Err(err("minutes and seconds must be below 60"));
        }
    }
    let sign = if values[0].is_sign_negative() {
        -1.0
    } else {
        1.0
    };
    Ok(sign * (values[0].abs() + values[1] / 60.0 + values[2] / 3600.0))
}

/// Formats to whole-second granularity with the canonical glyphs for
/// the notation (`h m s` or `° ′ ″`), single-space separated.
pub fn format_sexagesimal(value: f64, kind: SexKind) -> String {
    let [u0, u1, u2] = kind.canonical();
    let sign = if value < 0.0 { "-" } else { "" };
    let total_seconds = (value.abs() * 3600.0).round() as u64;
    let whole = total_seconds / 3600;
    let minutes = (total_seconds % 3600) / 60;
    let seconds = total_seconds % 60;
    format!("{sign}{whole}{u0} {minutes}{u1} {seconds}{u2}")
}

/// True when the ecliptic longitudes agree to within `tol_deg`
/// (circular distance); latitudes are ignored.
pub fn is_ecliptic_conjunction(a: &EclipticCoord, b: &EclipticCoord, tol_deg: f64) -> bool {
    circular_distance_deg(a.longitude_deg, b.longitude_deg) <= tol_deg
}

/// True when the right ascensions agree to within `tol_hours`
/// (circular distance); declinations are ignored.
pub fn is_equatorial_conjunction(a: &EquatorialCoord, b: &EquatorialCoord, tol_hours: f64) -> bool {
    circular_distance_deg(a.ra_hours * 15.0, b.ra_hours * 15.0) <= tol_hours * 15.0
}

impl FromStr for SexKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "hours" | "h" => Ok(SexKind::Hours),
            "degrees" | "deg" | "d" => Ok(SexKind::Degrees),
            other => Err(format!("unknown sexagesimal kind `{other}`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const OBL: f64 = 23.4;

    fn obliquity() -> Obliquity {
        Obliquity::new(OBL).unwrap()
    }

    #[test]
    fn matrix_has_unit_determinant_and_fixed_x_axis() {
        for phi in 0..90 {
            let m = ecl_to_eq_matrix(Obliquity::new(phi as f64).unwrap());
            assert!(m.orthogonality_error() < 1e-12, "phi={phi}");
            assert!((m.determinant() - 1.0).abs() < 1e-12, "phi={phi}");
            assert_eq!(m.apply([1.0, 0.0, 0.0]), [1.0, 0.0, 0.0], "phi={phi}");
        }
    }

    #[test]
    fn zero_obliquity_is_the_identity() {
        let m = ecl_to_eq_matrix(Obliquity::new(0.0).unwrap());
        let id = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        for (row, id_row) in m.rows().iter().zip(id) {
            for (a, b) in row.iter().zip(id_row) {
                assert_eq!(*a, b); // -0.0 == 0.0 holds
            }
        }
    }

    #[test]
    fn middle_entry_is_cos_phi() {
        let m = ecl_to_eq_matrix(obliquity());
        assert!((m.rows()[1][1] - 0.917_754_625_683_981).abs() < 1e-12);
    }

    #[test]
    fn vernal_equinox_maps_to_zero_zero() {
        let equinox = EclipticCoord::new(0.0, 0.0).unwrap();
        let eq = ecl_to_eq(&equinox, obliquity());
        assert_eq!(eq.ra_hours(), 0.0);
        assert_eq!(eq.declination_deg(), 0.0);
    }

    #[test]
    fn ecliptic_north_pole_lands_at_18h() {
        let pole = EclipticCoord::new(0.0, 90.0).unwrap();
        assert!(pole.is_polar());
        let eq = ecl_to_eq(&pole, obliquity());
        assert!((eq.ra_hours() - 18.0).abs() < 1e-9);
        assert!((eq.declination_deg() - (90.0 - OBL)).abs() < 1e-9);
    }

    #[test]
    fn solstice_point_has_declination_plus_phi() {
        let solstice = EclipticCoord::new(90.0, 0.0).unwrap();
        let eq = ecl_to_eq(&solstice, obliquity());
        assert!((eq.declination_deg() - OBL).abs() < 1e-9);
        assert!((eq.ra_hours() - 6.0).abs() < 1e-9);
    }

    #[test]
    fn equatorial_pole_gets_longitude_zero_by_convention() {
        let celestial_pole = EquatorialCoord::new(7.0, 90.0).unwrap();
        let back = ecl_to_eq(&eq_to_ecl(&celestial_pole, obliquity()), obliquity());
        assert_eq!(back.ra_hours(), 0.0, "degenerate RA pinned to 0");
        assert!((back.declination_deg() - 90.0).abs() < 1e-9);
    }

    #[test]
    fn round_trip_is_identity_away_from_poles() {
        let obl = obliquity();
        for lat_step in -8..=8 {
            for lon_step in 0..24 {
                let c = EclipticCoord::new(lon_step as f64 * 15.0, lat_step as f64 * 10.0).unwrap();
                let back = eq_to_ecl(&ecl_to_eq(&c, obl), obl);
                assert!((back.longitude_deg() - c.longitude_deg()).abs() < 1e-9);
                assert!((back.latitude_deg() - c.latitude_deg()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn equal_ecliptic_longitude_does_not_imply_equal_ra() {
        // Same longitude, different latitudes: an ecliptic conjunction
        // that is not an equatorial conjunction.
        let a = EclipticCoord::new(300.0, 0.0).unwrap();
        let b = EclipticCoord::new(300.0, 4.0).unwrap();
        assert!(is_ecliptic_conjunction(&a, &b, 0.0));
        let (ea, eb) = (ecl_to_eq(&a, obliquity()), ecl_to_eq(&b, obliquity()));
        assert!((ea.ra_hours() - eb.ra_hours()).abs() > 1e-3);
        assert!(!is_equatorial_conjunction(&ea, &eb, 1e-3));
    }

    #[test]
    fn sexagesimal_parse_known_values() {
        let ra = parse_sexagesimal("20h 10m 58s", SexKind::Hours).unwrap();
        assert!((ra - 20.182_777_777_777_776).abs() < 1e-12);
        let lon = parse_sexagesimal("300° 26′ 17″", SexKind::Degrees).unwrap();
        assert!((lon - 300.438_055_555_555_54).abs() < 1e-12);
        assert_eq!(parse_sexagesimal("0h 0m 0s", SexKind::Hours).unwrap(), 0.0);
        // ASCII fallbacks
        let ascii = parse_sexagesimal("300d 26' 17\"", SexKind::Degrees).unwrap();
        assert_eq!(ascii, lon);
    }

    #[test]
    fn sexagesimal_rejects_malformed_text() {
        for bad in [
            "20h 10m",
            "20h 61m 58s",
            "20h 10m 60s",
            "20x 10m 58s",
            "h m s",
            "20h 10m 58",
            "",
            "20h -10m 58s",
        ] {
            assert!(
                parse_sexagesimal(bad, SexKind::Hours).is_err(),
                "accepted {bad:?}"
            );
        }
    }

    #[test]
    fn sexagesimal_round_trips_byte_for_byte() {
        for (text, kind) in [
            ("20h 10m 58s", SexKind::Hours),
            ("0h 0m 0s", SexKind::Hours),
            ("300° 26′ 17″", SexKind::Degrees),
            ("23° 59′ 59″", SexKind::Degrees),
        ] {
            let value = parse_sexagesimal(text, kind).unwrap();
            assert_eq!(format_sexagesimal(value, kind), text);
        }
    }

    #[test]
    fn format_carries_seconds_overflow() {
        // 59.9999h rounds to exactly 60h 0m 0s, not 59h 60m 0s.
        assert_eq!(
            format_sexagesimal(59.999_999_99, SexKind::Hours),
            "60h 0m 0s"
        );
        assert_eq!(format_sexagesimal(-0.5, SexKind::Degrees), "-0° 30′ 0″");
    }

    #[test]
    fn conjunction_predicates_use_circular_distance() {
        let a = EclipticCoord::new(359.9, 1.0).unwrap();
        let b = EclipticCoord::new(0.05, -2.0).unwrap();
        assert!(is_ecliptic_conjunction(&a, &b, 0.2));
        assert!(!is_ecliptic_conjunction(&a, &b, 0.1));
        let same = EclipticCoord::new(123.4, 5.0).unwrap();
        assert!(is_ecliptic_conjunction(&same, &same, 0.0));

        let x = EquatorialCoord::new(6.0, 0.0).unwrap();
        let y = EquatorialCoord::new(18.0, 0.0).unwrap();
        assert!(!is_equatorial_conjunction(&x, &y, 11.99));
        assert!(is_equatorial_conjunction(&x, &y, 12.0));
    }

    #[test]
    fn constructors_enforce_ranges() {
        assert!(EclipticCoord::new(10.0, 91.0).is_err());
        assert!(EquatorialCoord::new(1.0, -90.5).is_err());
        assert!(Obliquity::new(90.0).is_err());
        assert!(Obliquity::new(-1.0).is_err());
        let wrapped = EclipticCoord::new(370.0, 0.0).unwrap();
        assert_eq!(wrapped.longitude_deg(), 10.0);
        let ra = EquatorialCoord::new(25.0, 0.0).unwrap();
        assert!((ra.ra_hours() - 1.0).abs() < 1e-12);
    }
}
