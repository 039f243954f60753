//! SVG rendering of a conjunction series: the reference circle,
//! labeled event points, and one polygon per family.
//!
//! Families are distinguished by stroke pattern (solid, dashed,
//! dotted), never by color alone. Canvas is 800x800 with the circle
//! centered.

use std::fmt::Write as _;

use conjunct_core::series::{classify_families, ConjunctionEvent, SeriesParams};

const SIZE: f64 = 800.0;
const MARGIN: f64 = 80.0;
const DASH_PATTERNS: [&str; 3] = ["none", "12 6", "2 6"];

fn to_pixel(params: &SeriesParams, x: f64, y: f64) -> (f64, f64) {
    let scale = (SIZE / 2.0 - MARGIN) / params.radius();
    // SVG y grows downward; flip so positive latitude plots upward.
    (SIZE / 2.0 + x * scale, SIZE / 2.0 - y * scale)
}

fn event_xy(params: &SeriesParams, e: &ConjunctionEvent) -> (f64, f64) {
    let lambda = e.longitude_deg().to_radians();
    (
        params.radius() * lambda.cos(),
        params.radius() * lambda.sin(),
    )
}

pub fn trigon_svg(params: &SeriesParams, events: &[ConjunctionEvent]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}" xmlns="http://www.w3.org/2000/svg">"#
    );
    let _ = writeln!(
        out,
        r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );
    let _ = writeln!(
        out,
        r#"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="black" stroke-width="1"/>"#,
        SIZE / 2.0,
        SIZE / 2.0,
        SIZE / 2.0 - MARGIN
    );

    // One polygon (or open polyline for fewer than 3 members) per family.
    for (family, members) in classify_families(events).iter().enumerate() {
        if members.len() < 2 {
            continue;
        }
        let points: Vec<String> = members
            .iter()
            .map(|e| {
                let (x, y) = event_xy(params, e);
                let (px, py) = to_pixel(params, x, y);
                format!("{px:.2},{py:.2}")
            })
            .collect();
        let tag = if members.len() >= 3 {
            "polygon"
        } else {
            "polyline"
        };
        let _ = writeln!(
            out,
            r#"<{tag} points="{}" fill="none" stroke="black" stroke-width="1.5" stroke-dasharray="{}"/>"#,
            points.join(" "),
            DASH_PATTERNS[family % 3]
        );
    }

    for e in events {
        let (x, y) = event_xy(params, e);
        let (px, py) = to_pixel(params, x, y);
        let _ = writeln!(
            out,
            r#"<circle cx="{px:.2}" cy="{py:.2}" r="4" fill="black"/>"#
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="16">C_{}</text>"#,
            px + 8.0,
            py - 8.0,
            e.index()
        );
    }

    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use conjunct_core::series::generate_series;

    #[test]
    fn svg_contains_circle_labels_and_three_polygons() {
        let params = SeriesParams::new(245.56, 19.85).unwrap();
        let events = generate_series(&params, 9);
        let svg = trigon_svg(&params, &events);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polygon").count(), 3);
        for n in 0..9 {
            assert!(svg.contains(&format!("C_{n}")), "missing label C_{n}");
        }
        // distinct stroke patterns, not colors alone
        assert!(svg.contains(r#"stroke-dasharray="none""#));
        assert!(svg.contains(r#"stroke-dasharray="12 6""#));
        assert!(svg.contains(r#"stroke-dasharray="2 6""#));
    }

    #[test]
    fn svg_is_deterministic() {
        let params = SeriesParams::new(240.0, 20.0).unwrap();
        let events = generate_series(&params, 6);
        assert_eq!(trigon_svg(&params, &events), trigon_svg(&params, &events));
    }

    #[test]
    fn epoch_point_sits_east_of_center_on_the_horizontal() {
        let params = SeriesParams::new(240.0, 20.0).unwrap();
        let events = generate_series(&params, 1);
        let svg = trigon_svg(&params, &events);
        // C_0 at longitude 0 maps to (SIZE/2 + r_px, SIZE/2).
        assert!(svg.contains(r#"<circle cx="720.00" cy="400.00" r="4""#));
    }
}
