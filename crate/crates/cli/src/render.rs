//! Output formatting: tables, CSV, and JSON lines.
//!
//! All output is deterministic byte-for-byte for identical inputs:
//! fixed-point decimals with a `.` separator, no timestamps, no
//! locale-dependent formatting.

use std::fmt::Write as _;

use conjunct_core::alignment::AlignmentReport;
use conjunct_core::catalog::{catalog, CatalogSet};
use conjunct_core::coords::{format_sexagesimal, EclipticCoord, EquatorialCoord, SexKind};
use conjunct_core::kinematics::{position, synodic_period, Body, Unit};
use conjunct_core::ratio::{lcm_ratio, Ratio};
use conjunct_core::series::{ConjunctionEvent, CycleCandidate};

use crate::OutputFormat;

pub fn synodic(a: &Body, b: &Body, period: Ratio, format: OutputFormat) -> String {
    let unit = a.unit();
    match format {
        OutputFormat::Csv => format!(
            "first,second,synodic_exact,synodic_decimal,unit\n{},{},{},{},{}\n",
            a.name(),
            b.name(),
            period,
            period.to_decimal_string(2),
            unit
        ),
        OutputFormat::Jsonl => {
            let obj = serde_json::json!({
                "first": a.name(),
                "second": b.name(),
                "synodic": period.to_string(),
                "synodic_decimal": period.to_f64(),
                "unit": unit.to_string(),
            });
            format!("{obj}\n")
        }
        _ => format!(
            "pair: {} ({} {unit}), {} ({} {unit})\nsynodic period: {} {unit} ({} {unit})\n",
            a.name(),
            a.period(),
            b.name(),
            b.period(),
            period,
            period.to_decimal_string(2),
        ),
    }
}

pub fn series(events: &[ConjunctionEvent], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push_str("n,elapsed_years,longitude_deg,family\n");
            for e in events {
                let _ = writeln!(
                    out,
                    "{},{:.2},{:.2},{}",
                    e.index(),
                    e.elapsed(),
                    e.longitude_deg(),
                    e.family()
                );
            }
        }
        OutputFormat::Jsonl => {
            for e in events {
                let obj = serde_json::json!({
                    "n": e.index(),
                    "elapsed_years": e.elapsed(),
                    "longitude_deg": e.longitude_deg(),
                    "family": e.family(),
                });
                let _ = writeln!(out, "{obj}");
            }
        }
        _ => {
            out.push_str("  n  elapsed_years  longitude_deg  family\n");
            for e in events {
                let _ = writeln!(
                    out,
                    "{:>3}  {:>13.2}  {:>13.2}  {:>6}",
                    e.index(),
                    e.elapsed(),
                    e.longitude_deg(),
                    e.family()
                );
            }
        }
    }
    out
}

pub fn cycles(candidates: &[CycleCandidate], format: OutputFormat) -> String {
    let mut out = String::new();
    let direction = |c: &CycleCandidate| if c.east() { "east" } else { "west" };
    match format {
        OutputFormat::Csv => {
            out.push_str(
                "k,total_years,angular_offset_deg,direction,time_offset_years,angular_record,time_record\n",
            );
            for c in candidates {
                let _ = writeln!(
                    out,
                    "{},{:.2},{:.2},{},{:.2},{},{}",
                    c.k(),
                    c.total_years(),
                    c.angular_offset_deg(),
                    direction(c),
                    c.time_offset(),
                    c.angular_record(),
                    c.time_record()
                );
            }
        }
        OutputFormat::Jsonl => {
            for c in candidates {
                let obj = serde_json::json!({
                    "k": c.k(),
                    "total_years": c.total_years(),
                    "angular_offset_deg": c.angular_offset_deg(),
                    "direction": direction(c),
                    "time_offset_years": c.time_offset(),
                    "angular_record": c.angular_record(),
                    "time_record": c.time_record(),
                });
                let _ = writeln!(out, "{obj}");
            }
        }
        _ => {
            out.push_str("  k  total_years  angular_offset  direction  time_offset  records\n");
            for c in candidates {
                let mut records = String::new();
                if c.angular_record() {
                    records.push_str("angular ");
                }
                if c.time_record() {
                    records.push_str("time");
                }
                let _ = writeln!(
                    out,
                    "{:>3}  {:>11.2}  {:>13.2}°  {:>9}  {:>11.2}  {}",
                    c.k(),
                    c.total_years(),
                    c.angular_offset_deg(),
                    direction(c),
                    c.time_offset(),
                    records.trim_end()
                );
            }
        }
    }
    out
}

pub fn alignment(report: &AlignmentReport, format: OutputFormat) -> String {
    let unit = report.bodies()[0].unit();
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push_str("kind,first,second,value_exact,value_decimal\n");
            for p in report.pairwise() {
                let _ = writeln!(
                    out,
                    "pair,{},{},{},{}",
                    p.first,
                    p.second,
                    p.synodic,
                    p.synodic.to_decimal_string(2)
                );
            }
            let _ = writeln!(
                out,
                "period,,,{},{}",
                report.period(),
                report.period().to_decimal_string(2)
            );
        }
        OutputFormat::Jsonl => {
            for p in report.pairwise() {
                let obj = serde_json::json!({
                    "kind": "pair",
                    "first": p.first,
                    "second": p.second,
                    "synodic": p.synodic.to_string(),
                    "synodic_decimal": p.synodic.to_f64(),
                    "unit": unit.to_string(),
                });
                let _ = writeln!(out, "{obj}");
            }
            let obj = serde_json::json!({
                "kind": "period",
                "period": report.period().to_string(),
                "period_decimal": report.period().to_f64(),
                "unit": unit.to_string(),
            });
            let _ = writeln!(out, "{obj}");
        }
        _ => {
            let described: Vec<String> = report
                .bodies()
                .iter()
                .map(|b| format!("{} ({} {unit})", b.name(), b.period()))
                .collect();
            let _ = writeln!(out, "bodies: {}", described.join(", "));
            out.push_str("pair                     synodic       decimal\n");
            for p in report.pairwise() {
                let _ = writeln!(
                    out,
                    "{:<22}  {:>10}  {:>10}",
                    format!("{} {}", p.first, p.second),
                    p.synodic.to_string(),
                    p.synodic.to_decimal_string(2)
                );
            }
            let _ = writeln!(
                out,
                "alignment period: {} {unit} ({} {unit})",
                report.period(),
                report.period().to_decimal_string(2)
            );
        }
    }
    out
}

pub fn oracle_events(events: &[f64], unit: Unit, format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push_str("k,time\n");
            for (k, t) in events.iter().enumerate() {
                let _ = writeln!(out, "{},{:.9}", k + 1, t);
            }
        }
        OutputFormat::Jsonl => {
            for (k, t) in events.iter().enumerate() {
                let obj = serde_json::json!({ "k": k + 1, "time": t, "unit": unit.to_string() });
                let _ = writeln!(out, "{obj}");
            }
        }
        _ => {
            let _ = writeln!(out, "{} conjunction(s) detected", events.len());
            for (k, t) in events.iter().enumerate() {
                let _ = writeln!(out, "{:>4}  {:.9} {unit}", k + 1, t);
            }
        }
    }
    out
}

pub fn oracle_alignment(
    found: Option<f64>,
    t_end: f64,
    ang_tol: f64,
    unit: Unit,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Csv => match found {
            Some(t) => format!("found,time\ntrue,{t:.9}\n"),
            None => "found,time\nfalse,\n".to_string(),
        },
        OutputFormat::Jsonl => {
            let obj = serde_json::json!({
                "found": found.is_some(),
                "time": found,
                "unit": unit.to_string(),
            });
            format!("{obj}\n")
        }
        _ => match found {
            Some(t) => format!("alignment at t = {t:.9} {unit}\n"),
            None => format!("no alignment within {t_end} {unit} at tolerance {ang_tol}°\n"),
        },
    }
}

/// The full clock-hand walkthrough: minute-hour conjunctions and the
/// 11-gon they trace, the second-minute period, and the three-hand
/// alignment at 12 hours.
pub fn clock_suite() -> Result<String, Box<dyn std::error::Error>> {
    let hands = catalog(CatalogSet::Clock);
    let second = &hands[0];
    let minute = &hands[1];
    let hour = &hands[2];

    let minute_hour = synodic_period(minute, hour)?;
    let second_minute = synodic_period(second, minute)?;
    let second_hour = synodic_period(second, hour)?;
    let twelve = Ratio::from_int(12);
    let all_three = lcm_ratio(minute_hour, second_minute)?;

    let mut out = String::new();
    let _ = writeln!(out, "clock-hand conjunction suite");
    let _ = writeln!(out, "----------------------------");
    let _ = writeln!(
        out,
        "minute-hour synodic period: {} hours ({} hours)",
        minute_hour,
        minute_hour.to_decimal_string(4)
    );

    let times = conjunct_core::kinematics::conjunction_times(minute, hour, twelve)?;
    let _ = writeln!(
        out,
        "conjunctions in 12 hours: {} (a regular {}-gon)",
        times.len(),
        times.len()
    );
    let _ = writeln!(out, "   k  time (h)        hour-hand angle");
    for (i, t) in times.iter().enumerate() {
        let angle = position(hour, *t)?;
        let _ = writeln!(
            out,
            "{:>4}  {:<14} {} = {}",
            i + 1,
            t.to_string(),
            angle.degrees(),
            angle
        );
    }

    let _ = writeln!(out, "second-minute synodic period: {} hours", second_minute);
    let _ = writeln!(out, "second-hour synodic period: {} hours", second_hour);
    let _ = writeln!(
        out,
        "three-hand alignment: lcm({}, {}) = {} hours (noon and midnight)",
        minute_hour, second_minute, all_three
    );
    Ok(out)
}

pub fn coords_ecl_to_eq(input: &EclipticCoord, output: &EquatorialCoord) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "ecliptic: lon {:.6}° ({})  lat {:.6}°",
        input.longitude_deg(),
        format_sexagesimal(input.longitude_deg(), SexKind::Degrees),
        input.latitude_deg()
    );
    let _ = writeln!(
        out,
        "equatorial: RA {:.6}h ({})  dec {:.6}° ({})",
        output.ra_hours(),
        format_sexagesimal(output.ra_hours(), SexKind::Hours),
        output.declination_deg(),
        format_sexagesimal(output.declination_deg(), SexKind::Degrees)
    );
    if output.is_polar() {
        let _ = writeln!(out, "note: polar direction, RA pinned to 0 by convention");
    }
    out
}

pub fn coords_eq_to_ecl(input: &EquatorialCoord, output: &EclipticCoord) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "equatorial: RA {:.6}h ({})  dec {:.6}°",
        input.ra_hours(),
        format_sexagesimal(input.ra_hours(), SexKind::Hours),
        input.declination_deg()
    );
    let _ = writeln!(
        out,
        "ecliptic: lon {:.6}° ({})  lat {:.6}°",
        output.longitude_deg(),
        format_sexagesimal(output.longitude_deg(), SexKind::Degrees),
        output.latitude_deg()
    );
    if output.is_polar() {
        let _ = writeln!(
            out,
            "note: polar direction, longitude pinned to 0 by convention"
        );
    }
    out
}
