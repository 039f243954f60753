//! Command definitions and execution for the `conjunct` binary.
//!
//! Every subcommand is a thin adapter: it loads inputs, calls
//! `conjunct-core`, and formats the result. No arithmetic beyond
//! formatting happens here.

pub mod render;
pub mod svg;

use std::fmt;
use std::fs;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use conjunct_core::alignment::alignment_period;
use conjunct_core::catalog::{catalog, lookup, parse_body_file, CatalogSet};
use conjunct_core::coords::{
    ecl_to_eq, eq_to_ecl, parse_sexagesimal, EclipticCoord, EquatorialCoord, Obliquity, SexKind,
};
use conjunct_core::kinematics::{synodic_period, Body};
use conjunct_core::oracle::{detect_alignment, detect_pair_conjunctions, SimConfig};
use conjunct_core::series::{advance_angle, cycle_search, generate_series, SeriesParams};

/// Notes on reference values this tool reproduces. Shown in the long
/// help of `series` and `cycles`.
pub const REFERENCE_NOTES: &str = "\
Reference-value notes:
  * The traditional longitude step between successive great conjunctions
    is 245.56 degrees, but direct evaluation of the advance formula
    (360/29.46)*19.85 gives about 242.57 degrees. The two disagree; this
    tool therefore takes the step explicitly (--advance 245.56 reproduces
    the traditional nine-row table) and also exposes the formula path
    (--slow-period 29.46 with --synodic 19.85). Neither value is silently
    preferred over the other.
  * Published cycle offsets round inconsistently: the k=3 offset appears
    as both 16.67 and 16.68 degrees, and the k=22 offset as both 2.31 and
    2.32 degrees. Comparisons here use 0.02-degree tolerances.
  * The 66-cycle closure is sometimes quoted as coming within \"6.96
    years\" of the starting point; 6.96 is an angular offset in degrees
    (66*245.56 mod 360), not years. The matching time span is about
    1310.1 years.";

#[derive(Debug)]
pub enum CliError {
    /// Wrong invocation; exits 2 like other argument errors.
    Usage(String),
    /// Valid invocation, impossible computation; exits 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

fn domain<E: fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Jsonl,
    Svg,
}

#[derive(Debug, Parser)]
#[command(
    name = "conjunct",
    version,
    about = "Clock-model conjunction calculator: synodic periods, conjunction series, \
             trigon geometry, N-body alignment periods, and ecliptic/equatorial transforms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; svg applies to `series` and `trigon` only,
    /// while `clock` and `coords` always print plain text.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "CONJUNCT_FORMAT",
        default_value = "table"
    )]
    pub format: OutputFormat,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BodySource {
    /// Built-in period set: clock, coarse, refined, or alt.
    #[arg(long, default_value = "coarse")]
    pub catalog: String,

    /// Read bodies from a file (`name period unit` per line) instead
    /// of the built-in catalog.
    #[arg(long, value_name = "FILE")]
    pub bodies: Option<PathBuf>,
}

impl BodySource {
    fn load(&self) -> Result<Vec<Body>, CliError> {
        if let Some(path) = &self.bodies {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
            return parse_body_file(&text).map_err(domain);
        }
        let set: CatalogSet = self.catalog.parse().map_err(CliError::Usage)?;
        Ok(catalog(set))
    }
}

#[derive(Debug, Args)]
#[command(group(
    ArgGroup::new("step")
        .required(true)
        .multiple(false)
        .args(["advance", "slow_period"])
))]
pub struct SeriesArgs {
    /// Longitude step between consecutive events, degrees (e.g. 245.56).
    #[arg(long)]
    pub advance: Option<f64>,

    /// Derive the step from the slower body's period via
    /// (360/slow_period)*synodic instead of passing it directly.
    #[arg(long)]
    pub slow_period: Option<f64>,

    /// Synodic period between consecutive events, years (e.g. 19.85).
    #[arg(long)]
    pub synodic: f64,

    /// Number of events to generate (n = 0..count-1).
    #[arg(long, default_value_t = 9)]
    pub count: u32,

    /// Circle radius for plane geometry.
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,

    /// Longitude of event 0, degrees.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub epoch: f64,
}

impl SeriesArgs {
    fn params(&self) -> Result<SeriesParams, CliError> {
        let advance = match (self.advance, self.slow_period) {
            (Some(a), _) => a,
            (None, Some(p)) => {
                if p <= 0.0 {
                    return Err(CliError::Domain(format!(
                        "slow period must be positive, got {p}"
                    )));
                }
                advance_angle(p, self.synodic)
            }
            (None, None) => unreachable!("clap group requires one"),
        };
        let params = SeriesParams::new(advance, self.synodic)
            .map_err(domain)?
            .with_radius(self.radius)
            .map_err(domain)?
            .with_epoch_longitude(self.epoch);
        Ok(params)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Synodic (conjunction) period of a pair of bodies.
    Synodic {
        /// First body name.
        a: String,
        /// Second body name.
        b: String,
        #[command(flatten)]
        source: BodySource,
    },

    /// Generate a conjunction event series (longitudes and elapsed time).
    #[command(after_long_help = REFERENCE_NOTES)]
    Series {
        #[command(flatten)]
        args: SeriesArgs,
    },

    /// Render the series as an SVG trigon figure.
    Trigon {
        #[command(flatten)]
        args: SeriesArgs,
    },

    /// Search for synchronization cycles: k with k*advance near 0 (mod 360)
    /// or k*synodic near a whole number of years.
    #[command(after_long_help = REFERENCE_NOTES)]
    Cycles {
        /// Longitude step between consecutive events, degrees.
        #[arg(long)]
        advance: f64,

        /// Synodic period, years.
        #[arg(long)]
        synodic: f64,

        /// Largest cycle length to score.
        #[arg(long)]
        kmax: u32,

        /// Report every k whose angular offset is at most this many degrees.
        #[arg(long, default_value_t = 0.0)]
        ang_tol: f64,

        /// Report every k whose time offset is at most this many years.
        #[arg(long, default_value_t = 0.0)]
        time_tol: f64,
    },

    /// Alignment (simultaneous conjunction) period of two or more bodies.
    Align {
        /// Body names (at least two).
        #[arg(required = true, num_args = 2..)]
        names: Vec<String>,
        #[command(flatten)]
        source: BodySource,
    },

    /// Run the full clock-hand suite: minute-hour conjunctions, the
    /// 11-gon, second-minute period, and the three-hand alignment.
    Clock,

    /// Convert between ecliptic and equatorial coordinates.
    Coords {
        /// Source frame of the input coordinates.
        #[arg(long, value_parser = ["ecl", "eq"])]
        from: String,

        /// Ecliptic longitude (decimal degrees or `300° 26′ 17″`).
        #[arg(long, allow_hyphen_values = true)]
        lon: Option<String>,

        /// Ecliptic latitude (decimal degrees or sexagesimal).
        #[arg(long, allow_hyphen_values = true)]
        lat: Option<String>,

        /// Right ascension (decimal hours or `20h 10m 58s`).
        #[arg(long, allow_hyphen_values = true)]
        ra: Option<String>,

        /// Declination (decimal degrees or sexagesimal).
        #[arg(long, allow_hyphen_values = true)]
        dec: Option<String>,

        /// Obliquity in degrees.
        #[arg(long, default_value_t = 23.4)]
        obliquity: f64,
    },

    /// Brute-force simulation checks (event detection by time stepping).
    Oracle {
        #[command(subcommand)]
        cmd: OracleCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Detect all conjunctions of a pair within a time horizon.
    Pair {
        a: String,
        b: String,
        #[command(flatten)]
        source: BodySource,
        /// Simulation horizon, in the bodies' time unit.
        #[arg(long)]
        t_end: f64,
        /// Grid step; defaults to S/100.
        #[arg(long)]
        dt: Option<f64>,
        /// Bisection refinement tolerance; defaults to at most 1e-9.
        #[arg(long)]
        tol: Option<f64>,
    },

    /// Detect the first simultaneous conjunction of several bodies.
    Align {
        /// Body names (at least two).
        #[arg(required = true, num_args = 2..)]
        names: Vec<String>,
        #[command(flatten)]
        source: BodySource,
        /// Simulation horizon, in the bodies' time unit.
        #[arg(long)]
        t_end: f64,
        /// Maximum pairwise separation that counts as aligned, degrees.
        #[arg(long, default_value_t = 0.01)]
        ang_tol: f64,
        /// Grid step; defaults to S/100 for the first pair.
        #[arg(long)]
        dt: Option<f64>,
        /// Bisection refinement tolerance; defaults to at most 1e-9.
        #[arg(long)]
        tol: Option<f64>,
    },
}

fn reject_svg(format: OutputFormat, command: &str) -> Result<(), CliError> {
    if format == OutputFormat::Svg {
        return Err(CliError::Usage(format!(
            "svg output is only available for `series` and `trigon`, not `{command}`"
        )));
    }
    Ok(())
}

fn parse_angle(text: &str, kind: SexKind) -> Result<f64, CliError> {
    if let Ok(v) = text.trim().parse::<f64>() {
        return Ok(v);
    }
    parse_sexagesimal(text, kind).map_err(domain)
}

fn sim_config(
    a: &Body,
    b: &Body,
    t_end: f64,
    dt: Option<f64>,
    tol: Option<f64>,
) -> Result<SimConfig, CliError> {
    match (dt, tol) {
        (None, None) => SimConfig::auto_for_pair(a, b, t_end).map_err(domain),
        (dt, tol) => {
            let dt = match dt {
                Some(dt) => dt,
                None => synodic_period(a, b).map_err(domain)?.to_f64() / 100.0,
            };
            let tol = tol.unwrap_or_else(|| (dt * 1e-5).min(1e-9));
            SimConfig::new(dt, t_end, tol).map_err(domain)
        }
    }
}

/// Runs one parsed command and returns its full output.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Synodic { a, b, source } => {
            reject_svg(format, "synodic")?;
            let bodies = source.load()?;
            let first = lookup(&bodies, a).map_err(domain)?;
            let second = lookup(&bodies, b).map_err(domain)?;
            let period = synodic_period(first, second).map_err(domain)?;
            Ok(render::synodic(first, second, period, format))
        }

        Command::Series { args } => {
            let params = args.params()?;
            let events = generate_series(&params, args.count);
            match format {
                OutputFormat::Svg => Ok(svg::trigon_svg(&params, &events)),
                _ => Ok(render::series(&events, format)),
            }
        }

        Command::Trigon { args } => {
            let params = args.params()?;
            let events = generate_series(&params, args.count);
            Ok(svg::trigon_svg(&params, &events))
        }

        Command::Cycles {
            advance,
            synodic,
            kmax,
            ang_tol,
            time_tol,
        } => {
            reject_svg(format, "cycles")?;
            if *kmax < 1 {
                return Err(CliError::Usage("kmax must be at least 1".into()));
            }
            if *ang_tol < 0.0 || *time_tol < 0.0 {
                return Err(CliError::Usage("tolerances must be non-negative".into()));
            }
            let params = SeriesParams::new(*advance, *synodic).map_err(domain)?;
            let candidates = cycle_search(&params, *kmax, *ang_tol, *time_tol);
            Ok(render::cycles(&candidates, format))
        }

        Command::Align { names, source } => {
            reject_svg(format, "align")?;
            let bodies = source.load()?;
            let mut selected = Vec::with_capacity(names.len());
            for name in names {
                selected.push(lookup(&bodies, name).map_err(domain)?.clone());
            }
            let report = alignment_period(&selected).map_err(domain)?;
            Ok(render::alignment(&report, format))
        }

        Command::Clock => {
            reject_svg(format, "clock")?;
            render::clock_suite().map_err(domain)
        }

        Command::Coords {
            from,
            lon,
            lat,
            ra,
            dec,
            obliquity,
        } => {
            reject_svg(format, "coords")?;
            let obl = Obliquity::new(*obliquity).map_err(domain)?;
            match from.as_str() {
                "ecl" => {
                    let lon = lon
                        .as_deref()
                        .ok_or_else(|| CliError::Usage("--from ecl requires --lon".into()))?;
                    let lon = parse_angle(lon, SexKind::Degrees)?;
                    let lat = match lat.as_deref() {
                        Some(l) => parse_angle(l, SexKind::Degrees)?,
                        None => 0.0,
                    };
                    let input = EclipticCoord::new(lon, lat).map_err(domain)?;
                    let output = ecl_to_eq(&input, obl);
                    Ok(render::coords_ecl_to_eq(&input, &output))
                }
                "eq" => {
                    let ra = ra
                        .as_deref()
                        .ok_or_else(|| CliError::Usage("--from eq requires --ra".into()))?;
                    let ra = parse_angle(ra, SexKind::Hours)?;
                    let dec = match dec.as_deref() {
                        Some(d) => parse_angle(d, SexKind::Degrees)?,
                        None => 0.0,
                    };
                    let input = EquatorialCoord::new(ra, dec).map_err(domain)?;
                    let output = eq_to_ecl(&input, obl);
                    Ok(render::coords_eq_to_ecl(&input, &output))
                }
                other => Err(CliError::Usage(format!(
                    "--from must be `ecl` or `eq`, got `{other}`"
                ))),
            }
        }

        Command::Oracle { cmd } => match cmd {
            OracleCommand::Pair {
                a,
                b,
                source,
                t_end,
                dt,
                tol,
            } => {
                reject_svg(format, "oracle pair")?;
                let bodies = source.load()?;
                let first = lookup(&bodies, a).map_err(domain)?;
                let second = lookup(&bodies, b).map_err(domain)?;
                let cfg = sim_config(first, second, *t_end, *dt, *tol)?;
                let events = detect_pair_conjunctions(first, second, &cfg).map_err(domain)?;
                Ok(render::oracle_events(&events, first.unit(), format))
            }
            OracleCommand::Align {
                names,
                source,
                t_end,
                ang_tol,
                dt,
                tol,
            } => {
                reject_svg(format, "oracle align")?;
                let bodies = source.load()?;
                let mut selected = Vec::with_capacity(names.len());
                for name in names {
                    selected.push(lookup(&bodies, name).map_err(domain)?.clone());
                }
                let cfg = sim_config(&selected[0], &selected[1], *t_end, *dt, *tol)?;
                let found = detect_alignment(&selected, *ang_tol, &cfg).map_err(domain)?;
                Ok(render::oracle_alignment(
                    found,
                    *t_end,
                    *ang_tol,
                    selected[0].unit(),
                    format,
                ))
            }
        },
    }
}
