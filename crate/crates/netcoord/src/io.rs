//! Exact number parsing and the JSON / CSV surfaces of the crate.
//!
//! All numeric payloads travel as decimal or fraction strings so values
//! survive the trip without rounding. Configurations are arrays of `-1`/`1`
//! integers and node ids are 1-based everywhere outside the library.

use crate::config::{Config, Spin};
use crate::game::{Field, FieldRange};
use crate::lattice::{AdmissiblePath, EquilibriumSet, PathMode};
use crate::robust::DecompositionWitness;
use crate::sim::{FieldSchedule, HittingStats, Trajectory};
use crate::Rational;
use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid number `{0}`: expected a decimal like `0.5` or a fraction like `3/7`")]
    Number(String),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Model(#[from] crate::Error),
    #[error("invalid configuration entry `{0}`: expected -1 or 1")]
    BadState(String),
    #[error(transparent)]
    Write(#[from] std::io::Error),
}

/// Parses a decimal (`1`, `-0.25`, `.5`) or fraction (`3/7`, `-1/2`) string
/// into an exact rational. The denominator of a fraction must be positive.
pub fn parse_rational(s: &str) -> Result<Rational, IoError> {
    let t = s.trim();
    let bad = || IoError::Number(s.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d <= BigInt::zero() {
            return Err(bad());
        }
        Ok(Rational::new(n, d))
    } else if let Some((int_part, frac_part)) = t.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let (negative, digits) = match int_part.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int_val: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let frac_val: BigInt = frac_part.parse().map_err(|_| bad())?;
        let scale: BigInt = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mut numer = int_val * &scale + frac_val;
        if negative {
            numer = -numer;
        }
        Ok(Rational::new(numer, scale))
    } else {
        let n: BigInt = t.parse().map_err(|_| bad())?;
        Ok(Rational::from_integer(n))
    }
}

fn parse_rationals(items: &[String]) -> Result<Vec<Rational>, IoError> {
    items.iter().map(|s| parse_rational(s)).collect()
}

fn rationals_to_strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

/// Parses a comma-separated `-1,1,...` state list as used on the CLI.
pub fn parse_config_str(s: &str) -> Result<Config, IoError> {
    let mut states = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        let v: i8 = tok.parse().map_err(|_| IoError::BadState(tok.into()))?;
        states.push(Spin::from_value(v).ok_or_else(|| IoError::BadState(tok.into()))?);
    }
    Ok(Config::new(states))
}

// ---------------------------------------------------------------------------
// Field and field range
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct FieldJson {
    h: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct RangeJson {
    h_minus: Vec<String>,
    h_plus: Vec<String>,
}

pub fn parse_field_json(text: &str) -> Result<Field<Rational>, IoError> {
    let raw: FieldJson = serde_json::from_str(text)?;
    Ok(Field::new(parse_rationals(&raw.h)?))
}

pub fn field_to_json(field: &Field<Rational>) -> String {
    serde_json::to_string_pretty(&FieldJson {
        h: rationals_to_strings(field.values()),
    })
    .expect("static schema")
}

pub fn parse_range_json(text: &str) -> Result<FieldRange<Rational>, IoError> {
    let raw: RangeJson = serde_json::from_str(text)?;
    let lower = Field::new(parse_rationals(&raw.h_minus)?);
    let upper = Field::new(parse_rationals(&raw.h_plus)?);
    Ok(FieldRange::new(lower, upper)?)
}

pub fn range_to_json(range: &FieldRange<Rational>) -> String {
    serde_json::to_string_pretty(&RangeJson {
        h_minus: rationals_to_strings(range.lower().values()),
        h_plus: rationals_to_strings(range.upper().values()),
    })
    .expect("static schema")
}

// ---------------------------------------------------------------------------
// Field schedules
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct BreakpointJson {
    t: String,
    h: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ScheduleObjectJson {
    breakpoints: Vec<BreakpointJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    period: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    range: Option<RangeJson>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScheduleJson {
    Bare(Vec<BreakpointJson>),
    Object(ScheduleObjectJson),
}

/// Parses a schedule document: either a bare array of breakpoints
/// `[{"t":"0","h":[...]}, ...]` or an object with `breakpoints` plus
/// optional `period` and `range` keys. Breakpoint times must start at 0
/// and strictly increase; with an attached range, every field must lie
/// inside it.
pub fn parse_schedule(text: &str) -> Result<FieldSchedule, IoError> {
    let raw: ScheduleJson = serde_json::from_str(text)?;
    let (bps, period, range) = match raw {
        ScheduleJson::Bare(bps) => (bps, None, None),
        ScheduleJson::Object(o) => (o.breakpoints, o.period, o.range),
    };
    let mut breakpoints = Vec::with_capacity(bps.len());
    for bp in &bps {
        breakpoints.push((parse_rational(&bp.t)?, Field::new(parse_rationals(&bp.h)?)));
    }
    let period = period.as_deref().map(parse_rational).transpose()?;
    let mut schedule = FieldSchedule::new(breakpoints, period)?;
    if let Some(raw_range) = range {
        let lower = Field::new(parse_rationals(&raw_range.h_minus)?);
        let upper = Field::new(parse_rationals(&raw_range.h_plus)?);
        schedule = schedule.with_range(FieldRange::new(lower, upper)?)?;
    }
    Ok(schedule)
}

pub fn schedule_to_json(schedule: &FieldSchedule) -> String {
    let obj = ScheduleObjectJson {
        breakpoints: schedule
            .breakpoints()
            .iter()
            .map(|(t, h)| BreakpointJson {
                t: t.to_string(),
                h: rationals_to_strings(h.values()),
            })
            .collect(),
        period: schedule.period().map(|p| p.to_string()),
        range: schedule.range().map(|r| RangeJson {
            h_minus: rationals_to_strings(r.lower().values()),
            h_plus: rationals_to_strings(r.upper().values()),
        }),
    };
    serde_json::to_string_pretty(&obj).expect("static schema")
}

// ---------------------------------------------------------------------------
// Analysis outputs
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct EquilibriaJson {
    members: Vec<Vec<i8>>,
    least: Vec<i8>,
    greatest: Vec<i8>,
}

pub fn equilibria_to_json(set: &EquilibriumSet) -> String {
    serde_json::to_string_pretty(&EquilibriaJson {
        members: set.members.iter().map(Config::values).collect(),
        least: set.least.values(),
        greatest: set.greatest.values(),
    })
    .expect("static schema")
}

#[derive(Serialize)]
struct PathJson {
    start: Vec<i8>,
    r#final: Vec<i8>,
    mode: &'static str,
    monotone: bool,
    anti_monotone: bool,
    steps: Vec<(usize, i8)>,
}

pub fn path_to_json(path: &AdmissiblePath) -> String {
    serde_json::to_string_pretty(&PathJson {
        start: path.start.values(),
        r#final: path.final_config().values(),
        mode: match path.mode {
            PathMode::Improvement => "improvement",
            PathMode::BestResponse => "best-response",
        },
        monotone: path.is_monotone(),
        anti_monotone: path.is_anti_monotone(),
        steps: path
            .steps
            .iter()
            .map(|&(agent, spin)| (agent + 1, spin.value()))
            .collect(),
    })
    .expect("static schema")
}

#[derive(Serialize)]
struct WitnessJson {
    partition_plus: Vec<usize>,
    partition_minus: Vec<usize>,
    h_star: Vec<String>,
    x_star: Vec<i8>,
}

pub fn witness_to_json(witness: &DecompositionWitness) -> String {
    serde_json::to_string_pretty(&WitnessJson {
        partition_plus: witness.partition.plus.iter().map(|i| i + 1).collect(),
        partition_minus: witness.partition.minus.iter().map(|i| i + 1).collect(),
        h_star: rationals_to_strings(witness.field_star.values()),
        x_star: witness.config_star.values(),
    })
    .expect("static schema")
}

#[derive(Serialize)]
struct StatsJson {
    runs: usize,
    absorbed_plus: usize,
    absorbed_minus: usize,
    not_absorbed: usize,
    fraction_plus: f64,
    fraction_minus: f64,
    hitting_times: Vec<Option<f64>>,
    events_to_consensus: Vec<Option<usize>>,
}

pub fn stats_to_json(stats: &HittingStats) -> String {
    serde_json::to_string_pretty(&StatsJson {
        runs: stats.runs,
        absorbed_plus: stats.absorbed_plus,
        absorbed_minus: stats.absorbed_minus,
        not_absorbed: stats.not_absorbed,
        fraction_plus: stats.fraction_plus(),
        fraction_minus: stats.fraction_minus(),
        hitting_times: stats.hitting_times.clone(),
        events_to_consensus: stats.events_to_consensus.clone(),
    })
    .expect("static schema")
}

// ---------------------------------------------------------------------------
// Trajectory CSV
// ---------------------------------------------------------------------------

/// Renders a trajectory as CSV with header
/// `event,time,agent,new_state,magnetization`. The first data row is the
/// initial sample (event 0, empty agent and state columns); each flip event
/// follows with a 1-based agent id. Output is byte-deterministic for a
/// fixed trajectory.
pub fn trajectory_to_csv(traj: &Trajectory) -> String {
    let mut s = String::from("event,time,agent,new_state,magnetization\n");
    let _ = writeln!(s, "0,0,,,{}", traj.initial.magnetization());
    for (k, ev) in traj.events.iter().enumerate() {
        let (_, mag) = traj.samples[k + 1];
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            k + 1,
            ev.time,
            ev.agent + 1,
            ev.new_state.value(),
            mag
        );
    }
    s
}

/// Writes the CSV rendering of a trajectory to `path`.
pub fn export_trajectory(traj: &Trajectory, path: impl AsRef<Path>) -> Result<(), IoError> {
    std::fs::write(path, trajectory_to_csv(traj))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn rational_grammar() {
        assert_eq!(rat("1"), Rational::from_integer(1.into()));
        assert_eq!(rat("-3"), Rational::from_integer((-3).into()));
        assert_eq!(rat("0.5"), Rational::new(1.into(), 2.into()));
        assert_eq!(rat("-0.25"), Rational::new((-1).into(), 4.into()));
        assert_eq!(rat(".5"), Rational::new(1.into(), 2.into()));
        assert_eq!(rat("3/7"), Rational::new(3.into(), 7.into()));
        assert_eq!(rat("-1/2"), Rational::new((-1).into(), 2.into()));
        assert_eq!(rat("3.1"), Rational::new(31.into(), 10.into()));
        for bad in ["", "1/0", "1/-2", "a", "1.2.3", "1.", "--1", "1e3"] {
            assert!(parse_rational(bad).is_err(), "{bad} should not parse");
        }
    }

    #[test]
    fn field_json_round_trip() {
        let f = parse_field_json(r#"{"h": ["0", "-1", "0", "0", "1"]}"#).unwrap();
        assert_eq!(f.values()[1], Rational::from_integer((-1).into()));
        let text = field_to_json(&f);
        let f2 = parse_field_json(&text).unwrap();
        assert_eq!(f, f2);
    }

    #[test]
    fn config_str_parsing() {
        let c = parse_config_str("-1, -1,1").unwrap();
        assert_eq!(c.values(), vec![-1, -1, 1]);
        assert!(parse_config_str("-1,0,1").is_err());
        assert!(parse_config_str("x").is_err());
    }
}
