//! Seeded event-driven simulation of the asynchronous threshold dynamics.
//!
//! Every agent carries an independent rate-1 Poisson clock; the simulator
//! draws the superposed process (exponential inter-tick times of rate `n`,
//! a uniform agent per tick) and applies the threshold update at each
//! tick. Event times are plain `f64` for speed, but every state decision
//! is an exact rational sign test, and schedule lookups convert the tick
//! time to an exact rational first, so float noise can only reorder
//! events, never change a branch.

use crate::config::{Config, Spin};
use crate::game::{drive, Field, FieldRange};
use crate::graph::Network;
use crate::scalar::Scalar;
use crate::{Error, Rational, Result};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::Exp1;

/// A right-continuous piecewise-constant field signal, optionally periodic
/// and optionally constrained to a declared range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSchedule {
    breakpoints: Vec<(Rational, Field<Rational>)>,
    period: Option<Rational>,
    range: Option<FieldRange<Rational>>,
}

impl FieldSchedule {
    /// A schedule holding one field forever.
    pub fn constant(field: Field<Rational>) -> Self {
        FieldSchedule {
            breakpoints: vec![(Rational::zero(), field)],
            period: None,
            range: None,
        }
    }

    /// Validates breakpoints: the first must sit at time 0, times must
    /// strictly increase, all fields must share one dimension, and a
    /// period must exceed the last breakpoint time.
    pub fn new(
        breakpoints: Vec<(Rational, Field<Rational>)>,
        period: Option<Rational>,
    ) -> Result<Self> {
        let first = breakpoints
            .first()
            .ok_or_else(|| Error::Schedule("a schedule needs at least one breakpoint".into()))?;
        if !first.0.is_zero() {
            return Err(Error::Schedule("the first breakpoint must be at time 0".into()));
        }
        let n = first.1.len();
        for window in breakpoints.windows(2) {
            if window[1].0 <= window[0].0 {
                return Err(Error::Schedule(format!(
                    "breakpoint times must strictly increase ({} then {})",
                    window[0].0, window[1].0
                )));
            }
        }
        if breakpoints.iter().any(|(_, h)| h.len() != n) {
            return Err(Error::Schedule("all breakpoint fields must have one dimension".into()));
        }
        if let Some(p) = &period {
            if p <= &Rational::zero() {
                return Err(Error::Schedule("the period must be positive".into()));
            }
            if p <= &breakpoints.last().unwrap().0 {
                return Err(Error::Schedule(
                    "the period must exceed the last breakpoint time".into(),
                ));
            }
        }
        Ok(FieldSchedule {
            breakpoints,
            period,
            range: None,
        })
    }

    /// Attaches a range; every breakpoint field must lie inside it.
    pub fn with_range(mut self, range: FieldRange<Rational>) -> Result<Self> {
        if range.n() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "schedule has {} agents, range has {}",
                self.n(),
                range.n()
            )));
        }
        if let Some((t, _)) = self
            .breakpoints
            .iter()
            .find(|(_, h)| !range.contains(h))
        {
            return Err(Error::Schedule(format!(
                "the field at time {t} falls outside the declared range"
            )));
        }
        self.range = Some(range);
        Ok(self)
    }

    pub fn breakpoints(&self) -> &[(Rational, Field<Rational>)] {
        &self.breakpoints
    }

    pub fn period(&self) -> Option<&Rational> {
        self.period.as_ref()
    }

    pub fn range(&self) -> Option<&FieldRange<Rational>> {
        self.range.as_ref()
    }

    pub fn n(&self) -> usize {
        self.breakpoints[0].1.len()
    }

    /// The field in force at time `t`: the last breakpoint at or before
    /// `t` (new values apply exactly at their breakpoint), with periodic
    /// schedules wrapping `t` first.
    pub fn field_at(&self, t: &Rational) -> &Field<Rational> {
        assert!(!t.is_negative(), "schedules start at time 0");
        let wrapped;
        let t_eff = match &self.period {
            Some(p) => {
                wrapped = t - (t / p).floor() * p;
                &wrapped
            }
            None => t,
        };
        let idx = self
            .breakpoints
            .partition_point(|(bt, _)| bt <= t_eff);
        &self.breakpoints[idx - 1].1
    }

    /// The pointwise min/max envelope of the breakpoint fields.
    pub fn envelope(&self) -> FieldRange<Rational> {
        let n = self.n();
        let mut lo = self.breakpoints[0].1.values().to_vec();
        let mut hi = lo.clone();
        for (_, h) in &self.breakpoints[1..] {
            for i in 0..n {
                let v = &h.values()[i];
                if v < &lo[i] {
                    lo[i] = v.clone();
                }
                if v > &hi[i] {
                    hi[i] = v.clone();
                }
            }
        }
        FieldRange::new(Field::new(lo), Field::new(hi)).expect("envelope is ordered")
    }

    /// The declared range, or the envelope when none was declared.
    pub fn effective_range(&self) -> FieldRange<Rational> {
        self.range.clone().unwrap_or_else(|| self.envelope())
    }
}

/// The square-wave schedule that alternates between the two corners of a
/// range: upper on `[2k*tau, (2k+1)*tau)`, lower on the next half period.
/// A degenerate range collapses to a constant schedule.
pub fn oscillation_schedule(
    range: &FieldRange<Rational>,
    tau: &Rational,
) -> Result<FieldSchedule> {
    if tau <= &Rational::zero() {
        return Err(Error::InvalidParameter("tau must be positive".into()));
    }
    if range.is_degenerate() {
        return FieldSchedule::constant(range.upper().clone()).with_range(range.clone());
    }
    let breakpoints = vec![
        (Rational::zero(), range.upper().clone()),
        (tau.clone(), range.lower().clone()),
    ];
    let period = tau.clone() + tau.clone();
    FieldSchedule::new(breakpoints, Some(period))?.with_range(range.clone())
}

/// Per-agent flip rates at a frozen `(x, h)`: rate 1 exactly when the flip
/// strictly improves, 0 otherwise (ties keep the state). Positive rates
/// are therefore at least 1 and the total is at most `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateMap {
    flips: Vec<bool>,
}

impl RateMap {
    pub fn rate(&self, i: usize) -> u32 {
        self.flips[i] as u32
    }

    pub fn total(&self) -> u32 {
        self.flips.iter().map(|&f| f as u32).sum()
    }

    pub fn is_absorbing(&self) -> bool {
        self.flips.iter().all(|&f| !f)
    }

    /// Agents with a positive flip rate.
    pub fn active(&self) -> Vec<usize> {
        self.flips
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Rates of the flip transitions out of configuration `x` under field `h`.
pub fn transition_rates<S: Scalar>(net: &Network<S>, h: &Field<S>, x: &Config) -> RateMap {
    assert_eq!(net.n(), x.len());
    assert_eq!(net.n(), h.len());
    let flips = (0..net.n())
        .map(|i| {
            let d = drive(net, h, x, i);
            match x.get(i) {
                Spin::Up => d < S::zero(),
                Spin::Down => d > S::zero(),
            }
        })
        .collect();
    RateMap { flips }
}

/// One state flip of the simulated chain.
#[derive(Debug, Clone, PartialEq)]
pub struct Event {
    pub time: f64,
    pub agent: usize,
    pub new_state: Spin,
}

/// A full simulation record. `samples` tracks the magnetization at time 0
/// and after every event; `absorbed_at` is set once the chain sits in a
/// consensus that no field in the schedule's range can break, at which
/// point the run stops early (no further event is possible).
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub seed: u64,
    pub initial: Config,
    pub events: Vec<Event>,
    pub samples: Vec<(f64, i64)>,
    pub hitting_time_consensus: Option<f64>,
    pub final_config: Config,
    pub absorbed_at: Option<f64>,
}

impl Trajectory {
    /// The discrete sequence of configurations at flip events, initial
    /// configuration first.
    pub fn jump_chain(&self) -> Vec<Config> {
        let mut out = Vec::with_capacity(self.events.len() + 1);
        let mut cur = self.initial.clone();
        out.push(cur.clone());
        for ev in &self.events {
            cur.set(ev.agent, ev.new_state);
            out.push(cur.clone());
        }
        out
    }

    /// How many times the chain entered all-up and all-down consensus
    /// (starting inside one counts as a visit).
    pub fn consensus_visits(&self) -> (usize, usize) {
        let mut plus = 0;
        let mut minus = 0;
        let mut prev: Option<Spin> = None;
        for c in self.jump_chain() {
            let cur = c.consensus();
            match cur {
                Some(Spin::Up) if prev != Some(Spin::Up) => plus += 1,
                Some(Spin::Down) if prev != Some(Spin::Down) => minus += 1,
                _ => {}
            }
            prev = cur;
        }
        (plus, minus)
    }

    /// Number of flip events up to and including the first consensus hit.
    pub fn events_to_consensus(&self) -> Option<usize> {
        let t = self.hitting_time_consensus?;
        Some(self.events.iter().filter(|e| e.time <= t).count())
    }
}

fn consensus_is_invariant(
    net: &Network<Rational>,
    range: &FieldRange<Rational>,
    spin: Spin,
) -> bool {
    (0..net.n()).all(|i| match spin {
        Spin::Up => net.out_degree(i) > &-range.lower()[i].clone(),
        Spin::Down => net.out_degree(i) > &range.upper()[i],
    })
}

/// Runs the dynamics from `x0` until `horizon`, driven by the schedule and
/// the seed. Identical inputs give a bit-identical trajectory.
///
/// Per tick the simulator draws the inter-tick time, then the ticking
/// agent, in that order. The agent applies the threshold rule with the
/// field at the tick time and the pre-tick states of the others; a zero
/// drive keeps the current state. A run stops early only when it is
/// provably stuck: the configuration is consensus and the out-degrees
/// strictly dominate the worst field in the schedule's effective range.
pub fn simulate(
    net: &Network<Rational>,
    schedule: &FieldSchedule,
    x0: &Config,
    horizon: f64,
    seed: u64,
) -> Trajectory {
    let n = net.n();
    assert_eq!(x0.len(), n, "initial configuration dimension mismatch");
    assert_eq!(schedule.n(), n, "schedule dimension mismatch");
    assert!(horizon >= 0.0 && horizon.is_finite());

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut x = x0.clone();
    let mut events: Vec<Event> = Vec::new();
    let mut samples = vec![(0.0, x.magnetization())];
    let invariance_range = schedule.effective_range();
    let mut hitting = None;
    let mut absorbed_at = None;
    if let Some(spin) = x.consensus() {
        hitting = Some(0.0);
        if consensus_is_invariant(net, &invariance_range, spin) {
            absorbed_at = Some(0.0);
        }
    }

    let mut t = 0.0f64;
    while n > 0 && absorbed_at.is_none() {
        let dt: f64 = rng.sample::<f64, _>(Exp1) / n as f64;
        let next = t + dt;
        if next > horizon {
            break;
        }
        t = next;
        let agent = rng.gen_range(0..n);
        let t_exact = Rational::from_float(t).expect("event times are finite");
        let h = schedule.field_at(&t_exact);
        let d = drive(net, h, &x, agent);
        let new = if d > Rational::zero() {
            Spin::Up
        } else if d < Rational::zero() {
            Spin::Down
        } else {
            x.get(agent)
        };
        if new != x.get(agent) {
            x.set(agent, new);
            events.push(Event {
                time: t,
                agent,
                new_state: new,
            });
            samples.push((t, x.magnetization()));
            if let Some(spin) = x.consensus() {
                if hitting.is_none() {
                    hitting = Some(t);
                }
                if consensus_is_invariant(net, &invariance_range, spin) {
                    absorbed_at = Some(t);
                }
            }
        }
    }

    Trajectory {
        seed,
        initial: x0.clone(),
        events,
        samples,
        hitting_time_consensus: hitting,
        final_config: x,
        absorbed_at,
    }
}

const SPLITMIX_GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(SPLITMIX_GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-run seed derivation for Monte Carlo batches:
/// `mix_seed(base, k) = splitmix64(base + (k + 1) * 0x9E3779B97F4A7C15)`
/// with wrapping arithmetic throughout.
pub fn mix_seed(base: u64, run: u64) -> u64 {
    splitmix64(base.wrapping_add(run.wrapping_add(1).wrapping_mul(SPLITMIX_GOLDEN)))
}

/// Salt separating the initial-condition stream from the dynamics stream,
/// so random starts do not perturb the tick sequence of a run.
const INIT_STREAM_SALT: u64 = 0xD1B5_4A32_D192_ED03;

/// How Monte Carlo runs pick their initial configuration.
#[derive(Debug, Clone)]
pub enum InitialCondition {
    Fixed(Config),
    /// Uniformly random states, drawn from a seed stream independent of
    /// the dynamics stream.
    Random,
}

impl InitialCondition {
    fn draw(&self, n: usize, base_seed: u64, run: u64) -> Config {
        match self {
            InitialCondition::Fixed(c) => {
                assert_eq!(c.len(), n);
                c.clone()
            }
            InitialCondition::Random => {
                let mut rng =
                    ChaCha12Rng::seed_from_u64(mix_seed(base_seed ^ INIT_STREAM_SALT, run));
                Config::new(
                    (0..n)
                        .map(|_| if rng.gen::<bool>() { Spin::Up } else { Spin::Down })
                        .collect(),
                )
            }
        }
    }
}

/// Aggregated absorption results of a batch of seeded runs.
#[derive(Debug, Clone, PartialEq)]
pub struct HittingStats {
    pub runs: usize,
    /// Runs that ended provably stuck in all-up.
    pub absorbed_plus: usize,
    /// Runs that ended provably stuck in all-down.
    pub absorbed_minus: usize,
    /// Runs still live at the horizon.
    pub not_absorbed: usize,
    /// First consensus hit per run, whether or not it was absorbing.
    pub hitting_times: Vec<Option<f64>>,
    /// Flip events up to the first consensus hit, per run.
    pub events_to_consensus: Vec<Option<usize>>,
}

impl HittingStats {
    pub fn fraction_plus(&self) -> f64 {
        self.absorbed_plus as f64 / self.runs as f64
    }

    pub fn fraction_minus(&self) -> f64 {
        self.absorbed_minus as f64 / self.runs as f64
    }
}

/// Runs `runs` independent simulations with per-run seeds
/// `mix_seed(base_seed, k)` and aggregates absorption statistics. With a
/// fixed initial condition, run `k` reproduces
/// `simulate(net, schedule, x0, horizon, mix_seed(base_seed, k))` exactly.
pub fn hitting_stats(
    net: &Network<Rational>,
    schedule: &FieldSchedule,
    init: &InitialCondition,
    runs: usize,
    horizon: f64,
    base_seed: u64,
) -> Result<HittingStats> {
    if runs == 0 {
        return Err(Error::InvalidParameter("at least one run is required".into()));
    }
    let mut stats = HittingStats {
        runs,
        absorbed_plus: 0,
        absorbed_minus: 0,
        not_absorbed: 0,
        hitting_times: Vec::with_capacity(runs),
        events_to_consensus: Vec::with_capacity(runs),
    };
    for k in 0..runs as u64 {
        let x0 = init.draw(net.n(), base_seed, k);
        let traj = simulate(net, schedule, &x0, horizon, mix_seed(base_seed, k));
        match (traj.absorbed_at.is_some(), traj.final_config.consensus()) {
            (true, Some(Spin::Up)) => stats.absorbed_plus += 1,
            (true, Some(Spin::Down)) => stats.absorbed_minus += 1,
            _ => stats.not_absorbed += 1,
        }
        stats.hitting_times.push(traj.hitting_time_consensus);
        stats.events_to_consensus.push(traj.events_to_consensus());
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn rat(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn field(vals: &[i64]) -> Field<Rational> {
        Field::new(vals.iter().map(|&v| rat(v)).collect())
    }

    fn cfg(vals: &[i8]) -> Config {
        Config::from_values(vals).unwrap()
    }

    #[test]
    fn rates_at_a_fixed_point_vanish() {
        let net = samples::five_node();
        let h = field(&[0, -1, 0, 0, 1]);
        let x = cfg(&[-1, -1, -1, 1, 1]);
        assert!(transition_rates(&net, &h, &x).is_absorbing());
    }

    #[test]
    fn rates_single_unstable_agent() {
        let net = samples::five_node();
        let x = cfg(&[1, -1, -1, -1, -1]);
        let rates = transition_rates(&net, &Field::zero(5), &x);
        assert_eq!(rates.active(), vec![0]);
        assert_eq!(rates.total(), 1);
    }

    #[test]
    fn rates_vanish_at_supported_consensus() {
        let net = samples::five_node();
        let rates = transition_rates(&net, &Field::zero(5), &Config::all_up(5));
        assert!(rates.is_absorbing());
    }

    #[test]
    fn fixed_point_runs_produce_no_events() {
        let net = samples::five_node();
        let schedule = FieldSchedule::constant(field(&[0, -1, 0, 0, 1]));
        let x0 = cfg(&[-1, -1, -1, 1, 1]);
        for seed in 0..10 {
            let traj = simulate(&net, &schedule, &x0, 1e3, seed);
            assert!(traj.events.is_empty());
            assert_eq!(traj.final_config, x0);
            assert_eq!(traj.hitting_time_consensus, None);
        }
    }

    #[test]
    fn stubborn_field_flips_every_agent_once() {
        let net = samples::five_node();
        let schedule = FieldSchedule::constant(field(&[10, 10, 10, 10, 10]));
        let traj = simulate(&net, &schedule, &Config::all_down(5), 1e4, 42);
        assert_eq!(traj.events.len(), 5);
        assert_eq!(traj.final_config, Config::all_up(5));
        let mut agents: Vec<usize> = traj.events.iter().map(|e| e.agent).collect();
        agents.sort_unstable();
        assert_eq!(agents, vec![0, 1, 2, 3, 4]);
        // absorbed as soon as the last agent flipped
        assert_eq!(traj.absorbed_at, Some(traj.events.last().unwrap().time));
        assert_eq!(traj.hitting_time_consensus, traj.absorbed_at);
    }

    #[test]
    fn zero_horizon_keeps_the_initial_sample_only() {
        let net = samples::five_node();
        let schedule = FieldSchedule::constant(Field::zero(5));
        let x0 = cfg(&[1, -1, 1, -1, 1]);
        let traj = simulate(&net, &schedule, &x0, 0.0, 7);
        assert!(traj.events.is_empty());
        assert_eq!(traj.samples, vec![(0.0, 1)]);
        assert_eq!(traj.final_config, x0);
    }

    #[test]
    fn oscillation_schedule_shape() {
        let lo = field(&[0, 0, 0, 0, 0]);
        let hi = field(&[0, 2, 0, 0, 2]);
        let range = FieldRange::new(lo.clone(), hi.clone()).unwrap();
        let s = oscillation_schedule(&range, &rat(5)).unwrap();
        assert_eq!(s.breakpoints().len(), 2);
        assert_eq!(s.period(), Some(&rat(10)));
        assert_eq!(s.field_at(&rat(0)), &hi);
        assert_eq!(s.field_at(&rat(2)), &hi);
        assert_eq!(s.field_at(&rat(5)), &lo); // new value applies at its breakpoint
        assert_eq!(s.field_at(&rat(12)), &hi);
        assert_eq!(s.field_at(&rat(17)), &lo);
        assert_eq!(s.field_at(&rat(20)), &hi);

        assert!(matches!(
            oscillation_schedule(&range, &rat(0)),
            Err(Error::InvalidParameter(_))
        ));

        let degenerate = FieldRange::point(lo.clone());
        let s = oscillation_schedule(&degenerate, &rat(5)).unwrap();
        assert_eq!(s.breakpoints().len(), 1);
        assert_eq!(s.period(), None);
    }

    #[test]
    fn schedule_validation() {
        let mk = |t: i64, v: i64| (rat(t), field(&[v]));
        assert!(FieldSchedule::new(vec![], None).is_err());
        assert!(FieldSchedule::new(vec![mk(1, 0)], None).is_err());
        assert!(FieldSchedule::new(vec![mk(0, 0), mk(5, 1), mk(3, 2)], None).is_err());
        assert!(FieldSchedule::new(vec![mk(0, 0), mk(5, 1)], Some(rat(5))).is_err());
        assert!(FieldSchedule::new(vec![mk(0, 0), mk(5, 1)], Some(rat(6))).is_ok());
        // a field outside the attached range is rejected
        let s = FieldSchedule::new(vec![mk(0, 0), mk(5, 3)], None).unwrap();
        let r = FieldRange::new(field(&[0]), field(&[2])).unwrap();
        assert!(matches!(s.with_range(r), Err(Error::Schedule(_))));
    }

    #[test]
    fn determinism_and_seed_sensitivity() {
        let net = samples::five_node();
        let range = FieldRange::new(Field::zero(5), field(&[0, 2, 0, 0, 2])).unwrap();
        let schedule = oscillation_schedule(&range, &rat(3)).unwrap();
        let x0 = cfg(&[1, -1, 1, -1, 1]);
        let a = simulate(&net, &schedule, &x0, 50.0, 1234);
        let b = simulate(&net, &schedule, &x0, 50.0, 1234);
        assert_eq!(a, b);
        let c = simulate(&net, &schedule, &x0, 50.0, 1235);
        assert_ne!(a.events, c.events);
    }

    #[test]
    fn single_run_stats_reproduce_simulate() {
        let net = samples::five_node();
        let schedule = FieldSchedule::constant(field(&[10, 10, 10, 10, 10]));
        let x0 = Config::all_down(5);
        let stats = hitting_stats(
            &net,
            &schedule,
            &InitialCondition::Fixed(x0.clone()),
            1,
            100.0,
            99,
        )
        .unwrap();
        let traj = simulate(&net, &schedule, &x0, 100.0, mix_seed(99, 0));
        assert_eq!(stats.absorbed_plus, 1);
        assert_eq!(stats.hitting_times, vec![traj.hitting_time_consensus]);
        assert_eq!(stats.events_to_consensus, vec![traj.events_to_consensus()]);
    }

    #[test]
    fn all_stubborn_absorption_time_matches_the_maximum_of_clocks() {
        // with every agent up-stubborn the consensus time is the maximum
        // of n unit-rate exponentials, whose mean is the harmonic number
        let net = samples::five_node();
        let schedule = FieldSchedule::constant(field(&[10, 10, 10, 10, 10]));
        let runs = 400;
        let stats = hitting_stats(
            &net,
            &schedule,
            &InitialCondition::Fixed(Config::all_down(5)),
            runs,
            1e4,
            2024,
        )
        .unwrap();
        assert_eq!(stats.absorbed_plus, runs);
        let mean: f64 = stats
            .hitting_times
            .iter()
            .map(|t| t.unwrap())
            .sum::<f64>()
            / runs as f64;
        let harmonic: f64 = (1..=5).map(|k| 1.0 / k as f64).sum();
        assert!(
            (mean - harmonic).abs() < 0.25,
            "mean {mean} too far from {harmonic}"
        );
    }

    #[test]
    fn random_initial_conditions_are_reproducible() {
        let net = samples::five_node();
        let schedule = FieldSchedule::constant(Field::zero(5));
        let a = hitting_stats(&net, &schedule, &InitialCondition::Random, 5, 10.0, 7).unwrap();
        let b = hitting_stats(&net, &schedule, &InitialCondition::Random, 5, 10.0, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn consensus_visit_counting() {
        let net = samples::two_node(1, 1);
        let traj = Trajectory {
            seed: 0,
            initial: Config::all_down(2),
            events: vec![
                Event { time: 1.0, agent: 0, new_state: Spin::Up },
                Event { time: 2.0, agent: 1, new_state: Spin::Up },
                Event { time: 3.0, agent: 0, new_state: Spin::Down },
                Event { time: 4.0, agent: 0, new_state: Spin::Up },
            ],
            samples: vec![],
            hitting_time_consensus: Some(0.0),
            final_config: Config::all_up(2),
            absorbed_at: None,
        };
        let _ = &net;
        assert_eq!(traj.consensus_visits(), (2, 1));
    }
}
