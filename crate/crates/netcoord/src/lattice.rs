//! Single-flip path machinery and the lattice of equilibria.
//!
//! A path changes one agent at a time. Monotone paths flip agents up only,
//! anti-monotone paths down only; improvement paths require every flip to
//! strictly raise the flipping agent's utility, best-response paths only
//! weakly. The four closure maps (up/down x strict/weak) land on the
//! extremal configurations reachable that way, and composing them yields
//! the extremal equilibria reachable from any starting point.

use crate::config::{Config, Spin};
use crate::game::{drive, is_equilibrium, Field, FieldRange};
use crate::graph::Network;
use crate::robust::{self, Indecomposability};
use crate::scalar::Scalar;
use crate::{Error, Result};
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathMode {
    /// Strict utility improvement at every step.
    Improvement,
    /// Weak improvement at every step.
    BestResponse,
}

/// A single-flip path: a start configuration and the ordered flips applied
/// to it. Each step records the flipping agent and its new state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePath {
    pub start: Config,
    pub steps: Vec<(usize, Spin)>,
    pub mode: PathMode,
}

impl AdmissiblePath {
    pub fn empty(start: Config, mode: PathMode) -> Self {
        AdmissiblePath {
            start,
            steps: Vec::new(),
            mode,
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Every flip goes up. Vacuously true for the empty path.
    pub fn is_monotone(&self) -> bool {
        self.steps.iter().all(|&(_, s)| s == Spin::Up)
    }

    /// Every flip goes down. Vacuously true for the empty path.
    pub fn is_anti_monotone(&self) -> bool {
        self.steps.iter().all(|&(_, s)| s == Spin::Down)
    }

    /// The configuration after all steps.
    pub fn final_config(&self) -> Config {
        let mut cur = self.start.clone();
        for &(i, s) in &self.steps {
            cur.set(i, s);
        }
        cur
    }

    /// All intermediate configurations, start first.
    pub fn configs(&self) -> Vec<Config> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = self.start.clone();
        out.push(cur.clone());
        for &(i, s) in &self.steps {
            cur.set(i, s);
            out.push(cur.clone());
        }
        out
    }

    /// Replays the path under the game `(net, h)` and checks that every
    /// step is a genuine single flip that improves the flipping agent's
    /// utility, strictly in `Improvement` mode and weakly otherwise.
    pub fn is_valid_under<S: Scalar>(&self, net: &Network<S>, h: &Field<S>) -> bool {
        self.is_valid_with_mode(net, h, self.mode)
    }

    /// Same replay with an explicit mode, so a weak path can be re-checked
    /// for strictness.
    pub fn is_valid_with_mode<S: Scalar>(
        &self,
        net: &Network<S>,
        h: &Field<S>,
        mode: PathMode,
    ) -> bool {
        let mut cur = self.start.clone();
        for &(i, new) in &self.steps {
            if cur.get(i) == new {
                return false;
            }
            let d = drive(net, h, &cur, i);
            let gain_sign = match new {
                Spin::Up => d,
                Spin::Down => -d,
            };
            let ok = match mode {
                PathMode::Improvement => gain_sign > S::zero(),
                PathMode::BestResponse => gain_sign >= S::zero(),
            };
            if !ok {
                return false;
            }
            cur.set(i, new);
        }
        true
    }
}

/// Sweeps single flips in the given direction until none is eligible and
/// returns the fixed point together with the witness path.
///
/// Up with `Improvement` computes the maximal configuration reachable by a
/// monotone strict-improvement path, Down the minimal one; `BestResponse`
/// allows ties. The sweep is a round-robin pass over agents in id order,
/// repeated until stable; every agent flips at most once, so paths have
/// length at most `n`. The fixed point itself is order-independent.
pub fn closure<S: Scalar>(
    net: &Network<S>,
    h: &Field<S>,
    x: &Config,
    direction: Direction,
    mode: PathMode,
) -> (Config, AdmissiblePath) {
    assert_eq!(net.n(), x.len());
    assert_eq!(net.n(), h.len());
    let mut cur = x.clone();
    let mut steps = Vec::new();
    loop {
        let mut changed = false;
        for i in 0..net.n() {
            let movable = match direction {
                Direction::Up => cur.get(i) == Spin::Down,
                Direction::Down => cur.get(i) == Spin::Up,
            };
            if !movable {
                continue;
            }
            let d = drive(net, h, &cur, i);
            let flip = match (direction, mode) {
                (Direction::Up, PathMode::Improvement) => d > S::zero(),
                (Direction::Up, PathMode::BestResponse) => d >= S::zero(),
                (Direction::Down, PathMode::Improvement) => d < S::zero(),
                (Direction::Down, PathMode::BestResponse) => d <= S::zero(),
            };
            if flip {
                let new = cur.get(i).flipped();
                cur.set(i, new);
                steps.push((i, new));
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let path = AdmissiblePath {
        start: x.clone(),
        steps,
        mode,
    };
    (cur, path)
}

/// The least and greatest equilibria reachable from `x`, via strict paths
/// in `Improvement` mode and weak ones in `BestResponse` mode. Returned as
/// `(least, greatest)`; the final strict closures always land on
/// equilibria.
pub fn ireachable_extremes<S: Scalar>(
    net: &Network<S>,
    h: &Field<S>,
    x: &Config,
    mode: PathMode,
) -> (Config, Config) {
    let up = closure(net, h, x, Direction::Up, mode).0;
    let greatest = closure(net, h, &up, Direction::Down, PathMode::Improvement).0;
    let down = closure(net, h, x, Direction::Down, mode).0;
    let least = closure(net, h, &down, Direction::Up, PathMode::Improvement).0;
    (least, greatest)
}

/// Join and meet inside the equilibrium lattice: the least equilibrium
/// above both inputs and the greatest below both. Errors unless both
/// inputs are equilibria.
pub fn lattice_ops<S: Scalar>(
    net: &Network<S>,
    h: &Field<S>,
    a: &Config,
    b: &Config,
) -> Result<(Config, Config)> {
    if !is_equilibrium(net, h, a, false) || !is_equilibrium(net, h, b, false) {
        return Err(Error::NotEquilibrium);
    }
    let join = closure(net, h, &a.join(b), Direction::Up, PathMode::Improvement).0;
    let meet = closure(net, h, &a.meet(b), Direction::Down, PathMode::Improvement).0;
    Ok((join, meet))
}

/// The full equilibrium set of a game, with its lattice extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquilibriumSet {
    /// All equilibria, sorted.
    pub members: Vec<Config>,
    pub least: Config,
    pub greatest: Config,
}

/// Enumerates all equilibria by scanning the `2^n` configurations with an
/// incrementally updated drive vector. Refuses when `n` exceeds `cap`.
pub fn enumerate_equilibria<S: Scalar>(
    net: &Network<S>,
    h: &Field<S>,
    cap: usize,
) -> Result<EquilibriumSet> {
    let n = net.n();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "equilibrium enumeration",
            n,
            cap,
        });
    }
    assert!(n < 64, "mask enumeration supports at most 63 agents");
    assert_eq!(h.len(), n);

    let mut cur = Config::all_down(n);
    let mut drives: Vec<S> = (0..n).map(|i| drive(net, h, &cur, i)).collect();
    let mut members = Vec::new();
    let is_eq = |cur: &Config, drives: &[S]| {
        (0..n).all(|i| match cur.get(i) {
            Spin::Up => drives[i] >= S::zero(),
            Spin::Down => drives[i] <= S::zero(),
        })
    };
    if is_eq(&cur, &drives) {
        members.push(cur.clone());
    }
    // Gray-code walk: one flip per visited configuration.
    for g in 1u64..(1u64 << n) {
        let j = g.trailing_zeros() as usize;
        let new = cur.get(j).flipped();
        cur.set(j, new);
        for (i, w) in net.in_neighbors(j) {
            let delta = w.clone() + w.clone();
            drives[*i] = match new {
                Spin::Up => drives[*i].clone() + delta,
                Spin::Down => drives[*i].clone() - delta,
            };
        }
        if is_eq(&cur, &drives) {
            members.push(cur.clone());
        }
    }
    assert!(!members.is_empty(), "a coordination game always has equilibria");
    members.sort();
    let least = members
        .iter()
        .skip(1)
        .fold(members[0].clone(), |acc, m| acc.meet(m));
    let greatest = members
        .iter()
        .skip(1)
        .fold(members[0].clone(), |acc, m| acc.join(m));
    debug_assert!(members.contains(&least) && members.contains(&greatest));
    Ok(EquilibriumSet {
        members,
        least,
        greatest,
    })
}

/// Whether the game admits a coexistent (non-consensus) equilibrium.
/// Decided through the partition scan, which handles more agents than
/// enumeration would.
pub fn is_polarizable<S: Scalar>(net: &Network<S>, h: &Field<S>, cap: usize) -> Result<bool> {
    Ok(matches!(
        robust::is_indecomposable(net, &FieldRange::point(h.clone()), cap)?,
        Indecomposability::Decomposable(_)
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use crate::Rational;

    fn rat(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn field(vals: &[i64]) -> Field<Rational> {
        Field::new(vals.iter().map(|&v| rat(v)).collect())
    }

    fn cfg(vals: &[i8]) -> Config {
        Config::from_values(vals).unwrap()
    }

    const CAP: usize = 24;

    #[test]
    fn up_closure_from_an_equilibrium_is_trivial() {
        let net = samples::five_node();
        let (fix, path) = closure(
            &net,
            &Field::zero(5),
            &Config::all_down(5),
            Direction::Up,
            PathMode::Improvement,
        );
        assert_eq!(fix, Config::all_down(5));
        assert!(path.is_empty());

        // all-down stays an equilibrium as long as no agent is up-stubborn,
        // so even a field touching the out-degrees moves nothing
        let (fix, path) = closure(
            &net,
            &field(&[0, 2, 0, 0, 2]),
            &Config::all_down(5),
            Direction::Up,
            PathMode::Improvement,
        );
        assert_eq!(fix, Config::all_down(5));
        assert!(path.is_empty());
    }

    #[test]
    fn weak_up_closure_crosses_ties() {
        let net = samples::five_node();
        let x = cfg(&[-1, -1, -1, 1, 1]);
        let (fix, path) = closure(&net, &Field::zero(5), &x, Direction::Up, PathMode::BestResponse);
        assert_eq!(fix, Config::all_up(5));
        assert_eq!(
            path.steps,
            vec![(1, Spin::Up), (2, Spin::Up), (0, Spin::Up)]
        );
        assert!(path.is_monotone());
        assert!(path.is_valid_under(&net, &Field::zero(5)));
        // strict replay fails on the tie at agent 3
        assert!(!path.is_valid_with_mode(&net, &Field::zero(5), PathMode::Improvement));
    }

    #[test]
    fn reachable_extremes_examples() {
        let net = samples::five_node();
        let zero = Field::zero(5);
        let (least, greatest) =
            ireachable_extremes(&net, &zero, &cfg(&[-1, 1, -1, 1, -1]), PathMode::Improvement);
        assert_eq!(least, Config::all_down(5));
        assert_eq!(greatest, Config::all_up(5));
        assert!(least.le(&greatest));

        // from an equilibrium both extremes are the point itself
        let hstar = field(&[0, -1, 0, 0, 1]);
        let xstar = cfg(&[-1, -1, -1, 1, 1]);
        let (least, greatest) = ireachable_extremes(&net, &hstar, &xstar, PathMode::Improvement);
        assert_eq!(least, xstar);
        assert_eq!(greatest, xstar);
    }

    #[test]
    fn lattice_ops_examples() {
        let net = samples::five_node();
        let zero = Field::zero(5);
        let up = Config::all_up(5);
        let down = Config::all_down(5);
        assert_eq!(
            lattice_ops(&net, &zero, &up, &up).unwrap(),
            (up.clone(), up.clone())
        );
        assert_eq!(
            lattice_ops(&net, &zero, &up, &down).unwrap(),
            (up.clone(), down.clone())
        );
        // non-equilibrium input is a contract violation
        let err = lattice_ops(&net, &zero, &cfg(&[1, -1, -1, -1, -1]), &up);
        assert!(matches!(err, Err(Error::NotEquilibrium)));
    }

    #[test]
    fn enumeration_examples() {
        let net = samples::five_node();
        let set = enumerate_equilibria(&net, &Field::zero(5), CAP).unwrap();
        assert_eq!(
            set.members,
            vec![Config::all_down(5), Config::all_up(5)]
        );
        assert_eq!(set.least, Config::all_down(5));
        assert_eq!(set.greatest, Config::all_up(5));

        let set = enumerate_equilibria(&net, &field(&[0, -1, 0, 0, 1]), CAP).unwrap();
        assert!(set.members.contains(&cfg(&[-1, -1, -1, 1, 1])));

        let lonely = Network::<Rational>::from_edges(1, []).unwrap();
        let set = enumerate_equilibria(&lonely, &Field::zero(1), CAP).unwrap();
        assert_eq!(set.members.len(), 2);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let big = Network::<Rational>::from_edges(21, []).unwrap();
        let err = enumerate_equilibria(&big, &Field::zero(21), 20);
        assert!(matches!(err, Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn polarizability_examples() {
        let net = samples::five_node();
        assert!(is_polarizable(&net, &field(&[1, 0, 0, 0, 0]), CAP).unwrap());
        assert!(!is_polarizable(&net, &Field::zero(5), CAP).unwrap());
        // everyone up-stubborn: unique equilibrium, not polarizable
        assert!(!is_polarizable(&net, &field(&[9, 9, 9, 9, 9]), CAP).unwrap());
    }

    #[test]
    fn closure_path_ends_where_it_says() {
        let net = samples::five_node();
        let h = field(&[2, 0, 0, 0, 0]);
        for mask in 0..32u64 {
            let x = Config::from_mask(5, mask);
            for (dir, mode) in [
                (Direction::Up, PathMode::Improvement),
                (Direction::Down, PathMode::Improvement),
                (Direction::Up, PathMode::BestResponse),
                (Direction::Down, PathMode::BestResponse),
            ] {
                let (fix, path) = closure(&net, &h, &x, dir, mode);
                assert_eq!(path.final_config(), fix);
                assert!(path.is_valid_under(&net, &h));
                assert!(path.len() <= 5);
                match dir {
                    Direction::Up => assert!(path.is_monotone() && x.le(&fix)),
                    Direction::Down => assert!(path.is_anti_monotone() && fix.le(&x)),
                }
            }
        }
    }
}
