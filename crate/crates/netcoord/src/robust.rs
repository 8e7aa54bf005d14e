//! Indecomposability over field ranges and what it buys: decomposition
//! witnesses, consensus paths that improve strictly under every field in
//! the range, cohesiveness tests, and the biased-uniqueness check.

use crate::config::{Config, Spin};
use crate::game::{is_equilibrium, Field, FieldRange};
use crate::graph::Network;
use crate::lattice::{closure, AdmissiblePath, Direction, PathMode};
use crate::scalar::{two, Scalar};
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// A nontrivial labeled split of the agent set. The labels matter: the
/// plus side is tested against the upper field, the minus side against
/// the lower one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub plus: BTreeSet<usize>,
    pub minus: BTreeSet<usize>,
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids = |set: &BTreeSet<usize>| {
            set.iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "V+={{{}}} V-={{{}}}", ids(&self.plus), ids(&self.minus))
    }
}

/// Outcome of the partition scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Indecomposability {
    Indecomposable,
    /// A partition on which no node satisfies the separation inequality;
    /// it freezes into a coexistent equilibrium under a suitable field.
    Decomposable(Partition),
}

impl Indecomposability {
    pub fn holds(&self) -> bool {
        matches!(self, Indecomposability::Indecomposable)
    }
}

/// Decides `(h-, h+)`-indecomposability by scanning every nontrivial
/// labeled partition `(V+, V-)` of the agents.
///
/// A partition is separable when some side `s` contains a node whose
/// own-side weight, biased by the worst field for that side (`+h+_i` on
/// the plus side, `-h-_i` on the minus side), still falls strictly below
/// its cross-side weight. Indecomposable means every partition is
/// separable; the first non-separable partition is returned otherwise.
///
/// Subsets are walked in Gray-code order with node 1 pinned to one side
/// and own-side weights updated incrementally; both labelings of each
/// split are tested (the condition is not symmetric in the labels), and
/// the lowest Gray index wins, so the reported partition is deterministic.
/// The degenerate range `[h, h]` decides plain `h`-indecomposability.
pub fn is_indecomposable<S: Scalar>(
    net: &Network<S>,
    range: &FieldRange<S>,
    cap: usize,
) -> Result<Indecomposability> {
    let n = net.n();
    assert_eq!(range.n(), n);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "partition scan",
            n,
            cap,
        });
    }
    if n <= 1 {
        return Ok(Indecomposability::Indecomposable);
    }
    assert!(n < 64);
    let w = net.out_degrees();
    let upper = range.upper();
    let lower = range.lower();

    // side[i]: node i currently on the pinned side; own[i] = weight from i
    // into the pinned side. Node 0 stays pinned throughout.
    let mut side = vec![false; n];
    side[0] = true;
    let mut own: Vec<S> = vec![S::zero(); n];
    for (src, wt) in net.in_neighbors(0) {
        own[*src] = own[*src].clone() + wt.clone();
    }

    let full: u64 = (1u64 << (n - 1)) - 1;
    let mut prev_gray: u64 = 0;
    for g in 0..=full {
        let gray = g ^ (g >> 1);
        // flip the node whose bit changed relative to the previous subset
        let diff = gray ^ prev_gray;
        if diff != 0 {
            let bit = diff.trailing_zeros() as usize;
            let node = bit + 1;
            side[node] = !side[node];
            for (src, wt) in net.in_neighbors(node) {
                if side[node] {
                    own[*src] = own[*src].clone() + wt.clone();
                } else {
                    own[*src] = own[*src].clone() - wt.clone();
                }
            }
        }
        prev_gray = gray;
        if gray == full {
            // pinned side is the whole node set: not a partition
            continue;
        }

        // Labeling A: pinned side is V+. A node separates the partition if
        //   i in V+ : own_i + h+_i < w_i - own_i
        //   i in V- : (w_i - own_i) - h-_i < own_i
        let separable_a = (0..n).any(|i| {
            let cross = w[i].clone() - own[i].clone();
            if side[i] {
                own[i].clone() + upper[i].clone() < cross
            } else {
                cross - lower[i].clone() < own[i]
            }
        });
        if !separable_a {
            let (plus, minus) = split_sets(&side, true);
            return Ok(Indecomposability::Decomposable(Partition { plus, minus }));
        }

        // Labeling B: pinned side is V-.
        let separable_b = (0..n).any(|i| {
            let cross = w[i].clone() - own[i].clone();
            if side[i] {
                own[i].clone() - lower[i].clone() < cross
            } else {
                cross + upper[i].clone() < own[i]
            }
        });
        if !separable_b {
            let (minus, plus) = split_sets(&side, true);
            return Ok(Indecomposability::Decomposable(Partition { plus, minus }));
        }
    }
    Ok(Indecomposability::Indecomposable)
}

fn split_sets(side: &[bool], pinned: bool) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let a = side
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == pinned)
        .map(|(i, _)| i)
        .collect();
    let b = side
        .iter()
        .enumerate()
        .filter(|(_, &s)| s != pinned)
        .map(|(i, _)| i)
        .collect();
    (a, b)
}

/// A decomposition made concrete: the partition, the field inside the
/// range that freezes it, and the coexistent configuration it freezes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionWitness<S> {
    pub partition: Partition,
    pub field_star: Field<S>,
    pub config_star: Config,
}

/// Builds the explicit witness behind a decomposable range: the field
/// takes its upper value on the plus side and its lower value on the minus
/// side, and the split configuration is then an equilibrium. `None` when
/// the range is indecomposable.
pub fn decomposition_witness<S: Scalar>(
    net: &Network<S>,
    range: &FieldRange<S>,
    cap: usize,
) -> Result<Option<DecompositionWitness<S>>> {
    let partition = match is_indecomposable(net, range, cap)? {
        Indecomposability::Indecomposable => return Ok(None),
        Indecomposability::Decomposable(p) => p,
    };
    let n = net.n();
    let field_star = Field::new(
        (0..n)
            .map(|i| {
                if partition.plus.contains(&i) {
                    range.upper()[i].clone()
                } else {
                    range.lower()[i].clone()
                }
            })
            .collect(),
    );
    let config_star = Config::new(
        (0..n)
            .map(|i| {
                if partition.plus.contains(&i) {
                    Spin::Up
                } else {
                    Spin::Down
                }
            })
            .collect(),
    );
    assert!(
        is_equilibrium(net, &field_star, &config_star, false),
        "a decomposition must freeze into an equilibrium"
    );
    assert!(!config_star.is_consensus());
    Ok(Some(DecompositionWitness {
        partition,
        field_star,
        config_star,
    }))
}

/// Builds a single-flip path from `x` to a consensus that is a strict
/// improvement path under every field in the range. Requires the range to
/// be indecomposable; the error carries the failing partition otherwise.
///
/// The construction picks the corner field aligned with `x`, runs the
/// up-then-down strict closures under it, and keeps the monotone path
/// (computed under the lower corner) when they land on all-up, else the
/// anti-monotone path under the upper corner. Monotone flips that improve
/// under the lower corner improve under every larger field, and dually, so
/// the returned path is range-robust. When both consensuses are reachable
/// the monotone path wins.
pub fn robust_consensus_path<S: Scalar>(
    net: &Network<S>,
    range: &FieldRange<S>,
    x: &Config,
    cap: usize,
) -> Result<AdmissiblePath> {
    if let Indecomposability::Decomposable(p) = is_indecomposable(net, range, cap)? {
        return Err(Error::Decomposable(p));
    }
    let n = net.n();
    assert_eq!(x.len(), n);
    let aligned = range.corner_toward(x);
    let up = closure(net, &aligned, x, Direction::Up, PathMode::Improvement).0;
    let top = closure(net, &aligned, &up, Direction::Down, PathMode::Improvement).0;
    if top == Config::all_up(n) {
        let (fix, path) = closure(net, range.lower(), x, Direction::Up, PathMode::Improvement);
        assert_eq!(
            fix,
            Config::all_up(n),
            "up-closure under the lower corner must reach all-up here"
        );
        Ok(path)
    } else {
        let (fix, path) = closure(net, range.upper(), x, Direction::Down, PathMode::Improvement);
        assert_eq!(
            fix,
            Config::all_down(n),
            "down-closure under the upper corner must reach all-down here"
        );
        Ok(path)
    }
}

/// Cohesiveness of a subset: every member keeps at least the fraction `r`
/// of its out-weight inside the subset. Returns `(cohesive, closed)`,
/// where closed means the complement is `(1-r)`-cohesive.
pub fn cohesive_check<S: Scalar>(
    net: &Network<S>,
    subset: &BTreeSet<usize>,
    r: &S,
) -> Result<(bool, bool)> {
    if r < &S::zero() || r > &S::one() {
        return Err(Error::InvalidParameter(
            "cohesiveness threshold must lie in [0, 1]".into(),
        ));
    }
    let n = net.n();
    if subset.iter().any(|&i| i >= n) {
        return Err(Error::InvalidParameter("subset contains an unknown node".into()));
    }
    let cohesive = subset.iter().all(|&i| {
        let inside = net.restricted_out_degree_by(i, |j| subset.contains(&j));
        inside >= r.clone() * net.out_degree(i).clone()
    });
    let complement_r = S::one() - r.clone();
    let closed = (0..n).filter(|i| !subset.contains(i)).all(|i| {
        let inside = net.restricted_out_degree_by(i, |j| !subset.contains(&j));
        inside >= complement_r.clone() * net.out_degree(i).clone()
    });
    Ok((cohesive, closed))
}

/// Whether `a`-consensus is the unique equilibrium of the game: some agent
/// must be `a`-stubborn, and every nonempty subset of non-stubborn agents
/// must contain a node held below its cross-subset pull. The subset scan
/// runs over the non-stubborn agents and refuses beyond the cap.
pub fn unique_biased_check<S: Scalar>(
    net: &Network<S>,
    h: &Field<S>,
    a: Spin,
    cap: usize,
) -> Result<bool> {
    let n = net.n();
    assert_eq!(h.len(), n);
    let ah = |i: usize| match a {
        Spin::Up => h[i].clone(),
        Spin::Down => -h[i].clone(),
    };
    // (a) some agent is a-stubborn
    if !(0..n).any(|i| net.out_degree(i) < &ah(i)) {
        return Ok(false);
    }
    let free: Vec<usize> = (0..n).filter(|&i| net.out_degree(i) >= &ah(i)).collect();
    let m = free.len();
    if m > cap {
        return Err(Error::CapExceeded {
            what: "subset scan",
            n: m,
            cap,
        });
    }
    let mut free_bit = vec![usize::MAX; n];
    for (b, &node) in free.iter().enumerate() {
        free_bit[node] = b;
    }
    // (b) every nonempty R of non-stubborn agents has a node with
    //     w_i^R < w_i^{V \ R} + a h_i, i.e. 2 w_i^R < w_i + a h_i
    for mask in 1u64..(1u64 << m) {
        let in_r = |j: usize| free_bit[j] != usize::MAX && mask >> free_bit[j] & 1 == 1;
        let found = free
            .iter()
            .filter(|&&i| in_r(i))
            .any(|&i| {
                let inside = net.restricted_out_degree_by(i, in_r);
                two::<S>() * inside < net.out_degree(i).clone() + ah(i)
            });
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}
