//! The coordination game on a network with an external field.
//!
//! Agent `i` playing `x_i` earns `x_i * (sum_j W_ij x_j + h_i)`: weighted
//! agreement with out-neighbors plus alignment with the field. All tests
//! below reduce to exact sign comparisons of the drive
//! `sum_j W_ij x_j + h_i`.

use crate::config::{Config, Spin};
use crate::graph::Network;
use crate::robust::{self, Indecomposability};
use crate::scalar::Scalar;
use crate::Result;
use std::collections::BTreeSet;
use std::ops::Index;

/// Per-agent external field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field<S>(Vec<S>);

impl<S: Scalar> Field<S> {
    pub fn new(values: Vec<S>) -> Self {
        Field(values)
    }

    pub fn zero(n: usize) -> Self {
        Field(vec![S::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[S] {
        &self.0
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &Field<S>) -> bool {
        assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl<S> Index<usize> for Field<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.0[i]
    }
}

/// A hyper-rectangle of fields `[lower, upper]`, entrywise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldRange<S> {
    lower: Field<S>,
    upper: Field<S>,
}

impl<S: Scalar> FieldRange<S> {
    pub fn new(lower: Field<S>, upper: Field<S>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(crate::Error::DimensionMismatch(format!(
                "lower field has {} entries, upper has {}",
                lower.len(),
                upper.len()
            )));
        }
        if !lower.le(&upper) {
            return Err(crate::Error::InvalidParameter(
                "field range requires lower <= upper entrywise".into(),
            ));
        }
        Ok(FieldRange { lower, upper })
    }

    /// The degenerate range `[h, h]`.
    pub fn point(h: Field<S>) -> Self {
        FieldRange {
            lower: h.clone(),
            upper: h,
        }
    }

    pub fn lower(&self) -> &Field<S> {
        &self.lower
    }

    pub fn upper(&self) -> &Field<S> {
        &self.upper
    }

    pub fn n(&self) -> usize {
        self.lower.len()
    }

    pub fn is_degenerate(&self) -> bool {
        self.lower == self.upper
    }

    pub fn contains(&self, h: &Field<S>) -> bool {
        self.lower.le(h) && h.le(&self.upper)
    }

    /// The corner of the rectangle that pushes every agent toward its
    /// current state: upper where `x` is up, lower where `x` is down.
    pub fn corner_toward(&self, x: &Config) -> Field<S> {
        assert_eq!(x.len(), self.n());
        Field(
            (0..self.n())
                .map(|i| match x.get(i) {
                    Spin::Up => self.upper[i].clone(),
                    Spin::Down => self.lower[i].clone(),
                })
                .collect(),
        )
    }
}

/// The drive `sum_j W_ij x_j + h_i` that agent `i` compares against zero.
/// Independent of `x_i` itself (the diagonal is zero).
pub fn drive<S: Scalar>(net: &Network<S>, h: &Field<S>, x: &Config, i: usize) -> S {
    net.neighbor_sum(i, x) + h[i].clone()
}

/// Utility of agent `i` in configuration `x`.
pub fn utility<S: Scalar>(net: &Network<S>, h: &Field<S>, x: &Config, i: usize) -> S {
    debug_assert_eq!(net.n(), h.len());
    debug_assert_eq!(net.n(), x.len());
    let d = drive(net, h, x, i);
    match x.get(i) {
        Spin::Up => d,
        Spin::Down => -d,
    }
}

/// Best-response correspondence value of one agent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BestResponse {
    Minus,
    Plus,
    Either,
}

impl BestResponse {
    pub fn contains(self, s: Spin) -> bool {
        match self {
            BestResponse::Either => true,
            BestResponse::Plus => s == Spin::Up,
            BestResponse::Minus => s == Spin::Down,
        }
    }

    pub fn singleton(self) -> Option<Spin> {
        match self {
            BestResponse::Plus => Some(Spin::Up),
            BestResponse::Minus => Some(Spin::Down),
            BestResponse::Either => None,
        }
    }
}

/// Best response of agent `i` given the others' states in `x` (the agent's
/// own entry is ignored). Threshold form: up when the up-weight exceeds
/// `(w_i - h_i) / 2`, down when below, both on a tie; an isolated agent
/// follows the sign of its field.
pub fn best_response<S: Scalar>(
    net: &Network<S>,
    h: &Field<S>,
    x: &Config,
    i: usize,
) -> BestResponse {
    let d = drive(net, h, x, i);
    if d > S::zero() {
        BestResponse::Plus
    } else if d < S::zero() {
        BestResponse::Minus
    } else {
        BestResponse::Either
    }
}

/// Equilibrium test. Non-strict: every agent weakly prefers its state
/// (`u_i(x) >= 0` for all `i`). Strict: every agent's best response is the
/// singleton of its state, so agents with a zero drive (including isolated
/// agents under a zero field) rule strictness out.
pub fn is_equilibrium<S: Scalar>(
    net: &Network<S>,
    h: &Field<S>,
    x: &Config,
    strict: bool,
) -> bool {
    assert_eq!(net.n(), x.len());
    assert_eq!(net.n(), h.len());
    (0..net.n()).all(|i| {
        let d = drive(net, h, x, i);
        let aligned = match x.get(i) {
            Spin::Up => d,
            Spin::Down => -d,
        };
        if strict {
            aligned > S::zero()
        } else {
            aligned >= S::zero()
        }
    })
}

/// Agents for which `a` is strictly dominant: `a * h_i > w_i`.
pub fn stubborn_set<S: Scalar>(net: &Network<S>, h: &Field<S>, a: Spin) -> BTreeSet<usize> {
    assert_eq!(net.n(), h.len());
    (0..net.n())
        .filter(|&i| {
            let ah = match a {
                Spin::Up => h[i].clone(),
                Spin::Down => -h[i].clone(),
            };
            &ah > net.out_degree(i)
        })
        .collect()
}

/// Which consensus configurations are equilibria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConsensusKind {
    /// Both consensus configurations are equilibria (`-w <= h <= w`).
    Regular,
    /// Only all-up is an equilibrium.
    BiasedPlus,
    /// Only all-down is an equilibrium.
    BiasedMinus,
    /// Neither consensus is an equilibrium.
    Frustrated,
}

/// Classification of a single game: consensus kind plus whether some
/// coexistent equilibrium exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GameClass {
    pub kind: ConsensusKind,
    pub polarizable: bool,
}

/// Classifies the game with field `h`. Boundary cases (`|h_i| = w_i`)
/// count as non-strict throughout, so exact boundary fields are Regular.
/// The polarizability bit needs the partition scan and therefore the cap.
pub fn classify_field<S: Scalar>(
    net: &Network<S>,
    h: &Field<S>,
    cap: usize,
) -> Result<GameClass> {
    assert_eq!(net.n(), h.len());
    let minus_is_eq = (0..net.n()).all(|i| &h[i] <= net.out_degree(i));
    let plus_is_eq = (0..net.n()).all(|i| &-h[i].clone() <= net.out_degree(i));
    let kind = match (plus_is_eq, minus_is_eq) {
        (true, true) => ConsensusKind::Regular,
        (true, false) => ConsensusKind::BiasedPlus,
        (false, true) => ConsensusKind::BiasedMinus,
        (false, false) => ConsensusKind::Frustrated,
    };
    let polarizable = matches!(
        robust::is_indecomposable(net, &FieldRange::point(h.clone()), cap)?,
        Indecomposability::Decomposable(_)
    );
    Ok(GameClass { kind, polarizable })
}

/// Robust consensus kind over a whole field range, or `Mixed` when the
/// range straddles several kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RobustKind {
    Regular,
    BiasedPlus,
    BiasedMinus,
    Frustrated,
    /// None of the three uniform conditions holds over the range.
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RobustClass {
    pub kind: RobustKind,
    /// Whether some field in the range admits a coexistent equilibrium.
    pub polarizable: bool,
}

/// Classifies the game uniformly over a field range. The kind is robust
/// exactly when one of three entrywise conditions on `(w, h^-, h^+)`
/// holds; they are mutually exclusive, and `Mixed` is reported rather than
/// guessed when none applies.
pub fn classify_range<S: Scalar>(
    net: &Network<S>,
    range: &FieldRange<S>,
    cap: usize,
) -> Result<RobustClass> {
    assert_eq!(net.n(), range.n());
    let w = net.out_degrees();
    let lower = range.lower();
    let upper = range.upper();
    let all = |f: &dyn Fn(usize) -> bool| (0..net.n()).all(f);
    // w >= h+ : all-down stays an equilibrium everywhere in the range
    let ge_upper = all(&|i| w[i] >= upper[i]);
    // w >= -h- : all-up stays an equilibrium everywhere in the range
    let ge_neg_lower = all(&|i| w[i] >= -lower[i].clone());
    // w >= h- / w >= -h+ : the same at the most favorable corner only
    let ge_lower = all(&|i| w[i] >= lower[i]);
    let ge_neg_upper = all(&|i| w[i] >= -upper[i].clone());

    let kind = if ge_upper && ge_neg_lower {
        RobustKind::Regular
    } else if ge_neg_lower && !ge_lower {
        RobustKind::BiasedPlus
    } else if ge_upper && !ge_neg_upper {
        RobustKind::BiasedMinus
    } else if !ge_neg_upper && !ge_lower {
        RobustKind::Frustrated
    } else {
        RobustKind::Mixed
    };
    let polarizable = matches!(
        robust::is_indecomposable(net, range, cap)?,
        Indecomposability::Decomposable(_)
    );
    Ok(RobustClass { kind, polarizable })
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
    fn utility_at_the_coexistent_fixed_point() {
        let net = samples::five_node();
        let h = field(&[0, -1, 0, 0, 1]);
        let x = cfg(&[-1, -1, -1, 1, 1]);
        assert_eq!(utility(&net, &h, &x, 0), rat(1));
        assert_eq!(utility(&net, &h, &x, 1), rat(0));
        for i in 0..5 {
            assert!(utility(&net, &h, &x, i) >= rat(0));
        }
    }

    #[test]
    fn utility_under_unanimity_equals_out_degree() {
        let net = samples::five_node();
        let h = Field::zero(5);
        let ones = Config::all_up(5);
        for i in 0..5 {
            assert_eq!(&utility(&net, &h, &ones, i), net.out_degree(i));
        }
    }

    #[test]
    fn best_response_threshold_cases() {
        let net = samples::five_node();
        let h = Field::zero(5);
        let ones = Config::all_up(5);
        assert_eq!(best_response(&net, &h, &ones, 1), BestResponse::Plus);
        let x = cfg(&[-1, -1, -1, 1, 1]);
        // node 3 splits its weight evenly: tie
        assert_eq!(best_response(&net, &h, &x, 2), BestResponse::Either);
    }

    #[test]
    fn isolated_agent_follows_field_sign() {
        let net = Network::<Rational>::from_edges(1, []).unwrap();
        let x = Config::all_up(1);
        assert_eq!(
            best_response(&net, &field(&[-2]), &x, 0),
            BestResponse::Minus
        );
        assert_eq!(best_response(&net, &field(&[0]), &x, 0), BestResponse::Either);
        assert_eq!(best_response(&net, &field(&[3]), &x, 0), BestResponse::Plus);
    }

    #[test]
    fn equilibrium_tests() {
        let net = samples::five_node();
        let hstar = field(&[0, -1, 0, 0, 1]);
        let xstar = cfg(&[-1, -1, -1, 1, 1]);
        assert!(is_equilibrium(&net, &hstar, &xstar, false));
        // ties block strictness
        assert!(!is_equilibrium(&net, &hstar, &xstar, true));

        let zero = Field::zero(5);
        assert!(is_equilibrium(&net, &zero, &Config::all_up(5), true));
        assert!(!is_equilibrium(&net, &zero, &cfg(&[1, -1, -1, -1, -1]), false));
    }

    #[test]
    fn stubborn_sets() {
        let net = samples::five_node();
        assert!(stubborn_set(&net, &field(&[0, 2, 0, 0, 2]), Spin::Up).is_empty());
        let s = stubborn_set(&net, &field(&[2, 0, 0, 0, 0]), Spin::Up);
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![0]);
        assert!(stubborn_set(&net, &Field::zero(5), Spin::Up).is_empty());
        assert!(stubborn_set(&net, &Field::zero(5), Spin::Down).is_empty());
    }

    #[test]
    fn two_node_classification_regions() {
        let net = samples::two_node(3, 1);
        let c = classify_field(&net, &field(&[0, 0]), CAP).unwrap();
        assert_eq!(c.kind, ConsensusKind::Regular);
        assert!(!c.polarizable);

        let c = classify_field(&net, &field(&[4, -2]), CAP).unwrap();
        assert_eq!(c.kind, ConsensusKind::Frustrated);
        assert!(c.polarizable);

        let c = classify_field(&net, &field(&[4, 0]), CAP).unwrap();
        assert_eq!(c.kind, ConsensusKind::BiasedPlus);
        assert!(!c.polarizable);
    }

    #[test]
    fn robust_classification() {
        let net = samples::five_node();
        let range = FieldRange::new(Field::zero(5), field(&[0, 2, 0, 0, 2])).unwrap();
        let c = classify_range(&net, &range, CAP).unwrap();
        assert_eq!(c.kind, RobustKind::Regular);
        assert!(!c.polarizable);

        // a strong positive bias on node 1 of the seven-node sample
        let net7 = samples::seven_node_chain();
        let lower = Field::new(
            [Rational::new(7.into(), 2.into())]
                .into_iter()
                .chain((1..7).map(|_| rat(0)))
                .collect(),
        );
        let upper = Field::new(
            [rat(5)].into_iter().chain((1..7).map(|_| rat(0))).collect(),
        );
        let c = classify_range(&net7, &FieldRange::new(lower, upper).unwrap(), CAP).unwrap();
        assert_eq!(c.kind, RobustKind::BiasedPlus);

        // degenerate range classifies like the single field
        let net2 = samples::two_node(3, 1);
        let h = Field::zero(2);
        let point = FieldRange::point(h.clone());
        let rc = classify_range(&net2, &point, CAP).unwrap();
        let fc = classify_field(&net2, &h, CAP).unwrap();
        assert_eq!(rc.kind, RobustKind::Regular);
        assert_eq!(fc.kind, ConsensusKind::Regular);
        assert_eq!(rc.polarizable, fc.polarizable);
    }
}
