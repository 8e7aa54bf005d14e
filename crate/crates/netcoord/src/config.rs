//! Binary agent states and configurations.

use std::fmt;

/// A single agent state, `-1` or `+1`.
///
/// `Down < Up` so that the derived order on spins matches the numeric
/// order of the values they encode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Spin {
    Down,
    Up,
}

impl Spin {
    pub fn value(self) -> i8 {
        match self {
            Spin::Down => -1,
            Spin::Up => 1,
        }
    }

    pub fn flipped(self) -> Spin {
        match self {
            Spin::Down => Spin::Up,
            Spin::Up => Spin::Down,
        }
    }

    pub fn from_value(v: i8) -> Option<Spin> {
        match v {
            -1 => Some(Spin::Down),
            1 => Some(Spin::Up),
            _ => None,
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spin::Down => write!(f, "-1"),
            Spin::Up => write!(f, "+1"),
        }
    }
}

/// A full state vector, one spin per agent.
///
/// The derived `Ord` is lexicographic and exists so configurations can key
/// ordered containers; the partial order the theory uses is the pointwise
/// one, exposed as [`Config::le`] and [`Config::ge`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Config(Vec<Spin>);

impl Config {
    pub fn new(states: Vec<Spin>) -> Self {
        Config(states)
    }

    /// Builds from `-1`/`+1` values; `None` if any entry is neither.
    pub fn from_values(values: &[i8]) -> Option<Self> {
        values
            .iter()
            .map(|&v| Spin::from_value(v))
            .collect::<Option<Vec<_>>>()
            .map(Config)
    }

    pub fn all_up(n: usize) -> Self {
        Config(vec![Spin::Up; n])
    }

    pub fn all_down(n: usize) -> Self {
        Config(vec![Spin::Down; n])
    }

    /// Decodes a bitmask: bit `i` set means agent `i` is up.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Config(
            (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Spin::Up
                    } else {
                        Spin::Down
                    }
                })
                .collect(),
        )
    }

    pub fn to_mask(&self) -> u64 {
        assert!(self.len() <= 64);
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Spin::Up)
            .fold(0u64, |m, (i, _)| m | 1 << i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Spin {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, s: Spin) {
        self.0[i] = s;
    }

    pub fn states(&self) -> &[Spin] {
        &self.0
    }

    pub fn values(&self) -> Vec<i8> {
        self.0.iter().map(|s| s.value()).collect()
    }

    /// `Some(spin)` when every agent holds `spin`.
    pub fn consensus(&self) -> Option<Spin> {
        let first = *self.0.first()?;
        self.0.iter().all(|&s| s == first).then_some(first)
    }

    pub fn is_consensus(&self) -> bool {
        self.consensus().is_some()
    }

    /// Sum of all states, the plotted summary statistic.
    pub fn magnetization(&self) -> i64 {
        self.0.iter().map(|s| s.value() as i64).sum()
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &Config) -> bool {
        assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Pointwise `self >= other`.
    pub fn ge(&self, other: &Config) -> bool {
        other.le(self)
    }

    /// Pointwise maximum.
    pub fn join(&self, other: &Config) -> Config {
        assert_eq!(self.len(), other.len());
        Config(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// Pointwise minimum.
    pub fn meet(&self, other: &Config) -> Config {
        assert_eq!(self.len(), other.len());
        Config(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn with_flip(&self, i: usize) -> Config {
        let mut c = self.clone();
        c.0[i] = c.0[i].flipped();
        c
    }

    /// Agents currently at `spin`.
    pub fn support(&self, spin: Spin) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == spin)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Debug for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Config({})", self)
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", if *s == Spin::Up { '+' } else { '-' })?;
        }
        Ok(())
    }
}
