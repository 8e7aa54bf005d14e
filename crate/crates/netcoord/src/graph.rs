//! Weighted directed networks with exact nonnegative weights.

use crate::config::{Config, Spin};
use crate::io::parse_rational;
use crate::scalar::Scalar;
use crate::Rational;
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

/// A finite weighted digraph with zero diagonal.
///
/// A link `(i, j)` exists iff its weight is strictly positive; `j` is then
/// an out-neighbor of `i` and influences `i`'s updates. Out-degrees are the
/// row sums of the weight matrix and are cached at construction. The value
/// is immutable once built and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network<S> {
    out: Vec<Vec<(usize, S)>>,
    rin: Vec<Vec<(usize, S)>>,
    degree: Vec<S>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NetworkError {
    #[error("node id {0} out of range 1..={1}")]
    NodeOutOfRange(usize, usize),
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("negative weight on link ({0}, {1})")]
    NegativeWeight(usize, usize),
    #[error("duplicate link ({0}, {1})")]
    DuplicateEdge(usize, usize),
}

impl<S: Scalar> Network<S> {
    /// Builds a network from `(tail, head, weight)` triples with 0-based
    /// node ids. Zero-weight triples are checked and then dropped: they do
    /// not create links.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, S)>,
    ) -> Result<Self, NetworkError> {
        let mut out: Vec<Vec<(usize, S)>> = vec![Vec::new(); n];
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (i, j, w) in edges {
            if i >= n {
                return Err(NetworkError::NodeOutOfRange(i + 1, n));
            }
            if j >= n {
                return Err(NetworkError::NodeOutOfRange(j + 1, n));
            }
            if i == j {
                return Err(NetworkError::SelfLoop(i + 1));
            }
            if w < S::zero() {
                return Err(NetworkError::NegativeWeight(i + 1, j + 1));
            }
            if !seen.insert((i, j)) {
                return Err(NetworkError::DuplicateEdge(i + 1, j + 1));
            }
            if w > S::zero() {
                out[i].push((j, w));
            }
        }
        for row in &mut out {
            row.sort_by_key(|&(j, _)| j);
        }
        let mut rin: Vec<Vec<(usize, S)>> = vec![Vec::new(); n];
        for (i, row) in out.iter().enumerate() {
            for (j, w) in row {
                rin[*j].push((i, w.clone()));
            }
        }
        let degree = out
            .iter()
            .map(|row| {
                row.iter()
                    .fold(S::zero(), |acc, (_, w)| acc + w.clone())
            })
            .collect();
        Ok(Network { out, rin, degree })
    }

    /// Number of agents.
    pub fn n(&self) -> usize {
        self.out.len()
    }

    /// Out-degree `w_i`, the total weight leaving node `i`.
    pub fn out_degree(&self, i: usize) -> &S {
        &self.degree[i]
    }

    pub fn out_degrees(&self) -> &[S] {
        &self.degree
    }

    /// Out-neighbors of `i` with their weights, sorted by node id.
    pub fn out_neighbors(&self, i: usize) -> &[(usize, S)] {
        &self.out[i]
    }

    /// Nodes influenced by `j`: all `i` with a link `(i, j)`, paired with
    /// the link weight `W_ij`.
    pub fn in_neighbors(&self, j: usize) -> &[(usize, S)] {
        &self.rin[j]
    }

    /// `W_ij`, zero when the link is absent.
    pub fn weight(&self, i: usize, j: usize) -> S {
        self.out[i]
            .binary_search_by_key(&j, |&(k, _)| k)
            .map(|idx| self.out[i][idx].1.clone())
            .unwrap_or_else(|_| S::zero())
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Total weight from `i` into nodes for which `member` holds.
    pub fn restricted_out_degree_by(&self, i: usize, member: impl Fn(usize) -> bool) -> S {
        self.out[i]
            .iter()
            .filter(|(j, _)| member(*j))
            .fold(S::zero(), |acc, (_, w)| acc + w.clone())
    }

    /// The subset-restricted out-degree of `i`.
    pub fn restricted_out_degree(&self, i: usize, subset: &BTreeSet<usize>) -> S {
        assert!(i < self.n(), "node id out of range");
        self.restricted_out_degree_by(i, |j| subset.contains(&j))
    }

    /// Splits `i`'s out-weight by the current states of its neighbors:
    /// returns the weight into down agents and the weight into up agents.
    /// The two parts sum to the out-degree.
    pub fn split_weights(&self, i: usize, x: &Config) -> (S, S) {
        assert_eq!(x.len(), self.n(), "configuration dimension mismatch");
        let mut down = S::zero();
        let mut up = S::zero();
        for (j, w) in &self.out[i] {
            match x.get(*j) {
                Spin::Down => down = down + w.clone(),
                Spin::Up => up = up + w.clone(),
            }
        }
        (down, up)
    }

    /// The signed neighbor aggregate `sum_j W_ij x_j`.
    pub fn neighbor_sum(&self, i: usize, x: &Config) -> S {
        let mut acc = S::zero();
        for (j, w) in &self.out[i] {
            match x.get(*j) {
                Spin::Up => acc = acc + w.clone(),
                Spin::Down => acc = acc - w.clone(),
            }
        }
        acc
    }
}

/// Line-level parse failure for the network text format.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct NetworkParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected `n <count>` before any edge")]
    MissingHeader,
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("bad number: {0}")]
    BadNumber(String),
    #[error("{0}")]
    Edge(NetworkError),
}

/// Parses the line-oriented network format.
///
/// Grammar: `#` starts a comment line, blank lines are skipped, the first
/// real line is `n <count>`, and every following line is
/// `e <tail> <head> <weight>` with 1-based node ids and a nonnegative
/// decimal (`1`, `0.5`) or fraction (`3/7`) weight. Duplicate links,
/// self-loops, and out-of-range ids are rejected with the line number.
pub fn parse_network(text: &str) -> Result<Network<Rational>, NetworkParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, Rational)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |kind| NetworkParseError { line: lineno, kind };
        match fields[0] {
            "n" => {
                if n.is_some() {
                    return Err(err(ParseErrorKind::Malformed(
                        "agent count declared twice".into(),
                    )));
                }
                if fields.len() != 2 {
                    return Err(err(ParseErrorKind::Malformed(
                        "expected `n <count>`".into(),
                    )));
                }
                let count: usize = fields[1]
                    .parse()
                    .map_err(|_| err(ParseErrorKind::BadNumber(fields[1].into())))?;
                n = Some(count);
            }
            "e" => {
                if n.is_none() {
                    return Err(err(ParseErrorKind::MissingHeader));
                }
                if fields.len() != 4 {
                    return Err(err(ParseErrorKind::Malformed(
                        "expected `e <tail> <head> <weight>`".into(),
                    )));
                }
                let i: usize = fields[1]
                    .parse()
                    .map_err(|_| err(ParseErrorKind::BadNumber(fields[1].into())))?;
                let j: usize = fields[2]
                    .parse()
                    .map_err(|_| err(ParseErrorKind::BadNumber(fields[2].into())))?;
                let w = parse_rational(fields[3])
                    .map_err(|_| err(ParseErrorKind::BadNumber(fields[3].into())))?;
                if i == 0 || j == 0 {
                    return Err(err(ParseErrorKind::Edge(NetworkError::NodeOutOfRange(
                        if i == 0 { i } else { j },
                        n.unwrap(),
                    ))));
                }
                edges.push((i - 1, j - 1, w));
                edge_lines.push(lineno);
            }
            other => {
                return Err(err(ParseErrorKind::Malformed(format!(
                    "unknown directive `{other}`"
                ))));
            }
        }
    }
    let n = n.ok_or(NetworkParseError {
        line: text.lines().count().max(1),
        kind: ParseErrorKind::MissingHeader,
    })?;

    // Re-run the structural checks edge by edge so failures carry the
    // offending line number.
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (k, (i, j, w)) in edges.iter().enumerate() {
        let lineno = edge_lines[k];
        let err = |e| NetworkParseError {
            line: lineno,
            kind: ParseErrorKind::Edge(e),
        };
        if *i >= n || *j >= n {
            return Err(err(NetworkError::NodeOutOfRange(
                if *i >= n { *i + 1 } else { *j + 1 },
                n,
            )));
        }
        if i == j {
            return Err(err(NetworkError::SelfLoop(*i + 1)));
        }
        if w < &Rational::zero() {
            return Err(err(NetworkError::NegativeWeight(*i + 1, *j + 1)));
        }
        if !seen.insert((*i, *j)) {
            return Err(err(NetworkError::DuplicateEdge(*i + 1, *j + 1)));
        }
    }
    Ok(Network::from_edges(n, edges).expect("edge checks already done"))
}

/// Canonical text form: header, then links sorted by (tail, head), with
/// weights printed as reduced fractions. `parse -> serialize -> parse` is
/// the identity.
pub fn serialize_network(net: &Network<Rational>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n {}", net.n());
    for i in 0..net.n() {
        for (j, w) in net.out_neighbors(i) {
            let _ = writeln!(s, "e {} {} {}", i + 1, j + 1, w);
        }
    }
    s
}
