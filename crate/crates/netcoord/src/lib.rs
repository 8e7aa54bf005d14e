//! Coordination games on weighted directed networks with external fields.
//!
//! The crate models agents sitting on the nodes of a weighted digraph, each
//! holding a binary state in `{-1, +1}`. An agent's utility is the weighted
//! agreement with its out-neighbors plus an external per-agent field term.
//! On top of that game the crate provides:
//!
//! * exact equilibrium enumeration and the lattice structure of the
//!   equilibrium set ([`lattice`]),
//! * classification of the game (regular / biased / frustrated,
//!   polarizable or not) for a single field or a whole hyper-rectangle of
//!   fields ([`game`]),
//! * indecomposability checking with explicit decomposition witnesses and
//!   synthesis of improvement paths that stay valid for every field in a
//!   range ([`robust`]),
//! * a seeded event-driven simulator for the asynchronous threshold
//!   dynamics driven by piecewise-constant field schedules ([`sim`]).
//!
//! All state logic uses exact rational arithmetic: the dynamics branch on
//! exact sign tests, so no comparison ever goes through floating point.
//! The core is generic over the scalar type via [`scalar::Scalar`]; the
//! [`Rational`] alias is the concrete scalar used by the parsers, the
//! simulator, and the CLI.

pub mod config;
pub mod game;
pub mod graph;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod robust;
pub mod scalar;
pub mod sim;

use thiserror::Error;

/// Exact scalar used everywhere a file, CLI flag, or simulation is involved.
pub type Rational = num_rational::BigRational;

pub use config::{Config, Spin};
pub use game::{
    best_response, classify_field, classify_range, is_equilibrium, stubborn_set, utility,
    BestResponse, ConsensusKind, Field, FieldRange, GameClass, RobustClass, RobustKind,
};
pub use graph::{parse_network, serialize_network, Network, NetworkParseError};
pub use lattice::{
    closure, enumerate_equilibria, ireachable_extremes, is_polarizable, lattice_ops,
    AdmissiblePath, Direction, EquilibriumSet, PathMode,
};
pub use robust::{
    cohesive_check, decomposition_witness, is_indecomposable, robust_consensus_path,
    unique_biased_check, DecompositionWitness, Indecomposability, Partition,
};
pub use sim::{
    hitting_stats, mix_seed, oscillation_schedule, simulate, transition_rates, Event,
    FieldSchedule, HittingStats, InitialCondition, RateMap, Trajectory,
};

/// Enumeration caps for the exhaustive checks. Exceeding a cap is an
/// explicit refusal, never silent sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum node count for the partition scan behind indecomposability.
    pub max_partition_nodes: usize,
    /// Maximum free-node count for the subset scan behind the
    /// biased-uniqueness check.
    pub max_subset_nodes: usize,
    /// Maximum node count for brute-force equilibrium enumeration.
    pub max_enum_nodes: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_partition_nodes: 24,
            max_subset_nodes: 20,
            max_enum_nodes: 20,
        }
    }
}

/// Errors shared by the analysis operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} needs {n} nodes scanned but the cap is {cap}; raise the cap to proceed")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("configuration is not an equilibrium of the given game")]
    NotEquilibrium,
    #[error("network is decomposable over the given field range; partition {0} admits no witness node")]
    Decomposable(Partition),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid schedule: {0}")]
    Schedule(String),
}

pub type Result<T> = std::result::Result<T, Error>;
