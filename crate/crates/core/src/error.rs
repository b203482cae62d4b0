//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while constructing or checking the
/// verification objects.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A direction was requested from a vector of (near-)zero length.
    #[error("degenerate direction: vector norm {norm:e} is too small to normalize")]
    DegenerateDirection { norm: f64 },

    /// Two vectors that must be orthogonal are not.
    #[error("vectors are not orthogonal: |dot| = {dot:e} exceeds {tol:e}")]
    NotOrthogonal { dot: f64, tol: f64 },

    /// An opening angle fell outside the open interval (0, pi/2).
    #[error("angle {angle} rad is outside the open interval (0, pi/2)")]
    AngleOutOfRange { angle: f64 },

    /// An orthogonality tolerance fell outside (0, 1e-6].
    #[error("orthogonality tolerance {tol:e} is outside (0, 1e-6]")]
    ToleranceOutOfRange { tol: f64 },

    /// A matrix failed the density-operator invariants.
    #[error("invalid density operator: {reason}")]
    InvalidState { reason: String },

    /// A node label does not exist in the graph at hand.
    #[error("unknown node label `{label}`")]
    UnknownLabel { label: String },

    /// An event listed the same node twice.
    #[error("duplicate node label `{label}` in event")]
    DuplicateLabel { label: String },

    /// An assignment does not cover the graph's node set.
    #[error("assignment has {actual} bits but the graph has {expected} nodes")]
    AssignmentLength { expected: usize, actual: usize },

    /// Exhaustive enumeration was asked for on a graph that is too large.
    #[error("graph has {nodes} nodes; exhaustive enumeration is limited to {max}")]
    TooManyNodes { nodes: usize, max: usize },

    /// An operation that needs the seven-direction graph got something else.
    #[error("graph does not have the seven-direction topology: {reason}")]
    TopologyMismatch { reason: String },

    /// A constraint probability fell outside [0, 1].
    #[error("constraint probability {value} is outside [0, 1]")]
    ProbabilityOutOfRange { value: f64 },

    /// Angle parameters were paired with a configuration built elsewhere.
    #[error("angle parameters do not match the configuration they were paired with")]
    ParamsMismatch,

    /// A sampling run was configured with zero shots.
    #[error("sample count must be at least 1")]
    EmptySample,
}
