//! Value assignments on the orthogonality graph and the feasibility check
//! that refutes them.
//!
//! A hidden-variable model for the seven directions would pre-assign every
//! node an answer bit subject to the 1,0,1 rule: each triangle (orthonormal
//! basis) carries exactly one 0, and no orthogonal pair carries two 0s (an
//! edge is an incomplete basis, so two 1s are allowed). `enumerate_valid`
//! lists all such assignments exhaustively; `feasibility` then decides
//! whether any probability distribution over them reproduces a set of
//! required event masses, returning either a witness distribution or a
//! signed combination of the constraints certifying that none exists.

use crate::error::{Error, Result};
use crate::geometry::OrthoGraph;
use crate::quantum::OutcomeBit;

mod simplex;

/// Node-count cap for the exhaustive 2^n scan.
pub const MAX_ENUM_NODES: usize = 24;

/// Exact-match tolerance for constraint masses.
pub const CONSTRAINT_TOL: f64 = 1e-9;

/// A {0,1} valuation of a graph's nodes, stored in node order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment101 {
    bits: Vec<OutcomeBit>,
}

impl Assignment101 {
    /// Wraps a bit vector covering every node of `graph`.
    pub fn new(graph: &OrthoGraph, bits: Vec<OutcomeBit>) -> Result<Self> {
        if bits.len() != graph.node_count() {
            return Err(Error::AssignmentLength {
                expected: graph.node_count(),
                actual: bits.len(),
            });
        }
        Ok(Self { bits })
    }

    /// Builds an assignment from `(label, bit)` pairs; every node must be
    /// covered exactly once.
    pub fn from_pairs(graph: &OrthoGraph, pairs: &[(&str, OutcomeBit)]) -> Result<Self> {
        let mut bits = vec![None; graph.node_count()];
        for (label, bit) in pairs {
            let idx = graph
                .label_index(label)
                .ok_or_else(|| Error::UnknownLabel {
                    label: label.to_string(),
                })?;
            if bits[idx].replace(*bit).is_some() {
                return Err(Error::DuplicateLabel {
                    label: label.to_string(),
                });
            }
        }
        let covered: Option<Vec<OutcomeBit>> = bits.into_iter().collect();
        match covered {
            Some(bits) => Ok(Self { bits }),
            None => Err(Error::AssignmentLength {
                expected: graph.node_count(),
                actual: pairs.len(),
            }),
        }
    }

    pub fn bits(&self) -> &[OutcomeBit] {
        &self.bits
    }

    pub fn bit(&self, node: usize) -> OutcomeBit {
        self.bits[node]
    }

    /// Applies a node permutation, returning the relabeled assignment:
    /// output node `perm[i]` receives the bit of input node `i`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut bits = self.bits.clone();
        for (i, &target) in perm.iter().enumerate() {
            bits[target] = self.bits[i];
        }
        Self { bits }
    }
}

/// True iff every triangle carries exactly one 0 and no edge carries two.
pub fn is_valid(graph: &OrthoGraph, assignment: &Assignment101) -> bool {
    debug_assert_eq!(assignment.bits.len(), graph.node_count());
    for &(i, j) in graph.edges() {
        if assignment.bit(i) == OutcomeBit::Zero && assignment.bit(j) == OutcomeBit::Zero {
            return false;
        }
    }
    for &[i, j, k] in graph.triangles() {
        let zeros = [i, j, k]
            .iter()
            .filter(|&&n| assignment.bit(n) == OutcomeBit::Zero)
            .count();
        if zeros != 1 {
            return false;
        }
    }
    true
}

/// All valid assignments, lexicographic by node bits (0 before 1).
pub fn enumerate_valid(graph: &OrthoGraph) -> Result<Vec<Assignment101>> {
    let n = graph.node_count();
    if n > MAX_ENUM_NODES {
        return Err(Error::TooManyNodes {
            nodes: n,
            max: MAX_ENUM_NODES,
        });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let bits: Vec<OutcomeBit> = (0..n)
            .map(|i| OutcomeBit::from_u8(((mask >> (n - 1 - i)) & 1) as u8).unwrap())
            .collect();
        let candidate = Assignment101 { bits };
        if is_valid(graph, &candidate) {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// CSV listing: header of node labels, one row of bits per assignment,
/// LF line endings.
pub fn assignments_to_csv(graph: &OrthoGraph, assignments: &[Assignment101]) -> String {
    let mut out = graph.labels().join(",");
    out.push('\n');
    for assignment in assignments {
        let row: Vec<String> = assignment.bits().iter().map(|b| b.to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// A conjunction of required answer bits on distinct nodes. The empty
/// event is the sure event (total mass).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventSpec {
    pairs: Vec<(String, OutcomeBit)>,
}

impl EventSpec {
    pub fn new(pairs: &[(&str, OutcomeBit)]) -> Result<Self> {
        for (i, (label, _)) in pairs.iter().enumerate() {
            if pairs[..i].iter().any(|(other, _)| other == label) {
                return Err(Error::DuplicateLabel {
                    label: label.to_string(),
                });
            }
        }
        Ok(Self {
            pairs: pairs
                .iter()
                .map(|(label, bit)| (label.to_string(), *bit))
                .collect(),
        })
    }

    /// The sure event: holds in every assignment.
    pub fn sure() -> Self {
        Self { pairs: Vec::new() }
    }

    pub fn is_sure(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(String, OutcomeBit)] {
        &self.pairs
    }

    /// Resolves labels against a graph.
    fn resolve(&self, graph: &OrthoGraph) -> Result<Vec<(usize, OutcomeBit)>> {
        self.pairs
            .iter()
            .map(|(label, bit)| {
                graph
                    .label_index(label)
                    .map(|idx| (idx, *bit))
                    .ok_or_else(|| Error::UnknownLabel {
                        label: label.clone(),
                    })
            })
            .collect()
    }

    /// Whether the event holds in `assignment`.
    pub fn matches(&self, graph: &OrthoGraph, assignment: &Assignment101) -> Result<bool> {
        Ok(self
            .resolve(graph)?
            .iter()
            .all(|&(idx, bit)| assignment.bit(idx) == bit))
    }

    /// Normalized `(label, bit)` pairs, sorted by label, for comparisons.
    fn canonical_pairs(&self) -> Vec<(String, OutcomeBit)> {
        let mut pairs = self.pairs.clone();
        pairs.sort();
        pairs
    }
}

impl std::fmt::Display for EventSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "true");
        }
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(label, bit)| format!("{label}={bit}"))
            .collect();
        write!(f, "{}", parts.join(" & "))
    }
}

/// Per-assignment residuals of the indicator identity
///
/// ```text
/// 1[a=0 & d=0 & g=1] = 1[a=0 & d=0] - 1[e=1 & g=0] + 1[b=0 & g=0]
/// ```
///
/// which encodes the event logic of the verification chain: `g=0` forces
/// `c=1` and `f=1` (edges), hence `a=0` and `d=0` (triangles), so
/// `a=0 & d=0 & g=0` coincides with `e=1 & b=1 & g=0`; and `b=0 & g=0`
/// entails `e=1` (edge b-e).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    /// lhs - rhs per valid assignment, canonical order.
    pub residuals: Vec<i64>,
}

impl IdentityReport {
    pub fn all_zero(&self) -> bool {
        self.residuals.iter().all(|&r| r == 0)
    }
}

/// The canonical nine-edge label pairs of the seven-direction graph.
const SEVEN_EDGES: [(&str, &str); 9] = [
    ("a", "c"),
    ("a", "e"),
    ("b", "d"),
    ("b", "e"),
    ("b", "f"),
    ("c", "e"),
    ("c", "g"),
    ("d", "f"),
    ("f", "g"),
];

/// Checks that `graph` is the seven-direction graph: labels a..g, the nine
/// canonical edges, and the two triangles {a,e,c} and {d,b,f}.
fn require_seven_topology(graph: &OrthoGraph) -> Result<()> {
    let expected_labels: Vec<String> = ('a'..='g').map(|c| c.to_string()).collect();
    if graph.labels() != expected_labels.as_slice() {
        return Err(Error::TopologyMismatch {
            reason: format!("labels are {:?}", graph.labels()),
        });
    }
    let mut edges: Vec<(String, String)> = graph.edge_labels();
    edges.sort();
    let expected: Vec<(String, String)> = SEVEN_EDGES
        .iter()
        .map(|(i, j)| (i.to_string(), j.to_string()))
        .collect();
    if edges != expected {
        return Err(Error::TopologyMismatch {
            reason: format!("edge set is {edges:?}"),
        });
    }
    if graph.triangles().len() != 2 {
        return Err(Error::TopologyMismatch {
            reason: format!("{} triangles", graph.triangles().len()),
        });
    }
    Ok(())
}

/// Evaluates the indicator identity pointwise over every valid assignment
/// of the seven-direction graph. All residuals must be zero.
pub fn event_mass_identity(graph: &OrthoGraph) -> Result<IdentityReport> {
    require_seven_topology(graph)?;
    let lhs = EventSpec::new(&[
        ("a", OutcomeBit::Zero),
        ("d", OutcomeBit::Zero),
        ("g", OutcomeBit::NonZero),
    ])?;
    let (t1, t2, t3) = chain_events()?;
    let mut residuals = Vec::new();
    for assignment in enumerate_valid(graph)? {
        let ind = |event: &EventSpec| -> Result<i64> {
            Ok(event.matches(graph, &assignment)? as i64)
        };
        residuals.push(ind(&lhs)? - (ind(&t1)? - ind(&t2)? + ind(&t3)?));
    }
    Ok(IdentityReport { residuals })
}

/// The three pair events of the verification chain, in chain order:
/// `a=0 & d=0`, `e=1 & g=0`, `b=0 & g=0`.
pub fn chain_events() -> Result<(EventSpec, EventSpec, EventSpec)> {
    Ok((
        EventSpec::new(&[("a", OutcomeBit::Zero), ("d", OutcomeBit::Zero)])?,
        EventSpec::new(&[("e", OutcomeBit::NonZero), ("g", OutcomeBit::Zero)])?,
        EventSpec::new(&[("b", OutcomeBit::Zero), ("g", OutcomeBit::Zero)])?,
    ))
}

/// A signed combination of the constraints that certifies infeasibility:
/// pointwise over every valid assignment it is nonnegative (it bounds the
/// mass of a genuine event from above), yet its required value is
/// negative.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    /// One coefficient per constraint, in the order passed to
    /// [`feasibility`] (an implicitly appended normalization row, if any,
    /// comes last).
    pub coefficients: Vec<f64>,
    /// The combination's value on the required masses; strictly negative.
    pub value: f64,
}

impl Certificate {
    /// Minimum over valid assignments of the signed indicator combination.
    /// A sound certificate never goes below zero (up to rounding).
    pub fn pointwise_min(
        &self,
        graph: &OrthoGraph,
        constraints: &[(EventSpec, f64)],
    ) -> Result<f64> {
        let mut min = f64::INFINITY;
        for assignment in enumerate_valid(graph)? {
            let mut total = 0.0;
            for (coeff, (event, _)) in self.coefficients.iter().zip(constraints) {
                if event.matches(graph, &assignment)? {
                    total += coeff;
                }
            }
            min = min.min(total);
        }
        Ok(min)
    }
}

/// Outcome of the feasibility decision.
#[derive(Debug, Clone, PartialEq)]
pub enum FeasibilityResult {
    /// A distribution over the valid assignments (canonical order)
    /// matching every constraint.
    Feasible { witness: Vec<f64> },
    /// No distribution exists; the certificate proves it.
    Infeasible { certificate: Certificate },
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Feasible { .. })
    }
}

/// Decides whether a probability distribution over the valid assignments
/// of `graph` gives every event its required mass (within 1e-9).
///
/// A normalization row (sure event, mass 1) is appended when the caller
/// did not supply one, since the sought object is a distribution. On
/// infeasible systems containing the three chain events, the certificate
/// is the chain itself (+1, -1, +1 on those rows); otherwise it is the
/// dual ray of the phase-1 solve.
pub fn feasibility(
    graph: &OrthoGraph,
    constraints: &[(EventSpec, f64)],
) -> Result<FeasibilityResult> {
    for (_, value) in constraints {
        if !(0.0..=1.0).contains(value) {
            return Err(Error::ProbabilityOutOfRange { value: *value });
        }
    }
    let assignments = enumerate_valid(graph)?;

    let mut rows: Vec<(EventSpec, f64)> = constraints.to_vec();
    if !rows.iter().any(|(event, _)| event.is_sure()) {
        rows.push((EventSpec::sure(), 1.0));
    }

    // Indicator matrix: one row per constraint, one column per assignment.
    let mut matrix = Vec::with_capacity(rows.len());
    let mut rhs = Vec::with_capacity(rows.len());
    for (event, value) in &rows {
        let resolved = event.resolve(graph)?;
        let row: Vec<f64> = assignments
            .iter()
            .map(|a| {
                resolved
                    .iter()
                    .all(|&(idx, bit)| a.bit(idx) == bit) as u8 as f64
            })
            .collect();
        matrix.push(row);
        rhs.push(*value);
    }

    match simplex::feasible_point(&matrix, &rhs, CONSTRAINT_TOL) {
        simplex::LpOutcome::Feasible(witness) => Ok(FeasibilityResult::Feasible { witness }),
        simplex::LpOutcome::Infeasible { dual } => {
            let certificate = chain_certificate(&rows, &rhs).unwrap_or_else(|| {
                let value = dual.iter().zip(&rhs).map(|(y, b)| y * b).sum();
                Certificate {
                    coefficients: dual,
                    value,
                }
            });
            Ok(FeasibilityResult::Infeasible { certificate })
        }
    }
}

/// The chain certificate (+1, -1, +1) on the three chain events, when all
/// three are present and the combination is negative.
fn chain_certificate(rows: &[(EventSpec, f64)], rhs: &[f64]) -> Option<Certificate> {
    let (t1, t2, t3) = chain_events().ok()?;
    let position = |target: &EventSpec| {
        rows.iter()
            .position(|(event, _)| event.canonical_pairs() == target.canonical_pairs())
    };
    let (i1, i2, i3) = (position(&t1)?, position(&t2)?, position(&t3)?);
    let value = rhs[i1] - rhs[i2] + rhs[i3];
    if value >= -1e-12 {
        return None;
    }
    let mut coefficients = vec![0.0; rows.len()];
    coefficients[i1] = 1.0;
    coefficients[i2] = -1.0;
    coefficients[i3] = 1.0;
    Some(Certificate {
        coefficients,
        value,
    })
}

/// Maximum absolute gap between each constraint's required mass and the
/// mass the witness actually assigns it.
pub fn constraint_residual(
    graph: &OrthoGraph,
    constraints: &[(EventSpec, f64)],
    witness: &[f64],
) -> Result<f64> {
    let assignments = enumerate_valid(graph)?;
    assert_eq!(witness.len(), assignments.len());
    let mut worst: f64 = 0.0;
    for (event, value) in constraints {
        let mut mass = 0.0;
        for (assignment, weight) in assignments.iter().zip(witness) {
            if event.matches(graph, assignment)? {
                mass += weight;
            }
        }
        worst = worst.max((mass - value).abs());
    }
    Ok(worst)
}
