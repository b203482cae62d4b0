//! Spin-1 measurement algebra over real 3x3 operators.
//!
//! The squared spin component along a direction `w` acts on the real
//! 3-dimensional state space as `identity - w w^T`; its eigenvalues are
//! {1, 1, 0}, so "is the spin component along w zero?" is a yes/no
//! measurement whose outcome-0 projector is the rank-1 matrix `w w^T`.
//! Over any orthonormal triple the three squared spin components commute
//! and sum to `2 * identity`, which forces the three answer bits to be a
//! permutation of (1, 0, 1).
//!
//! A twinned pair answers every such question identically, and its joint
//! statistics coincide with those of *sequential* measurements of one
//! maximally mixed particle under the Lüders update
//! `rho -> P rho P / trace(P rho)`. That reduction is what this module
//! computes, so every operator in play is real symmetric and complex
//! arithmetic never enters.

use crate::error::{Error, Result};
use crate::geometry::UnitVector3;

/// Tolerance for the algebraic invariants (symmetry, trace, idempotency).
pub const ALGEBRAIC_TOL: f64 = 1e-12;

/// Eigenvalues above this floor count as nonnegative.
pub const EIGENVALUE_FLOOR: f64 = -1e-10;

/// Branch probabilities at or below this are treated as zero: the Lüders
/// post-state is reported as undefined instead of dividing by the noise.
pub const BRANCH_PROB_FLOOR: f64 = 1e-14;

pub(crate) type Mat3 = [[f64; 3]; 3];

pub(crate) fn mat_identity() -> Mat3 {
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
}

pub(crate) fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut r = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    r
}

pub(crate) fn mat_trace(a: &Mat3) -> f64 {
    a[0][0] + a[1][1] + a[2][2]
}

pub(crate) fn mat_scale(a: &Mat3, s: f64) -> Mat3 {
    let mut r = *a;
    for row in &mut r {
        for v in row {
            *v *= s;
        }
    }
    r
}

pub(crate) fn mat_add(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut r = *a;
    for i in 0..3 {
        for j in 0..3 {
            r[i][j] += b[i][j];
        }
    }
    r
}

pub(crate) fn mat_sub(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut r = *a;
    for i in 0..3 {
        for j in 0..3 {
            r[i][j] -= b[i][j];
        }
    }
    r
}

pub(crate) fn max_abs_diff(a: &Mat3, b: &Mat3) -> f64 {
    let mut m: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            m = m.max((a[i][j] - b[i][j]).abs());
        }
    }
    m
}

/// Eigenvalues of a symmetric 3x3 matrix, ascending, by cyclic Jacobi
/// rotations. Unlike the closed-form cubic, Jacobi keeps full precision
/// for repeated eigenvalues, which projectors and pure states all have.
pub(crate) fn sym_eigenvalues(m: &Mat3) -> [f64; 3] {
    let mut a = *m;
    let scale: f64 = a.iter().flatten().map(|v| v.abs()).sum::<f64>().max(1.0);
    for _ in 0..30 {
        let off = a[0][1].abs() + a[0][2].abs() + a[1][2].abs();
        if off <= f64::EPSILON * scale {
            break;
        }
        for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
            if a[p][q] == 0.0 {
                continue;
            }
            let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;
            let (app, aqq, apq) = (a[p][p], a[q][q], a[p][q]);
            a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
            a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
            a[p][q] = 0.0;
            a[q][p] = 0.0;
            let r = 3 - p - q;
            let (arp, arq) = (a[r][p], a[r][q]);
            a[r][p] = c * arp - s * arq;
            a[p][r] = a[r][p];
            a[r][q] = s * arp + c * arq;
            a[q][r] = a[r][q];
        }
    }
    let mut eigs = [a[0][0], a[1][1], a[2][2]];
    eigs.sort_by(|x, y| x.total_cmp(y));
    eigs
}

/// One answer bit of a spin-zero measurement: 0 means "spin zero", 1 means
/// "spin nonzero".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OutcomeBit {
    Zero,
    NonZero,
}

impl OutcomeBit {
    pub const BOTH: [OutcomeBit; 2] = [OutcomeBit::Zero, OutcomeBit::NonZero];

    pub fn as_u8(self) -> u8 {
        match self {
            OutcomeBit::Zero => 0,
            OutcomeBit::NonZero => 1,
        }
    }

    pub fn from_u8(v: u8) -> Option<Self> {
        match v {
            0 => Some(OutcomeBit::Zero),
            1 => Some(OutcomeBit::NonZero),
            _ => None,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            OutcomeBit::Zero => OutcomeBit::NonZero,
            OutcomeBit::NonZero => OutcomeBit::Zero,
        }
    }
}

impl std::fmt::Display for OutcomeBit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// Real symmetric outcome projector with its rank (1 for the spin-zero
/// outcome, 2 for spin-nonzero).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Projector {
    matrix: Mat3,
    rank: u8,
}

impl Projector {
    /// Spin-zero projector `w w^T` for direction `w`.
    pub fn spin_zero(w: &UnitVector3) -> Self {
        let c = w.components();
        let mut m = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = c[i] * c[j];
            }
        }
        Self { matrix: m, rank: 1 }
    }

    /// Projector for a given outcome bit along `w`.
    pub fn for_outcome(w: &UnitVector3, bit: OutcomeBit) -> Self {
        match bit {
            OutcomeBit::Zero => Self::spin_zero(w),
            OutcomeBit::NonZero => Self::spin_zero(w).complement(),
        }
    }

    /// The complementary projector `identity - P`.
    pub fn complement(&self) -> Self {
        Self {
            matrix: mat_sub(&mat_identity(), &self.matrix),
            rank: 3 - self.rank,
        }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.matrix
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    /// `max |(P*P - P)_ij|`; zero for an exact projector.
    pub fn idempotency_residual(&self) -> f64 {
        max_abs_diff(&mat_mul(&self.matrix, &self.matrix), &self.matrix)
    }
}

/// 3x3 real symmetric positive-semidefinite unit-trace matrix: the spin-1
/// state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityOperator {
    matrix: Mat3,
}

impl DensityOperator {
    /// Validates symmetry and unit trace to 1e-12 and eigenvalues down to
    /// -1e-10.
    pub fn new(matrix: Mat3) -> Result<Self> {
        let sym = symmetry_residual(&matrix);
        if sym > ALGEBRAIC_TOL {
            return Err(Error::InvalidState {
                reason: format!("asymmetry {sym:e} exceeds {ALGEBRAIC_TOL:e}"),
            });
        }
        let trace = mat_trace(&matrix);
        if (trace - 1.0).abs() > ALGEBRAIC_TOL {
            return Err(Error::InvalidState {
                reason: format!("trace {trace} differs from 1"),
            });
        }
        let min_eig = sym_eigenvalues(&matrix)[0];
        if min_eig < EIGENVALUE_FLOOR {
            return Err(Error::InvalidState {
                reason: format!("eigenvalue {min_eig} below {EIGENVALUE_FLOOR:e}"),
            });
        }
        Ok(Self { matrix })
    }

    /// `identity / 3`: probability 1/3 for spin zero along every direction.
    pub fn maximally_mixed() -> Self {
        Self {
            matrix: mat_scale(&mat_identity(), 1.0 / 3.0),
        }
    }

    /// The pure state `w w^T`.
    pub fn pure(w: &UnitVector3) -> Self {
        Self {
            matrix: *Projector::spin_zero(w).matrix(),
        }
    }

    /// Lüders numerator already known to be PSD; symmetrize and divide by
    /// its own trace instead of re-running the full validation. Dividing
    /// by the separately computed branch probability would leave the trace
    /// off by the relative rounding gap between the two, which exceeds the
    /// invariant tolerance on low-probability branches.
    fn from_luders(m: &Mat3) -> Self {
        let trace = mat_trace(m);
        debug_assert!(trace > 0.0, "Lüders numerator trace {trace} not positive");
        let mut sym = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                sym[i][j] = 0.5 * (m[i][j] + m[j][i]) / trace;
            }
        }
        Self { matrix: sym }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        mat_trace(&self.matrix)
    }

    pub fn eigenvalues(&self) -> [f64; 3] {
        sym_eigenvalues(&self.matrix)
    }

    pub fn symmetry_residual(&self) -> f64 {
        symmetry_residual(&self.matrix)
    }
}

fn symmetry_residual(m: &Mat3) -> f64 {
    let mut r: f64 = 0.0;
    for i in 0..3 {
        for j in (i + 1)..3 {
            r = r.max((m[i][j] - m[j][i]).abs());
        }
    }
    r
}

/// Both branches of a spin-zero measurement: outcome probabilities and
/// Lüders post-states. A post-state is `None` when its branch probability
/// is at most `BRANCH_PROB_FLOOR`.
#[derive(Debug, Clone, PartialEq)]
pub struct Measurement {
    pub prob_zero: f64,
    pub prob_nonzero: f64,
    pub post_zero: Option<DensityOperator>,
    pub post_nonzero: Option<DensityOperator>,
}

impl Measurement {
    pub fn prob(&self, bit: OutcomeBit) -> f64 {
        match bit {
            OutcomeBit::Zero => self.prob_zero,
            OutcomeBit::NonZero => self.prob_nonzero,
        }
    }

    pub fn post(&self, bit: OutcomeBit) -> Option<&DensityOperator> {
        match bit {
            OutcomeBit::Zero => self.post_zero.as_ref(),
            OutcomeBit::NonZero => self.post_nonzero.as_ref(),
        }
    }
}

/// Measures "spin zero along `w`?" on `rho`: probabilities are
/// `trace(P_b rho)` and post-states follow the Lüders rule.
pub fn measure(rho: &DensityOperator, w: &UnitVector3) -> Measurement {
    let p_zero = Projector::spin_zero(w);
    let p_nonzero = p_zero.complement();
    let prob_zero = mat_trace(&mat_mul(p_zero.matrix(), rho.matrix()));
    let prob_nonzero = 1.0 - prob_zero;
    let post = |p: &Projector, prob: f64| {
        if prob > BRANCH_PROB_FLOOR {
            let num = mat_mul(&mat_mul(p.matrix(), rho.matrix()), p.matrix());
            Some(DensityOperator::from_luders(&num))
        } else {
            None
        }
    };
    Measurement {
        prob_zero,
        prob_nonzero,
        post_zero: post(&p_zero, prob_zero),
        post_nonzero: post(&p_nonzero, prob_nonzero),
    }
}

/// Joint probability that a twinned pair answers `(first, second)` to
/// spin-zero measurements along `(u, v)`: computed as the sequential
/// measurement of one maximally mixed particle, keeping the requested
/// branch at each step.
pub fn twinned_joint_prob(
    u: &UnitVector3,
    first: OutcomeBit,
    v: &UnitVector3,
    second: OutcomeBit,
) -> f64 {
    let step1 = measure(&DensityOperator::maximally_mixed(), u);
    match step1.post(first) {
        None => 0.0,
        Some(rho) => step1.prob(first) * measure(rho, v).prob(second),
    }
}

/// Closed form of the twinned joint distribution:
///
/// ```text
/// Pr(0,0) = (u.v)^2 / 3
/// Pr(0,1) = Pr(1,0) = (1 - (u.v)^2) / 3
/// Pr(1,1) = (1 + (u.v)^2) / 3
/// ```
///
/// The (1,1) entry is the unique value completing the table to total
/// mass 1.
pub fn joint_prob_closed_form(
    u: &UnitVector3,
    first: OutcomeBit,
    v: &UnitVector3,
    second: OutcomeBit,
) -> f64 {
    let overlap = u.dot(v).powi(2);
    match (first, second) {
        (OutcomeBit::Zero, OutcomeBit::Zero) => overlap / 3.0,
        (OutcomeBit::Zero, OutcomeBit::NonZero) | (OutcomeBit::NonZero, OutcomeBit::Zero) => {
            (1.0 - overlap) / 3.0
        }
        (OutcomeBit::NonZero, OutcomeBit::NonZero) => (1.0 + overlap) / 3.0,
    }
}

/// The full 2x2 joint table from the sequential computation, indexed
/// `[first bit][second bit]`.
pub fn joint_prob_table(u: &UnitVector3, v: &UnitVector3) -> [[f64; 2]; 2] {
    let mut table = [[0.0; 2]; 2];
    for first in OutcomeBit::BOTH {
        for second in OutcomeBit::BOTH {
            table[first.as_u8() as usize][second.as_u8() as usize] =
                twinned_joint_prob(u, first, v, second);
        }
    }
    table
}

/// Branch statistics of measuring an orthonormal triple in sequence on the
/// maximally mixed state.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolutionReport {
    /// `max |(P0(u) + P0(v) + P0(w) - identity)_ij|`.
    pub projector_sum_residual: f64,
    /// Probability of each outcome triple, indexed `i*4 + j*2 + k`.
    pub branch_probs: [f64; 8],
}

impl ResolutionReport {
    /// Indices of the three single-zero outcome triples (0,1,1), (1,0,1),
    /// (1,1,0).
    pub const SINGLE_ZERO_BRANCHES: [usize; 3] = [0b011, 0b101, 0b110];

    /// True when the three single-zero branches each carry probability 1/3
    /// and every other branch carries none, within `tol`, and the three
    /// projectors resolve the identity within `tol`.
    pub fn ok(&self, tol: f64) -> bool {
        if self.projector_sum_residual > tol {
            return false;
        }
        self.branch_probs.iter().enumerate().all(|(idx, &p)| {
            if Self::SINGLE_ZERO_BRANCHES.contains(&idx) {
                (p - 1.0 / 3.0).abs() <= tol
            } else {
                p.abs() <= tol
            }
        })
    }
}

/// Checks the 1,0,1 resolution for a mutually orthogonal triple: the three
/// spin-zero projectors sum to the identity, and sequential measurement on
/// the maximally mixed state puts probability 1/3 on each permutation of
/// (1, 0, 1) and zero elsewhere.
pub fn verify_101_resolution(triple: &[UnitVector3; 3]) -> Result<ResolutionReport> {
    for i in 0..3 {
        for j in (i + 1)..3 {
            let dot = triple[i].dot(&triple[j]);
            if dot.abs() > 1e-9 {
                return Err(Error::NotOrthogonal {
                    dot: dot.abs(),
                    tol: 1e-9,
                });
            }
        }
    }
    let sum = triple
        .iter()
        .fold([[0.0; 3]; 3], |acc, w| mat_add(&acc, Projector::spin_zero(w).matrix()));
    let projector_sum_residual = max_abs_diff(&sum, &mat_identity());

    let mut branch_probs = [0.0; 8];
    for (idx, slot) in branch_probs.iter_mut().enumerate() {
        let bits = [
            OutcomeBit::from_u8(((idx >> 2) & 1) as u8).unwrap(),
            OutcomeBit::from_u8(((idx >> 1) & 1) as u8).unwrap(),
            OutcomeBit::from_u8((idx & 1) as u8).unwrap(),
        ];
        let mut prob = 1.0;
        let mut rho = DensityOperator::maximally_mixed();
        for (w, bit) in triple.iter().zip(bits) {
            let m = measure(&rho, w);
            prob *= m.prob(bit);
            match m.post(bit) {
                Some(next) => rho = *next,
                None => {
                    prob = 0.0;
                    break;
                }
            }
        }
        *slot = prob;
    }
    Ok(ResolutionReport {
        projector_sum_residual,
        branch_probs,
    })
}

/// Shannon information content of one spin-zero answer bit:
/// `-(2/3) log2(2/3) - (1/3) log2(1/3)`, equal to `log2(3) - 2/3`.
pub fn spin_bit_entropy() -> f64 {
    let p_nonzero: f64 = 2.0 / 3.0;
    let p_zero: f64 = 1.0 / 3.0;
    -p_nonzero * p_nonzero.log2() - p_zero * p_zero.log2()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::complete_triple;
    use std::f64::consts::FRAC_PI_4;

    fn unit(x: f64, y: f64, z: f64) -> UnitVector3 {
        UnitVector3::new(x, y, z).unwrap()
    }

    #[test]
    fn spin_zero_projector_along_z() {
        let p = Projector::spin_zero(&unit(0.0, 0.0, 1.0));
        assert_eq!(p.matrix(), &[[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 1.0]]);
        assert_eq!(p.rank(), 1);
        assert!(p.idempotency_residual() <= 1e-15);
    }

    #[test]
    fn projectors_resolve_identity() {
        let triple = [unit(1.0, 0.0, 0.0), unit(0.0, 1.0, 0.0), unit(0.0, 0.0, 1.0)];
        let sum = triple
            .iter()
            .fold([[0.0; 3]; 3], |acc, w| mat_add(&acc, Projector::spin_zero(w).matrix()));
        assert!(max_abs_diff(&sum, &mat_identity()) <= 1e-15);
    }

    #[test]
    fn squared_spin_spectrum_and_sum() {
        let w = unit(0.3, -0.4, 0.87);
        // The squared spin component along w is identity - w w^T.
        let sq = Projector::spin_zero(&w).complement();
        let eigs = sym_eigenvalues(sq.matrix());
        assert!(eigs[0].abs() <= 1e-12);
        assert!((eigs[1] - 1.0).abs() <= 1e-12);
        assert!((eigs[2] - 1.0).abs() <= 1e-12);

        // Over an orthonormal triple the squared components sum to 2*identity.
        let u = unit(0.87, 0.0, -0.3); // orthogonal to w by construction
        let v = complete_triple(&w, &u).unwrap();
        let sum = [w, u, v].iter().fold([[0.0; 3]; 3], |acc, dir| {
            mat_add(&acc, Projector::spin_zero(dir).complement().matrix())
        });
        assert!(max_abs_diff(&sum, &mat_scale(&mat_identity(), 2.0)) <= 1e-12);
    }

    #[test]
    fn measure_maximally_mixed() {
        let rho = DensityOperator::maximally_mixed();
        let m = measure(&rho, &unit(0.6, 0.0, 0.8));
        assert!((m.prob_zero - 1.0 / 3.0).abs() <= 1e-15);
        assert!((m.prob_zero + m.prob_nonzero - 1.0).abs() <= 1e-15);
        // Collapse along z lands on the pure state.
        let m = measure(&rho, &unit(0.0, 0.0, 1.0));
        let post = m.post_zero.unwrap();
        assert_eq!(
            post.matrix(),
            &[[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 1.0]]
        );
    }

    #[test]
    fn measure_eigenstate_is_certain() {
        let w = unit(0.0, 0.6, 0.8);
        let rho = DensityOperator::pure(&w);
        let m = measure(&rho, &w);
        assert!((m.prob_zero - 1.0).abs() <= 1e-15);
        assert!(max_abs_diff(m.post_zero.unwrap().matrix(), rho.matrix()) <= 1e-15);
        // The impossible branch is marked undefined.
        assert!(m.post_nonzero.is_none());
        assert!(m.prob_nonzero.abs() <= 1e-15);
    }

    #[test]
    fn twinned_sequential_matches_hand_values() {
        let u = unit(1.0, 0.0, 0.0);
        let v = unit(1.0, 1.0, 0.0); // angle pi/4 from u
        let p = twinned_joint_prob(&u, OutcomeBit::Zero, &v, OutcomeBit::Zero);
        assert!((p - 1.0 / 6.0).abs() <= 1e-15);

        // Repetition is consistent: same direction never flips the answer.
        assert_eq!(twinned_joint_prob(&u, OutcomeBit::Zero, &u, OutcomeBit::NonZero), 0.0);
        // Orthogonal spin-zero outcomes are exclusive.
        let w = unit(0.0, 0.0, 1.0);
        let p = twinned_joint_prob(&u, OutcomeBit::Zero, &w, OutcomeBit::Zero);
        assert!(p.abs() <= 1e-15);
    }

    #[test]
    fn closed_form_values() {
        let u = unit(0.2, -0.3, 0.5);
        assert!((joint_prob_closed_form(&u, OutcomeBit::Zero, &u, OutcomeBit::Zero) - 1.0 / 3.0)
            .abs()
            <= 1e-15);
        assert!(
            (joint_prob_closed_form(&u, OutcomeBit::NonZero, &u, OutcomeBit::NonZero)
                - 2.0 / 3.0)
                .abs()
                <= 1e-15
        );
        let v = unit(-0.4, 0.1, 0.9);
        assert_eq!(
            joint_prob_closed_form(&u, OutcomeBit::Zero, &v, OutcomeBit::NonZero),
            joint_prob_closed_form(&u, OutcomeBit::NonZero, &v, OutcomeBit::Zero)
        );
    }

    #[test]
    fn table_matches_closed_form_on_a_grid() {
        for k in 0..16 {
            let angle = FRAC_PI_4 * (k as f64) / 4.0 + 0.05;
            let u = unit(1.0, 0.0, 0.0);
            let v = unit(angle.cos(), angle.sin(), 0.0);
            for first in OutcomeBit::BOTH {
                for second in OutcomeBit::BOTH {
                    let seq = twinned_joint_prob(&u, first, &v, second);
                    let closed = joint_prob_closed_form(&u, first, &v, second);
                    assert!((seq - closed).abs() <= 1e-14, "angle {angle}");
                }
            }
        }
    }

    #[test]
    fn resolution_standard_and_rotated_basis() {
        let std_triple = [unit(1.0, 0.0, 0.0), unit(0.0, 1.0, 0.0), unit(0.0, 0.0, 1.0)];
        let report = verify_101_resolution(&std_triple).unwrap();
        assert!(report.ok(1e-12));

        let w1 = unit(1.0, 1.0, 0.3);
        let w2 = unit(1.0, -1.0, 0.0);
        let w3 = complete_triple(&w1, &w2).unwrap();
        let report = verify_101_resolution(&[w1, w2, w3]).unwrap();
        assert!(report.ok(1e-12));
        // Two-zero branches carry no probability.
        for idx in [0b000, 0b001, 0b010, 0b100] {
            assert!(report.branch_probs[idx].abs() <= 1e-13);
        }
    }

    #[test]
    fn resolution_rejects_skew_triple() {
        let triple = [unit(1.0, 0.0, 0.0), unit(0.0, 1.0, 0.0), unit(1.0, 1.0, 1.0)];
        assert!(matches!(
            verify_101_resolution(&triple),
            Err(Error::NotOrthogonal { .. })
        ));
    }

    #[test]
    fn entropy_constant() {
        let h = spin_bit_entropy();
        assert!((h - 0.918_295_833_6).abs() <= 1e-9);
        assert!(h < 45.0 / 49.0);
        assert!((h - (3.0f64.log2() - 2.0 / 3.0)).abs() <= 1e-12);
    }

    #[test]
    fn density_operator_validation() {
        assert!(DensityOperator::new([[0.5, 0.1, 0.0], [0.0, 0.5, 0.0], [0.0, 0.0, 0.0]]).is_err());
        assert!(DensityOperator::new(mat_identity()).is_err());
        // Unit trace but indefinite.
        assert!(DensityOperator::new([
            [1.5, 0.0, 0.0],
            [0.0, -0.5, 0.0],
            [0.0, 0.0, 0.0]
        ])
        .is_err());
        assert!(DensityOperator::new(mat_scale(&mat_identity(), 1.0 / 3.0)).is_ok());
    }

    #[test]
    fn eigenvalues_of_diagonal() {
        let eigs = sym_eigenvalues(&[[0.5, 0.0, 0.0], [0.0, 0.2, 0.0], [0.0, 0.0, 0.3]]);
        assert!((eigs[0] - 0.2).abs() <= 1e-12);
        assert!((eigs[1] - 0.3).abs() <= 1e-12);
        assert!((eigs[2] - 0.5).abs() <= 1e-12);
    }
}
