//! Numeric evaluation of the six-line identity chain that refutes the
//! assignment model.
//!
//! Suppose a joint distribution over valid assignments reproduced the
//! twinned pair masses. Writing `m[..]` for its event masses, the chain
//! reads
//!
//! ```text
//! (1) m[a=0 & d=0 & g=1] = m[a=0 & d=0] - m[a=0 & d=0 & g=0]
//! (2)                    = (s s')^2 / 3 - m[e=1 & b=1 & g=0]
//! (3)                    = (s s')^2 / 3 - m[e=1 & g=0] + m[e=1 & b=0 & g=0]
//! (4)                    = (s s')^2 / 3 - (1/3 - t^2/(3 D^2)) + m[b=0 & g=0]
//! (5)                    = (s s')^2 / 3 - 1/3 + t^2/(3 D^2) + t'^2/(3 D^2)
//! (6)                    = -(1/3) (s s' / D)^2
//! ```
//!
//! Lines (1) and (3) are the addition law; (2) substitutes the pair mass
//! of `a=0 & d=0` and uses that `a=0 & d=0 & g=0` coincides with
//! `e=1 & b=1 & g=0` on valid assignments; (4) substitutes the pair mass
//! of `e=1 & g=0` and uses that `b=0 & g=0` entails `e=1`; (5)
//! substitutes the pair mass of `b=0 & g=0`; (6) is the trigonometric
//! identity `(s s')^2 (D^2 + 1) = (t t')^2`.
//!
//! Lines (1)-(3) involve triple events that only exist inside the refuted
//! model, so they are validated as exact indicator identities over the
//! valid assignments ([`crate::hiddenvar::event_mass_identity`]); lines
//! (4)-(6) are evaluated as numbers. The final value is strictly negative
//! on the open angle square, while the left end of the chain is the mass
//! of a genuine event, which no distribution makes negative.

use crate::error::{Error, Result};
use crate::geometry::{AngleParams, Label, SevenVectorConfig, DEFAULT_ORTHO_TOL};
use crate::hiddenvar::{self, EventSpec};
use crate::quantum::{twinned_joint_prob, OutcomeBit};

/// Default tolerance on the chain equalities and substitution residuals.
pub const CHAIN_TOL: f64 = 1e-12;

/// Everything the chain evaluation produces for one angle pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainReport {
    pub theta: f64,
    pub theta_prime: f64,
    /// `|(a.d)^2 - (s s')^2|`, `|(e.g)^2 - t^2/D^2|`, `|(b.g)^2 - t'^2/D^2|`
    /// from the configuration actually built.
    pub substitution_residuals: [f64; 3],
    /// The indicator identity behind lines (1)-(3) holds on every valid
    /// assignment.
    pub event_identity_ok: bool,
    /// Line (4), with `m[b=0 & g=0]` computed by projector calculus on the
    /// configuration vectors rather than by the trigonometric shortcut.
    pub l4: f64,
    /// Line (5), all terms trigonometric.
    pub l5: f64,
    /// Line (6), the closed form `-(1/3)(s s'/D)^2`.
    pub l6: f64,
}

impl ChainReport {
    /// All chain invariants at tolerance `tol`: successive lines agree,
    /// the closed form is negative, the substitutions hold, and the event
    /// identity holds.
    pub fn chain_ok(&self, tol: f64) -> bool {
        (self.l4 - self.l5).abs() <= tol
            && (self.l5 - self.l6).abs() <= tol
            && self.l6 < 0.0
            && self.substitution_residuals.iter().all(|&r| r <= tol)
            && self.event_identity_ok
    }
}

/// Evaluates the chain for a configuration. The configuration must carry
/// exactly the given parameters.
pub fn chain_report(params: &AngleParams, config: &SevenVectorConfig) -> Result<ChainReport> {
    if config.params().theta() != params.theta()
        || config.params().theta_prime() != params.theta_prime()
    {
        return Err(Error::ParamsMismatch);
    }
    let graph = config.orthogonality_graph(DEFAULT_ORTHO_TOL)?;
    let event_identity_ok = hiddenvar::event_mass_identity(&graph)?.all_zero();

    let ss = params.sin_theta() * params.sin_theta_prime();
    let d2 = params.d() * params.d();
    let t2 = params.tan_theta().powi(2);
    let tp2 = params.tan_theta_prime().powi(2);

    // m[b=0 & g=0] from the actual vectors; its trigonometric value is
    // t'^2/(3 D^2), and |l4 - l5| checks the two routes agree.
    let b = config.vector(Label::B);
    let g = config.vector(Label::G);
    let mass_b0_g0 = twinned_joint_prob(&b, OutcomeBit::Zero, &g, OutcomeBit::Zero);

    let l4 = ss * ss / 3.0 - (1.0 / 3.0 - t2 / (3.0 * d2)) + mass_b0_g0;
    let l5 = ss * ss / 3.0 - 1.0 / 3.0 + t2 / (3.0 * d2) + tp2 / (3.0 * d2);
    let l6 = final_value(params);

    Ok(ChainReport {
        theta: params.theta(),
        theta_prime: params.theta_prime(),
        substitution_residuals: config.substitution_residuals(),
        event_identity_ok,
        l4,
        l5,
        l6,
    })
}

/// The closed form `-(1/3)(s s'/D)^2`: strictly negative on the open angle
/// square, tending to zero as either angle approaches 0 or pi/2.
pub fn final_value(params: &AngleParams) -> f64 {
    -(params.sin_theta() * params.sin_theta_prime() / params.d()).powi(2) / 3.0
}

/// Residual of the identity `(s s')^2 (D^2 + 1) = (t t')^2` that equates
/// line (5) with line (6); follows from `D^2 + 1 = (1 + t^2)(1 + t'^2)`.
///
/// Evaluated in the bounded form `|(s s')^2 - (t t')^2 / (D^2 + 1)|`,
/// whose sides stay at most 1: the raw form scales with `(t t')^2`, which
/// grows without bound toward the corners of the angle square and drags
/// the rounding of the trigonometric inputs above any fixed tolerance.
pub fn trig_identity_residual(params: &AngleParams) -> f64 {
    let ss2 = (params.sin_theta() * params.sin_theta_prime()).powi(2);
    let tt2 = (params.tan_theta() * params.tan_theta_prime()).powi(2);
    (ss2 - tt2 / (params.d() * params.d() + 1.0)).abs()
}

/// The pair masses the refuted model would have to reproduce, with their
/// trigonometric values, plus normalization:
/// `m[a=0 & d=0] = (s s')^2/3`, `m[e=1 & g=0] = (1 - t^2/D^2)/3`,
/// `m[b=0 & g=0] = t'^2/(3 D^2)`.
pub fn marginal_constraints(params: &AngleParams) -> Vec<(EventSpec, f64)> {
    let (t1, t2, t3) = hiddenvar::chain_events().expect("chain events are well-formed");
    let ss = params.sin_theta() * params.sin_theta_prime();
    let d2 = params.d() * params.d();
    vec![
        (t1, ss * ss / 3.0),
        (t2, (1.0 - params.tan_theta().powi(2) / d2) / 3.0),
        (t3, params.tan_theta_prime().powi(2) / (3.0 * d2)),
        (EventSpec::sure(), 1.0),
    ]
}

/// One scan cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub theta: f64,
    pub theta_prime: f64,
    pub l6: f64,
    pub chain_ok: bool,
}

/// Scan results in row-major grid order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScanTable {
    pub rows: Vec<ScanRow>,
}

impl ScanTable {
    /// CSV with header `theta,theta_prime,L6,chain_ok`, floats at 17
    /// significant digits, LF line endings. Angles are in radians.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theta,theta_prime,L6,chain_ok\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                format_sig17(row.theta),
                format_sig17(row.theta_prime),
                format_sig17(row.l6),
                row.chain_ok
            ));
        }
        out
    }
}

/// 17 significant digits, scientific notation.
pub fn format_sig17(v: f64) -> String {
    format!("{v:.16e}")
}

/// Evaluates the chain over the grid `thetas x theta_primes` in row-major
/// order. Every grid value must lie strictly inside (0, pi/2).
pub fn scan(thetas: &[f64], theta_primes: &[f64]) -> Result<ScanTable> {
    // Validate the whole grid before evaluating any cell.
    for &angle in thetas.iter().chain(theta_primes) {
        if !(angle > 0.0 && angle < std::f64::consts::FRAC_PI_2) {
            return Err(Error::AngleOutOfRange { angle });
        }
    }
    let mut rows = Vec::with_capacity(thetas.len() * theta_primes.len());
    for &theta in thetas {
        for &theta_prime in theta_primes {
            let params = AngleParams::new(theta, theta_prime)?;
            let config = SevenVectorConfig::from_params(params)?;
            let report = chain_report(&params, &config)?;
            rows.push(ScanRow {
                theta,
                theta_prime,
                l6: report.l6,
                chain_ok: report.chain_ok(CHAIN_TOL),
            });
        }
    }
    Ok(ScanTable { rows })
}
