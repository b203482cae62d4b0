//! Mechanized verification that spin-1 "twinning" cannot be extended by
//! even one bit.
//!
//! Two spin-1 particles are *twinned* when they are guaranteed to give the
//! same answer to "is the spin component along w zero?" for every
//! direction w. This crate verifies, from first principles, that no third
//! particle can match a twinned pair's answer in even a single fixed
//! direction:
//!
//! - [`quantum`] computes the joint answer statistics of a twinned pair by
//!   sequential (Lüders) measurement of one maximally mixed particle and
//!   checks them against their closed forms.
//! - [`geometry`] builds a seven-direction configuration, parameterized by
//!   two opening angles, whose orthogonality graph carries the whole
//!   argument.
//! - [`hiddenvar`] enumerates every answer-bit assignment on that graph
//!   compatible with the 1,0,1 rule and decides by linear feasibility
//!   whether any distribution over them reproduces the quantum pair
//!   masses. It never does: the certificate is a signed combination of
//!   the constraints that every distribution must keep nonnegative, yet
//!   whose required value is strictly negative.
//! - [`proofchain`] evaluates that combination in closed form,
//!   `-(1/3)(s s'/D)^2`, and checks the six-line identity chain behind it.
//! - [`montecarlo`] validates the closed forms by seeded, reproducible
//!   simulation.
//!
//! The matching particle would carry one answer bit; the bit's Shannon
//! information content is `log2(3) - 2/3 ≈ 0.918` (less than 45/49), so
//! not even that much of a particle's state can be copied.

pub mod error;
pub mod geometry;
pub mod hiddenvar;
pub mod montecarlo;
pub mod proofchain;
pub mod quantum;

pub use error::{Error, Result};
pub use geometry::{AngleParams, Label, OrthoGraph, SevenVectorConfig, UnitVector3};
pub use hiddenvar::{Assignment101, Certificate, EventSpec, FeasibilityResult};
pub use montecarlo::{SampleConfig, SimulationReport};
pub use proofchain::{ChainReport, ScanRow, ScanTable};
pub use quantum::{DensityOperator, Measurement, OutcomeBit, Projector};
