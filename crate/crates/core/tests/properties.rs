//! Property suites for the library invariants.

use proptest::prelude::*;
use std::f64::consts::FRAC_PI_2;

use twinspin::geometry::{complete_triple, SevenVectorConfig, UnitVector3, DEFAULT_ORTHO_TOL};
use twinspin::hiddenvar::{self, EventSpec};
use twinspin::montecarlo::{self, SampleConfig};
use twinspin::proofchain;
use twinspin::quantum::{
    self, joint_prob_closed_form, measure, twinned_joint_prob, DensityOperator, OutcomeBit,
    Projector,
};
use twinspin::AngleParams;

fn arb_angle() -> impl Strategy<Value = f64> {
    0.01..(FRAC_PI_2 - 0.01)
}

fn arb_direction() -> impl Strategy<Value = UnitVector3> {
    ((-1.0f64..1.0), (-1.0f64..1.0), (-1.0f64..1.0))
        .prop_filter_map("norm too small", |(x, y, z)| UnitVector3::new(x, y, z).ok())
}

fn arb_bit() -> impl Strategy<Value = OutcomeBit> {
    prop_oneof![Just(OutcomeBit::Zero), Just(OutcomeBit::NonZero)]
}

proptest! {
    /// The sequential computation and the closed form agree everywhere.
    #[test]
    fn sequential_matches_closed_form(
        u in arb_direction(),
        v in arb_direction(),
        first in arb_bit(),
        second in arb_bit(),
    ) {
        let sequential = twinned_joint_prob(&u, first, &v, second);
        let closed = joint_prob_closed_form(&u, first, &v, second);
        prop_assert!((sequential - closed).abs() <= 1e-12);
    }

    /// The four-outcome table is a distribution with the single-shot
    /// marginals 1/3 and 2/3.
    #[test]
    fn joint_table_is_normalized_with_fixed_marginals(
        u in arb_direction(),
        v in arb_direction(),
    ) {
        let table = quantum::joint_prob_table(&u, &v);
        let total: f64 = table.iter().flatten().sum();
        prop_assert!((total - 1.0).abs() <= 1e-12);
        prop_assert!((table[0][0] + table[0][1] - 1.0 / 3.0).abs() <= 1e-12);
        prop_assert!((table[1][0] + table[1][1] - 2.0 / 3.0).abs() <= 1e-12);
    }

    /// Lüders post-states pass the full density-operator validation
    /// whenever their branch probability is not negligible.
    #[test]
    fn luders_post_states_are_valid_states(
        u in arb_direction(),
        v in arb_direction(),
    ) {
        let first = measure(&DensityOperator::maximally_mixed(), &u);
        for bit in OutcomeBit::BOTH {
            if first.prob(bit) > 1e-10 {
                let post = first.post(bit).unwrap();
                prop_assert!(DensityOperator::new(*post.matrix()).is_ok());
                let second = measure(post, &v);
                for bit2 in OutcomeBit::BOTH {
                    if second.prob(bit2) > 1e-10 {
                        let post2 = second.post(bit2).unwrap();
                        prop_assert!(DensityOperator::new(*post2.matrix()).is_ok());
                    }
                }
            }
        }
    }

    /// Every generic angle pair produces the same nine-edge, two-triangle
    /// graph and satisfies the substitution identities.
    #[test]
    fn configuration_invariants(theta in arb_angle(), theta_prime in arb_angle()) {
        let config = SevenVectorConfig::new(theta, theta_prime).unwrap();
        for residual in config.substitution_residuals() {
            prop_assert!(residual <= 1e-12);
        }
        let graph = config.orthogonality_graph(DEFAULT_ORTHO_TOL).unwrap();
        prop_assert_eq!(graph.edge_count(), 9);
        prop_assert_eq!(graph.triangles().len(), 2);
        let mut degrees: Vec<usize> = (0..7).map(|n| graph.degree(n)).collect();
        degrees.sort_unstable();
        prop_assert_eq!(degrees, vec![2, 2, 2, 3, 3, 3, 3]);
    }

    /// A completed triple resolves the identity through the spin-zero
    /// projectors.
    #[test]
    fn completed_triple_resolves_identity(
        u in arb_direction(),
        raw in arb_direction(),
    ) {
        // Orthogonalize raw against u; skip near-parallel draws.
        let overlap = raw.dot(&u);
        let candidate = [
            raw.x() - overlap * u.x(),
            raw.y() - overlap * u.y(),
            raw.z() - overlap * u.z(),
        ];
        prop_assume!(candidate.iter().map(|c| c * c).sum::<f64>() > 1e-4);
        let v = UnitVector3::new(candidate[0], candidate[1], candidate[2]).unwrap();
        let w = complete_triple(&u, &v).unwrap();
        let report = quantum::verify_101_resolution(&[u, v, w]).unwrap();
        prop_assert!(report.projector_sum_residual <= 1e-12);
        prop_assert!(report.ok(1e-12));
        let _ = Projector::spin_zero(&w);
    }

    /// The identity equating lines (5) and (6) of the chain.
    #[test]
    fn trig_identity_residual_small(theta in arb_angle(), theta_prime in arb_angle()) {
        let params = AngleParams::new(theta, theta_prime).unwrap();
        prop_assert!(proofchain::trig_identity_residual(&params) <= 1e-12);
    }

    /// The chain closes at every sampled angle pair, the closed form is
    /// negative, and it is symmetric in the two angles.
    #[test]
    fn chain_closes_and_is_symmetric(theta in arb_angle(), theta_prime in arb_angle()) {
        let params = AngleParams::new(theta, theta_prime).unwrap();
        let config = SevenVectorConfig::from_params(params).unwrap();
        let report = proofchain::chain_report(&params, &config).unwrap();
        prop_assert!(report.chain_ok(1e-12));
        prop_assert!(report.l6 < 0.0);
        let swapped = AngleParams::new(theta_prime, theta).unwrap();
        prop_assert!((proofchain::final_value(&params) - proofchain::final_value(&swapped)).abs() <= 1e-12);
    }

    /// Feasibility is sound on realizable inputs: masses generated by an
    /// actual distribution over the valid assignments are always accepted,
    /// and the witness reproduces every constraint.
    #[test]
    fn feasibility_accepts_realizable_masses(
        weights in proptest::collection::vec(0.0f64..1.0, 11),
        picks in proptest::collection::vec((0usize..7, 0usize..7, arb_bit(), arb_bit()), 3),
    ) {
        let total: f64 = weights.iter().sum();
        prop_assume!(total > 1e-6);
        let distribution: Vec<f64> = weights.iter().map(|w| w / total).collect();

        let config = SevenVectorConfig::new(0.7, 0.9).unwrap();
        let graph = config.orthogonality_graph(DEFAULT_ORTHO_TOL).unwrap();
        let assignments = hiddenvar::enumerate_valid(&graph).unwrap();
        prop_assert_eq!(assignments.len(), 11);

        let labels = ["a", "b", "c", "d", "e", "f", "g"];
        let mut constraints = vec![(EventSpec::sure(), 1.0)];
        for (i, j, bit_i, bit_j) in picks {
            prop_assume!(i != j);
            let event = EventSpec::new(&[(labels[i], bit_i), (labels[j], bit_j)]).unwrap();
            let mass: f64 = assignments
                .iter()
                .zip(&distribution)
                .filter(|(a, _)| event.matches(&graph, a).unwrap())
                .map(|(_, w)| w)
                .sum();
            constraints.push((event, mass));
        }

        match hiddenvar::feasibility(&graph, &constraints).unwrap() {
            hiddenvar::FeasibilityResult::Feasible { witness } => {
                let residual =
                    hiddenvar::constraint_residual(&graph, &constraints, &witness).unwrap();
                prop_assert!(residual <= 1e-9, "residual {}", residual);
                prop_assert!(witness.iter().all(|&w| w >= -1e-10));
            }
            other => {
                return Err(TestCaseError::fail(format!(
                    "realizable masses rejected: {other:?}"
                )));
            }
        }
    }

    /// Identical sampling configurations reproduce reports byte for byte.
    #[test]
    fn simulation_reports_are_deterministic(seed in any::<u64>()) {
        let u = UnitVector3::new(1.0, 0.0, 0.0).unwrap();
        let v = UnitVector3::new(0.3, 0.8, 0.2).unwrap();
        let cfg = SampleConfig::new(seed, 500).unwrap();
        let a = montecarlo::simulate(&u, &v, &cfg);
        let b = montecarlo::simulate(&u, &v, &cfg);
        prop_assert_eq!(a.to_json(), b.to_json());
    }
}

/// Twenty seeded random direction pairs at a million shots each: every
/// empirical cell stays within four binomial standard errors of the
/// closed form.
#[test]
fn twenty_random_pairs_within_four_sigma() {
    let mut rng = montecarlo::rng_from_seed(0x7715_0CA1);
    for pair_index in 0..20 {
        let u = montecarlo::uniform_direction(&mut rng);
        let v = montecarlo::uniform_direction(&mut rng);
        let cfg = SampleConfig::new(9000 + pair_index, 1_000_000).unwrap();
        let report = montecarlo::simulate(&u, &v, &cfg);
        assert!(
            report.max_abs_z() <= 4.0,
            "pair {pair_index}: z-scores {:?} for u={:?} v={:?}",
            report.z_scores,
            report.u,
            report.v
        );
    }
}
