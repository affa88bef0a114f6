mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::brute_bottleneck;
use reeb_core::random::{random_diagram, single_kind_diagram};
use reeb_core::transport::bottleneck_with;
use reeb_core::{
    bottleneck, diagram_equal, shift_bound, shift_diagram, transport, Exec, PairKind,
    ShiftVector, TransportParams, DEFAULT_TOL,
};

fn params(rng: &mut StdRng) -> TransportParams {
    let eps = rng.gen_range(0.0..2.0);
    TransportParams::new(eps, rng.gen_range(0.0..=2.0 * eps))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bottleneck_matches_brute_force(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (a, b) = (random_diagram(&mut rng, 5), random_diagram(&mut rng, 5));
        let r = bottleneck(&a, &b);
        prop_assert_eq!(r.distance, brute_bottleneck(&a, &b));
        prop_assert_eq!(r.matching.evaluate(&a, &b), Some(r.distance));
    }

    #[test]
    fn bottleneck_is_a_pseudometric(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (a, b, c) = (random_diagram(&mut rng, 4), random_diagram(&mut rng, 4), random_diagram(&mut rng, 4));
        let ab = bottleneck(&a, &b).distance;
        prop_assert_eq!(bottleneck(&a, &a).distance, 0.0);
        prop_assert_eq!(ab, bottleneck(&b, &a).distance);
        prop_assert!(bottleneck(&a, &c).distance <= ab + bottleneck(&b, &c).distance + 1e-12);
    }

    #[test]
    fn strategies_agree(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (a, b) = (random_diagram(&mut rng, 30), random_diagram(&mut rng, 30));
        prop_assert_eq!(
            bottleneck_with(&a, &b, Exec::Sequential).distance,
            bottleneck_with(&a, &b, Exec::Parallel).distance
        );
    }

    #[test]
    fn small_shifts_are_optimal(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let kind = PairKind::ALL[rng.gen_range(0..4)];
        let n = rng.gen_range(1..=6);
        let d = single_kind_diagram(&mut rng, kind, n);
        let bound = shift_bound(&d).unwrap();
        let m = rng.gen_range(0.0..=bound);
        let v = if rng.gen_bool(0.5) {
            ShiftVector::new(m, rng.gen_range(-m..=m))
        } else {
            ShiftVector::new(rng.gen_range(-m..=m), -m)
        };
        let (s, w) = shift_diagram(&d, v, DEFAULT_TOL).unwrap();
        if s.len() < d.len() {
            return Ok(());
        }
        let r = bottleneck(&d, &s);
        prop_assert!((r.distance - v.magnitude()).abs() <= 1e-12, "{} vs {}", r.distance, v.magnitude());
        prop_assert!((w.cost - v.magnitude()).abs() <= 1e-12);
    }

    #[test]
    fn transport_is_functorial_at_zero_truncation(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 5);
        let (a, b) = (rng.gen_range(0.0..1.5), rng.gen_range(0.0..1.5));
        let ta = TransportParams::new(a, 0.0);
        let tb = TransportParams::new(b, 0.0);
        let twice = transport(&transport(&d, ta, DEFAULT_TOL).unwrap(), tb, DEFAULT_TOL).unwrap();
        let once = transport(&d, TransportParams::new(a + b, 0.0), DEFAULT_TOL).unwrap();
        prop_assert!(diagram_equal(&twice, &once, 1e-12));
    }

    #[test]
    fn transport_moves_points_by_the_interleaving_bound(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, 5);
        let p = params(&mut rng);
        let t = transport(&d, p, DEFAULT_TOL).unwrap();
        let bound = p.epsilon.max((p.epsilon - p.tau).abs());
        prop_assert!(bottleneck(&d, &t).distance <= bound + 1e-12);
    }
}

#[test]
fn bottleneck_examples() {
    use reeb_core::ExtendedDiagram;
    let a = ExtendedDiagram::from_tuples(&[(PairKind::Ord0, 0.0, 2.0)]);
    let b = ExtendedDiagram::from_tuples(&[(PairKind::Ord0, 0.5, 2.5)]);
    assert_eq!(bottleneck(&a, &b).distance, 0.5);
    assert_eq!(bottleneck(&a, &ExtendedDiagram::new()).distance, 1.0);
    // Kinds never match across.
    let c = ExtendedDiagram::from_tuples(&[(PairKind::Rel1, 0.0, 2.0)]);
    assert_eq!(bottleneck(&a, &c).distance, 1.0);
}
