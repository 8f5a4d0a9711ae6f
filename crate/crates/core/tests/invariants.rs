use hcoef::classifier::bounds_report;
use hcoef::config::Config;
use hcoef::constructions::{extend_polynomial, random_cm_spec, random_cm_spec_of, RandomKind};
use hcoef::filtration::rng_for;
use hcoef::report::analyze;
use hcoef::FieldSpec;
use proptest::prelude::*;

fn config(seed: u64) -> Config {
    Config {
        field: Some(FieldSpec::default()),
        seed,
        ..Config::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_rings_satisfy_the_bounds(seed in 0u64..10_000) {
        let spec = random_cm_spec(seed, 3, 3);
        let inv = analyze(&spec, &config(seed)).unwrap();
        prop_assert!(bounds_report(&inv).all_hold(), "{}", spec);
        prop_assert!(inv.e[0] > inv.h);
        // A/J has length e for a minimal reduction J of a CM ring
        prop_assert_eq!(inv.reduction.colength as i64, inv.multiplicity);
    }

    #[test]
    fn one_free_variable_shifts_depth_and_keeps_numerator(seed in 0u64..10_000) {
        let mut rng = rng_for(seed);
        let spec = random_cm_spec_of(RandomKind::Artinian, &mut rng, 2, 3);
        let (a, b) = (analyze(&spec, &config(0)).unwrap(), analyze(&extend_polynomial(&spec, 1), &config(0)).unwrap());
        prop_assert_eq!(&a.hpoly.h, &b.hpoly.h);
        prop_assert_eq!(a.d + 1, b.d);
        prop_assert_eq!(a.depth_g + 1, b.depth_g);
        prop_assert_eq!(a.cm_type, b.cm_type);
    }

    #[test]
    fn hypersurfaces_have_cm_associated_graded_ring(seed in 0u64..10_000) {
        let mut rng = rng_for(seed);
        let spec = random_cm_spec_of(RandomKind::Hypersurface, &mut rng, 3, 4);
        let inv = analyze(&spec, &config(seed)).unwrap();
        // G(A) = k[x..]/(in f) is again a hypersurface
        prop_assert!(inv.graded_cm());
        prop_assert_eq!(inv.cm_type, 1);
    }

    #[test]
    fn invariants_do_not_depend_on_the_seed(seed in 0u64..10_000) {
        let spec = random_cm_spec(seed, 3, 3);
        let (a, b) = (analyze(&spec, &config(1)).unwrap(), analyze(&spec, &config(2)).unwrap());
        prop_assert_eq!(a.hpoly, b.hpoly);
        prop_assert_eq!(a.depth_g, b.depth_g);
        prop_assert_eq!(a.cm_type, b.cm_type);
        prop_assert_eq!(a.reduction.lengths, b.reduction.lengths);
    }
}
