use proptest::prelude::*;
use rdfsim_core::fixtures;
use rdfsim_core::ingest::{vehicle_predicate, SCHEMA};
use rdfsim_core::profiles::{
    builtin_profile, builtin_profiles, example_3b, normalize_label, profile_from_config,
    ProfileError, WeightProfile,
};

fn profile_strategy() -> impl Strategy<Value = WeightProfile> {
    (
        "[a-zA-Z0-9 _-]{1,10}",
        0.0f64..10.0,
        prop::collection::btree_map("[a-z]{1,6}( [a-z]{1,6})?", 0.0f64..10.0, 0..6),
        prop::option::of((0.1f64..5.0, prop::collection::vec("[a-z]{1,8}", 0..4))),
    )
        .prop_map(|(name, default, weights, boost)| {
            let mut p = WeightProfile::new(name, default).unwrap();
            for (k, w) in weights {
                p = p.with_weight(k, w).unwrap();
            }
            if let Some((factor, preds)) = boost {
                p = p.with_boost(preds, factor).unwrap();
            }
            p
        })
}

proptest! {
    #[test]
    fn config_round_trip(p in profile_strategy()) {
        let (back, warnings) = profile_from_config(&p.to_config_json()).unwrap();
        prop_assert!(warnings.is_empty());
        prop_assert_eq!(back, p);
    }

    #[test]
    fn resolved_weights_are_finite_and_non_negative(
        p in profile_strategy(),
        local in "[a-zA-Z_]{1,12}",
    ) {
        let w = p.resolve_weight(&format!("http://example.org/p#{local}"));
        prop_assert!(w.is_finite() && w >= 0.0);
    }
}

#[test]
fn example_3b_resolves_the_listed_weights() {
    let p = example_3b();
    let ns = "http://example.org/vo#";
    let expect = [
        ("price", 0.2),
        ("exteriorColor", 0.2),
        ("transmission", 0.2),
        ("nbOfSeats", 0.2),
        ("hasNbOfMileage", 0.1),
        ("fuelType", 0.1),
    ];
    for (local, w) in expect {
        assert_eq!(p.resolve_weight(&format!("{ns}{local}")), w, "{local}");
    }
    assert_eq!(fixtures::example_3b_profile(), p);
    assert_eq!(builtin_profile("example-3b", 2.0).unwrap(), Some(p));
}

#[test]
fn resolution_order() {
    let iri = "http://example.org/vo#fuel_type";
    let p = WeightProfile::new("t", 1.0)
        .unwrap()
        .with_boost(["fuel type"], 3.0)
        .unwrap();
    assert_eq!(p.resolve_weight(iri), 3.0);
    let p = p.with_weight("Fuel Type", 0.5).unwrap();
    assert_eq!(p.resolve_weight(iri), 0.5);
    let p = p.with_weight(iri, 0.25).unwrap();
    assert_eq!(p.resolve_weight(iri), 0.25);
    assert_eq!(p.resolve_weight("http://example.org/vo#color"), 1.0);
}

#[test]
fn labels_normalize() {
    assert_eq!(
        normalize_label("Number of Doors"),
        normalize_label("nb_doors")
    );
    assert_eq!(
        normalize_label("hasNbOfMileage"),
        normalize_label("has nb of mileage")
    );
    assert_eq!(normalize_label("fuelType"), normalize_label("fuel-type"));
    assert_ne!(normalize_label("color"), normalize_label("colour"));
}

#[test]
fn builtins_boost_generated_predicates() {
    let profiles = builtin_profiles(2.0).unwrap();
    assert_eq!(profiles.len(), 12);
    assert!(profiles[0].boost().is_none());
    for p in &profiles[1..] {
        let boosted = SCHEMA
            .iter()
            .filter(|local| p.resolve_weight(&vehicle_predicate(local)) == 2.0)
            .count();
        assert_eq!(
            boosted,
            p.boost().unwrap().predicates().len(),
            "{}",
            p.name()
        );
    }
    assert!(builtin_profiles(0.0).is_err());
    assert!(builtin_profile("P12", 2.0).unwrap().is_none());
}

#[test]
fn config_errors() {
    assert!(matches!(
        profile_from_config(r#"{"name": "x", "weights": {"price": -1}}"#),
        Err(ProfileError::InvalidWeight { .. })
    ));
    assert!(matches!(
        profile_from_config("{\"name\": \"x\",\n  \"default\": }"),
        Err(ProfileError::Syntax { line: 2, .. })
    ));
    assert!(matches!(
        profile_from_config(r#"{"default": 1}"#),
        Err(ProfileError::Schema { .. })
    ));
    let (_, warnings) = profile_from_config(r#"{"name": "x", "colour": 1}"#).unwrap();
    assert_eq!(warnings.len(), 1);
}
