use kappachain::triangulate::fan_triangulate;
use kappachain::{ConvexChain, Curvature, Triangle};

#[test]
fn triangle_round_trip() {
    let t = Triangle::new(0.8, 1.0, 1.2, Curvature::UNIT_SPHERE).unwrap();
    let text = serde_json::to_string(&t).unwrap();
    let back: Triangle = serde_json::from_str(&text).unwrap();
    assert_eq!(back, t);
}

#[test]
fn negative_curvature_is_rejected() {
    assert!(serde_json::from_str::<Curvature>("-0.5").is_err());
    assert_eq!(
        serde_json::from_str::<Curvature>("0.25").unwrap().kappa(),
        0.25
    );
}

#[test]
fn triangulation_export_shape() {
    let chain = ConvexChain::new(vec![0.5, 0.6, 0.7], vec![2.0, 2.2]).unwrap();
    let fan = fan_triangulate(&chain, Curvature::UNIT_SPHERE).unwrap();
    let v = serde_json::to_value(&fan).unwrap();
    assert_eq!(v["faces"].as_array().unwrap().len(), 2);
    assert_eq!(v["dual_tree"].as_array().unwrap().len(), 1);
    assert_eq!(v["chain_ends"], serde_json::json!([0, 3]));
    assert_eq!(v["boundary"].as_array().unwrap().len(), 4);
}
