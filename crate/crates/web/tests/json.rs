use eaqecc_web::{bch_json, cosets_json, enlarge_json, gv_heatmap_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn cosets_of_z15_over_gf4() {
    let v = parse(cosets_json(4, 15).unwrap());
    assert_eq!(v["big_field"], "2^4");
    let cosets = v["cosets"].as_array().unwrap();
    assert_eq!(cosets[0], serde_json::json!([0]));
    assert_eq!(cosets[1], serde_json::json!([1, 4]));
    let total: usize = cosets.iter().map(|c| c.as_array().unwrap().len()).sum();
    assert_eq!(total, 15);
}

#[test]
fn bch_pair_parameters() {
    let v = parse(bch_json(4, 15, "0,1", "0", 1e6).unwrap());
    assert_eq!(v["code"], "[[15,12,3/2;1]]_4");
    assert_eq!(v["k1"], 3);
    assert_eq!(v["ht_z"], 3);
    assert!(bch_json(4, 15, "0,x", "0", 1e6).is_err());
    assert!(bch_json(2, 8, "0", "0", 1e6).is_err());
}

#[test]
fn heatmap_threshold() {
    let v = parse(gv_heatmap_json(4, 15, 3, 1, 1, 6, false).unwrap());
    assert_eq!(v["threshold"], serde_json::json!({"dz": 2, "dx": 1}));
    let sums = v["sums"].as_array().unwrap();
    assert_eq!(sums.len(), 6);
    assert!(sums[1][0].as_f64().unwrap() < 1.0);
    assert!(sums[2][1].as_f64().unwrap() >= 1.0);
}

#[test]
fn enlargement() {
    let v = parse(enlarge_json(7, 1e6).unwrap());
    assert_eq!(v["before"], "[[6,3,2/3;0]]_7");
    assert_eq!(v["after"], "[[6,3,3/3;1]]_7");
    assert!(enlarge_json(6, 1e6).is_err());
}
