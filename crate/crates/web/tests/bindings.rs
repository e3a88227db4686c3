use serde_json::Value;
use twisted_cubes_web::{
    embed_check_json, graph_view_json, rank_profile_json, sort_table_json, MAX_DEMO_DIM,
};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn twisted_view_has_the_unique_path() {
    let v = parse(graph_view_json("twisted", "face", 3).unwrap());
    assert_eq!(v["nodes"].as_array().unwrap().len(), 8);
    assert_eq!(v["edges"].as_array().unwrap().len(), 12);
    assert_eq!(v["hamiltonian_count"], 1);
    let labels: Vec<&str> = v["hamiltonian"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| {
            v["nodes"][i.as_u64().unwrap() as usize]["label"]
                .as_str()
                .unwrap()
        })
        .collect();
    assert_eq!(
        labels,
        ["011", "010", "000", "001", "101", "100", "110", "111"]
    );
    for n in v["nodes"].as_array().unwrap() {
        for k in ["x", "y"] {
            let c = n[k].as_f64().unwrap();
            assert!((0.0..=1.0).contains(&c), "{n}");
        }
    }
}

#[test]
fn cube_and_simplex_views() {
    let v = parse(graph_view_json("cube", "reflexive", 2).unwrap());
    assert_eq!(v["edges"].as_array().unwrap().len(), 8);
    let v = parse(graph_view_json("simplex", "face", 4).unwrap());
    assert_eq!(v["nodes"].as_array().unwrap().len(), 5);
    assert_eq!(v["hamiltonian_count"], 1);
}

#[test]
fn sort_table_rows() {
    let v = parse(sort_table_json(3).unwrap());
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0]["label"], "011");
    assert_eq!(rows[0]["sorted"], "000");
}

#[test]
fn rank_profile_is_affine_in_sort() {
    let v = parse(rank_profile_json(4).unwrap());
    for row in v.as_array().unwrap() {
        let sort = row["sort"].as_i64().unwrap();
        let tw: i64 = row["rank_tw"].as_str().unwrap().parse().unwrap();
        assert_eq!(tw, 2 * sort - 15);
    }
}

#[test]
fn embed_checks() {
    let v = parse(embed_check_json("twisted", "tw", 3).unwrap());
    assert_eq!(v["pass"], true);
    let v = parse(embed_check_json("twisted", "std", 2).unwrap());
    assert_eq!(v["pass"], false);
    assert_eq!(v["witness"], serde_json::json!(["01", "00"]));
}

#[test]
fn bad_input_is_an_error() {
    assert!(graph_view_json("torus", "face", 2).is_err());
    assert!(graph_view_json("cube", "lax", 2).is_err());
    assert!(sort_table_json(MAX_DEMO_DIM + 1).is_err());
    assert!(embed_check_json("simplex", "std", 2).is_err());
}
