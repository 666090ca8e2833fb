//! Structure-constant tables and a report are pinned to files under
//! `golden/`. Set `LIELOCAL_BLESS=1` to rewrite them after an intended change.

use std::path::PathBuf;
use std::process::Command;

use lielocal::chevalley::blob_digest;
use lielocal::rootsys::{cartan, CartanType};
use lielocal::{CycloField, LieAlg};

const TYPES: [(CartanType, usize); 9] = [
    (CartanType::A, 1),
    (CartanType::A, 2),
    (CartanType::A, 3),
    (CartanType::B, 2),
    (CartanType::B, 3),
    (CartanType::C, 3),
    (CartanType::D, 4),
    (CartanType::G, 2),
    (CartanType::F, 4),
];

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden")
}

fn bless() -> bool {
    std::env::var_os("LIELOCAL_BLESS").is_some()
}

fn check(path: PathBuf, actual: &str) {
    if bless() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; run with LIELOCAL_BLESS=1", path.display()));
    assert!(expected == actual, "{} drifted", path.display());
}

#[test]
fn structure_constant_tables() {
    for (t, n) in TYPES {
        let l = LieAlg::build(cartan(t, n).unwrap(), CycloField::default()).unwrap();
        let path = golden_dir().join("constants").join(format!("{t}{n}.json"));
        check(path.clone(), &l.golden_text());
        let bytes = std::fs::read(&path).unwrap();
        assert_eq!(blob_digest(&bytes), l.constants_digest());
    }
}

#[test]
fn a2_table_matches_hand_values() {
    let text = std::fs::read_to_string(golden_dir().join("constants/A2.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let consts = v["structure_constants"].as_array().unwrap();
    let find = |a: [i64; 2], b: [i64; 2]| {
        consts
            .iter()
            .find(|c| c["alpha"] == serde_json::json!(a) && c["beta"] == serde_json::json!(b))
            .map(|c| c["n"].as_i64().unwrap())
    };
    // extraspecial pair for alpha1 + alpha2
    assert_eq!(find([1, 0], [0, 1]), Some(1));
    assert_eq!(find([0, 1], [1, 0]), Some(-1));
    assert_eq!(find([-1, 0], [0, -1]), Some(-1));
    // N(a, b) = (c, c)/(b, b) N(-c, a) with c = a + b negative
    assert_eq!(find([1, 0], [-1, -1]), Some(-1));
    assert_eq!(find([-1, 0], [-1, -1]), None);
    // every ordered pair of roots whose sum is a root
    assert_eq!(consts.len(), 12);
}

#[test]
fn report_schema() {
    let out = Command::new(env!("CARGO_BIN_EXE_lielocal"))
        .args(["suite", "run", "--type", "A", "--rank", "2", "--suites", "opposite,scalari"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    check(golden_dir().join("report_A2_opposite_scalari.json"), &text);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let run = &v["runs"][0];
    let digest = blob_digest(&std::fs::read(golden_dir().join("constants/A2.json")).unwrap());
    assert_eq!(run["constants_digest"], serde_json::json!(digest));
    for s in run["suites"].as_array().unwrap() {
        let mut keys: Vec<&str> = s.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["cases", "suite", "summary"]);
        for c in s["cases"].as_array().unwrap() {
            let mut keys: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
            keys.sort_unstable();
            assert_eq!(keys, ["detail", "id", "input", "pass"]);
        }
    }
}
