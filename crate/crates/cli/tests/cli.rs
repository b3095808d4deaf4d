use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use restriction_core::actions::{principal_action, projection_action};
use restriction_core::etale::{partial_units, restrict_action};
use restriction_core::generators::{powerset, pt};
use restriction_core::matched_pair::from_lrm;
use restriction_core::{BooleanLrm, EmSet, FiniteMonoid, MatchedPair, PairBase, Partition, StructureDocument};
use serde_json::Value;
use tempfile::TempDir;

fn lrm(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrm")).args(args).current_dir(dir).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn write(dir: &Path, name: &str, doc: &StructureDocument) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, doc.to_canonical()).unwrap();
    path
}

fn setup() -> TempDir {
    let dir = TempDir::new().unwrap();
    let o = lrm(&["generate", "pt(2)", "--out", "pt2.json"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let s = pt(2);
    write(dir.path(), "terminal.json", &StructureDocument::from_action(&projection_action(&s).action));
    write(dir.path(), "whole.json", &StructureDocument::from_action(&principal_action(&s, s.identity()).action));
    let ext = from_lrm(&s).unwrap();
    write(dir.path(), "regular.json", &StructureDocument::from_em_set(&EmSet::regular(&ext.pair)));
    dir
}

#[test]
fn generated_structures_pass_their_checks() {
    let dir = setup();
    let o = lrm(&["check", "pt2.json"], dir.path());
    assert_eq!(code(&o), 0);
    let report = json(&o);
    assert!(report["axioms"].as_array().unwrap().iter().all(|a| a["status"] != "fail"));
    let o = lrm(&["check", "--boolean", "pt2.json"], dir.path());
    assert_eq!(code(&o), 0);
    for name in ["sym_inv(2)", "powerset(2)", "trivial_plus(cyclic(3))", "transformations(2)"] {
        assert_eq!(code(&lrm(&["check", "--fixtures", name], dir.path())), 0, "{name}");
    }
}

#[test]
fn axiom_failures_exit_with_one() {
    let dir = TempDir::new().unwrap();
    let m = FiniteMonoid::from_rows(&[vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]], 0).unwrap();
    write(dir.path(), "bad.json", &StructureDocument::from_monoid(&m));
    let o = lrm(&["check", "bad.json"], dir.path());
    assert_eq!(code(&o), 1);
    let failed: Vec<String> = json(&o)["axioms"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|a| a["status"] == "fail")
        .map(|a| a["axiom"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(failed, ["associativity"]);
}

#[test]
fn bad_input_exits_with_two() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("garbage.json"), "{ not json").unwrap();
    fs::write(
        dir.path().join("ragged.json"),
        r#"{"kind": "monoid", "table": [[0, 1], [1]], "identity": 0}"#,
    )
    .unwrap();
    for args in [
        vec!["check", "garbage.json"],
        vec!["check", "ragged.json"],
        vec!["check", "missing.json"],
        vec!["check", "--fixtures", "nonsense(3)"],
        vec!["generate", "pt(x)"],
        vec!["frobnicate"],
    ] {
        let o = lrm(&args, dir.path());
        assert_eq!(code(&o), 2, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let o = lrm(&["check", "garbage.json"], dir.path());
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn extract_build_and_round_trip() {
    let dir = setup();
    assert_eq!(code(&lrm(&["extract", "pt2.json", "--out", "pair.json"], dir.path())), 0);
    assert_eq!(code(&lrm(&["check", "pair.json"], dir.path())), 0);
    assert_eq!(code(&lrm(&["build", "pair.json", "--out", "built.json"], dir.path())), 0);
    let built = StructureDocument::parse(&fs::read_to_string(dir.path().join("built.json")).unwrap()).unwrap();
    assert_eq!(built.lrm().unwrap().size(), 9);
    let o = lrm(&["roundtrip", "pt2.json"], dir.path());
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["table_identical"], true);
    assert_eq!(code(&lrm(&["roundtrip", "pair.json"], dir.path())), 0);
    assert_eq!(code(&lrm(&["roundtrip", "whole.json"], dir.path())), 0);
    assert_eq!(code(&lrm(&["roundtrip", "regular.json"], dir.path())), 0);
}

#[test]
fn act_and_unact() {
    let dir = setup();
    let o = lrm(&["act", "regular.json", "--lrm", "pt2.json", "--out", "act.json"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc = StructureDocument::parse(&fs::read_to_string(dir.path().join("act.json")).unwrap()).unwrap();
    let s = doc.lrm().unwrap();
    assert_eq!(doc.action(&s).unwrap().size(), 9);
    assert_eq!(code(&lrm(&["act", "regular.json"], dir.path())), 0);
    let o = lrm(&["unact", "act.json", "--out", "back.json"], dir.path());
    assert_eq!(code(&o), 0);
    let o = lrm(&["hom", "back.json", "regular.json"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(json(&o)["count"].as_u64().unwrap() >= 1);
}

#[test]
fn closure_verbs() {
    let dir = setup();
    let o = lrm(&["hom", "whole.json", "terminal.json"], dir.path());
    assert_eq!(json(&o)["count"], 1);
    let o = lrm(&["product", "terminal.json", "terminal.json"], dir.path());
    assert_eq!(code(&o), 0);
    let doc = StructureDocument::parse(&String::from_utf8(o.stdout).unwrap()).unwrap();
    let s = doc.lrm().unwrap();
    assert_eq!(doc.action(&s).unwrap().size(), 4);
    assert_eq!(code(&lrm(&["exp", "terminal.json", "whole.json"], dir.path())), 0);
    for extra in [None, Some("--boolean")] {
        let mut args = vec!["curry", "terminal.json", "whole.json", "terminal.json"];
        args.extend(extra);
        let o = lrm(&args, dir.path());
        assert_eq!(code(&o), 0);
        let v = json(&o);
        assert_eq!(v["bijective"], true);
        assert_eq!(v["hom_product"], v["hom_exponential"]);
    }
}

#[test]
fn etale_verbs() {
    let dir = setup();
    let o = lrm(&["inv", "pt2.json"], dir.path());
    assert_eq!(code(&o), 0);
    let inv = StructureDocument::parse(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert_eq!(inv.lrm().unwrap().size(), 7);
    let o = lrm(&["etale", "pt2.json"], dir.path());
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["etale"], true);
    let o = lrm(&["catiso", "pt2.json"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(json(&o)["warning"].is_null());

    let b = BooleanLrm::new(pt(2)).unwrap();
    let pu = partial_units(&b).unwrap();
    let t = projection_action(b.lrm()).action;
    write(dir.path(), "restricted.json", &StructureDocument::from_action(&restrict_action(&t, &pu).unwrap()));
    let o = lrm(&["extend", "restricted.json", "--lrm", "pt2.json"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(String::from_utf8(o.stdout).unwrap(), StructureDocument::from_action(&t).to_canonical());

    let o = lrm(&["report", "--fixtures", "pt(2)"], dir.path());
    assert_eq!(code(&o), 0);
    let facts = &json(&o)["facts"];
    assert_eq!(facts["size"], 9);
    assert_eq!(facts["partial_units"], 7);
    assert_eq!(facts["etale"], true);
}

#[test]
fn non_etale_monoid_exits_with_one() {
    let dir = TempDir::new().unwrap();
    let p = MatchedPair::new(
        PairBase::Boolean(powerset(1)),
        FiniteMonoid::from_rows(&[vec![0, 1], vec![1, 1]], 0).unwrap(),
        vec![0, 1, 0, 1],
        vec![Partition::universal(2), Partition::identity(2)],
    )
    .unwrap();
    write(dir.path(), "pair.json", &StructureDocument::from_pair(&p));
    assert_eq!(code(&lrm(&["build", "pair.json", "--out", "s.json"], dir.path())), 0);
    let o = lrm(&["etale", "s.json"], dir.path());
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["etale"], false);
}
