use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use exterior_rdu::cli::run;
use exterior_rdu::fault::{with_fault, Fault};
use exterior_rdu::linalg::InvPair;
use exterior_rdu::pluecker::is_member;
use serde_json::Value;

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("exterior-rdu-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("exterior-rdu").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn generate(dir: &Path, n: usize, seed: u64) -> PathBuf {
    let g = dir.join(format!("g{n}-{seed}.json"));
    let (code, _, err) =
        call(&["gen", "--n", &n.to_string(), "--seed", &seed.to_string(), "--len", "30", "--out", path(&g)]);
    assert_eq!(code, 0, "{err}");
    g
}

#[test]
fn gen_is_deterministic_and_yields_members() {
    let (c1, a, _) = call(&["gen", "--n", "5", "--seed", "11", "--len", "25"]);
    let (c2, b, _) = call(&["gen", "--n", "5", "--seed", "11", "--len", "25"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    assert!(a.ends_with('\n'));
    let g = InvPair::from_json(&serde_json::from_str(&a).unwrap()).unwrap();
    assert!(is_member(g.fwd()).unwrap());
    let (_, c, _) = call(&["gen", "--n", "5", "--seed", "12", "--len", "25"]);
    assert_ne!(a, c);

    let (_, id, _) = call(&["gen", "--n", "4", "--len", "0", "--ring", "int"]);
    let e = InvPair::from_json(&serde_json::from_str(&id).unwrap()).unwrap();
    assert!(e.fwd().is_identity() && e.bwd().is_identity());

    let (code, many, _) = call(&["gen", "--n", "4", "--trials", "3"]);
    assert_eq!(code, 0);
    let arr: Vec<Value> = serde_json::from_str(&many).unwrap();
    assert_eq!(arr.len(), 3);
    assert_ne!(arr[0], arr[1]);

    assert_eq!(call(&["gen", "--ring", "poly:x"]).0, 2);
}

#[test]
fn decompose_then_verify() {
    let dir = scratch("decompose");
    let g = generate(&dir, 5, 3);
    let r = dir.join("r.json");
    let (code, _, err) = call(&["decompose", "--in", path(&g), "--target", "entry:1,3:1,2", "--out", path(&r)]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&fs::read_to_string(&r).unwrap()).unwrap();
    assert_eq!(v["case"], "h1-entry");
    assert_eq!(v["word"]["terms"].as_array().unwrap().len(), 8);
    assert_eq!(call(&["verify", "--in", path(&g), "--word", path(&r)]).0, 0);
    assert_eq!(call(&["verify", "--in", path(&g), "--word", path(&r), "--k", "3", "--l", "2"]).0, 1);

    let mut tampered = v.clone();
    let eps = tampered["word"]["terms"][0]["eps"].as_i64().unwrap();
    tampered["word"]["terms"][0]["eps"] = (-eps).into();
    let bad = dir.join("bad.json");
    fs::write(&bad, tampered.to_string()).unwrap();
    assert_eq!(call(&["verify", "--in", path(&g), "--word", path(&bad)]).0, 1);

    let bare = dir.join("bare.json");
    fs::write(&bare, v["word"].to_string()).unwrap();
    assert_eq!(call(&["verify", "--in", path(&g), "--word", path(&bare)]).0, 2);
    let xi = v["param"].as_str().unwrap().to_string();
    assert_eq!(call(&["verify", "--in", path(&g), "--word", path(&bare), "--xi", &xi]).0, 0);

    for (target, case, len) in
        [("entry:1,2:3,4", "h0-entry", 16), ("diag:1,2:1,3", "h1-diag", 24), ("diag:1,2:3,4", "h0-diag", 48)]
    {
        let (code, out, err) = call(&["decompose", "--in", path(&g), "--target", target, "--k", "5", "--l", "1"]);
        assert_eq!(code, 0, "{err}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["case"], case);
        assert_eq!(v["word"]["terms"].as_array().unwrap().len(), len);
    }
    assert_eq!(call(&["decompose", "--in", path(&g), "--target", "entry:1,2:1,2"]).0, 2);
    assert_eq!(call(&["decompose", "--in", path(&g), "--target", "row:1"]).0, 2);
    assert_eq!(call(&["decompose", "--in", path(&g)]).0, 2);
}

#[test]
fn decompose_all_covers_every_generator() {
    let dir = scratch("all");
    let g = generate(&dir, 4, 9);
    let (code, out, _) = call(&["decompose", "--in", path(&g), "--all"]);
    assert_eq!(code, 0);
    let arr: Vec<Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(arr.len(), 35);
}

#[test]
fn member_level_and_usage_errors() {
    let dir = scratch("member");
    let (_, id, _) = call(&["gen", "--n", "5", "--len", "0"]);
    let idp = dir.join("id.json");
    fs::write(&idp, &id).unwrap();
    assert_eq!(call(&["member", "--in", path(&idp)]).0, 0);

    let g4 = generate(&dir, 4, 1);
    let (code, out, _) = call(&["member", "--in", path(&g4)]);
    assert_eq!(code, 0);
    assert!(out.contains("caveat"));

    let mut v: Value = serde_json::from_str(&fs::read_to_string(&g4).unwrap()).unwrap();
    let x = v["fwd"]["rows"][0][1].as_str().unwrap().parse::<u64>().unwrap();
    v["fwd"]["rows"][0][1] = ((x + 1) % 97).to_string().into();
    v["bwd"] = v["fwd"].clone();
    let broken = dir.join("broken.json");
    fs::write(&broken, v.to_string()).unwrap();
    assert_eq!(call(&["member", "--in", path(&broken)]).0, 2);

    let r = exterior_rdu::ring::RingDescriptor::zmod(97).unwrap();
    let t = InvPair::transvection(6, 0, 5, &r.one()).unwrap();
    let outside = dir.join("outside.json");
    fs::write(&outside, t.to_json(Some(4)).to_string()).unwrap();
    assert_eq!(call(&["member", "--in", path(&outside)]).0, 1);
    assert_eq!(call(&["decompose", "--in", path(&outside), "--target", "entry:1,3:1,2"]).0, 1);

    let (code, out, _) = call(&["level", "--in", path(&idp), "--modulus", "97"]);
    assert_eq!(code, 0);
    let lv: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(lv["generators"].as_array().unwrap().len(), 99);
    assert_eq!(lv["class"], "principal");
    assert_eq!(lv["ideal"], "97");

    assert_eq!(call(&["member", "--in", "/nonexistent.json"]).0, 2);
    assert_eq!(call(&["member"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["gen", "--ring", "zmod:1"]).0, 2);
}

#[test]
fn stabilize_vectors() {
    let dir = scratch("stabilize");
    let w = dir.join("w.json");
    fs::write(&w, r#"{"n":5,"entries":[3,1,4,1,5,9,2,6,5,3]}"#).unwrap();
    let (code, out, _) = call(&["stabilize", "--in", path(&w), "--ring", "int", "--col", "5"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["fixed"], true);
    assert_eq!(v["word"]["letters"].as_array().unwrap().len(), 4);
    assert_eq!(call(&["stabilize", "--in", path(&w), "--ring", "int", "--row", "2"]).0, 0);
    assert_eq!(call(&["stabilize", "--in", path(&w), "--ring", "int", "--t1"]).0, 1);
    assert_eq!(call(&["stabilize", "--in", path(&w), "--ring", "int"]).0, 2);
    assert_eq!(call(&["stabilize", "--in", path(&w), "--ring", "int", "--col", "9"]).0, 2);

    fs::write(&w, r#"{"n":5,"entries":[1,0,0,0,0,0,0,0,0,0]}"#).unwrap();
    assert_eq!(call(&["stabilize", "--in", path(&w), "--ring", "int", "--t1"]).0, 0);
}

#[test]
fn identities_report_and_tampering() {
    let (code, out, _) = call(&["identities", "--max-n", "5"]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.contains("pass")), "{out}");
    let (code, out, _) = call(&["identities", "--max-n", "3"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("t-one") && l.contains("skipped (n<5)")));
    let (code, out, _) =
        with_fault(Fault::FormulaSign { i: 2, j: 1, n: 4, position: 1 }, || call(&["identities", "--max-n", "4"]));
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"));
    assert_eq!(call(&["identities", "--max-n", "9"]).0, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_exterior-rdu");
    let dir = scratch("bin");
    let g = dir.join("g.json");
    let status = Command::new(bin).args(["gen", "--n", "4", "--seed", "5", "--out", path(&g)]).status().unwrap();
    assert_eq!(status.code(), Some(0));
    let out = Command::new(bin).args(["member", "--in", path(&g)]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(bin).args(["decompose", "--in", path(&g), "--target", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
