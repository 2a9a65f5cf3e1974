use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use weavesym::{classify, parse_design, Design};

fn weavesym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weavesym")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn data(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(rel)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_w1() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("w1.json");
    let color = dir.path().join("color.svg");
    let layer = dir.path().join("layer.svg");
    let o = weavesym(&["analyze", s(&data("w1.weave")), "--json", s(&json), "--svg-color", s(&color), "--svg-layer", s(&layer)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "(c2mm, c1m1) → c2/m11");

    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    for key in ["design", "lattices", "elements", "planeGroupS", "planeGroupS1", "pairDescriptor", "layerSymbol", "provisional", "inventory"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["layerSymbol"], "c2/m11");
    assert_eq!(v["provisional"], false);

    for svg in [&color, &layer] {
        let text = fs::read_to_string(svg).unwrap();
        roxmltree::Document::parse(&text).expect("well-formed SVG");
    }
    let color = fs::read_to_string(&color).unwrap();
    assert!(color.contains("class=\"mirror s1\""));
    assert!(color.contains("class=\"rot2 s2\""));
    let layer = fs::read_to_string(&layer).unwrap();
    assert!(layer.contains("class=\"inversion s2\""));
    assert!(layer.contains("class=\"screw2 s2\""));
}

#[test]
fn analyze_accepts_degenerate_designs() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("allblack.weave");
    fs::write(&f, "weave-design v1\nblock 1 1\n#\n").unwrap();
    let o = weavesym(&["analyze", s(&f)]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with('('), "{}", stdout(&o));
}

#[test]
fn analyze_reports_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.weave");
    fs::write(&f, "block 3 2\n#..\n.#\n").unwrap();
    let o = weavesym(&["analyze", s(&f)]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("row 2 has 2 cells, expected 3"), "{}", stderr(&o));
    assert!(!weavesym(&["analyze", "/nonexistent.weave"]).status.success());
}

#[test]
fn empty_window_fails() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.svg");
    let o = weavesym(&["analyze", s(&data("w1.weave")), "--svg-color", s(&out), "--window", "0,0,0,2"]);
    assert!(!o.status.success());
}

#[test]
fn generate_and_render() {
    let dir = tempfile::tempdir().unwrap();
    let structure = dir.path().join("plain.json");
    let front = dir.path().join("front.weave");
    let o = weavesym(&["generate", "twill", "--over", "1", "--under", "1", "--shift", "1", "--out", s(&structure)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = weavesym(&["render-weave", s(&structure), "--side", "front", "--out", s(&front)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(parse_design(&fs::read_to_string(&front).unwrap()).unwrap(), Design::checkerboard());

    let striped = dir.path().join("striped.json");
    let back = dir.path().join("back.weave");
    let o = weavesym(&[
        "generate", "twill", "--over", "2", "--under", "2", "--shift", "1", "--stripe-warp", "3", "--stripe-weft", "3", "--out",
        s(&striped),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = weavesym(&["render-weave", s(&striped), "--side", "back", "--out", s(&back)]);
    assert!(o.status.success());
    let d = parse_design(&fs::read_to_string(&back).unwrap()).unwrap();
    assert_eq!((d.width(), d.height()), (12, 12));
    assert!(!weavesym(&["render-weave", s(&striped), "--side", "sideways", "--out", s(&back)]).status.success());
}

#[test]
fn search_pair_hits_reclassify() {
    let dir = tempfile::tempdir().unwrap();
    let o = weavesym(&["search", "--pair", "p1,p1", "--max-block", "6x6", "--limit", "4", "--out-dir", s(dir.path())]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("→ p11a"));
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert!(!files.is_empty());
    for f in files {
        let d = parse_design(&fs::read_to_string(f.unwrap().path()).unwrap()).unwrap();
        assert_eq!(classify(&d).unwrap().layer.symbol, "p11a");
    }
}

#[test]
fn search_by_layer_symbol() {
    let o = weavesym(&["search", "--layer", "p2_1/b11", "--max-block", "4x4", "--limit", "1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("(p2gg, p1g1) → p2₁/b11"));
}

#[test]
fn search_rejects_impossible_targets() {
    let o = weavesym(&["search", "--pair", "p1,p2mm", "--max-block", "3x3"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("S₁ must be a subgroup of S"), "{}", stderr(&o));
    assert!(!weavesym(&["search", "--pair", "p1,p1", "--max-block", "0x3"]).status.success());
}

#[test]
fn bundled_catalog() {
    let o = weavesym(&["catalog", "verify"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("44 entries: 44 passed"));
    let o = weavesym(&["catalog", "stats"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("32/44 = 0.7273"), "{out}");
    assert!(out.contains("distinct layer groups: 15"));
}

#[test]
fn empty_manifest_fails() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("manifest.json");
    fs::write(&m, "[]").unwrap();
    let o = weavesym(&["catalog", "verify", "--manifest", s(&m)]);
    assert!(!o.status.success());
    assert!(stdout(&o).contains("0 entries"));
}

#[test]
fn corrupted_design_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let manifest: Vec<serde_json::Value> =
        serde_json::from_str(&fs::read_to_string(data("catalog/manifest.json")).unwrap()).unwrap();
    let mut entry = manifest.into_iter().find(|e| e["name"] == "Giyanggangan").unwrap();
    let original = parse_design(&fs::read_to_string(data("catalog").join(entry["designFile"].as_str().unwrap())).unwrap()).unwrap();
    let mut rows: Vec<String> = original.rows().collect();
    let flipped = if rows[0].starts_with('#') { "." } else { "#" };
    rows[0].replace_range(0..1, flipped);
    let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
    let corrupted = Design::from_rows(&refs);
    fs::write(dir.path().join("bad.weave"), weavesym::serialize_design(&corrupted)).unwrap();
    entry["designFile"] = "bad.weave".into();
    let m = dir.path().join("manifest.json");
    fs::write(&m, serde_json::to_string(&vec![entry]).unwrap()).unwrap();
    let o = weavesym(&["catalog", "verify", "--manifest", s(&m)]);
    assert!(!o.status.success());
    let out = stdout(&o);
    assert!(out.contains("FAIL"), "{out}");
    assert!(!out.contains("computed (c2mm, c1m1)"), "{out}");
}
