use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use tempfile::TempDir;

use shknot::{Io, EXIT_ERROR, EXIT_NO_MOVE, EXIT_OK};
use shknot_core::catalog;
use shknot_core::knot_id::{classify, KnotTag};
use shknot_core::lattice::{parse_knotw, validate, Lattice};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn shknot(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("shknot").chain(args.iter().copied());
    let code = shknot::run_args(argv, &mut Io { out: &mut out, err: &mut err });
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn catalog_file(dir: &Path, name: &str) -> String {
    write(dir, &format!("{name}.knotw"), catalog::get(name).unwrap().text).to_str().unwrap().to_string()
}

#[test]
fn classify_square_and_trefoil() {
    let dir = TempDir::new().unwrap();
    let r = shknot(&["classify", &catalog_file(dir.path(), "square")]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.out.lines().next(), Some("unknot, 4 sticks, 4 edges, det 1"));

    let r = shknot(&["classify", &catalog_file(dir.path(), "trefoil_sh11")]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.out.lines().next(), Some("3_1, 11 sticks, 23 edges, det 3"));
    assert!(r.out.contains("sticks: x=2 y=3 z=2 w=4"));
    assert!(r.out.contains("properly leveled: yes"));
}

#[test]
fn classify_json() {
    let dir = TempDir::new().unwrap();
    let r = shknot(&["classify", "--json", &catalog_file(dir.path(), "figure_eight_sh11")]);
    assert_eq!(r.code, EXIT_OK);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["type"], "4_1");
    assert_eq!(v["determinant"], 5);
    assert_eq!(v["sticks"], 11);
    assert_eq!(v["alexander"], serde_json::json!([1, -3, 1]));
}

#[test]
fn malformed_token_names_token_and_offset() {
    let dir = TempDir::new().unwrap();
    let path = write(dir.path(), "bad.knotw", "x^1 y^q x^-1 y^-1\n");
    let r = shknot(&["classify", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_ERROR);
    assert!(r.err.contains("y^q"), "{}", r.err);
    assert!(r.err.contains("byte 4"), "{}", r.err);
}

#[test]
fn open_polygon_is_rejected() {
    let dir = TempDir::new().unwrap();
    let path = write(dir.path(), "open.knotw", "lattice: cubic\nx^1 y^1 x^-1\n");
    let r = shknot(&["classify", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_ERROR);
    assert!(r.err.contains("not closed"), "{}", r.err);
}

#[test]
fn transform_square_to_sh() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("sq_sh.knotw");
    let r = shknot(&["transform", &catalog_file(dir.path(), "square"), "--to", "sh", "-o", out.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.err.contains("sticks 4 -> 4, edges 4 -> 4"), "{}", r.err);
    let p = parse_knotw(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(p.lattice(), Lattice::Sh);
    assert_eq!(p.to_string(), "x^1 y^1 x^-1 y^-1");
}

#[test]
fn transform_round_trip_of_cubic_trefoil() {
    let dir = TempDir::new().unwrap();
    let src = catalog_file(dir.path(), "trefoil_cubic12");
    let sh = dir.path().join("sh.knotw");
    let back = dir.path().join("back.knotw");
    assert_eq!(shknot(&["transform", &src, "--to", "sh", "-o", sh.to_str().unwrap()]).code, EXIT_OK);
    assert_eq!(
        shknot(&["transform", sh.to_str().unwrap(), "--to", "cubic", "-o", back.to_str().unwrap()]).code,
        EXIT_OK
    );
    let a = parse_knotw(&fs::read_to_string(&src).unwrap()).unwrap();
    let b = parse_knotw(&fs::read_to_string(&back).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn transform_z_sticks_need_rewrite() {
    let dir = TempDir::new().unwrap();
    let src = catalog_file(dir.path(), "trefoil_sh11");
    let r = shknot(&["transform", &src, "--to", "cubic"]);
    assert_eq!(r.code, EXIT_ERROR);
    assert!(r.err.contains("z-stick"), "{}", r.err);

    let r = shknot(&["transform", &src, "--to", "cubic", "--rewrite"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let p = parse_knotw(&r.out).unwrap();
    assert_eq!(p.lattice(), Lattice::Cubic);
    assert!(validate(&p).is_valid());
    assert_eq!(classify(&p).unwrap().tag, KnotTag::K3_1);
}

#[test]
fn reduce_corner_on_square() {
    let dir = TempDir::new().unwrap();
    let r = shknot(&["reduce", &catalog_file(dir.path(), "square_sh"), "--move", "corner"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("x^1 z^1 y^-1"), "{}", r.out);
    let trace: Value = serde_json::from_str(r.err.lines().next().unwrap()).unwrap();
    assert_eq!(trace["move"], "corner_to_z");
    assert_eq!(trace["sticks_delta"], -1);
}

#[test]
fn reduce_without_moves_exits_two() {
    let dir = TempDir::new().unwrap();
    let r = shknot(&["reduce", &catalog_file(dir.path(), "hexagon"), "--move", "corner", "--all"]);
    assert_eq!(r.code, EXIT_NO_MOVE);
    assert!(r.err.contains("no applicable move"));
}

#[test]
fn reduce_squeeze_cubic_trefoil() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("sq.knotw");
    let trace = dir.path().join("trace.jsonl");
    let r = shknot(&[
        "reduce",
        &catalog_file(dir.path(), "trefoil_cubic12"),
        "--move",
        "squeeze",
        "-o",
        out.to_str().unwrap(),
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let p = parse_knotw(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(p.lattice(), Lattice::Sh);
    assert!(p.len() <= 11);
    assert_eq!(classify(&p).unwrap().tag, KnotTag::K3_1);
    assert_eq!(fs::read_to_string(&trace).unwrap().lines().count(), 1);
}

#[test]
fn enumerate_short_sticks_is_all_unknots() {
    let r = shknot(&["enumerate", "--max-len", "1", "--expect-theorem"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["nontrivial_types"], serde_json::json!([]));
    assert!(v["counts"]["unknot"].as_u64().unwrap() > 0);
}

fn census_without_timing(dir: &Path) -> String {
    let mut v: Value = serde_json::from_str(&fs::read_to_string(dir.join("census.json")).unwrap()).unwrap();
    v.as_object_mut().unwrap().remove("timing");
    serde_json::to_string_pretty(&v).unwrap()
}

#[test]
fn enumerate_shards_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("one"), dir.path().join("eight"));
    for (d, n) in [(&a, "1"), (&b, "8")] {
        let r = shknot(&["enumerate", "--max-len", "2", "--shards", n, "--out", d.to_str().unwrap()]);
        assert_eq!(r.code, EXIT_OK, "{}", r.err);
    }
    assert_eq!(census_without_timing(&a), census_without_timing(&b));
    assert!(a.join("unknot_1.knotw").exists());
}

#[test]
fn enumerate_rejects_bad_census() {
    let r = shknot(&["enumerate", "--census", "4:2"]);
    assert_eq!(r.code, EXIT_ERROR);
    assert!(r.err.contains("nx:ny:nz"), "{}", r.err);
}

#[test]
fn bounds_output() {
    let r = shknot(&["bounds", "--e-cubic", "24"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.out.trim(), "e_sh ≥ 12.75 → 13");
    let r = shknot(&["bounds", "--s-cubic", "12"]);
    assert_eq!(r.out.trim(), "s_sh ≥ √57−3 → 5");
    let r = shknot(&["bounds"]);
    assert_eq!(r.code, EXIT_ERROR);
}

fn attr(svg: &str, name: &str) -> String {
    let start = svg.find(&format!("{name}=\"")).unwrap() + name.len() + 2;
    svg[start..].split('"').next().unwrap().to_string()
}

#[test]
fn render_square_and_trefoil() {
    let dir = TempDir::new().unwrap();
    let svg_path = dir.path().join("sq.svg");
    let r = shknot(&["render", &catalog_file(dir.path(), "square_sh"), "-o", svg_path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    let svg = fs::read_to_string(&svg_path).unwrap();
    assert_eq!(attr(&svg, "data-crossings"), "0");
    assert_eq!(svg.matches("<line ").count(), 4);

    for plane in ["xy", "tilt"] {
        let r = shknot(&[
            "render",
            &catalog_file(dir.path(), "trefoil_sh11"),
            "-o",
            svg_path.to_str().unwrap(),
            "--plane",
            plane,
        ]);
        assert_eq!(r.code, EXIT_OK);
        let svg = fs::read_to_string(&svg_path).unwrap();
        let crossings: usize = attr(&svg, "data-crossings").parse().unwrap();
        assert!(crossings >= 3);
        // each crossing splits one under stick once more
        assert_eq!(svg.matches("<line ").count(), 11 + crossings);
    }
}

#[test]
fn catalog_list_and_check() {
    let r = shknot(&["catalog", "list"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.out.lines().count(), catalog::entries().len());
    let r = shknot(&["catalog", "check"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(!r.out.contains("FAIL"));
    assert_eq!(shknot(&["catalog", "show", "nope"]).code, EXIT_ERROR);
}
