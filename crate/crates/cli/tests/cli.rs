use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::{env, fs};

use cocone::{Arrow, Cospan, Direction, FinFn, Wscc};

static COUNTER: AtomicUsize = AtomicUsize::new(0);

fn file(contents: &str) -> PathBuf {
    let dir = env::temp_dir().join(format!("cocone-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(format!("in{}", COUNTER.fetch_add(1, Ordering::SeqCst)));
    fs::write(&p, contents).unwrap();
    p
}

fn cocone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cocone")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = cocone(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

const PAIR: &str = r#"{"vertices":[{"name":"A","size":2},{"name":"B","size":3}],
    "edges":[{"name":"f","src":"A","tgt":"B","map":[0,1]},{"name":"g","src":"A","tgt":"B","map":[1,2]}],
    "left":["A"],"right":["B"]}"#;

#[test]
fn colim_of_a_parallel_pair_merges_classes() {
    let p = file(PAIR);
    let out = ok(&["colim", p.to_str().unwrap()]);
    assert_eq!(out, "cospan: 2 -[0,0]-> 1 <-[0,0,0]- 3\napex: 1\n");
    let spans = ok(&["colim", p.to_str().unwrap(), "--mode", "span"]);
    assert!(spans.starts_with(&out));
    assert!(spans.ends_with("apex: 0\n"), "{spans}");
}

#[test]
fn empty_and_single_edge_diagrams() {
    let p = file(r#"{"vertices":[]}"#);
    assert_eq!(ok(&["colim", p.to_str().unwrap()]), "cospan: 0 -[]-> 0 <-[]- 0\napex: 0\n");
    let p = file(
        r#"{"vertices":[{"name":"A","size":3},{"name":"B","size":2}],
            "edges":[{"name":"f","src":"A","tgt":"B","map":[1,1,0]}],"left":["A"],"right":["B"]}"#,
    );
    let lift = Cospan::lift(&FinFn::new(vec![1, 1, 0], 2).unwrap(), Direction::Forward).canonical();
    assert_eq!(ok(&["colim", p.to_str().unwrap()]), format!("cospan: {lift}\napex: 2\n"));
}

#[test]
fn json_output_reparses() {
    let p = file(PAIR);
    let out = ok(&["colim", p.to_str().unwrap(), "--mode", "span", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let c: Arrow = serde_json::from_value(v["cospan"].clone()).unwrap();
    assert_eq!(c.apex(), 1);
    let s: Arrow = serde_json::from_value(v["span"].clone()).unwrap();
    assert_eq!(s.apex(), 0);
    let out = ok(&["limit", p.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let l: Arrow = serde_json::from_value(v["span"].clone()).unwrap();
    assert!(l.iso_eq(&s));
}

#[test]
fn compile_then_eval_matches_colim() {
    let p = file(PAIR);
    let program = ok(&["compile", p.to_str().unwrap()]);
    assert!(program.contains("comult(A+B)"), "{program}");
    let q = file(&program);
    let colim = ok(&["colim", p.to_str().unwrap(), "--format", "json"]);
    let eval = ok(&["eval", q.to_str().unwrap(), "--format", "json"]);
    let a: serde_json::Value = serde_json::from_str(&colim).unwrap();
    let b: serde_json::Value = serde_json::from_str(&eval).unwrap();
    let a: Arrow = serde_json::from_value(a["cospan"].clone()).unwrap();
    let b: Arrow = serde_json::from_value(b["cospan"].clone()).unwrap();
    assert!(a.iso_eq(&b));
}

#[test]
fn separability_examples() {
    let split = file("object A = 2\nmult(A) ; comult(A)\n");
    let id = file("object A = 2\nid(A+A)\n");
    assert_ne!(ok(&["eval", split.to_str().unwrap()]), ok(&["eval", id.to_str().unwrap()]));
    let merge = file("object A = 2\ncomult(A) ; mult(A)\n");
    assert_eq!(ok(&["eval", merge.to_str().unwrap()]), "cospan: 2 -[0,1]-> 2 <-[0,1]- 2\napex: 2\n");
}

#[test]
fn kleene_tables() {
    let p = file(
        r#"{"alphabet":["a","b"],"states":["q0","q1","q2"],
            "edges":[{"src":"q0","label":"a","tgt":"q0"},{"src":"q0","label":"b","tgt":"q1"}],
            "initial":["q0"],"final":["q1","q2"]}"#,
    );
    assert_eq!(ok(&["kleene", p.to_str().unwrap()]), "q0 -> q1 : ((a)*.b)\nq0 -> q2 : 0\n");
}

#[test]
fn check_reports() {
    let out = ok(&["check", "separable", "--sizes", "3"]);
    assert!(out.contains("failed: 0"), "{out}");
    let out = ok(&["check", "kleene", "--cases", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ok"], true);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| cocone(args).status.code();
    let broken = file("{\"vertices\": [");
    assert_eq!(code(&["colim", broken.to_str().unwrap()]), Some(2));
    assert_eq!(code(&["colim", "/nonexistent/file.json"]), Some(2));
    assert_eq!(code(&["check", "nonsense"]), Some(2));
    assert_eq!(code(&["check", "feedback", "--cases", "0"]), Some(2));
    assert_eq!(code(&["limit", "x", "--mode", "span"]), Some(2));

    let typo = file("object A = 2\nmult(Q)\n");
    let o = cocone(&["eval", typo.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 6"));

    let mismatch = file("object A = 2\nobject B = 1\nmult(A) ; id(B)\n");
    let o = cocone(&["eval", mismatch.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3, column 9"));

    let bad_map = file(r#"{"vertices":[{"name":"A","size":1}],"edges":[{"name":"f","src":"A","tgt":"A","map":[4]}]}"#);
    assert_eq!(code(&["colim", bad_map.to_str().unwrap()]), Some(3));

    let bad_letter = file(r#"{"alphabet":["a"],"states":["q"],"edges":[{"src":"q","label":"z","tgt":"q"}]}"#);
    assert_eq!(code(&["kleene", bad_letter.to_str().unwrap()]), Some(3));
}
