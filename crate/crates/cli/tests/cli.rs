use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_confalg"))
        .args(args)
        .env("CONFALG_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let o = run(&a);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (o.status.code().unwrap(), v)
}

#[test]
fn eval_examples() {
    let o = run(&["eval", "virasoro", "lprod(x, x)"]);
    assert_eq!(stdout(&o).trim(), "(D + 2*l)*x");
    assert_eq!(
        stdout(&run(&["eval", "weyl", "lprod(x, x)"])).trim(),
        "x^2 + l*x"
    );
    assert_eq!(
        stdout(&run(&["eval", "virasoro", "central(x, 0, 3, x)"])).trim(),
        "-3 * t^2 (x)"
    );
    assert_eq!(
        stdout(&run(&["eval", "L", "central(virasoro, x, 0, 3, x)"])).trim(),
        "-3 * t^2 (x)"
    );
    assert_eq!(
        stdout(&run(&["eval", "virasoro", "nprod(x, x, 1)"])).trim(),
        "2*x"
    );
    assert_eq!(
        stdout(&run(&["eval", "virasoro", "nprod(x, x, 0)"])).trim(),
        "D*x"
    );
    assert_eq!(
        stdout(&run(&["eval", "weyl", "act(x, D^2)"])).trim(),
        "D^3 + 2*l*D^2 + l^2*D"
    );
    let o = run(&["eval", "virasoro", "lprod(x, q)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("unknown basis symbol `q`"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn check_examples() {
    let (code, v) = json(&["check", "virasoro", "--axioms"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);

    let (code, v) = json(&["check", "ex3_2", "--units"]);
    assert_eq!(code, 1);
    assert_eq!(v["outputs"]["left_unit"], "one");
    assert!(v["outputs"]["right_unit"]
        .as_str()
        .unwrap()
        .starts_with("none"));

    let (code, _) = json(&["check", "curr_solv2", "--central-pbw", "1"]);
    assert_eq!(code, 0);
    let (code, v) = json(&["check", "virasoro", "--central-pbw", "x=2"]);
    assert_eq!(code, 1);
    assert_eq!(
        v["results"][0]["witnesses"][0]["location"],
        "central PBW (x, 0, 2, x)"
    );

    let (code, v) = json(&["check", "solv_xy", "--solvable"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["locality_bound"], "x=2,y=1");
    let (code, _) = json(&["check", "virasoro", "--solvable"]);
    assert_eq!(code, 1);
}

#[test]
fn build_examples() {
    let (code, v) = json(&["build-rep", "curr_m2", "--method", "adjoin-unit"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["module_rank"], 5);
    assert_eq!(v["outputs"]["faithful"], true);

    let (code, v) = json(&["build-rep", "solv_xy", "--method", "solvable", "--K", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["module_rank"], 4);
    assert_eq!(v["outputs"]["faithful"], true);

    let o = run(&[
        "build-rep",
        "virasoro",
        "--method",
        "central-pbw",
        "--N",
        "x=1",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(
        stderr(&o).contains("central PBW (x, 0, 1, x)"),
        "{}",
        stderr(&o)
    );

    let (code, v) = json(&[
        "build-rep",
        "curr_q",
        "--method",
        "adjoin-unit",
        "--Mprime",
        "0",
    ]);
    assert_eq!(code, 0);
    assert!(v["outputs"]["warning"]
        .as_str()
        .unwrap()
        .contains("not guaranteed"));
    assert_eq!(v["outputs"]["faithful"], false);

    let (code, v) = json(&["build-rep", "curr_sl2", "--method", "double"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["module_rank"], 4);
    let o = run(&["build-rep", "virasoro", "--method", "double"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn emitted_representations_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (obj, method, extra) in [
        ("curr_dual", "adjoin-unit", vec![]),
        ("solv_xy", "solvable", vec![]),
        ("curr_solv2", "central-pbw", vec!["--N", "a=3,b=2"]),
        ("curr_gl2", "double", vec![]),
    ] {
        let out = dir.path().join(format!("{obj}.json"));
        let mut args = vec![
            "build-rep",
            obj,
            "--method",
            method,
            "--out",
            out.to_str().unwrap(),
        ];
        args.extend(extra);
        let (code, v) = json(&args);
        assert_eq!(code, 0, "{obj}");
        let name = v["outputs"]["representation"].as_str().unwrap().to_string();
        let (code, back) = json(&["-f", out.to_str().unwrap(), "check", &name, "--axioms"]);
        assert_eq!(code, 0, "{obj}: {back}");
        // The module law on the reloaded file covers every basis pair again.
        assert_eq!(back["results"][0]["checked"], v["results"][0]["checked"]);
    }
}

#[test]
fn certificates_are_deterministic() {
    let f = data("solv.json");
    let args = [
        "-f",
        f.to_str().unwrap(),
        "build-rep",
        "xy",
        "--method",
        "solvable",
    ];
    let (_, mut a) = json(&args);
    let (_, mut b) = json(&args);
    a["timing_ms"] = 0.into();
    b["timing_ms"] = 0.into();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
    let (_, c) = json(&[
        "-f",
        f.to_str().unwrap(),
        "build-rep",
        "xy",
        "--method",
        "solvable",
        "--K",
        "2",
    ]);
    assert_ne!(a["inputs_digest"], c["inputs_digest"]);
}

#[test]
fn definition_files() {
    let f = data("solv.json");
    let f = f.to_str().unwrap();
    let (code, _) = json(&["-f", f, "check", "density", "--axioms"]);
    assert_eq!(code, 0);
    let (code, v) = json(&["-f", f, "check", "canonical", "--axioms"]);
    assert_eq!(code, 1);
    assert_eq!(
        v["results"][0]["witnesses"][0]["location"],
        "pairing compatibility (x, x, u)"
    );
    assert_eq!(
        stdout(&run(&["-f", f, "eval", "density", "act(x, u)"])).trim(),
        "(D + 2*l)*u"
    );
    assert_eq!(
        stdout(&run(&["-f", f, "eval", "xy", "lprod(x, y)"])).trim(),
        "l*y"
    );

    let r = data("ex3_4.json");
    let r = r.to_str().unwrap();
    let (code, _) = json(&["-f", r, "check", "right_quotient"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout(&run(&[
            "-f",
            r,
            "eval",
            "right_quotient",
            "act(D^2*v + v, e)"
        ]))
        .trim(),
        "(1 + l^2)*vbar"
    );
}

#[test]
fn input_errors_carry_locations() {
    let o = run(&[
        "-f",
        data("bad_poly.json").to_str().unwrap(),
        "check",
        "broken",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("algebras.broken.table[0]"),
        "{}",
        stderr(&o)
    );

    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(
        &p,
        "{\n  \"version\": 1,\n  \"algebras\": {\n    \"a\": [}\n}\n",
    )
    .unwrap();
    let o = run(&["-f", p.to_str().unwrap(), "check", "a"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));

    // Acting by the identity on D-torsion is not well defined.
    std::fs::write(
        &p,
        r#"{"version": 1,
            "modules": {"t": {"generators": [{"name": "w", "relation": "D"}]}},
            "representations": {"r": {"algebra": "curr_q", "module": "t", "action": [["e", "w", "w", "1"]]}}}"#,
    )
    .unwrap();
    let o = run(&["-f", p.to_str().unwrap(), "check", "r"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("representations.r"), "{}", stderr(&o));
    assert_eq!(run(&["check", "nosuch"]).status.code(), Some(2));
}

#[test]
fn growth_of_weyl() {
    let (code, v) = json(&["growth", "weyl", "-g", "x", "-n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["ranks"], serde_json::json!([1, 2, 3, 4, 5]));
    let (_, v) = json(&["growth", "solv_xy", "-g", "x", "-g", "y", "-n", "3"]);
    assert_eq!(v["outputs"]["ranks"], serde_json::json!([2, 2, 2]));
}

#[test]
fn ordinary_algebra_definitions() {
    let f = data("ordinary.json");
    let f = f.to_str().unwrap();
    // x²·d/dx on Q[x]/(x³) is the builtin diff_x3.
    for e in [
        "lprod(x, x)",
        "lprod(x, x2)",
        "lprod(one, x)",
        "nprod(one, x, 1)",
    ] {
        assert_eq!(
            stdout(&run(&["-f", f, "eval", "trunc", e])),
            stdout(&run(&["eval", "diff_x3", e])),
            "{e}"
        );
    }
    let (code, _) = json(&["-f", f, "check", "trunc", "--axioms"]);
    assert_eq!(code, 0);
    let o = run(&["-f", f, "check", "bad_derivation"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(
        stderr(&o).contains("algebras.bad_derivation.ordinary"),
        "{}",
        stderr(&o)
    );
    assert_eq!(
        stdout(&run(&["-f", f, "eval", "heis", "lprod(p, q)"])).trim(),
        "1/2*z"
    );
    let (code, _) = json(&["-f", f, "check", "heis", "--axioms"]);
    assert_eq!(code, 0);
}
