use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_betaexp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn expand_examples() {
    for (flag, input, word) in [
        ("--poly", "x^2-x-1", "11"),
        ("--family", "Chi", "11(10)^w"),
        ("--family", "PhiR(2)", "1101"),
        ("--family", "ChiA+(1)", "1001001"),
    ] {
        let o = run(&["expand", flag, input]);
        assert_eq!(o.status.code(), Some(0), "{input}");
        assert!(stdout(&o).lines().next().unwrap() == format!("word: {word}"), "{input}: {}", stdout(&o));
    }
    let o = run(&["expand", "--family", "ChiA+(1)"]);
    assert!(stdout(&o).contains("pseudo co-factor: x^2+1"));
}

#[test]
fn expand_input_errors_exit_2() {
    for args in [
        &["expand", "--poly", "x^2+"][..],
        &["expand", "--poly", "x-3"],
        &["expand", "--poly", "x^2+1"],
        &["expand", "--family", "PhiA-(1,1)"],
        &["expand", "--family", "Nope(1)"],
        &["expand", "--poly", "x^3-2", "--max-steps", "50"],
        &["expand"],
        &["bogus"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "--families", "all", "--r", "1..3", "--n", "1..8", "--checks", "expansion,parry,identities"]);
    // PhiC+(1,1) and PhiC+(2,2) have table words that are not expansions
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("PhiC+(1,1)"));
    let o = run(&["verify", "--families", "PhiB-,PsiB", "--r", "1..4", "--n", "1..20", "--checks", "expansion,parry"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "--families", "PhiA+", "--r", "5", "--n", "2", "--checks", "identities"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 instances, 0 failed"));
    for args in [
        &["verify", "--r", "3..1"][..],
        &["verify", "--families", "Chi+"],
        &["verify", "--checks", "speed"],
        &["verify", "--n", "x..y"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn boyd_sweep_on_chi_b_minus() {
    let o = run(&["verify", "--families", "ChiB-", "--n", "4..30", "--checks", "boyd"]);
    let out = stdout(&o);
    // n = 5 has a cyclotomic co-factor, contrary to the claim
    assert_eq!(o.status.code(), Some(1), "{out}");
    let failing: Vec<&str> = out.lines().filter(|l| l.starts_with("ChiB-") && !l.starts_with(' ')).collect();
    assert!(out.contains("ChiB-(5) OK 1111001111000001\n  FAIL boyd"), "{out}");
    assert!(failing.iter().all(|l| !l.contains("FAIL")));
}

#[test]
fn jsonl_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    for p in [&a, &b] {
        let o = run(&["verify", "--families", "PsiB+,Chi", "--r", "1..2", "--n", "1..3", "--jsonl", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(
        lines[0],
        r#"{"family":"Chi","r":null,"n":null,"status":"OK","word":"11(10)^w","companion":"coeffs=1,0,-2,-1,1","pseudo_cofactor":"1","true_cofactor_cyclotomic":true,"true_cofactor_reciprocal":true,"parry":true,"frg":false,"engine_match":true,"ms":null}"#
    );
    assert!(lines[1].starts_with(r#"{"family":"PsiB+","r":1,"n":1,"status":"NO_ROOT","word":null,"#), "{}", lines[1]);
}

#[test]
fn render_is_deterministic_and_sized() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.ppm");
    let b = dir.path().join("b.ppm");
    for p in [&a, &b] {
        let o = run(&["render", "--family", "PsiR", "--n", "1..10", "--width", "20", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let header = b"P6\n20 10\n255\n";
    assert!(bytes.starts_with(header));
    assert_eq!(bytes.len(), header.len() + 20 * 10 * 3);
    // row n = 2 is the word 111 followed by zeros
    let row = &bytes[header.len() + 20 * 3..header.len() + 40 * 3];
    assert_eq!(&row[..12], &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 255, 0]);
}

#[test]
fn render_width_one_is_all_black() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("w1.ppm");
    let o = run(&["render", "--family", "PhiB-(3)", "--n", "3..12", "--width", "1", "--out", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let bytes = std::fs::read(&p).unwrap();
    let header = b"P6\n1 10\n255\n";
    assert!(bytes[header.len()..].iter().all(|&b| b == 0));
}

#[test]
fn render_errors_exit_2() {
    for args in [
        &["render", "--family", "PhiB-(3,4)", "--out", "/tmp/x.ppm"][..],
        &["render", "--family", "PsiR", "--n", "1..3", "--width", "0", "--out", "/tmp/x.ppm"],
        &["render", "--family", "PsiR", "--n", "1..3", "--out", "/nonexistent/dir/x.ppm"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn families_lists_every_kind() {
    let o = run(&["families"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for k in ["PhiR", "PsiR", "Chi", "PhiA", "PhiB", "PhiC", "PsiA", "PsiB", "ChiA", "ChiB"] {
        assert!(out.contains(k), "{k}");
    }
}
