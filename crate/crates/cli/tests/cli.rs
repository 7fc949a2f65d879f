use std::process::{Command, Output};

fn bitab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bitab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bitab(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn kronecker_coefficient_point_value() {
    assert_eq!(
        stdout(&["g", "--lam", "4,3", "--mu", "4,3", "--nu", "3,2,2"]),
        "1\n"
    );
}

#[test]
fn reading_word_of_a_displayed_tableau() {
    let t = "[[[1,2],[2,1]],[[2,2],[2,2]],[[3,1]]]";
    assert_eq!(
        stdout(&["word", "--method", "w", "--shape", "2,2,1", "--tableau", t]),
        "22211\n"
    );
}

#[test]
fn tableau_from_file() {
    let dir = std::env::temp_dir().join(format!("bitab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.json");
    std::fs::write(&path, "[[[1,1],[2,1]]]").unwrap();
    let out = stdout(&["weights", "--in", path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(out, "{\"a\":[1,1],\"b\":[2]}\n");
}

#[test]
fn verify_reports_triple_count() {
    let out = stdout(&["verify-thm2", "--k", "3"]);
    assert_eq!(out.lines().next(), Some("lam,mu,nu,crystal,oracle"));
    assert_eq!(out.lines().last(), Some("OK k=3 triples=27"));
    assert_eq!(out.lines().count(), 29);
}

#[test]
fn d_agrees_across_methods() {
    for via in ["crystal", "characters", "schur-expansion"] {
        assert_eq!(
            stdout(&["d", "--lam", "2,1", "--mu", "2,1", "--nu", "2,1", "--via", via]),
            "2\n"
        );
    }
}

#[test]
fn insertion_commands() {
    let rows = |args: &[&str]| -> (serde_json::Value, serde_json::Value) {
        let v: serde_json::Value = serde_json::from_str(&stdout(args)).unwrap();
        (v["P"]["rows"].clone(), v["Q"]["rows"].clone())
    };
    assert_eq!(
        rows(&["rsk", "--tableau", "[[[1,2],[2,1]]]"]),
        (serde_json::json!([[1], [2]]), serde_json::json!([[1], [2]]))
    );
    assert_eq!(
        rows(&["brsk", "--tableau", "[[[1,2]],[[2,1]]]"]),
        (serde_json::json!([[1], [2]]), serde_json::json!([[1, 2]]))
    );
    let biword = r#"{"top":[1,2],"bottom":[2,1],"flavor":"lexicographic"}"#;
    assert_eq!(
        rows(&["rsk", "--biword", biword]),
        (serde_json::json!([[1], [2]]), serde_json::json!([[1], [2]]))
    );
    assert_eq!(
        stdout(&["jdt", "--left", "[[1,2]]", "--right", "[[1],[2]]"]),
        "[[1,1,2],[2]]\n"
    );
}

#[test]
fn crystal_and_skeleton_exports() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "crystal", "--shape", "2,1", "--n", "2", "--m", "2", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(json["vertices"].as_array().unwrap().len(), 20);

    let dot = stdout(&["skeleton", "--shape", "2,2"]);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("style=dashed").count(), 2);

    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["completions", "--shape", "2,2"])).unwrap();
    assert_eq!(json["completions"].as_array().unwrap().len(), 2);
}

#[test]
fn census_and_kronecker_tables_pass() {
    let out = stdout(&["census", "--shape", "3,1"]);
    // 24 completions, five highest-weight rows each.
    assert_eq!(out.lines().last(), Some("OK k=4 triples=120"));
    let out = stdout(&[
        "census",
        "--shape",
        "1,1,1",
        "--transport",
        "column",
        "--n",
        "3",
        "--m",
        "3",
    ]);
    assert!(out.lines().last().unwrap().starts_with("OK k=3"));
    let out = stdout(&["kron-tableaux", "--k", "4"]);
    assert_eq!(out.lines().next(), Some("lam,p,nu,count,g,regime"));
    assert!(out.lines().last().unwrap().starts_with("OK k=4"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["g", "--lam", "1,2", "--mu", "3", "--nu", "3"][..],
        &["g", "--lam", "3,x", "--mu", "3", "--nu", "3"],
        &["word", "--method", "w", "--tableau", "[[[2,1],[1,1]]]"],
        &["word", "--method", "w", "--tableau", "not json"],
        &[
            "word",
            "--method",
            "w",
            "--shape",
            "2",
            "--tableau",
            "[[[1,1]],[[2,1]]]",
        ],
        &[
            "enumerate",
            "--shape",
            "2",
            "--n",
            "1",
            "--m",
            "1",
            "--format",
            "dot",
        ],
        &["frobnicate"],
    ] {
        let out = bitab(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn cap_errors_name_the_budget() {
    let out = bitab(&[
        "crystal", "--shape", "3,2", "--n", "3", "--m", "3", "--cap", "10",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cap is 10"), "{err}");
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["crystal", "--shape", "2,1", "--n", "2", "--m", "2"][..],
        &["skeleton", "--shape", "3,1", "--format", "json"],
        &[
            "enumerate",
            "--shape",
            "2,2",
            "--n",
            "2",
            "--m",
            "2",
            "--format",
            "csv",
        ],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn json_round_trips_through_library_types() {
    use bitableau::insertion::TableauPair;
    use bitableau::Bitableau;

    let text = stdout(&["enumerate", "--shape", "2,1", "--n", "2", "--m", "2"]);
    let all: Vec<Bitableau> = serde_json::from_str(&text).unwrap();
    assert_eq!(all.len(), 20);
    assert_eq!(serde_json::to_string(&all).unwrap() + "\n", text);

    // Each enumerated tableau is accepted back as --tableau input.
    let one = serde_json::to_string(&all[7]).unwrap();
    let weights: serde_json::Value =
        serde_json::from_str(&stdout(&["weights", "--tableau", &one])).unwrap();
    assert_eq!(
        weights["a"],
        serde_json::to_value(all[7].a_weight()).unwrap()
    );

    let text = stdout(&["brsk", "--tableau", "[[[1,2]],[[2,1]]]"]);
    let pair: TableauPair = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&pair).unwrap() + "\n", text);
}
