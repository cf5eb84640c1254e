use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn pgsolve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgsolve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn generated(dir: &TempDir, name: &str, seed: u64) -> PathBuf {
    let file = dir.path().join(name);
    let seed = seed.to_string();
    let out = pgsolve(&[
        "gen",
        "--kind",
        "random",
        "-n",
        "7",
        "-d",
        "4",
        "--seed",
        &seed,
        "-o",
        path(&file),
    ]);
    assert!(out.status.success(), "{out:?}");
    file
}

#[test]
fn solve_prints_the_winning_sets() {
    let dir = TempDir::new().unwrap();
    let game = dir.path().join("loop.pg");
    fs::write(&game, "parity 0;\n0 0 0 0;\n").unwrap();
    let out = pgsolve(&["solve", path(&game)]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("w_even: 0\n"));

    let out = pgsolve(&["solve", path(&game), "--json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["w_even"], serde_json::json!([0]));
    assert_eq!(json["solver"], "mz");
}

#[test]
fn every_solver_configuration_agrees() {
    let dir = TempDir::new().unwrap();
    let game = generated(&dir, "g.pg", 5);
    let reference = stdout(&pgsolve(&["solve", path(&game)]));
    let w_even = reference.lines().next().unwrap().to_string();
    let configs: &[&[&str]] = &[
        &["--solver", "mz-enhanced"],
        &["--solver", "universal", "--tree", "complete"],
        &[
            "--solver",
            "universal",
            "--tree",
            "parys",
            "--rule",
            "parys-blocks",
        ],
        &[
            "--solver",
            "universal",
            "--tree",
            "succinct",
            "--rule",
            "empty-set",
        ],
        &["--solver", "universal", "--symbolic", "per-frame"],
        &["--solver", "universal", "--symbolic", "succinct"],
    ];
    for extra in configs {
        let mut args = vec!["solve", path(&game)];
        args.extend_from_slice(extra);
        let out = pgsolve(&args);
        assert!(out.status.success(), "{extra:?}: {out:?}");
        assert_eq!(stdout(&out).lines().next().unwrap(), w_even, "{extra:?}");
    }
}

#[test]
fn explicit_trees_are_read_from_a_file() {
    let dir = TempDir::new().unwrap();
    let game = generated(&dir, "g.pg", 2);
    let tree = dir.path().join("tree.txt");
    let dump = pgsolve(&["trees", "--family", "s", "-n", "7", "-H", "2", "--dump"]);
    assert!(dump.status.success());
    fs::write(&tree, dump.stdout).unwrap();
    let spec = format!("explicit:{}", path(&tree));
    let out = pgsolve(&[
        "solve",
        path(&game),
        "--solver",
        "universal",
        "--tree",
        &spec,
    ]);
    assert!(out.status.success(), "{out:?}");
    let reference = stdout(&pgsolve(&["solve", path(&game)]));
    assert_eq!(stdout(&out).lines().next(), reference.lines().next());
}

#[test]
fn verify_accepts_and_rejects_witnesses() {
    let dir = TempDir::new().unwrap();
    let game = generated(&dir, "g.pg", 11);
    let witness = dir.path().join("w.json");
    let out = pgsolve(&[
        "solve",
        path(&game),
        "--solver",
        "mz-enhanced",
        "-o",
        path(&witness),
    ]);
    assert!(out.status.success());
    let out = pgsolve(&["verify", path(&game), "--witness", path(&witness)]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    let mut json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&witness).unwrap()).unwrap();
    let w_even = json["w_even"].clone();
    json["w_even"] = json["w_odd"].clone();
    json["w_odd"] = w_even;
    let tampered = dir.path().join("bad.json");
    fs::write(&tampered, serde_json::to_string(&json).unwrap()).unwrap();
    let out = pgsolve(&["verify", path(&game), "--witness", path(&tampered)]);
    assert_eq!(out.status.code(), Some(1));

    json["schema_version"] = 7.into();
    fs::write(&tampered, serde_json::to_string(&json).unwrap()).unwrap();
    let out = pgsolve(&["verify", path(&game), "--witness", path(&tampered)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generated_games_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = generated(&dir, "a.pg", 3);
    let b = generated(&dir, "b.pg", 3);
    assert_eq!(fs::read(a).unwrap(), fs::read(b).unwrap());
    for kind in [["--kind", "cycle"], ["--kind", "ladder"]] {
        let file = dir.path().join("k.pg");
        let mut args = vec!["gen"];
        args.extend_from_slice(&kind);
        args.extend_from_slice(&["-o", path(&file)]);
        assert!(pgsolve(&args).status.success(), "{kind:?}");
        assert!(pgsolve(&["solve", path(&file)]).status.success());
    }
}

#[test]
fn tree_statistics() {
    let out = pgsolve(&["trees", "--family", "p", "-n", "2", "-H", "2", "--stats"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("height=2\n"), "{text}");
    assert!(text.contains("leaves=5\n"), "{text}");

    let out = pgsolve(&["trees", "--family", "c", "-n", "2", "-H", "2", "--dump"]);
    assert_eq!(stdout(&out).trim(), "[[[][]][[][]]]");

    let out = pgsolve(&["trees", "--family", "c", "-n", "50", "-H", "10", "--dump"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_lists_every_game() {
    let dir = TempDir::new().unwrap();
    generated(&dir, "one.pg", 1);
    generated(&dir, "two.gm", 2);
    fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let out = pgsolve(&[
        "bench",
        "--suite",
        path(dir.path()),
        "--solver",
        "universal",
        "--symbolic",
        "succinct",
        "--json",
    ]);
    assert!(out.status.success(), "{out:?}");
    let records: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let records = records.as_array().unwrap();
    assert_eq!(records.len(), 2);
    assert!(records.iter().all(|r| r["peak_live_variables"].is_u64()));
}

#[test]
fn usage_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let game = generated(&dir, "g.pg", 0);
    let bad = dir.path().join("bad.pg");
    fs::write(&bad, "parity 1;\n0 0 0 7;\n").unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "solve",
            path(&game),
            "--solver",
            "mz",
            "--rule",
            "empty-set",
        ],
        vec!["solve", path(&game), "--tree", "bushy"],
        vec![
            "solve",
            path(&game),
            "--solver",
            "universal",
            "--rule",
            "parys-blocks",
        ],
        vec!["solve", path(&bad)],
        vec!["solve", "/nonexistent/game.pg"],
        vec!["frobnicate"],
    ];
    for args in cases {
        let out = pgsolve(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
