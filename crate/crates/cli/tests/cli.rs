use std::fs;
use std::process::{Command, Output};

use proptest::prelude::*;
use tempfile::TempDir;
use weightmatch::genmodel::gen_weighted;
use weightmatch_cli::format::{parse_weighted, serialize_weighted};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weightmatch"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().unwrap())
    }

    fn put(&self, name: &str, body: &str) -> String {
        let p = self.0.path().join(name);
        fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_owned()
    }
}

#[test]
fn wpm_example_prints_one() {
    let f = Files::new();
    let x = f.put("x", "#alphabet ACGT\nA [C:0.6,G:0.4] T\n");
    let y = f.put("y", "#alphabet ACGT\nGACTA\n");
    for sub in [&["wpm"][..], &["oracle", "wpm"][..]] {
        let mut args = sub.to_vec();
        args.extend(["--pattern", &x, "--text", &y, "--z", "2"]);
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "1\n");
    }
}

#[test]
fn overlapping_hits_are_reported_once() {
    let f = Files::new();
    let x = f.put("x", "#alphabet AC\n[A:0.5,C:0.5] AAA\n");
    let y = f.put("y", "#alphabet AC\nCAAAA\n");
    let o = run(&["wpm", "--pattern", &x, "--text", &y, "--z", "2"]);
    assert_eq!(stdout(&o), "0\n1\n");
    let o = run(&["wpm", "--pattern", &x, "--text", &y, "--z", "1.9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn wtm_example() {
    let f = Files::new();
    let x = f.put("x", "#alphabet ACGT\nACT\n");
    let y = f.put("y", "#alphabet ACGT\nG A [C:0.6,G:0.4] T A\n");
    let o = run(&["wtm", "--pattern", &x, "--text", &y, "--z", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
    let o = run(&["wtm", "--pattern", &x, "--text", &y, "--z", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn stats_go_to_stderr() {
    let f = Files::new();
    let x = f.put("x", "#alphabet ACGT\nA [C:0.6,G:0.4] T\n");
    let y = f.put("y", "#alphabet ACGT\nGACTA\n");
    let o = run(&["wpm", "--pattern", &x, "--text", &y, "--z", "2", "--stats"]);
    assert_eq!(stdout(&o), "1\n");
    let err = String::from_utf8(o.stderr).unwrap();
    for key in [
        "chars_inspected=",
        "candidates=",
        "full_verifications=",
        "gate_satisfied=",
        "used_fallback=false",
    ] {
        assert!(
            err.lines().any(|l| l.starts_with(key)),
            "{key} missing in {err}"
        );
    }
}

#[test]
fn no_matches_is_success() {
    let f = Files::new();
    let x = f.put("x", "#alphabet ACGT\nTTT\n");
    let y = f.put("y", "#alphabet ACGT\nGACTA\n");
    let o = run(&["wpm", "--pattern", &x, "--text", &y, "--z", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn exit_codes() {
    let f = Files::new();
    let good = f.put("good", "#alphabet ACGT\nACG\n");
    let text = f.put("text", "#alphabet ACGT\nACGTACGT\n");
    let other = f.put("other", "#alphabet AC\nACAC\n");
    let bad_sum = f.put("bad", "#alphabet ACGT\n[A:0.5,C:0.6]\n");
    let unknown = f.put("unknown", "#alphabet ACGT\nAXG\n");
    let empty = f.put("empty", "");
    let missing = f.0.path().join("missing").to_str().unwrap().to_owned();

    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(
        code(&["wpm", "--pattern", &bad_sum, "--text", &text, "--z", "2"]),
        Some(3)
    );
    assert_eq!(
        code(&["wpm", "--pattern", &unknown, "--text", &text, "--z", "2"]),
        Some(3)
    );
    assert_eq!(
        code(&["wtm", "--pattern", &good, "--text", &empty, "--z", "2"]),
        Some(3)
    );
    assert_eq!(
        code(&["wpm", "--pattern", &missing, "--text", &text, "--z", "2"]),
        Some(2)
    );
    assert_eq!(
        code(&["wpm", "--pattern", &good, "--text", &other, "--z", "2"]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "oracle",
            "wtm",
            "--pattern",
            &good,
            "--text",
            &other,
            "--z",
            "2"
        ]),
        Some(2)
    );
    assert_eq!(code(&["wpm", "--pattern", &good, "--text", &text]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(
        code(&["gen", "solid", "--n", "5", "--sigma", "1", "--seed", "0"]),
        Some(2)
    );
    assert_eq!(code(&["bench", "--suite", "lcp", "--trials", "0"]), Some(2));
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "solid", "--n", "10", "--sigma", "4", "--seed", "7"]);
    let b = run(&["gen", "solid", "--n", "10", "--sigma", "4", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("#alphabet ACGT\n"));

    let args = [
        "gen",
        "weighted",
        "--n",
        "50",
        "--sigma",
        "20",
        "--seed",
        "3",
        "--solid-bias",
        "0.5",
    ];
    let a = run(&args);
    assert_eq!(a.stdout, run(&args).stdout);
    assert_eq!(parse_weighted(stdout(&a)).unwrap().len(), 50);
    assert_ne!(
        a.stdout,
        run(&["gen", "weighted", "--n", "50", "--sigma", "20", "--seed", "4"]).stdout
    );
}

#[test]
fn generated_files_feed_back_into_search() {
    let f = Files::new();
    let gen = |args: &[&str], name: &str| f.put(name, stdout(&run(args)));
    let x = gen(
        &[
            "gen",
            "weighted",
            "--n",
            "12",
            "--sigma",
            "4",
            "--seed",
            "1",
            "--solid-bias",
            "0.9",
        ],
        "x",
    );
    let y = gen(
        &["gen", "solid", "--n", "3000", "--sigma", "4", "--seed", "2"],
        "y",
    );
    let a = run(&[
        "wpm",
        "--pattern",
        &x,
        "--text",
        &y,
        "--z",
        "8",
        "--threads",
        "4",
    ]);
    let b = run(&["oracle", "wpm", "--pattern", &x, "--text", &y, "--z", "8"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bench_csv_has_header_and_rows() {
    let o = run(&[
        "bench",
        "--suite",
        "sublinearity",
        "--n",
        "20000",
        "--seeds",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    let width = lines.next().unwrap().split(',').count();
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.split(',').count() == width));
    assert!(!text.contains('\r'));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialized_files_round_trip(n in 1usize..200, sigma in 2usize..40, seed: u64, bias in 0.0f64..1.0) {
        let w = gen_weighted(n, sigma, seed, bias).unwrap();
        let text = serialize_weighted(&w);
        let back = parse_weighted(&text).unwrap();
        prop_assert_eq!(back.alphabet(), w.alphabet());
        prop_assert_eq!(back.len(), w.len());
        for (a, b) in w.positions().zip(back.positions()) {
            prop_assert_eq!(a.letters(), b.letters());
            for (p, q) in a.probs().iter().zip(b.probs()) {
                prop_assert!((p - q).abs() <= 1e-9);
            }
        }
    }
}
