use std::process::{Command, Output};

fn goldman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_goldman"))
        .args(args)
        .env_remove("GOLDMAN_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = goldman(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_owned()
}

fn code(args: &[&str]) -> i32 {
    goldman(args).status.code().unwrap()
}

#[test]
fn bracket_json() {
    assert_eq!(
        stdout(&["bracket", "ab", "aab", "--format", "json"]),
        r#"{"terms":[{"word":"aabab","coeff":-1}]}"#
    );
    assert_eq!(stdout(&["bracket", "aab", "A"]), "1 ab");
    assert_eq!(stdout(&["bracket", "aabb", "aabb", "--q", "3"]), "-3 aababbaabbaabbab\n3 aababbabaabbaabb");
}

#[test]
fn bracket_is_antisymmetric() {
    let xy = stdout(&["bracket", "ab", "aab"]);
    let yx = stdout(&["bracket", "aab", "ab"]);
    assert_eq!(xy, "-1 aabab");
    assert_eq!(yx, "1 aabab");
}

#[test]
fn self_intersection_and_simplicity() {
    assert_eq!(stdout(&["selfint", "aabb"]), "1");
    assert_eq!(stdout(&["simple", "ab"]), "true");
    assert_eq!(stdout(&["simple", "aabb"]), "false");
    assert_eq!(stdout(&["selfint", "ab", "--format", "json"]), r#"{"self_intersection":0}"#);
}

#[test]
fn reduce_and_canon() {
    assert_eq!(stdout(&["reduce", "abBa"]), "aa");
    assert_eq!(stdout(&["reduce", "aAbB"]), "1");
    assert_eq!(stdout(&["canon", "bbAaa"]), "abb");
    assert_eq!(stdout(&["canon", "ba", "--format", "json"]), r#"{"word":"ab"}"#);
}

#[test]
fn canon_is_a_fixed_point() {
    for w in ["bbAaa", "BaAbab", "a1.a30.A30.a2", "cab"] {
        let once = stdout(&["canon", w]);
        assert_eq!(stdout(&["canon", &once]), once);
    }
}

#[test]
fn classes_json() {
    assert_eq!(
        stdout(&["classes", "aab", "A", "--format", "json"]),
        r#"{"classes":[{"members":[[0,0],[1,0],[2,0]],"shape":"AntidiagonalChain","negative_length":2,"extremal":[2,0],"sign":1}]}"#
    );
}

#[test]
fn cobracket_text() {
    assert_eq!(stdout(&["cobracket", "aabb"]), "0");
    assert_eq!(
        stdout(&["cobracket", "aabbaabb"]),
        "2 aababb ab\n-2 aabbab ab\n-2 ab aababb\n2 ab aabbab"
    );
}

#[test]
fn counting() {
    assert_eq!(stdout(&["counting", "aabb", "--p", "1", "--q", "3"]), "M = 6, 2pq·s = 6: pass");
    assert_eq!(
        stdout(&["counting", "aabb", "--p", "3", "--q", "4", "--format", "json"]),
        r#"{"manhattan":24,"expected":24,"pass":true}"#
    );
}

#[test]
fn usage_errors_exit_2_and_name_the_token() {
    let out = goldman(&["canon", "ab!"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains('!'), "{err}");

    let out = goldman(&["--alphabet", "2", "selfint", "a1.a3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("a1.a3"));

    assert_eq!(code(&["counting", "aabb", "--p", "1", "--q", "2"]), 2);
    assert_eq!(code(&["counting", "abab", "--p", "1", "--q", "3"]), 2);
    assert_eq!(code(&["classes", "aA", "b"]), 2);
    assert_eq!(code(&["verify", "--checks", "tabel1"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn verify_is_deterministic_across_job_counts() {
    let base = [
        "verify", "--max-len", "4", "--pair-len", "3", "--class-len", "3", "--format", "json",
    ];
    let one = stdout(&[&base[..], &["--jobs", "1"]].concat());
    let many = stdout(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(one, many);
    assert!(one.starts_with(r#"{"schema":"goldman/1","checks":["#), "{one}");
    assert!(!one.contains(r#""failed":1"#));
}

#[test]
fn verify_reads_jobs_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_goldman"))
        .args(["verify", "--max-len", "3", "--checks", "counting"])
        .env("GOLDMAN_JOBS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("counting.manhattan"));
}
