use std::path::Path;
use std::process::{Command, Output};

fn curvecount(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvecount"))
        .args(args)
        .env("CURVECOUNT_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn invariants_reports() {
    let cache = tempfile::tempdir().unwrap();
    let banana = curvecount(&["invariants", "banana", "--no-cache"], cache.path());
    assert!(banana.status.success());
    assert!(stdout(&banana).contains("delta_a: 1\n"));

    let node = curvecount(&["invariants", "node", "--no-cache"], cache.path());
    assert!(stdout(&node).contains("perverse: 1 - q + q^2*L\n"));

    let triangle = curvecount(&["invariants", "triangle", "--format", "json", "--no-cache"], cache.path());
    let json: serde_json::Value = serde_json::from_str(&stdout(&triangle)).unwrap();
    assert_eq!(json["n"], serde_json::json!([3, 1]));
    assert_eq!(json["numeric"]["affine_rank"], 1);
}

#[test]
fn verify_exit_codes() {
    let cache = tempfile::tempdir().unwrap();
    let all = curvecount(&["verify", "banana", "--check", "all"], cache.path());
    assert_eq!(all.status.code(), Some(0), "{}", stdout(&all));

    let random = curvecount(&["verify", "--random", "100", "--seed", "7", "--check", "subsum"], cache.path());
    assert_eq!(random.status.code(), Some(0));
    assert!(stdout(&random).ends_with("0 failed, 0 skipped\n"));

    let hilb = curvecount(&["verify", "pair-of-lines", "--check", "nodalhilb"], cache.path());
    assert_eq!(hilb.status.code(), Some(0));
    assert!(stdout(&hilb).contains("lhs = rhs = (q*L - q^2*L + q^3*L^2)/((1-q)^2*(1-q*L)^2)"));

    let unknown = curvecount(&["verify", "banana", "--check", "nodalhilb,bogus"], cache.path());
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("unknown check `bogus`"));

    let bad_flag = curvecount(&["verify", "--random", "many"], cache.path());
    assert_eq!(bad_flag.status.code(), Some(2));

    let guard = curvecount(&["verify", "--max-edges", "25"], cache.path());
    assert_eq!(guard.status.code(), Some(2));
}

#[test]
fn verify_json_is_deterministic() {
    let cache = tempfile::tempdir().unwrap();
    let args = ["verify", "triangle", "theta", "--random", "5", "--seed", "3", "--check", "severi,multidegrees", "--format", "json"];
    let a = stdout(&curvecount(&args, cache.path()));
    let b = stdout(&curvecount(&args, cache.path()));
    assert_eq!(a, b);
    let results: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(results.as_array().unwrap().len(), 14);
}

#[test]
fn parse_errors_carry_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"vertices\": [\n  {\"id\": \"a\", \"genus\": 0},\n],\n\"edges\": []}").unwrap();
    let out = curvecount(&["invariants", path.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3 column 1"), "{}", stderr(&out));

    let missing = curvecount(&["invariants", "nowhere.json"], dir.path());
    assert_eq!(missing.status.code(), Some(2));
    let unknown = curvecount(&["invariants", "no-such-curve"], dir.path());
    assert!(stderr(&unknown).contains("unknown catalog graph"));
}

#[test]
fn export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let exported = stdout(&curvecount(&["export", "theta"], dir.path()));
    let path = dir.path().join("theta.json");
    std::fs::write(&path, &exported).unwrap();
    let again = stdout(&curvecount(&["export", path.to_str().unwrap()], dir.path()));
    assert_eq!(exported, again);

    let mine = dir.path().join("mine.json");
    std::fs::write(&mine, &exported).unwrap();
    let listed = stdout(&curvecount(&["catalog", mine.to_str().unwrap()], dir.path()));
    assert!(listed.lines().any(|l| l.starts_with("mine ") && l.contains("3 edges")), "{listed}");

    // A file named like a built-in clashes with it.
    let clash = curvecount(&["catalog", path.to_str().unwrap()], dir.path());
    assert_eq!(clash.status.code(), Some(2));
}

#[test]
fn cache_hits_match_recomputation() {
    let cache = tempfile::tempdir().unwrap();
    let fresh = stdout(&curvecount(&["invariants", "theta", "--no-cache"], cache.path()));
    assert_eq!(std::fs::read_dir(cache.path()).unwrap().count(), 0);

    let first = stdout(&curvecount(&["invariants", "theta"], cache.path()));
    let entries: Vec<_> = std::fs::read_dir(cache.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(entries.len(), 1);
    assert_eq!(std::fs::read_to_string(&entries[0]).unwrap(), fresh);
    let second = stdout(&curvecount(&["invariants", "theta"], cache.path()));
    assert_eq!(first, fresh);
    assert_eq!(second, fresh);

    // A planted entry is served, so the second run really read the cache.
    std::fs::write(&entries[0], "planted\n").unwrap();
    assert_eq!(stdout(&curvecount(&["invariants", "theta"], cache.path())), "planted\n");
    assert_eq!(stdout(&curvecount(&["invariants", "theta", "--no-cache"], cache.path())), fresh);
}
