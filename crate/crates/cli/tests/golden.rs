use std::path::PathBuf;
use std::process::{Command, Output};

fn lkrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lkrep"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("run lkrep")
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

// Numbers are compared with a relative tolerance; roundoff-level values such
// as residuals are treated as equal when both are tiny.
fn same_token(a: &str, b: &str) -> bool {
    if a == b {
        return true;
    }
    match (a.parse::<f64>(), b.parse::<f64>()) {
        (Ok(x), Ok(y)) => {
            let scale = x.abs().max(y.abs()).max(1.0);
            (x - y).abs() <= 1e-9 * scale || (x.abs() < 1e-12 && y.abs() < 1e-12)
        }
        _ => false,
    }
}

fn tokens(s: &str) -> Vec<&str> {
    s.split(|c: char| c.is_whitespace() || ",[]{}():\"^".contains(c))
        .filter(|t| !t.is_empty())
        .collect()
}

fn check_golden(name: &str, args: &[&str]) {
    let out = lkrep(args);
    assert!(
        out.status.success(),
        "lkrep {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let actual = String::from_utf8(out.stdout).unwrap();
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing {}; rerun with UPDATE_GOLDEN=1", path.display()));
    let (a, e) = (tokens(&actual), tokens(&expected));
    assert_eq!(a.len(), e.len(), "token count differs for {name}:\n{actual}");
    for (x, y) in a.iter().zip(&e) {
        assert!(same_token(x, y), "{name}: `{x}` vs `{y}`\n{actual}");
    }
}

#[test]
fn rep_dump_exact() {
    check_golden("rep_dump_lk.json", &["rep", "dump", "--kind", "lk", "--n", "3", "--word", "1 -2"]);
}

#[test]
fn rep_dump_numeric() {
    check_golden(
        "rep_dump_burau_numeric.json",
        &["rep", "dump", "--kind", "burau", "--n", "3", "--word", "1 2", "--q", "exp:0.5", "--t", "-exp:0.1"],
    );
}

#[test]
fn rep_check_relations() {
    check_golden("rep_check_relations.txt", &["rep", "check-relations", "--n", "5"]);
}

#[test]
fn spectra_gen() {
    check_golden(
        "spectra_gen.txt",
        &["spectra", "gen", "--n", "4", "--q", "exp:0.7", "--t", "exp:-2.2"],
    );
}

#[test]
fn spectra_word() {
    check_golden(
        "spectra_word.json",
        &["spectra", "word", "--n", "4", "--word", "1 2 3", "--q", "exp:0.005", "--t", "-exp:0.1", "--json"],
    );
}

#[test]
fn form_solve() {
    check_golden(
        "form_solve.json",
        &["form", "solve", "--n", "3", "--q", "exp:0.01", "--t", "-exp:0.1", "--gram"],
    );
}

#[test]
fn form_scan() {
    check_golden(
        "form_scan.csv",
        &["form", "scan", "--n", "4", "--theta-t", "0.1,2", "--ratio", "0.05,0.5"],
    );
}

#[test]
fn dims_eval() {
    check_golden("dims_eval.txt", &["dims", "eval", "--diagram", "E6", "--labels", "1,0,0,0,0,0"]);
}

#[test]
fn dims_enumerate() {
    check_golden(
        "dims_enumerate.csv",
        &["dims", "enumerate", "--diagram", "D5", "--bound", "100"],
    );
}

#[test]
fn density_run() {
    check_golden(
        "density_run.csv",
        &["density", "run", "--config", "tests/data/density.json"],
    );
}

#[test]
fn verify_all() {
    let out = lkrep(&["verify", "all", "--n-max", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 11, "{text}");
    assert!(text.contains("11 of 11 criteria passed"));
}

#[test]
fn input_errors_exit_with_2() {
    for args in [
        &["rep", "dump", "--kind", "lk", "--n", "3", "--word", "3"][..],
        &["rep", "dump", "--kind", "spin", "--n", "3"],
        &["dims", "eval", "--diagram", "E7", "--labels", "1"],
        &["dims", "eval", "--diagram", "A3", "--labels", "0,0,0"],
        &["form", "solve", "--n", "3", "--q", "2,0", "--t", "-exp:0.1"],
        &["spectra", "gen", "--n", "3", "--q", "exp:0.1"],
        &["nonsense"],
    ] {
        assert_eq!(lkrep(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn indefinite_density_config_is_rejected() {
    let dir = std::env::temp_dir().join(format!("lkrep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("cfg.json");
    // q = e^{i}, t = -e^{2i}: outside the definite region
    let (q, t) = ((1.0f64).cos(), -(2.0f64).cos());
    std::fs::write(
        &cfg,
        format!(
            r#"{{"schema_version":1,"base_braid":"1 2","n":4,"q":[{q},{}],"t":[{t},{}],
                "samples":5,"conjugator_length":4,"rng_seed":1}}"#,
            (1.0f64).sin(),
            -(2.0f64).sin()
        ),
    )
    .unwrap();
    let out = lkrep(&["density", "run", "--config", cfg.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("definite"));
}

#[test]
fn density_output_file() {
    let path = std::env::temp_dir().join(format!("lkrep-density-{}.csv", std::process::id()));
    let out = lkrep(&["density", "run", "--config", "tests/data/density.json", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["config"]["samples"], 20);
    let csv = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(csv.lines().count(), 21);
    assert!(csv.starts_with("sample_index,conjugator_word,"));
}
