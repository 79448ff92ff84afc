//! End-to-end tests of the command-line binary: exit codes, config
//! handling, caching, determinism, and output formats.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_twistrip")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(bin()).current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const FAST_SPECTRUM: &[&str] =
    &["spectrum", "--d", "1", "--ell", "1.0", "--ny", "8", "--levels", "1", "--seed", "42"];

#[test]
fn exit_code_2_on_domain_and_config_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(dir.path(), &["spectrum", "--ell", "-1"]);
    assert_eq!(o.status.code(), Some(2), "stderr: {}", stderr(&o));
    assert!(stderr(&o).contains("ell must be >= 0"), "stderr: {}", stderr(&o));

    let o = run_in(dir.path(), &["spectrum", "--ell", "1", "--variant", "spiral"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run_in(dir.path(), &["spectrum", "--ell", "1", "--format", "xml"]);
    assert_eq!(o.status.code(), Some(2));

    // missing required key
    let o = run_in(dir.path(), &["spectrum"]);
    assert_eq!(o.status.code(), Some(2));

    // unknown CLI flag is a usage error
    let o = run_in(dir.path(), &["spectrum", "--ell", "1", "--frobnicate", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn config_file_with_overrides_and_unknown_key_rejection() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    fs::write(&conf, "d = 1.0\nell = 1.0\nny = 8\nlevels = 1\n# comment\n").unwrap();
    let o = run_in(dir.path(), &["spectrum", "--config", "run.conf"]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));

    // CLI flag wins over the file: ell = -1 must now be rejected
    let o = run_in(dir.path(), &["spectrum", "--config", "run.conf", "--ell", "-1"]);
    assert_eq!(o.status.code(), Some(2));

    fs::write(&conf, "ell = 1.0\nwavelength = 3\n").unwrap();
    let o = run_in(dir.path(), &["spectrum", "--config", "run.conf"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown config key"), "stderr: {}", stderr(&o));
}

#[test]
fn cache_hit_reproduces_outputs_bitwise() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(dir.path(), FAST_SPECTRUM);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("cache hits: 0/1"), "stdout: {}", stdout(&o));
    let json1 = fs::read(dir.path().join("twistrip_spectrum.json")).unwrap();
    let csv1 = fs::read(dir.path().join("twistrip_spectrum.csv")).unwrap();

    let o = run_in(dir.path(), FAST_SPECTRUM);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cache hits: 1/1"), "stdout: {}", stdout(&o));
    assert_eq!(json1, fs::read(dir.path().join("twistrip_spectrum.json")).unwrap());
    assert_eq!(csv1, fs::read(dir.path().join("twistrip_spectrum.csv")).unwrap());
}

#[test]
fn determinism_without_cache() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = FAST_SPECTRUM.to_vec();
    args.extend_from_slice(&["--no-cache", "--out", "a"]);
    assert_eq!(run_in(dir.path(), &args).status.code(), Some(0));
    let mut args2 = FAST_SPECTRUM.to_vec();
    args2.extend_from_slice(&["--no-cache", "--out", "b"]);
    assert_eq!(run_in(dir.path(), &args2).status.code(), Some(0));
    assert_eq!(
        fs::read(dir.path().join("a.json")).unwrap(),
        fs::read(dir.path().join("b.json")).unwrap()
    );
    assert_eq!(
        fs::read(dir.path().join("a.csv")).unwrap(),
        fs::read(dir.path().join("b.csv")).unwrap()
    );
}

#[test]
fn sweep_is_resumable_through_per_entry_cache() {
    let dir = tempfile::tempdir().unwrap();
    let base = [
        "sweep", "--ell-start", "0.5", "--ell-end", "1.5", "--ell-steps", "3", "--ny", "8",
        "--levels", "1",
    ];
    let o = run_in(dir.path(), &base);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("cache hits: 0/3"), "stdout: {}", stdout(&o));

    // a second, wider sweep reuses the three cached lengths
    let wider = [
        "sweep", "--ell-start", "0.5", "--ell-end", "2.5", "--ell-steps", "5", "--ny", "8",
        "--levels", "1",
    ];
    let o = run_in(dir.path(), &wider);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cache hits: 3/5"), "stdout: {}", stdout(&o));

    let csv = fs::read_to_string(dir.path().join("twistrip_sweep.csv")).unwrap();
    assert!(csv.lines().count() >= 6, "csv too short:\n{csv}");
    assert!(csv.starts_with("ell,m,lower,upper,extrapolated,parity"));
}

#[test]
fn cache_dir_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("elsewhere");
    let o = Command::new(bin())
        .current_dir(dir.path())
        .env("TWISTRIP_CACHE_DIR", &cache)
        .args(FAST_SPECTRUM)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    let entries = fs::read_dir(&cache).unwrap().count();
    assert!(entries >= 1, "no cache entries in the overridden directory");
    assert!(!dir.path().join(".twistrip-cache").exists());
}

#[test]
fn format_selection_controls_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = FAST_SPECTRUM.to_vec();
    args.extend_from_slice(&["--format", "json", "--out", "only"]);
    assert_eq!(run_in(dir.path(), &args).status.code(), Some(0));
    assert!(dir.path().join("only.json").exists());
    assert!(!dir.path().join("only.csv").exists());
}

#[test]
fn csv_carries_full_precision() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run_in(dir.path(), FAST_SPECTRUM).status.code(), Some(0));
    let csv = fs::read_to_string(dir.path().join("twistrip_spectrum.csv")).unwrap();
    let row = csv.lines().nth(1).unwrap();
    // 17 significant digits: a mantissa with 16 decimal places in e-notation
    let field = row.split(',').nth(2).unwrap();
    let mantissa = field.split('e').next().unwrap();
    let decimals = mantissa.split('.').nth(1).unwrap();
    assert_eq!(decimals.len(), 16, "field {field} lacks full precision");
}

#[test]
fn dump_matrix_writes_coordinate_list() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = FAST_SPECTRUM.to_vec();
    args.extend_from_slice(&["--dump-matrix", "op.txt"]);
    assert_eq!(run_in(dir.path(), &args).status.code(), Some(0));
    let text = fs::read_to_string(dir.path().join("op.txt")).unwrap();
    let first = text.lines().find(|l| !l.trim().is_empty() && !l.starts_with('#')).unwrap();
    let parts: Vec<&str> = first.split_whitespace().collect();
    assert_eq!(parts.len(), 3, "expected `row col value`, got {first:?}");
    parts[0].parse::<usize>().unwrap();
    parts[1].parse::<usize>().unwrap();
    parts[2].parse::<f64>().unwrap();
}

#[test]
fn validate_quick_passes_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(dir.path(), &["validate", "--quick", "--no-cache", "--out", "v1"]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("all checks passed"));
    let o = run_in(dir.path(), &["validate", "--quick", "--no-cache", "--out", "v2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        fs::read(dir.path().join("v1.json")).unwrap(),
        fs::read(dir.path().join("v2.json")).unwrap()
    );
}

#[test]
fn jobs_flag_accepted_and_zero_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = FAST_SPECTRUM.to_vec();
    args.extend_from_slice(&["--jobs", "2"]);
    assert_eq!(run_in(dir.path(), &args).status.code(), Some(0));
    let mut args = FAST_SPECTRUM.to_vec();
    args.extend_from_slice(&["--jobs", "0"]);
    assert_eq!(run_in(dir.path(), &args).status.code(), Some(2));
}
