use std::path::Path;
use std::process::{Command, Output};

fn sphiso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphiso"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn simulate(dir: &Path, extra: &[&str]) {
    let out = dir.to_str().unwrap();
    let mut args = vec![
        "simulate", "--n-lat", "20", "--n-lon", "50", "--l-sim", "40", "--T", "120", "--seed", "9",
        "--out", out,
    ];
    args.extend_from_slice(extra);
    let o = sphiso(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn simulate_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    simulate(a.path(), &[]);
    simulate(b.path(), &[]);
    for f in ["fields.bin", "coeffs.csv"] {
        let x = std::fs::read(a.path().join(f)).unwrap();
        let y = std::fs::read(b.path().join(f)).unwrap();
        assert_eq!(x, y, "{f} differs");
    }
}

#[test]
fn strong_anisotropy_exits_with_rejection_code() {
    let d = tempfile::tempdir().unwrap();
    simulate(d.path(), &["--psi", "0.5"]);
    let input = d.path().join("coeffs.csv");
    let o = sphiso(&["test", input.to_str().unwrap(), "--l", "5"]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["rejected"], true);
}

#[test]
fn test_accepts_field_files() {
    let d = tempfile::tempdir().unwrap();
    simulate(d.path(), &[]);
    let input = d.path().join("fields.bin");
    let o = sphiso(&["test", input.to_str().unwrap(), "--l", "4", "--l-reg", "18"]);
    let code = o.status.code();
    assert!(code == Some(0) || code == Some(3), "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["p"], 25);
}

#[test]
fn corrupt_header_is_an_error() {
    let d = tempfile::tempdir().unwrap();
    let bad = d.path().join("bad.bin");
    std::fs::write(&bad, b"{\"n_lat\": 4, oops}\n\0\0\0\0").unwrap();
    let o = sphiso(&["test", bad.to_str().unwrap(), "--l", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("header"));
}

#[test]
fn localize_reports_requested_sites() {
    let d = tempfile::tempdir().unwrap();
    simulate(d.path(), &["--epsilon", "0.8"]);
    let input = d.path().join("fields.bin");
    let out = d.path().join("loc");
    let o = sphiso(&[
        "localize", input.to_str().unwrap(), "--l", "4", "--top-k", "3", "--model", "M1",
        "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let sites: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("sites.json")).unwrap()).unwrap();
    assert_eq!(sites.as_array().unwrap().len(), 3);
    let map = std::fs::read_to_string(out.join("deviation.csv")).unwrap();
    assert_eq!(map.lines().count(), 1 + 20 * 50);
}

#[test]
fn select_reports_l_reg() {
    let o = sphiso(&["select", "--n-lat", "73", "--n-lon", "96", "--convention", "pole_inclusive"]);
    assert!(o.status.success());
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["l_reg"], 47);
}

#[test]
fn type1_rejects_power_config_and_resumes() {
    let d = tempfile::tempdir().unwrap();
    let cfg = d.path().join("exp.toml");
    std::fs::write(
        &cfg,
        "l_sim = 30\nT = 60\nreplicates = 6\nl_values = [3]\nl_reg = 18\n\
         [grid]\nn_lat = 20\nn_lon = 50\n",
    )
    .unwrap();
    let out = d.path().join("run");
    let args = ["type1", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()];
    let first = sphiso(&args);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let table = std::fs::read_to_string(out.join("type1.csv")).unwrap();
    let second = sphiso(&args);
    assert!(second.status.success());
    assert_eq!(table, std::fs::read_to_string(out.join("type1.csv")).unwrap());
    let timing: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("timing.json")).unwrap()).unwrap();
    assert_eq!(timing["computed_replicates"], 0);

    let o = sphiso(&["power", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}
