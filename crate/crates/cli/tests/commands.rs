use std::f64::consts::PI;
use std::process::{Command, Output};

use conereg::exponent::{boundary_mismatch, critical_exponent, ConeGeometry, ObliqueBC};

fn conereg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conereg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn classify_irregular_prints_the_exponent() {
    let o = conereg(&["classify", "--theta0", "2.0944", "--s", "1.8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(field(&text, "label"), "IRREGULAR");
    let alpha: f64 = field(&text, "critical_exponent").parse().unwrap();
    let g = ConeGeometry::with_opening(2.0944).unwrap();
    let oracle = critical_exponent(&g, &ObliqueBC::new(&g, 1.8).unwrap()).unwrap().unwrap();
    assert_eq!(alpha, oracle);
}

#[test]
fn classify_axis_and_domain_error() {
    let o = conereg(&["classify", "--theta0", "1.0472", "--s", "0.0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "label"), "AXIS_CONTINUOUS");

    let o = conereg(&["classify", "--theta0", "1.0472", "--s", "2.0"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
}

#[test]
fn classify_accepts_degrees_and_json() {
    let o = conereg(&["classify", "--theta0", "120", "--s", "0", "--degrees", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["label"], "AXIS_CONTINUOUS");
    assert!((v["theta0"].as_f64().unwrap() - 2.0 * PI / 3.0).abs() < 1e-15);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(conereg(&["classify", "--theta0", "1.0"]).status.code(), Some(2));
    assert_eq!(conereg(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(conereg(&["classify", "--theta0", "3.2", "--s", "0.1"]).status.code(), Some(2));
}

fn phase_map_csv(extra: &[&str]) -> String {
    let mut args = vec!["phase-map"];
    args.extend_from_slice(extra);
    let o = conereg(&args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

struct Row {
    theta0: f64,
    s: f64,
    label: String,
    alpha: Option<f64>,
    b_at_1: f64,
    clamped: bool,
}

fn rows(csv: &str) -> Vec<Row> {
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("# conereg "));
    assert_eq!(
        lines.next().unwrap(),
        "theta0,s,label,critical_exponent,s0,b_at_1,witnesses_digest,clamped"
    );
    lines
        .map(|l| {
            let c: Vec<&str> = l.split(',').collect();
            assert_eq!(c.len(), 8, "{l}");
            Row {
                theta0: c[0].parse().unwrap(),
                s: c[1].parse().unwrap(),
                label: c[2].to_string(),
                alpha: (!c[3].is_empty()).then(|| c[3].parse().unwrap()),
                b_at_1: c[5].parse().unwrap(),
                clamped: c[7].parse().unwrap(),
            }
        })
        .collect()
}

#[test]
fn phase_map_regimes() {
    let csv = phase_map_csv(&[
        "--theta0-lo", "1.7", "--theta0-hi", "2.6", "--theta0-count", "10", "--s-lo", "0.05", "--s-hi", "0.95",
        "--s-count", "10",
    ]);
    let rows = rows(&csv);
    assert_eq!(rows.len(), 100);
    let mut irregular = 0;
    for (k, r) in rows.iter().enumerate() {
        // θ₀ outer, s inner
        assert_eq!(r.theta0, rows[10 * (k / 10)].theta0);
        assert!((r.b_at_1 - r.s.cos()).abs() < 1e-10);
        if r.s > PI / 2.0 && r.s < r.theta0 {
            assert_eq!(r.label, "IRREGULAR", "θ₀ = {}, s = {}", r.theta0, r.s);
            irregular += 1;
        }
        let product = r.s.cos() * r.s.sin();
        if product > 0.0 && r.alpha.is_none() {
            assert_eq!(r.label, "REGULAR_BARRIER");
        }
        if r.label == "IRREGULAR" {
            let a = r.alpha.unwrap();
            assert!(a > 0.0 && a < 1.0);
            let g = ConeGeometry::with_opening(r.theta0).unwrap();
            assert!(boundary_mismatch(&g, a, r.s).unwrap().abs() <= 1e-10);
            let oracle = critical_exponent(&g, &ObliqueBC::new(&g, r.s).unwrap()).unwrap();
            assert_eq!(oracle, Some(a));
        }
    }
    assert!(irregular > 0);
}

#[test]
fn phase_map_absolute_mode_clamps_and_hits_the_axis() {
    let csv = phase_map_csv(&[
        "--theta0-lo", "1.0", "--theta0-hi", "2.0", "--theta0-count", "2", "--s-mode", "absolute", "--s-lo", "-3",
        "--s-hi", "3", "--s-count", "5",
    ]);
    let rows = rows(&csv);
    assert_eq!(rows.len(), 10);
    for r in &rows {
        assert!(r.s > r.theta0 - PI && r.s < r.theta0);
        if r.s == 0.0 {
            assert_eq!(r.label, "AXIS_CONTINUOUS");
            assert!(!r.clamped);
        }
    }
    assert!(rows.iter().filter(|r| r.clamped).count() >= 4);
    assert!(rows.iter().any(|r| r.s == 0.0));
}

#[test]
fn phase_map_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for format in ["csv", "json"] {
        let paths: Vec<_> = (0..2).map(|k| dir.path().join(format!("map{k}.{format}"))).collect();
        for p in &paths {
            let o = conereg(&[
                "phase-map", "--theta0-lo", "0.5", "--theta0-hi", "2.8", "--theta0-count", "6", "--s-count", "7",
                "--format", format, "--out", p.to_str().unwrap(),
            ]);
            assert_eq!(o.status.code(), Some(0));
        }
        let a = std::fs::read(&paths[0]).unwrap();
        assert_eq!(a, std::fs::read(&paths[1]).unwrap());
        assert!(!a.contains(&b'\r'));
        if format == "json" {
            let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
            assert_eq!(v["schema_version"], 1);
            assert_eq!(v["rows"].as_array().unwrap().len(), 42);
        }
    }
}

#[test]
fn phase_map_rejects_bad_configs() {
    let bad = [
        vec!["phase-map", "--theta0-lo", "1", "--theta0-hi", "2", "--theta0-count", "1"],
        vec!["phase-map", "--theta0-lo", "1", "--theta0-hi", "2", "--s-lo", "0"],
        vec!["phase-map", "--theta0-lo", "1", "--theta0-hi", "2", "--out", "/nonexistent/dir/map.csv"],
    ];
    for args in bad {
        assert_eq!(conereg(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn exponent_command() {
    let o = conereg(&["exponent", "--theta0", "1.5707963267948966", "--neumann"]);
    assert_eq!(o.status.code(), Some(0));
    let a: f64 = field(&stdout(&o), "exponent").parse().unwrap();
    assert!((a - 1.0).abs() < 1e-8);

    let o = conereg(&["exponent", "--theta0", "2.0944", "--s", "1.3"]);
    assert_eq!(field(&stdout(&o), "exponent"), "none");
}

#[test]
fn barrier_check_command() {
    let o = conereg(&["barrier-check", "--theta0", "2.0943951023931953", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let c = v["cstar"].as_f64().unwrap();
    assert!(c > 0.0 && c < 1.0);
    assert_eq!(v["points"].as_array().unwrap().len(), 5);

    // Next to s = π/2 the boundary operator is positive at this degree.
    let o = conereg(&["barrier-check", "--theta0", "2.356194490192345", "--s", "1.54"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_suites() {
    let o = conereg(&["verify", "--suite", "special"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().filter(|l| l.starts_with("[PASS]")).count() >= 5);
    assert!(!text.contains("[FAIL]"));

    assert_eq!(conereg(&["verify", "--suite", "solver"]).status.code(), Some(0));
    assert_eq!(conereg(&["verify", "--suite", "all"]).status.code(), Some(0));
    assert_eq!(conereg(&["verify", "--suite", "all", "--poison"]).status.code(), Some(1));
}
