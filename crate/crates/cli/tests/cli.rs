use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn petal(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_petal"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("failed to run petal")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("terminated by signal")
}

fn read_points(path: &Path) -> Vec<(f64, f64, f64)> {
    let text = fs::read_to_string(path).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("phi,x,y"));
    lines
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|c| c.parse().unwrap()).collect();
            (v[0], v[1], v[2])
        })
        .collect()
}

#[test]
fn lemniscate_trace_satisfies_its_equation() {
    let dir = tempfile::tempdir().unwrap();
    let o = petal(&["trace", "--family", "one-petal", "--alpha", "pi/4", "--n", "2048", "--out", "lemni.csv"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let pts = read_points(&dir.path().join("lemni.csv"));
    assert_eq!(pts.len(), 2048);
    for (_, x, y) in pts {
        let r2 = x * x + y * y;
        assert!((r2 * r2 - 2.0 * (y * y - x * x)).abs() < 1e-10);
    }
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("lemni.csv.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["family"], "one-petal");
    assert_eq!(meta["conformal"], true);
}

#[test]
fn trace_scales_with_time() {
    let dir = tempfile::tempdir().unwrap();
    for (t, name) in [("1", "t1.csv"), ("2", "t2.csv")] {
        let o = petal(&["trace", "--alpha", "pi/4", "--T", t, "--A", "1", "--n", "256", "--out", name], dir.path());
        assert_eq!(code(&o), 0);
    }
    let a = read_points(&dir.path().join("t1.csv"));
    let b = read_points(&dir.path().join("t2.csv"));
    for (p, q) in a.iter().zip(&b) {
        assert_eq!(p.0, q.0);
        assert_eq!(2.0 * p.1, q.1);
        assert_eq!(2.0 * p.2, q.2);
    }
}

#[test]
fn two_petal_svg_and_mirror_symmetry() {
    let dir = tempfile::tempdir().unwrap();
    let o = petal(
        &["trace", "--family", "two-petal", "--alpha", "pi/8", "--beta", "pi/16", "--n", "512", "--out", "f.csv", "--svg", "fig.svg"],
        dir.path(),
    );
    assert_eq!(code(&o), 0);
    let svg = fs::read_to_string(dir.path().join("fig.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<polygon"));
    let pts = read_points(&dir.path().join("f.csv"));
    let n = pts.len();
    // Samples at φ and 2π − φ are complex conjugates.
    for j in 0..n / 2 {
        let (a, b) = (pts[j], pts[n - 1 - j]);
        assert!((a.1 - b.1).abs() < 1e-12 && (a.2 + b.2).abs() < 1e-12);
    }
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["trace", "--family", "two-petal", "--alpha", "pi/4", "--beta", "pi/8", "--n", "256"];
    let a = petal(&args, dir.path());
    let b = petal(&args, dir.path());
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn nonconformal_trace_carries_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let o = petal(&["trace", "--family", "two-petal", "--alpha", "pi/8", "--beta", "pi/6", "--n", "256", "--out", "bad.csv"], dir.path());
    assert_eq!(code(&o), 0);
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("bad.csv.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["conformal"], false);
    assert!(meta["warning"].is_string());
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let o = petal(&["verify", "--alpha", "pi/4", "--report", "r.json"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    let checks = report["checks"].as_object().unwrap();
    assert!(checks.contains_key("ode") && checks.contains_key("integral_equation"));
    assert!(checks.values().all(|c| c["pass"] == true));

    let o = petal(&["verify", "--family", "two-petal", "--alpha", "pi/8", "--beta", "pi/6"], dir.path());
    assert_eq!(code(&o), 1);

    let o = petal(&["verify", "--alpha", "pi/x"], dir.path());
    assert_eq!(code(&o), 64);
    let o = petal(&["verify", "--alpha", "pi/4", "--tol-override", "nonsense=1"], dir.path());
    assert_eq!(code(&o), 64);
    let o = petal(&["verify", "--family", "two-petal", "--alpha", "pi/4"], dir.path());
    assert_eq!(code(&o), 64);
}

#[test]
fn tolerance_override_can_fail_a_check() {
    let dir = tempfile::tempdir().unwrap();
    let o = petal(&["verify", "--alpha", "pi/8", "--tol-override", "ode=0"], dir.path());
    assert_eq!(code(&o), 1);
}

#[test]
fn sweep_row_at_quarter_angle() {
    let dir = tempfile::tempdir().unwrap();
    let o = petal(&["sweep", "--alpha-grid", "pi/4:pi/4:1", "--beta-grid", "pi/36:17pi/36:17", "--out", "s.csv"], dir.path());
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(dir.path().join("s.csv")).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("alpha,beta,winding,conformal,degenerate"));
    let rows: Vec<Vec<String>> = lines.map(|l| l.split(',').map(String::from).collect()).collect();
    assert_eq!(rows.len(), 17);
    for (j, r) in rows.iter().enumerate() {
        assert_eq!(r[4] == "true", j == 8, "row {j}: {r:?}");
        if j < 8 {
            assert_eq!(r[3], "true");
        }
    }
}

#[test]
fn empty_grid_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = petal(&["sweep", "--alpha-grid", "0.1:0.2:0", "--beta-grid", "0.1:0.2:2"], dir.path());
    assert_eq!(code(&o), 64);
    let o = petal(&["sweep", "--alpha-grid", "0:0.2:2", "--beta-grid", "0.1:0.2:2"], dir.path());
    assert_eq!(code(&o), 64);
}

#[test]
fn m_plus_on_the_lemniscate() {
    let dir = tempfile::tempdir().unwrap();
    let o = petal(
        &["moments", "--alpha", "pi/4", "--T", "1", "--A", "1", "--n", "16384", "--point", "0,0.8", "--point", "0.2,-0.9"],
        dir.path(),
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let s = doc["m_plus"].as_array().unwrap();
    assert!((s[0]["m_plus_re"].as_f64().unwrap() - 1.8).abs() < 1e-3);
    for v in s {
        let d = (v["m_plus_re"].as_f64().unwrap() - v["expected_re"].as_f64().unwrap())
            .hypot(v["m_plus_im"].as_f64().unwrap() - v["expected_im"].as_f64().unwrap());
        assert!(d < 1e-3, "{v}");
    }
}

#[test]
fn moments_of_a_half_disk_trace() {
    let dir = tempfile::tempdir().unwrap();
    let n = 4096;
    let mut csv = String::from("phi,x,y\n");
    for j in 0..n {
        let t = (j as f64 + 0.5) * std::f64::consts::TAU / n as f64;
        csv.push_str(&format!("{t:.16e},{:.16e},{:.16e}\n", t.cos(), t.sin()));
    }
    fs::write(dir.path().join("disk.csv"), csv).unwrap();
    let o = petal(&["moments", "--trace", "disk.csv", "--kmax", "6"], dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let m = doc["moments"].as_array().unwrap();
    assert_eq!(m.len(), 5);
    assert_eq!(m[0]["k"], 2);
    assert!(m[0]["contour"].as_f64().unwrap().abs() < 1e-10);
    for v in m {
        assert!((v["contour"].as_f64().unwrap() - v["area"].as_f64().unwrap()).abs() < 1e-4);
    }
}

#[test]
fn petal_trace_moments_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&petal(&["trace", "--alpha", "pi/4", "--n", "512", "--out", "p.csv"], dir.path())), 0);
    let o = petal(&["moments", "--trace", "p.csv", "--tk", "4"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("ill-defined"));
    let o = petal(&["moments", "--alpha", "pi/4", "--kmax", "4"], dir.path());
    assert_eq!(code(&o), 2);
}
