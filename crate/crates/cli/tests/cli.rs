use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use circlemap::io::{report_from_toml, MapDescription};
use circlemap::poisson::{criterion_check, Verdict};
use circlemap::CircleMap;

fn circlemap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circlemap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

const IDENTITY: &str = "[numerator]\nsigma_angle = 0.0\nzeros = [[0.0, 0.0]]\n";

const QUOTIENT: &str = r#"
[numerator]
sigma_angle = 0.3
zeros = [[0.1, 0.0], [-0.1, 0.0]]

[denominator]
sigma_angle = 0.0
zeros = [[0.05, 0.0]]
"#;

#[test]
fn identity_map_is_a_homeomorphism_with_unit_margin() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "id.toml", IDENTITY);
    let out = circlemap(&["check-homeo", "--input", &input]);
    assert!(out.status.success());
    let report = report_from_toml::<f64>(&stdout(&out)).unwrap();
    assert_eq!(report.verdict, Verdict::Homeo);
    assert!((report.margin_lower_bound - 1.0).abs() < 1e-12);
}

#[test]
fn delimited_report_has_header_and_one_row() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "q.toml", QUOTIENT);
    let out = circlemap(&["check-homeo", "--input", &input, "--grid", "1024", "--format", "delimited"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("verdict,margin_lower_bound"));
    assert!(lines[1].starts_with("Homeo,"));
}

#[test]
fn exported_map_reimports_with_identical_verdict() {
    let f: CircleMap = MapDescription::parse(QUOTIENT).unwrap().to_map().unwrap();
    let exported = MapDescription::from_map(&f).to_toml();
    let back: CircleMap = MapDescription::parse(&exported).unwrap().to_map().unwrap();
    assert_eq!(back, f);

    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.toml", QUOTIENT);
    let b = write(dir.path(), "b.toml", &exported);
    let ra = circlemap(&["check-homeo", "--input", &a, "--grid", "4096"]);
    let rb = circlemap(&["check-homeo", "--input", &b, "--grid", "4096"]);
    assert_eq!(ra.stdout, rb.stdout);
    let report = report_from_toml::<f64>(&stdout(&ra)).unwrap();
    assert_eq!(report, criterion_check(&f, 4096).unwrap());
}

#[test]
fn parse_errors_exit_with_status_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.toml", "numerator = 3\n");
    assert_eq!(circlemap(&["check-homeo", "--input", &bad]).status.code(), Some(2));
    let outside = write(dir.path(), "outside.toml", "[numerator]\nsigma_angle = 0.0\nzeros = [[1.5, 0.0]]\n");
    assert_eq!(circlemap(&["check-homeo", "--input", &outside]).status.code(), Some(2));
    assert_eq!(circlemap(&["check-homeo"]).status.code(), Some(2));
    assert_eq!(circlemap(&["check-homeo", "--format", "yaml"]).status.code(), Some(2));
}

#[test]
fn strict_escalates_inconclusive_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    // n = 2 equality case: the grid minimum is zero, which a coarse grid cannot certify.
    let third = 1.0 / 3.0;
    let text = format!("[numerator]\nsigma_angle = 0.0\nzeros = [[{third}, 0.0], [{third}, 0.0]]\n\n[denominator]\nsigma_angle = 0.0\nzeros = [[0.0, 0.0]]\n");
    let input = write(dir.path(), "eq.toml", &text);
    let lenient = circlemap(&["check-homeo", "--input", &input, "--grid", "64"]);
    assert!(stdout(&lenient).contains("Inconclusive"));
    assert_eq!(lenient.status.code(), Some(0));
    let strict = circlemap(&["check-homeo", "--input", &input, "--grid", "64", "--strict"]);
    assert_eq!(strict.status.code(), Some(3));
}

#[test]
fn homotopy_rows_are_ordered_by_time() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "q.toml", QUOTIENT);
    let out = circlemap(&["homotopy", "--input", &input, "--steps", "4", "--grid", "512", "--format", "delimited"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let times: Vec<f64> = text.lines().skip(1).map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
    assert_eq!(times, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    assert!(text.lines().skip(1).all(|l| l.contains(",Homeo,")));
}

#[test]
fn fourier_reads_curves_and_maps() {
    let dir = tempfile::tempdir().unwrap();
    let map = write(dir.path(), "id.toml", IDENTITY);
    let out_path = dir.path().join("spectrum.csv");
    let out = circlemap(&["fourier", "--input", &map, "--window", "3", "--out", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    let table = fs::read_to_string(&out_path).unwrap();
    assert_eq!(table.lines().next(), Some("n,re,im,abs"));
    assert_eq!(table.lines().count(), 8);
    let one = table.lines().find(|l| l.starts_with("1,")).unwrap();
    assert!(one.starts_with("1,1,"));

    let mut curve = String::from("theta,re,im\n");
    for k in 0..64 {
        let t = std::f64::consts::TAU * k as f64 / 64.0;
        curve.push_str(&format!("{t},{},{}\n", 2.0 * t.cos(), t.sin()));
    }
    let path = write(dir.path(), "ellipse.csv", &curve);
    let out = circlemap(&["fourier", "--input", &path, "--window", "1"]);
    let text = stdout(&out);
    let c1: f64 = text.lines().find(|l| l.starts_with("1,")).unwrap().split(',').nth(1).unwrap().parse().unwrap();
    let cm1: f64 = text.lines().find(|l| l.starts_with("-1,")).unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert!((c1 - 1.5).abs() < 1e-12 && (cm1 - 0.5).abs() < 1e-12);
}

#[test]
fn starlike_output_is_deterministic() {
    let a = circlemap(&["starlike", "--seed", "11", "--format", "delimited"]);
    let b = circlemap(&["starlike", "--seed", "11", "--format", "delimited"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    let keys: Vec<&str> = lines.next().unwrap().split(',').collect();
    let values: Vec<&str> = lines.next().unwrap().split(',').collect();
    let get = |k: &str| values[keys.iter().position(|x| *x == k).unwrap()];
    assert_eq!(get("injective"), "true");
    assert_eq!(get("starlike"), "true");
    assert_eq!(get("winding_number_about_center"), "1");
}

#[test]
fn sweep_is_deterministic_and_agrees_with_closed_form() {
    let args = ["sweep-degree2", "--steps", "9", "--grid", "4096"];
    let a = circlemap(&args);
    let b = circlemap(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.status.code(), Some(1));
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 82);
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        match cols[3] {
            "Homeo" => assert_eq!(cols[2], "true", "{line}"),
            "NotHomeo" => assert_eq!(cols[2], "false", "{line}"),
            _ => {}
        }
    }
}
