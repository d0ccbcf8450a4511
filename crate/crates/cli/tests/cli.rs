use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubicsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn passing_check_exits_zero() {
    let o = run(&["verify", "C9"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("C9   galois-transport     PASS"));
}

#[test]
fn check_names_are_accepted() {
    let o = run(&["verify", "galois-transport", "--sequential"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn full_run_reports_the_failing_system_check() {
    let o = run(&["verify", "all"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(1));
    assert!(text.contains("C5   g1-cubic             FAIL"), "{text}");
    assert!(text.contains("rank of the system matrix"));
    assert!(text.contains("9/10 checks pass"));
}

#[test]
fn json_report_has_the_documented_fields() {
    let o = run(&["verify", "all", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).expect("valid json");
    let reports = v.as_array().expect("array");
    assert_eq!(reports.len(), 10);
    for r in reports {
        for key in ["check_id", "status", "details", "elapsed_ms"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
    let statuses: Vec<&str> = reports.iter().map(|r| r["status"].as_str().unwrap()).collect();
    assert_eq!(statuses.iter().filter(|s| **s == "pass").count(), 9);
    assert_eq!(reports[4]["status"], "fail");
}

#[test]
fn out_writes_the_report() {
    let path = std::env::temp_dir().join(format!("cubicsym-report-{}.json", std::process::id()));
    let o = run(&["verify", "C4", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&o));
    std::fs::remove_file(path).ok();
}

#[test]
fn mutation_is_detected() {
    let o = run(&["verify", "C6", "--mutate", "H"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("mutation: H[0,0] += 1"));
    let o = run(&["verify", "C9", "--mutate", "J[0,1]"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_mutation_is_rejected() {
    let o = run(&["verify", "C6", "--mutate", "H[9,0]"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["verify", "C6", "--mutate", "Nope"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn closure_cap_is_a_resource_error() {
    let o = run(&["verify", "C1", "--max-closure", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("ERROR"));
}

#[test]
fn unknown_check_fails() {
    let o = run(&["verify", "C99"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown check"));
}

#[test]
fn singular_subcommand() {
    let o = run(&["singular", "--form", "x^3+y^3+z^3+t^3"]);
    assert_eq!(stdout(&o).trim(), "nonsingular");
    let o = run(&["singular", "--form", "y^3+z^3+t^3"]);
    assert_eq!(stdout(&o).trim(), "singular at (1, 0, 0, 0)");
    let o = run(&["singular", "--form", "x^3+"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn invariants_subcommand() {
    let o = run(&["invariants", "--group", "G1prime", "--degree", "3"]);
    let text = stdout(&o);
    assert!(text.contains("dim 1"), "{text}");
    assert!(text.contains("x^2*y + y^2*z + z^2*t + x*t^2"), "{text}");
    let o = run(&["invariants", "--group", "G2", "--degree", "3"]);
    assert!(stdout(&o).contains("no nonzero relative-invariant forms of degree 3"));
    let o = run(&["invariants", "--group", "G27", "--degree", "3", "--character", "trivial"]);
    assert!(stdout(&o).contains("dim 4"));
}

#[test]
fn catalog_subcommand() {
    let o = run(&["catalog", "J"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
    let corrected = stdout(&run(&["catalog", "G1.E3"]));
    let printed = stdout(&run(&["catalog", "G1.E3", "--printed"]));
    assert_ne!(corrected, printed);
    let o = run(&["catalog", "G27"]);
    assert!(stdout(&o).contains("G27[2]"));
}
