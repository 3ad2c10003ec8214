//! End-to-end tests of the `hypack` binary: reference-table reproduction,
//! scan curves against frozen endpoint values, optimizer output, the verify
//! manifest, exit codes, and byte-level output stability.

use std::process::Command;

/// Runs the binary and returns (stdout, stderr, exit code).
fn hypack(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_hypack"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        String::from_utf8(out.stderr).expect("stderr is UTF-8"),
        out.status.code().expect("exit code"),
    )
}

/// Parses a headered CSV body into float rows.
fn csv_rows(stdout: &str, header: &str) -> Vec<Vec<f64>> {
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some(header), "unexpected CSV header");
    lines
        .map(|line| {
            line.split(',')
                .map(|field| field.parse::<f64>().expect("numeric CSV field"))
                .collect()
        })
        .collect()
}

fn assert_close(label: &str, computed: f64, expected: f64, tol: f64) {
    assert!(
        (computed - expected).abs() <= tol,
        "{label}: computed {computed}, expected {expected} (tol {tol})"
    );
}

#[test]
fn table_octahedron_matches_reference_rows() {
    let (stdout, _, code) = hypack(&[
        "table",
        "--family",
        "octahedron",
        "--p",
        "5,6,7,20,50,100",
    ]);
    assert_eq!(code, 0);
    let rows = csv_rows(&stdout, "p,h,vol48,piece,delta");
    let expected = [
        (5.0, 0.69128565, 0.16596371, 0.12761435, 0.76892924),
        (6.0, 0.48121183, 0.19616337, 0.13616563, 0.69414405),
        (7.0, 0.37938071, 0.21217704, 0.13400462, 0.63156984),
        (20.0, 0.11318462, 0.24655736, 0.07142045, 0.28967074),
        (50.0, 0.04456095, 0.25026133, 0.03221956, 0.12874366),
        (100.0, 0.02223088, 0.25078571, 0.01676445, 0.06684770),
    ];
    assert_eq!(rows.len(), expected.len());
    for (row, (p, h, vol48, piece, delta)) in rows.iter().zip(expected) {
        assert_eq!(row[0], p);
        assert_close(&format!("h({p})"), row[1], h, 1e-6);
        assert_close(&format!("vol48({p})"), row[2], vol48, 1e-6);
        assert_close(&format!("piece({p})"), row[3], piece, 1e-6);
        assert_close(&format!("delta({p})"), row[4], delta, 1e-6);
    }
}

#[test]
fn table_cube_matches_reference_rows() {
    let (stdout, _, code) = hypack(&["table", "--family", "cube", "--p", "7,8,9,20,50,100"]);
    assert_eq!(code, 0);
    let rows = csv_rows(&stdout, "p,h,vol48,piece,delta");
    let expected = [
        (7.0, 1.03799291, 0.16297337, 0.11218983, 0.68839367),
        (8.0, 0.76428546, 0.18789693, 0.12193107, 0.64892530),
        (9.0, 0.62216938, 0.20295023, 0.12372607, 0.60963750),
        (20.0, 0.23086908, 0.24206876, 0.08613744, 0.35583872),
        (50.0, 0.08938872, 0.24956032, 0.04129724, 0.16547999),
        (100.0, 0.04449475, 0.25061105, 0.02191401, 0.08744233),
    ];
    assert_eq!(rows.len(), expected.len());
    for (row, (p, h, vol48, piece, delta)) in rows.iter().zip(expected) {
        assert_eq!(row[0], p);
        assert_close(&format!("h({p})"), row[1], h, 1e-6);
        assert_close(&format!("vol48({p})"), row[2], vol48, 1e-6);
        assert_close(&format!("piece({p})"), row[3], piece, 1e-6);
        assert_close(&format!("delta({p})"), row[4], delta, 1e-6);
    }
}

#[test]
fn table_reports_boundary_p_per_row_and_continues() {
    let (stdout, stderr, code) = hypack(&["table", "--family", "cube", "--p", "6,7"]);
    assert_eq!(code, 2);
    assert!(
        stderr.contains("p = 6: p outside admissible range (p > 6 required)"),
        "stderr was: {stderr}"
    );
    // The valid row is still produced.
    let rows = csv_rows(&stdout, "p,h,vol48,piece,delta");
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][0], 7.0);
    assert_close("delta(7)", rows[0][4], 0.68839367, 1e-6);
}

#[test]
fn scan_over_x_rises_to_the_interval_end() {
    let (stdout, _, code) = hypack(&[
        "scan",
        "--family",
        "cube",
        "--variant",
        "delta3",
        "--p",
        "7",
        "--n",
        "100",
    ]);
    assert_eq!(code, 0);
    let rows = csv_rows(&stdout, "abscissa,density");
    assert_eq!(rows.len(), 100);
    assert_eq!(rows[0][0], 0.0);
    assert_close("density at x = 0", rows[0][1], 0.68839367, 1e-6);
    assert_close("interval end", rows[99][0], 0.41108181, 1e-6);
    assert_close("density at the end", rows[99][1], 0.84931352, 1e-6);
    assert!(
        rows.windows(2).all(|w| w[1][1] > w[0][1]),
        "δ₃ should rise monotonically over the blow-up interval at p = 7"
    );
}

#[test]
fn scan_over_p_congruent_density_decreases() {
    let (stdout, _, code) = hypack(&[
        "scan",
        "--family",
        "octahedron",
        "--variant",
        "congruent",
        "--p-range",
        "5:10",
        "--n",
        "200",
    ]);
    assert_eq!(code, 0);
    let rows = csv_rows(&stdout, "abscissa,density");
    assert_eq!(rows.len(), 200);
    assert_eq!(rows[0][0], 5.0);
    assert_eq!(rows[199][0], 10.0);
    assert_close("density at p = 5", rows[0][1], 0.76892924, 1e-6);
    assert_close("density at p = 10", rows[199][1], 0.49651296, 1e-6);
    assert!(
        rows.windows(2).all(|w| w[1][1] < w[0][1]),
        "congruent density should fall monotonically on [5, 10]"
    );
}

#[test]
fn scan_over_p_with_fixed_x() {
    let (stdout, _, code) = hypack(&[
        "scan",
        "--family",
        "cube",
        "--variant",
        "delta3",
        "--p-range",
        "6.5:8",
        "--x",
        "0.2",
        "--n",
        "4",
    ]);
    assert_eq!(code, 0);
    let rows = csv_rows(&stdout, "abscissa,density");
    assert_eq!(rows.len(), 4);
    assert_close("density at p = 6.5", rows[0][1], 0.74439654, 1e-6);
    assert_close("density at p = 8", rows[3][1], 0.67995194, 1e-6);
}

#[test]
fn scan_usage_errors_exit_2() {
    // Too few samples.
    let (_, stderr, code) = hypack(&[
        "scan", "--family", "cube", "--variant", "delta3", "--p", "7", "--n", "1",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("at least 2"), "stderr was: {stderr}");

    // --p and --p-range conflict (rejected by argument parsing).
    let (_, _, code) = hypack(&[
        "scan", "--family", "cube", "--variant", "delta3", "--p", "7", "--p-range", "6:8",
    ]);
    assert_eq!(code, 2);

    // Neither abscissa choice given.
    let (_, stderr, code) = hypack(&["scan", "--family", "cube", "--variant", "delta3"]);
    assert_eq!(code, 2);
    assert!(
        stderr.contains("exactly one of --p or --p-range"),
        "stderr was: {stderr}"
    );
}

#[test]
fn scan_absent_variant_exits_2() {
    let (_, stderr, code) = hypack(&[
        "scan",
        "--family",
        "cube",
        "--variant",
        "delta2",
        "--p-range",
        "8.5:9",
        "--n",
        "10",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("absent"), "stderr was: {stderr}");
}

/// Extracts the value of a numeric key from a flat JSON object.
fn json_field(json: &str, key: &str) -> f64 {
    let pat = format!("\"{key}\":");
    let start = json.find(&pat).expect("key present") + pat.len();
    let rest = &json[start..];
    let end = rest
        .find(|c| c == ',' || c == '}')
        .expect("terminated value");
    rest[..end].parse().expect("numeric JSON value")
}

#[test]
fn optimize_cube_delta3_end_policy() {
    let (stdout, _, code) = hypack(&[
        "optimize",
        "--family",
        "cube",
        "--variant",
        "delta3",
        "--policy",
        "end",
        "--p-range",
        "6:7",
    ]);
    assert_eq!(code, 0);
    assert_close("p*", json_field(&stdout, "p"), 6.26384, 1e-3);
    assert_close("delta*", json_field(&stdout, "delta"), 0.86145, 1e-4);
    assert_close("x*", json_field(&stdout, "x"), 0.36563, 1e-3);
}

#[test]
fn optimize_octahedron_congruent_start_policy() {
    let (stdout, _, code) = hypack(&[
        "optimize",
        "--family",
        "octahedron",
        "--variant",
        "congruent",
        "--policy",
        "start",
        "--p-range",
        "4:20",
    ]);
    assert_eq!(code, 0);
    assert_close("p*", json_field(&stdout, "p"), 4.11320, 1e-3);
    assert_close("delta*", json_field(&stdout, "delta"), 0.83173, 1e-4);
    assert_eq!(json_field(&stdout, "x"), 0.0);
}

#[test]
fn optimize_absent_variant_exits_2() {
    let (_, stderr, code) = hypack(&[
        "optimize",
        "--family",
        "cube",
        "--variant",
        "delta2",
        "--policy",
        "end",
        "--p-range",
        "8.5:9",
    ]);
    assert_eq!(code, 2);
    assert!(
        stderr.contains("variant absent on range"),
        "stderr was: {stderr}"
    );
}

#[test]
fn verify_full_manifest_passes() {
    let (stdout, stderr, code) = hypack(&["verify"]);
    assert_eq!(code, 0, "stderr was: {stderr}");
    let mut lines = stdout.lines();
    assert_eq!(
        lines.next(),
        Some("name,group,expected,computed,tolerance,pass")
    );
    let rows: Vec<&str> = lines.collect();
    assert!(rows.len() >= 80, "manifest should be substantial");
    assert!(rows.iter().all(|r| r.ends_with(",true")));
    assert!(
        stderr.contains(&format!("{} of {} checks passed", rows.len(), rows.len())),
        "stderr was: {stderr}"
    );
}

#[test]
fn verify_only_filters_a_group() {
    let (stdout, _, code) = hypack(&["verify", "--only", "table2"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = stdout.lines().skip(1).collect();
    assert_eq!(rows.len(), 24, "Table 2: 6 rows × 4 columns");
    assert!(rows.iter().all(|r| r.starts_with("table2.")));

    let (_, stderr, code) = hypack(&["verify", "--only", "nosuchgroup"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown verification group"));
}

#[test]
fn output_bytes_are_deterministic() {
    let args = [
        "scan", "--family", "cube", "--variant", "delta3", "--p", "7", "--n", "50",
    ];
    let (first, _, _) = hypack(&args);
    let (second, _, _) = hypack(&args);
    assert_eq!(first, second);

    let args = [
        "optimize", "--family", "cube", "--variant", "delta3", "--policy", "end", "--p-range",
        "6:7", "--format", "json",
    ];
    let (first, _, _) = hypack(&args);
    let (second, _, _) = hypack(&args);
    assert_eq!(first, second);
}

#[test]
fn json_output_round_trips_to_identical_bytes() {
    let (stdout, _, code) = hypack(&[
        "optimize",
        "--family",
        "octahedron",
        "--variant",
        "delta1",
        "--policy",
        "free",
        "--p-range",
        "4.5:8",
    ]);
    assert_eq!(code, 0);
    // Parse every numeric field and re-serialize with the same layout and
    // 17-significant-digit convention; bytes must match exactly.
    let rebuilt = format!(
        "{{\"p\":{:.16e},\"delta\":{:.16e},\"x\":{:.16e}}}\n",
        json_field(&stdout, "p"),
        json_field(&stdout, "delta"),
        json_field(&stdout, "x")
    );
    assert_eq!(stdout, rebuilt);
}

#[test]
fn out_flag_writes_the_same_bytes_to_a_file() {
    let path = std::env::temp_dir().join(format!("hypack-table-{}.csv", std::process::id()));
    let path_str = path.to_str().expect("temp path is UTF-8");
    let (stdout, _, code) = hypack(&["table", "--family", "cube", "--p", "7,8,9"]);
    assert_eq!(code, 0);
    let (file_stdout, _, code) = hypack(&[
        "table", "--family", "cube", "--p", "7,8,9", "--out", path_str,
    ]);
    assert_eq!(code, 0);
    assert!(file_stdout.is_empty(), "--out should silence stdout");
    let written = std::fs::read_to_string(&path).expect("file written");
    assert_eq!(written, stdout);
    std::fs::remove_file(&path).ok();
}

#[test]
fn csv_is_line_feed_terminated_with_dot_decimals() {
    let (stdout, _, _) = hypack(&["table", "--family", "octahedron", "--p", "5"]);
    assert!(stdout.ends_with('\n'));
    assert!(!stdout.contains('\r'));
    assert!(stdout.contains("0.76892924"));
}
