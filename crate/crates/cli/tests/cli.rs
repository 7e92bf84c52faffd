use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn scramble(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scramble"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn csv_rows(path: &Path) -> Vec<Vec<String>> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}

#[test]
fn sweep_writes_one_row_per_n() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = scramble(&[
        "sweep",
        "--mode",
        "holevo",
        "--N",
        "19",
        "--amount",
        "8",
        "--t-mult",
        "3",
        "--n",
        "1..19",
        "--samples",
        "20",
        "--seed",
        "7",
        "--out",
        out,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = csv_rows(&dir.path().join("sweep_holevo_N19_A8_t57.csv"));
    assert_eq!(
        rows[0],
        [
            "mode",
            "N",
            "amount",
            "t",
            "n",
            "samples",
            "mean_bits",
            "std_bits",
            "stderr_bits"
        ]
    );
    assert_eq!(rows.len(), 20);
    let manifest: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("sweep_holevo_N19_A8_t57.manifest.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(manifest["master_seed"], 7);
    assert_eq!(manifest["files"][0], "sweep_holevo_N19_A8_t57.csv");
    assert!(manifest["finished"].is_string());
}

#[test]
fn full_system_mean_is_exactly_one() {
    let dir = tempfile::tempdir().unwrap();
    let o = scramble(&[
        "sweep",
        "--mode",
        "holevo",
        "--N",
        "2",
        "--amount",
        "1",
        "--n",
        "2",
        "--t",
        "5",
        "--samples",
        "100",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = csv_rows(&dir.path().join("sweep_holevo_N2_A1_t5.csv"));
    assert_eq!(rows[1][6].parse::<f64>().unwrap(), 1.0);
    assert_eq!(rows[1][7].parse::<f64>().unwrap(), 0.0);
}

#[test]
fn missing_amount_is_a_config_error() {
    let o = scramble(&[
        "sweep",
        "--mode",
        "holevo",
        "--N",
        "5",
        "--out",
        "/nonexistent-never-created",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("amount"), "{}", stderr(&o));
}

#[test]
fn out_of_range_n_names_the_flag() {
    let o = scramble(&[
        "sweep", "--mode", "holevo", "--N", "5", "--amount", "2", "--n", "9",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--n"), "{}", stderr(&o));
}

#[test]
fn unwritable_output_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let o = scramble(&[
        "sweep",
        "--mode",
        "holevo",
        "--N",
        "2",
        "--amount",
        "1",
        "--samples",
        "5",
        "--out",
        blocker.join("sub").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn config_file_fills_in_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    fs::write(
        &conf,
        "mode = holevo\nN = 4\namount = 2\nsamples = 30\nn = 1..2\n",
    )
    .unwrap();
    let out = dir.path().to_str().unwrap();
    let o = scramble(&[
        "sweep",
        "--config",
        conf.to_str().unwrap(),
        "--samples",
        "11",
        "--out",
        out,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = csv_rows(&dir.path().join("sweep_holevo_N4_A2_t12.csv"));
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1][5], "11");
}

#[test]
fn equal_seeds_give_identical_files_for_any_thread_count() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let run = |dir: &Path, threads: &str| {
        let o = scramble(&[
            "dynamics",
            "--N",
            "6",
            "--amount-range",
            "2,3",
            "--t-schedule",
            "1..18",
            "--samples",
            "200",
            "--seed",
            "3",
            "--threads",
            threads,
            "--out",
            dir.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
    };
    run(a.path(), "1");
    run(b.path(), "3");
    for name in ["dynamics_holevo_N6.csv", "decay_holevo_N6.csv"] {
        assert_eq!(
            fs::read(a.path().join(name)).unwrap(),
            fs::read(b.path().join(name)).unwrap()
        );
    }
}

#[test]
fn dynamics_reference_row_is_zero_and_manifest_records_window() {
    let dir = tempfile::tempdir().unwrap();
    let o = scramble(&[
        "dynamics",
        "--N",
        "6",
        "--amount-range",
        "2",
        "--t-schedule",
        "2..18",
        "--samples",
        "100",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = csv_rows(&dir.path().join("dynamics_holevo_N6.csv"));
    assert_eq!(rows[0], ["N", "amount", "t", "distance"]);
    let last = rows.last().unwrap();
    assert_eq!(
        (last[2].as_str(), last[3].parse::<f64>().unwrap()),
        ("18", 0.0)
    );
    let decay = csv_rows(&dir.path().join("decay_holevo_N6.csv"));
    assert_eq!(
        decay[0],
        ["N", "amount", "t", "t_prime", "rate", "lower", "upper"]
    );
    let manifest: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("dynamics_holevo_N6.manifest.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(manifest["window"], serde_json::json!([7, 12]));
    assert_eq!(manifest["log_base"], "e");
}

#[test]
fn vanishing_distance_in_window_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    // The full system holds all H bits at every depth, so D is exactly zero.
    let o = scramble(&[
        "dynamics",
        "--N",
        "4",
        "--amount-range",
        "2",
        "--n",
        "4",
        "--t-schedule",
        "2..12",
        "--samples",
        "50",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(4), "{}{}", stdout(&o), stderr(&o));
    assert!(dir.path().join("dynamics_holevo_N4.csv").exists());
}

#[test]
fn window_outside_schedule_is_a_config_error() {
    let o = scramble(&[
        "dynamics",
        "--N",
        "6",
        "--amount-range",
        "2",
        "--t-schedule",
        "1..5",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--window"));
}

#[test]
fn exact_curve_endpoints() {
    let dir = tempfile::tempdir().unwrap();
    let o = scramble(&[
        "exact",
        "--N",
        "5",
        "--H",
        "3",
        "--n",
        "1..5",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = csv_rows(&dir.path().join("exact_N5_H3.csv"));
    assert_eq!(
        rows[0],
        ["N", "H", "n", "chi_exact_bits", "es_nH_bits", "es_n0_bits"]
    );
    assert_eq!(rows.len(), 6);
    let chi: Vec<f64> = rows[1..].iter().map(|r| r[3].parse().unwrap()).collect();
    assert!(chi[0] < 0.1);
    assert!(chi.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(chi[4], 3.0);
}

#[test]
fn thermodynamic_limit_is_printed() {
    let o = scramble(&["exact", "--thermo", "0.6,0.421"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("0.475"), "{}", stdout(&o));
}

#[test]
fn argmax_verification_reports_every_outer_n() {
    let dir = tempfile::tempdir().unwrap();
    let o = scramble(&[
        "exact",
        "--N",
        "24",
        "--H",
        "8",
        "--n",
        "1..7,17..24",
        "--verify-argmax",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("argmax: pass"));
}

#[test]
fn kkt_verification_flags_the_middle_regime() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let outer = scramble(&[
        "exact",
        "--N",
        "40",
        "--H",
        "8",
        "--n",
        "10,30",
        "--verify-kkt",
        "--out",
        out,
    ]);
    assert!(outer.status.success(), "{}", stderr(&outer));
    let middle = scramble(&[
        "exact",
        "--N",
        "40",
        "--H",
        "8",
        "--n",
        "20",
        "--verify-kkt",
        "--out",
        out,
    ]);
    assert_eq!(middle.status.code(), Some(1));
    assert!(stderr(&middle).contains("kkt"));
}

#[test]
fn quick_validation_passes() {
    let o = scramble(&["validate", "--quick"]);
    assert!(o.status.success(), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("all 8 checks passed"));
}

#[test]
fn corrupted_enumeration_fails_uniformity() {
    let o = scramble(&[
        "validate",
        "--quick",
        "--inject-fault",
        "corrupted-enumeration",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("two_qubit_uniformity"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn bad_mode_is_a_config_error() {
    let o = scramble(&["sweep", "--mode", "quantum", "--N", "4", "--amount", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--mode"));
}
