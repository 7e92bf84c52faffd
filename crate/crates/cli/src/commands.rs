//! Subcommand implementations.

use std::fs;

use scrambling_core::exact::{
    brute_force_argmax, closed_form_argmax, holevo_exact_point, regime, thermo_limit, verify_kkt,
    KktVerdict,
};
use scrambling_core::harness::{
    decay_rate, run_dynamics, run_sweep_checkpointed, DecayRate, DepthRule, DynamicsResult,
    Ensemble, ExperimentConfig,
};
use scrambling_core::validation::{run_validation, Fault, Level, ValidationOptions};
use scrambling_core::Mode;

use crate::args::{
    missing, parse_list, parse_pair, DynamicsArgs, ExactArgs, Settings, SweepArgs, ValidateArgs,
};
use crate::error::CliError;
use crate::output::{
    file_name, float, out_dir, RunManifest, Table, DECAY_HEADER, DYNAMICS_HEADER, EXACT_HEADER,
    SWEEP_HEADER,
};

pub const SWEEP_KEYS: &[&str] = &[
    "threads",
    "mode",
    "N",
    "amount",
    "t",
    "t-mult",
    "n",
    "samples",
    "seed",
    "ensemble",
    "checkpoint-interval",
    "out",
];
pub const DYNAMICS_KEYS: &[&str] = &[
    "threads",
    "mode",
    "N",
    "amount-range",
    "t-schedule",
    "ref-mult",
    "window",
    "n",
    "samples",
    "seed",
    "out",
];
pub const EXACT_KEYS: &[&str] = &[
    "threads",
    "N",
    "H",
    "n",
    "thermo",
    "verify-argmax",
    "verify-kkt",
    "out",
];
pub const VALIDATE_KEYS: &[&str] = &["threads", "quick", "seed"];

const DEFAULT_SAMPLES: u64 = 10_000;

fn parse_ensemble(s: &str) -> Result<Ensemble, String> {
    match s {
        "brick-wall" | "brickwall" => Ok(Ensemble::BrickWall),
        "global" => Ok(Ensemble::GlobalClifford),
        _ => Err("expected brick-wall or global".into()),
    }
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
        .map_err(|_| "expected holevo or coherent".to_string())
}

fn depth_rule(
    s: &Settings,
    t: &Option<String>,
    t_mult: &Option<String>,
) -> Result<DepthRule, CliError> {
    let explicit = s.get::<usize>("t", t)?;
    let multiple = s.get::<usize>("t-mult", t_mult)?;
    Ok(match (t.is_some(), t_mult.is_some(), explicit, multiple) {
        (true, _, Some(t), _) => DepthRule::Explicit(t),
        (_, true, _, Some(k)) => DepthRule::MultipleOfN(k),
        (_, _, Some(_), Some(_)) => {
            return Err(CliError::Config(
                "`t` and `t-mult` are both set; give one".into(),
            ))
        }
        (_, _, Some(t), None) => DepthRule::Explicit(t),
        (_, _, None, Some(k)) => DepthRule::MultipleOfN(k),
        (_, _, None, None) => DepthRule::MultipleOfN(3),
    })
}

fn subsystem_sizes(
    s: &Settings,
    flag: &Option<String>,
    num_qubits: usize,
) -> Result<Vec<usize>, CliError> {
    Ok(s.parsed("n", flag, parse_list)?
        .unwrap_or_else(|| (1..=num_qubits).collect()))
}

pub fn sweep(args: SweepArgs, s: &Settings) -> Result<(), CliError> {
    let mode = s
        .parsed("mode", &args.mode, parse_mode)?
        .ok_or_else(|| missing("mode"))?;
    let num_qubits: usize = s.require("N", &args.num_qubits)?;
    let amount: usize = s.require("amount", &args.amount)?;
    let mut config = ExperimentConfig::new(num_qubits, amount, mode);
    config.depth_rule = depth_rule(s, &args.t, &args.t_mult)?;
    config.n_values = subsystem_sizes(s, &args.n, num_qubits)?;
    config.samples = s.get_or("samples", &args.samples, DEFAULT_SAMPLES)?;
    config.master_seed = s.get_or("seed", &args.seed, 0)?;
    config.ensemble = s
        .parsed("ensemble", &args.ensemble, parse_ensemble)?
        .unwrap_or(Ensemble::BrickWall);
    config.checkpoint_interval = s.get_or("checkpoint-interval", &args.checkpoint_interval, 0)?;
    config.validate()?;

    let dir = out_dir(s.get("out", &args.out)?)?;
    let depth = config.depth();
    let stem = match config.ensemble {
        Ensemble::BrickWall => format!("sweep_{mode}_N{num_qubits}_A{amount}_t{depth}"),
        Ensemble::GlobalClifford => format!("sweep_{mode}_global_N{num_qubits}_A{amount}"),
    };
    let manifest_path = dir.join(format!("{stem}.manifest.json"));
    let config_json = serde_json::to_value(&config).expect("config serializes");
    let mut manifest = RunManifest::start("sweep", Some(config.master_seed), config_json);
    manifest.save(&manifest_path)?;

    let checkpoint = dir.join(format!("{stem}.checkpoint.json"));
    let checkpoint = (config.checkpoint_interval > 0).then_some(checkpoint.as_path());
    let result = run_sweep_checkpointed(&config, checkpoint)?;

    let csv_path = dir.join(format!("{stem}.csv"));
    let mut table = Table::new(&SWEEP_HEADER);
    println!("{:>4} {:>12} {:>12} {:>12}", "n", "mean", "std", "stderr");
    for p in &result.points {
        println!(
            "{:>4} {:>12.6} {:>12.6} {:>12.6}",
            p.n, p.mean, p.std, p.stderr
        );
        table.push(vec![
            mode.to_string(),
            num_qubits.to_string(),
            amount.to_string(),
            depth.to_string(),
            p.n.to_string(),
            p.count.to_string(),
            float(p.mean),
            float(p.std),
            float(p.stderr),
        ]);
    }
    table.write(&csv_path)?;
    if let Some(path) = checkpoint {
        fs::remove_file(path)?;
    }
    manifest.files.push(file_name(&csv_path));
    manifest.finish(&manifest_path)?;
    println!("wrote {}", csv_path.display());
    Ok(())
}

pub fn dynamics(args: DynamicsArgs, s: &Settings) -> Result<(), CliError> {
    let mode = s
        .parsed("mode", &args.mode, parse_mode)?
        .unwrap_or(Mode::Holevo);
    let num_qubits: usize = s.require("N", &args.num_qubits)?;
    let amounts = s
        .parsed("amount-range", &args.amount_range, parse_list)?
        .ok_or_else(|| missing("amount-range"))?;
    let ref_mult: usize = s.get_or("ref-mult", &args.ref_mult, 3)?;
    let reference_depth = ref_mult * num_qubits;
    let schedule = s
        .parsed("t-schedule", &args.t_schedule, parse_list)?
        .unwrap_or_else(|| (0..=reference_depth).collect());
    let window: (usize, usize) = s
        .parsed("window", &args.window, parse_pair)?
        .unwrap_or((7, 12));
    for end in [window.0, window.1] {
        if !schedule.contains(&end) {
            return Err(CliError::Config(format!(
                "--window: depth {end} is not in --t-schedule"
            )));
        }
    }
    if window.0 == window.1 {
        return Err(CliError::Config("--window: endpoints must differ".into()));
    }
    let n_values = subsystem_sizes(s, &args.n, num_qubits)?;
    let samples: u64 = s.get_or("samples", &args.samples, DEFAULT_SAMPLES)?;
    let seed: u64 = s.get_or("seed", &args.seed, 0)?;

    let configs: Vec<ExperimentConfig> = amounts
        .iter()
        .map(|&amount| {
            let mut c = ExperimentConfig::new(num_qubits, amount, mode);
            c.n_values = n_values.clone();
            c.samples = samples;
            c.master_seed = seed;
            c.depth_rule = DepthRule::Explicit(reference_depth);
            c.validate().map(|_| c)
        })
        .collect::<Result<_, _>>()?;

    let dir = out_dir(s.get("out", &args.out)?)?;
    let stem = format!("dynamics_{mode}_N{num_qubits}");
    let manifest_path = dir.join(format!("{stem}.manifest.json"));
    let echo = serde_json::json!({
        "mode": mode,
        "N": num_qubits,
        "amounts": amounts,
        "t_schedule": schedule,
        "reference_depth": reference_depth,
        "n_values": n_values,
        "samples": samples,
    });
    let mut manifest = RunManifest::start("dynamics", Some(seed), echo);
    manifest.log_base = Some("e".into());
    manifest.window = Some(window);
    manifest.save(&manifest_path)?;

    let results: Vec<DynamicsResult> = configs
        .iter()
        .map(|c| run_dynamics(c, &schedule, reference_depth))
        .collect::<Result<_, _>>()?;

    let distance_path = dir.join(format!("{stem}.csv"));
    let mut table = Table::new(&DYNAMICS_HEADER);
    for r in &results {
        for row in &r.rows {
            table.push(vec![
                num_qubits.to_string(),
                r.config.amount.to_string(),
                row.t.to_string(),
                float(row.distance),
            ]);
        }
    }
    table.write(&distance_path)?;
    manifest.files.push(file_name(&distance_path));

    let rates: Vec<Result<DecayRate, _>> = results
        .iter()
        .map(|r| decay_rate(r, window.0, window.1))
        .collect();
    let decay_path = dir.join(format!("decay_{mode}_N{num_qubits}.csv"));
    let mut table = Table::new(&DECAY_HEADER);
    println!(
        "{:>6} {:>12} {:>12} {:>12}",
        "amount", "k_D", "lower", "upper"
    );
    let mut degenerate = None;
    for (r, rate) in results.iter().zip(&rates) {
        match rate {
            Ok(k) => {
                println!(
                    "{:>6} {:>12.6} {:>12.6} {:>12.6}",
                    r.config.amount, k.rate, k.lower, k.upper
                );
                table.push(vec![
                    num_qubits.to_string(),
                    r.config.amount.to_string(),
                    window.0.to_string(),
                    window.1.to_string(),
                    float(k.rate),
                    float(k.lower),
                    float(k.upper),
                ]);
            }
            Err(e) => {
                println!("{:>6} {e}", r.config.amount);
                degenerate.get_or_insert(format!("amount {}: {e}", r.config.amount));
            }
        }
    }
    table.write(&decay_path)?;
    manifest.files.push(file_name(&decay_path));
    manifest.error = degenerate.clone();
    manifest.finish(&manifest_path)?;
    println!(
        "wrote {} and {}",
        distance_path.display(),
        decay_path.display()
    );
    match degenerate {
        Some(m) => Err(CliError::Degenerate(m)),
        None => Ok(()),
    }
}

fn verify_argmax_table(num_qubits: usize, h: usize, ns: &[usize]) -> Result<bool, CliError> {
    println!(
        "{:>4} {:>8} {:>18} {:>18} {:>6}",
        "n", "regime", "closed form", "exhaustive", "match"
    );
    let mut all = true;
    for &n in ns {
        let brute = brute_force_argmax(n, num_qubits, h)?.tuple();
        let closed = closed_form_argmax(n, num_qubits, h);
        let verdict = match closed {
            None => "n/a",
            Some(c) if c == brute => "yes",
            Some(_) => {
                all = false;
                "NO"
            }
        };
        let closed = closed.map_or("-".to_string(), |c| format!("{c:?}"));
        let r = format!("{:?}", regime(n, num_qubits, h));
        println!(
            "{n:>4} {r:>8} {closed:>18} {:>18} {verdict:>6}",
            format!("{brute:?}")
        );
    }
    println!("argmax: {}", if all { "pass" } else { "fail" });
    Ok(all)
}

fn verify_kkt_table(num_qubits: usize, h: usize, ns: &[usize]) -> Result<bool, CliError> {
    println!(
        "{:>4} {:>8} {:>30} {:>8} {:>13}",
        "n", "regime", "multipliers", "hessian", "verdict"
    );
    let mut all = true;
    for &n in ns {
        let r = verify_kkt(n, num_qubits, h)?;
        all &= r.verdict != KktVerdict::Violated;
        let m = format!(
            "[{}, {}, {}]",
            r.multipliers[0], r.multipliers[1], r.multipliers[2]
        );
        println!(
            "{n:>4} {:>8} {m:>30} {:>8} {:>13}",
            format!("{:?}", r.regime),
            if r.hessian_negative_definite {
                "neg-def"
            } else {
                "NOT"
            },
            format!("{:?}", r.verdict)
        );
    }
    println!("kkt: {}", if all { "pass" } else { "fail" });
    Ok(all)
}

pub fn exact(args: ExactArgs, s: &Settings) -> Result<(), CliError> {
    let thermo: Option<(f64, f64)> = s.parsed("thermo", &args.thermo, parse_pair)?;
    if let Some((r_n, r_h)) = thermo {
        let limit = thermo_limit(r_n, r_h)?;
        println!("thermodynamic limit chi/H at r_n={r_n}, r_H={r_h}: {limit}");
    }
    let num_qubits: Option<usize> = s.get("N", &args.num_qubits)?;
    let verify_argmax = s.switch("verify-argmax", args.verify_argmax)?;
    let verify_kkt = s.switch("verify-kkt", args.verify_kkt)?;
    let Some(num_qubits) = num_qubits else {
        if thermo.is_some() && !verify_argmax && !verify_kkt && args.amount.is_none() {
            return Ok(());
        }
        return Err(missing("N"));
    };
    let h: usize = s.require("H", &args.amount)?;
    if h > num_qubits {
        return Err(CliError::Config(format!(
            "--H: must lie in [0, {num_qubits}], got {h}"
        )));
    }
    let ns = subsystem_sizes(s, &args.n, num_qubits)?;
    if let Some(&n) = ns.iter().find(|&&n| n == 0 || n > num_qubits) {
        return Err(CliError::Config(format!(
            "--n: {n} is outside [1, {num_qubits}]"
        )));
    }

    let dir = out_dir(s.get("out", &args.out)?)?;
    let stem = format!("exact_N{num_qubits}_H{h}");
    let manifest_path = dir.join(format!("{stem}.manifest.json"));
    let echo = serde_json::json!({ "N": num_qubits, "H": h, "n_values": ns });
    let mut manifest = RunManifest::start("exact", None, echo);
    manifest.save(&manifest_path)?;
    let csv_path = dir.join(format!("{stem}.csv"));
    let mut table = Table::new(&EXACT_HEADER);
    println!("{:>4} {:>14} {:>14} {:>14}", "n", "chi", "E S_nH", "E S_n0");
    for &n in &ns {
        let p = holevo_exact_point(n, num_qubits, h)?;
        println!("{n:>4} {:>14.9} {:>14.9} {:>14.9}", p.chi, p.es_nh, p.es_n0);
        table.push(vec![
            num_qubits.to_string(),
            h.to_string(),
            n.to_string(),
            float(p.chi),
            float(p.es_nh),
            float(p.es_n0),
        ]);
    }
    table.write(&csv_path)?;
    manifest.files.push(file_name(&csv_path));
    manifest.finish(&manifest_path)?;
    println!("wrote {}", csv_path.display());

    let mut failed = Vec::new();
    if verify_argmax && !verify_argmax_table(num_qubits, h, &ns)? {
        failed.push("argmax");
    }
    if verify_kkt && !verify_kkt_table(num_qubits, h, &ns)? {
        failed.push("kkt");
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Validation(failed.join(", ")))
    }
}

pub fn validate(args: ValidateArgs, s: &Settings) -> Result<(), CliError> {
    let quick = s.switch("quick", args.quick)?;
    let fault = s.parsed("inject-fault", &args.inject_fault, |v| match v {
        "corrupted-enumeration" => Ok(Fault::CorruptedEnumeration),
        _ => Err("expected corrupted-enumeration".to_string()),
    })?;
    let options = ValidationOptions {
        level: if quick { Level::Quick } else { Level::Full },
        master_seed: s.get_or("seed", &args.seed, 0)?,
        fault,
    };
    let outcomes = run_validation(&options);
    println!("{:<32} {:<6} {:>8}  detail", "check", "result", "seconds");
    for o in &outcomes {
        let result = if o.passed { "pass" } else { "FAIL" };
        println!(
            "{:<32} {result:<6} {:>8.2}  {}",
            o.name, o.seconds, o.detail
        );
    }
    match outcomes.iter().find(|o| !o.passed) {
        Some(o) => Err(CliError::Validation(format!("{}: {}", o.name, o.detail))),
        None => {
            println!("all {} checks passed", outcomes.len());
            Ok(())
        }
    }
}

/// Keys accepted in a config file for `command`.
pub fn keys_for(command: &crate::args::Command) -> &'static [&'static str] {
    use crate::args::Command;
    match command {
        Command::Sweep(_) => SWEEP_KEYS,
        Command::Dynamics(_) => DYNAMICS_KEYS,
        Command::Exact(_) => EXACT_KEYS,
        Command::Validate(_) => VALIDATE_KEYS,
    }
}
