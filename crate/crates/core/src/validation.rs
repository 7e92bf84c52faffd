//! Self-checks run by `scramble validate`.
//!
//! Each check compares the simulator against an independent oracle: dense
//! matrices, exhaustive enumeration, closed-form averages or a goodness-of-fit
//! test. `Level::Quick` shrinks sample counts to keep the whole suite short.

use std::collections::HashMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::circuit::build_brick_wall;
use crate::clifford::{
    apply_global_clifford, enumerate_two_qubit_cliffords, sample_global_clifford,
    sample_two_qubit_index, two_qubit_index, TwoQubitClifford, TWO_QUBIT_CLIFFORD_COUNT,
};
use crate::dense::dense_subsystem_entropy;
use crate::error::Result;
use crate::exact::{
    enumerate_orbit_terms, hessian_negative_definite, holevo_exact, stabilizer_state_count,
};
use crate::harness::{compare_sweeps, run_sweep, DepthRule, Ensemble, ExperimentConfig};
use crate::metrics::{draw_sample_spec, holevo_sample, random_subset, Mode, SystemUnitary};
use crate::pauli::PauliString;
use crate::state::StabilizerState;

/// Smallest acceptable goodness-of-fit p-value.
pub const CHI_SQUARE_ALPHA: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl Level {
    fn pick<T>(self, quick: T, full: T) -> T {
        match self {
            Level::Quick => quick,
            Level::Full => full,
        }
    }
}

/// Deliberate defects used to confirm that the suite catches them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// The first enumerated two-qubit gate is replaced by a copy of the second.
    CorruptedEnumeration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValidationOptions {
    pub level: Level,
    pub master_seed: u64,
    pub fault: Option<Fault>,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        Self {
            level: Level::Full,
            master_seed: 0,
            fault: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

type Check = fn(&ValidationOptions) -> Result<(bool, String)>;

pub const CHECK_NAMES: [&str; 8] = [
    "dense_entropy_equivalence",
    "two_qubit_uniformity",
    "single_qubit_global_uniformity",
    "pauli_frame_equivalence",
    "two_qubit_exhaustive_mean",
    "orbit_counting",
    "exact_vs_monte_carlo",
    "depth_convergence",
];

const CHECKS: [Check; 8] = [
    dense_entropy_equivalence,
    two_qubit_uniformity,
    single_qubit_global_uniformity,
    pauli_frame_equivalence,
    two_qubit_exhaustive_mean,
    orbit_counting,
    exact_vs_monte_carlo,
    depth_convergence,
];

/// Runs every check in order. A check that errors counts as failed.
pub fn run_validation(options: &ValidationOptions) -> Vec<CheckOutcome> {
    CHECK_NAMES
        .iter()
        .zip(CHECKS)
        .map(|(&name, check)| {
            let start = Instant::now();
            let (passed, detail) =
                check(options).unwrap_or_else(|e| (false, format!("error: {e}")));
            CheckOutcome {
                name,
                passed,
                detail,
                seconds: start.elapsed().as_secs_f64(),
            }
        })
        .collect()
}

fn rng(options: &ValidationOptions, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(options.master_seed);
    r.set_stream(stream);
    r
}

/// Pearson statistic and upper-tail p-value for counts against a uniform law.
pub fn chi_square_uniform(counts: &[u64]) -> (f64, f64) {
    let total: u64 = counts.iter().sum();
    let expected = total as f64 / counts.len() as f64;
    let stat: f64 = counts
        .iter()
        .map(|&c| (c as f64 - expected).powi(2) / expected)
        .sum();
    let dist = ChiSquared::new((counts.len() - 1) as f64).expect("positive degrees of freedom");
    (stat, dist.sf(stat))
}

/// Random mixed stabilizer state on `num_qubits` qubits.
fn random_state<R: Rng + ?Sized>(num_qubits: usize, rng: &mut R) -> Result<StabilizerState> {
    let h = rng.gen_range(0..=num_qubits);
    let encoded = random_subset(num_qubits, h, rng);
    let mut state = StabilizerState::new_mixed_encoding_state(num_qubits, &encoded)?;
    apply_global_clifford(&mut state, &sample_global_clifford(num_qubits, rng)?)?;
    Ok(state)
}

fn dense_entropy_equivalence(options: &ValidationOptions) -> Result<(bool, String)> {
    let instances = options.level.pick(200, 1000);
    let mut rng = rng(options, 1);
    for i in 0..instances {
        let n = rng.gen_range(1..=5);
        let state = random_state(n, &mut rng)?;
        let size = rng.gen_range(0..=n);
        let region = random_subset(n, size, &mut rng);
        let s = state.subsystem_entropy(&region)?;
        let dense = dense_subsystem_entropy(&state, &region)?;
        if (dense - s as f64).abs() > 1e-9 {
            return Ok((
                false,
                format!("instance {i}: rank entropy {s}, dense entropy {dense}"),
            ));
        }
    }
    Ok((true, format!("{instances} instances match")))
}

/// Enumerated gate table with the injected defect applied, if any. Draws
/// go through the production index sampler and are classified by gate key.
fn gate_list(options: &ValidationOptions) -> Vec<TwoQubitClifford> {
    let mut gates = enumerate_two_qubit_cliffords();
    if options.fault == Some(Fault::CorruptedEnumeration) {
        gates[0] = gates[1].clone();
    }
    gates
}

fn two_qubit_uniformity(options: &ValidationOptions) -> Result<(bool, String)> {
    let draws = 10_000_000;
    let gates = gate_list(options);
    let mut rng = rng(options, 2);
    let mut counts = vec![0u64; TWO_QUBIT_CLIFFORD_COUNT];
    for _ in 0..draws {
        let gate = &gates[sample_two_qubit_index(&mut rng)];
        counts[two_qubit_index(gate)] += 1;
    }
    let (stat, p) = chi_square_uniform(&counts);
    Ok((
        p > CHI_SQUARE_ALPHA,
        format!(
            "{draws} draws over {TWO_QUBIT_CLIFFORD_COUNT} classes: chi2 = {stat:.1}, p = {p:.3e}"
        ),
    ))
}

fn single_qubit_global_uniformity(options: &ValidationOptions) -> Result<(bool, String)> {
    let draws = options.level.pick(100_000, 1_000_000);
    let mut rng = rng(options, 3);
    let mut counts: HashMap<(PauliString, PauliString), u64> = HashMap::new();
    for _ in 0..draws {
        let t = sample_global_clifford(1, &mut rng)?;
        *counts
            .entry((t.x_images()[0].clone(), t.z_images()[0].clone()))
            .or_default() += 1;
    }
    if counts.len() != 24 {
        return Ok((
            false,
            format!("{} distinct classes, expected 24", counts.len()),
        ));
    }
    let counts: Vec<u64> = counts.into_values().collect();
    let (stat, p) = chi_square_uniform(&counts);
    Ok((
        p > CHI_SQUARE_ALPHA,
        format!("{draws} draws over 24 classes: chi2 = {stat:.1}, p = {p:.3e}"),
    ))
}

/// Every computational-basis input on the encoded qubits has the same
/// subsystem entropy after the circuit as `|0…0⟩`, so the per-sample Holevo
/// quantity equals the full ensemble expression.
fn pauli_frame_equivalence(options: &ValidationOptions) -> Result<(bool, String)> {
    let instances = options.level.pick(50, 200);
    let mut rng = rng(options, 4);
    for i in 0..instances {
        let n = rng.gen_range(2..=6);
        let h = rng.gen_range(1..=n);
        let size = rng.gen_range(1..=n);
        let depth = rng.gen_range(0..=3 * n);
        let spec = draw_sample_spec(n, h, size, depth, Mode::Holevo, &mut rng)?;
        let circuit = build_brick_wall(n, depth, &mut rng)?;
        let outcome = holevo_sample(&spec, &circuit)?;
        for bits in 0u32..(1 << h) {
            let gens = (0..n)
                .map(|q| {
                    let mut z = PauliString::single_z(n, q);
                    if let Some(k) = spec.encoded.members().iter().position(|&e| e == q) {
                        z.set_negative(bits >> k & 1 == 1);
                    }
                    z
                })
                .collect();
            let mut state = StabilizerState::from_generators(n, gens)?;
            circuit.apply_to_system(&mut state)?;
            let s = state.subsystem_entropy(&spec.q)?;
            if s != outcome.entropy_pure {
                return Ok((
                    false,
                    format!(
                        "instance {i}, input {bits:b}: entropy {s} vs {}",
                        outcome.entropy_pure
                    ),
                ));
            }
        }
    }
    Ok((
        true,
        format!("{instances} instances, all basis inputs agree"),
    ))
}

fn two_qubit_exhaustive_mean(options: &ValidationOptions) -> Result<(bool, String)> {
    let mut config = ExperimentConfig::new(2, 1, Mode::Holevo);
    config.n_values = vec![1];
    config.depth_rule = DepthRule::Explicit(2);
    config.samples = options.level.pick(100_000, 1_000_000);
    config.master_seed = options.master_seed;
    let p = run_sweep(&config)?.points[0];
    let ok = (p.mean - 0.4).abs() <= 3.0 * p.stderr;
    Ok((
        ok,
        format!("mean {:.5} ± {:.5}, exhaustive 0.4", p.mean, p.stderr),
    ))
}

fn orbit_counting(options: &ValidationOptions) -> Result<(bool, String)> {
    let max_n = options.level.pick(7, 9);
    for big_n in 1..=max_n {
        for h in 0..=big_n {
            for n in 1..=big_n {
                let total: num_bigint::BigUint = enumerate_orbit_terms(n, big_n, h)?
                    .iter()
                    .filter_map(|t| t.exact_weight.clone())
                    .sum();
                if total != stabilizer_state_count(big_n, big_n - h) {
                    return Ok((
                        false,
                        format!("orbit sizes miscount at N={big_n}, H={h}, n={n}"),
                    ));
                }
            }
        }
    }
    if !hessian_negative_definite() {
        return Ok((false, "log-weight Hessian is not negative definite".into()));
    }
    Ok((
        true,
        format!("orbit sizes sum to the state count for N <= {max_n}"),
    ))
}

fn exact_vs_monte_carlo(options: &ValidationOptions) -> Result<(bool, String)> {
    let mut config = ExperimentConfig::new(5, 3, Mode::Holevo);
    config.ensemble = Ensemble::GlobalClifford;
    config.samples = options.level.pick(10_000, 100_000);
    config.master_seed = options.master_seed;
    let sweep = run_sweep(&config)?;
    let mut worst = 0.0f64;
    for p in &sweep.points {
        let exact = holevo_exact(p.n, 5, 3)?;
        let diff = (p.mean - exact).abs();
        if diff > 3.0 * p.stderr + 1e-12 {
            return Ok((
                false,
                format!(
                    "n={}: simulated {:.5} ± {:.5}, exact {exact:.5}",
                    p.n, p.mean, p.stderr
                ),
            ));
        }
        if p.stderr > 0.0 {
            worst = worst.max(diff / p.stderr);
        }
    }
    Ok((
        true,
        format!(
            "N=5, H=3, {} samples: max deviation {worst:.2} stderr",
            config.samples
        ),
    ))
}

fn depth_convergence(options: &ValidationOptions) -> Result<(bool, String)> {
    let mut config = ExperimentConfig::new(12, 5, Mode::Holevo);
    config.samples = options.level.pick(2_000, 10_000);
    config.master_seed = options.master_seed;
    let at3 = run_sweep(&config)?;
    config.depth_rule = DepthRule::MultipleOfN(4);
    let at4 = run_sweep(&config)?;
    for c in compare_sweeps(&at3, &at4) {
        if c.difference.abs() > 3.0 * c.combined_stderr + 1e-12 {
            return Ok((
                false,
                format!(
                    "n={}: 3N and 4N differ by {:.4} (stderr {:.4})",
                    c.n, c.difference, c.combined_stderr
                ),
            ));
        }
    }
    Ok((
        true,
        format!(
            "N=12, H=5: t=3N and t=4N agree at every n ({} samples)",
            config.samples
        ),
    ))
}
