//! Monte Carlo sweeps over subsystem size and depth.
//!
//! Every sample is a pure function of its [`SampleKey`], and per-point sums
//! are exact integers, so results are bit-identical for any worker count.

use std::fs;
use std::io::Write;
use std::path::Path;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clifford::{
    sample_global_clifford, sample_two_qubit_index, two_qubit_cliffords, TwoQubitClifford,
};
use crate::error::{invalid, Error, Result};
use crate::exact::{holevo_exact, linear_fit, LinearFit};
use crate::metrics::{check_ranges, draw_sample_spec, evaluate, Mode, SampleSpec};
use crate::packed::PackedState;
use crate::seeding::SampleKey;
use crate::state::{QubitSubset, StabilizerState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DepthRule {
    Explicit(usize),
    /// `t = k N`.
    MultipleOfN(usize),
}

impl DepthRule {
    pub fn depth(self, num_qubits: usize) -> usize {
        match self {
            DepthRule::Explicit(t) => t,
            DepthRule::MultipleOfN(k) => k * num_qubits,
        }
    }
}

/// Which random unitaries are averaged over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ensemble {
    BrickWall,
    /// Uniform over the full `N`-qubit Clifford group; depth is ignored.
    GlobalClifford,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub num_qubits: usize,
    pub amount: usize,
    pub mode: Mode,
    pub depth_rule: DepthRule,
    pub n_values: Vec<usize>,
    pub samples: u64,
    pub master_seed: u64,
    /// Samples between checkpoint flushes; 0 disables intermediate flushes.
    pub checkpoint_interval: u64,
    pub ensemble: Ensemble,
}

impl ExperimentConfig {
    /// Brick-wall sweep over every `n` at `t = 3N` with 10⁴ samples per point.
    pub fn new(num_qubits: usize, amount: usize, mode: Mode) -> Self {
        Self {
            num_qubits,
            amount,
            mode,
            depth_rule: DepthRule::MultipleOfN(3),
            n_values: (1..=num_qubits).collect(),
            samples: 10_000,
            master_seed: 0,
            checkpoint_interval: 0,
            ensemble: Ensemble::BrickWall,
        }
    }

    pub fn depth(&self) -> usize {
        match self.ensemble {
            Ensemble::BrickWall => self.depth_rule.depth(self.num_qubits),
            Ensemble::GlobalClifford => 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.ensemble == Ensemble::BrickWall && self.num_qubits < 2 {
            return Err(Error::TooFewQubits {
                min: 2,
                found: self.num_qubits,
            });
        }
        if self.n_values.is_empty() {
            return Err(invalid("n", "no subsystem sizes given"));
        }
        for &n in &self.n_values {
            check_ranges(self.num_qubits, self.amount, n)?;
        }
        if self.samples == 0 {
            return Err(invalid("samples", "must be at least 1"));
        }
        Ok(())
    }

    fn stream_tag(&self, dynamics: bool) -> u64 {
        let ensemble = match self.ensemble {
            Ensemble::BrickWall => 0,
            Ensemble::GlobalClifford => 1,
        };
        self.mode.tag() | ensemble << 1 | (dynamics as u64) << 2
    }

    fn key(&self, n: usize, depth: usize, index: u64, dynamics: bool) -> SampleKey {
        SampleKey {
            master_seed: self.master_seed,
            mode_tag: self.stream_tag(dynamics),
            num_qubits: self.num_qubits,
            amount: self.amount,
            n,
            depth,
            index,
        }
    }
}

/// Exact integer moments of integer-valued samples.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Accumulator {
    pub count: u64,
    pub sum: i64,
    pub sum_sq: i64,
}

impl Accumulator {
    pub fn single(value: i64) -> Self {
        Self {
            count: 1,
            sum: value,
            sum_sq: value * value,
        }
    }

    pub fn merge(self, other: Self) -> Self {
        Self {
            count: self.count + other.count,
            sum: self.sum + other.sum,
            sum_sq: self.sum_sq + other.sum_sq,
        }
    }

    pub fn mean(&self) -> f64 {
        self.sum as f64 / self.count as f64
    }

    /// Population standard deviation `sqrt((1/M) Σ (x - x̄)²)`.
    pub fn std(&self) -> f64 {
        let m = self.count as f64;
        // M Σx² - (Σx)² is exact in i128.
        let numer = self.count as i128 * self.sum_sq as i128 - (self.sum as i128).pow(2);
        (numer as f64).max(0.0).sqrt() / m
    }

    pub fn stderr(&self) -> f64 {
        self.std() / (self.count as f64).sqrt()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointResult {
    pub n: usize,
    pub count: u64,
    pub mean: f64,
    pub std: f64,
    pub stderr: f64,
}

impl PointResult {
    fn from_acc(n: usize, acc: &Accumulator) -> Self {
        Self {
            n,
            count: acc.count,
            mean: acc.mean(),
            std: acc.std(),
            stderr: acc.stderr(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub config: ExperimentConfig,
    pub depth: usize,
    pub points: Vec<PointResult>,
}

impl SweepResult {
    pub fn point(&self, n: usize) -> Option<&PointResult> {
        self.points.iter().find(|p| p.n == n)
    }
}

/// A qubit region with its complement precomputed for the packed engine.
struct Region {
    subset: QubitSubset,
    complement: Vec<usize>,
}

impl Region {
    fn new(subset: QubitSubset, num_qubits: usize) -> Self {
        let complement = subset.complement(num_qubits).iter().collect();
        Self { subset, complement }
    }
}

/// States evolved along one sample's trajectory.
enum Trajectory {
    Packed(Vec<PackedState>),
    Rows(Vec<StabilizerState>),
}

impl Trajectory {
    fn new(states: Vec<StabilizerState>) -> Self {
        match states
            .iter()
            .map(PackedState::from_state)
            .collect::<Option<Vec<_>>>()
        {
            Some(packed) => Trajectory::Packed(packed),
            None => Trajectory::Rows(states),
        }
    }

    #[inline]
    fn apply(&mut self, gate: &TwoQubitClifford, a: usize, b: usize) {
        match self {
            Trajectory::Packed(states) => states.iter_mut().for_each(|s| s.apply_gate(gate, a, b)),
            Trajectory::Rows(states) => states
                .iter_mut()
                .for_each(|s| s.apply_two_qubit_gate_unchecked(gate, a, b)),
        }
    }

    fn entropy(&self, k: usize, region: &Region) -> usize {
        match self {
            Trajectory::Packed(states) => {
                states[k].entropy_from_complement(region.subset.len(), &region.complement)
            }
            Trajectory::Rows(states) => states[k].subsystem_entropy_unchecked(&region.subset),
        }
    }

    /// Applies one brick-wall layer of freshly drawn gates.
    fn apply_random_layer<R: Rng + ?Sized>(
        &mut self,
        num_qubits: usize,
        layer: usize,
        rng: &mut R,
    ) {
        let gates = two_qubit_cliffords();
        let start = layer % 2;
        for k in 0..num_qubits / 2 {
            let a = start + 2 * k;
            let b = (a + 1) % num_qubits;
            self.apply(&gates[sample_two_qubit_index(rng)], a, b);
        }
    }
}

/// Initial states and measured regions of one sample.
fn prepare(spec: &SampleSpec) -> Result<(Trajectory, Vec<Region>)> {
    let n = spec.num_qubits;
    Ok(match spec.mode {
        Mode::Holevo => (
            Trajectory::new(vec![
                StabilizerState::new_mixed_encoding_state(n, &spec.encoded)?,
                StabilizerState::new_basis_state(n)?,
            ]),
            vec![Region::new(spec.q.clone(), n)],
        ),
        Mode::Coherent => {
            let total = n + spec.amount;
            let qr = QubitSubset::new(spec.q.iter().chain(n..total).collect(), total)?;
            (
                Trajectory::new(vec![StabilizerState::new_purified_state(
                    n,
                    spec.amount,
                    &spec.encoded,
                )?]),
                vec![Region::new(spec.q.clone(), total), Region::new(qr, total)],
            )
        }
    })
}

fn measure(mode: Mode, trajectory: &Trajectory, regions: &[Region]) -> i64 {
    match mode {
        Mode::Holevo => {
            trajectory.entropy(0, &regions[0]) as i64 - trajectory.entropy(1, &regions[0]) as i64
        }
        Mode::Coherent => {
            trajectory.entropy(0, &regions[0]) as i64 - trajectory.entropy(0, &regions[1]) as i64
        }
    }
}

/// Value of sample `index` at subsystem size `n`.
///
/// Brick-wall gates are drawn and applied layer by layer, in the same stream
/// order as [`crate::circuit::build_brick_wall`], so the result equals
/// building the circuit first.
pub fn sample_value(config: &ExperimentConfig, n: usize, index: u64) -> Result<i64> {
    let depth = config.depth();
    let mut rng = config.key(n, depth, index, false).rng();
    let spec = draw_sample_spec(
        config.num_qubits,
        config.amount,
        n,
        depth,
        config.mode,
        &mut rng,
    )?;
    match config.ensemble {
        Ensemble::BrickWall => {
            let (mut trajectory, regions) = prepare(&spec)?;
            for layer in 0..depth {
                trajectory.apply_random_layer(config.num_qubits, layer, &mut rng);
            }
            Ok(measure(spec.mode, &trajectory, &regions))
        }
        Ensemble::GlobalClifford => {
            let tableau = sample_global_clifford(config.num_qubits, &mut rng)?;
            Ok(evaluate(&spec, &tableau)?.value)
        }
    }
}

/// Every sample value at `n`, in index order.
pub fn sample_values(config: &ExperimentConfig, n: usize) -> Result<Vec<i64>> {
    config.validate()?;
    (0..config.samples)
        .into_par_iter()
        .map(|i| sample_value(config, n, i))
        .collect()
}

fn accumulate(
    config: &ExperimentConfig,
    n: usize,
    range: std::ops::Range<u64>,
) -> Result<Accumulator> {
    range
        .into_par_iter()
        .map(|i| sample_value(config, n, i).map(Accumulator::single))
        .try_reduce(Accumulator::default, |a, b| Ok(a.merge(b)))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct Checkpoint {
    config: ExperimentConfig,
    /// `(n, samples done, moments so far)`.
    progress: Vec<(usize, u64, Accumulator)>,
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Runs every sample of every `n` in the config.
pub fn run_sweep(config: &ExperimentConfig) -> Result<SweepResult> {
    run_sweep_checkpointed(config, None)
}

/// As [`run_sweep`], flushing moments to `checkpoint` every
/// `checkpoint_interval` samples and resuming from it if present.
pub fn run_sweep_checkpointed(
    config: &ExperimentConfig,
    checkpoint: Option<&Path>,
) -> Result<SweepResult> {
    config.validate()?;
    let mut state = Checkpoint {
        config: config.clone(),
        progress: config
            .n_values
            .iter()
            .map(|&n| (n, 0, Accumulator::default()))
            .collect(),
    };
    if let Some(path) = checkpoint.filter(|p| p.exists()) {
        let saved: Checkpoint = serde_json::from_slice(&fs::read(path)?)?;
        if saved.config != *config {
            return Err(invalid(
                "checkpoint",
                format!("{} was written for a different config", path.display()),
            ));
        }
        state = saved;
    }
    let chunk = if config.checkpoint_interval == 0 {
        config.samples
    } else {
        config.checkpoint_interval
    };
    for k in 0..state.progress.len() {
        loop {
            let (n, done, acc) = state.progress[k];
            if done >= config.samples {
                break;
            }
            let end = (done + chunk).min(config.samples);
            let part = accumulate(config, n, done..end)?;
            state.progress[k] = (n, end, acc.merge(part));
            if let Some(path) = checkpoint {
                write_atomic(path, &serde_json::to_vec(&state)?)?;
            }
        }
    }
    Ok(SweepResult {
        config: config.clone(),
        depth: config.depth(),
        points: state
            .progress
            .iter()
            .map(|(n, _, acc)| PointResult::from_acc(*n, acc))
            .collect(),
    })
}

/// Per-`n` difference between two sweeps with its combined standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointComparison {
    pub n: usize,
    pub difference: f64,
    pub combined_stderr: f64,
}

pub fn compare_sweeps(a: &SweepResult, b: &SweepResult) -> Vec<PointComparison> {
    a.points
        .iter()
        .filter_map(|p| {
            b.point(p.n).map(|q| PointComparison {
                n: p.n,
                difference: p.mean - q.mean,
                combined_stderr: p.stderr.hypot(q.stderr),
            })
        })
        .collect()
}

/// `χ̄_n` for every `n` under the exact global-Clifford average.
pub fn exact_reference(config: &ExperimentConfig) -> Result<Vec<(usize, f64)>> {
    config
        .n_values
        .iter()
        .map(|&n| Ok((n, holevo_exact(n, config.num_qubits, config.amount)?)))
        .collect()
}

/// Distance of the depth-`t` curve from the reference-depth curve.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceRow {
    pub t: usize,
    pub distance: f64,
    pub stderr: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DynamicsResult {
    pub config: ExperimentConfig,
    pub reference_depth: usize,
    /// In schedule order.
    pub rows: Vec<DistanceRow>,
    /// `(n, mean at the reference depth)`.
    pub reference_curve: Vec<(usize, f64)>,
    /// `curves[k][j]` is the mean at `rows[k].t` for `n_values[j]`.
    pub curves: Vec<Vec<f64>>,
}

impl DynamicsResult {
    pub fn row(&self, t: usize) -> Option<&DistanceRow> {
        self.rows.iter().find(|r| r.t == t)
    }
}

/// `D(t) = Σ_n (χ̄_n^t - χ̄_n^ref)²` for each `t` in the schedule.
///
/// One trajectory per sample is run to `reference_depth` and measured at
/// every scheduled depth on the way, so the difference to the reference is
/// taken within each trajectory. The standard error of `D` uses the
/// delta-method variance `Σ_n (4 Δ_n² se_n² + 2 se_n⁴)` of the squared
/// paired mean differences.
pub fn run_dynamics(
    config: &ExperimentConfig,
    t_schedule: &[usize],
    reference_depth: usize,
) -> Result<DynamicsResult> {
    config.validate()?;
    if config.ensemble != Ensemble::BrickWall {
        return Err(invalid("ensemble", "dynamics needs brick-wall circuits"));
    }
    if t_schedule.is_empty() {
        return Err(invalid("t_schedule", "empty schedule"));
    }
    if let Some(&t) = t_schedule.iter().find(|&&t| t > reference_depth) {
        return Err(invalid(
            "t_schedule",
            format!("depth {t} exceeds the reference depth {reference_depth}"),
        ));
    }
    let mut depths: Vec<usize> = t_schedule.to_vec();
    depths.push(reference_depth);
    depths.sort_unstable();
    depths.dedup();
    let ref_slot = depths.len() - 1;

    let mut per_n = Vec::with_capacity(config.n_values.len());
    for &n in &config.n_values {
        let zero = || vec![(Accumulator::default(), Accumulator::default()); depths.len()];
        let moments = (0..config.samples)
            .into_par_iter()
            .map(|i| -> Result<Vec<(Accumulator, Accumulator)>> {
                let mut rng = config.key(n, reference_depth, i, true).rng();
                let spec = draw_sample_spec(
                    config.num_qubits,
                    config.amount,
                    n,
                    reference_depth,
                    config.mode,
                    &mut rng,
                )?;
                let (mut trajectory, regions) = prepare(&spec)?;
                let mut values = Vec::with_capacity(depths.len());
                let mut layer = 0;
                for &t in &depths {
                    while layer < t {
                        trajectory.apply_random_layer(config.num_qubits, layer, &mut rng);
                        layer += 1;
                    }
                    values.push(measure(spec.mode, &trajectory, &regions));
                }
                let last = values[ref_slot];
                Ok(values
                    .into_iter()
                    .map(|v| (Accumulator::single(v), Accumulator::single(v - last)))
                    .collect())
            })
            .try_reduce(zero, |a, b| {
                Ok(a.into_iter()
                    .zip(b)
                    .map(|((x1, d1), (x2, d2))| (x1.merge(x2), d1.merge(d2)))
                    .collect())
            })?;
        per_n.push(moments);
    }

    let slot = |t: usize| depths.binary_search(&t).expect("depth scheduled");
    let rows = t_schedule
        .iter()
        .map(|&t| {
            let k = slot(t);
            let (mut distance, mut var) = (0.0, 0.0);
            for moments in &per_n {
                let d = &moments[k].1;
                let (delta, se) = (d.mean(), d.stderr());
                distance += delta * delta;
                var += 4.0 * delta * delta * se * se + 2.0 * se.powi(4);
            }
            DistanceRow {
                t,
                distance,
                stderr: var.sqrt(),
            }
        })
        .collect();
    let curves = t_schedule
        .iter()
        .map(|&t| per_n.iter().map(|m| m[slot(t)].0.mean()).collect())
        .collect();
    let reference_curve = config
        .n_values
        .iter()
        .zip(&per_n)
        .map(|(&n, m)| (n, m[ref_slot].0.mean()))
        .collect();
    Ok(DynamicsResult {
        config: config.clone(),
        reference_depth,
        rows,
        reference_curve,
        curves,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecayRate {
    pub rate: f64,
    /// Smallest per-step decay slope inside the window.
    pub lower: f64,
    /// Largest per-step decay slope inside the window.
    pub upper: f64,
}

/// Average slope of `ln D` between `t` and `t_prime`, with the spread of
/// the per-step slopes between consecutive scheduled depths in the window.
pub fn decay_rate(dynamics: &DynamicsResult, t: usize, t_prime: usize) -> Result<DecayRate> {
    if t == t_prime {
        return Err(invalid("window", "endpoints must differ"));
    }
    let (lo, hi) = (t.min(t_prime), t.max(t_prime));
    for end in [lo, hi] {
        if dynamics.row(end).is_none() {
            return Err(invalid(
                "window",
                format!("depth {end} is not in the schedule"),
            ));
        }
    }
    let mut window: Vec<&DistanceRow> = dynamics
        .rows
        .iter()
        .filter(|r| r.t >= lo && r.t <= hi)
        .collect();
    window.sort_by_key(|r| r.t);
    window.dedup_by_key(|r| r.t);
    if let Some(r) = window.iter().find(|r| !(r.distance > 0.0)) {
        return Err(Error::DegenerateDistance { t: r.t });
    }
    let ln = |r: &DistanceRow| r.distance.ln();
    let rate = (ln(window[0]) - ln(window[window.len() - 1])).abs() / (hi - lo) as f64;
    let steps: Vec<f64> = window
        .windows(2)
        .map(|w| (ln(w[0]) - ln(w[1])) / (w[1].t - w[0].t) as f64)
        .collect();
    let lower = steps.iter().copied().fold(f64::INFINITY, f64::min);
    let upper = steps.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(DecayRate { rate, lower, upper })
}

/// `E|Q ∩ encoded| = n H / N`, the depth-zero Holevo average.
pub fn depth_zero_holevo(num_qubits: usize, amount: usize, n: usize) -> f64 {
    (n * amount) as f64 / num_qubits as f64
}

/// A family of systems at a fixed ratio `N : amount`, probed at one subsystem
/// size on each side of the transition region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalingFamily {
    pub base_qubits: usize,
    pub base_amount: usize,
    pub n_below: usize,
    pub n_above: usize,
}

impl ScalingFamily {
    fn validate(&self) -> Result<()> {
        let (n, h) = (self.base_qubits, self.base_amount);
        if h == 0 || h > n {
            return Err(invalid("amount", format!("must lie in [1, {n}], got {h}")));
        }
        if 2 * self.n_below >= n {
            return Err(invalid(
                "n_below",
                format!("{}/{} is not below 1/2", self.n_below, n),
            ));
        }
        if 2 * self.n_above <= n + h || self.n_above > n {
            return Err(invalid(
                "n_above",
                format!("{}/{n} is not above the second transition", self.n_above),
            ));
        }
        Ok(())
    }
}

/// Monte Carlo settings for the optional simulated scaling points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScalingSimulation {
    pub samples: u64,
    pub master_seed: u64,
    pub depth_rule: DepthRule,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingPoint {
    pub family: usize,
    pub num_qubits: usize,
    pub amount: usize,
    pub n_below: usize,
    pub n_above: usize,
    /// `χ̄` at `n_below`.
    pub delta1: f64,
    /// `amount - χ̄` at `n_above`.
    pub delta2: f64,
    /// Simulated `(Δ₁, stderr, Δ₂, stderr)`.
    pub simulated: Option<(f64, f64, f64, f64)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScalingResult {
    pub points: Vec<ScalingPoint>,
    /// Fits of `ln Δ₁` and `ln Δ₂` against `N`, one pair per family; empty
    /// when fewer than two multiples are given.
    pub fits: Vec<(LinearFit, LinearFit)>,
}

/// `Δ₁` and `Δ₂` for every family scaled by each multiple, from the exact
/// average and optionally from brick-wall simulation.
pub fn finite_size_scaling(
    families: &[ScalingFamily],
    multiples: &[usize],
    simulation: Option<ScalingSimulation>,
) -> Result<ScalingResult> {
    let mut points = Vec::new();
    let mut fits = Vec::new();
    for (f, fam) in families.iter().enumerate() {
        fam.validate()?;
        let mut xs = Vec::new();
        let (mut y1, mut y2) = (Vec::new(), Vec::new());
        for &k in multiples {
            let (big_n, h) = (k * fam.base_qubits, k * fam.base_amount);
            let (nb, na) = (k * fam.n_below, k * fam.n_above);
            let delta1 = holevo_exact(nb, big_n, h)?;
            let delta2 = h as f64 - holevo_exact(na, big_n, h)?;
            let simulated = match simulation {
                None => None,
                Some(sim) => {
                    let mut cfg = ExperimentConfig::new(big_n, h, Mode::Holevo);
                    cfg.n_values = vec![nb, na];
                    cfg.samples = sim.samples;
                    cfg.master_seed = sim.master_seed;
                    cfg.depth_rule = sim.depth_rule;
                    let r = run_sweep(&cfg)?;
                    let (b, a) = (r.points[0], r.points[1]);
                    Some((b.mean, b.stderr, h as f64 - a.mean, a.stderr))
                }
            };
            xs.push(big_n as f64);
            y1.push(delta1.ln());
            y2.push(delta2.ln());
            points.push(ScalingPoint {
                family: f,
                num_qubits: big_n,
                amount: h,
                n_below: nb,
                n_above: na,
                delta1,
                delta2,
                simulated,
            });
        }
        if y1.iter().chain(&y2).any(|y| !y.is_finite()) {
            return Err(invalid("family", format!("family {f} has a vanishing gap")));
        }
        if multiples.len() < 2 {
            continue;
        }
        fits.push((linear_fit(&xs, &y1)?, linear_fit(&xs, &y2)?));
    }
    Ok(ScalingResult { points, fits })
}
