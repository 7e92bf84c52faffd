use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scrambling_core::circuit::build_brick_wall;
use scrambling_core::clifford::{
    apply_global_clifford, sample_global_clifford, two_qubit_cliffords, two_qubit_index,
    TWO_QUBIT_CLIFFORD_COUNT,
};
use scrambling_core::exact::{clifford_group_order, holevo_exact};
use scrambling_core::harness::{
    finite_size_scaling, run_sweep, DepthRule, ExperimentConfig, ScalingFamily, ScalingSimulation,
};
use scrambling_core::validation::chi_square_uniform;
use scrambling_core::{
    holevo_sample, sample_two_qubit_clifford, Mode, QubitSubset, SampleSpec, StabilizerState,
};
use statrs::distribution::{ChiSquared, ContinuousCDF};

#[test]
fn enumeration_size_is_the_group_order() {
    assert_eq!(two_qubit_cliffords().len(), TWO_QUBIT_CLIFFORD_COUNT);
    assert_eq!(clifford_group_order(2), TWO_QUBIT_CLIFFORD_COUNT.into());
}

#[test]
fn two_qubit_sampler_is_uniform() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut counts = vec![0u64; TWO_QUBIT_CLIFFORD_COUNT];
    for _ in 0..2_000_000 {
        counts[two_qubit_index(&sample_two_qubit_clifford(&mut rng))] += 1;
    }
    let (_, p) = chi_square_uniform(&counts);
    assert!(p > 1e-3, "p = {p}");
}

/// `(S_0 of |00⟩, S_0 of the state with qubit 0 maximally mixed)` after `apply`.
fn outcome(apply: impl Fn(&mut StabilizerState)) -> usize {
    let q = QubitSubset::new(vec![0], 2).unwrap();
    let mut pure = StabilizerState::new_basis_state(2).unwrap();
    let mut mixed = StabilizerState::new_mixed_encoding_state(2, &q).unwrap();
    apply(&mut pure);
    apply(&mut mixed);
    2 * pure.subsystem_entropy(&q).unwrap() + mixed.subsystem_entropy(&q).unwrap()
}

#[test]
fn global_and_two_qubit_samplers_agree_on_entropy_outcomes() {
    let mut exact = [0f64; 4];
    for gate in two_qubit_cliffords() {
        exact[outcome(|s| s.apply_two_qubit_gate(gate, (0, 1)).unwrap())] += 1.0;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let draws = 100_000;
    let mut counts = [0u64; 4];
    for _ in 0..draws {
        let t = sample_global_clifford(2, &mut rng).unwrap();
        counts[outcome(|s| apply_global_clifford(s, &t).unwrap())] += 1;
    }
    let (mut stat, mut classes) = (0.0, 0);
    for (c, e) in counts.iter().zip(exact) {
        let expected = e / TWO_QUBIT_CLIFFORD_COUNT as f64 * draws as f64;
        if expected == 0.0 {
            assert_eq!(*c, 0);
            continue;
        }
        stat += (*c as f64 - expected).powi(2) / expected;
        classes += 1;
    }
    let p = ChiSquared::new((classes - 1) as f64).unwrap().sf(stat);
    assert!(p > 1e-3, "counts {counts:?}, exact {exact:?}, p = {p}");
}

/// Histogram of `χ` for fixed `Q` and encoded set, rotated by `shift`.
fn rotated_histogram(n: usize, shift: usize, samples: usize, seed: u64) -> [u64; 3] {
    let rot =
        |m: &[usize]| QubitSubset::new(m.iter().map(|&i| (i + shift) % n).collect(), n).unwrap();
    let spec = SampleSpec {
        num_qubits: n,
        amount: 2,
        n: 3,
        depth: 3 * n,
        mode: Mode::Holevo,
        q: rot(&[0, 1, 2]),
        encoded: rot(&[0, 3]),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hist = [0u64; 3];
    for _ in 0..samples {
        let circuit = build_brick_wall(n, 3 * n, &mut rng).unwrap();
        hist[holevo_sample(&spec, &circuit).unwrap().value as usize] += 1;
    }
    hist
}

fn homogeneity_p(a: &[u64], b: &[u64]) -> f64 {
    let (na, nb) = (a.iter().sum::<u64>() as f64, b.iter().sum::<u64>() as f64);
    let mut stat = 0.0;
    let mut dof = 0;
    for (&x, &y) in a.iter().zip(b) {
        let col = (x + y) as f64;
        if col == 0.0 {
            continue;
        }
        dof += 1;
        for (obs, total) in [(x as f64, na), (y as f64, nb)] {
            let e = col * total / (na + nb);
            stat += (obs - e).powi(2) / e;
        }
    }
    ChiSquared::new((dof - 1) as f64).unwrap().sf(stat)
}

#[test]
fn ring_rotation_leaves_outcome_distribution_unchanged() {
    let n = 6;
    let base = rotated_histogram(n, 0, 20_000, 1);
    for shift in [1, 2, 3] {
        let other = rotated_histogram(n, shift, 20_000, 100 + shift as u64);
        let p = homogeneity_p(&base, &other);
        assert!(p > 1e-3, "shift {shift}: {base:?} vs {other:?}, p = {p}");
    }
}

#[test]
fn single_qubit_of_two_retains_two_fifths_of_a_bit() {
    let mut c = ExperimentConfig::new(2, 1, Mode::Holevo);
    c.n_values = vec![1];
    c.depth_rule = DepthRule::Explicit(2);
    c.samples = 1_000_000;
    c.master_seed = 3;
    let p = run_sweep(&c).unwrap().points[0];
    assert!(
        (p.mean - 0.4).abs() <= 3.0 * p.stderr,
        "{} ± {}",
        p.mean,
        p.stderr
    );
}

#[test]
fn small_subsystems_hold_almost_nothing_after_deep_circuits() {
    let mut c = ExperimentConfig::new(19, 8, Mode::Holevo);
    c.n_values = vec![4];
    c.samples = 2_000;
    c.master_seed = 4;
    assert!(run_sweep(&c).unwrap().points[0].mean < 0.02);
}

#[test]
fn simulated_scaling_gap_matches_exact() {
    let family = ScalingFamily {
        base_qubits: 19,
        base_amount: 8,
        n_below: 8,
        n_above: 15,
    };
    let sim = ScalingSimulation {
        samples: 4_000,
        master_seed: 8,
        depth_rule: DepthRule::MultipleOfN(3),
    };
    let r = finite_size_scaling(&[family], &[1], Some(sim)).unwrap();
    let p = r.points[0];
    let (d1, se1, d2, se2) = p.simulated.unwrap();
    assert!(
        (d1 - p.delta1).abs() <= 3.0 * se1,
        "{d1} ± {se1} vs {}",
        p.delta1
    );
    assert!(
        (d2 - p.delta2).abs() <= 3.0 * se2,
        "{d2} ± {se2} vs {}",
        p.delta2
    );
    assert!(p.delta1 > 0.0);
    assert!((holevo_exact(19, 19, 8).unwrap() - 8.0).abs() < 1e-12);
}
