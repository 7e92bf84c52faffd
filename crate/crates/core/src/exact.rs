//! Exact Clifford-orbit averages of subsystem entropy.
//!
//! Under a uniformly random `U ∈ Cl(n) × Cl(m)` applied to a stabilizer state
//! with `N - h` generators, the state lands in one of the orbits labelled by
//! `(k1, k2, l1, l2)` with probability proportional to the orbit size
//! `t = |Cl(n)| |Cl(m)| / |Stab|`. Each orbit has subsystem entropy `n - l1`
//! on the `n`-qubit side.
//!
//! Orbit sizes span thousands of binary orders of magnitude, so the log
//! path keeps `log2 t` as an exact integer part plus a small correction
//! built from `log2(1 - 2^-a)` terms. Averages are taken as deficits below
//! the ceiling `min(n, N + h - n)`, which stay accurate when the average
//! sits exponentially close to the ceiling.

use std::cmp::Ordering;
use std::f64::consts::LN_2;

use nalgebra::Matrix3;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};

/// Largest `N` for which orbit weights are also kept as exact integers.
pub const EXACT_MAX_QUBITS: usize = 30;

/// `log2` of a positive integer as an exact integer part plus a small real part.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Log2 {
    pub int: i64,
    pub frac: f64,
}

impl Log2 {
    pub const ZERO: Log2 = Log2 { int: 0, frac: 0.0 };

    pub fn value(self) -> f64 {
        self.int as f64 + self.frac
    }

    fn add(self, other: Log2) -> Log2 {
        Log2 {
            int: self.int + other.int,
            frac: self.frac + other.frac,
        }
    }

    fn sub(self, other: Log2) -> Log2 {
        Log2 {
            int: self.int - other.int,
            frac: self.frac - other.frac,
        }
    }

    /// `2^(self - other)` without forming either value.
    fn ratio_to(self, other: Log2) -> f64 {
        ((self.int - other.int) as f64 + (self.frac - other.frac)).exp2()
    }
}

/// `log2(1 - 2^-a)` for `a ≥ 1`.
fn log2_one_minus_pow2(a: u32) -> f64 {
    (-(-(a as f64)).exp2()).ln_1p() / LN_2
}

/// `|Cl(N)| = ∏_{j=1}^{N} 2 (4^j - 1) 4^j`, modulo phases.
pub fn clifford_group_order(num_qubits: usize) -> BigUint {
    (1..=num_qubits as u32).fold(BigUint::one(), |acc, j| {
        let four_j = BigUint::one() << (2 * j);
        acc * 2u32 * (&four_j - 1u32) * four_j
    })
}

pub fn log2_clifford_group_order(num_qubits: usize) -> Log2 {
    let n = num_qubits as i64;
    Log2 {
        int: n + 2 * n * (n + 1),
        frac: (1..=num_qubits as u32)
            .map(|j| log2_one_minus_pow2(2 * j))
            .sum(),
    }
}

/// `|GL(k, 2)| = ∏_{j<k} (2^k - 2^j)`.
fn general_linear_order(k: usize) -> BigUint {
    let two_k = BigUint::one() << k;
    (0..k).fold(BigUint::one(), |acc, j| {
        acc * (&two_k - (BigUint::one() << j))
    })
}

fn log2_general_linear_order(k: usize) -> Log2 {
    Log2 {
        int: (k * k) as i64,
        frac: (1..=k as u32).map(log2_one_minus_pow2).sum(),
    }
}

/// One orbit label. `h1 = n - k1 - k2 - l1` and `h2 = m - k1 - k2 - l2` are
/// the numbers of qubits on each side left out of every block.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitTerm {
    pub k1: usize,
    pub k2: usize,
    pub l1: usize,
    pub l2: usize,
    /// `log2` of the orbit size.
    pub log2_weight: Log2,
    /// Exact orbit size when `N ≤ EXACT_MAX_QUBITS`.
    pub exact_weight: Option<BigUint>,
}

impl OrbitTerm {
    pub fn tuple(&self) -> (usize, usize, usize, usize) {
        (self.k1, self.k2, self.l1, self.l2)
    }

    pub fn h1(&self, n: usize) -> usize {
        n - self.k1 - self.k2 - self.l1
    }

    pub fn h2(&self, m: usize) -> usize {
        m - self.k1 - self.k2 - self.l2
    }

    /// Entropy in bits of the `n`-qubit side.
    pub fn entropy(&self, n: usize) -> usize {
        n - self.l1
    }
}

fn check_term(
    term: (usize, usize, usize, usize),
    n: usize,
    m: usize,
    h: usize,
) -> Result<(usize, usize)> {
    let (k1, k2, l1, l2) = term;
    let bad = || Error::InvalidOrbitTerm {
        term: (k1 as u32, k2 as u32, l1 as u32, l2 as u32),
        n: n as u32,
        m: m as u32,
        h: h as u32,
    };
    if 2 * k1 + k2 + l1 + l2 + h != n + m || k1 + k2 + l1 > n || k1 + k2 + l2 > m {
        return Err(bad());
    }
    Ok((n - k1 - k2 - l1, m - k1 - k2 - l2))
}

/// Power of two in `|Stab|` collected from every block.
fn stab_two_exponent(k1: usize, k2: usize, l1: usize, l2: usize, h1: usize, h2: usize) -> u64 {
    let [k1, k2, l1, l2, h1, h2] = [k1, k2, l1, l2, h1, h2].map(|v| v as u64);
    let pair_block = 2 * k1 * (k2 + l1) + 2 * k1 * l2;
    let shared = 3 * k2
        + (k2 * (k2 + 2 * l1 + 1) + k2 * (k2 + 2 * l2 + 1)) / 2
        + 2 * h1 * k2
        + 2 * h2 * k2
        + l1 * k2
        + l2 * k2;
    let local1 = l1 + l1 * (l1 + 1) / 2 + 2 * h1 * l1;
    let local2 = l2 + l2 * (l2 + 1) / 2 + 2 * h2 * l2;
    pair_block + shared + local1 + local2
}

/// Number of stabilizer states on `num_qubits` qubits with `g` generators,
/// `2^g ∏_{i<g} (4^{N-i} - 1) / (2^{i+1} - 1)`.
pub fn stabilizer_state_count(num_qubits: usize, g: usize) -> BigUint {
    assert!(g <= num_qubits);
    let mut num = BigUint::one() << g;
    let mut den = BigUint::one();
    for i in 0..g {
        num *= (BigUint::one() << (2 * (num_qubits - i))) - 1u32;
        den *= (BigUint::one() << (i + 1)) - 1u32;
    }
    num / den
}

/// Order of the subgroup of `Cl(n) × Cl(m)` fixing a representative state of
/// the orbit `term`.
pub fn stabilizer_subgroup_order(
    term: (usize, usize, usize, usize),
    n: usize,
    m: usize,
    h: usize,
) -> Result<BigUint> {
    let (h1, h2) = check_term(term, n, m, h)?;
    let (k1, k2, l1, l2) = term;
    let e = stab_two_exponent(k1, k2, l1, l2, h1, h2);
    Ok(clifford_group_order(k1)
        * general_linear_order(k2)
        * general_linear_order(l1)
        * general_linear_order(l2)
        * clifford_group_order(h1)
        * clifford_group_order(h2)
        << e as usize)
}

pub fn log2_stabilizer_subgroup_order(
    term: (usize, usize, usize, usize),
    n: usize,
    m: usize,
    h: usize,
) -> Result<Log2> {
    let (h1, h2) = check_term(term, n, m, h)?;
    let (k1, k2, l1, l2) = term;
    let e = stab_two_exponent(k1, k2, l1, l2, h1, h2);
    Ok(log2_clifford_group_order(k1)
        .add(log2_general_linear_order(k2))
        .add(log2_general_linear_order(l1))
        .add(log2_general_linear_order(l2))
        .add(log2_clifford_group_order(h1))
        .add(log2_clifford_group_order(h2))
        .add(Log2 {
            int: e as i64,
            frac: 0.0,
        }))
}

fn check_sizes(n: usize, num_qubits: usize, h: usize) -> Result<()> {
    if num_qubits == 0 {
        return Err(Error::TooFewQubits { min: 1, found: 0 });
    }
    if !(1..=num_qubits).contains(&n) {
        return Err(invalid(
            "n",
            format!("must lie in [1, {num_qubits}], got {n}"),
        ));
    }
    if h > num_qubits {
        return Err(invalid(
            "h",
            format!("must lie in [0, {num_qubits}], got {h}"),
        ));
    }
    Ok(())
}

/// Every orbit label for an `n`-qubit cut of `N` qubits carrying `h` bits of
/// entropy, with its orbit size.
pub fn enumerate_orbit_terms(n: usize, num_qubits: usize, h: usize) -> Result<Vec<OrbitTerm>> {
    check_sizes(n, num_qubits, h)?;
    let m = num_qubits - n;
    let g = num_qubits - h;
    let exact = num_qubits <= EXACT_MAX_QUBITS;
    let log_group = log2_clifford_group_order(n).add(log2_clifford_group_order(m));
    let group = exact.then(|| clifford_group_order(n) * clifford_group_order(m));
    let mut out = Vec::new();
    for k1 in 0..=n.min(m).min(g / 2) {
        for k2 in 0..=(n - k1).min(m - k1).min(g - 2 * k1) {
            for l1 in 0..=(n - k1 - k2).min(g - 2 * k1 - k2) {
                let l2 = g - 2 * k1 - k2 - l1;
                if k1 + k2 + l2 > m {
                    continue;
                }
                let term = (k1, k2, l1, l2);
                let log2_weight = log_group.sub(log2_stabilizer_subgroup_order(term, n, m, h)?);
                let exact_weight = match &group {
                    Some(group) => {
                        let stab = stabilizer_subgroup_order(term, n, m, h)?;
                        debug_assert!((group % &stab).is_zero());
                        Some(group / stab)
                    }
                    None => None,
                };
                out.push(OrbitTerm {
                    k1,
                    k2,
                    l1,
                    l2,
                    log2_weight,
                    exact_weight,
                });
            }
        }
    }
    Ok(out)
}

/// Largest possible entropy of `n` qubits out of `N` when the whole system
/// carries `h` bits: `min(n, N + h - n)`.
pub fn entropy_ceiling(n: usize, num_qubits: usize, h: usize) -> usize {
    n.min(num_qubits + h - n)
}

/// `E[ceiling - S_n]` from the log-domain weights.
fn deficit_log_domain(terms: &[OrbitTerm], n: usize, ceiling: usize) -> f64 {
    let l1_min = n - ceiling;
    let top = terms
        .iter()
        .map(|t| t.log2_weight)
        .max_by(|a, b| a.value().total_cmp(&b.value()))
        .expect("orbit term list is never empty");
    let mut num = 0.0;
    let mut den = 0.0;
    for t in terms {
        let w = t.log2_weight.ratio_to(top);
        den += w;
        num += (t.l1 - l1_min) as f64 * w;
    }
    num / den
}

fn deficit_rational(terms: &[OrbitTerm], n: usize, ceiling: usize) -> BigRational {
    let l1_min = n - ceiling;
    let mut num = BigUint::zero();
    let mut den = BigUint::zero();
    for t in terms {
        let w = t.exact_weight.as_ref().expect("exact weights present");
        den += w;
        num += w * BigUint::from(t.l1 - l1_min);
    }
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn entropy_deficit(n: usize, num_qubits: usize, h: usize) -> Result<f64> {
    let terms = enumerate_orbit_terms(n, num_qubits, h)?;
    let ceiling = entropy_ceiling(n, num_qubits, h);
    Ok(if num_qubits <= EXACT_MAX_QUBITS {
        deficit_rational(&terms, n, ceiling)
            .to_f64()
            .expect("bounded rational converts")
    } else {
        deficit_log_domain(&terms, n, ceiling)
    })
}

/// Exact `E S_{n,h}` as a fraction, for `N ≤ EXACT_MAX_QUBITS`.
pub fn expected_entropy_rational(n: usize, num_qubits: usize, h: usize) -> Result<BigRational> {
    if num_qubits > EXACT_MAX_QUBITS {
        return Err(Error::OracleTooLarge {
            max: EXACT_MAX_QUBITS,
            found: num_qubits,
        });
    }
    let terms = enumerate_orbit_terms(n, num_qubits, h)?;
    let ceiling = entropy_ceiling(n, num_qubits, h);
    Ok(BigRational::from_integer(BigInt::from(ceiling)) - deficit_rational(&terms, n, ceiling))
}

/// `E S_{n,h}` from the log-domain weights only, at any `N`.
pub fn expected_entropy_log_domain(n: usize, num_qubits: usize, h: usize) -> Result<f64> {
    let terms = enumerate_orbit_terms(n, num_qubits, h)?;
    let ceiling = entropy_ceiling(n, num_qubits, h);
    Ok(ceiling as f64 - deficit_log_domain(&terms, n, ceiling))
}

/// `E S_{n,h} = Σ (n - l1) t / Σ t` in bits; exact arithmetic when `N ≤ 30`.
pub fn expected_entropy_exact(n: usize, num_qubits: usize, h: usize) -> Result<f64> {
    Ok(entropy_ceiling(n, num_qubits, h) as f64 - entropy_deficit(n, num_qubits, h)?)
}

/// One row of an exact Holevo curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExactPoint {
    pub n: usize,
    pub chi: f64,
    pub es_nh: f64,
    pub es_n0: f64,
}

/// `χ̄_n = E S_{n,H} - E S_{n,0}` with both entropies.
pub fn holevo_exact_point(n: usize, num_qubits: usize, amount: usize) -> Result<ExactPoint> {
    if !(1..=num_qubits).contains(&amount) {
        return Err(invalid(
            "H",
            format!("must lie in [1, {num_qubits}], got {amount}"),
        ));
    }
    let cap_h = entropy_ceiling(n, num_qubits, amount);
    let cap_0 = entropy_ceiling(n, num_qubits, 0);
    let d_h = entropy_deficit(n, num_qubits, amount)?;
    let d_0 = entropy_deficit(n, num_qubits, 0)?;
    let mut chi = (cap_h - cap_0) as f64 - d_h + d_0;
    if chi < 0.0 && chi > -1e-12 {
        chi = 0.0;
    }
    Ok(ExactPoint {
        n,
        chi,
        es_nh: cap_h as f64 - d_h,
        es_n0: cap_0 as f64 - d_0,
    })
}

/// Average Holevo information of `n` qubits under a uniformly random
/// `N`-qubit Clifford, in bits.
pub fn holevo_exact(n: usize, num_qubits: usize, amount: usize) -> Result<f64> {
    Ok(holevo_exact_point(n, num_qubits, amount)?.chi)
}

/// Exact `χ̄_n` as a fraction, for `N ≤ EXACT_MAX_QUBITS`.
pub fn holevo_exact_rational(n: usize, num_qubits: usize, amount: usize) -> Result<BigRational> {
    Ok(expected_entropy_rational(n, num_qubits, amount)?
        - expected_entropy_rational(n, num_qubits, 0)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExactCurve {
    pub num_qubits: usize,
    pub amount: usize,
    pub points: Vec<ExactPoint>,
}

pub fn exact_curve(num_qubits: usize, amount: usize, ns: &[usize]) -> Result<ExactCurve> {
    let points = ns
        .iter()
        .map(|&n| holevo_exact_point(n, num_qubits, amount))
        .collect::<Result<_>>()?;
    Ok(ExactCurve {
        num_qubits,
        amount,
        points,
    })
}

/// Average coherent information `E S_{n,C} - E S_{N-n,C}` under a uniformly
/// random `N`-qubit Clifford on the system of a purified `C`-qubit code.
pub fn coherent_exact(n: usize, num_qubits: usize, amount: usize) -> Result<f64> {
    if !(1..=num_qubits).contains(&amount) {
        return Err(invalid(
            "C",
            format!("must lie in [1, {num_qubits}], got {amount}"),
        ));
    }
    check_sizes(n, num_qubits, amount)?;
    let side = |k: usize| -> Result<f64> {
        if k == 0 {
            return Ok(0.0);
        }
        Ok(entropy_ceiling(k, num_qubits, amount) as f64 - entropy_deficit(k, num_qubits, amount)?)
    };
    let cap = |k: usize| {
        if k == 0 {
            0
        } else {
            entropy_ceiling(k, num_qubits, amount) as i64
        }
    };
    let rest = num_qubits - n;
    let d_rest = if rest == 0 {
        0.0
    } else {
        cap(rest) as f64 - side(rest)?
    };
    let d_n = cap(n) as f64 - side(n)?;
    Ok((cap(n) - cap(rest)) as f64 - d_n + d_rest)
}

/// Large-`N` limit of `χ̄/H` at `r_n = n/N`, `r_H = H/N`.
pub fn thermo_limit(r_n: f64, r_h: f64) -> Result<f64> {
    if !(r_h > 0.0 && r_h <= 1.0) {
        return Err(invalid("r_H", format!("must lie in (0, 1], got {r_h}")));
    }
    if !(r_n > 0.0 && r_n <= 1.0) {
        return Err(invalid("r_n", format!("must lie in (0, 1], got {r_n}")));
    }
    Ok(if r_n <= 0.5 {
        0.0
    } else if r_n <= (1.0 + r_h) / 2.0 {
        (2.0 * r_n - 1.0) / r_h
    } else {
        1.0
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transition {
    /// `r_n = 1/2`, where `χ̄` leaves zero.
    First,
    /// `r_n = (1 + r_H)/2`, where `χ̄` reaches `H`.
    Second,
}

/// Least-squares slope of `log|f(τ)|` against `log τ` near a transition of
/// the thermodynamic-limit curve.
pub fn critical_exponent_estimate(side: Transition, r_h: f64, taus: &[f64]) -> Result<f64> {
    if taus.len() < 2 {
        return Err(invalid("tau", "at least two values are needed for a slope"));
    }
    let mut xs = Vec::with_capacity(taus.len());
    let mut ys = Vec::with_capacity(taus.len());
    for &tau in taus {
        // τ must stay inside the linear branch on the relevant side.
        if !(tau > 0.0 && tau < r_h / 2.0) {
            return Err(invalid(
                "tau",
                format!(
                    "{tau} crosses a branch boundary (must lie in (0, {}))",
                    r_h / 2.0
                ),
            ));
        }
        let f = match side {
            Transition::First => thermo_limit(0.5 + tau, r_h)?,
            Transition::Second => 1.0 - thermo_limit((1.0 + r_h) / 2.0 - tau, r_h)?,
        };
        xs.push(tau.ln());
        ys.push(f.abs().ln());
    }
    let fit = linear_fit(&xs, &ys)?;
    Ok(fit.slope)
}

/// Ordinary least-squares line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<LinearFit> {
    if xs.len() != ys.len() {
        return Err(Error::DimensionMismatch {
            expected: xs.len(),
            found: ys.len(),
        });
    }
    let k = xs.len() as f64;
    if xs.len() < 2 {
        return Err(invalid(
            "points",
            "at least two points are needed for a fit",
        ));
    }
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if sxx == 0.0 {
        return Err(invalid("points", "all abscissae coincide"));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum();
    let r_squared = if syy == 0.0 { 1.0 } else { 1.0 - sse / syy };
    Ok(LinearFit {
        slope,
        intercept,
        r_squared,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `2n < N - h`
    Low,
    /// `N - h ≤ 2n ≤ N + h`
    Middle,
    /// `2n > N + h`
    High,
}

pub fn regime(n: usize, num_qubits: usize, h: usize) -> Regime {
    if 2 * n + h < num_qubits {
        Regime::Low
    } else if 2 * n <= num_qubits + h {
        Regime::Middle
    } else {
        Regime::High
    }
}

/// Closed-form maximizer of the orbit weight, or `None` when it is not an
/// integer tuple (odd `N - h` in the middle regime).
pub fn closed_form_argmax(
    n: usize,
    num_qubits: usize,
    h: usize,
) -> Option<(usize, usize, usize, usize)> {
    let big_n = num_qubits;
    match regime(n, big_n, h) {
        Regime::Low => Some((n, 0, 0, big_n - h - 2 * n)),
        Regime::Middle => ((big_n - h) % 2 == 0).then(|| ((big_n - h) / 2, 0, 0, 0)),
        Regime::High => Some((big_n - n, 0, 2 * n - big_n - h, 0)),
    }
}

fn compare_weight(a: &OrbitTerm, b: &OrbitTerm) -> Ordering {
    match (&a.exact_weight, &b.exact_weight) {
        (Some(x), Some(y)) => x.cmp(y),
        _ => a.log2_weight.value().total_cmp(&b.log2_weight.value()),
    }
}

/// Heaviest orbit by exhaustive search; ties go to the lexicographically
/// smallest `(k1, k2, l1, l2)`.
pub fn brute_force_argmax(n: usize, num_qubits: usize, h: usize) -> Result<OrbitTerm> {
    let terms = enumerate_orbit_terms(n, num_qubits, h)?;
    let mut best = &terms[0];
    for t in &terms[1..] {
        match compare_weight(t, best) {
            Ordering::Greater => best = t,
            Ordering::Equal if t.tuple() < best.tuple() => best = t,
            _ => {}
        }
    }
    Ok(best.clone())
}

/// The closed-form maximizer for the regime of `n`, falling back to the
/// exhaustive search when the closed form is not an integer tuple.
pub fn argmax_orbit_weight(n: usize, num_qubits: usize, h: usize) -> Result<OrbitTerm> {
    check_sizes(n, num_qubits, h)?;
    match closed_form_argmax(n, num_qubits, h) {
        Some(tuple) => enumerate_orbit_terms(n, num_qubits, h)?
            .into_iter()
            .find(|t| t.tuple() == tuple)
            .ok_or_else(|| invalid("n", "closed-form maximizer is not an admissible orbit")),
        None => brute_force_argmax(n, num_qubits, h),
    }
}

/// Hessian of the continuous log-weight in `(k1, k2, l1)`.
pub const LOG_WEIGHT_HESSIAN: [[f64; 3]; 3] =
    [[-8.0, -4.0, -6.0], [-4.0, -7.0, -3.0], [-6.0, -3.0, -6.0]];

pub fn hessian_negative_definite() -> bool {
    let h = Matrix3::from_fn(|i, j| LOG_WEIGHT_HESSIAN[i][j]);
    h.symmetric_eigen().eigenvalues.iter().all(|&l| l < 0.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KktVerdict {
    Satisfied,
    Violated,
    /// Negative multiplier next to a regime boundary, where the multiplier
    /// formulas no longer apply.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KktReport {
    pub regime: Regime,
    pub multipliers: [f64; 3],
    pub hessian_negative_definite: bool,
    pub verdict: KktVerdict,
}

impl KktReport {
    pub fn passed(&self) -> bool {
        self.verdict == KktVerdict::Satisfied && self.hessian_negative_definite
    }
}

/// Evaluates the Lagrange multipliers of the active constraints at the
/// closed-form maximizer and checks their signs.
pub fn verify_kkt(n: usize, num_qubits: usize, h: usize) -> Result<KktReport> {
    check_sizes(n, num_qubits, h)?;
    let (big_n, hf, nf) = (num_qubits as f64, h as f64, n as f64);
    let reg = regime(n, num_qubits, h);
    let multipliers = match reg {
        Regime::Low => [
            2.0 * (big_n - hf - 2.0 * nf - 1.0),
            big_n - hf - 2.0 * nf - 1.5,
            big_n + hf - 2.0 * nf - 2.0,
        ],
        Regime::Middle => [
            2.0 * nf + hf - big_n - 1.0,
            -0.5,
            big_n + hf - 2.0 * nf - 1.0,
        ],
        Regime::High => [
            hf + 2.0 * nf - big_n - 2.0,
            2.0 * nf - big_n - hf - 1.5,
            -2.0 * (1.0 + hf - 2.0 * nf + big_n),
        ],
    };
    let twice_n = 2 * n as i64;
    let to_boundary = (twice_n - (num_qubits as i64 - h as i64))
        .abs()
        .min((twice_n - (num_qubits + h) as i64).abs());
    let verdict = if multipliers.iter().all(|&m| m >= 0.0) {
        KktVerdict::Satisfied
    } else if to_boundary <= 3 {
        KktVerdict::Inconclusive
    } else {
        KktVerdict::Violated
    };
    Ok(KktReport {
        regime: reg,
        multipliers,
        hessian_negative_definite: hessian_negative_definite(),
        verdict,
    })
}
