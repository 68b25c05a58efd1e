//! How often random tuples of forms are parameters: Monte Carlo estimates,
//! exhaustive counts, and the predictions they are compared against.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{stream_rng, Poly};
use crate::budget::Budget;
use crate::counting::{count_linear_subspaces, zeta_inv_truncated};
use crate::error::{Error, Result};
use crate::groebner::{hilbert_function, ideal_intersection};
use crate::parallel::with_workers;
use crate::scheme::{parameters_unchecked, ProjScheme};

/// One Monte Carlo experiment: `trials` independent tuples
/// `(f_0, …, f_k)` of uniformly random degree-`d` forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TrialConfig {
    pub d: u32,
    pub k: usize,
    pub trials: u64,
    pub master_seed: u64,
    pub workers: usize,
}

impl TrialConfig {
    fn validate(&self, x: &ProjScheme) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        if self.d == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        if self.k as i32 > x.n() {
            return Err(Error::IndexTooLarge { k: self.k, n: x.n() });
        }
        Ok(())
    }
}

/// Success count with its normal-approximation error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ProbEstimate {
    pub successes: u64,
    pub trials: u64,
    pub p_hat: f64,
    pub stderr: f64,
    pub ci95: [f64; 2],
}

impl ProbEstimate {
    pub fn from_counts(successes: u64, trials: u64) -> ProbEstimate {
        let p_hat = successes as f64 / trials as f64;
        let stderr = (p_hat * (1.0 - p_hat) / trials as f64).sqrt();
        let half = 1.96 * stderr;
        ProbEstimate { successes, trials, p_hat, stderr, ci95: [p_hat - half, p_hat + half] }
    }

    /// `1 - p_hat`.
    pub fn failure(&self) -> f64 {
        1.0 - self.p_hat
    }
}

/// The tuple drawn by trial `index`: the forms `f_0, …, f_k` in order from the
/// random stream `index` of `master_seed`.
pub fn draw_tuple(x: &ProjScheme, d: u32, k: usize, master_seed: u64, index: u64) -> Vec<Poly> {
    let mut rng = stream_rng(master_seed, index);
    (0..=k).map(|_| Poly::random_homogeneous(x.field(), x.nvars(), d, &mut rng)).collect()
}

/// Fraction of random tuples that are parameters on `X`.
///
/// Trial `i` draws from its own stream, so the result depends on
/// `master_seed` and `trials` only, not on the worker count.
pub fn estimate_prob_params(x: &ProjScheme, cfg: &TrialConfig) -> Result<ProbEstimate> {
    cfg.validate(x)?;
    let successes = with_workers(cfg.workers, || {
        (0..cfg.trials)
            .into_par_iter()
            .filter(|&i| parameters_unchecked(x, &draw_tuple(x, cfg.d, cfg.k, cfg.master_seed, i)))
            .count() as u64
    })?;
    Ok(ProbEstimate::from_counts(successes, cfg.trials))
}

/// Exact parameter count over all of `S_d^{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactProb {
    pub successes: u64,
    pub total: u64,
}

impl ExactProb {
    pub fn value(&self) -> f64 {
        self.successes as f64 / self.total as f64
    }

    /// The probability in lowest terms.
    pub fn reduced(&self) -> (u64, u64) {
        let g = self.successes.gcd(&self.total);
        (self.successes / g, self.total / g)
    }
}

/// Enumerates every tuple in `S_d^{k+1}`; needs
/// `q^{(k+1)·dim S_d} ≤ budget.max_enum`.
pub fn exact_prob_params(x: &ProjScheme, d: u32, k: usize, budget: &Budget, workers: usize) -> Result<ExactProb> {
    if k as i32 > x.n() {
        return Err(Error::IndexTooLarge { k, n: x.n() });
    }
    let q = x.field().order() as u64;
    let dim = binomial(x.r() as u64 + d as u64, d as u64);
    let needed = (q as f64).powf(((k as u64 + 1) * dim) as f64);
    if needed > budget.max_enum as f64 {
        return Err(Error::budget("tuple enumeration", needed, budget.max_enum as f64));
    }
    let total = q.pow(((k as u64 + 1) * dim) as u32);
    let per = dim as usize;
    let successes = with_workers(workers, || {
        (0..total)
            .into_par_iter()
            .filter(|&idx| {
                let mut v = idx;
                let polys: Vec<Poly> = (0..=k)
                    .map(|_| {
                        let coeffs: Vec<u32> = (0..per)
                            .map(|_| {
                                let c = (v % q) as u32;
                                v /= q;
                                c
                            })
                            .collect();
                        Poly::from_coefficients(x.field(), x.nvars(), d, &coeffs)
                    })
                    .collect();
                parameters_unchecked(x, &polys)
            })
            .count() as u64
    })?;
    Ok(ExactProb { successes, total })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PredictionKind {
    /// `k = n`: the truncated inverse zeta value at `s = n + 1`.
    Zeta,
    /// `k < n`: inclusion–exclusion over unions of contained `(n-k)`-planes.
    LinearTruncation,
    /// The lower bound `1 - deghat·(1 + d + … + d^k)·q^{-binom(n-k+d, n-k)}`.
    Prop51Bound,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Prediction {
    pub kind: PredictionKind,
    pub value: f64,
    /// Maximum number of planes in a union, or the zeta truncation degree.
    pub e_lin: Option<u32>,
    /// Number of contained `(n-k)`-planes, for the linear truncation.
    pub planes: Option<u64>,
}

/// Predicted parameter probability.
///
/// For `k < n` every union `Z` of `1..=e_lin` distinct `(n-k)`-planes in `X`
/// contributes `(-1)^{|Z|-1} q^{-(k+1)·HF_Z(d)}` to the failure probability,
/// with the Hilbert function of the union taken from a Gröbner basis of the
/// intersection of the plane ideals. For `k = n` the value is the inverse
/// zeta function at `n + 1` truncated to closed points of degree `≤ e_lin`.
pub fn predict_prob(x: &ProjScheme, d: u32, k: usize, e_lin: u32, budget: &Budget) -> Result<Prediction> {
    let n = x.n();
    if k as i32 > n {
        return Err(Error::IndexTooLarge { k, n });
    }
    if k as i32 == n {
        let z = zeta_inv_truncated(x, n as u32 + 1, e_lin as usize, budget)?;
        return Ok(Prediction { kind: PredictionKind::Zeta, value: z.value, e_lin: Some(e_lin), planes: None });
    }
    let census = count_linear_subspaces(x, n as usize - k, budget)?;
    let ideals: Vec<Vec<Poly>> = census.planes.iter().map(|p| p.ideal(x.field())).collect();
    let unions: f64 = (1..=e_lin.min(ideals.len() as u32))
        .map(|j| binomial(ideals.len() as u64, j as u64) as f64)
        .sum();
    if unions > budget.max_points as f64 {
        return Err(Error::budget("plane unions", unions, budget.max_points as f64));
    }
    let q = x.field().order() as f64;
    let mut failure = 0.0;
    let mut stack: Vec<(usize, Vec<Poly>, u32)> =
        ideals.iter().enumerate().map(|(i, ideal)| (i, ideal.clone(), 1)).collect();
    while let Some((last, ideal, size)) = stack.pop() {
        let hf = hilbert_function(&ideal, x.r(), d)?.value;
        let term = q.powf(-(((k as u64 + 1) * hf) as f64));
        failure += if size % 2 == 1 { term } else { -term };
        if size < e_lin {
            for (j, other) in ideals.iter().enumerate().skip(last + 1) {
                stack.push((j, ideal_intersection(&ideal, other)?, size + 1));
            }
        }
    }
    Ok(Prediction {
        kind: PredictionKind::LinearTruncation,
        value: 1.0 - failure,
        e_lin: Some(e_lin),
        planes: Some(census.count),
    })
}

/// `binom(n-k+d, n-k)` and `deghat·(1 + d + … + d^k)` as exact integers.
fn prop51_terms(x: &ProjScheme, d: u32, k: usize) -> Result<(u32, BigInt)> {
    let n = x.n();
    if k as i32 >= n {
        return Err(Error::InvalidArgument(format!("the bound needs k < n, got k = {k}, n = {n}")));
    }
    let m = (n as u64) - k as u64;
    let exp = binomial(m + d as u64, m);
    let exp = u32::try_from(exp).map_err(|_| Error::InvalidArgument("bound exponent too large".into()))?;
    let geometric: BigInt = (0..=k as u32).map(|i| BigInt::from(d).pow(i)).sum();
    Ok((exp, geometric * BigInt::from(x.deghat_bound())))
}

/// `1 - deghat·(1 + d + … + d^k)·q^{-binom(n-k+d, n-k)}`, using the scheme's
/// supplied `deghat` or else its upper bound.
pub fn prop51_bound(x: &ProjScheme, d: u32, k: usize) -> Result<Prediction> {
    let (exp, a) = prop51_terms(x, d, k)?;
    let q = x.field().order() as f64;
    let a = a.to_f64().unwrap_or(f64::INFINITY);
    let value = 1.0 - a * q.powf(-(exp as f64));
    Ok(Prediction { kind: PredictionKind::Prop51Bound, value, e_lin: None, planes: None })
}

/// A measured probability to hold against the bound.
#[derive(Clone, Debug, PartialEq)]
pub enum Measurement {
    MonteCarlo(ProbEstimate),
    Exact(ExactProb),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheck {
    pub bound: f64,
    pub measured: f64,
    pub stderr: f64,
    /// Exact: the comparison itself. Monte Carlo: `bound ≤ p_hat + 5·stderr`,
    /// i.e. the measurement does not refute the bound.
    pub holds: bool,
    /// Monte Carlo only: `bound ≤ p_hat - 5·stderr`, the measurement confirms
    /// the bound.
    pub confirmed: Option<bool>,
}

/// Compares a measurement with [`prop51_bound`]. Exhaustive counts are
/// compared exactly in integers.
pub fn check_prop51_bound(x: &ProjScheme, d: u32, k: usize, measured: &Measurement) -> Result<BoundCheck> {
    let bound = prop51_bound(x, d, k)?.value;
    match measured {
        Measurement::Exact(e) => {
            let (exp, a) = prop51_terms(x, d, k)?;
            let qb = BigInt::from(x.field().order()).pow(exp);
            let lhs = BigInt::from(e.successes) * &qb;
            let rhs = BigInt::from(e.total) * (&qb - a);
            let holds = lhs >= rhs;
            Ok(BoundCheck { bound, measured: e.value(), stderr: 0.0, holds, confirmed: None })
        }
        Measurement::MonteCarlo(m) => Ok(BoundCheck {
            bound,
            measured: m.p_hat,
            stderr: m.stderr,
            holds: bound <= m.p_hat + 5.0 * m.stderr,
            confirmed: Some(bound <= m.p_hat - 5.0 * m.stderr),
        }),
    }
}
