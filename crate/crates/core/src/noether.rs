//! Effective Noether normalization over a finite field.
//!
//! A full system of parameters is built in two random searches: `n` forms
//! of a base degree `d` cutting `X` down to a finite scheme `X'`, then one
//! form of degree `d^{n+1}` missing `X'` entirely. Raising the first `n` forms
//! to the power `d^n` gives `n + 1` parameters of the common degree
//! `d^{n+1}`.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{stream_rng, Poly};
use crate::error::{Error, Result};
use crate::parallel::with_workers;
use crate::scheme::{is_parameters, parameters_unchecked, ParamTuple, ProjScheme};
use crate::sieve::draw_tuple;

/// Degrees used by the two-step construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NoetherPlan {
    pub q: u64,
    pub n: u32,
    pub deghat: u64,
    /// Base degree.
    pub d: u64,
    /// Degree of the `n` partial parameters (equal to `d`).
    pub d1: u64,
    /// Degree of the last parameter (`d^{n+1}`, or `d` when `n = 0`).
    pub d2: u64,
    pub final_degree: u64,
    /// Whether the degree hypotheses of the two search steps hold.
    pub checks: (bool, bool),
}

impl NoetherPlan {
    pub fn new(q: u64, n: u32, deghat: u64) -> NoetherPlan {
        if n == 0 {
            let d = unit_parameter_min_degree(q, deghat);
            return NoetherPlan { q, n, deghat, d, d1: d, d2: d, final_degree: d, checks: (true, true) };
        }
        let d = theorem_c_min_degree(q, n, deghat);
        let d2 = d.pow(n + 1);
        // X ∩ V(g_0, …, g_{n-1}) has deghat at most deghat · d^n
        let deghat_cut = deghat.saturating_mul(d.pow(n));
        let checks = cor52_checks(q, n, deghat, d, d2, deghat_cut);
        NoetherPlan { q, n, deghat, d, d1: d, d2, final_degree: d2, checks }
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// Smallest `d ≥ 1` with `max{d, q/d^n} ≥ deghat` and
/// `q^d > deghat · n · d^n`, both compared in exact integers.
///
/// For `n = 0` the second condition is void and the answer is the degree at
/// which a single form can avoid a finite scheme:
/// the smallest `d` with `max{d + 1, q} ≥ deghat`.
pub fn theorem_c_min_degree(q: u64, n: u32, deghat: u64) -> u64 {
    if n == 0 {
        return unit_parameter_min_degree(q, deghat);
    }
    (1u64..)
        .find(|&d| theorem_c_conditions(q, n, deghat, d))
        .expect("q^d outgrows any polynomial in d")
}

/// Both conditions of [`theorem_c_min_degree`] at a given `d`.
pub fn theorem_c_conditions(q: u64, n: u32, deghat: u64, d: u64) -> bool {
    let dn = big(d).pow(n);
    let first = d >= deghat || big(q) >= big(deghat) * &dn;
    let second = big(q).pow(d as u32) > big(deghat) * big(n as u64) * &dn;
    first && second
}

fn unit_parameter_min_degree(q: u64, deghat: u64) -> u64 {
    if q >= deghat {
        1
    } else {
        deghat.saturating_sub(1).max(1)
    }
}

/// The two degree hypotheses:
/// `n · deghat · d1^{n-1} < q^{d1+1}` for `n` forms of degree `d1` to be
/// parameters, and `max{d2 + 1, q} ≥ deghat'` for one form of degree `d2` to
/// avoid a finite scheme with `deghat'`.
pub fn cor52_checks(q: u64, n: u32, deghat: u64, d1: u64, d2: u64, deghat_finite: u64) -> (bool, bool) {
    let lhs = big(n as u64) * big(deghat) * big(d1).pow(n.saturating_sub(1));
    let first = n == 0 || lhs < big(q).pow(d1 as u32 + 1);
    let second = (d2 + 1).max(q) >= deghat_finite;
    (first, second)
}

/// Random-search settings. Trial `i` draws from stream `stream_base + i` of
/// `master_seed`; the lowest successful trial index wins, whatever the
/// worker count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub max_trials: u64,
    pub master_seed: u64,
    pub stream_base: u64,
    pub workers: usize,
}

/// A successful search: the forms found and the trial that found them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchHit<T> {
    pub trial: u64,
    pub value: T,
}

fn search<T: Send>(cfg: &SearchConfig, attempt: impl Fn(u64) -> Option<T> + Sync) -> Result<Option<SearchHit<T>>> {
    with_workers(cfg.workers, || {
        (0..cfg.max_trials)
            .into_par_iter()
            .find_map_first(|i| attempt(i).map(|value| SearchHit { trial: i, value }))
    })
}

/// Searches for `n` forms of degree `d` that are parameters on `X`.
pub fn find_partial_sop(x: &ProjScheme, d: u32, cfg: &SearchConfig) -> Result<Option<SearchHit<Vec<Poly>>>> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let n = x.n() as usize;
    if n == 0 {
        return Ok((cfg.max_trials > 0).then(|| SearchHit { trial: 0, value: Vec::new() }));
    }
    search(cfg, |i| {
        let polys = draw_tuple(x, d, n - 1, cfg.master_seed, cfg.stream_base + i);
        parameters_unchecked(x, &polys).then_some(polys)
    })
}

/// Searches for a form of degree `d2` vanishing nowhere on the finite scheme
/// `x0`.
pub fn find_unit_parameter(x0: &ProjScheme, d2: u32, cfg: &SearchConfig) -> Result<Option<SearchHit<Poly>>> {
    if x0.n() != 0 {
        return Err(Error::InvalidArgument(format!("expected a finite scheme, got dimension {}", x0.n())));
    }
    if d2 == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    search(cfg, |i| {
        let mut rng = stream_rng(cfg.master_seed, cfg.stream_base + i);
        let f = Poly::random_homogeneous(x0.field(), x0.nvars(), d2, &mut rng);
        (x0.dim_with(std::slice::from_ref(&f)) == -1).then_some(f)
    })
}

/// `(g_0^{d^n}, …, g_{n-1}^{d^n}, g_n)`, verified to be parameters on `X`.
pub fn assemble_full_sop(gs: &[Poly], gn: &Poly, x: &ProjScheme) -> Result<ParamTuple> {
    let n = x.n();
    if gs.len() as i32 != n {
        return Err(Error::LengthMismatch { expected: n.max(0) as usize, got: gs.len() });
    }
    let d = match gs.first() {
        Some(g) => g.homogeneous_degree().ok_or(Error::Inhomogeneous)?,
        None => gn.homogeneous_degree().ok_or(Error::Inhomogeneous)?,
    };
    let power = d.checked_pow(n as u32).ok_or(Error::ExponentOverflow)?;
    let top = power.checked_mul(d).ok_or(Error::ExponentOverflow)?;
    if gs.iter().any(|g| g.homogeneous_degree() != Some(d)) {
        return Err(Error::DegreeMismatch { expected: d });
    }
    if gn.homogeneous_degree() != Some(if n == 0 { d } else { top }) {
        return Err(Error::DegreeMismatch { expected: top });
    }
    let mut polys = gs.iter().map(|g| g.pow(power)).collect::<Result<Vec<_>>>()?;
    polys.push(gn.clone());
    let tuple = ParamTuple::from_polys(polys)?;
    if !is_parameters(x, &tuple)? {
        return Err(Error::Verification("assembled tuple is not a system of parameters".into()));
    }
    Ok(tuple)
}

/// Result of the full construction. A failed search is an outcome, not an
/// error: `tuple` is `None` and `failure` names the step.
#[derive(Clone, Debug)]
pub struct NoetherOutcome {
    pub plan: NoetherPlan,
    pub partial_trial: Option<u64>,
    pub unit_trial: Option<u64>,
    pub tuple: Option<ParamTuple>,
    pub failure: Option<String>,
}

/// Streams for the last-parameter search start here, away from the first
/// search's streams.
const UNIT_STREAM_BASE: u64 = 1 << 40;

/// Runs both searches at the planned degrees and assembles the result.
/// `max_trials` caps each search separately.
pub fn full_sop(x: &ProjScheme, max_trials: u64, master_seed: u64, workers: usize) -> Result<NoetherOutcome> {
    let q = x.field().order() as u64;
    let n = x.n() as u32;
    let plan = NoetherPlan::new(q, n, x.deghat_bound());
    let mut outcome = NoetherOutcome { plan, partial_trial: None, unit_trial: None, tuple: None, failure: None };
    let degree = |v: u64| u32::try_from(v).ok().filter(|&v| v < 128).ok_or(Error::ExponentOverflow);
    let partial_cfg = SearchConfig { max_trials, master_seed, stream_base: 0, workers };
    let Some(partial) = find_partial_sop(x, degree(plan.d1)?, &partial_cfg)? else {
        outcome.failure = Some(format!("no partial system of degree {} in {max_trials} trials", plan.d1));
        return Ok(outcome);
    };
    outcome.partial_trial = Some(partial.trial);
    let x0 = x.intersect(&partial.value)?;
    let unit_cfg = SearchConfig { stream_base: UNIT_STREAM_BASE, ..partial_cfg };
    let Some(unit) = find_unit_parameter(&x0, degree(plan.d2)?, &unit_cfg)? else {
        outcome.failure = Some(format!("no last parameter of degree {} in {max_trials} trials", plan.d2));
        return Ok(outcome);
    };
    outcome.unit_trial = Some(unit.trial);
    outcome.tuple = Some(assemble_full_sop(&partial.value, &unit.value, x)?);
    Ok(outcome)
}
