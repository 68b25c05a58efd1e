//! Worked arithmetic examples: finite point sets over `Z`, `F_p[t]` and
//! `F_q[s, t]`, and the degrees at which one form is a unit on all of them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::ring::{FpPoly, Integers, Pid};
use super::smith::{evaluation_matrix, unit_vector_in_image};
use crate::algebra::{Field, Monomial, Poly};
use crate::budget::Budget;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// `[1:4] ∪ [3:5] ∪ [4:5] ⊂ P^1_Z`, degrees `1..=d_max`.
    Deg60 { d_max: u32 },
    /// `V(x(3x - 5y)) ⊂ P^1_Z` and the form `4x - 7y`.
    FlatZZ,
    /// `[1:1+t] ∪ [1-t:1] ⊂ P^1_{F_p[t]}`, degrees `1..=d_max`.
    KtTwoPoints { p: u64, d_max: u32 },
    /// `[s:1] ∪ [1:t] ⊂ P^1_{F_q[s,t]}`: exhaustive search for a degree-`d`
    /// form whose coefficients have total degree at most `coeff_degree`.
    StCounterexample { q: u64, d: u32, coeff_degree: u32 },
}

impl Preset {
    pub fn name(&self) -> &'static str {
        match self {
            Preset::Deg60 { .. } => "deg60",
            Preset::FlatZZ => "flatZZ",
            Preset::KtTwoPoints { .. } => "kt_two_points",
            Preset::StCounterexample { .. } => "st_counterexample",
        }
    }
}

/// A value of a form at a point, and whether it is a unit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointValue {
    pub point: String,
    pub value: String,
    pub unit: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LatticeReport {
    pub preset: &'static str,
    pub params: BTreeMap<&'static str, u64>,
    /// Degrees at which some form is a unit at every point.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass_set: Option<Vec<u32>>,
    /// Whether the search found a form.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub found: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluations: Option<Vec<PointValue>>,
    pub paper_claim: String,
    /// `None` when the report records values without a verdict.
    pub agrees: Option<bool>,
}

/// Degrees in `1..=d_max` at which the evaluation matrix has a unit vector in
/// its image.
fn pass_set<R: Pid>(ring: &R, points: &[Vec<R::Elem>], d_max: u32, budget: &Budget) -> Result<Vec<u32>> {
    let verdicts: Vec<Result<bool>> = (1..=d_max)
        .into_par_iter()
        .map(|d| unit_vector_in_image(&evaluation_matrix(ring, points, d)?, budget))
        .collect();
    let mut out = Vec::new();
    for (d, v) in (1..=d_max).zip(verdicts) {
        if v? {
            out.push(d);
        }
    }
    Ok(out)
}

fn multiples(m: u32, d_max: u32) -> Vec<u32> {
    (1..=d_max).filter(|d| d % m == 0).collect()
}

/// Runs a preset and compares the outcome with the expected pattern.
pub fn verify_arithmetic_example(preset: Preset, budget: &Budget) -> Result<LatticeReport> {
    let mut report = LatticeReport {
        preset: preset.name(),
        params: BTreeMap::new(),
        pass_set: None,
        found: None,
        evaluations: None,
        paper_claim: String::new(),
        agrees: None,
    };
    match preset {
        Preset::Deg60 { d_max } => {
            let points: Vec<Vec<BigInt>> =
                [[1, 4], [3, 5], [4, 5]].iter().map(|p| p.iter().map(|&c| BigInt::from(c)).collect()).collect();
            let set = pass_set(&Integers, &points, d_max, budget)?;
            report.params.insert("d_max", d_max as u64);
            report.agrees = Some(set == multiples(60, d_max));
            report.pass_set = Some(set);
            report.paper_claim = "pass iff 60 divides d".into();
        }
        Preset::KtTwoPoints { p, d_max } => {
            let ring = FpPoly::new(&Field::prime(p)?);
            let t = ring.t();
            let points = vec![vec![ring.one(), ring.add(&ring.one(), &t)], vec![ring.sub(&ring.one(), &t), ring.one()]];
            let set = pass_set(&ring, &points, d_max, budget)?;
            report.params.insert("p", p);
            report.params.insert("d_max", d_max as u64);
            report.agrees = Some(set == multiples(p as u32, d_max));
            report.pass_set = Some(set);
            report.paper_claim = "pass iff p divides d".into();
        }
        Preset::FlatZZ => {
            let z = Integers;
            let form = [BigInt::from(4), BigInt::from(-7)];
            let components = [[0, 1], [5, 3]];
            let evaluations = components
                .iter()
                .map(|pt| {
                    let value = &form[0] * pt[0] + &form[1] * pt[1];
                    PointValue { point: format!("[{}:{}]", pt[0], pt[1]), unit: z.is_unit(&value), value: value.to_string() }
                })
                .collect();
            let points: Vec<Vec<BigInt>> =
                components.iter().map(|p| p.iter().map(|&c| BigInt::from(c)).collect()).collect();
            let linear = unit_vector_in_image(&evaluation_matrix(&z, &points, 1)?, budget)?;
            report.evaluations = Some(evaluations);
            report.found = Some(linear);
            report.paper_claim = "4x - 7y generates a finite extension".into();
        }
        Preset::StCounterexample { q, d, coeff_degree } => {
            let field = Field::with_order(q)?;
            let found = st_search(&field, d, coeff_degree, budget)?;
            report.params.insert("q", q);
            report.params.insert("d", d as u64);
            report.params.insert("coeff_degree", coeff_degree as u64);
            report.agrees = Some(!found);
            report.found = Some(found);
            report.paper_claim = "no such form exists for any d".into();
        }
    }
    Ok(report)
}

/// Exhaustive search for `f = Σ c_i x^{d-i} y^i`, `c_i ∈ F_q[s, t]` of total
/// degree `≤ coeff_degree`, with `f(s, 1)` and `f(1, t)` both nonzero
/// constants.
fn st_search(field: &Field, d: u32, coeff_degree: u32, budget: &Budget) -> Result<bool> {
    let monomials: Vec<Monomial> = (0..=coeff_degree).flat_map(|e| crate::algebra::monomials_of_degree(2, e)).collect();
    let q = field.order() as u64;
    let per = monomials.len() as u32;
    let needed = (q as f64).powf((per * (d + 1)) as f64);
    if needed > budget.max_enum as f64 {
        return Err(Error::budget("coefficient enumeration", needed, budget.max_enum as f64));
    }
    let total = q.pow(per * (d + 1));
    let s = Poly::var(field, 2, 0);
    let t = Poly::var(field, 2, 1);
    // f(s, 1) = Σ c_i s^{d-i}; f(1, t) = Σ c_i t^i
    let s_powers: Vec<Poly> = (0..=d).map(|i| s.pow(d - i)).collect::<Result<_>>()?;
    let t_powers: Vec<Poly> = (0..=d).map(|i| t.pow(i)).collect::<Result<_>>()?;
    let is_unit = |p: &Poly| p.terms().len() == 1 && p.terms()[0].0 == Monomial::ONE;
    let found = (0..total).into_par_iter().any(|mut idx| {
        let coeffs: Vec<Poly> = (0..=d)
            .map(|_| {
                let terms: Vec<(Monomial, u32)> = monomials
                    .iter()
                    .map(|&m| {
                        let c = (idx % q) as u32;
                        idx /= q;
                        (m, c)
                    })
                    .collect();
                Poly::from_terms(field, 2, terms)
            })
            .collect();
        let combine = |powers: &[Poly]| {
            coeffs.iter().zip(powers).fold(Poly::zero(field, 2), |acc, (c, p)| {
                acc.add(&c.mul(p).expect("same ring")).expect("same ring")
            })
        };
        is_unit(&combine(&s_powers)) && is_unit(&combine(&t_powers))
    });
    Ok(found)
}
