//! One function per subcommand, each returning JSON results and a flat table.

use serde_json::{json, Value};
use sop_core::algebra::{format_poly, parse_poly};
use sop_core::counting::{closed_point_tally, count_linear_subspaces, point_counts, ZetaTruncation};
use sop_core::groebner::{groebner_basis, GroebnerBasis};
use sop_core::idealfile::IdealFile;
use sop_core::noether::full_sop;
use sop_core::pidlattice::{verify_arithmetic_example, Preset};
use sop_core::sieve::{
    check_prop51_bound, estimate_prob_params, exact_prob_params, predict_prob, Measurement, ProbEstimate, TrialConfig,
};
use sop_core::{is_parameters, Budget, ParamTuple, ProjScheme};

use crate::args::{GlobalOpts, LatticePreset, TupleShape};
use crate::report::Table;
use crate::{builtin, cells, CliError};

pub struct Outcome {
    pub inputs: Value,
    pub results: Value,
    pub table: Table,
    /// A search ran out of trials.
    pub search_failed: bool,
}

impl Outcome {
    fn new(inputs: Value, results: Value, table: Table) -> Outcome {
        Outcome { inputs, results, table, search_failed: false }
    }
}

pub struct Loaded {
    pub source: String,
    pub file: IdealFile,
    pub scheme: ProjScheme,
}

impl Loaded {
    fn inputs(&self) -> Value {
        json!({ "ideal": self.source, "ideal_text": self.file.to_text() })
    }

    fn with(&self, extra: Value) -> Value {
        let mut v = self.inputs();
        if let (Some(map), Value::Object(more)) = (v.as_object_mut(), extra) {
            map.extend(more);
        }
        v
    }
}

pub fn load_ideal(source: &str) -> Result<Loaded, CliError> {
    let text = match std::fs::read_to_string(source) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => builtin::lookup(source)
            .ok_or_else(|| CliError::Input(format!("'{source}' is neither a readable file nor a built-in ideal")))?
            .to_string(),
        Err(e) => return Err(CliError::Io { path: source.to_string(), source: e }),
    };
    let file = IdealFile::parse(&text)?;
    let scheme = file.scheme()?;
    Ok(Loaded { source: source.to_string(), file, scheme })
}

/// `q^{(k+1)·binom(n-k+d, n-k)}`, the scale at which failures are counted
/// in contained `(n-k)`-planes.
fn plane_scale(q: u32, n: i32, d: u32, k: usize) -> f64 {
    let m = (n - k as i32) as u64;
    let b = (1..=m).fold(1f64, |acc, i| acc * (d as u64 + i) as f64 / i as f64);
    (q as f64).powf((k as f64 + 1.0) * b.round())
}

fn estimate_table(shape: TupleShape, est: &ProbEstimate) -> Table {
    let mut t = Table::new(&["d", "k", "trials", "successes", "p_hat", "stderr", "ci95_lo", "ci95_hi", "failure"]);
    t.push(cells![shape.d, shape.k, est.trials, est.successes, est.p_hat, est.stderr, est.ci95[0], est.ci95[1], est.failure()]);
    t
}

pub fn prob(x: &Loaded, shape: TupleShape, trials: u64, g: &GlobalOpts) -> Result<Outcome, CliError> {
    let cfg = TrialConfig { d: shape.d, k: shape.k, trials, master_seed: g.seed, workers: g.workers };
    let est = estimate_prob_params(&x.scheme, &cfg)?;
    let n = x.scheme.n();
    let mut results = serde_json::to_value(est).expect("serializable");
    results["failure"] = json!(est.failure());
    if (shape.k as i32) < n {
        results["ratio"] = json!(est.failure() * plane_scale(x.scheme.field().order(), n, shape.d, shape.k));
    }
    let inputs = x.with(json!({ "d": shape.d, "k": shape.k, "trials": trials }));
    Ok(Outcome::new(inputs, results, estimate_table(shape, &est)))
}

pub fn prob_exact(x: &Loaded, shape: TupleShape, g: &GlobalOpts) -> Result<Outcome, CliError> {
    let e = exact_prob_params(&x.scheme, shape.d, shape.k, &g.budget(), g.workers)?;
    let (num, den) = e.reduced();
    let results = json!({
        "successes": e.successes,
        "total": e.total,
        "p_exact": e.value(),
        "fraction": format!("{num}/{den}"),
    });
    let mut t = Table::new(&["d", "k", "successes", "total", "p_exact"]);
    t.push(cells![shape.d, shape.k, e.successes, e.total, e.value()]);
    Ok(Outcome::new(x.with(json!({ "d": shape.d, "k": shape.k })), results, t))
}

pub fn predict(x: &Loaded, shape: TupleShape, e_lin: u32, g: &GlobalOpts) -> Result<Outcome, CliError> {
    let p = predict_prob(&x.scheme, shape.d, shape.k, e_lin, &g.budget())?;
    let results = json!({
        "prediction": p.value,
        "kind": p.kind,
        "e_lin": p.e_lin,
        "planes": p.planes,
    });
    let mut t = Table::new(&["d", "k", "e_lin", "prediction", "planes"]);
    t.push(cells![shape.d, shape.k, e_lin, p.value, p.planes.map_or(String::new(), |n| n.to_string())]);
    Ok(Outcome::new(x.with(json!({ "d": shape.d, "k": shape.k, "e_lin": e_lin })), results, t))
}

pub fn zeta(x: &Loaded, s: u32, e: usize, g: &GlobalOpts) -> Result<Outcome, CliError> {
    if s < 1 || e < 1 {
        return Err(CliError::Input("s and e must be at least 1".into()));
    }
    let counts = point_counts(&x.scheme, e, &g.budget())?;
    let tally = closed_point_tally(&counts)?;
    let z = ZetaTruncation::from_tally(&tally, s);
    let results = json!({ "value": z.value, "counts": counts.counts(), "closed_points": tally.a() });
    let mut t = Table::new(&["s", "e", "value"]);
    t.push(cells![s, e, z.value]);
    Ok(Outcome::new(x.with(json!({ "s": s, "e": e })), results, t))
}

pub fn points(x: &Loaded, e: usize, g: &GlobalOpts) -> Result<Outcome, CliError> {
    let counts = point_counts(&x.scheme, e, &g.budget())?;
    let tally = closed_point_tally(&counts)?;
    let results = json!({ "q": counts.q(), "counts": counts.counts(), "closed_points": tally.a() });
    let mut t = Table::new(&["ell", "points", "closed_points"]);
    for (i, (n, a)) in counts.counts().iter().zip(tally.a()).enumerate() {
        t.push(cells![i + 1, n, a]);
    }
    Ok(Outcome::new(x.with(json!({ "e": e })), results, t))
}

pub fn lines(x: &Loaded, m: usize, list: bool, g: &GlobalOpts) -> Result<Outcome, CliError> {
    let census = count_linear_subspaces(&x.scheme, m, &g.budget())?;
    let mut results = json!({ "m": m, "count": census.count });
    if list {
        results["planes"] = json!(census.planes.iter().map(|p| p.rows()).collect::<Vec<_>>());
    }
    let mut t = Table::new(&["m", "count"]);
    t.push(cells![m, census.count]);
    Ok(Outcome::new(x.with(json!({ "m": m, "list": list })), results, t))
}

fn basis(x: &Loaded) -> Result<GroebnerBasis, CliError> {
    let s = &x.scheme;
    if s.gens().is_empty() {
        return Ok(GroebnerBasis::zero_ideal(s.field(), s.nvars()));
    }
    Ok(groebner_basis(s.gens())?)
}

pub fn hilbert(x: &Loaded, d: u32, to: Option<u32>) -> Result<Outcome, CliError> {
    let to = to.unwrap_or(d);
    if to < d {
        return Err(CliError::Input(format!("--to {to} is below --d {d}")));
    }
    let gb = basis(x)?;
    let values: Vec<_> = (d..=to).map(|e| gb.hilbert_function(e)).collect();
    let mut t = Table::new(&["d", "value"]);
    for h in &values {
        t.push(cells![h.d, h.value]);
    }
    let results = json!({ "values": values, "proj_dim": x.scheme.n() });
    Ok(Outcome::new(x.with(json!({ "d": d, "to": to })), results, t))
}

pub fn dim(x: &Loaded) -> Result<Outcome, CliError> {
    let s = &x.scheme;
    let gb = basis(x)?;
    let gens: Vec<String> = gb.generators().iter().map(|p| format_poly(p, &x.file.vars)).collect();
    let results = json!({
        "r": s.r(),
        "proj_dim": s.n(),
        "krull_dim": gb.krull_dimension(),
        "deghat": s.deghat_bound(),
        "deghat_exact": s.deghat_value().is_some(),
        "degree_product": s.degree_product(),
        "groebner_basis": gens,
    });
    let mut t = Table::new(&["r", "proj_dim", "deghat", "degree_product"]);
    t.push(cells![s.r(), s.n(), s.deghat_bound(), s.degree_product()]);
    Ok(Outcome::new(x.inputs(), results, t))
}

pub fn check_params(x: &Loaded, tuple: &str) -> Result<Outcome, CliError> {
    let s = &x.scheme;
    let polys = tuple
        .split(';')
        .map(|t| parse_poly(t.trim(), s.field(), &x.file.vars))
        .collect::<sop_core::Result<Vec<_>>>()?;
    let t = ParamTuple::from_polys(polys)?;
    let verdict = is_parameters(s, &t)?;
    let results = json!({
        "is_parameters": verdict,
        "k": t.k(),
        "degree": t.degree(),
        "dim_before": s.n(),
        "dim_after": s.dim_with(t.polys()),
    });
    let mut table = Table::new(&["k", "degree", "dim_after", "is_parameters"]);
    table.push(cells![t.k(), t.degree(), s.dim_with(t.polys()), verdict]);
    Ok(Outcome::new(x.with(json!({ "tuple": tuple })), results, table))
}

pub fn bound(x: &Loaded, shape: TupleShape, exact: bool, trials: u64, g: &GlobalOpts) -> Result<Outcome, CliError> {
    let measurement = if exact {
        Measurement::Exact(exact_prob_params(&x.scheme, shape.d, shape.k, &g.budget(), g.workers)?)
    } else {
        let cfg = TrialConfig { d: shape.d, k: shape.k, trials, master_seed: g.seed, workers: g.workers };
        Measurement::MonteCarlo(estimate_prob_params(&x.scheme, &cfg)?)
    };
    let check = check_prop51_bound(&x.scheme, shape.d, shape.k, &measurement)?;
    let mut t = Table::new(&["d", "k", "bound", "measured", "stderr", "holds"]);
    t.push(cells![shape.d, shape.k, check.bound, check.measured, check.stderr, check.holds]);
    let inputs = if exact {
        x.with(json!({ "d": shape.d, "k": shape.k, "exact": true }))
    } else {
        x.with(json!({ "d": shape.d, "k": shape.k, "exact": false, "trials": trials }))
    };
    Ok(Outcome::new(inputs, serde_json::to_value(check).expect("serializable"), t))
}

pub fn find_sop(x: &Loaded, max_trials: Option<u64>, g: &GlobalOpts) -> Result<Outcome, CliError> {
    let max_trials = max_trials.unwrap_or(g.max_trials_search);
    let out = full_sop(&x.scheme, max_trials, g.seed, g.workers)?;
    let tuple: Option<Vec<String>> =
        out.tuple.as_ref().map(|t| t.polys().iter().map(|p| format_poly(p, &x.file.vars)).collect());
    let results = json!({
        "plan": out.plan,
        "partial_trial": out.partial_trial,
        "unit_trial": out.unit_trial,
        "tuple": tuple,
        "is_parameters": out.tuple.is_some(),
        "failure": out.failure,
    });
    let mut t = Table::new(&["d1", "d2", "final_degree", "partial_trial", "unit_trial", "found"]);
    let opt = |v: Option<u64>| v.map_or(String::new(), |v| v.to_string());
    t.push(cells![
        out.plan.d1,
        out.plan.d2,
        out.plan.final_degree,
        opt(out.partial_trial),
        opt(out.unit_trial),
        out.tuple.is_some()
    ]);
    let mut o = Outcome::new(x.with(json!({ "max_trials": max_trials })), results, t);
    o.search_failed = out.tuple.is_none();
    Ok(o)
}

#[allow(clippy::too_many_arguments)]
pub fn lattice(
    preset: LatticePreset,
    dmax: u32,
    p: u64,
    q: u64,
    d: u32,
    coeff_degree: u32,
    budget: &Budget,
) -> Result<Outcome, CliError> {
    let preset = match preset {
        LatticePreset::Deg60 => Preset::Deg60 { d_max: dmax },
        LatticePreset::FlatZz => Preset::FlatZZ,
        LatticePreset::KtTwoPoints => Preset::KtTwoPoints { p, d_max: dmax },
        LatticePreset::StCounterexample => Preset::StCounterexample { q, d, coeff_degree },
    };
    let report = verify_arithmetic_example(preset, budget)?;
    let mut t = Table::new(&["preset", "pass_set", "found", "agrees"]);
    let pass = report.pass_set.as_ref().map_or(String::new(), |s| {
        s.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
    });
    t.push(cells![
        report.preset,
        pass,
        report.found.map_or(String::new(), |f| f.to_string()),
        report.agrees.map_or(String::new(), |a| a.to_string())
    ]);
    let inputs = json!({ "preset": report.preset, "params": report.params });
    Ok(Outcome::new(inputs, serde_json::to_value(&report).expect("serializable"), t))
}

pub fn ideals() -> Outcome {
    let mut t = Table::new(&["name", "text"]);
    let mut list = serde_json::Map::new();
    for (name, text) in builtin::IDEALS {
        t.push(cells![name, text]);
        list.insert(name.to_string(), json!(text));
    }
    Outcome::new(json!({}), Value::Object(list), t)
}
