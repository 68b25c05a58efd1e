//! Reproduction of the published failure-rate tables at `d = 2`, `k = 1`.

use serde::Serialize;
use serde_json::json;
use sop_core::counting::count_linear_subspaces;
use sop_core::sieve::{estimate_prob_params, TrialConfig};

use crate::args::{GlobalOpts, TableExample};
use crate::commands::{load_ideal, Outcome};
use crate::report::Table;
use crate::{cells, CliError};

pub const MIN_TRIALS: u64 = 10_000;

#[derive(Debug, Serialize)]
struct Cell {
    ideal: &'static str,
    q: u32,
    failures: u64,
    failure: f64,
    stderr: f64,
    ci95: [f64; 2],
    paper: f64,
    tolerance: f64,
    within: bool,
}

/// `(built-in ideal, published failure rate)`, row by row.
const SURFACES: [(&str, f64); 6] = [
    ("xyz-f2", 0.2638),
    ("quadric-f2", 0.1179),
    ("xyz-f3", 0.0552),
    ("quadric-f3", 0.0059),
    ("xyz-f5", 0.0063),
    ("quadric-f5", 0.0004),
];

const FERMAT_RATE: f64 = 0.0062;
/// Failures tolerated on the cubic without lines, per 10^5 trials.
const NOLINE_FAILURES_PER_1E5: f64 = 5.0;

fn measure(ideal: &'static str, trials: u64, g: &GlobalOpts) -> Result<(u32, sop_core::sieve::ProbEstimate), CliError> {
    let x = load_ideal(ideal)?;
    let cfg = TrialConfig { d: 2, k: 1, trials, master_seed: g.seed, workers: g.workers };
    Ok((x.scheme.field().order(), estimate_prob_params(&x.scheme, &cfg)?))
}

fn cell(ideal: &'static str, paper: f64, trials: u64, g: &GlobalOpts, tolerance: impl Fn(f64) -> f64) -> Result<Cell, CliError> {
    let (q, est) = measure(ideal, trials, g)?;
    let tol = tolerance(est.stderr);
    let failure = est.failure();
    Ok(Cell {
        ideal,
        q,
        failures: est.trials - est.successes,
        failure,
        stderr: est.stderr,
        ci95: [1.0 - est.ci95[1], 1.0 - est.ci95[0]],
        paper,
        tolerance: tol,
        within: (failure - paper).abs() <= tol,
    })
}

pub fn paper_tables(example: TableExample, trials: u64, g: &GlobalOpts) -> Result<Outcome, CliError> {
    if trials < MIN_TRIALS {
        return Err(CliError::Input(format!("--trials must be at least {MIN_TRIALS}")));
    }
    let mut cells = Vec::new();
    let mut results = json!({});
    let name = match example {
        TableExample::Surfaces => {
            for (ideal, paper) in SURFACES {
                cells.push(cell(ideal, paper, trials, g, |se| (5.0 * se).max(0.005))?);
            }
            "7.1"
        }
        TableExample::Cubics => {
            cells.push(cell("fermat-f4", FERMAT_RATE, trials, g, |se| 5.0 * se)?);
            let cap = NOLINE_FAILURES_PER_1E5 * trials as f64 / 1e5;
            let mut noline = cell("noline-f4", 0.0, trials, g, |_| cap / trials as f64)?;
            noline.within = noline.failures as f64 <= cap;
            cells.push(noline);
            let budget = g.budget();
            let fermat = count_linear_subspaces(&load_ideal("fermat-f4")?.scheme, 1, &budget)?.count;
            let noline = count_linear_subspaces(&load_ideal("noline-f4")?.scheme, 1, &budget)?.count;
            results["line_census"] = json!({ "fermat-f4": fermat, "noline-f4": noline });
            results["census_matches"] = json!(fermat == 27 && noline == 0);
            "7.2"
        }
    };
    let mut all = cells.iter().all(|c| c.within);
    if let Some(m) = results.get("census_matches") {
        all &= m.as_bool().unwrap_or(false);
    }
    let mut t = Table::new(&["ideal", "q", "failures", "failure", "stderr", "paper", "tolerance", "within"]);
    for c in &cells {
        t.push(cells![c.ideal, c.q, c.failures, c.failure, c.stderr, c.paper, c.tolerance, c.within]);
    }
    results["cells"] = json!(cells);
    results["all_within"] = json!(all);
    let inputs = json!({ "example": name, "trials": trials, "d": 2, "k": 1 });
    Ok(Outcome { inputs, results, table: t, search_failed: false })
}
