//! The three experiments: the general capture-time bound on small graphs,
//! growth exponents of the scripted `G_k` game, and the cop number of
//! random graphs.

use bridgeburn::families::{build_gk, complete_bipartite, cycle, grid, hypercube, path, random_gnp};
use bridgeburn::sim::{cop_cascade_policy, default_round_cap, robber_delay_policy, simulate, Outcome};
use bridgeburn::solver::{capture_time, capture_time_upper_bound, cop_number, lower_bound_reference};
use bridgeburn::{Error, Graph, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::report::{opt, params, ExperimentReport, Row, TOOL_VERSION};
use crate::stats::{log_log_fit, wilson_95};

/// Random instances in the bounds experiment.
pub const BOUNDS_RANDOM_SAMPLES: u64 = 100;
const BOUNDS_EDGE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.7];

/// Slope windows (lower, upper) for the exponent experiment.
pub const K3_ROUNDS_WINDOW: (f64, f64) = (4.25, 5.75);
pub const K3_TRAVERSAL_WINDOW: (f64, f64) = (2.5, 3.5);
pub const K4_ROUNDS_WINDOW: (f64, f64) = (5.0, 7.0);

/// Seed of the `i`-th derived instance.
pub fn sample_seed(seed: u64, i: u64) -> u64 {
    seed.wrapping_add(i)
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundRow {
    pub family: String,
    pub n: usize,
    pub edges: usize,
    pub c_b: usize,
    pub capt_b: u32,
    pub bound: f64,
    pub lower_reference: f64,
    pub pass: bool,
}

impl Row for BoundRow {
    fn headers() -> Vec<&'static str> {
        vec!["family", "n", "m", "c_b", "capt_b", "bound", "lower_ref", "pass"]
    }
    fn cells(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.n.to_string(),
            self.edges.to_string(),
            self.c_b.to_string(),
            self.capt_b.to_string(),
            format!("{}", self.bound),
            format!("{:.4}", self.lower_reference),
            self.pass.to_string(),
        ]
    }
    fn pass(&self) -> bool {
        self.pass
    }
}

/// Every instance the bounds experiment solves for a given `n_max`.
pub fn bound_instances(n_max: usize, seed: u64) -> Result<Vec<(String, Graph)>> {
    if n_max < 2 {
        return Err(Error::Input("n_max must be at least 2".into()));
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push((format!("P_{n}"), path(n)?));
    }
    for n in 3..=n_max {
        out.push((format!("C_{n}"), cycle(n)?));
    }
    for a in 1..n_max {
        for b in a..=n_max - a {
            out.push((format!("K_{a},{b}"), complete_bipartite(a, b)?));
        }
    }
    for d in [2, 3] {
        if 1 << d <= n_max {
            out.push((format!("Q_{d}"), hypercube(d)?));
        }
    }
    for r in 2..=n_max {
        for c in r..=n_max / r {
            out.push((format!("grid_{r}x{c}"), grid(r, c)?));
        }
    }
    for i in 0..BOUNDS_RANDOM_SAMPLES {
        let n = 2 + (i as usize) % (n_max - 1);
        let p = BOUNDS_EDGE_PROBABILITIES[i as usize % BOUNDS_EDGE_PROBABILITIES.len()];
        let s = sample_seed(seed, i);
        out.push((format!("G({n},{p})#{s}"), random_gnp(n, p, s)?));
    }
    Ok(out)
}

pub fn bounds(n_max: usize, seed: u64) -> Result<ExperimentReport<BoundRow>> {
    let instances = bound_instances(n_max, seed)?;
    let rows = instances
        .par_iter()
        .map(|(family, g)| {
            let (c_b, capt_b) = capture_time(g)?;
            let n = g.vertex_count();
            let bound = capture_time_upper_bound(n, c_b);
            Ok(BoundRow {
                family: family.clone(),
                n,
                edges: g.edge_count(),
                c_b,
                capt_b,
                bound,
                lower_reference: lower_bound_reference(n, c_b),
                pass: f64::from(capt_b) <= bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let violations = rows.iter().filter(|r| !r.pass).count();
    let max_ratio = rows
        .iter()
        .map(|r| f64::from(r.capt_b) / r.bound)
        .fold(0.0, f64::max);
    Ok(ExperimentReport {
        experiment: "bounds".into(),
        tool_version: TOOL_VERSION.into(),
        seed,
        parameters: params([("n_max", json!(n_max)), ("random_samples", json!(BOUNDS_RANDOM_SAMPLES))]),
        aggregate: params([
            ("instances", json!(rows.len())),
            ("violations", json!(violations)),
            ("max_capt_over_bound", json!(max_ratio)),
        ]),
        pass: violations == 0,
        rows,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ExponentRow {
    pub k: usize,
    pub n: usize,
    pub vertices: usize,
    pub rounds: u32,
    pub robber_moves: u32,
    pub mean_traversal: f64,
    pub min_traversal: u64,
    pub outcome: Outcome,
    pub door_violations: u32,
    pub pass: bool,
}

impl Row for ExponentRow {
    fn headers() -> Vec<&'static str> {
        vec!["k", "n", "V", "rounds", "robber_moves", "traversal_mean", "traversal_min", "outcome", "pass"]
    }
    fn cells(&self) -> Vec<String> {
        let outcome = match self.outcome {
            Outcome::Captured { .. } => "captured",
            Outcome::WalkExhausted { .. } => "walk-exhausted",
            Outcome::DoorBreach { .. } => "door-breach",
            Outcome::CapReached { .. } => "cap-reached",
        };
        vec![
            self.k.to_string(),
            self.n.to_string(),
            self.vertices.to_string(),
            self.rounds.to_string(),
            self.robber_moves.to_string(),
            format!("{:.2}", self.mean_traversal),
            self.min_traversal.to_string(),
            outcome.to_string(),
            self.pass.to_string(),
        ]
    }
    fn pass(&self) -> bool {
        self.pass
    }
}

fn check_exponent_args(k: usize, ns: &[usize]) -> Result<()> {
    let limit = match k {
        3 => 6,
        4 => 4,
        _ => return Err(Error::Input(format!("exponent experiment supports k = 3 or 4, got {k}"))),
    };
    if ns.is_empty() {
        return Err(Error::Input("need at least one n".into()));
    }
    for &n in ns {
        if n == 0 || n % 2 == 1 || n > limit {
            return Err(Error::Input(format!("n = {n} must be even and at most {limit} for k = {k}")));
        }
    }
    Ok(())
}

pub fn exponent(k: usize, ns: &[usize], seed: u64) -> Result<ExperimentReport<ExponentRow>> {
    check_exponent_args(k, ns)?;
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let rows = ns
        .par_iter()
        .map(|&n| {
            let d = build_gk(k, n)?;
            let mut cops = cop_cascade_policy(&d);
            let mut robber = robber_delay_policy(&d);
            let t = simulate(&d, &mut cops, &mut robber, default_round_cap(k, n))?;
            let outcome = t.outcome.clone().expect("simulation ends with an outcome");
            Ok(ExponentRow {
                k,
                n,
                vertices: d.graph.vertex_count(),
                rounds: t.rounds_played,
                robber_moves: t.robber_forced_moves,
                mean_traversal: t.mean_oscillation_cost().unwrap_or(0.0),
                min_traversal: t.cop_steps_per_oscillation.iter().copied().min().unwrap_or(0),
                pass: matches!(outcome, Outcome::WalkExhausted { .. }) && t.door_coverage_violations == 0,
                door_violations: t.door_coverage_violations,
                outcome,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let xs: Vec<f64> = rows.iter().map(|r| r.n as f64).collect();
    let rounds: Vec<f64> = rows.iter().map(|r| f64::from(r.rounds)).collect();
    let traversal: Vec<f64> = rows.iter().map(|r| r.mean_traversal).collect();
    let rounds_fit = log_log_fit(&xs, &rounds);
    let traversal_fit = log_log_fit(&xs, &traversal);
    let (rounds_window, traversal_window) = if k == 3 {
        (K3_ROUNDS_WINDOW, Some(K3_TRAVERSAL_WINDOW))
    } else {
        (K4_ROUNDS_WINDOW, None)
    };
    let inside = |s: f64, (lo, hi): (f64, f64)| (lo..=hi).contains(&s);
    let mut pass = rows.iter().all(|r| r.pass);
    let mut aggregate = params([("target_exponent", json!(k + 2))]);
    if let Some(f) = &rounds_fit {
        let ok = inside(f.slope, rounds_window);
        pass &= ok;
        aggregate.insert("rounds_slope".into(), json!(f.slope));
        aggregate.insert("rounds_residuals".into(), json!(f.residuals));
        aggregate.insert("rounds_window".into(), json!([rounds_window.0, rounds_window.1]));
        aggregate.insert("rounds_slope_pass".into(), json!(ok));
    }
    if let Some(f) = &traversal_fit {
        aggregate.insert("traversal_slope".into(), json!(f.slope));
        aggregate.insert("traversal_residuals".into(), json!(f.residuals));
        if let Some(w) = traversal_window {
            let ok = inside(f.slope, w);
            pass &= ok;
            aggregate.insert("traversal_window".into(), json!([w.0, w.1]));
            aggregate.insert("traversal_slope_pass".into(), json!(ok));
        }
    }
    Ok(ExperimentReport {
        experiment: "exponent".into(),
        tool_version: TOOL_VERSION.into(),
        seed,
        parameters: params([("k", json!(k)), ("n", json!(ns))]),
        rows,
        aggregate,
        pass,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RandomRow {
    pub sample: u64,
    pub seed: u64,
    pub edges: usize,
    /// `None` when the sample was skipped for exceeding solver capacity.
    pub c_b: Option<usize>,
    pub capt_b: Option<u32>,
    pub skipped: bool,
}

impl Row for RandomRow {
    fn headers() -> Vec<&'static str> {
        vec!["sample", "seed", "m", "c_b", "capt_b", "skipped"]
    }
    fn cells(&self) -> Vec<String> {
        vec![
            self.sample.to_string(),
            self.seed.to_string(),
            self.edges.to_string(),
            opt(self.c_b),
            opt(self.capt_b),
            self.skipped.to_string(),
        ]
    }
    fn pass(&self) -> bool {
        true
    }
}

pub fn random(n: usize, p: f64, samples: u64, seed: u64) -> Result<ExperimentReport<RandomRow>> {
    if n == 0 || n > 64 {
        return Err(Error::Input(format!("n = {n} outside 1..=64")));
    }
    let rows = (0..samples)
        .into_par_iter()
        .map(|i| {
            let s = sample_seed(seed, i);
            let g = random_gnp(n, p, s)?;
            if g.edge_count() > 64 {
                return Ok(RandomRow {
                    sample: i,
                    seed: s,
                    edges: g.edge_count(),
                    c_b: None,
                    capt_b: None,
                    skipped: true,
                });
            }
            let cn = cop_number(&g, n)?;
            Ok(RandomRow {
                sample: i,
                seed: s,
                edges: g.edge_count(),
                c_b: cn.c_b,
                capt_b: cn.per_k.last().and_then(|r| r.capture_time),
                skipped: false,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let solved = rows.iter().filter(|r| !r.skipped).count();
    let ones = rows.iter().filter(|r| r.c_b == Some(1)).count();
    let mut aggregate = params([
        ("solved", json!(solved)),
        ("skipped", json!(rows.len() - solved)),
        ("cop_number_one", json!(ones)),
    ]);
    if solved > 0 {
        aggregate.insert("fraction_cop_number_one".into(), json!(ones as f64 / solved as f64));
    }
    if let Some((lo, hi)) = wilson_95(ones, solved) {
        aggregate.insert("wilson_95".into(), json!([lo, hi]));
    }
    Ok(ExperimentReport {
        experiment: "random".into(),
        tool_version: TOOL_VERSION.into(),
        seed,
        parameters: params([("n", json!(n)), ("p", json!(p)), ("samples", json!(samples))]),
        rows,
        aggregate,
        pass: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_list_for_small_n_max() {
        let names: Vec<String> = bound_instances(4, 0).unwrap().into_iter().map(|(f, _)| f).collect();
        for expected in ["P_1", "P_4", "C_3", "C_4", "K_1,1", "K_1,3", "K_2,2", "Q_2", "grid_2x2"] {
            assert!(names.contains(&expected.to_string()), "{expected} missing from {names:?}");
        }
        assert!(!names.iter().any(|n| n == "K_2,3" || n == "Q_3"));
        assert_eq!(names.iter().filter(|n| n.starts_with("G(")).count(), 100);
    }

    #[test]
    fn exponent_argument_checks() {
        assert!(exponent(5, &[2], 0).is_err());
        assert!(exponent(3, &[3], 0).is_err());
        assert!(exponent(4, &[6], 0).is_err());
        assert!(exponent(3, &[], 0).is_err());
    }

    #[test]
    fn single_size_has_no_slope() {
        let r = exponent(3, &[2], 1).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].rounds, 706);
        assert!(!r.aggregate.contains_key("rounds_slope"));
        assert!(r.pass);
    }

    #[test]
    fn random_extremes() {
        let empty = random(4, 0.0, 5, 3).unwrap();
        assert!(empty.rows.iter().all(|r| r.c_b == Some(4)));
        assert_eq!(empty.aggregate["fraction_cop_number_one"], json!(0.0));
        let full = random(5, 1.0, 4, 3).unwrap();
        assert!(full.rows.iter().all(|r| r.c_b == full.rows[0].c_b));
    }
}
