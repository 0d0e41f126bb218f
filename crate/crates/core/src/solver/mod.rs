//! Exact game values for `k` cops: whether the cops win, and the optimal
//! capture time in rounds.
//!
//! Two independent algorithms are provided. [`retro`] works layer by layer
//! over burn sets on packed tables; [`vi`] is a plain global value
//! iteration over states produced by the game engine itself. They are meant
//! to be run against each other.
//!
//! Values follow one convention throughout: the capture time of a play is
//! the number of rounds started before capture (0 if the robber had to
//! place on a cop). Cops minimize it, the robber maximizes it, and a robber
//! who can avoid capture forever scores infinity.

pub mod retro;
mod tuples;
pub mod vi;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::GameState;
use crate::graph::{Graph, Vertex};

pub use tuples::CopTuples;

/// Sentinel for "robber escapes forever" in value tables.
pub(crate) const INF: u32 = u32::MAX;

/// Default cap on the number of (cops, robber, burn) positions a single
/// solve may tabulate.
pub const DEFAULT_STATE_BUDGET: usize = 120_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    LayeredRetrograde,
    ValueIteration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub cops_win: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub capture_time: Option<u32>,
    pub optimal_cop_start: Vec<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub robber_best_start: Option<Vertex>,
    pub states_explored: u64,
    pub method: Method,
}

impl SolveResult {
    /// The part both methods must agree on.
    pub fn verdict(&self) -> (bool, Option<u32>) {
        (self.cops_win, self.capture_time)
    }
}

/// A fully solved game that can be queried at any reachable state.
pub trait SolvedGame {
    /// Capture time (in rounds, counted from the start of the game) under
    /// optimal play from `state` on, or `None` if the robber escapes.
    fn value(&self, state: &GameState) -> Result<Option<u32>>;

    fn result(&self) -> SolveResult;
}

#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    pub state_budget: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            state_budget: DEFAULT_STATE_BUDGET,
        }
    }
}

pub(crate) fn check_capacity(g: &Graph, k: usize) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::Input("graph has no vertices".into()));
    }
    if k == 0 {
        return Err(Error::Input("need at least one cop".into()));
    }
    if g.edge_count() > 64 {
        return Err(Error::Capacity(format!(
            "exact solver supports at most 64 edges, graph has {}",
            g.edge_count()
        )));
    }
    if g.vertex_count() > 64 {
        return Err(Error::Capacity(format!(
            "exact solver supports at most 64 vertices, graph has {}",
            g.vertex_count()
        )));
    }
    Ok(())
}

pub fn solve_k(g: &Graph, k: usize) -> Result<SolveResult> {
    solve_with(g, k, Method::LayeredRetrograde)
}

pub fn solve_with(g: &Graph, k: usize, method: Method) -> Result<SolveResult> {
    match method {
        Method::LayeredRetrograde => Ok(retro::solve(g, k, SolverOptions::default())?.result()),
        Method::ValueIteration => Ok(vi::solve(g, k, SolverOptions::default())?.result()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopNumber {
    /// Smallest winning cop count, `None` when no `k <= k_max` wins.
    pub c_b: Option<usize>,
    pub k_max: usize,
    pub per_k: Vec<SolveResult>,
}

pub fn cop_number(g: &Graph, k_max: usize) -> Result<CopNumber> {
    cop_number_with(g, k_max, SolverOptions::default())
}

pub fn cop_number_with(g: &Graph, k_max: usize, opts: SolverOptions) -> Result<CopNumber> {
    if k_max == 0 {
        return Err(Error::Input("k_max must be at least 1".into()));
    }
    let mut per_k = Vec::new();
    for k in 1..=k_max {
        let res = retro::solve(g, k, opts)?.result();
        let win = res.cops_win;
        per_k.push(res);
        if win {
            return Ok(CopNumber {
                c_b: Some(k),
                k_max,
                per_k,
            });
        }
    }
    Ok(CopNumber {
        c_b: None,
        k_max,
        per_k,
    })
}

/// `(c_b(G), capt_b(G))`. Placing a cop on every vertex always wins, so
/// the search is bounded by the vertex count.
pub fn capture_time(g: &Graph) -> Result<(usize, u32)> {
    let cn = cop_number(g, g.vertex_count().max(1))?;
    let c_b = cn.c_b.expect("n cops always win");
    let capt = cn
        .per_k
        .last()
        .and_then(|r| r.capture_time)
        .expect("winning result carries a capture time");
    Ok((c_b, capt))
}

/// `(2n)^(c+2) / c!`, the general upper bound on the capture time of an
/// `n`-vertex graph with bridge-burning cop number `c`.
pub fn capture_time_upper_bound(n: usize, c: usize) -> f64 {
    let factorial: f64 = (1..=c).map(|i| i as f64).product();
    (2.0 * n as f64).powi(c as i32 + 2) / factorial
}

/// `n^(k+2) / k^(k+2)`, the lower-bound reference value with unit constant.
pub fn lower_bound_reference(n: usize, k: usize) -> f64 {
    (n as f64 / k as f64).powi(k as i32 + 2)
}
