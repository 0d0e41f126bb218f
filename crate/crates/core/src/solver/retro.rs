//! Layered retrograde solver.
//!
//! Only robber steps change the burn set, and they only ever add to it, so
//! the positions split into layers by burn set and every layer depends only
//! on strictly larger ones. Layers are solved from the most burned down.
//!
//! Inside a layer the robber can only pass, so for a fixed robber vertex
//! `r` the layer is a one-sided problem over cop tuples. Writing `f(c)` for
//! the rounds still to be started when the cops are to move from `c`, and
//! `D(c)` for the best the robber can get by stepping out of the layer:
//!
//! ```text
//! f(c) = 1 + min over c' reachable from c of h(c')
//! h(c') = 0                       if r is in c'
//!       = max(f(c'), D(c'))       otherwise
//! ```
//!
//! Along an optimal chain `h` strictly increases, so the fixed point can be
//! settled in increasing order of `h` with a priority queue, which is the
//! usual backward induction by capture time. Tuples never settled are
//! robber wins.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::game::{GameState, Turn};
use crate::graph::{BurnSet, Graph, Vertex};

use super::{check_capacity, CopTuples, Method, SolveResult, SolvedGame, SolverOptions, INF};

#[derive(Debug, Clone, Copy)]
struct Layer {
    base: u32,
    robbers: u64,
}

#[derive(Debug, Clone)]
pub struct RetroSolution {
    graph: Graph,
    tuples: CopTuples,
    layers: HashMap<u64, Layer>,
    /// Cop-to-move values, `pairs * tuples` entries.
    values: Vec<u32>,
    result: SolveResult,
}

/// All (burn mask, robber vertex) pairs reachable by some robber walk.
fn reachable_pairs(g: &Graph, tuple_count: usize, budget: usize) -> Result<HashMap<u64, u64>> {
    let n = g.vertex_count();
    let mut seen: HashMap<u64, u64> = HashMap::new();
    seen.insert(0, if n == 64 { u64::MAX } else { (1u64 << n) - 1 });
    let mut stack: Vec<(u64, Vertex)> = (0..n).map(|r| (0, r)).collect();
    let mut count = n;
    while let Some((burn, r)) = stack.pop() {
        for &(w, e) in g.adjacency(r) {
            if burn >> e & 1 == 1 {
                continue;
            }
            let next = burn | 1 << e;
            let entry = seen.entry(next).or_insert(0);
            if *entry >> w & 1 == 0 {
                *entry |= 1 << w;
                count += 1;
                if count.saturating_mul(tuple_count) > budget {
                    return Err(Error::Capacity(format!(
                        "more than {budget} positions (over {count} burn/robber pairs x {tuple_count} cop tuples)"
                    )));
                }
                stack.push((next, w));
            }
        }
    }
    Ok(seen)
}

pub fn solve(g: &Graph, k: usize, opts: SolverOptions) -> Result<RetroSolution> {
    check_capacity(g, k)?;
    let n = g.vertex_count();
    let tuples = CopTuples::new(n, k)?;
    let t_count = tuples.len();
    let reach = reachable_pairs(g, t_count, opts.state_budget)?;

    let mut order: Vec<u64> = reach.keys().copied().collect();
    order.sort_unstable_by_key(|&b| (Reverse(b.count_ones()), b));
    let mut layers = HashMap::with_capacity(order.len());
    let mut base = 0u32;
    for &b in &order {
        let robbers = reach[&b];
        layers.insert(b, Layer { base, robbers });
        base += robbers.count_ones();
    }
    let pair_count = base as usize;
    let mut values = vec![INF; pair_count * t_count];

    let pair_of = |layers: &HashMap<u64, Layer>, b: u64, r: Vertex| -> usize {
        let l = layers[&b];
        l.base as usize + (l.robbers & ((1u64 << r) - 1)).count_ones() as usize
    };

    let mut f = vec![INF; t_count];
    let mut h = vec![INF; t_count];
    let mut exit = vec![0u32; t_count];
    let mut heap = BinaryHeap::new();
    for &b in &order {
        let burn = BurnSet::from_mask(b);
        let succ = tuples.successors(g, &burn);
        let robbers = layers[&b].robbers;
        for r in (0..n).filter(|&r| robbers >> r & 1 == 1) {
            // Best value of leaving the layer, per cop tuple.
            exit.fill(0);
            for &(w, e) in g.adjacency(r) {
                if b >> e & 1 == 1 {
                    continue;
                }
                let deeper = pair_of(&layers, b | 1 << e, w) * t_count;
                for (t, x) in exit.iter_mut().enumerate() {
                    if !tuples.occupies(t, w) {
                        *x = (*x).max(values[deeper + t]);
                    }
                }
            }

            f.fill(INF);
            h.fill(INF);
            heap.clear();
            for (t, ht) in h.iter_mut().enumerate() {
                if tuples.occupies(t, r) {
                    *ht = 0;
                    heap.push(Reverse((0u32, t as u32)));
                }
            }
            while let Some(Reverse((hv, t))) = heap.pop() {
                if hv > h[t as usize] {
                    continue;
                }
                for &p in &succ[t as usize] {
                    let p = p as usize;
                    if tuples.occupies(p, r) {
                        continue;
                    }
                    let cand = hv + 1;
                    if cand < f[p] {
                        f[p] = cand;
                        let hp = cand.max(exit[p]);
                        if hp < h[p] {
                            h[p] = hp;
                            if hp != INF {
                                heap.push(Reverse((hp, p as u32)));
                            }
                        }
                    }
                }
            }
            let at = pair_of(&layers, b, r) * t_count;
            values[at..at + t_count].copy_from_slice(&f);
        }
    }

    let mut sol = RetroSolution {
        graph: g.clone(),
        tuples,
        layers,
        values,
        result: SolveResult {
            cops_win: false,
            capture_time: None,
            optimal_cop_start: Vec::new(),
            robber_best_start: None,
            states_explored: 2 * (pair_count * t_count) as u64,
            method: Method::LayeredRetrograde,
        },
    };
    let (best_t, best_v) = (0..t_count)
        .map(|t| (t, sol.placement_value(t).0))
        .min_by_key(|&(t, v)| (v, t))
        .expect("at least one cop tuple");
    sol.result.optimal_cop_start = sol.tuples.tuple(best_t).to_vec();
    if best_v != INF {
        sol.result.cops_win = true;
        sol.result.capture_time = Some(best_v);
        sol.result.robber_best_start = Some(sol.placement_value(best_t).1);
    }
    Ok(sol)
}

impl RetroSolution {
    fn pair(&self, burn: u64, r: Vertex) -> Option<usize> {
        let l = self.layers.get(&burn)?;
        (l.robbers >> r & 1 == 1)
            .then(|| l.base as usize + (l.robbers & ((1u64 << r) - 1)).count_ones() as usize)
    }

    fn cop_value(&self, t: usize, r: Vertex, burn: u64) -> u32 {
        if self.tuples.occupies(t, r) {
            return 0;
        }
        let p = self.pair(burn, r).expect("pair is reachable");
        self.values[p * self.tuples.len() + t]
    }

    /// Worst robber placement against cop tuple `t`: (value, first vertex attaining it).
    fn placement_value(&self, t: usize) -> (u32, Vertex) {
        (0..self.graph.vertex_count())
            .map(|r| (self.cop_value(t, r, 0), r))
            .max_by_key(|&(v, r)| (v, Reverse(r)))
            .expect("graph has vertices")
    }

    /// Rounds still to be started after the current one, robber to move.
    fn robber_value(&self, t: usize, r: Vertex, burn: u64) -> u32 {
        let mut best = self.cop_value(t, r, burn);
        for &(w, e) in self.graph.adjacency(r) {
            if burn >> e & 1 == 0 {
                best = best.max(self.cop_value(t, w, burn | 1 << e));
            }
        }
        best
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn pair_count(&self) -> usize {
        self.values.len() / self.tuples.len()
    }
}

fn finite(v: u32, offset: u32) -> Option<u32> {
    (v != INF).then(|| v + offset)
}

impl SolvedGame for RetroSolution {
    fn value(&self, s: &GameState) -> Result<Option<u32>> {
        if s.is_terminal() {
            return Ok(s.capture_round());
        }
        let unknown = || Error::Input(format!("state not covered by the solved table: {s}"));
        if s.turn() == Turn::CopPlacement {
            return Ok(self.result.capture_time);
        }
        let t = self.tuples.rank(s.cops()).ok_or_else(unknown)?;
        if s.turn() == Turn::RobberPlacement {
            return Ok(finite(self.placement_value(t).0, 0));
        }
        let r = s.robber().ok_or_else(unknown)?;
        let burn = s.burn().as_mask().ok_or_else(unknown)?;
        self.pair(burn, r).ok_or_else(unknown)?;
        Ok(match s.turn() {
            Turn::CopsToMove => finite(self.cop_value(t, r, burn), s.round()),
            _ => finite(self.robber_value(t, r, burn), s.round() + 1),
        })
    }

    fn result(&self) -> SolveResult {
        self.result.clone()
    }
}
