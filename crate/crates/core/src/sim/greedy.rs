//! Greedy cornering outside the core, and a robber that flees along a cycle.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::families::{CycleName, GkDescriptor};
use crate::game::{GameState, Move, Step, Turn};
use crate::graph::{BurnSet, Vertex};

use super::{Decision, Policy};

/// Largest cop configuration space the planner will search.
const CONFIG_LIMIT: usize = 2_000_000;

/// Cops that stay on their home cycles and keep every door guarded while
/// closing in on the robber. Each turn a breadth-first search over joint
/// cop configurations (each cop stays or steps along a live edge of its
/// cycle) finds the shortest route to a configuration with some cop next
/// to the robber; the first turn of that route is played. A cop already
/// next to the robber captures.
#[derive(Debug, Clone)]
pub struct GreedyCapture<'a> {
    d: &'a GkDescriptor,
}

impl<'a> GreedyCapture<'a> {
    pub fn new(d: &'a GkDescriptor) -> Self {
        Self { d }
    }

    /// Doors guarded by a cop at each position, one bitset per level.
    fn guard_sets(&self, burn: &BurnSet) -> (Vec<Vec<Vec<u64>>>, usize) {
        let g = &self.d.graph;
        let mut slot = vec![usize::MAX; g.vertex_count()];
        for (i, &(door, _)) in self.d.doors.iter().enumerate() {
            slot[door] = i;
        }
        let words = self.d.doors.len().div_ceil(64);
        let sets = (0..self.d.level_count())
            .map(|l| {
                self.d
                    .cycle(l)
                    .iter()
                    .map(|&v| {
                        let mut bits = vec![0u64; words];
                        let on = |bits: &mut Vec<u64>, w: Vertex| {
                            if slot[w] != usize::MAX {
                                bits[slot[w] / 64] |= 1 << (slot[w] % 64);
                            }
                        };
                        on(&mut bits, v);
                        for (w, _) in g.live(burn, v) {
                            on(&mut bits, w);
                        }
                        bits
                    })
                    .collect()
            })
            .collect();
        (sets, words)
    }

    /// The next joint configuration (cycle index per level), or `None` if
    /// no guarded route reaches the robber.
    fn plan(&self, pos: &[usize], robber: Vertex, burn: &BurnSet) -> Result<Option<Vec<usize>>> {
        let d = self.d;
        let g = &d.graph;
        let lens: Vec<usize> = (0..d.level_count()).map(|l| d.cycle(l).len()).collect();
        let total = lens.iter().try_fold(1usize, |acc, &l| acc.checked_mul(l));
        let total = match total {
            Some(t) if t <= CONFIG_LIMIT => t,
            _ => {
                return Err(Error::Capacity(format!(
                    "greedy search over cycle lengths {lens:?} exceeds {CONFIG_LIMIT} configurations"
                )))
            }
        };
        let (guards, words) = self.guard_sets(burn);
        let door_count = d.doors.len();
        let all_guarded = |cfg: &[usize]| {
            (0..words).all(|w| {
                let got = cfg.iter().enumerate().fold(0u64, |acc, (l, &i)| acc | guards[l][i][w]);
                let want = if (w + 1) * 64 <= door_count {
                    u64::MAX
                } else {
                    (1u64 << (door_count % 64)) - 1
                };
                got & want == want
            })
        };
        let threatens = |cfg: &[usize]| {
            cfg.iter()
                .enumerate()
                .any(|(l, &i)| g.is_live_adjacent(burn, d.cycle(l)[i], robber))
        };
        // Cycle moves per level and index: stay, then live neighbours.
        let moves: Vec<Vec<Vec<usize>>> = (0..lens.len())
            .map(|l| {
                let c = d.cycle(l);
                (0..lens[l])
                    .map(|i| {
                        let mut out = vec![i];
                        for j in [(i + 1) % lens[l], (i + lens[l] - 1) % lens[l]] {
                            if !out.contains(&j) && g.is_live_adjacent(burn, c[i], c[j]) {
                                out.push(j);
                            }
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        let encode = |cfg: &[usize]| cfg.iter().zip(&lens).fold(0usize, |acc, (&i, &l)| acc * l + i);
        let decode = |mut code: usize| {
            let mut cfg = vec![0; lens.len()];
            for l in (0..lens.len()).rev() {
                cfg[l] = code % lens[l];
                code /= lens[l];
            }
            cfg
        };

        if threatens(pos) {
            return Ok(Some(pos.to_vec()));
        }
        let start = encode(pos);
        let mut parent = vec![usize::MAX; total];
        parent[start] = start;
        let mut queue = VecDeque::from([start]);
        while let Some(code) = queue.pop_front() {
            let cfg = decode(code);
            let mut next = cfg.clone();
            let mut goal = None;
            for_each_joint(&moves, &cfg, 0, &mut next, &mut |cand| {
                if goal.is_some() {
                    return;
                }
                let c = encode(cand);
                if parent[c] != usize::MAX || !all_guarded(cand) {
                    return;
                }
                parent[c] = code;
                if threatens(cand) {
                    goal = Some(c);
                } else {
                    queue.push_back(c);
                }
            });
            if let Some(mut c) = goal {
                while parent[c] != start {
                    c = parent[c];
                }
                return Ok(Some(decode(c)));
            }
        }
        Ok(None)
    }
}

fn for_each_joint(
    moves: &[Vec<Vec<usize>>],
    cfg: &[usize],
    level: usize,
    next: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if level == cfg.len() {
        f(next);
        return;
    }
    for &j in &moves[level][cfg[level]] {
        next[level] = j;
        for_each_joint(moves, cfg, level + 1, next, f);
    }
}

impl Policy for GreedyCapture<'_> {
    fn decide(&mut self, state: &GameState) -> Result<Decision> {
        let d = self.d;
        let g = &d.graph;
        match state.turn() {
            Turn::CopPlacement => {
                let mut sp = d.standard_position();
                sp.resize(state.cop_count(), d.x1);
                sp.sort_unstable();
                return Ok(Decision::Play(Move::PlaceCops(sp)));
            }
            Turn::CopsToMove => {}
            t => return Err(Error::Contract(format!("greedy cops asked to move on {t}"))),
        }
        let r = state.robber().expect("robber placed");
        let burn = state.burn();
        if let Some(i) = state.cops().iter().position(|&c| g.is_live_adjacent(burn, c, r)) {
            let mut next = state.cops().to_vec();
            next[i] = r;
            return Ok(Decision::Play(Move::CopStep(next)));
        }
        let mut pos = vec![usize::MAX; d.level_count()];
        for &c in state.cops() {
            match (d.level_of(c), d.cycle_position(c)) {
                (Some(l), Some(i)) if pos[l] == usize::MAX => pos[l] = i,
                _ => {
                    return Err(Error::Contract(format!(
                        "greedy cops require one cop per home cycle, got {:?}",
                        state.cops()
                    )))
                }
            }
        }
        if pos.contains(&usize::MAX) {
            return Err(Error::Contract(format!(
                "greedy cops require one cop per home cycle, got {:?}",
                state.cops()
            )));
        }
        let target = self.plan(&pos, r, burn)?.unwrap_or(pos);
        let mut next: Vec<Vertex> = target.iter().enumerate().map(|(l, &i)| d.cycle(l)[i]).collect();
        next.sort_unstable();
        Ok(Decision::Play(Move::CopStep(next)))
    }
}

/// A robber that keeps to one cycle (or, placed elsewhere, to its live
/// neighbourhood) and flees only when a cop is next to it. It flees to a
/// neighbour that no cop occupies or touches, preferring the one farthest
/// from the nearest cop; with no such neighbour it stays.
#[derive(Debug, Clone)]
pub struct CycleEvader<'a> {
    d: &'a GkDescriptor,
    start: Vertex,
    cycle: Option<usize>,
}

impl<'a> CycleEvader<'a> {
    /// Starts at the vertex of `cycle` farthest from the cops' standard
    /// position (smallest such vertex on ties).
    pub fn on_cycle(d: &'a GkDescriptor, cycle: CycleName) -> Result<Self> {
        let level = d
            .cycles
            .iter()
            .position(|(name, _)| *name == cycle)
            .ok_or_else(|| Error::Input(format!("G_{} has no cycle {cycle}", d.k)))?;
        let mut evader = Self {
            d,
            start: d.cycle(level)[0],
            cycle: Some(level),
        };
        let cops = d.standard_position();
        let burn = BurnSet::new();
        evader.start = d
            .cycle(level)
            .iter()
            .map(|&v| (std::cmp::Reverse(evader.cop_distance(v, &cops, &burn)), v))
            .min()
            .map(|(_, v)| v)
            .expect("cycles are nonempty");
        Ok(evader)
    }

    /// Starts at an arbitrary vertex; if it lies on a cop cycle the robber
    /// keeps to that cycle.
    pub fn at(d: &'a GkDescriptor, start: Vertex) -> Result<Self> {
        if start >= d.graph.vertex_count() {
            return Err(Error::Input(format!("vertex {start} out of range")));
        }
        Ok(Self {
            d,
            start,
            cycle: d.level_of(start),
        })
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    /// Live-graph distance from `v` to the nearest cop.
    fn cop_distance(&self, v: Vertex, cops: &[Vertex], burn: &BurnSet) -> usize {
        let g = &self.d.graph;
        let mut dist = vec![usize::MAX; g.vertex_count()];
        let mut queue = VecDeque::from([v]);
        dist[v] = 0;
        while let Some(u) = queue.pop_front() {
            if cops.contains(&u) {
                return dist[u];
            }
            for (w, _) in g.live(burn, u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        usize::MAX
    }
}

impl Policy for CycleEvader<'_> {
    fn decide(&mut self, state: &GameState) -> Result<Decision> {
        match state.turn() {
            Turn::RobberPlacement => return Ok(Decision::Play(Move::PlaceRobber(self.start))),
            Turn::RobberToMove => {}
            t => return Err(Error::Contract(format!("evader asked to move on {t}"))),
        }
        let g = &self.d.graph;
        let r = state.robber().expect("robber placed");
        let burn = state.burn();
        let cops = state.cops();
        let pass = Decision::Play(Move::RobberStep(Step::Pass));
        if !cops.iter().any(|&c| g.is_live_adjacent(burn, c, r)) {
            return Ok(pass);
        }
        let best = g
            .live(burn, r)
            .map(|(w, _)| w)
            .filter(|&w| self.cycle.is_none_or(|l| self.d.level_of(w) == Some(l)))
            .filter(|&w| !cops.contains(&w) && !cops.iter().any(|&c| g.is_live_adjacent(burn, c, w)))
            .map(|w| (std::cmp::Reverse(self.cop_distance(w, cops, burn)), w))
            .min();
        Ok(match best {
            Some((_, w)) => Decision::Play(Move::RobberStep(Step::To(w))),
            None => pass,
        })
    }
}

/// Greedy cops against a robber fleeing along `robber_cycle`.
pub fn greedy_cycle_capture(d: &GkDescriptor, robber_cycle: CycleName) -> Result<(GreedyCapture<'_>, CycleEvader<'_>)> {
    Ok((GreedyCapture::new(d), CycleEvader::on_cycle(d, robber_cycle)?))
}
