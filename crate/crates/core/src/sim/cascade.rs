//! The cops' door-guarding cascade.
//!
//! Cop levels: 0 is Charlie on the `pqx` cycle, 1 is Alex on `a`, 2 is
//! Blake on `b`, then one cop per `u^j`. Every position of a level-`l` cop
//! has a class in {0, 1, 2} (Charlie at `x_1`/`x_2` has none), and while it
//! has one the level-`l+1` cop must stand in the segment with that number,
//! otherwise a classed door of level `l+1` is unguarded. Adjacent vertices
//! always differ in class, so a step of cop `l` forces cop `l+1` to change
//! segment in the same turn, which in turn forces cop `l+2`, and so on
//! down to the deepest cop.
//!
//! To step cop `l`, cop `l+1` is first walked (recursively, with the same
//! rule one level down) to the end of its segment facing the new one;
//! then the whole chain `l, l+1, ..., deepest` steps at once. The cost of a
//! step therefore grows by a factor of about `n` per level below.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::families::GkDescriptor;
use crate::game::{GameState, Move, Turn};
use crate::graph::Vertex;

use super::greedy::GreedyCapture;
use super::{Decision, Policy};

/// One cop turn: (level, new index on that level's cycle) for every mover.
type Chain = Vec<(usize, usize)>;

/// Turn generator for the cascade, working on cycle indices.
#[derive(Debug, Clone)]
pub(crate) struct Planner {
    n: usize,
    levels: usize,
    pos: Vec<usize>,
    lens: Vec<usize>,
    out: Vec<Chain>,
}

impl Planner {
    pub(crate) fn new(d: &GkDescriptor, pos: Vec<usize>) -> Self {
        Self {
            n: d.n,
            levels: d.level_count(),
            lens: (0..d.level_count()).map(|l| d.cycle(l).len()).collect(),
            pos,
            out: Vec::new(),
        }
    }

    /// Class of index `idx` on level `level`. On the `pqx` cycle, index 0 is
    /// `x_1`, `1..=3n` are `p_1..p_{3n}`, `3n+1` is `x_2` and the rest run
    /// `q_{3n}` down to `q_1`. Vertex number `j` has class `(j - 1) mod 3`.
    pub(crate) fn class(&self, level: usize, idx: usize) -> Option<usize> {
        let m = 3 * self.n;
        if level > 0 {
            return Some(idx % 3);
        }
        if idx == 0 || idx == m + 1 {
            None
        } else if idx <= m {
            Some((idx - 1) % 3)
        } else {
            let j = m - (idx - (m + 2));
            Some((j - 1) % 3)
        }
    }

    fn segment(&self, idx: usize) -> usize {
        idx / self.n
    }

    /// The last vertex of segment `s` toward segment `t`, and the first
    /// vertex of `t` across the boundary.
    fn boundary(&self, s: usize, t: usize) -> (usize, usize) {
        let m = 3 * self.n;
        if t == (s + 1) % 3 {
            let b = s * self.n + self.n - 1;
            (b, (b + 1) % m)
        } else {
            let b = s * self.n;
            (b, (b + m - 1) % m)
        }
    }

    pub(crate) fn step(&mut self, level: usize, next: usize) {
        let chain = self.prepare(level, next);
        for &(l, i) in &chain {
            self.pos[l] = i;
        }
        self.out.push(chain);
    }

    fn prepare(&mut self, level: usize, next: usize) -> Chain {
        let mut chain = vec![(level, next)];
        let below = level + 1;
        if below == self.levels {
            return chain;
        }
        match (self.class(level, self.pos[level]), self.class(level, next)) {
            (_, None) => {}
            (None, Some(t)) => self.walk_to_segment(below, t),
            (Some(s), Some(t)) => {
                debug_assert_ne!(s, t, "adjacent positions share a class");
                let (b, across) = self.boundary(s, t);
                self.walk_within(below, b);
                chain.extend(self.prepare(below, across));
            }
        }
        chain
    }

    fn walk_within(&mut self, level: usize, target: usize) {
        while self.pos[level] != target {
            let p = self.pos[level];
            let next = if target > p { p + 1 } else { p - 1 };
            self.step(level, next);
        }
    }

    /// Free walk (no constraint from above) into segment `s`, shorter way round.
    fn walk_to_segment(&mut self, level: usize, s: usize) {
        let m = self.lens[level];
        let p = self.pos[level];
        if self.segment(p) == s {
            return;
        }
        let forward = (s * self.n + m - p) % m;
        let backward = (p + m - (s * self.n + self.n - 1)) % m;
        let delta = if forward <= backward { 1 } else { m - 1 };
        while self.segment(self.pos[level]) != s {
            let next = (self.pos[level] + delta) % m;
            self.step(level, next);
        }
    }

    /// Plans Charlie's next step forward around his cycle.
    pub(crate) fn plan_charlie_step(&mut self) -> Vec<Chain> {
        let next = (self.pos[0] + 1) % self.lens[0];
        self.step(0, next);
        std::mem::take(&mut self.out)
    }

    pub(crate) fn positions(&self) -> &[usize] {
        &self.pos
    }
}

/// Cop policy realizing the cascade. It captures whenever the robber is
/// next to a cop, hands over to [`GreedyCapture`] once the robber is
/// outside `X u Y`, and otherwise walks Charlie back and forth between
/// `x_1` and `x_2` while keeping every door guarded.
pub struct CascadeCops<'a> {
    d: &'a GkDescriptor,
    queue: VecDeque<Vec<Vertex>>,
    greedy: GreedyCapture<'a>,
}

pub fn cop_cascade_policy(d: &GkDescriptor) -> CascadeCops<'_> {
    CascadeCops {
        d,
        queue: VecDeque::new(),
        greedy: GreedyCapture::new(d),
    }
}

impl<'a> CascadeCops<'a> {
    /// Cycle index of each level's cop, if every cop is on its own cycle.
    fn level_positions(&self, cops: &[Vertex]) -> Option<Vec<usize>> {
        let mut pos = vec![usize::MAX; self.d.level_count()];
        for &c in cops {
            let l = self.d.level_of(c)?;
            if pos[l] != usize::MAX {
                return None;
            }
            pos[l] = self.d.cycle_position(c)?;
        }
        pos.iter().all(|&p| p != usize::MAX).then_some(pos)
    }

    fn vertices(&self, pos: &[usize]) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = pos
            .iter()
            .enumerate()
            .map(|(l, &i)| self.d.cycle(l)[i])
            .collect();
        v.sort_unstable();
        v
    }

    fn refill(&mut self, pos: Vec<usize>) {
        let mut planner = Planner::new(self.d, pos);
        let mut pos = planner.positions().to_vec();
        for chain in planner.plan_charlie_step() {
            for (l, i) in chain {
                pos[l] = i;
            }
            let v = self.vertices(&pos);
            self.queue.push_back(v);
        }
    }
}

impl Policy for CascadeCops<'_> {
    fn decide(&mut self, state: &GameState) -> Result<Decision> {
        let g = &self.d.graph;
        match state.turn() {
            Turn::CopPlacement => {
                if state.cop_count() != self.d.level_count() {
                    return Err(Error::Contract(format!(
                        "cascade needs exactly {} cops, game has {}",
                        self.d.level_count(),
                        state.cop_count()
                    )));
                }
                let mut sp = self.d.standard_position();
                sp.sort_unstable();
                return Ok(Decision::Play(Move::PlaceCops(sp)));
            }
            Turn::CopsToMove => {}
            t => return Err(Error::Contract(format!("cascade asked to move on {t}"))),
        }
        let r = state.robber().expect("robber placed");
        let burn = state.burn();
        if let Some(i) = state
            .cops()
            .iter()
            .position(|&c| g.is_live_adjacent(burn, c, r))
        {
            let mut next = state.cops().to_vec();
            next[i] = r;
            self.queue.clear();
            return Ok(Decision::Play(Move::CopStep(next)));
        }
        if !self.d.in_core(r) {
            self.queue.clear();
            return self.greedy.decide(state);
        }
        let Some(pos) = self.level_positions(state.cops()) else {
            return Err(Error::Contract(format!(
                "cascade requires one cop per home cycle, got {:?}",
                state.cops()
            )));
        };
        if self.queue.is_empty() {
            self.refill(pos);
        }
        let next = self.queue.pop_front().expect("a planned step has at least one turn");
        Ok(Decision::Play(Move::CopStep(next)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_gk, doors_unguarded};
    use crate::graph::BurnSet;

    fn standard_indices(d: &GkDescriptor) -> Vec<usize> {
        vec![0; d.level_count()]
    }

    /// Runs the planner for `steps` Charlie steps, checking every turn.
    fn drive(d: &GkDescriptor, steps: usize) -> Vec<usize> {
        let mut planner = Planner::new(d, standard_indices(d));
        let mut pos = planner.positions().to_vec();
        let mut per_step = Vec::new();
        for _ in 0..steps {
            let turns = planner.plan_charlie_step();
            per_step.push(turns.len());
            for chain in turns {
                for &(l, i) in &chain {
                    assert!(
                        i == (pos[l] + 1) % d.cycle(l).len() || pos[l] == (i + 1) % d.cycle(l).len(),
                        "level {l} jumped from {} to {i}",
                        pos[l]
                    );
                    pos[l] = i;
                }
                let verts: Vec<Vertex> = pos.iter().enumerate().map(|(l, &i)| d.cycle(l)[i]).collect();
                let open = doors_unguarded(d, &verts, &BurnSet::new());
                assert!(open.is_empty(), "unguarded {open:?} at {pos:?}");
            }
        }
        per_step
    }

    #[test]
    fn coverage_holds_through_full_laps() {
        for (k, n) in [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1), (5, 2)] {
            let d = build_gk(k, n).unwrap();
            let lap = d.cycle(0).len();
            drive(&d, 2 * lap);
        }
    }

    #[test]
    fn charlie_steps_get_costlier_with_depth() {
        let d3 = build_gk(3, 3).unwrap();
        let d4 = build_gk(4, 3).unwrap();
        let half = 3 * 3 + 1;
        let c3: usize = drive(&d3, half).iter().sum();
        let c4: usize = drive(&d4, half).iter().sum();
        assert!(c4 > 2 * c3, "k=4 cost {c4} vs k=3 cost {c3}");
    }

    #[test]
    fn classes_on_the_pqx_cycle() {
        let d = build_gk(3, 2).unwrap();
        let p = Planner::new(&d, standard_indices(&d));
        // x_1, p_1..p_6, x_2, q_6..q_1
        let classes: Vec<Option<usize>> = (0..d.cycle(0).len()).map(|i| p.class(0, i)).collect();
        assert_eq!(
            classes,
            vec![
                None,
                Some(0),
                Some(1),
                Some(2),
                Some(0),
                Some(1),
                Some(2),
                None,
                Some(2),
                Some(1),
                Some(0),
                Some(2),
                Some(1),
                Some(0)
            ]
        );
    }
}
