//! Value iteration over the whole game graph.
//!
//! This is the reference the retrograde solver is checked against, so it
//! shares nothing with it beyond the game engine: states come from
//! [`legal_moves`]/[`apply`], values start at infinity everywhere and are
//! lowered by synchronous Bellman sweeps until nothing changes. The limit
//! is the finite-horizon capture time, which is exact because a cop win on
//! a finite game graph is always forced within finitely many rounds.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::game::{apply, legal_moves, GameState, Move, Turn};
use crate::graph::Graph;

use super::{check_capacity, Method, SolveResult, SolvedGame, SolverOptions, INF};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Next {
    Captured,
    State(u32),
}

#[derive(Debug, Clone)]
pub struct ViSolution {
    index: HashMap<GameState, u32>,
    turns: Vec<Turn>,
    succ: Vec<Vec<Next>>,
    values: Vec<u32>,
    /// Placement moves from the root, in legal-move (lexicographic) order.
    placements: Vec<Vec<usize>>,
    sweeps: usize,
}

pub fn solve(g: &Graph, k: usize, opts: SolverOptions) -> Result<ViSolution> {
    check_capacity(g, k)?;
    let root = GameState::new(k);
    let mut index: HashMap<GameState, u32> = HashMap::new();
    let mut states: Vec<GameState> = Vec::new();
    let mut succ: Vec<Vec<Next>> = Vec::new();
    index.insert(root.clone(), 0);
    states.push(root);

    let mut i = 0;
    while i < states.len() {
        let s = states[i].clone();
        let mut out = Vec::new();
        for m in legal_moves(g, &s)? {
            let next = apply(g, &s, &m)?;
            if next.is_terminal() {
                out.push(Next::Captured);
                continue;
            }
            let key = next.position();
            let id = match index.get(&key) {
                Some(&id) => id,
                None => {
                    if states.len() >= opts.state_budget {
                        return Err(Error::Capacity(format!(
                            "value iteration exceeded {} states",
                            opts.state_budget
                        )));
                    }
                    let id = states.len() as u32;
                    index.insert(key.clone(), id);
                    states.push(key);
                    id
                }
            };
            out.push(Next::State(id));
        }
        succ.push(out);
        i += 1;
    }

    let turns: Vec<Turn> = states.iter().map(GameState::turn).collect();
    let placements = legal_moves(g, &states[0])?
        .into_iter()
        .map(|m| match m {
            Move::PlaceCops(c) => c,
            _ => unreachable!("root offers cop placements only"),
        })
        .collect();

    let mut values = vec![INF; states.len()];
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        let next: Vec<u32> = (0..states.len())
            .map(|s| backup(turns[s], &succ[s], &values))
            .collect();
        if next == values {
            break;
        }
        values = next;
    }

    Ok(ViSolution {
        index,
        turns,
        succ,
        values,
        placements,
        sweeps,
    })
}

fn backup(turn: Turn, succ: &[Next], values: &[u32]) -> u32 {
    let v = |n: &Next| match *n {
        Next::Captured => 0,
        Next::State(id) => values[id as usize],
    };
    match turn {
        Turn::CopPlacement => succ.iter().map(v).min().unwrap_or(INF),
        Turn::CopsToMove => succ.iter().map(v).min().map_or(INF, |m| m.saturating_add(1)),
        Turn::RobberPlacement | Turn::RobberToMove => succ.iter().map(v).max().unwrap_or(INF),
    }
}

impl ViSolution {
    pub fn state_count(&self) -> usize {
        self.values.len()
    }

    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    /// Every non-terminal position in the table (round counter cleared).
    pub fn positions(&self) -> impl Iterator<Item = &GameState> {
        self.index.keys()
    }

    fn raw(&self, s: &GameState) -> Option<u32> {
        self.index.get(&s.position()).map(|&i| self.values[i as usize])
    }
}

impl SolvedGame for ViSolution {
    fn value(&self, s: &GameState) -> Result<Option<u32>> {
        if s.is_terminal() {
            return Ok(s.capture_round());
        }
        let v = self
            .raw(s)
            .ok_or_else(|| Error::Input(format!("state not covered by the solved table: {s}")))?;
        if v == INF {
            return Ok(None);
        }
        Ok(Some(match s.turn() {
            Turn::CopPlacement | Turn::RobberPlacement => v,
            Turn::CopsToMove => s.round() + v,
            Turn::RobberToMove => s.round() + 1 + v,
        }))
    }

    fn result(&self) -> SolveResult {
        let root = &self.succ[0];
        debug_assert_eq!(self.turns[0], Turn::CopPlacement);
        let value_of = |n: &Next| match *n {
            Next::Captured => 0,
            Next::State(id) => self.values[id as usize],
        };
        // First minimum in lexicographic order of cop tuples.
        let (best, best_v) = root
            .iter()
            .enumerate()
            .fold((0, INF), |(bi, bv), (i, n)| {
                let v = value_of(n);
                if v < bv {
                    (i, v)
                } else {
                    (bi, bv)
                }
            });
        let cops_win = best_v != INF;
        let robber_best_start = match (cops_win, root[best]) {
            (true, Next::State(id)) => {
                let replies = &self.succ[id as usize];
                let top = replies.iter().map(value_of).max().unwrap_or(0);
                replies.iter().position(|n| value_of(n) == top)
            }
            _ => None,
        };
        SolveResult {
            cops_win,
            capture_time: cops_win.then_some(best_v),
            optimal_cop_start: self.placements[best].clone(),
            robber_best_start,
            states_explored: self.values.len() as u64,
            method: Method::ValueIteration,
        }
    }
}
