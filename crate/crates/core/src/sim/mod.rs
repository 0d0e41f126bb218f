//! Scripted strategies on `G_k` and a referee that plays them against each
//! other under the engine's rules.

mod cascade;
mod delay;
mod greedy;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{doors_unguarded, GkDescriptor};
use crate::game::{apply, GameState, Move, Step, Turn};
use crate::graph::Vertex;

pub use cascade::{cop_cascade_policy, CascadeCops};
pub use delay::{core_walk, robber_delay_policy, DelayRobber};
pub use greedy::{greedy_cycle_capture, CycleEvader, GreedyCapture};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Play(Move),
    /// The policy has nothing left to play (the robber's walk ran out).
    Exhausted,
}

/// A deterministic strategy for one side. Implementations keep whatever
/// private memory they need between calls.
pub trait Policy {
    fn decide(&mut self, state: &GameState) -> Result<Decision>;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Outcome {
    Captured { round: u32 },
    WalkExhausted { round: u32 },
    DoorBreach { round: u32, door: Vertex },
    CapReached { round: u32 },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationTrace {
    /// Rounds started.
    pub rounds_played: u32,
    /// Robber steps that were not a pass.
    pub robber_forced_moves: u32,
    /// Cop turns spent per traversal of Charlie between `x_1` and `x_2`,
    /// counted from one arrival to the next.
    pub cop_steps_per_oscillation: Vec<u64>,
    /// Individual cop steps (cops that actually moved) per traversal.
    pub cop_moves_per_oscillation: Vec<u64>,
    pub outcome: Option<Outcome>,
    pub door_coverage_violations: u32,
    /// Cop turns that left some cop off its home cycle while the robber
    /// was in `X u Y`.
    pub confinement_violations: u32,
}

impl SimulationTrace {
    pub fn mean_oscillation_cost(&self) -> Option<f64> {
        let c = &self.cop_steps_per_oscillation;
        (!c.is_empty()).then(|| c.iter().sum::<u64>() as f64 / c.len() as f64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEvent {
    pub round: u32,
    pub mover: &'static str,
    #[serde(rename = "move")]
    pub mv: String,
    pub burn_size: usize,
    pub unguarded_doors: Vec<Vertex>,
}

/// Default round cap, `10 * (3n)^(k+2)`.
pub fn default_round_cap(k: usize, n: usize) -> u32 {
    let v = 10.0 * ((3 * n) as f64).powi(k as i32 + 2);
    v.min(u32::MAX as f64) as u32
}

pub fn simulate(
    d: &GkDescriptor,
    cops: &mut dyn Policy,
    robber: &mut dyn Policy,
    round_cap: u32,
) -> Result<SimulationTrace> {
    simulate_traced(d, cops, robber, round_cap, None)
}

fn on_home_cycles(d: &GkDescriptor, cops: &[Vertex]) -> bool {
    let mut levels: Vec<Option<usize>> = cops.iter().map(|&c| d.level_of(c)).collect();
    levels.sort_unstable();
    levels.iter().enumerate().all(|(i, &l)| l == Some(i)) && levels.len() == d.level_count()
}

/// Number of cops that changed vertex, assuming no two cops swap places.
fn moved_count(before: &[Vertex], after: &[Vertex]) -> u64 {
    let mut old = before.to_vec();
    let mut fresh = 0;
    for v in after {
        match old.iter().position(|o| o == v) {
            Some(i) => {
                old.swap_remove(i);
            }
            None => fresh += 1,
        }
    }
    fresh
}

pub fn simulate_traced(
    d: &GkDescriptor,
    cops: &mut dyn Policy,
    robber: &mut dyn Policy,
    round_cap: u32,
    mut sink: Option<&mut dyn FnMut(&TraceEvent)>,
) -> Result<SimulationTrace> {
    if round_cap == 0 {
        return Err(Error::Input("round cap must be positive".into()));
    }
    let g = &d.graph;
    let mut state = GameState::new(d.k);
    let mut trace = SimulationTrace::default();
    let mut charlie_at = d.x1;
    let (mut turns_since, mut moves_since) = (0u64, 0u64);

    loop {
        if state.turn() == Turn::CopsToMove && state.round() >= round_cap {
            trace.rounds_played = state.round();
            trace.outcome = Some(Outcome::CapReached { round: state.round() });
            return Ok(trace);
        }
        let cop_side = matches!(state.turn(), Turn::CopPlacement | Turn::CopsToMove);
        let policy: &mut dyn Policy = if cop_side { &mut *cops } else { &mut *robber };
        let mv = match policy.decide(&state)? {
            Decision::Play(m) => m,
            Decision::Exhausted => {
                let round = state.round() + 1;
                trace.rounds_played = round;
                trace.outcome = Some(if cop_side {
                    Outcome::CapReached { round }
                } else {
                    Outcome::WalkExhausted { round }
                });
                return Ok(trace);
            }
        };
        let before = state.clone();
        state = apply(g, &before, &mv).map_err(|e| {
            Error::Contract(format!("{} policy played an illegal move: {e}", if cop_side { "cop" } else { "robber" }))
        })?;
        if let Move::RobberStep(Step::To(_)) = mv {
            trace.robber_forced_moves += 1;
        }

        let unguarded = if state.cops().is_empty() {
            Vec::new()
        } else {
            doors_unguarded(d, state.cops(), state.burn())
        };
        if let Some(s) = sink.as_deref_mut() {
            s(&TraceEvent {
                round: state.round(),
                mover: if cop_side { "cops" } else { "robber" },
                mv: mv.to_string(),
                burn_size: state.burn().len(),
                unguarded_doors: unguarded.clone(),
            });
        }
        if state.is_terminal() {
            let round = state.capture_round().expect("terminal");
            trace.rounds_played = round;
            trace.outcome = Some(Outcome::Captured { round });
            return Ok(trace);
        }
        if !cop_side {
            continue;
        }

        if let Some(&door) = unguarded.first() {
            trace.door_coverage_violations += 1;
            let round = state.round() + u32::from(state.turn() == Turn::RobberToMove);
            trace.rounds_played = round;
            trace.outcome = Some(Outcome::DoorBreach { round, door });
            return Ok(trace);
        }
        if let Some(r) = state.robber() {
            if d.in_core(r) && !on_home_cycles(d, state.cops()) {
                trace.confinement_violations += 1;
            }
        }
        if before.turn() == Turn::CopsToMove {
            turns_since += 1;
            moves_since += moved_count(before.cops(), state.cops());
            let x_now = [d.x1, d.x2]
                .into_iter()
                .find(|x| state.cops().contains(x) && !before.cops().contains(x));
            if let Some(x) = x_now {
                if x != charlie_at {
                    trace.cop_steps_per_oscillation.push(turns_since);
                    trace.cop_moves_per_oscillation.push(moves_since);
                }
                charlie_at = x;
                turns_since = 0;
                moves_since = 0;
            }
        }
    }
}
