//! The robber's delaying walk through the `X u Y` core.

use crate::error::{Error, Result};
use crate::euler::euler_trail;
use crate::families::GkDescriptor;
use crate::game::{GameState, Move, Step, Turn};
use crate::graph::Vertex;

use super::{Decision, Policy};

/// A walk through `X x Y` from `start` that never repeats an edge.
///
/// For even `n` every core vertex has even degree `3n`, and the walk is an
/// Euler circuit of all `9n^2` core edges. For odd `n` it is an Euler trail
/// of the core minus the matching `X_i Y_i` for every `i` other than the
/// index of `start`, so it runs from `start` to its partner on the other
/// side and has `9n^2 - 3n + 1` edges.
pub fn core_walk(d: &GkDescriptor, start: Vertex) -> Result<Vec<Vertex>> {
    let m = d.x_set.len();
    let side_index = |set: &[Vertex]| set.iter().position(|&v| v == start);
    let t = side_index(&d.x_set)
        .or_else(|| side_index(&d.y_set))
        .ok_or_else(|| Error::Contract(format!("walk start {start} is not in X u Y")))?;
    let odd = m % 2 == 1;
    let mut edges = Vec::with_capacity(m * m);
    for (i, &x) in d.x_set.iter().enumerate() {
        for (j, &y) in d.y_set.iter().enumerate() {
            if odd && i == j && i != t {
                continue;
            }
            edges.push((x, y));
        }
    }
    let walk = euler_trail(d.graph.vertex_count(), &edges, start)
        .expect("core minus the matching has the right parity and is connected");
    Ok(walk)
}

/// Sits still until a cop is live-adjacent, then takes the next step of a
/// precomputed [`core_walk`]. Gives up (`Exhausted`) when the next walk
/// edge has been burned or the walk is used up.
#[derive(Debug, Clone)]
pub struct DelayRobber<'a> {
    d: &'a GkDescriptor,
    walk: Vec<Vertex>,
    at: usize,
}

/// The delay robber starting at `Y_1`, the side Charlie (on `x_1`) does
/// not see.
pub fn robber_delay_policy(d: &GkDescriptor) -> DelayRobber<'_> {
    DelayRobber::starting_at(d, d.y_set[0]).expect("Y_1 is in the core")
}

impl<'a> DelayRobber<'a> {
    pub fn starting_at(d: &'a GkDescriptor, start: Vertex) -> Result<Self> {
        Ok(Self {
            d,
            walk: core_walk(d, start)?,
            at: 0,
        })
    }

    pub fn walk(&self) -> &[Vertex] {
        &self.walk
    }

    /// Number of edges in the planned walk.
    pub fn walk_len(&self) -> usize {
        self.walk.len() - 1
    }
}

impl Policy for DelayRobber<'_> {
    fn decide(&mut self, state: &GameState) -> Result<Decision> {
        match state.turn() {
            Turn::RobberPlacement => {
                self.at = 0;
                return Ok(Decision::Play(Move::PlaceRobber(self.walk[0])));
            }
            Turn::RobberToMove => {}
            t => return Err(Error::Contract(format!("delay robber asked to move on {t}"))),
        }
        let g = &self.d.graph;
        let r = state.robber().expect("robber placed");
        if r != self.walk[self.at] {
            return Err(Error::Contract(format!(
                "delay robber expected to be at {} but is at {r}",
                self.walk[self.at]
            )));
        }
        let burn = state.burn();
        if !state.cops().iter().any(|&c| g.is_live_adjacent(burn, c, r)) {
            return Ok(Decision::Play(Move::RobberStep(Step::Pass)));
        }
        let Some(&next) = self.walk.get(self.at + 1) else {
            return Ok(Decision::Exhausted);
        };
        if !g.is_live_adjacent(burn, r, next) {
            return Ok(Decision::Exhausted);
        }
        self.at += 1;
        Ok(Decision::Play(Move::RobberStep(Step::To(next))))
    }
}
