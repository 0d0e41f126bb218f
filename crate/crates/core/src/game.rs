//! The bridge-burning game as a deterministic state machine.
//!
//! Cops place first, then the robber; afterwards the cops (all of them,
//! each stepping or staying) and the robber alternate. A robber step along
//! `uv` erases `uv` for everybody. Capture is checked after every placement
//! and every step.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{BurnSet, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Turn {
    CopPlacement,
    RobberPlacement,
    CopsToMove,
    RobberToMove,
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Turn::CopPlacement => "CopPlacement",
            Turn::RobberPlacement => "RobberPlacement",
            Turn::CopsToMove => "CopsToMove",
            Turn::RobberToMove => "RobberToMove",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Pass,
    To(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    PlaceCops(Vec<Vertex>),
    PlaceRobber(Vertex),
    /// Resulting (sorted) cop positions. Legal when the current cops can
    /// be matched to them, each staying put or crossing one live edge.
    CopStep(Vec<Vertex>),
    RobberStep(Step),
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::PlaceCops(c) => write!(f, "place-cops {c:?}"),
            Move::PlaceRobber(v) => write!(f, "place-robber {v}"),
            Move::CopStep(c) => write!(f, "cops {c:?}"),
            Move::RobberStep(Step::Pass) => f.write_str("robber pass"),
            Move::RobberStep(Step::To(v)) => write!(f, "robber {v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameState {
    cop_count: usize,
    cops: Vec<Vertex>,
    robber: Option<Vertex>,
    burn: BurnSet,
    turn: Turn,
    round: u32,
}

impl GameState {
    /// Fresh game for `cop_count` cops, waiting for cop placement.
    pub fn new(cop_count: usize) -> Self {
        Self {
            cop_count,
            cops: Vec::new(),
            robber: None,
            burn: BurnSet::new(),
            turn: Turn::CopPlacement,
            round: 0,
        }
    }

    /// A mid-game position; cops are canonicalized.
    pub fn in_play(mut cops: Vec<Vertex>, robber: Vertex, burn: BurnSet, turn: Turn, round: u32) -> Self {
        cops.sort_unstable();
        Self {
            cop_count: cops.len(),
            cops,
            robber: Some(robber),
            burn,
            turn,
            round,
        }
    }

    pub fn cop_count(&self) -> usize {
        self.cop_count
    }

    pub fn cops(&self) -> &[Vertex] {
        &self.cops
    }

    pub fn robber(&self) -> Option<Vertex> {
        self.robber
    }

    pub fn burn(&self) -> &BurnSet {
        &self.burn
    }

    pub fn turn(&self) -> Turn {
        self.turn
    }

    /// Completed rounds.
    pub fn round(&self) -> u32 {
        self.round
    }

    pub fn is_terminal(&self) -> bool {
        self.robber.is_some_and(|r| self.cops.contains(&r))
    }

    /// Capture time in rounds for a captured state: 0 when the robber was
    /// captured on placement, otherwise the number of the round in which
    /// the capture happened.
    pub fn capture_round(&self) -> Option<u32> {
        if !self.is_terminal() {
            return None;
        }
        Some(match self.turn {
            Turn::RobberToMove => self.round + 1,
            _ => self.round,
        })
    }

    /// The same position with the round counter cleared.
    pub fn position(&self) -> GameState {
        GameState {
            round: 0,
            ..self.clone()
        }
    }
}

impl fmt::Display for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cops: Vec<String> = self.cops.iter().map(|c| c.to_string()).collect();
        let burn: Vec<String> = self.burn.iter().map(|e| e.to_string()).collect();
        let rob = self.robber.map_or_else(|| "-".to_string(), |r| r.to_string());
        write!(
            f,
            "cops=[{}] rob={rob} burn={{{}}} turn={} round={}",
            cops.join(","),
            burn.join(","),
            self.turn,
            self.round
        )
    }
}

pub fn is_capture(s: &GameState) -> Result<bool> {
    match s.robber {
        None => Err(Error::Contract("robber is not placed".into())),
        Some(_) => Ok(s.is_terminal()),
    }
}

/// Every sorted `k`-tuple over `0..n` (multisets), in lexicographic order.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    if n == 0 && k > 0 {
        return out;
    }
    let mut cur = vec![0; k];
    loop {
        out.push(cur.clone());
        // Advance like an odometer that never decreases left to right.
        let Some(i) = (0..k).rev().find(|&i| cur[i] + 1 < n) else {
            return out;
        };
        let v = cur[i] + 1;
        for c in cur.iter_mut().skip(i) {
            *c = v;
        }
    }
}

/// Sorted, deduplicated positions reachable by one cop turn.
pub fn cop_successors(g: &Graph, burn: &BurnSet, cops: &[Vertex]) -> Vec<Vec<Vertex>> {
    let options: Vec<Vec<Vertex>> = cops
        .iter()
        .map(|&c| {
            let mut o = vec![c];
            o.extend(g.live(burn, c).map(|(w, _)| w));
            o
        })
        .collect();
    let mut out: Vec<Vec<Vertex>> = vec![Vec::with_capacity(cops.len())];
    for opts in &options {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&o| {
                    let mut p = prefix.clone();
                    p.push(o);
                    p
                })
            })
            .collect();
    }
    for t in &mut out {
        t.sort_unstable();
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub fn legal_moves(g: &Graph, s: &GameState) -> Result<Vec<Move>> {
    if s.is_terminal() {
        return Err(Error::Contract(format!("no moves in a terminal state: {s}")));
    }
    let n = g.vertex_count();
    Ok(match s.turn {
        Turn::CopPlacement => multisets(n, s.cop_count)
            .into_iter()
            .map(Move::PlaceCops)
            .collect(),
        Turn::RobberPlacement => (0..n).map(Move::PlaceRobber).collect(),
        Turn::CopsToMove => cop_successors(g, &s.burn, &s.cops)
            .into_iter()
            .map(Move::CopStep)
            .collect(),
        Turn::RobberToMove => {
            let r = s.robber.expect("robber placed while moving");
            std::iter::once(Move::RobberStep(Step::Pass))
                .chain(g.live(&s.burn, r).map(|(w, _)| Move::RobberStep(Step::To(w))))
                .collect()
        }
    })
}

/// Whether each cop in `from` can be assigned a distinct target in `to`
/// that it can reach in one step (bipartite matching).
fn cops_can_reach(g: &Graph, burn: &BurnSet, from: &[Vertex], to: &[Vertex]) -> bool {
    fn reach(g: &Graph, burn: &BurnSet, a: Vertex, b: Vertex) -> bool {
        a == b || g.is_live_adjacent(burn, a, b)
    }
    fn augment(
        g: &Graph,
        burn: &BurnSet,
        from: &[Vertex],
        to: &[Vertex],
        i: usize,
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for j in 0..to.len() {
            if seen[j] || !reach(g, burn, from[i], to[j]) {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none_or(|o| augment(g, burn, from, to, o, seen, owner)) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }
    if from.len() != to.len() {
        return false;
    }
    let mut owner = vec![None; to.len()];
    (0..from.len()).all(|i| {
        let mut seen = vec![false; to.len()];
        augment(g, burn, from, to, i, &mut seen, &mut owner)
    })
}

pub fn apply(g: &Graph, s: &GameState, m: &Move) -> Result<GameState> {
    if s.is_terminal() {
        return Err(Error::Contract(format!("game already over: {s}")));
    }
    let n = g.vertex_count();
    let illegal = || Error::Contract(format!("illegal move {m} in state {s}"));
    let mut next = s.clone();
    match (s.turn, m) {
        (Turn::CopPlacement, Move::PlaceCops(cops)) => {
            if cops.len() != s.cop_count || cops.iter().any(|&c| c >= n) {
                return Err(illegal());
            }
            next.cops = cops.clone();
            next.cops.sort_unstable();
            next.turn = Turn::RobberPlacement;
        }
        (Turn::RobberPlacement, &Move::PlaceRobber(v)) => {
            if v >= n {
                return Err(illegal());
            }
            next.robber = Some(v);
            next.turn = Turn::CopsToMove;
        }
        (Turn::CopsToMove, Move::CopStep(dest)) => {
            let mut dest = dest.clone();
            dest.sort_unstable();
            if dest.iter().any(|&c| c >= n) || !cops_can_reach(g, &s.burn, &s.cops, &dest) {
                return Err(illegal());
            }
            next.cops = dest;
            next.turn = Turn::RobberToMove;
        }
        (Turn::RobberToMove, Move::RobberStep(step)) => {
            let r = s.robber.expect("robber placed while moving");
            if let Step::To(v) = *step {
                let e = (v < n)
                    .then(|| g.edge_between(r, v))
                    .flatten()
                    .filter(|&e| !s.burn.contains(e))
                    .ok_or_else(illegal)?;
                next.burn.insert(e);
                next.robber = Some(v);
            }
            next.turn = Turn::CopsToMove;
            next.round += 1;
        }
        _ => return Err(illegal()),
    }
    Ok(next)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, vec![(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn cop_moves_on_path() {
        let g = p3();
        let s = GameState::in_play(vec![1], 2, BurnSet::new(), Turn::CopsToMove, 0);
        let moves = legal_moves(&g, &s).unwrap();
        assert_eq!(
            moves,
            vec![
                Move::CopStep(vec![0]),
                Move::CopStep(vec![1]),
                Move::CopStep(vec![2])
            ]
        );
    }

    #[test]
    fn robber_isolated_by_own_burn_can_only_pass() {
        let g = p3();
        let s = GameState::in_play(vec![0], 2, BurnSet::from_mask(0b10), Turn::RobberToMove, 1);
        assert_eq!(legal_moves(&g, &s).unwrap(), vec![Move::RobberStep(Step::Pass)]);
    }

    #[test]
    fn k1_robber_is_forced_onto_the_cop() {
        let g = Graph::new(1, vec![]).unwrap();
        let s = apply(&g, &GameState::new(1), &Move::PlaceCops(vec![0])).unwrap();
        assert_eq!(legal_moves(&g, &s).unwrap(), vec![Move::PlaceRobber(0)]);
        let s = apply(&g, &s, &Move::PlaceRobber(0)).unwrap();
        assert!(is_capture(&s).unwrap());
        assert_eq!(s.capture_round(), Some(0));
        assert!(legal_moves(&g, &s).is_err());
    }

    #[test]
    fn robber_step_burns_and_pass_does_not() {
        let g = p3();
        let s = GameState::in_play(vec![0], 1, BurnSet::new(), Turn::RobberToMove, 0);
        let moved = apply(&g, &s, &Move::RobberStep(Step::To(2))).unwrap();
        assert!(moved.burn().contains(1) && moved.burn().len() == 1);
        assert_eq!(moved.round(), 1);
        assert_eq!(moved.turn(), Turn::CopsToMove);
        let passed = apply(&g, &s, &Move::RobberStep(Step::Pass)).unwrap();
        assert!(passed.burn().is_empty());

        let c = GameState::in_play(vec![0], 2, BurnSet::from_mask(0b1), Turn::CopsToMove, 3);
        // Edge 0 is burned, so the cop cannot leave vertex 0.
        assert!(apply(&g, &c, &Move::CopStep(vec![1])).is_err());
        let c2 = GameState::in_play(vec![1], 2, BurnSet::from_mask(0b1), Turn::CopsToMove, 3);
        let after = apply(&g, &c2, &Move::CopStep(vec![2])).unwrap();
        assert_eq!(after.burn(), c2.burn());
        assert!(after.is_terminal());
        assert_eq!(after.capture_round(), Some(4));
    }

    #[test]
    fn capture_checks() {
        let s = GameState::in_play(vec![0], 0, BurnSet::new(), Turn::CopsToMove, 0);
        assert!(is_capture(&s).unwrap());
        let s = GameState::in_play(vec![0, 2], 1, BurnSet::new(), Turn::CopsToMove, 0);
        assert!(!is_capture(&s).unwrap());
        assert!(is_capture(&GameState::new(1)).is_err());
    }

    #[test]
    fn illegal_moves_are_rejected() {
        let g = p3();
        let s = GameState::in_play(vec![0], 2, BurnSet::new(), Turn::CopsToMove, 0);
        assert!(apply(&g, &s, &Move::CopStep(vec![2])).is_err());
        assert!(apply(&g, &s, &Move::RobberStep(Step::Pass)).is_err());
        let r = GameState::in_play(vec![0], 2, BurnSet::new(), Turn::RobberToMove, 0);
        assert!(apply(&g, &r, &Move::RobberStep(Step::To(0))).is_err());
        assert!(apply(&g, &GameState::new(2), &Move::PlaceCops(vec![0])).is_err());
    }

    #[test]
    fn two_cops_swap_and_share() {
        let g = p3();
        let s = GameState::in_play(vec![0, 1], 2, BurnSet::new(), Turn::CopsToMove, 0);
        // Cop at 0 -> 1 and cop at 1 -> 0 is the same multiset as staying.
        assert!(apply(&g, &s, &Move::CopStep(vec![0, 1])).is_ok());
        assert!(apply(&g, &s, &Move::CopStep(vec![1, 1])).is_ok());
        assert!(apply(&g, &s, &Move::CopStep(vec![1, 2])).is_ok());
        assert!(apply(&g, &s, &Move::CopStep(vec![2, 2])).is_err());
        let succ = cop_successors(&g, &BurnSet::new(), &[0, 1]);
        assert_eq!(succ, vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn multisets_enumerates_lexicographically() {
        assert_eq!(
            multisets(3, 2),
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2], vec![2, 2]]
        );
        assert_eq!(multisets(4, 3).len(), 20);
        assert_eq!(multisets(2, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn debug_line_format() {
        let s = GameState::in_play(vec![2, 0], 1, BurnSet::from_mask(0b101), Turn::RobberToMove, 4);
        assert_eq!(s.to_string(), "cops=[0,2] rob=1 burn={0,2} turn=RobberToMove round=4");
        assert_eq!(GameState::new(1).to_string(), "cops=[] rob=- burn={} turn=CopPlacement round=0");
    }
}
