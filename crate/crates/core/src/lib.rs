//! Cops and robbers with bridge-burning: the robber destroys every edge it
//! travels along.
//!
//! * [`graph`]: simple undirected graphs, burned-edge sets, JSON and DOT I/O.
//! * [`game`]: positions, legal moves and the transition function.
//! * [`solver`]: exact cop number and capture time for small graphs.
//! * [`families`]: standard families, random graphs and the slow-capture
//!   construction `G_k`.
//! * [`sim`]: scripted strategies on `G_k` and a referee.

pub mod error;
pub mod euler;
pub mod families;
pub mod game;
pub mod graph;
pub mod sim;
pub mod solver;

pub use error::{Error, Result};
pub use game::{apply, legal_moves, GameState, Move, Step, Turn};
pub use graph::{parse_graph, render_graph, BurnSet, EdgeId, Graph, GraphDocument, Vertex};
pub use solver::{cop_number, solve_k, solve_with, Method, SolveResult};
