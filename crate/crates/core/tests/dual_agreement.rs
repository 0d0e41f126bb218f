//! The layered retrograde solver and the value-iteration oracle must agree
//! on every position the oracle tabulates, not just at the root.

use bridgeburn::families::{complete_bipartite, cycle, path, random_gnp};
use bridgeburn::solver::{retro, vi, SolvedGame, SolverOptions};
use bridgeburn::Graph;

fn agree_everywhere(name: &str, g: &Graph, k: usize) -> usize {
    let opts = SolverOptions::default();
    let a = retro::solve(g, k, opts).unwrap();
    let b = vi::solve(g, k, opts).unwrap();
    assert_eq!(a.result().verdict(), b.result().verdict(), "{name} k={k} root");
    let mut checked = 0;
    for s in b.positions() {
        assert_eq!(a.value(s).unwrap(), b.value(s).unwrap(), "{name} k={k} at {s}");
        checked += 1;
    }
    checked
}

#[test]
fn paths_and_cycles() {
    for k in 1..=2 {
        for n in 1..=6 {
            assert!(agree_everywhere(&format!("P_{n}"), &path(n).unwrap(), k) > 0);
        }
        for n in 3..=6 {
            agree_everywhere(&format!("C_{n}"), &cycle(n).unwrap(), k);
        }
    }
    agree_everywhere("K_2,3", &complete_bipartite(2, 3).unwrap(), 1);
}

#[test]
fn random_graphs() {
    for seed in 0..25 {
        let g = random_gnp(6, 0.5, 1000 + seed).unwrap();
        for k in 1..=2 {
            agree_everywhere(&format!("G(6,0.5)#{seed}"), &g, k);
        }
    }
}
