use bridgeburn::families::{complete_bipartite, cycle, empty, path, random_gnp};
use bridgeburn::solver::{
    capture_time, capture_time_upper_bound, cop_number, solve_with, Method,
};
use bridgeburn::{Graph, Vertex};

const METHODS: [Method; 2] = [Method::LayeredRetrograde, Method::ValueIteration];

fn both(g: &Graph, k: usize) -> (bool, Option<u32>) {
    let a = solve_with(g, k, Method::LayeredRetrograde).unwrap();
    let b = solve_with(g, k, Method::ValueIteration).unwrap();
    assert_eq!(a.verdict(), b.verdict(), "methods disagree at k={k}");
    assert_eq!(a.optimal_cop_start, b.optimal_cop_start);
    assert_eq!(a.robber_best_start, b.robber_best_start);
    a.verdict()
}

#[test]
fn hand_checked_small_graphs() {
    let k1 = empty(1).unwrap();
    assert_eq!(capture_time(&k1).unwrap(), (1, 0));
    let p2 = path(2).unwrap();
    assert_eq!(capture_time(&p2).unwrap(), (1, 1));
    for m in METHODS {
        let r = solve_with(&p2, 1, m).unwrap();
        assert_eq!(r.optimal_cop_start, vec![0]);
        assert_eq!(r.robber_best_start, Some(1));
    }
    let two = empty(2).unwrap();
    assert_eq!(both(&two, 1), (false, None));
    assert_eq!(both(&two, 2), (true, Some(0)));
    assert_eq!(capture_time(&two).unwrap(), (2, 0));
    assert_eq!(cop_number(&two, 3).unwrap().c_b, Some(2));
    assert_eq!(cop_number(&path(5).unwrap(), 2).unwrap().c_b, Some(1));
}

#[test]
fn path_golden_values() {
    // Beyond five vertices the robber places next to a leaf, two steps from
    // the cop, and retreats onto the leaf when threatened.
    let golden: [(usize, Option<u32>); 8] = [
        (1, Some(0)),
        (2, Some(1)),
        (3, Some(1)),
        (4, Some(2)),
        (5, Some(2)),
        (6, None),
        (7, None),
        (8, None),
    ];
    for (n, t) in golden {
        assert_eq!(both(&path(n).unwrap(), 1), (t.is_some(), t), "P_{n}");
    }
}

#[test]
fn cycle_golden_values() {
    let golden: [(usize, u32, u32); 6] = [
        (3, 1, 1),
        (4, 3, 1),
        (5, 4, 1),
        (6, 6, 1),
        (7, 7, 2),
        (8, 9, 2),
    ];
    for (n, one, two) in golden {
        let g = cycle(n).unwrap();
        assert_eq!(both(&g, 1), (true, Some(one)), "C_{n}, one cop");
        assert_eq!(both(&g, 2), (true, Some(two)), "C_{n}, two cops");
    }
}

#[test]
fn complete_bipartite_golden_values() {
    let g = complete_bipartite(2, 2).unwrap();
    assert_eq!(both(&g, 1), (true, Some(3)));
    assert_eq!(both(&g, 2), (true, Some(1)));
    assert_eq!(capture_time(&g).unwrap(), (1, 3));
}

fn small_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((format!("P_{n}"), path(n).unwrap()));
        out.push((format!("E_{n}"), empty(n).unwrap()));
    }
    for n in 3..=6 {
        out.push((format!("C_{n}"), cycle(n).unwrap()));
    }
    for seed in 0..20 {
        out.push((format!("G(5,0.4)#{seed}"), random_gnp(5, 0.4, seed).unwrap()));
    }
    out
}

#[test]
fn more_cops_never_slower() {
    for (name, g) in small_graphs() {
        let mut prev: Option<u32> = None;
        for k in 1..=3 {
            let r = solve_with(&g, k, Method::LayeredRetrograde).unwrap();
            if let Some(p) = prev {
                let t = r.capture_time.unwrap_or_else(|| panic!("{name}: {k} cops lose after {} won", k - 1));
                assert!(t <= p, "{name}: k={k} time {t} > {p}");
            }
            prev = r.capture_time.or(prev);
        }
    }
}

#[test]
fn upper_bound_holds() {
    for (name, g) in small_graphs() {
        let (c, t) = capture_time(&g).unwrap();
        let bound = capture_time_upper_bound(g.vertex_count(), c);
        assert!(f64::from(t) <= bound, "{name}: capt {t} > bound {bound}");
    }
}

/// Appends a door `d` adjacent to `attach` and a hole adjacent only to `d`.
fn with_pendant_door(g: &Graph, attach: &[Vertex]) -> Graph {
    let n = g.vertex_count();
    let mut edges = g.edges().to_vec();
    edges.extend(attach.iter().map(|&v| (v, n)));
    edges.push((n, n + 1));
    Graph::new(n + 2, edges).unwrap()
}

#[test]
fn pendant_doors_never_lower_the_cop_number() {
    let bases = [
        path(3).unwrap(),
        path(4).unwrap(),
        cycle(4).unwrap(),
        complete_bipartite(2, 2).unwrap(),
        empty(2).unwrap(),
    ];
    for g in &bases {
        let before = capture_time(g).unwrap().0;
        let n = g.vertex_count();
        let mut door_a = with_pendant_door(g, &[0]);
        assert!(capture_time(&door_a).unwrap().0 >= before);
        // A second door watching a disjoint neighbourhood.
        door_a = with_pendant_door(&door_a, &[n - 1]);
        assert!(capture_time(&door_a).unwrap().0 >= before);
    }
}
