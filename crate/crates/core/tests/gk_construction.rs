use std::collections::BTreeSet;

use bridgeburn::families::{build_gk, doors_unguarded, GkDescriptor, Role};
use bridgeburn::graph::{BurnSet, Vertex};

/// Edge count of G_k tallied one union term at a time (m = 3n).
fn tallied_edges(k: usize, n: usize) -> usize {
    let m = 3 * n;
    let extra = k - 3;
    let pqx_cycle = 2 * (m - 1) + 4;
    let d_x = 2 * m + 2;
    let x_core = 2 * m;
    let core = m * m;
    let xy_doors_to_pqx = 4 * (2 * m + 2);
    let xy_doors_to_core = 4 * m;
    // ring, d_a, d_{a,1/2} to the ring, d_{a,1/2} to X u Y, a to x_1
    let a_block = m + m + 2 * m + 4 * m + m;
    let b_block = a_block;
    // six doors: X u Y, x_1 and x_2, off-class p and q (2n each), a-segment (n)
    let a_classed = 6 * (2 * m) + 6 * 2 + 6 * (2 * 2 * n) + 6 * n;
    // six doors: X u Y, off-class a (2n), b-segment (n)
    let b_classed = 6 * (2 * m) + 6 * (2 * n) + 6 * n;
    let per_u = m + m + 6 * (2 * m) + 6 * (2 * n) + 6 * n;
    let holes = 23 + 7 * extra;
    pqx_cycle
        + d_x
        + x_core
        + core
        + xy_doors_to_pqx
        + xy_doors_to_core
        + a_block
        + b_block
        + a_classed
        + b_classed
        + extra * per_u
        + holes
}

fn tallied_vertices(k: usize, n: usize) -> usize {
    let m = 3 * n;
    let cycles = 2 * m + 2 + m * (k - 1);
    let core = 2 * m;
    cycles + core + 2 * (23 + 7 * (k - 3))
}

fn all() -> impl Iterator<Item = (usize, usize)> {
    (3..=5).flat_map(|k| (1..=4).map(move |n| (k, n)))
}

#[test]
fn counts_match_the_tally() {
    for (k, n) in all() {
        let d = build_gk(k, n).unwrap();
        assert_eq!(d.graph.edge_count(), tallied_edges(k, n), "edges k={k} n={n}");
        assert_eq!(d.graph.vertex_count(), tallied_vertices(k, n), "vertices k={k} n={n}");
        assert_eq!(d.doors.len(), 23 + 7 * (k - 3));
    }
}

#[test]
fn frozen_edge_counts_for_k3() {
    let got: Vec<usize> = (1..=6).map(|n| build_gk(3, n).unwrap().graph.edge_count()).collect();
    assert_eq!(got, vec![284, 539, 812, 1103, 1412, 1739]);
}

#[test]
fn holes_hang_off_their_doors() {
    for (k, n) in all() {
        let d = build_gk(k, n).unwrap();
        let g = &d.graph;
        let holes: Vec<Vertex> = (0..g.vertex_count())
            .filter(|&v| matches!(d.role(v), Role::Hole(_)))
            .collect();
        let doors = (0..g.vertex_count()).filter(|&v| d.is_door(v)).count();
        assert_eq!(holes.len(), doors);
        for &(door, hole) in &d.doors {
            assert_eq!(g.degree(hole), 1);
            assert_eq!(g.adjacency(hole)[0].0, door);
            let (Role::Door(dn), Role::Hole(hn)) = (d.role(door), d.role(hole)) else {
                panic!("roles");
            };
            assert_eq!(dn.trim_start_matches("d_"), hn.trim_start_matches("h_"));
        }
    }
}

fn neighbours(d: &GkDescriptor, v: Vertex) -> BTreeSet<Vertex> {
    d.graph.adjacency(v).iter().map(|&(w, _)| w).collect()
}

#[test]
fn core_and_hub_completeness() {
    for (k, n) in all() {
        let d = build_gk(k, n).unwrap();
        assert_eq!(d.x_set.len(), 3 * n);
        assert_eq!(d.y_set.len(), 3 * n);
        for &x in &d.x_set {
            let nb = neighbours(&d, x);
            assert!(d.y_set.iter().all(|y| nb.contains(y)));
            assert!(d.x_set.iter().all(|y| !nb.contains(y)));
        }
        let x1 = neighbours(&d, d.x1);
        assert!(d.cycle(1).iter().chain(&d.x_set).all(|v| x1.contains(v)));
        let x2 = neighbours(&d, d.x2);
        assert!(d.cycle(2).iter().chain(&d.y_set).all(|v| x2.contains(v)));
    }
}

#[test]
fn only_listed_edges_between_non_pendant_vertices() {
    for (k, n) in all() {
        let d = build_gk(k, n).unwrap();
        let pendant = |v: Vertex| matches!(d.role(v), Role::Door(_) | Role::Hole(_));
        let key = |u: Vertex, v: Vertex| (u.min(v), u.max(v));
        let mut expected = BTreeSet::new();
        for l in 0..d.level_count() {
            let c = d.cycle(l);
            for i in 0..c.len() {
                expected.insert(key(c[i], c[(i + 1) % c.len()]));
            }
        }
        for &x in &d.x_set {
            expected.insert(key(d.x1, x));
            for &y in &d.y_set {
                expected.insert(key(x, y));
            }
        }
        for &y in &d.y_set {
            expected.insert(key(d.x2, y));
        }
        for &a in d.cycle(1) {
            expected.insert(key(d.x1, a));
        }
        for &b in d.cycle(2) {
            expected.insert(key(d.x2, b));
        }
        let actual: BTreeSet<_> = d
            .graph
            .edges()
            .iter()
            .filter(|&&(u, v)| !pendant(u) && !pendant(v))
            .map(|&(u, v)| key(u, v))
            .collect();
        assert_eq!(actual, expected, "k={k} n={n}");
    }
}

#[test]
fn standard_position_covers_every_door() {
    for (k, n) in all() {
        let d = build_gk(k, n).unwrap();
        let sp = d.standard_position();
        assert_eq!(sp.len(), k);
        assert!(doors_unguarded(&d, &sp, &BurnSet::new()).is_empty(), "k={k} n={n}");
        assert_eq!(doors_unguarded(&d, &[], &BurnSet::new()).len(), d.doors.len());
    }
}

#[test]
fn cops_off_their_cycles_leave_doors_open() {
    let d = build_gk(3, 2).unwrap();
    let (a1, b1) = (d.cycle(1)[0], d.cycle(2)[0]);
    let burn = BurnSet::new();
    // Charlie on d_x instead of his cycle: d_{X,1} is exposed.
    let on_door = doors_unguarded(&d, &[a1, b1, d.door_named("d_x").unwrap()], &burn);
    assert!(on_door.contains(&d.door_named("d_X,1").unwrap()));
    // Alex off the a-cycle (on x_1 with Charlie): d_a is exposed.
    let crowded = doors_unguarded(&d, &[d.x1, b1, d.x1], &burn);
    assert!(crowded.contains(&d.door_named("d_a").unwrap()));
    // Burning the only guarding edge exposes a door too.
    let sp = d.standard_position();
    let dx = d.door_named("d_x").unwrap();
    let e = d.graph.edge_index(d.x1, dx).unwrap().unwrap();
    let mut burned = BurnSet::new();
    burned.insert(e);
    assert_eq!(doors_unguarded(&d, &sp, &burned), vec![dx]);
}

#[test]
fn labels_name_every_vertex() {
    let d = build_gk(4, 1).unwrap();
    let labels = d.graph.labels();
    assert_eq!(labels.len(), d.graph.vertex_count());
    assert_eq!(labels[&d.x1], "X1");
    assert_eq!(labels[&d.cycle(3)[0]], "U(1,1)");
    assert!(labels.values().any(|l| l == "Door(d_u^1,3,2)"));
}
