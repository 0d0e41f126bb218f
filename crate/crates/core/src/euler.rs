//! Eulerian trails and circuits (Hierholzer).

use crate::graph::Vertex;

/// An Eulerian trail starting at `start` that uses every edge exactly once,
/// as the sequence of visited vertices. `None` when no such trail exists:
/// the edges are disconnected, or the odd-degree vertices are not either
/// absent or exactly `start` and one other vertex.
pub fn euler_trail(vertex_count: usize, edges: &[(Vertex, Vertex)], start: Vertex) -> Option<Vec<Vertex>> {
    if start >= vertex_count {
        return None;
    }
    let mut adj: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); vertex_count];
    for (e, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    let odd: Vec<Vertex> = (0..vertex_count).filter(|&v| adj[v].len() % 2 == 1).collect();
    match odd.len() {
        0 => {}
        2 if odd.contains(&start) => {}
        _ => return None,
    }
    if edges.is_empty() {
        return Some(vec![start]);
    }
    if adj[start].is_empty() {
        return None;
    }

    let mut used = vec![false; edges.len()];
    let mut cursor = vec![0usize; vertex_count];
    let mut stack = vec![start];
    let mut trail = Vec::with_capacity(edges.len() + 1);
    while let Some(&v) = stack.last() {
        let list = &adj[v];
        while cursor[v] < list.len() && used[list[cursor[v]].1] {
            cursor[v] += 1;
        }
        if cursor[v] == list.len() {
            trail.push(v);
            stack.pop();
        } else {
            let (w, e) = list[cursor[v]];
            used[e] = true;
            stack.push(w);
        }
    }
    if trail.len() != edges.len() + 1 {
        // Some edges live in another component.
        return None;
    }
    trail.reverse();
    Some(trail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn check(vertex_count: usize, edges: &[(Vertex, Vertex)], start: Vertex) -> Vec<Vertex> {
        let t = euler_trail(vertex_count, edges, start).expect("trail exists");
        assert_eq!(t[0], start);
        let mut seen = HashSet::new();
        for w in t.windows(2) {
            let key = (w[0].min(w[1]), w[0].max(w[1]));
            assert!(edges.iter().any(|&(u, v)| (u.min(v), u.max(v)) == key));
            assert!(seen.insert(key), "edge {key:?} repeated");
        }
        assert_eq!(seen.len(), edges.len());
        t
    }

    #[test]
    fn circuit_of_k44() {
        let edges: Vec<_> = (0..4).flat_map(|u| (4..8).map(move |v| (u, v))).collect();
        let t = check(8, &edges, 5);
        assert_eq!(t.len(), 17);
        assert_eq!(t.last(), Some(&5));
    }

    #[test]
    fn trail_between_odd_vertices() {
        let path = [(0, 1), (1, 2), (2, 3)];
        assert_eq!(check(4, &path, 0), vec![0, 1, 2, 3]);
        assert!(euler_trail(4, &path, 1).is_none());
    }

    #[test]
    fn rejections() {
        // Two disjoint triangles.
        let two = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        assert!(euler_trail(6, &two, 0).is_none());
        // K_4 has four odd vertices.
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert!(euler_trail(4, &k4, 0).is_none());
        assert_eq!(euler_trail(3, &[], 2), Some(vec![2]));
    }
}
