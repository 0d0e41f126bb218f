use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::game::multisets;
use crate::graph::{BurnSet, Graph, Vertex};

/// Dense indexing of sorted cop tuples. Cops are interchangeable, so a
/// position only records the multiset of occupied vertices.
#[derive(Debug, Clone)]
pub struct CopTuples {
    tuples: Vec<Vec<Vertex>>,
    /// Occupied-vertex bitmask per tuple.
    occupied: Vec<u64>,
    index: HashMap<u64, u32>,
}

const BITS: u32 = 6;

fn pack(t: &[Vertex]) -> u64 {
    t.iter().fold(0u64, |acc, &v| (acc << BITS) | v as u64)
}

impl CopTuples {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n > 64 || k as u32 * BITS > 64 {
            return Err(Error::Capacity(format!(
                "cop tuples limited to n <= 64 and k <= 10 (n={n}, k={k})"
            )));
        }
        let tuples = multisets(n, k);
        let occupied = tuples
            .iter()
            .map(|t| t.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let index = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (pack(t), i as u32))
            .collect();
        Ok(Self {
            tuples,
            occupied,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// Tuples are numbered in lexicographic order.
    pub fn tuple(&self, i: usize) -> &[Vertex] {
        &self.tuples[i]
    }

    pub fn occupies(&self, i: usize, v: Vertex) -> bool {
        self.occupied[i] & (1 << v) != 0
    }

    pub fn rank(&self, sorted: &[Vertex]) -> Option<usize> {
        if sorted.len() * BITS as usize > 64 || sorted.iter().any(|&v| v >= 64) {
            return None;
        }
        self.index.get(&pack(sorted)).map(|&i| i as usize)
    }

    /// For every tuple, the indices of tuples reachable in one cop turn
    /// over edges not in `burn`. The relation is symmetric.
    pub fn successors(&self, g: &Graph, burn: &BurnSet) -> Vec<Vec<u32>> {
        let mut scratch = Vec::new();
        self.tuples
            .iter()
            .map(|t| {
                let mut out: Vec<u32> = Vec::new();
                self.expand(g, burn, t, 0, &mut scratch, &mut out);
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect()
    }

    fn expand(
        &self,
        g: &Graph,
        burn: &BurnSet,
        t: &[Vertex],
        i: usize,
        scratch: &mut Vec<Vertex>,
        out: &mut Vec<u32>,
    ) {
        if i == t.len() {
            let mut sorted = scratch.clone();
            sorted.sort_unstable();
            out.push(self.index[&pack(&sorted)]);
            return;
        }
        scratch.push(t[i]);
        self.expand(g, burn, t, i + 1, scratch, out);
        scratch.pop();
        for (w, _) in g.live(burn, t[i]) {
            scratch.push(w);
            self.expand(g, burn, t, i + 1, scratch, out);
            scratch.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn successors_match_engine_and_are_symmetric() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let tuples = CopTuples::new(4, 2).unwrap();
        let burn = BurnSet::from_mask(0b0100);
        let succ = tuples.successors(&g, &burn);
        for (i, list) in succ.iter().enumerate() {
            let expect: Vec<u32> = crate::game::cop_successors(&g, &burn, tuples.tuple(i))
                .iter()
                .map(|t| tuples.rank(t).unwrap() as u32)
                .collect();
            let mut expect_sorted = expect.clone();
            expect_sorted.sort_unstable();
            assert_eq!(list, &expect_sorted);
            for &j in list {
                assert!(succ[j as usize].contains(&(i as u32)));
            }
        }
    }

    #[test]
    fn rank_and_occupancy() {
        let t = CopTuples::new(5, 3).unwrap();
        assert_eq!(t.len(), 35);
        let i = t.rank(&[1, 1, 4]).unwrap();
        assert_eq!(t.tuple(i), &[1, 1, 4]);
        assert!(t.occupies(i, 4) && !t.occupies(i, 0));
        assert!(CopTuples::new(65, 1).is_err());
    }
}
