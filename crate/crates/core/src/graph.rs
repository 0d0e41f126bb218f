//! Immutable undirected simple graphs with stable edge indices.
//!
//! Edge indices follow construction (document) order. Everything that keys
//! off burned edges, from [`BurnSet`] to the solver's packed state masks,
//! relies on that order never changing.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    /// Per vertex: (neighbor, edge index), sorted by neighbor.
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
    labels: BTreeMap<Vertex, String>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        Self::with_labels(n, edges, BTreeMap::new())
    }

    pub fn with_labels(
        n: usize,
        edges: Vec<(Vertex, Vertex)>,
        labels: BTreeMap<Vertex, String>,
    ) -> Result<Self> {
        let mut adjacency: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "edge {e} [{u},{v}]: endpoint out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::Input(format!("edge {e} [{u},{v}]: self-loop")));
            }
            adjacency[u].push((v, e));
            adjacency[v].push((u, e));
        }
        for list in adjacency.iter_mut() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                let e = w[1].1;
                return Err(Error::Input(format!(
                    "edge {e} [{},{}]: duplicate of edge {}",
                    edges[e].0, edges[e].1, w[0].1
                )));
            }
        }
        if let Some((&v, _)) = labels.iter().find(|(&v, _)| v >= n) {
            return Err(Error::Input(format!("label for vertex {v} out of range")));
        }
        Ok(Self {
            n,
            edges,
            adjacency,
            labels,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    /// Full adjacency of `v` as (neighbor, edge index), ascending by neighbor.
    pub fn adjacency(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "vertex {v} out of range for n={}",
                self.n
            )))
        }
    }

    /// Neighbors of `v` over edges not in `burn`, ascending.
    pub fn neighbors_live(&self, burn: &BurnSet, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(v)?;
        Ok(self.live(burn, v).map(|(w, _)| w).collect())
    }

    /// Unchecked iterator form of [`Graph::neighbors_live`], yielding the edge too.
    pub fn live<'a>(
        &'a self,
        burn: &'a BurnSet,
        v: Vertex,
    ) -> impl Iterator<Item = (Vertex, EdgeId)> + 'a {
        self.adjacency[v]
            .iter()
            .copied()
            .filter(move |&(_, e)| !burn.contains(e))
    }

    pub fn is_live_adjacent(&self, burn: &BurnSet, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some_and(|e| !burn.contains(e))
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Result<Option<EdgeId>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.edge_between(u, v))
    }

    pub(crate) fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let list = &self.adjacency[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn from_document(doc: GraphDocument) -> Result<Self> {
        let edges = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
        Self::with_labels(doc.n, edges, doc.labels).map_err(|e| match e {
            Error::Input(msg) => Error::Parse(msg),
            other => other,
        })
    }

    /// Graphviz rendering; burned edges are drawn dashed.
    pub fn to_dot(&self, burn: Option<&BurnSet>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            match self.labels.get(&v) {
                Some(l) => {
                    let _ = writeln!(out, "  {v} [label=\"{}\"];", l.replace('"', "\\\""));
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if burn.is_some_and(|b| b.contains(e)) {
                let _ = writeln!(out, "  {u} -- {v} [style=dashed];");
            } else {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// On-disk JSON form: `{"n": 3, "edges": [[0,1],[1,2]], "labels": {"0": "..."}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<Vertex, String>,
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed graph JSON: {e}")))?;
    Graph::from_document(doc)
}

pub fn render_graph(g: &Graph) -> String {
    serde_json::to_string(&g.to_document()).expect("graph documents always serialize")
}

/// Set of erased edge indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BurnSet {
    // No trailing zero words, so derived equality is set equality.
    words: Vec<u64>,
}

impl BurnSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut b = Self::default();
        if mask != 0 {
            b.words.push(mask);
        }
        b
    }

    /// The set as a single 64-bit mask, if every member is below 64.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.words
            .get(e / 64)
            .is_some_and(|w| w & (1u64 << (e % 64)) != 0)
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        let word = e / 64;
        if self.words.len() <= word {
            self.words.resize(word + 1, 0);
        }
        let bit = 1u64 << (e % 64);
        let fresh = self.words[word] & bit == 0;
        self.words[word] |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_subset(&self, other: &BurnSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64).filter(move |b| w & (1u64 << b) != 0).map(move |b| i * 64 + b)
        })
    }
}

impl FromIterator<EdgeId> for BurnSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        let mut b = BurnSet::new();
        for e in iter {
            b.insert(e);
        }
        b
    }
}
