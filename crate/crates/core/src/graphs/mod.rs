//! Explicit graphs for the classified families and BFS ground truth:
//! distances, girth, distance-regularity and array extraction.

mod build;
mod field;
mod io;
mod tables;
mod verify;

pub use build::{build_folded_hypercube, build_hypercube, build_odd_graph, build_projective_incidence, SUPPORTED_ORDERS};
pub use field::FiniteField;
pub use verify::{verify_distance_regular, verify_distance_regular_with, DistanceProfile, VerifyOptions};

use crate::error::{Error, Result};

/// Default bound on the vertex count of constructed graphs.
pub const DEFAULT_SIZE_CAP: usize = 1_000_000;

/// The size cap in force: `DRG_SIZE_CAP` if set to a positive integer,
/// otherwise [`DEFAULT_SIZE_CAP`].
pub fn size_cap() -> usize {
    std::env::var("DRG_SIZE_CAP")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_SIZE_CAP)
}

pub(crate) fn check_cap(requested: u128) -> Result<usize> {
    let cap = size_cap();
    if requested > cap as u128 {
        return Err(Error::SizeCap { requested, cap });
    }
    Ok(requested as usize)
}

/// A simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_cap(n as u128)?;
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Parse(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::Parse(format!("loop at vertex {u}")));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        Self::from_adjacency(adj)
    }

    /// Takes ownership of adjacency lists, sorting them and checking that
    /// they are symmetric and free of loops and repeats.
    pub fn from_adjacency(mut adj: Vec<Vec<u32>>) -> Result<Self> {
        let n = adj.len();
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parse(format!("repeated edge at vertex {v}")));
            }
            if list.iter().any(|&u| u as usize >= n || u as usize == v) {
                return Err(Error::Parse(format!("bad neighbour of vertex {v}")));
            }
        }
        for (v, list) in adj.iter().enumerate() {
            for &u in list {
                if adj[u as usize].binary_search(&(v as u32)).is_err() {
                    return Err(Error::Parse(format!("edge {v} -> {u} has no reverse")));
                }
            }
        }
        Ok(Graph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u, v as usize)))
            .filter(|(u, v)| u < v)
    }

    /// Removes one edge; used to build negative test cases.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.is_adjacent(u, v) {
            return Err(Error::Precondition(format!("{u} and {v} are not adjacent")));
        }
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w as usize != v);
        adj[v].retain(|&w| w as usize != u);
        Ok(Graph { adj })
    }

    /// Breadth-first distances from `source`; `u32::MAX` marks unreachable
    /// vertices.
    pub fn distances_from(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.adj.len()];
        let mut queue = std::collections::VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[u] + 1;
                    queue.push_back(w as usize);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.adj.is_empty() || self.distances_from(0).iter().all(|&d| d != u32::MAX)
    }
}
