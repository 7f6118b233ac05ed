//! Simple undirected graphs, BFS distances and distance partitions.
//!
//! Everything downstream reads a [`DistanceMatrix`]; it is built once per
//! graph by running a BFS from every source in parallel.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Vertex identifier: a dense 0-based index.
pub type VertexId = usize;

/// Largest supported vertex count. Distances are stored as `u16`.
pub const MAX_VERTICES: usize = u16::MAX as usize;

const UNREACHED: u16 = u16::MAX;

/// An immutable simple undirected graph.
///
/// Adjacency lists are sorted and symmetric, with no self-loops and no
/// repeated neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an undirected edge list.
    ///
    /// Repeated edges (in either orientation) collapse to one. Self-loops and
    /// endpoints outside `[0, n)` are rejected with the offending edge index.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adjacency = vec![Vec::new(); n];
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { index, u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { index, vertex: u });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut twice_edges = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice_edges += list.len();
        }
        Ok(Self {
            adjacency,
            edge_count: twice_edges / 2,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// True iff a BFS from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let mut dist = vec![UNREACHED; self.vertex_count()];
        self.bfs_into(0, &mut dist) == self.vertex_count()
    }

    /// Fills `dist` with hop counts from `source`; returns the number of
    /// vertices reached.
    fn bfs_into(&self, source: VertexId, dist: &mut [u16]) -> usize {
        dist.fill(UNREACHED);
        let mut queue = VecDeque::with_capacity(dist.len());
        dist[source] = 0;
        queue.push_back(source);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &v in &self.adjacency[u] {
                if dist[v] == UNREACHED {
                    dist[v] = next;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached
    }
}

/// Dense symmetric matrix of shortest-path lengths of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
    diameter: usize,
}

impl DistanceMatrix {
    /// Runs a BFS from every vertex (in parallel on the current rayon pool).
    ///
    /// The graph must be connected and have at least two vertices.
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.vertex_count();
        if n < 2 {
            return Err(Error::Trivial(n));
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut d = vec![0u16; n * n];
        d.par_chunks_mut(n).enumerate().for_each(|(source, row)| {
            g.bfs_into(source, row);
        });
        let diameter = d.iter().copied().max().unwrap_or(0) as usize;
        Ok(Self { n, d, diameter })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> usize {
        self.d[u * self.n + v] as usize
    }

    /// Distances from `u` to every vertex.
    #[inline]
    pub fn row(&self, u: VertexId) -> &[u16] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, v: VertexId) -> usize {
        self.row(v).iter().copied().max().unwrap_or(0) as usize
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }
}

/// Convenience wrapper for [`DistanceMatrix::new`].
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    DistanceMatrix::new(g)
}

/// The classes `V_1(w), V_2(w), ...` of vertices at distance 1, 2, ... from a
/// center `w`, up to the eccentricity of `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistancePartition {
    center: VertexId,
    classes: Vec<Vec<VertexId>>,
}

impl DistancePartition {
    pub fn new(dm: &DistanceMatrix, center: VertexId) -> Result<Self> {
        dm.check_vertex(center)?;
        let mut classes = vec![Vec::new(); dm.eccentricity(center)];
        for (v, &dist) in dm.row(center).iter().enumerate() {
            if dist > 0 {
                classes[dist as usize - 1].push(v);
            }
        }
        Ok(Self { center, classes })
    }

    pub fn center(&self) -> VertexId {
        self.center
    }

    /// Class `i` (1-based) holds the vertices at distance `i`.
    pub fn class(&self, i: usize) -> Option<&[VertexId]> {
        i.checked_sub(1)
            .and_then(|idx| self.classes.get(idx))
            .map(Vec::as_slice)
    }

    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    /// Number of classes, which equals the eccentricity of the center.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// 1-based index of the class containing `v`, or `None` for the center.
    pub fn class_of(&self, v: VertexId) -> Option<usize> {
        self.classes
            .iter()
            .position(|class| class.binary_search(&v).is_ok())
            .map(|idx| idx + 1)
    }

    /// True when every class has exactly one vertex.
    pub fn is_all_singletons(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

pub fn distance_partition(dm: &DistanceMatrix, w: VertexId) -> Result<DistancePartition> {
    DistancePartition::new(dm, w)
}
