//! Simple undirected graphs on at most 62 vertices, one `u64` bitset row per
//! vertex. Word-wide rows keep neighborhood tests and BFS frontiers cheap,
//! which is what the exhaustive scans live on.

use crate::error::{Error, Result};

/// Largest supported vertex count (single-byte graph6 header range).
pub const MAX_VERTICES: usize = 62;

/// Iterator over the set bits of a word, ascending.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// Simple undirected graph with dense 0-based vertex ids.
///
/// Invariants (enforced by construction): `1 <= n <= 62`, the adjacency is
/// symmetric, and no vertex is adjacent to itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    ///
    /// Panics if `n` is 0 or exceeds [`MAX_VERTICES`].
    pub fn edgeless(n: usize) -> Self {
        assert!(
            (1..=MAX_VERTICES).contains(&n),
            "vertex count {n} outside 1..={MAX_VERTICES}"
        );
        Graph { n, adj: vec![0; n] }
    }

    /// Builds a graph from an edge list, collapsing duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidInput(format!(
                "vertex count {n} outside 1..={MAX_VERTICES}"
            )));
        }
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge {u}-{v} out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Inserts the edge `uv`. Panics on loops or out-of-range ids.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.n && v < self.n, "edge {u}-{v} out of range");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Open neighborhood of `v` as a bitset row.
    #[inline]
    pub fn neighbor_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]` as a bitset row.
    #[inline]
    pub fn closed_neighbor_bits(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |u| BitIter(self.adj[u] >> (u + 1) << (u + 1)).map(move |v| (u, v)))
    }

    /// Bitset with the lowest `n` bits set.
    #[inline]
    pub(crate) fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1 << self.n) - 1
        }
    }

    /// Subgraph induced by `verts`; vertex `verts[i]` becomes id `i`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::edgeless(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Copy of the graph with vertex `u` removed; ids above `u` shift down.
    pub fn delete_vertex(&self, u: usize) -> Graph {
        assert!(self.n > 1, "cannot delete the last vertex");
        let verts: Vec<usize> = (0..self.n).filter(|&v| v != u).collect();
        self.induced(&verts)
    }

    /// Vertices reachable from `start`, as a bitset.
    pub(crate) fn reachable_bits(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_bits(0) == self.full_mask()
    }

    /// Connected, at least 3 vertices, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        crate::blocks::blocks(self)
            .map(|b| b.cut_vertices.is_empty())
            .unwrap_or(false)
    }

    pub fn is_complete(&self) -> bool {
        let mask = self.full_mask();
        (0..self.n).all(|v| self.adj[v] == mask & !(1 << v))
    }

    /// Two-colorability, checked per component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle, or `None` for forests.
    ///
    /// BFS from every start vertex; a non-tree edge `uv` seen from start `s`
    /// closes a walk of length `d(s,u) + d(s,v) + 1`, which never undercuts
    /// the girth and attains it for some `s` on a shortest cycle.
    pub fn girth(&self) -> Option<u32> {
        let mut best: Option<u32> = None;
        let mut dist = vec![u32::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = Vec::with_capacity(self.n);
        for s in 0..self.n {
            dist.fill(u32::MAX);
            parent.fill(usize::MAX);
            dist[s] = 0;
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for v in self.neighbors(u) {
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push(v);
                    } else if parent[u] != v && parent[v] != u {
                        let len = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
