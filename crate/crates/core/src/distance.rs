//! Exact all-pairs hop distances via level-synchronous bitset BFS.

use crate::graph::{BitIter, Graph};

/// Distance assigned to unreachable pairs.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs shortest-path matrix of a graph, unit edge weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    connected: bool,
}

impl DistanceMatrix {
    /// Runs one BFS per vertex; each frontier expansion is a word-OR over rows.
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.n();
        let mut d = vec![UNREACHABLE; n * n];
        let full = g.full_mask();
        let mut connected = true;
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut level = 0u32;
            row[s] = 0;
            while frontier != 0 {
                let mut next = 0u64;
                for v in BitIter(frontier) {
                    next |= g.neighbor_bits(v);
                }
                frontier = next & !seen;
                seen |= frontier;
                level += 1;
                for v in BitIter(frontier) {
                    row[v] = level;
                }
            }
            if seen != full {
                connected = false;
            }
        }
        DistanceMatrix { n, d, connected }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw hop count; [`UNREACHABLE`] when no path exists.
    #[inline]
    pub fn d(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    /// `None` for unreachable pairs.
    pub fn dist(&self, i: usize, j: usize) -> Option<u32> {
        match self.d(i, j) {
            UNREACHABLE => None,
            v => Some(v),
        }
    }

    /// True when every pair is mutually reachable.
    #[inline]
    pub fn is_connected(&self) -> bool {
        self.connected
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn k4_all_ones() {
        let mut g = Graph::edgeless(4);
        for u in 0..4 {
            for v in u + 1..4 {
                g.add_edge(u, v);
            }
        }
        let dm = DistanceMatrix::from_graph(&g);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(dm.d(i, j), u32::from(i != j));
            }
        }
        assert!(dm.is_connected());
    }

    #[test]
    fn p3_endpoints() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let dm = DistanceMatrix::from_graph(&g);
        assert_eq!(dm.d(0, 2), 2);
        assert_eq!(dm.dist(0, 2), Some(2));
    }

    #[test]
    fn c5_level_counts() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let dm = DistanceMatrix::from_graph(&g);
        for v in 0..5 {
            let mut at = [0usize; 3];
            for u in 0..5 {
                at[dm.d(v, u) as usize] += 1;
            }
            assert_eq!(at, [1, 2, 2]);
        }
    }

    #[test]
    fn disconnected_flagged() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let dm = DistanceMatrix::from_graph(&g);
        assert!(!dm.is_connected());
        assert_eq!(dm.dist(0, 2), None);
        assert_eq!(dm.d(0, 2), UNREACHABLE);
    }

    /// Agreement with a naive matrix-power reachability oracle on every
    /// labeled graph with n <= 5 and every isomorphism class at n = 6, 7.
    #[test]
    fn matrix_power_oracle() {
        fn oracle(g: &Graph) -> Vec<u32> {
            let n = g.n();
            // reach[k][i][j] = true iff a walk of length <= k connects i and j.
            let mut reach: Vec<bool> = (0..n * n)
                .map(|x| {
                    let (i, j) = (x / n, x % n);
                    i == j || g.has_edge(i, j)
                })
                .collect();
            let mut d: Vec<u32> = (0..n * n)
                .map(|x| {
                    let (i, j) = (x / n, x % n);
                    if i == j {
                        0
                    } else if g.has_edge(i, j) {
                        1
                    } else {
                        UNREACHABLE
                    }
                })
                .collect();
            for step in 2..=n as u32 {
                let prev = reach.clone();
                for i in 0..n {
                    for j in 0..n {
                        if !reach[i * n + j] && (0..n).any(|k| prev[i * n + k] && g.has_edge(k, j))
                        {
                            reach[i * n + j] = true;
                            d[i * n + j] = step;
                        }
                    }
                }
            }
            d
        }

        let check = |g: &Graph| {
            let dm = DistanceMatrix::from_graph(g);
            let od = oracle(g);
            for i in 0..g.n() {
                for j in 0..g.n() {
                    assert_eq!(dm.d(i, j), od[i * g.n() + j], "mismatch on {g:?}");
                }
            }
        };

        for n in 1..=5usize {
            let bits = n * (n - 1) / 2;
            for code in 0u32..1 << bits {
                let mut g = Graph::edgeless(n);
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if code >> k & 1 == 1 {
                            g.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                check(&g);
            }
        }
        for n in [6usize, 7] {
            for g in crate::enumeration::enumerate_all(n).unwrap() {
                check(&g);
            }
        }
    }
}
