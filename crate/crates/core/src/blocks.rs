//! Block decomposition (maximal subgraphs without a cut vertex) via
//! iterative lowpoint DFS. Recursion-free so stars and long paths at the
//! n = 62 cap cannot overflow the call stack.

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};

/// Blocks and cut vertices of a connected graph.
///
/// Every edge lies in exactly one block; two distinct blocks share at most
/// one vertex, and shared vertices are exactly the cut vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets, each sorted ascending; blocks sorted lexicographically.
    pub blocks: Vec<Vec<usize>>,
    /// Sorted ascending.
    pub cut_vertices: Vec<usize>,
}

struct Frame {
    v: usize,
    parent: usize,
    rest: u64,
}

/// Computes the unique block decomposition of a connected graph.
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![vec![0]],
            cut_vertices: Vec::new(),
        });
    }

    let mut disc = vec![0u32; n];
    let mut low = vec![0u32; n];
    let mut time = 1u32;
    let mut cut = 0u64;
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut stack = vec![Frame {
        v: 0,
        parent: usize::MAX,
        rest: g.neighbor_bits(0),
    }];
    disc[0] = 1;
    low[0] = 1;
    let mut root_children = 0usize;

    while let Some(frame) = stack.last_mut() {
        if frame.rest != 0 {
            let w = frame.rest.trailing_zeros() as usize;
            frame.rest &= frame.rest - 1;
            let v = frame.v;
            if w == frame.parent {
                continue;
            }
            if disc[w] == 0 {
                time += 1;
                disc[w] = time;
                low[w] = time;
                edge_stack.push((v, w));
                if v == 0 {
                    root_children += 1;
                }
                stack.push(Frame {
                    v: w,
                    parent: v,
                    rest: g.neighbor_bits(w),
                });
            } else if disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            let Frame { v, parent, .. } = *frame;
            stack.pop();
            if parent == usize::MAX {
                break;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                // Edges above (parent, v) on the stack form one block.
                let mut members = 0u64;
                while let Some(&(a, b)) = edge_stack.last() {
                    edge_stack.pop();
                    members |= 1 << a | 1 << b;
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                out.push(BitIter(members).collect());
                if parent != 0 {
                    cut |= 1 << parent;
                }
            }
        }
    }
    if root_children >= 2 {
        cut |= 1;
    }
    out.sort();
    Ok(BlockDecomposition {
        blocks: out,
        cut_vertices: BitIter(cut).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_two_blocks() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let bd = blocks(&g).unwrap();
        assert_eq!(bd.blocks, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(bd.cut_vertices, vec![1]);
    }

    #[test]
    fn bowtie() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let bd = blocks(&g).unwrap();
        assert_eq!(bd.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(bd.cut_vertices, vec![2]);
    }

    #[test]
    fn c5_single_block() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let bd = blocks(&g).unwrap();
        assert_eq!(bd.blocks, vec![vec![0, 1, 2, 3, 4]]);
        assert!(bd.cut_vertices.is_empty());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(blocks(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn isolated_vertex_graph() {
        let bd = blocks(&Graph::edgeless(1)).unwrap();
        assert_eq!(bd.blocks, vec![vec![0]]);
    }

    #[test]
    fn star_and_path_at_cap() {
        // Depth stress: the DFS must not recurse.
        let n = 62;
        let star_edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        let star = Graph::from_edges(n, &star_edges).unwrap();
        let bd = blocks(&star).unwrap();
        assert_eq!(bd.blocks.len(), n - 1);
        assert_eq!(bd.cut_vertices, vec![0]);

        let path_edges: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
        let path = Graph::from_edges(n, &path_edges).unwrap();
        let bd = blocks(&path).unwrap();
        assert_eq!(bd.blocks.len(), n - 1);
        assert_eq!(bd.cut_vertices.len(), n - 2);
    }

    /// Structural laws over every connected labeled graph with n <= 6:
    /// block edge sets partition E; distinct blocks meet in at most one
    /// vertex and that vertex is a cut vertex; removing a cut vertex
    /// disconnects the graph while removing a non-cut vertex does not.
    #[test]
    fn exhaustive_block_laws() {
        for n in 2..=6usize {
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
                if !g.is_connected() {
                    continue;
                }
                let bd = blocks(&g).unwrap();

                let mut edge_seen = std::collections::HashMap::new();
                for b in &bd.blocks {
                    for (i, &u) in b.iter().enumerate() {
                        for &v in &b[i + 1..] {
                            if g.has_edge(u, v) {
                                *edge_seen.entry((u, v)).or_insert(0) += 1;
                            }
                        }
                    }
                }
                for e in g.edges() {
                    assert_eq!(edge_seen.get(&e), Some(&1), "edge {e:?} in {g:?}");
                }

                for (i, a) in bd.blocks.iter().enumerate() {
                    for b in &bd.blocks[i + 1..] {
                        let shared: Vec<_> = a.iter().filter(|v| b.contains(v)).copied().collect();
                        assert!(shared.len() <= 1);
                        for v in shared {
                            assert!(bd.cut_vertices.contains(&v));
                        }
                    }
                }

                if n > 1 {
                    for v in 0..n {
                        let reduced = g.delete_vertex(v);
                        assert_eq!(
                            !reduced.is_connected(),
                            bd.cut_vertices.contains(&v),
                            "cut-vertex mismatch at {v} in {g:?}"
                        );
                    }
                }
            }
        }
    }
}
