//! Canonical form for small graphs: the lexicographically minimal
//! upper-triangle adjacency bitstring over all vertex relabelings.
//!
//! Backtracking over partial relabelings, candidates ordered by a
//! degree/neighbor-degree invariant and by the column bits they produce,
//! pruned against the best string found so far. Sound for any graph; sized
//! for the n <= 8 enumeration cap (keys fit in a word up to n = 11).

use crate::graph::Graph;

/// Largest order whose upper triangle fits the 64-bit key.
pub const MAX_CANONICAL_N: usize = 11;

/// Bits of the canonical key, most significant bit = x(0,1), then x(0,2),
/// x(1,2), x(0,3), ... (same column order as graph6).
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.n();
    assert!(
        n <= MAX_CANONICAL_N,
        "canonical form supports n <= {MAX_CANONICAL_N}"
    );
    if n == 1 {
        return 0;
    }
    let total = n * (n - 1) / 2;

    // Invariant rank per vertex: degree first, then the sorted multiset of
    // neighbor degrees. Used only to order candidates; pruning stays sound.
    let inv: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    let mut by_inv: Vec<usize> = (0..n).collect();
    by_inv.sort_by(|&a, &b| inv[a].cmp(&inv[b]).then(a.cmp(&b)));

    let mut search = Search {
        g,
        n,
        total,
        order: by_inv,
        best: u64::MAX,
    };
    search.descend(&mut Vec::with_capacity(n), 0, 0);
    search.best
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total: usize,
    order: Vec<usize>,
    best: u64,
}

impl Search<'_> {
    fn descend(&mut self, perm: &mut Vec<usize>, used: u64, cur: u64) {
        let k = perm.len();
        if k == self.n {
            if cur < self.best {
                self.best = cur;
            }
            return;
        }
        // Candidates with the column bits they would contribute at position k.
        let mut cands: Vec<(u64, usize)> = Vec::with_capacity(self.n - k);
        for &v in &self.order {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut col = 0u64;
            for &p in perm.iter() {
                col = col << 1 | self.g.has_edge(p, v) as u64;
            }
            cands.push((col, v));
        }
        // Stable on the column value so ties keep the invariant ordering.
        cands.sort_by_key(|&(col, _)| col);
        let bits_after = k * (k + 1) / 2;
        for (col, v) in cands {
            let next = cur << k | col;
            // Lexicographic bound: a larger prefix can never recover.
            if next > self.best >> (self.total - bits_after) {
                break;
            }
            perm.push(v);
            self.descend(perm, used | 1 << v, next);
            perm.pop();
        }
    }
}

/// Decodes a key back into the graph it encodes on `n` vertices; the result
/// is the canonical representative when the key came from [`canonical_key`].
pub fn graph_from_key(n: usize, key: u64) -> Graph {
    assert!((1..=MAX_CANONICAL_N).contains(&n));
    let total = n * (n - 1) / 2;
    let mut g = Graph::edgeless(n);
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if key >> (total - 1 - idx) & 1 == 1 {
                g.add_edge(u, v);
            }
            idx += 1;
        }
    }
    g
}

/// Key of the graph under its current labeling (no minimization).
pub fn identity_key(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CANONICAL_N);
    let mut key = 0u64;
    for v in 1..n {
        for u in 0..v {
            key = key << 1 | g.has_edge(u, v) as u64;
        }
    }
    key
}
