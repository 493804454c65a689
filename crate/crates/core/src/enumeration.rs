//! Graph streams for exhaustive verification: a built-in isomorph-free
//! enumerator for small orders, graph6 line streams for everything larger,
//! and hypothesis filters.

use std::collections::HashSet;
use std::io::BufRead;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::canonical::{canonical_key, graph_from_key};
use crate::codec::parse_graph6;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap of the built-in enumerator; larger orders come from external
/// graph6 streams.
pub const MAX_ENUMERATION_N: usize = 8;

/// Conjunction of hypothesis predicates used to pre-filter graph streams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphFilter {
    pub connected: bool,
    pub two_connected: bool,
    pub bipartite: bool,
    pub non_complete: bool,
    pub min_girth: Option<u32>,
    pub order: Option<usize>,
}

impl GraphFilter {
    pub fn admits(&self, g: &Graph) -> bool {
        if let Some(n) = self.order {
            if g.n() != n {
                return false;
            }
        }
        if self.connected && !g.is_connected() {
            return false;
        }
        if self.two_connected && !g.is_two_connected() {
            return false;
        }
        if self.bipartite && !g.is_bipartite() {
            return false;
        }
        if self.non_complete && g.is_complete() {
            return false;
        }
        if let Some(k) = self.min_girth {
            // Acyclic graphs have infinite girth and pass any threshold.
            if let Some(girth) = g.girth() {
                if girth < k {
                    return false;
                }
            }
        }
        true
    }
}

impl FromStr for GraphFilter {
    type Err = Error;

    /// Comma-separated tokens: `connected`, `2connected`, `bipartite`,
    /// `noncomplete`, `mingirth=K`, `order=N`.
    fn from_str(s: &str) -> Result<Self> {
        let mut f = GraphFilter::default();
        for token in s.split(',').filter(|t| !t.is_empty()) {
            match token {
                "connected" => f.connected = true,
                "2connected" | "two_connected" => f.two_connected = true,
                "bipartite" => f.bipartite = true,
                "noncomplete" | "non_complete" => f.non_complete = true,
                _ => {
                    if let Some(v) = token.strip_prefix("mingirth=") {
                        f.min_girth = Some(v.parse().map_err(|_| {
                            Error::InvalidInput(format!("bad filter token {token:?}"))
                        })?);
                    } else if let Some(v) = token.strip_prefix("order=") {
                        f.order = Some(v.parse().map_err(|_| {
                            Error::InvalidInput(format!("bad filter token {token:?}"))
                        })?);
                    } else {
                        return Err(Error::InvalidInput(format!(
                            "unknown filter token {token:?}"
                        )));
                    }
                }
            }
        }
        Ok(f)
    }
}

/// All graphs on exactly `n` vertices, one canonical representative per
/// isomorphism class, sorted by canonical key.
///
/// Level-by-level extension: every graph on `k` vertices arises from some
/// graph on `k-1` vertices by adding one vertex with an arbitrary
/// neighborhood, so extending every representative by every subset and
/// deduplicating on the canonical key is exhaustive.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::EnumerationOrder {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let mut level: Vec<u64> = vec![0];
    for k in 2..=n {
        let mut next: HashSet<u64> = HashSet::new();
        for &key in &level {
            let smaller = graph_from_key(k - 1, key);
            for subset in 0u64..1 << (k - 1) {
                let mut g = Graph::edgeless(k);
                for (u, v) in smaller.edges() {
                    g.add_edge(u, v);
                }
                for v in crate::graph::BitIter(subset) {
                    g.add_edge(v, k - 1);
                }
                next.insert(canonical_key(&g));
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    Ok(level
        .into_iter()
        .map(|key| graph_from_key(n, key))
        .collect())
}

/// One representative per isomorphism class on `n` vertices passing the
/// filter, in canonical-key order.
pub fn builtin_enumerate(n: usize, filter: &GraphFilter) -> Result<Vec<Graph>> {
    Ok(enumerate_all(n)?
        .into_iter()
        .filter(|g| filter.admits(g))
        .collect())
}

/// Lazily decoded graph6 line stream with 1-based line numbers attached to
/// errors. In lenient mode malformed lines are counted and skipped; the
/// count is observable through [`Graph6Stream::skipped_counter`].
pub struct Graph6Stream<R> {
    reader: R,
    line: u64,
    lenient: bool,
    skipped: Arc<AtomicU64>,
}

impl<R: BufRead> Graph6Stream<R> {
    pub fn new(reader: R) -> Self {
        Graph6Stream {
            reader,
            line: 0,
            lenient: false,
            skipped: Arc::new(AtomicU64::new(0)),
        }
    }

    pub fn lenient(mut self, lenient: bool) -> Self {
        self.lenient = lenient;
        self
    }

    /// Shared counter of lines skipped in lenient mode.
    pub fn skipped_counter(&self) -> Arc<AtomicU64> {
        Arc::clone(&self.skipped)
    }
}

/// Streams graphs from graph6 lines; blank lines are ignored.
pub fn stream_graph6<R: BufRead>(reader: R) -> Graph6Stream<R> {
    Graph6Stream::new(reader)
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let mut buf = String::new();
            match self.reader.read_line(&mut buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            self.line += 1;
            if buf.trim().is_empty() {
                continue;
            }
            match parse_graph6(buf.as_bytes()) {
                Ok(g) => return Some(Ok(g)),
                Err(_) if self.lenient => {
                    self.skipped.fetch_add(1, Ordering::Relaxed);
                }
                Err(e) => {
                    return Some(Err(Error::StreamLine {
                        line: self.line,
                        source: Box::new(e),
                    }))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::identity_key;
    use crate::codec::encode_graph6;

    #[test]
    fn class_counts_match_published_values() {
        // Graphs up to isomorphism on n vertices.
        let all: Vec<usize> = (1..=7).map(|n| enumerate_all(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);

        let connected = GraphFilter {
            connected: true,
            ..GraphFilter::default()
        };
        let conn: Vec<usize> = (1..=7)
            .map(|n| builtin_enumerate(n, &connected).unwrap().len())
            .collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112, 853]);

        let two = GraphFilter {
            two_connected: true,
            ..GraphFilter::default()
        };
        let twoc: Vec<usize> = (3..=7)
            .map(|n| builtin_enumerate(n, &two).unwrap().len())
            .collect();
        assert_eq!(twoc, vec![1, 3, 10, 56, 468]);
    }

    #[test]
    fn n4_two_connected_members() {
        let two = GraphFilter {
            two_connected: true,
            ..GraphFilter::default()
        };
        let graphs = builtin_enumerate(4, &two).unwrap();
        let mut sizes: Vec<usize> = graphs.iter().map(|g| g.edge_count()).collect();
        sizes.sort_unstable();
        // C4, the diamond, K4.
        assert_eq!(sizes, vec![4, 5, 6]);
    }

    #[test]
    fn order_cap_enforced() {
        assert!(enumerate_all(0).is_err());
        assert!(enumerate_all(9).is_err());
    }

    /// Independent dedup oracle: run over every labeled graph and classify
    /// by the *maximal* adjacency string over all permutations, generated
    /// without pruning. Shares no code with the canonical-form search.
    #[test]
    fn completeness_against_brute_force_dedup() {
        fn max_key_all_perms(g: &Graph) -> u64 {
            fn rec(g: &Graph, items: &mut Vec<usize>, k: usize, best: &mut u64) {
                if k == items.len() {
                    let mut key = 0u64;
                    for v in 1..g.n() {
                        for u in 0..v {
                            key = key << 1 | g.has_edge(items[u], items[v]) as u64;
                        }
                    }
                    *best = (*best).max(key);
                    return;
                }
                for i in k..items.len() {
                    items.swap(k, i);
                    rec(g, items, k + 1, best);
                    items.swap(k, i);
                }
            }
            let mut items: Vec<usize> = (0..g.n()).collect();
            let mut best = 0u64;
            rec(g, &mut items, 0, &mut best);
            best
        }

        for n in 1..=6usize {
            let bits = n * (n - 1) / 2;
            let mut classes: HashSet<u64> = HashSet::new();
            let mut connected_classes: HashSet<u64> = HashSet::new();
            for code in 0u64..1 << bits {
                let g = graph_from_key(n, code);
                let key = max_key_all_perms(&g);
                classes.insert(key);
                if g.is_connected() {
                    connected_classes.insert(key);
                }
            }
            assert_eq!(enumerate_all(n).unwrap().len(), classes.len());
            let connected = GraphFilter {
                connected: true,
                ..GraphFilter::default()
            };
            assert_eq!(
                builtin_enumerate(n, &connected).unwrap().len(),
                connected_classes.len()
            );
        }
    }

    /// Emitted representatives are pairwise non-isomorphic: exhaustive
    /// permutation search finds no relabeling collision.
    #[test]
    fn no_duplicates_up_to_six() {
        fn isomorphic(a: &Graph, b: &Graph) -> bool {
            if a.n() != b.n() || a.edge_count() != b.edge_count() {
                return false;
            }
            fn rec(a: &Graph, b: &Graph, items: &mut Vec<usize>, k: usize) -> bool {
                if k == items.len() {
                    return a.edges().all(|(u, v)| b.has_edge(items[u], items[v]));
                }
                for i in k..items.len() {
                    items.swap(k, i);
                    if rec(a, b, items, k + 1) {
                        items.swap(k, i);
                        return true;
                    }
                    items.swap(k, i);
                }
                false
            }
            let mut items: Vec<usize> = (0..a.n()).collect();
            rec(a, b, &mut items, 0)
        }

        for n in 2..=6usize {
            let graphs = enumerate_all(n).unwrap();
            for i in 0..graphs.len() {
                for j in i + 1..graphs.len() {
                    assert!(
                        !isomorphic(&graphs[i], &graphs[j]),
                        "duplicate pair in n={n}: {:?} / {:?}",
                        graphs[i],
                        graphs[j]
                    );
                }
            }
        }
    }

    #[test]
    fn emitted_graphs_are_canonical_representatives() {
        for g in enumerate_all(6).unwrap() {
            assert_eq!(identity_key(&g), canonical_key(&g));
        }
    }

    #[test]
    fn filter_parsing() {
        let f: GraphFilter = "2connected,noncomplete".parse().unwrap();
        assert!(f.two_connected && f.non_complete && !f.bipartite);
        let f: GraphFilter = "connected,mingirth=5,order=7".parse().unwrap();
        assert_eq!(f.min_girth, Some(5));
        assert_eq!(f.order, Some(7));
        assert!("girth>5".parse::<GraphFilter>().is_err());
    }

    #[test]
    fn stream_decodes_in_order() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let text = format!(
            "{}\n{}\n{}\n",
            encode_graph6(&k3),
            encode_graph6(&c4),
            encode_graph6(&c5)
        );
        let got: Vec<Graph> = stream_graph6(text.as_bytes()).map(|r| r.unwrap()).collect();
        assert_eq!(got, vec![k3, c4, c5]);

        let empty: Vec<_> = stream_graph6(&b""[..]).collect();
        assert!(empty.is_empty());
    }

    #[test]
    fn stream_error_names_line() {
        let text = "B_\n\u{7f}bad\nB_\n";
        let mut it = stream_graph6(text.as_bytes());
        assert!(it.next().unwrap().is_ok());
        match it.next().unwrap() {
            Err(Error::StreamLine { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected line error, got {other:?}"),
        }
    }

    #[test]
    fn lenient_mode_counts_skips() {
        let text = "B_\n\u{7f}bad\nB_\n";
        let stream = stream_graph6(text.as_bytes()).lenient(true);
        let skipped = stream.skipped_counter();
        let got: Vec<Graph> = stream.map(|r| r.unwrap()).collect();
        assert_eq!(got.len(), 2);
        assert_eq!(skipped.load(Ordering::Relaxed), 1);
    }
}
