//! Exact distance-based indices: Wiener, Szeged, revised Szeged, their
//! differences, and the per-vertex/per-pair quantities they decompose into.
//!
//! Everything is integer arithmetic. The revised index carries a half term
//! per edge endpoint, so all revised quantities are kept in quarter units:
//! `Sz4 = 4*Sz*` and `eta4 = 4*eta*`. No rounding anywhere.

use serde::{Deserialize, Serialize};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Partition of the vertex set induced by one edge: strictly closer to one
/// endpoint, strictly closer to the other, or equidistant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeSplit {
    pub edge: (usize, usize),
    /// Vertices strictly closer to `edge.0`; at least 1 (the endpoint itself).
    pub n_u: i64,
    /// Vertices strictly closer to `edge.1`; at least 1.
    pub n_v: i64,
    /// Equidistant vertices; `n_u + n_v + n_0 = n`.
    pub n_0: i64,
}

/// Every index of one connected graph, from a single distance-matrix pass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    /// Wiener index: sum of distances over unordered pairs.
    pub w: i64,
    /// Szeged index: sum over edges of `n_u * n_v`.
    pub sz: i64,
    /// Four times the revised Szeged index, exact.
    pub sz4: i64,
    /// `sz - w`.
    pub eta: i64,
    /// `sz4 - 4*w`, i.e. four times the revised difference.
    pub eta4: i64,
    /// Per-vertex contributions `c(a)`; `sum(c) = 2*eta`.
    pub c: Vec<i64>,
    /// Per-vertex horizontal edge counts `h(a)`.
    pub h: Vec<i64>,
}

fn require_connected(dm: &DistanceMatrix) -> Result<()> {
    if dm.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Wiener index `W`: sum of `d(a,b)` over unordered pairs.
pub fn wiener(g: &Graph, dm: &DistanceMatrix) -> Result<i64> {
    debug_assert_eq!(g.n(), dm.n());
    require_connected(dm)?;
    let n = g.n();
    let mut total = 0i64;
    for a in 0..n {
        for b in a + 1..n {
            total += i64::from(dm.d(a, b));
        }
    }
    Ok(total)
}

/// Splits the vertex set by proximity to the endpoints of `edge`.
pub fn edge_split(g: &Graph, dm: &DistanceMatrix, edge: (usize, usize)) -> Result<EdgeSplit> {
    require_connected(dm)?;
    let (u, v) = edge;
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    let (mut n_u, mut n_v) = (0i64, 0i64);
    for x in 0..g.n() {
        let du = dm.d(x, u);
        let dv = dm.d(x, v);
        if du < dv {
            n_u += 1;
        } else if dv < du {
            n_v += 1;
        }
    }
    Ok(EdgeSplit {
        edge,
        n_u,
        n_v,
        n_0: g.n() as i64 - n_u - n_v,
    })
}

/// Szeged index `Sz`: sum over edges of `n_u * n_v`.
pub fn szeged(g: &Graph, dm: &DistanceMatrix) -> Result<i64> {
    require_connected(dm)?;
    let mut total = 0i64;
    for e in g.edges() {
        let s = edge_split(g, dm, e)?;
        total += s.n_u * s.n_v;
    }
    Ok(total)
}

/// Four times the revised Szeged index:
/// `sum over edges of (2*n_u + n_0) * (2*n_v + n_0)`, exact.
pub fn revised_szeged_q4(g: &Graph, dm: &DistanceMatrix) -> Result<i64> {
    require_connected(dm)?;
    let mut total = 0i64;
    for e in g.edges() {
        let s = edge_split(g, dm, e)?;
        total += (2 * s.n_u + s.n_0) * (2 * s.n_v + s.n_0);
    }
    Ok(total)
}

/// Number of edges good for the pair `{a, b}`: edges `uv` with
/// `d(a,u) < d(a,v)` and `d(b,v) < d(b,u)` under either orientation.
/// `good_count(a, a) = 0` by convention. Always at least `d(a, b)`.
pub fn good_count(g: &Graph, dm: &DistanceMatrix, a: usize, b: usize) -> i64 {
    if a == b {
        return 0;
    }
    let mut count = 0i64;
    for (u, v) in g.edges() {
        // Both orientations tested explicitly.
        let fwd = dm.d(a, u) < dm.d(a, v) && dm.d(b, v) < dm.d(b, u);
        let rev = dm.d(a, v) < dm.d(a, u) && dm.d(b, u) < dm.d(b, v);
        if fwd || rev {
            count += 1;
        }
    }
    count
}

/// Pair excess `g(a,b) - d(a,b)`; nonnegative.
pub fn eta_pair(g: &Graph, dm: &DistanceMatrix, a: usize, b: usize) -> i64 {
    if a == b {
        return 0;
    }
    good_count(g, dm, a, b) - i64::from(dm.d(a, b))
}

/// Contribution of one vertex: `c(a) = sum over b of (g(a,b) - d(a,b))`.
pub fn contribution(g: &Graph, dm: &DistanceMatrix, a: usize) -> Result<i64> {
    require_connected(dm)?;
    Ok((0..g.n()).map(|b| eta_pair(g, dm, a, b)).sum())
}

/// Number of edges horizontal to `a`: edges `uv` with `d(a,u) = d(a,v)`.
pub fn horizontal_count(g: &Graph, dm: &DistanceMatrix, a: usize) -> Result<i64> {
    require_connected(dm)?;
    Ok(g.edges().filter(|&(u, v)| dm.d(a, u) == dm.d(a, v)).count() as i64)
}

/// All-pairs matrix of good-edge counts, by the double-count route: the edge
/// `uv` is good for exactly the pairs with one side strictly closer to `u`
/// and the other strictly closer to `v`.
fn good_matrix(g: &Graph, dm: &DistanceMatrix) -> Vec<i64> {
    let n = g.n();
    let mut gm = vec![0i64; n * n];
    for (u, v) in g.edges() {
        let mut closer_u: Vec<usize> = Vec::new();
        let mut closer_v: Vec<usize> = Vec::new();
        for x in 0..n {
            let du = dm.d(x, u);
            let dv = dm.d(x, v);
            if du < dv {
                closer_u.push(x);
            } else if dv < du {
                closer_v.push(x);
            }
        }
        for &a in &closer_u {
            for &b in &closer_v {
                gm[a * n + b] += 1;
                gm[b * n + a] += 1;
            }
        }
    }
    gm
}

/// `eta = Sz - W`.
pub fn eta(g: &Graph) -> Result<i64> {
    let dm = DistanceMatrix::from_graph(g);
    Ok(szeged(g, &dm)? - wiener(g, &dm)?)
}

/// `4 * eta* = 4*Sz* - 4*W`, exact.
pub fn eta_star_q4(g: &Graph) -> Result<i64> {
    let dm = DistanceMatrix::from_graph(g);
    Ok(revised_szeged_q4(g, &dm)? - 4 * wiener(g, &dm)?)
}

/// Computes every report field from one distance matrix.
pub fn full_report(g: &Graph) -> Result<InvariantReport> {
    let dm = DistanceMatrix::from_graph(g);
    full_report_with(g, &dm)
}

/// As [`full_report`], reusing a caller-supplied distance matrix.
pub fn full_report_with(g: &Graph, dm: &DistanceMatrix) -> Result<InvariantReport> {
    require_connected(dm)?;
    let n = g.n();
    let w = wiener(g, dm)?;
    let mut sz = 0i64;
    let mut sz4 = 0i64;
    for e in g.edges() {
        let s = edge_split(g, dm, e)?;
        sz += s.n_u * s.n_v;
        sz4 += (2 * s.n_u + s.n_0) * (2 * s.n_v + s.n_0);
    }
    let gm = good_matrix(g, dm);
    let c: Vec<i64> = (0..n)
        .map(|a| (0..n).map(|b| gm[a * n + b] - i64::from(dm.d(a, b))).sum())
        .collect();
    let h: Vec<i64> = (0..n)
        .map(|a| g.edges().filter(|&(u, v)| dm.d(a, u) == dm.d(a, v)).count() as i64)
        .collect();
    Ok(InvariantReport {
        n,
        m: g.edge_count(),
        w,
        sz,
        sz4,
        eta: sz - w,
        eta4: sz4 - 4 * w,
        c,
        h,
    })
}

/// Checks `Sz = sum over pairs of g(a,b)` with both sides computed
/// independently: edge splits on the left, per-pair good counts on the right.
pub fn verify_good_edge_identity(g: &Graph) -> Result<bool> {
    let dm = DistanceMatrix::from_graph(g);
    let by_edges = szeged(g, &dm)?;
    let mut by_pairs = 0i64;
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            by_pairs += good_count(g, &dm, a, b);
        }
    }
    Ok(by_edges == by_pairs)
}

/// Checks `sum over vertices of h(a) = sum over edges of n_0(u,v)`,
/// both sides computed independently.
pub fn verify_horizontal_identity(g: &Graph) -> Result<bool> {
    let dm = DistanceMatrix::from_graph(g);
    require_connected(&dm)?;
    let mut by_vertices = 0i64;
    for a in 0..g.n() {
        by_vertices += horizontal_count(g, &dm, a)?;
    }
    let mut by_edges = 0i64;
    for e in g.edges() {
        by_edges += edge_split(g, &dm, e)?.n_0;
    }
    Ok(by_vertices == by_edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::edgeless(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn dm(g: &Graph) -> DistanceMatrix {
        DistanceMatrix::from_graph(g)
    }

    #[test]
    fn wiener_spot_values() {
        let k4 = complete(4);
        assert_eq!(wiener(&k4, &dm(&k4)).unwrap(), 6);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(wiener(&p3, &dm(&p3)).unwrap(), 4);
        // C5: brute force over the 10 pairs gives 5*1 + 5*2.
        let c5 = cycle(5);
        assert_eq!(wiener(&c5, &dm(&c5)).unwrap(), 15);
    }

    #[test]
    fn edge_splits() {
        let k3 = complete(3);
        let s = edge_split(&k3, &dm(&k3), (0, 1)).unwrap();
        assert_eq!((s.n_u, s.n_v, s.n_0), (1, 1, 1));
        let c4 = cycle(4);
        let s = edge_split(&c4, &dm(&c4), (0, 1)).unwrap();
        assert_eq!((s.n_u, s.n_v, s.n_0), (2, 2, 0));
        let c5 = cycle(5);
        let s = edge_split(&c5, &dm(&c5), (0, 1)).unwrap();
        assert_eq!((s.n_u, s.n_v, s.n_0), (2, 2, 1));
        assert!(matches!(
            edge_split(&c5, &dm(&c5), (0, 2)),
            Err(Error::NotAnEdge(0, 2))
        ));
    }

    #[test]
    fn szeged_spot_values() {
        for n in 3..=8 {
            let kn = complete(n);
            let d = dm(&kn);
            let expect = (n * (n - 1) / 2) as i64;
            assert_eq!(szeged(&kn, &d).unwrap(), expect);
            assert_eq!(eta(&kn).unwrap(), 0);
        }
        let c5 = cycle(5);
        assert_eq!(szeged(&c5, &dm(&c5)).unwrap(), 20);
        let c4 = cycle(4);
        assert_eq!(szeged(&c4, &dm(&c4)).unwrap(), 16);
    }

    #[test]
    fn revised_szeged_quarters() {
        let k3 = complete(3);
        assert_eq!(revised_szeged_q4(&k3, &dm(&k3)).unwrap(), 27);
        let c5 = cycle(5);
        assert_eq!(revised_szeged_q4(&c5, &dm(&c5)).unwrap(), 125);
        // Bipartite: all n_0 vanish, so 4*Sz* = 4*Sz.
        let c6 = cycle(6);
        let d6 = dm(&c6);
        assert_eq!(
            revised_szeged_q4(&c6, &d6).unwrap(),
            4 * szeged(&c6, &d6).unwrap()
        );
    }

    #[test]
    fn good_counts_on_small_cycles() {
        let k3 = complete(3);
        assert_eq!(good_count(&k3, &dm(&k3), 0, 1), 1);
        let c5 = cycle(5);
        let d5 = dm(&c5);
        assert_eq!(good_count(&c5, &d5, 0, 2), 3);
        assert_eq!(good_count(&c5, &d5, 0, 1), 1);
        assert_eq!(good_count(&c5, &d5, 0, 0), 0);
        assert_eq!(eta_pair(&c5, &d5, 0, 2), 1);
        assert_eq!(eta_pair(&c5, &d5, 0, 1), 0);
    }

    #[test]
    fn contributions() {
        let c4 = cycle(4);
        let d4 = dm(&c4);
        for a in 0..4 {
            assert_eq!(contribution(&c4, &d4, a).unwrap(), 4);
        }
        let k5 = complete(5);
        let d5 = dm(&k5);
        for a in 0..5 {
            assert_eq!(contribution(&k5, &d5, a).unwrap(), 0);
        }
        let c5 = cycle(5);
        let d5 = dm(&c5);
        for a in 0..5 {
            assert_eq!(contribution(&c5, &d5, a).unwrap(), 2);
        }
    }

    #[test]
    fn horizontal_counts() {
        let k3 = complete(3);
        let d3 = dm(&k3);
        for a in 0..3 {
            assert_eq!(horizontal_count(&k3, &d3, a).unwrap(), 1);
        }
        let c6 = cycle(6);
        let d6 = dm(&c6);
        for a in 0..6 {
            assert_eq!(horizontal_count(&c6, &d6, a).unwrap(), 0);
        }
        let c5 = cycle(5);
        let d5 = dm(&c5);
        for a in 0..5 {
            assert_eq!(horizontal_count(&c5, &d5, a).unwrap(), 1);
        }
    }

    #[test]
    fn eta_spot_values() {
        assert_eq!(eta(&cycle(5)).unwrap(), 5);
        assert_eq!(eta(&cycle(4)).unwrap(), 8);
        // K_5^2: K4 plus a vertex adjacent to two of it; 2n-6 = 4.
        let g = Graph::from_edges(
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (4, 0),
                (4, 1),
            ],
        )
        .unwrap();
        assert_eq!(eta(&g).unwrap(), 4);
        assert_eq!(eta_star_q4(&complete(3)).unwrap(), 15);
    }

    #[test]
    fn report_is_consistent() {
        let c5 = cycle(5);
        let r = full_report(&c5).unwrap();
        assert_eq!((r.n, r.m), (5, 5));
        assert_eq!((r.w, r.sz, r.sz4), (15, 20, 125));
        assert_eq!((r.eta, r.eta4), (5, 65));
        assert_eq!(r.c, vec![2; 5]);
        assert_eq!(r.h, vec![1; 5]);
        assert_eq!(r.c.iter().sum::<i64>(), 2 * r.eta);
    }

    #[test]
    fn identities_on_named_graphs() {
        for g in [cycle(5), cycle(4), complete(4), cycle(6)] {
            assert!(verify_good_edge_identity(&g).unwrap());
            assert!(verify_horizontal_identity(&g).unwrap());
        }
    }

    #[test]
    fn disconnected_inputs_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let d = dm(&g);
        assert!(wiener(&g, &d).is_err());
        assert!(szeged(&g, &d).is_err());
        assert!(contribution(&g, &d, 0).is_err());
        assert!(full_report(&g).is_err());
    }

    /// Independent naive oracle: Wiener by Floyd-Warshall, Szeged by
    /// recomputing single-source distances from scratch per edge, over every
    /// connected labeled graph with n <= 6.
    #[test]
    #[allow(clippy::needless_range_loop)]
    fn naive_oracle_exhaustive() {
        fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
            let n = g.n();
            let inf = u64::MAX / 4;
            let mut d = vec![vec![inf; n]; n];
            for i in 0..n {
                d[i][i] = 0;
                for j in g.neighbors(i) {
                    d[i][j] = 1;
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if d[i][k] + d[k][j] < d[i][j] {
                            d[i][j] = d[i][k] + d[k][j];
                        }
                    }
                }
            }
            d
        }
        fn bfs_from(g: &Graph, s: usize) -> Vec<u64> {
            let inf = u64::MAX / 4;
            let mut d = vec![inf; g.n()];
            let mut queue = std::collections::VecDeque::from([s]);
            d[s] = 0;
            while let Some(u) = queue.pop_front() {
                for v in g.neighbors(u) {
                    if d[v] == inf {
                        d[v] = d[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            d
        }
        fn naive_wiener(g: &Graph) -> i64 {
            let d = floyd_warshall(g);
            let mut total = 0i64;
            for i in 0..g.n() {
                for j in i + 1..g.n() {
                    total += d[i][j] as i64;
                }
            }
            total
        }
        fn naive_szeged(g: &Graph) -> i64 {
            let mut total = 0i64;
            for (u, v) in g.edges() {
                let du = bfs_from(g, u);
                let dv = bfs_from(g, v);
                let cu = (0..g.n()).filter(|&x| du[x] < dv[x]).count() as i64;
                let cv = (0..g.n()).filter(|&x| dv[x] < du[x]).count() as i64;
                total += cu * cv;
            }
            total
        }

        for n in 1..=6usize {
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
                let d = dm(&g);
                assert_eq!(wiener(&g, &d).unwrap(), naive_wiener(&g), "{g:?}");
                assert_eq!(szeged(&g, &d).unwrap(), naive_szeged(&g), "{g:?}");
            }
        }
    }
}
