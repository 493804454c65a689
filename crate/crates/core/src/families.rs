//! Named graph families and their exact closed forms.
//!
//! The cycle-with-trees closed forms depend only on the component sizes, so
//! the default constructor realizes each attached tree as a path; a hook
//! accepts arbitrary rooted trees for cross-checks.

use std::fmt;
use std::str::FromStr;

use crate::blocks::blocks;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Constructible family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `K_n`.
    Complete(usize),
    /// `C_k`.
    Cycle(usize),
    /// `K_{n-1}` plus one vertex adjacent to `t` of the old vertices;
    /// 2-connected iff `2 <= t <= n-2`.
    Knt { n: usize, t: usize },
    /// Cycle `C_k` with a path of `sizes[i]` vertices rooted at cycle
    /// vertex `i` (root counted in the size).
    CycleWithTrees { k: usize, sizes: Vec<usize> },
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Complete(n) => *n,
            FamilySpec::Cycle(k) => *k,
            FamilySpec::Knt { n, .. } => *n,
            FamilySpec::CycleWithTrees { sizes, .. } => sizes.iter().sum(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Cycle(k) => write!(f, "cycle:{k}"),
            FamilySpec::Knt { n, t } => write!(f, "knt:{n},{t}"),
            FamilySpec::CycleWithTrees { k, sizes } => {
                write!(f, "ctrees:{k}:")?;
                for (i, s) in sizes.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Textual forms: `knt:n,t`, `cycle:k`, `ctrees:k:s1,...,sk`, `complete:n`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::FamilySpec(s.to_string());
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let spec = match kind {
            "complete" => FamilySpec::Complete(rest.parse().map_err(|_| bad())?),
            "cycle" => FamilySpec::Cycle(rest.parse().map_err(|_| bad())?),
            "knt" => {
                let (n, t) = rest.split_once(',').ok_or_else(bad)?;
                FamilySpec::Knt {
                    n: n.parse().map_err(|_| bad())?,
                    t: t.parse().map_err(|_| bad())?,
                }
            }
            "ctrees" => {
                let (k, sizes) = rest.split_once(':').ok_or_else(bad)?;
                let k: usize = k.parse().map_err(|_| bad())?;
                let sizes = sizes
                    .split(',')
                    .map(|t| t.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                FamilySpec::CycleWithTrees { k, sizes }
            }
            _ => return Err(bad()),
        };
        validate(&spec)?;
        Ok(spec)
    }
}

fn validate(spec: &FamilySpec) -> Result<()> {
    let err = |msg: String| Err(Error::FamilySpec(msg));
    match spec {
        FamilySpec::Complete(n) => {
            if *n < 1 || *n > MAX_VERTICES {
                return err(format!("complete:{n} outside 1..={MAX_VERTICES}"));
            }
        }
        FamilySpec::Cycle(k) => {
            if *k < 3 || *k > MAX_VERTICES {
                return err(format!("cycle:{k} outside 3..={MAX_VERTICES}"));
            }
        }
        FamilySpec::Knt { n, t } => {
            if !(2..=MAX_VERTICES).contains(n) || !(1..*n).contains(t) {
                return err(format!("knt:{n},{t} requires 1 <= t <= n-1"));
            }
        }
        FamilySpec::CycleWithTrees { k, sizes } => {
            if *k < 3 || sizes.len() != *k || sizes.contains(&0) {
                return err(format!(
                    "ctrees needs k >= 3 and k positive sizes, got {spec}"
                ));
            }
            if sizes.iter().sum::<usize>() > MAX_VERTICES {
                return err(format!("ctrees order exceeds {MAX_VERTICES}"));
            }
        }
    }
    Ok(())
}

/// Builds the family member with its deterministic labeling: cycle vertices
/// `0..k-1` first, then tree vertices in path order.
pub fn build(spec: &FamilySpec) -> Result<Graph> {
    validate(spec)?;
    match spec {
        FamilySpec::Complete(n) => {
            let mut g = Graph::edgeless(*n);
            for u in 0..*n {
                for v in u + 1..*n {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        FamilySpec::Cycle(k) => {
            let mut g = Graph::edgeless(*k);
            for i in 0..*k {
                g.add_edge(i, (i + 1) % k);
            }
            Ok(g)
        }
        FamilySpec::Knt { n, t } => {
            let mut g = Graph::edgeless(*n);
            for u in 0..n - 1 {
                for v in u + 1..n - 1 {
                    g.add_edge(u, v);
                }
            }
            for v in 0..*t {
                g.add_edge(n - 1, v);
            }
            Ok(g)
        }
        FamilySpec::CycleWithTrees { k, sizes } => {
            let paths: Vec<Vec<(usize, usize)>> = sizes
                .iter()
                .map(|&s| (0..s - 1).map(|j| (j, j + 1)).collect())
                .collect();
            build_cycle_with_rooted_trees(*k, &paths)
        }
    }
}

/// Hook for arbitrary tree shapes: `trees[i]` is an edge list on local ids
/// `0..t_i - 1` whose root (local id 0) is identified with cycle vertex `i`.
/// Each edge list must form a tree. Local id `j >= 1` of tree `i` becomes the
/// next unused global id, in order.
pub fn build_cycle_with_rooted_trees(k: usize, trees: &[Vec<(usize, usize)>]) -> Result<Graph> {
    if k < 3 || trees.len() != k {
        return Err(Error::FamilySpec(format!(
            "cycle with trees needs k >= 3 roots, got k={k}, {} trees",
            trees.len()
        )));
    }
    let sizes: Vec<usize> = trees.iter().map(|t| t.len() + 1).collect();
    let n: usize = sizes.iter().sum();
    if n > MAX_VERTICES {
        return Err(Error::FamilySpec(format!(
            "order {n} exceeds {MAX_VERTICES}"
        )));
    }
    let mut g = Graph::edgeless(n);
    for i in 0..k {
        g.add_edge(i, (i + 1) % k);
    }
    let mut base = k;
    for (i, edges) in trees.iter().enumerate() {
        let size = sizes[i];
        let global = |local: usize| -> Result<usize> {
            if local >= size {
                return Err(Error::FamilySpec(format!(
                    "tree {i}: local id {local} out of range for size {size}"
                )));
            }
            Ok(if local == 0 { i } else { base + local - 1 })
        };
        for &(a, b) in edges {
            g.add_edge(global(a)?, global(b)?);
        }
        // A connected graph on `size` vertices with `size - 1` edges is a tree.
        let local_ids: Vec<usize> = std::iter::once(i).chain(base..base + size - 1).collect();
        let sub = g.induced(&local_ids);
        if sub.edge_count() != size - 1 || !sub.is_connected() {
            return Err(Error::FamilySpec(format!("tree {i} is not a tree")));
        }
        base += size - 1;
    }
    Ok(g)
}

/// `eta(K_n^2) = eta(K_n^{n-2}) = 2n - 6`; the only cases with a closed form.
pub fn eta_knt_special(n: usize, t: usize) -> Result<i64> {
    if n < 4 || (t != 2 && t != n - 2) {
        return Err(Error::FamilySpec(format!(
            "no closed form for knt:{n},{t}; need n >= 4 and t in {{2, n-2}}"
        )));
    }
    Ok(2 * n as i64 - 6)
}

/// Exact `eta` of `C_5` with trees of the given sizes at its vertices:
/// the sum of size products over the five distance-2 vertex pairs.
pub fn eta_c5_trees(t: [i64; 5]) -> i64 {
    debug_assert!(t.iter().all(|&s| s >= 1));
    t[0] * t[2] + t[1] * t[3] + t[2] * t[4] + t[3] * t[0] + t[4] * t[1]
}

/// Exact `eta` of `C_4` with trees of the given sizes: adjacent-pair products
/// plus twice the diagonal products, equivalently
/// `(n^2 - (t_a - t_c)^2 - (t_b - t_d)^2) / 2`.
pub fn eta_c4_trees(t: [i64; 4]) -> i64 {
    debug_assert!(t.iter().all(|&s| s >= 1));
    t[0] * t[1] + t[1] * t[2] + t[2] * t[3] + t[3] * t[0] + 2 * (t[0] * t[2] + t[1] * t[3])
}

/// Exact `4 * eta*` of `C_3` with trees of the given sizes:
/// `t_a^2 + t_b^2 + t_c^2 + 4*(t_a t_b + t_a t_c + t_b t_c)`, equivalently
/// `(5 n^2 - (t_a-t_b)^2 - (t_b-t_c)^2 - (t_c-t_a)^2) / 3`.
pub fn eta_star_c3_trees_q4(t: [i64; 3]) -> i64 {
    debug_assert!(t.iter().all(|&s| s >= 1));
    t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + 4 * (t[0] * t[1] + t[0] * t[2] + t[1] * t[2])
}

/// Structural membership test for `K_n^t`: a vertex whose removal leaves a
/// complete graph. Complete graphs report `None`, never `t = n-1`.
pub fn detect_knt(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    if n < 3 || g.is_complete() {
        return None;
    }
    let full = (1u64 << n) - 1;
    for w in 0..n {
        let t = g.degree(w);
        if t == 0 {
            continue;
        }
        let rest_complete = (0..n)
            .filter(|&u| u != w)
            .all(|u| g.neighbor_bits(u) | 1 << u | 1 << w == full);
        if rest_complete {
            return Some((n, t));
        }
    }
    None
}

/// True iff every block induces a clique.
pub fn is_block_graph(g: &Graph) -> Result<bool> {
    let bd = blocks(g)?;
    Ok(bd.blocks.iter().all(|b| {
        b.iter()
            .enumerate()
            .all(|(i, &u)| b[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }))
}
