//! Shared graph builders for the benchmarks.

use szw_core::{build, FamilySpec, Graph};

/// The Petersen graph: 3-regular, girth 5, vertex-transitive; a worst case
/// for the canonical-form search at small orders.
pub fn petersen() -> Graph {
    let mut g = Graph::edgeless(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// The 3-cube: 3-regular and bipartite on 8 vertices.
pub fn cube() -> Graph {
    let mut g = Graph::edgeless(8);
    for u in 0..8u8 {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                g.add_edge(u as usize, v as usize);
            }
        }
    }
    g
}

pub fn knt(n: usize, t: usize) -> Graph {
    build(&FamilySpec::Knt { n, t }).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use szw_core::eta;

    #[test]
    fn builders_are_sane() {
        let p = petersen();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert_eq!(p.girth(), Some(5));
        assert_eq!(eta(&p).unwrap(), 60);
        let q = cube();
        assert_eq!((q.n(), q.edge_count()), (8, 12));
        assert!(q.is_bipartite());
        assert_eq!(eta(&knt(40, 2)).unwrap(), 74);
    }
}
