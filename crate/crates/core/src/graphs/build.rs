use super::field::FiniteField;
use super::{check_cap, Graph};
use crate::error::{Error, Result};

pub const SUPPORTED_ORDERS: [u32; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];

fn pow2(e: usize) -> Result<usize> {
    if e >= 64 {
        return Err(Error::SizeCap {
            requested: if e < 128 { 1u128 << e } else { u128::MAX },
            cap: super::size_cap(),
        });
    }
    check_cap(1u128 << e)
}

/// The `D`-cube. Vertex `v` is the binary string of `v`.
pub fn build_hypercube(d: usize) -> Result<Graph> {
    if d < 2 {
        return Err(Error::Precondition(format!("hypercube needs D >= 2, got {d}")));
    }
    let n = pow2(d)?;
    let adj = (0..n)
        .map(|v| (0..d).map(|i| (v ^ (1 << i)) as u32).collect())
        .collect();
    Graph::from_adjacency(adj)
}

/// The folded `m`-cube: the `(m-1)`-cube with each vertex also joined to
/// its complement. Vertex `v` stands for the antipodal pair
/// `{0v, 1v'}` of the `m`-cube.
pub fn build_folded_hypercube(m: usize) -> Result<Graph> {
    if m < 5 {
        return Err(Error::Precondition(format!("folded cube needs m >= 5, got {m}")));
    }
    let n = pow2(m - 1)?;
    let mask = n - 1;
    let adj = (0..n)
        .map(|v| {
            (0..m - 1)
                .map(|i| (v ^ (1 << i)) as u32)
                .chain(std::iter::once((v ^ mask) as u32))
                .collect()
        })
        .collect();
    Graph::from_adjacency(adj)
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// The Odd graph on an `m`-set, `m = 2D + 1`: `D`-subsets, adjacent when
/// disjoint. Vertices are numbered by the rank of the subset's bitmask
/// among all `D`-subsets in increasing numeric order.
pub fn build_odd_graph(m: usize) -> Result<Graph> {
    if m < 5 || m % 2 == 0 {
        return Err(Error::Precondition(format!("Odd graph needs odd m >= 5, got {m}")));
    }
    if m > 63 {
        return Err(Error::SizeCap {
            requested: u128::MAX,
            cap: super::size_cap(),
        });
    }
    let d = (m - 1) / 2;
    check_cap(binomial(m as u128, d as u128))?;
    let full: u64 = (1 << m) - 1;
    let mut subsets = Vec::new();
    // Gosper's hack: successive masks with d bits set.
    let mut s: u64 = (1 << d) - 1;
    while s <= full {
        subsets.push(s);
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    let rank = |x: u64| subsets.binary_search(&x).expect("d-subset") as u32;
    let adj = subsets
        .iter()
        .map(|&s| {
            let comp = full ^ s;
            let mut bits = comp;
            let mut out = Vec::with_capacity(d + 1);
            while bits != 0 {
                let b = bits & bits.wrapping_neg();
                out.push(rank(comp ^ b));
                bits ^= b;
            }
            out
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// Normalized representatives of the points of PG(2, q): the first
/// nonzero coordinate is 1. Ordered as (1, a, b), then (0, 1, a), then
/// (0, 0, 1), with field elements in table order.
fn projective_points(q: u8) -> Vec<[u8; 3]> {
    let mut pts = Vec::new();
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for a in 0..q {
        pts.push([0, 1, a]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// Point-line incidence graph of the Desarguesian plane PG(2, order).
/// Vertices `0..N` are points and `N..2N` lines, both indexed by the same
/// normalized coordinate vectors; a point lies on a line when their dot
/// product vanishes.
pub fn build_projective_incidence(order: u32) -> Result<Graph> {
    if !SUPPORTED_ORDERS.contains(&order) {
        return Err(Error::UnsupportedOrder(order));
    }
    let field = FiniteField::new(order)?;
    let pts = projective_points(order as u8);
    let n = pts.len();
    check_cap(2 * n as u128)?;
    let mut adj = vec![Vec::new(); 2 * n];
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if field.dot(p, l) == 0 {
                adj[i].push((n + j) as u32);
                adj[n + j].push(i as u32);
            }
        }
    }
    Graph::from_adjacency(adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let g = build_hypercube(4).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (16, 32));
        let g = build_hypercube(2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        let g = build_folded_hypercube(7).unwrap();
        assert_eq!(g.vertex_count(), 64);
        assert!((0..64).all(|v| g.degree(v) == 7));
        let g = build_odd_graph(7).unwrap();
        assert_eq!(g.vertex_count(), 35);
        assert!((0..35).all(|v| g.degree(v) == 4));
        for q in SUPPORTED_ORDERS {
            let g = build_projective_incidence(q).unwrap();
            let n = (q * q + q + 1) as usize;
            assert_eq!(g.vertex_count(), 2 * n);
            assert!((0..2 * n).all(|v| g.degree(v) == q as usize + 1), "order {q}");
        }
    }

    #[test]
    fn preconditions() {
        assert!(build_hypercube(1).is_err());
        assert!(build_folded_hypercube(4).is_err());
        assert!(build_odd_graph(6).is_err());
        assert!(build_odd_graph(3).is_err());
        assert_eq!(build_projective_incidence(6).unwrap_err(), Error::UnsupportedOrder(6));
        assert!(matches!(build_hypercube(40), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn odd_graph_vertices_are_disjoint_neighbours() {
        let g = build_odd_graph(5).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
    }
}
