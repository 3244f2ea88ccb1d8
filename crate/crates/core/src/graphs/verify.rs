use super::Graph;
use crate::IntersectionArray;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Also check that every `p^h_ij` is constant (cubic in `n`).
    pub full_intersection_numbers: bool,
}

/// What BFS from every vertex says about a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub connected: bool,
    /// Largest eccentricity; meaningless when disconnected.
    pub diameter: usize,
    /// `None` for forests.
    pub girth: Option<u64>,
    /// From a 2-colouring of the BFS layers.
    pub bipartite: bool,
    /// Present exactly when `c_i`, `a_i`, `b_i` are constant over all
    /// pairs at each distance.
    pub array: Option<IntersectionArray>,
    /// The first constancy violation, if any.
    pub failure: Option<String>,
    /// `p[h][i][j]`, when requested and constant.
    pub intersection_numbers: Option<Vec<Vec<Vec<u64>>>>,
}

impl DistanceProfile {
    pub fn is_distance_regular(&self) -> bool {
        self.array.is_some()
    }
}

pub fn verify_distance_regular(g: &Graph) -> DistanceProfile {
    verify_distance_regular_with(g, VerifyOptions::default())
}

/// Per-pair counts at one distance: `(c_i, a_i, b_i)` and the pair that
/// first fixed them.
type Counts = ((u64, u64, u64), (usize, usize));

pub fn verify_distance_regular_with(g: &Graph, opts: VerifyOptions) -> DistanceProfile {
    let n = g.vertex_count();
    let mut profile = DistanceProfile {
        vertex_count: n,
        edge_count: g.edge_count(),
        connected: g.is_connected(),
        diameter: 0,
        girth: None,
        bipartite: true,
        array: None,
        failure: None,
        intersection_numbers: None,
    };
    if n == 0 {
        profile.failure = Some("empty graph".into());
        return profile;
    }
    if !profile.connected {
        profile.failure = Some("disconnected".into());
    }
    let first = g.distances_from(0);
    profile.bipartite = g
        .edges()
        .all(|(u, v)| first[u] == u32::MAX || first[u] % 2 != first[v] % 2);

    let mut per_distance: Vec<Option<Counts>> = Vec::new();
    let mut rows: Vec<Vec<u8>> = Vec::new();
    let mut girth = u64::MAX;
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    for x in 0..n {
        dist.fill(u32::MAX);
        parent.fill(u32::MAX);
        order.clear();
        dist[x] = 0;
        order.push(x);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbors(u) {
                let w = w as usize;
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u as u32;
                    order.push(w);
                } else if parent[u] != w as u32 {
                    // a non-tree edge closes a cycle through x of at most this length
                    girth = girth.min((dist[u] + dist[w] + 1) as u64);
                }
            }
        }
        let ecc = dist[*order.last().expect("nonempty")] as usize;
        profile.diameter = profile.diameter.max(ecc);
        if !profile.connected || profile.failure.is_some() {
            continue;
        }
        for &y in &order {
            let i = dist[y];
            let (mut c, mut a, mut b) = (0u64, 0u64, 0u64);
            for &z in g.neighbors(y) {
                let dz = dist[z as usize];
                if dz + 1 == i {
                    c += 1;
                } else if dz == i {
                    a += 1;
                } else {
                    b += 1;
                }
            }
            let i = i as usize;
            if per_distance.len() <= i {
                per_distance.resize(i + 1, None);
            }
            match &per_distance[i] {
                None => per_distance[i] = Some(((c, a, b), (x, y))),
                Some((seen, (x0, y0))) if *seen != (c, a, b) => {
                    profile.failure = Some(format!(
                        "at distance {i}: (c, a, b) = {seen:?} for ({x0}, {y0}) but {:?} for ({x}, {y})",
                        (c, a, b)
                    ));
                    break;
                }
                _ => {}
            }
        }
        if opts.full_intersection_numbers && ecc < u8::MAX as usize {
            rows.push(dist.iter().map(|&d| d as u8).collect());
        }
    }
    profile.girth = (girth != u64::MAX).then_some(girth);
    if profile.failure.is_some() {
        return profile;
    }
    let d = profile.diameter;
    if d == 0 {
        profile.failure = Some("single vertex".into());
        return profile;
    }
    let counts: Vec<(u64, u64, u64)> = per_distance.iter().map(|e| e.expect("all distances seen").0).collect();
    let b: Vec<u64> = (0..d).map(|i| counts[i].2).collect();
    let c: Vec<u64> = (1..=d).map(|i| counts[i].0).collect();
    match IntersectionArray::new(b, c) {
        Ok(a) => profile.array = Some(a),
        Err(e) => {
            profile.failure = Some(format!("counts do not form an intersection array: {e}"));
            return profile;
        }
    }
    if opts.full_intersection_numbers {
        if rows.len() != n {
            profile.failure = Some("diameter too large for the full p^h_ij check".into());
            profile.array = None;
            return profile;
        }
        match full_table(&rows, d) {
            Ok(t) => profile.intersection_numbers = Some(t),
            Err(msg) => {
                profile.failure = Some(msg);
                profile.array = None;
            }
        }
    }
    profile
}

fn full_table(rows: &[Vec<u8>], d: usize) -> Result<Vec<Vec<Vec<u64>>>, String> {
    let n = rows.len();
    let mut table: Vec<Option<Vec<Vec<u64>>>> = vec![None; d + 1];
    let mut counts = vec![vec![0u64; d + 1]; d + 1];
    for x in 0..n {
        for y in 0..n {
            for r in counts.iter_mut() {
                r.fill(0);
            }
            for z in 0..n {
                counts[rows[x][z] as usize][rows[y][z] as usize] += 1;
            }
            let h = rows[x][y] as usize;
            match &table[h] {
                None => table[h] = Some(counts.clone()),
                Some(t) if *t != counts => {
                    return Err(format!("p^{h}_ij differs between pairs at distance {h} ({x}, {y})"))
                }
                _ => {}
            }
        }
    }
    Ok(table.into_iter().map(|t| t.expect("all distances seen")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_hypercube, build_odd_graph, build_projective_incidence};

    #[test]
    fn heawood() {
        let p = verify_distance_regular(&build_projective_incidence(2).unwrap());
        assert_eq!(p.array.unwrap().to_string(), "{3,2,2;1,1,3}");
        assert_eq!(p.girth, Some(6));
        assert!(p.bipartite);
    }

    #[test]
    fn petersen_and_odd7() {
        let p = verify_distance_regular(&build_odd_graph(5).unwrap());
        assert_eq!(p.array.unwrap().to_string(), "{3,2;1,1}");
        assert_eq!(p.girth, Some(5));
        let p = verify_distance_regular_with(
            &build_odd_graph(7).unwrap(),
            VerifyOptions {
                full_intersection_numbers: true,
            },
        );
        assert_eq!(p.array.unwrap().to_string(), "{4,3,3;1,1,2}");
        assert!(!p.bipartite);
        let t = p.intersection_numbers.unwrap();
        // p^0_ii = k_i
        assert_eq!((0..4).map(|i| t[0][i][i]).collect::<Vec<_>>(), vec![1, 4, 12, 18]);
    }

    #[test]
    fn damaged_cube() {
        let g = build_hypercube(4).unwrap().without_edge(0, 1).unwrap();
        let p = verify_distance_regular(&g);
        assert!(!p.is_distance_regular());
        assert!(p.failure.is_some());
    }

    #[test]
    fn disconnected_and_tree() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let p = verify_distance_regular(&g);
        assert!(!p.connected && !p.is_distance_regular());
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let p = verify_distance_regular(&path);
        assert_eq!(p.girth, None);
        assert!(!p.is_distance_regular());
    }
}
