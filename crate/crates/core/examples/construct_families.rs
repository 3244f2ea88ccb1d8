//! Builds each family and extracts its array by BFS.

use qpoly_drg::graphs::{
    build_folded_hypercube, build_hypercube, build_odd_graph, build_projective_incidence, verify_distance_regular, Graph,
};

fn show(name: &str, g: Graph) {
    let p = verify_distance_regular(&g);
    println!(
        "{name:<22} n = {:<5} girth {:?}  bipartite {:<5}  array {}",
        p.vertex_count,
        p.girth,
        p.bipartite,
        p.array.map_or("-".into(), |a| a.to_string())
    );
}

fn main() -> qpoly_drg::Result<()> {
    for d in [4, 5] {
        show(&format!("{d}-cube"), build_hypercube(d)?);
    }
    for m in [7, 10] {
        show(&format!("folded {m}-cube"), build_folded_hypercube(m)?);
    }
    for m in [5, 7, 9] {
        show(&format!("Odd graph, m = {m}"), build_odd_graph(m)?);
    }
    for q in [2, 3, 4, 9] {
        show(&format!("PG(2, {q}) incidence"), build_projective_incidence(q)?);
    }
    Ok(())
}
