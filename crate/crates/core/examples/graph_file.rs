//! Writes a graph in `p`/`e` format, reads it back and verifies it.

use qpoly_drg::graphs::{build_odd_graph, verify_distance_regular_with, Graph, VerifyOptions};

fn main() -> qpoly_drg::Result<()> {
    let g = build_odd_graph(7)?;
    let path = std::env::temp_dir().join("odd7.graph");
    g.write_file(&path)?;
    let back = Graph::read_file(&path)?;
    assert_eq!(back, g);
    let text = g.to_edge_format();
    println!("{}", text.lines().take(3).collect::<Vec<_>>().join("\n"));
    let p = verify_distance_regular_with(&back, VerifyOptions { full_intersection_numbers: true });
    println!("array {}", p.array.expect("distance-regular"));
    let t = p.intersection_numbers.expect("requested");
    for (h, table) in t.iter().enumerate() {
        println!("p^{h}_ij = {table:?}");
    }
    let damaged = back.without_edge(0, back.neighbors(0)[0] as usize)?;
    println!("one edge removed: {:?}", verify_distance_regular_with(&damaged, VerifyOptions::default()).failure);
    Ok(())
}
