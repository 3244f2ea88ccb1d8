#![allow(dead_code)]

use qpoly_drg::IntersectionArray;

/// Arrays of known distance-regular graphs (and a few parameter sets
/// without a graph) used across the integration tests.
pub const CORPUS: &[&str] = &[
    "{3,2,2;1,1,3}",               // Heawood
    "{4,3,3;1,1,4}",               // PG(2,3) incidence
    "{5,4,4;1,1,5}",               // PG(2,4) incidence
    "{3,2;1,1}",                   // Petersen
    "{4,3,3;1,1,2}",               // Odd graph, 7 points
    "{5,4,4,3;1,1,2,2}",           // Odd graph, 9 points
    "{3,2,1;1,2,3}",               // 3-cube
    "{4,3,2,1;1,2,3,4}",           // 4-cube
    "{5,4,3,2,1;1,2,3,4,5}",       // 5-cube
    "{7,6,5;1,2,3}",               // folded 7-cube
    "{6,5,4;1,2,6}",               // folded 6-cube
    "{6,4,2;1,2,3}",               // H(3,3)
    "{9,4,1;1,4,9}",               // J(6,3)
    "{3,2,1,1,1;1,1,1,2,3}",       // dodecahedron
    "{3,2,2,1,1;1,1,2,2,3}",       // Desargues
    "{3,2,2,1;1,1,2,3}",           // Pappus
    "{15,14,12,8;1,3,7,15}",       // (q, s*, D) = (2, 0, 4)
    "{31,30,28,24,16;1,3,7,15,31}",// (q, s*, D) = (2, 0, 5)
];

pub fn arr(s: &str) -> IntersectionArray {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn corpus() -> Vec<IntersectionArray> {
    CORPUS.iter().map(|s| arr(s)).collect()
}
