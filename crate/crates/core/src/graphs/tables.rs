//! Addition and multiplication tables for GF(4), GF(8) and GF(9).
//! GF(2^n) elements are bit vectors over the basis 1, x, x^2 (reduction by
//! x^2+x+1 and x^3+x+1); GF(9) encodes a + b i as a + 3b with i^2 = -1.

pub(super) const GF4_ADD: [[u8; 4]; 4] = [
    [0, 1, 2, 3],
    [1, 0, 3, 2],
    [2, 3, 0, 1],
    [3, 2, 1, 0],
];
pub(super) const GF4_MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];
pub(super) const GF8_ADD: [[u8; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 5, 4, 7, 6],
    [2, 3, 0, 1, 6, 7, 4, 5],
    [3, 2, 1, 0, 7, 6, 5, 4],
    [4, 5, 6, 7, 0, 1, 2, 3],
    [5, 4, 7, 6, 1, 0, 3, 2],
    [6, 7, 4, 5, 2, 3, 0, 1],
    [7, 6, 5, 4, 3, 2, 1, 0],
];
pub(super) const GF8_MUL: [[u8; 8]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 2, 3, 4, 5, 6, 7],
    [0, 2, 4, 6, 3, 1, 7, 5],
    [0, 3, 6, 5, 7, 4, 1, 2],
    [0, 4, 3, 7, 6, 2, 5, 1],
    [0, 5, 1, 4, 2, 7, 3, 6],
    [0, 6, 7, 1, 5, 3, 2, 4],
    [0, 7, 5, 2, 1, 6, 4, 3],
];
pub(super) const GF9_ADD: [[u8; 9]; 9] = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8],
    [1, 2, 0, 4, 5, 3, 7, 8, 6],
    [2, 0, 1, 5, 3, 4, 8, 6, 7],
    [3, 4, 5, 6, 7, 8, 0, 1, 2],
    [4, 5, 3, 7, 8, 6, 1, 2, 0],
    [5, 3, 4, 8, 6, 7, 2, 0, 1],
    [6, 7, 8, 0, 1, 2, 3, 4, 5],
    [7, 8, 6, 1, 2, 0, 4, 5, 3],
    [8, 6, 7, 2, 0, 1, 5, 3, 4],
];
pub(super) const GF9_MUL: [[u8; 9]; 9] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 2, 3, 4, 5, 6, 7, 8],
    [0, 2, 1, 6, 8, 7, 3, 5, 4],
    [0, 3, 6, 2, 5, 8, 1, 4, 7],
    [0, 4, 8, 5, 6, 1, 7, 2, 3],
    [0, 5, 7, 8, 1, 3, 4, 6, 2],
    [0, 6, 3, 1, 7, 4, 2, 8, 5],
    [0, 7, 5, 4, 2, 6, 8, 3, 1],
    [0, 8, 4, 7, 3, 2, 5, 1, 6],
];
