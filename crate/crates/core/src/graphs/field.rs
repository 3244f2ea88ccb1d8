use super::tables::*;
use crate::error::{Error, Result};

/// A small finite field as explicit addition and multiplication tables.
/// Prime fields are tabulated from modular arithmetic; GF(4), GF(8) and
/// GF(9) use the bundled tables.
#[derive(Debug, Clone)]
pub struct FiniteField {
    order: usize,
    add: Vec<Vec<u8>>,
    mul: Vec<Vec<u8>>,
}

fn to_vecs<const N: usize>(t: &[[u8; N]; N]) -> Vec<Vec<u8>> {
    t.iter().map(|r| r.to_vec()).collect()
}

impl FiniteField {
    pub fn new(order: u32) -> Result<Self> {
        let (add, mul) = match order {
            4 => (to_vecs(&GF4_ADD), to_vecs(&GF4_MUL)),
            8 => (to_vecs(&GF8_ADD), to_vecs(&GF8_MUL)),
            9 => (to_vecs(&GF9_ADD), to_vecs(&GF9_MUL)),
            2 | 3 | 5 | 7 | 11 | 13 => {
                let p = order as usize;
                let table = |f: fn(usize, usize) -> usize| {
                    (0..p)
                        .map(|a| (0..p).map(|b| (f(a, b) % p) as u8).collect())
                        .collect::<Vec<Vec<u8>>>()
                };
                (table(|a, b| a + b), table(|a, b| a * b))
            }
            _ => return Err(Error::UnsupportedOrder(order)),
        };
        Ok(FiniteField {
            order: order as usize,
            add,
            mul,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize][b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize][b as usize]
    }

    pub fn dot(&self, x: &[u8; 3], y: &[u8; 3]) -> u8 {
        (0..3).fold(0, |acc, i| self.add(acc, self.mul(x[i], y[i])))
    }

    /// Checks the field axioms on the tables (exhaustive; cubic in the order).
    pub fn check_axioms(&self) -> bool {
        let q = self.order as u8;
        let els = 0..q;
        let assoc_comm = els.clone().all(|a| {
            (0..q).all(|b| {
                self.add(a, b) == self.add(b, a)
                    && self.mul(a, b) == self.mul(b, a)
                    && (0..q).all(|c| {
                        self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
                            && self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
                            && self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c))
                    })
            })
        });
        let identities = els.clone().all(|a| self.add(a, 0) == a && self.mul(a, 1) == a);
        let inverses = els.clone().all(|a| (0..q).any(|b| self.add(a, b) == 0))
            && (1..q).all(|a| (1..q).any(|b| self.mul(a, b) == 1));
        assoc_comm && identities && inverses
    }
}
