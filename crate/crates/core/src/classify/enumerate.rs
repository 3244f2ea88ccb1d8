//! The search domain: arrays with `a_1 = a_2 = 0`, `c_2 = 1`, nonincreasing
//! `b`, nondecreasing `c`, every `a_i >= 0` and every `k_i` integral.
//!
//! Leaves are split by the first index `i < D` with `a_i != 0`. Leaves
//! without one ("deep" leaves) are bipartite or almost bipartite and are
//! examined one by one; all others fall into buckets `(D, k, i)` that are
//! counted in bulk.

use crate::IntersectionArray;

pub(crate) const MAX_DIAMETER: usize = 8;

/// Which part of the domain to walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Region {
    All,
    /// First nonzero `a_i` at exactly this index.
    Bucket(usize),
}

/// A leaf of the walk. Index `i` runs over `0..=D`, with `c_0 = 0` and
/// `b_D = 0`.
pub(crate) struct Leaf<'a> {
    pub d: usize,
    pub b: &'a [u64],
    pub c: &'a [u64],
    pub shells: &'a [u64],
    /// 0 for deep leaves.
    pub first_nonzero: usize,
}

impl Leaf<'_> {
    pub fn k(&self) -> u64 {
        self.b[0]
    }

    pub fn a(&self, i: usize) -> u64 {
        self.k() - self.b[i] - self.c[i]
    }

    /// Same verdict as `feasibility_basic().is_empty()` on domain leaves:
    /// monotonicity, `a_i >= 0` and integrality hold by construction, so
    /// only `c_i <= b_{D-i}` and the two parity conditions remain.
    pub fn feasible(&self) -> bool {
        let d = self.d;
        if (1..d).any(|i| self.c[i] > self.b[d - i]) {
            return false;
        }
        let n: u64 = self.shells[..=d].iter().sum();
        if (n * self.k()) % 2 != 0 {
            return false;
        }
        (0..=d).all(|i| (self.shells[i] * self.a(i)) % 2 == 0)
    }

    pub fn array(&self) -> IntersectionArray {
        IntersectionArray::new(self.b[..self.d].to_vec(), self.c[1..=self.d].to_vec())
            .expect("domain leaves are well formed")
    }
}

struct Walker<F> {
    d: usize,
    k: u64,
    region: Region,
    b: [u64; MAX_DIAMETER + 1],
    c: [u64; MAX_DIAMETER + 1],
    shells: [u64; MAX_DIAMETER + 1],
    first_nonzero: usize,
    visit: F,
}

impl<F: FnMut(&Leaf<'_>)> Walker<F> {
    fn level(&mut self, i: usize) {
        let k = self.k;
        let prev = self.shells[i - 1] * self.b[i - 1];
        if i == self.d {
            for ci in self.c[i - 1]..=k {
                if prev % ci != 0 {
                    continue;
                }
                self.c[i] = ci;
                self.b[i] = 0;
                self.shells[i] = prev / ci;
                let leaf = Leaf {
                    d: self.d,
                    b: &self.b,
                    c: &self.c,
                    shells: &self.shells,
                    first_nonzero: self.first_nonzero,
                };
                (self.visit)(&leaf);
            }
            return;
        }
        let (a_lo, a_hi_cap) = match self.region {
            Region::All => (0, u64::MAX),
            Region::Bucket(j) if i < j => (0, 0),
            Region::Bucket(j) if i == j => (1, u64::MAX),
            Region::Bucket(_) => (0, u64::MAX),
        };
        for ci in self.c[i - 1]..k {
            if prev % ci != 0 {
                continue;
            }
            self.c[i] = ci;
            self.shells[i] = prev / ci;
            // b_i = k - c_i - a_i must lie in [1, b_{i-1}]
            let lo = (k - ci).saturating_sub(self.b[i - 1]).max(a_lo);
            let hi = (k - ci - 1).min(a_hi_cap);
            if lo > hi {
                continue;
            }
            for a in lo..=hi {
                self.b[i] = k - ci - a;
                let set = a > 0 && self.first_nonzero == 0;
                if set {
                    self.first_nonzero = i;
                }
                self.level(i + 1);
                if set {
                    self.first_nonzero = 0;
                }
            }
        }
    }
}

/// Visits every domain leaf of diameter `d` and valency `k` in `region`,
/// in a fixed order (`c_i` ascending, then `a_i` ascending, level by level).
pub(crate) fn walk<F: FnMut(&Leaf<'_>)>(d: usize, k: u64, region: Region, visit: F) {
    assert!((3..=MAX_DIAMETER).contains(&d) && k >= 3);
    let mut w = Walker {
        d,
        k,
        region,
        b: [0; MAX_DIAMETER + 1],
        c: [0; MAX_DIAMETER + 1],
        shells: [0; MAX_DIAMETER + 1],
        first_nonzero: 0,
        visit,
    };
    w.b[0] = k;
    w.b[1] = k - 1;
    w.b[2] = k - 1;
    w.c[1] = 1;
    w.c[2] = 1;
    w.shells[0] = 1;
    w.shells[1] = k;
    w.shells[2] = k * (k - 1);
    if d == 3 {
        // no level below D has a free a_i
        if matches!(region, Region::Bucket(_)) {
            return;
        }
    }
    w.level(3);
}

/// Leaf counts of the domain for one diameter.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DomainCounts {
    pub total: u64,
    pub deep: u64,
    pub feasible: u64,
}

/// Counts the domain for diameter `d` and `3 <= k <= k_max`.
pub fn count_domain(d: usize, k_max: u64) -> DomainCounts {
    let mut out = DomainCounts::default();
    for k in 3..=k_max {
        walk(d, k, Region::All, |leaf| {
            out.total += 1;
            if leaf.first_nonzero == 0 {
                out.deep += 1;
            }
            if leaf.feasible() {
                out.feasible += 1;
            }
        });
    }
    out
}
