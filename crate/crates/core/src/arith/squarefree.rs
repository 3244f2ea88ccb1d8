//! Squarefree reduction of radicands: trial division up to 10^6, then
//! Miller-Rabin and Pollard-Brent on whatever cofactor is left.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Writes `n = s^2 * d` with `d` squarefree. `n = 0` gives `(0, 0)`.
pub fn squarefree_decompose(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::zero());
    }
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    for (p, e) in factorize(n) {
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
    }
    (square, free)
}

fn factorize(n: &BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    let mut rem = n.clone();
    if let Some(small) = rem.to_u64() {
        let mut r = small;
        let mut p = 2u64;
        while p <= TRIAL_LIMIT && p * p <= r {
            while r % p == 0 {
                *out.entry(BigUint::from(p)).or_insert(0) += 1;
                r /= p;
            }
            p += if p == 2 { 1 } else { 2 };
        }
        rem = BigUint::from(r);
    } else {
        let mut p = 2u64;
        while p <= TRIAL_LIMIT {
            let bp = BigUint::from(p);
            if &bp * &bp > rem {
                break;
            }
            while (&rem % &bp).is_zero() {
                *out.entry(bp.clone()).or_insert(0) += 1;
                rem /= &bp;
            }
            p += if p == 2 { 1 } else { 2 };
        }
    }
    if rem.is_one() {
        return out;
    }
    let limit = BigUint::from(TRIAL_LIMIT);
    if rem <= &limit * &limit {
        // No factor below the trial limit, so the cofactor is prime.
        *out.entry(rem).or_insert(0) += 1;
        return out;
    }
    let mut stack = vec![rem];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let r = m.sqrt();
        if &r * &r == m {
            stack.push(r.clone());
            stack.push(r);
            continue;
        }
        let f = pollard_brent(&m);
        stack.push(&m / &f);
        stack.push(f);
    }
    out
}

/// Miller-Rabin with the first twenty prime bases; deterministic below 3.3e24.
pub fn is_probable_prime(n: &BigUint) -> bool {
    const BASES: [u32; 20] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ];
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in &BASES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in &BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the composite, non-square `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    const BATCH: u64 = 64;
    let one = BigUint::one();
    let absdiff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    for c in 1u32.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut r = 1u64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    q = (q * absdiff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = absdiff(&x, &ys).gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
    unreachable!("some polynomial x^2 + c splits a composite")
}
