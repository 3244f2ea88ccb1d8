//! Diameter 5, `c_2 = 1`: the two forms of `2 theta_2` and the refutation
//! of every positive integral `theta_2` up to a bound.
//! `cargo run --release --example d5_chain -- 1000000`

use qpoly_drg::arith::{int, notsquare_check, rat};
use qpoly_drg::bipartite::{d5_refute_c2_1, theta2_candidates_d5};
use qpoly_drg::Stage;

fn main() -> qpoly_drg::Result<()> {
    for q in [int(2), int(3), rat(7, 2), int(-3)] {
        let c = theta2_candidates_d5(&q)?;
        println!("q = {q}: beta = {}, 2 theta_2 = {} | {}", c.beta.beta, c.q_form[0], c.q_form[1]);
    }
    let limit: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10_000);
    let squares: Vec<u64> = (0..=limit).filter(|&u| notsquare_check(u).is_square).collect();
    println!("u <= {limit} with 4u^2 + 9u + 4 square: {squares:?}");
    let mut by_stage = std::collections::BTreeMap::<Stage, u64>::new();
    for t in 1..=limit as i64 {
        *by_stage.entry(d5_refute_c2_1(t)?.stage).or_default() += 1;
    }
    println!("theta_2 in [1, {limit}] refuted: {by_stage:?}");
    println!("{}", d5_refute_c2_1(18)?);
    Ok(())
}
