//! `c_2 = 1` for bipartite Q-polynomial arrays with `q > 1`: the two roots
//! for `s*` against the bound `q^(-2D-1)`.

use qpoly_drg::arith::{int, rat};
use qpoly_drg::bipartite::{c2_equals_one_sstar, QBoundWitness};
use qpoly_drg::arith::QuadraticNumber;

fn main() -> qpoly_drg::Result<()> {
    for q in [int(2), int(3), int(5), rat(7, 2)] {
        for d in 5..=7 {
            let c = c2_equals_one_sstar(&q, d)?;
            let w = QBoundWitness::compute(&QuadraticNumber::from_rational(q.clone()), d)?;
            println!(
                "q = {q:>3}, D = {d}: alpha = {}, roots {} / {}, bound {}, identity {} = {}, refutes {}",
                c.alpha, c.s_star_roots.0, c.s_star_roots.1, w.bound, w.identity_lhs, w.identity_rhs, w.refutes()
            );
        }
    }
    Ok(())
}
