//! The almost-bipartite diameter-3 family indexed by `beta`: `k_3` is never
//! an integer.

use qpoly_drg::array::{beta_family, beta_family_k3_identity_check};

fn main() -> qpoly_drg::Result<()> {
    for beta in -8..=-3 {
        let m = beta_family(beta, 1)?;
        let id = beta_family_k3_identity_check(beta)?;
        println!(
            "beta = {beta:>3}: array {}  k_3 = {} = {} + ({})",
            m.array().map_or("-".into(), |a| a.to_string()),
            id.k3,
            id.polynomial_part,
            id.correction
        );
    }
    Ok(())
}
