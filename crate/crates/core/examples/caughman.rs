//! Arrays from the bipartite `(q, s*, D)` parameterization and the `beta`
//! round trip.

use qpoly_drg::analysis::CaughmanReport;
use qpoly_drg::arith::{int, rat, QuadraticNumber};

fn main() {
    for (q, s, d) in [(int(2), int(0), 5), (int(2), int(0), 4), (int(3), int(0), 5), (int(-2), int(0), 6), (int(2), rat(1, 8), 5)] {
        match CaughmanReport::compute(q.clone(), QuadraticNumber::from_rational(s.clone()), d) {
            Ok(r) => print!("{}", r.to_text()),
            Err(e) => println!("q = {q}, s* = {s}, D = {d}: {e}"),
        }
    }
}
