//! Quadratic surds and the square tests used by the certificates.

use qpoly_drg::arith::{int, notsquare_check, rat, QuadraticNumber};

fn main() {
    let r = QuadraticNumber::sqrt(&int(665)).unwrap();
    let root = &(&QuadraticNumber::from_integer(79) - &(&QuadraticNumber::from_integer(3) * &r))
        / &QuadraticNumber::from_integer(512);
    println!("(79 - 3 sqrt 665)/512 = {root}  ~ {:.6e}", root.to_f64());
    println!("sqrt(8/9) = {}", QuadraticNumber::sqrt(&rat(8, 9)).unwrap());
    println!("norm of 1 + sqrt 2 = {}", (&QuadraticNumber::from_integer(1) + &QuadraticNumber::sqrt(&int(2)).unwrap()).norm());

    for u in [0u64, 1, 2, 100, 1_000_000] {
        let c = notsquare_check(u);
        println!("4u^2 + 9u + 4 at u = {u}: {} (floor root {}, square: {})", c.value, c.floor_root, c.is_square);
    }
}
