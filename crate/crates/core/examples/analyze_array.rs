//! Derived parameters, spectrum and Q-polynomial orderings of an array.
//! `cargo run --example analyze_array -- "{4,3,3;1,1,2}"`

use qpoly_drg::analysis::analyze;
use qpoly_drg::IntersectionArray;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "{3,2,2;1,1,3}".into());
    let array: IntersectionArray = text.parse()?;
    print!("{}", analyze(&array).to_text());
    Ok(())
}
