//! Eigenvalues, multiplicities, eigenmatrices and Krein parameters, with the
//! defining relation checked exactly.

use qpoly_drg::spectral::{defining_relation_holds, eigenmatrices, eigenvalues, krein_from_eigenmatrices, q_polynomial_orderings};
use qpoly_drg::IntersectionArray;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["{3,2,2;1,1,3}", "{4,3,3;1,1,2}", "{5,4,3,2,1;1,2,3,4,5}"] {
        let array: IntersectionArray = text.parse()?;
        let spectrum = eigenvalues(&array)?;
        let pair = eigenmatrices(&spectrum)?;
        let tensor = krein_from_eigenmatrices(&pair);
        println!("{array}");
        for (e, m) in spectrum.eigenvalues().iter().zip(spectrum.multiplicities()) {
            println!("  {e:>12}  x{m}");
        }
        println!("  defining relation exact: {}", defining_relation_holds(&pair, &tensor));
        println!("  negative Krein entries: {}", tensor.negative_entries().len());
        println!("  Q-polynomial orderings: {:?}", q_polynomial_orderings(&tensor).certified);
    }
    Ok(())
}
