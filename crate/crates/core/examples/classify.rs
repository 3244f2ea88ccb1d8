//! Verdicts for the two families and for refuted arrays, as text and JSON.

use qpoly_drg::classify::{classify, report_render, ClassifyInput, ClassifyOptions, Document, Format};
use qpoly_drg::graphs::build_projective_incidence;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = ClassifyOptions::default();
    for text in ["{4,3,3;1,1,2}", "{6,5,5,4,4;1,1,2,2,3}", "{10,9,8,7,6;1,2,3,4,10}"] {
        let v = classify(&ClassifyInput::Array(text.parse()?), opts)?;
        print!("{}\n", report_render(Document::Verdict(&v), Format::Text));
    }
    let v = classify(&ClassifyInput::Array("{41,40,40;1,1,14}".parse()?), opts)?;
    print!("{}", report_render(Document::Verdict(&v), Format::Json));
    let g = build_projective_incidence(4)?;
    let v = classify(&ClassifyInput::Graph(g), opts)?;
    print!("\n{}", report_render(Document::Verdict(&v), Format::Text));
    Ok(())
}
