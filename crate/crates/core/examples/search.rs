//! Bounded search over intersection arrays: `cargo run --release --example search -- 3 5 12`.

use qpoly_drg::classify::{report_render, search, Document, Format, SearchParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let mut params = SearchParams::default();
    if let [d_min, d_max, k_max, ..] = args[..] {
        params.d_min = d_min as usize;
        params.d_max = d_max as usize;
        params.k_max = k_max;
    }
    params.no_external = std::env::var_os("NO_EXTERNAL").is_some();
    let report = search(params)?;
    print!("{}", report_render(Document::Search(&report), Format::Text));
    Ok(())
}
