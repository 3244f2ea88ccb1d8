use qpoly_drg::graphs::{build_hypercube, build_odd_graph};
use qpoly_drg::Error;

// Separate binary: the environment variable is process-wide.
#[test]
fn cap_from_environment() {
    std::env::set_var("DRG_SIZE_CAP", "100");
    assert!(build_hypercube(6).is_ok());
    assert!(matches!(build_hypercube(7), Err(Error::SizeCap { requested: 128, cap: 100 })));
    assert!(matches!(build_odd_graph(9), Err(Error::SizeCap { .. })));
    std::env::set_var("DRG_SIZE_CAP", "not a number");
    assert!(build_hypercube(7).is_ok());
    std::env::remove_var("DRG_SIZE_CAP");
    assert!(matches!(build_hypercube(64), Err(Error::SizeCap { .. })));
}
