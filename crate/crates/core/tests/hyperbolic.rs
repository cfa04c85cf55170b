mod common;

use common::fixture;
use sullivan::invariants::{
    gap_probe, generator_dims, growth_classify, loop_poincare_series, Growth,
};
use sullivan::sullivan::minimal_model;

/// The minimal model of `S³ ∨ S³` through degree 10: its loop series grows
/// exponentially and its generator degrees leave no gaps of width 3.
#[test]
fn wedge_of_spheres() {
    let m = minimal_model(&fixture("h_s3_wedge_s3"), 10).unwrap().model;
    let series = loop_poincare_series(&m, 9).unwrap();
    assert!(
        matches!(
            growth_classify(&series.coefficients),
            Growth::Exponential { .. }
        ),
        "{:?}",
        series.coefficients
    );
    let v = generator_dims(&m);
    let probe = gap_probe(&v[..=10.min(v.len() - 1)], 3);
    assert!(probe.no_failures(), "{v:?}: {:?}", probe.windows);
}
