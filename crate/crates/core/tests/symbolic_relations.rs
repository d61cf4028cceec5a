//! The full relation suite over the parameter field itself.

use koornwinder::noumi::check_daha_relations;
use koornwinder::paramfield::FieldElement;
use koornwinder::scalar::Params;

#[test]
fn full_suite_holds_symbolically() {
    let p = Params::<FieldElement>::symbolic();
    for (n, k) in [(1, 2), (2, 2), (3, 1)] {
        let report = check_daha_relations(&p, n, k).unwrap();
        assert!(report.all_passed(), "n={n}: {}", report.to_json());
    }
}
