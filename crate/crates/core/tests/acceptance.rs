//! Acceptance suite: one test per verification claim, each printing its
//! pass/fail line. `cargo test --test acceptance` runs the whole gate; the
//! CLI `sympoly verify --suite paper` executes the same claims.

use sympoly_core::verify::{
    cycle_fvectors, dual_point_counts, facet_counts, flow_duality, goulden_jackson,
    hstar_identities, kr_section_theorem, outerplanar_examples, property_suites,
    volumes_three_ways, ClaimResult,
};

fn run(result: ClaimResult) {
    let status = if result.pass { "PASS" } else { "FAIL" };
    println!("criterion {:>2} [{status}] {}", result.id, result.claim);
    assert!(
        result.pass,
        "criterion {} failed: {}",
        result.id, result.detail
    );
}

#[test]
fn criterion_01_facet_counts() {
    run(facet_counts());
}

#[test]
fn criterion_02_volumes_three_ways() {
    run(volumes_three_ways());
}

#[test]
fn criterion_03_hstar_identities() {
    run(hstar_identities());
}

#[test]
fn criterion_04_goulden_jackson() {
    run(goulden_jackson());
}

#[test]
fn criterion_05_cycle_fvectors() {
    run(cycle_fvectors());
}

#[test]
fn criterion_06_dual_point_counts() {
    run(dual_point_counts());
}

#[test]
fn criterion_07_flow_duality() {
    run(flow_duality());
}

#[test]
fn criterion_08_outerplanar_examples() {
    run(outerplanar_examples());
}

#[test]
fn criterion_09_kr_section_theorem() {
    run(kr_section_theorem());
}

#[test]
fn criterion_10_property_suites() {
    run(property_suites());
}
