mod common;

use common::*;

#[test]
fn ring_laws_hold() {
    run(triples(), ring_laws).unwrap();
}

#[test]
fn exponential_is_a_homomorphism() {
    run(degree_one_pairs(), exp_homomorphism).unwrap();
}

#[test]
fn exponential_matches_power_series() {
    run(positive_degree(), exp_power_series).unwrap();
}

#[test]
fn divided_power_binomial_identity() {
    run(degree_one_with_exponents(), divided_powers).unwrap();
}

#[test]
fn nilpotence_over_q_and_small_primes() {
    run(degree_one_with_exponents(), nilpotence).unwrap();
}

#[test]
fn flows_form_a_ring() {
    run(graph_flows(), flow_products).unwrap();
}

#[test]
fn zero_absorbs() {
    run(triples(), |(a, _, _)| {
        proptest::prop_assert!(zero_is_absorbing(&a));
        Ok(())
    })
    .unwrap();
}
