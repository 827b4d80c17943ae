//! Cross-module checks of the public API against independently known values.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use repgrowth::dominance::{dominates, orbit_length, saturated_dominant_set};
use repgrowth::interval::{Interval, Precision, Verdict};
use repgrowth::partitions::{
    hook_length_dim, mullineux_by_good_nodes, mullineux_by_symbol, p_regular_partitions,
    partition_bound_check, partition_count, Partition, Partitions,
};
use repgrowth::rootdata::{Characteristic, Family, RootDatum, Weight};
use repgrowth::witness::{good_postcondition, good_witness};

fn w(c: &[i64]) -> Weight {
    Weight::new(c.to_vec())
}

fn ch(p: u64) -> Characteristic {
    Characteristic::new(p).unwrap()
}

#[test]
fn weyl_orders_match_classical_values() {
    let cases: [(Family, usize, u64); 8] = [
        (Family::A, 3, 24),
        (Family::B, 3, 48),
        (Family::C, 4, 384),
        (Family::D, 4, 192),
        (Family::G, 2, 12),
        (Family::F, 4, 1152),
        (Family::E, 6, 51_840),
        (Family::E, 8, 696_729_600),
    ];
    for (f, r, order) in cases {
        let d = RootDatum::new(f, r).unwrap();
        assert_eq!(d.weyl_group_order(), BigUint::from(order), "{}", d.label());
    }
}

#[test]
fn regular_weight_has_full_orbit_and_zero_has_trivial_orbit() {
    for (f, r) in [(Family::A, 4), (Family::B, 3), (Family::G, 2), (Family::F, 4)] {
        let d = RootDatum::new(f, r).unwrap();
        let rho = Weight::new(vec![1; r]);
        assert_eq!(orbit_length(&d, &rho).unwrap(), d.weyl_group_order());
        assert_eq!(orbit_length(&d, &Weight::zero(r)).unwrap(), BigUint::from(1u32));
    }
}

#[test]
fn a2_saturated_sets() {
    let d = RootDatum::type_a(2).unwrap();
    let targets = |l: &[i64]| -> Vec<Vec<i64>> {
        let mut t: Vec<_> = saturated_dominant_set(&d, &w(l), 100)
            .unwrap()
            .into_iter()
            .map(|c| c.target.coeffs().to_vec())
            .collect();
        t.sort();
        t
    };
    assert_eq!(targets(&[2, 0]), vec![vec![0, 1], vec![2, 0]]);
    assert_eq!(targets(&[1, 1]), vec![vec![0, 0], vec![1, 1]]);
    assert_eq!(targets(&[3, 0]), vec![vec![0, 0], vec![1, 1], vec![3, 0]]);
    assert!(dominates(&d, &w(&[1, 1]), &w(&[0, 0]), true));
    assert!(!dominates(&d, &w(&[1, 0]), &w(&[0, 1]), false));
}

#[test]
fn good_witness_recheck_on_a4() {
    let d = RootDatum::type_a(4).unwrap();
    let l = w(&[9, 0, 0, 6]);
    let chain = good_witness(&d, &l).unwrap();
    assert!(chain.verify(&d));
    assert!(good_postcondition(&d, &l, &chain));
}

#[test]
fn zeta_two_brackets_pi_squared_over_six() {
    let z = repgrowth::bounds::zeta(&BigRational::from_integer(BigInt::from(2)), 256).unwrap();
    let target = Interval::pi(256).powi(2).div_i64(6);
    assert_eq!(z.le(&target.add(&Interval::from_frac(256, 1, 1 << 40))), Some(true));
    assert_eq!(target.le(&z.add(&Interval::from_frac(256, 1, 1 << 40))), Some(true));
}

#[test]
fn partition_counts_agree_with_enumeration() {
    for n in 0..=20u32 {
        let listed = Partitions::new(n).count();
        assert_eq!(partition_count(n as usize), BigUint::from(listed), "n = {n}");
    }
    assert_eq!(partition_count(100), "190569292".parse::<BigUint>().unwrap());
}

#[test]
fn hook_dimensions_square_sum_to_factorial() {
    for n in 1..=8u32 {
        let total: BigUint = Partitions::new(n).map(|l| hook_length_dim(&l).pow(2)).sum();
        let fact: BigUint = (1..=n).map(BigUint::from).product();
        assert_eq!(total, fact, "n = {n}");
    }
}

#[test]
fn mullineux_routes_agree() {
    for p in [3, 5] {
        for n in 0..=12 {
            for l in p_regular_partitions(n, ch(p)) {
                assert_eq!(
                    mullineux_by_symbol(&l, ch(p)).unwrap(),
                    mullineux_by_good_nodes(&l, ch(p)).unwrap(),
                    "p = {p}, {l}"
                );
            }
        }
    }
    let l: Partition = "3,2".parse().unwrap();
    assert_eq!(mullineux_by_symbol(&l, ch(3)).unwrap(), Partition::single_row(5));
}

#[test]
fn partition_bound_certified_for_small_n() {
    for n in 1..=50 {
        let c = partition_bound_check(n, Precision::default()).unwrap();
        assert_eq!(c.verdict, Verdict::True, "n = {n}");
    }
}
