mod common;

use std::collections::BTreeSet;

use num_bigint::BigUint;

use hstar_core::enumerate::{count_dosps, count_r_hypersimplicial, enumerate_dosps};
use hstar_core::sieve::{check_prop3, DospFamily, GroundSubset};
use hstar_core::verify::{run_suite, Suite};
use hstar_core::Dosp;

#[test]
fn brute_force_generator_sizes() {
    assert_eq!(common::set_partitions(4).len(), 15);
    assert_eq!(common::compositions(5, 2).len(), 4);
    assert_eq!(common::compositions(0, 0), vec![Vec::<usize>::new()]);
    // dosps of type (k, n) biject with Z_k^n / cyclic shift of all positions
    for (k, n) in [(1, 3), (2, 3), (3, 3), (4, 2), (3, 4)] {
        assert_eq!(
            common::all_dosps(k, n).len(),
            k.pow(n as u32 - 1),
            "k={k} n={n}"
        );
    }
}

#[test]
fn stream_matches_brute_force_at_larger_type() {
    let (k, n) = (5, 5);
    for d in 0..n {
        let got: BTreeSet<Dosp> = enumerate_dosps(k, n, d).collect();
        assert_eq!(got, common::dosps_with_winding(k, n, d), "d={d}");
        assert_eq!(BigUint::from(got.len()), count_dosps(k, n, d));
    }
}

#[test]
fn hypersimplicial_counts_match_brute_force_filter() {
    for (k, n) in [(2, 4), (3, 5), (4, 4)] {
        for r in 1..=2 {
            for d in 0..n {
                let brute = common::dosps_with_winding(k, n, d)
                    .iter()
                    .filter(|p| {
                        p.blocks()
                            .iter()
                            .zip(p.gaps())
                            .all(|(b, &l)| l < r * b.len())
                    })
                    .count();
                assert_eq!(count_r_hypersimplicial(k, n, r, d), BigUint::from(brute));
            }
        }
    }
}

#[test]
fn sieve_total_counts_hypersimplicial_members() {
    for n in 2..=5 {
        for k in 1..=5 {
            for d in 0..n {
                for r in 1..=2 {
                    assert!(check_prop3(k, n, r, d), "k={k} n={n} r={r} d={d}");
                }
            }
        }
    }
}

#[test]
fn sieve_collapse_and_embedding() {
    for suite in [Suite::Prop4, Suite::Lemma3, Suite::Prop3] {
        let report = run_suite(suite, suite.default_bounds());
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn full_partitions_are_never_r_bad() {
    for n in 2..=5 {
        let full = GroundSubset::new((1..=n).collect(), n).unwrap();
        for k in 1..n {
            let family = DospFamily::new(k, n, 1);
            for s in hstar_core::sieve::unordered_partitions(&full) {
                assert!(family.k_r(1, &s).is_empty());
            }
        }
    }
}
