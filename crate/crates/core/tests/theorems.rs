//! Moderate-range sweeps of the counting identities. The full-scale sweeps
//! live in the CLI crate's acceptance suite; these keep the library
//! self-checking at a few seconds of runtime.

use parsep_core::bijection::verify_bijection;
use parsep_core::classes::{count_class, signed_count_b, ClassSpec};
use parsep_core::qseries::is_pentagonal4;

#[test]
fn separated_and_staircase_counts_agree() {
    for p in 2..=5u64 {
        for r in 1..p {
            for n in 0..=28u64 {
                assert_eq!(
                    count_class(n, &ClassSpec::D { p, r }),
                    count_class(n, &ClassSpec::O { p, r }),
                    "n={n}, p={p}, r={r}"
                );
            }
        }
    }
}

#[test]
fn bijection_certifies_on_moderate_range() {
    for p in 2..=5u64 {
        for r in 1..p {
            for n in 0..=20u64 {
                let report = verify_bijection(n, p, r);
                assert!(
                    report.all_ok(),
                    "n={n}, p={p}, r={r}: {:?}",
                    report.first_failure
                );
            }
        }
    }
}

#[test]
fn even_chain_counts_match_mod4_counts() {
    for r in [1u64, 3] {
        for n in 0..=35u64 {
            assert_eq!(
                count_class(n, &ClassSpec::A { r }),
                count_class(n, &ClassSpec::Mod4 { r }),
                "n={n}, r={r}"
            );
        }
    }
}

#[test]
fn signed_counts_match_pentagonal_pattern() {
    for n in 0..=40u64 {
        let expected = i64::from(is_pentagonal4(n));
        assert_eq!(signed_count_b(n).difference(), expected, "n={n}");
    }
}

#[test]
fn progression_and_distinct_residue_counts_agree() {
    for p in 2..=5u64 {
        for n in 0..=22u64 {
            assert_eq!(
                count_class(n, &ClassSpec::Ap { p }),
                count_class(n, &ClassSpec::DistinctResidue { p }),
                "n={n}, p={p}"
            );
        }
    }
}
