//! Property tests for the partition algebra, enumeration, the bijection,
//! and the series ring laws.

use proptest::prelude::*;

use parsep_core::bijection::{forward_unchecked, inverse_unchecked};
use parsep_core::classes::{is_in_d, is_in_o};
use parsep_core::partition::{decompose_by_residue, partitions_of, staircase, Partition};
use parsep_core::qseries::{partition_series, QSeries};

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u64..=24, 0..=10).prop_map(Partition::from_parts)
}

fn arb_modulus_residue() -> impl Strategy<Value = (u64, u64)> {
    (2u64..=5).prop_flat_map(|p| (Just(p), 1..p))
}

/// Partition whose parts are all ≡ 0 or ≡ r (mod p).
fn arb_universe_partition() -> impl Strategy<Value = (u64, u64, Partition)> {
    arb_modulus_residue().prop_flat_map(|(p, r)| {
        prop::collection::vec((1u64..=6, prop::bool::ANY), 0..=8).prop_map(move |items| {
            let parts = items
                .into_iter()
                .map(|(k, zero_class)| if zero_class { p * k } else { p * (k - 1) + r });
            (p, r, Partition::from_parts(parts))
        })
    })
}

/// Member of the staircase class: a k-step staircase plus multiples of p.
fn arb_staircase_member() -> impl Strategy<Value = (u64, u64, Partition)> {
    arb_modulus_residue().prop_flat_map(|(p, r)| {
        (0u64..=4, prop::collection::vec(1u64..=5, 0..=6)).prop_map(move |(k, mult)| {
            let zeros = Partition::from_parts(mult.into_iter().map(|m| m * p));
            (p, r, staircase(k, p, r).multiset_union(&zeros))
        })
    })
}

fn arb_series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec(-6i64..=6, 1..=20).prop_map(QSeries::from_coeffs)
}

fn arb_unit_series() -> impl Strategy<Value = QSeries> {
    (prop::bool::ANY, prop::collection::vec(-6i64..=6, 0..=19)).prop_map(|(neg, tail)| {
        let mut coeffs = vec![if neg { -1 } else { 1 }];
        coeffs.extend(tail);
        QSeries::from_coeffs(coeffs)
    })
}

proptest! {
    #[test]
    fn sum_is_nonincreasing_and_weight_additive((a, b) in (arb_partition(), arb_partition())) {
        let s = a.componentwise_sum(&b);
        prop_assert!(s.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(s.weight(), a.weight() + b.weight());
        prop_assert_eq!(s.len(), a.len().max(b.len()));
    }

    #[test]
    fn union_adds_multiplicities((a, b) in (arb_partition(), arb_partition())) {
        let u = a.multiset_union(&b);
        prop_assert_eq!(u.weight(), a.weight() + b.weight());
        for &v in u.parts() {
            let mult = |p: &Partition| p.parts().iter().filter(|&&x| x == v).count();
            prop_assert_eq!(mult(&u), mult(&a) + mult(&b));
        }
    }

    #[test]
    fn diff_undoes_sum((b, c) in (arb_partition(), arb_partition())) {
        let a = b.componentwise_sum(&c);
        let d = a.componentwise_diff(&b).unwrap();
        prop_assert_eq!(&d, &c);
        prop_assert_eq!(d.weight() + b.weight(), a.weight());
    }

    #[test]
    fn decompose_then_union_is_identity((p, r, lam) in arb_universe_partition()) {
        let split = decompose_by_residue(&lam, p, r).unwrap();
        prop_assert!(split.r_part.parts().iter().all(|v| v % p == r));
        prop_assert!(split.zero_part.parts().iter().all(|v| v % p == 0));
        prop_assert_eq!(split.r_part.multiset_union(&split.zero_part), lam);
    }

    #[test]
    fn staircase_structure((p, r) in arb_modulus_residue(), k in 0u64..=8) {
        let s = staircase(k, p, r);
        prop_assert_eq!(s.len() as u64, k);
        prop_assert!(s.parts().windows(2).all(|w| w[0] == w[1] + p));
        prop_assert!(s.parts().iter().all(|v| v % p == r));
        prop_assert_eq!(s.weight(), p * k * (k.saturating_sub(1)) / 2 + r * k);
        // Every staircase value occurs exactly once.
        for i in 0..k {
            let v = p * i + r;
            prop_assert_eq!(s.parts().iter().filter(|&&x| x == v).count(), 1);
        }
    }

    #[test]
    fn bijection_roundtrip_on_staircase_members((p, r, lam) in arb_staircase_member()) {
        prop_assert!(is_in_o(&lam, p, r));
        let mu = forward_unchecked(&lam, p, r);
        prop_assert!(is_in_d(&mu, p, r));
        prop_assert_eq!(mu.weight(), lam.weight());
        prop_assert_eq!(inverse_unchecked(&mu, p, r), lam);
    }

    #[test]
    fn series_ring_laws((a, b, c) in (arb_series(), arb_series(), arb_series())) {
        let left = a.add(&b).unwrap().add(&c).unwrap();
        let right = a.add(&b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);

        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);

        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);

        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn series_inverse_is_two_sided(a in arb_unit_series()) {
        let inv = a.inv().unwrap();
        let one = QSeries::one(a.order());
        prop_assert_eq!(a.mul(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.mul(&a).unwrap(), one);
    }
}

#[test]
fn enumeration_is_strictly_descending_lexicographic() {
    for n in 0..=14u64 {
        let all: Vec<Partition> = partitions_of(n).collect();
        assert!(all.windows(2).all(|w| w[0] > w[1]), "n={n}");
    }
}

#[test]
fn enumeration_count_matches_series_engine() {
    let series = partition_series(28).unwrap();
    for n in 0..=28u64 {
        assert_eq!(
            partitions_of(n).count() as i64,
            series.coeff(n as usize),
            "n={n}"
        );
    }
}
