//! Independent re-encodings of the mod-2 class definitions, checked against
//! the general predicates specialized to p = 2, r = 1, plus a recurrence
//! oracle for the unrestricted partition counts.

use parsep_core::classes::{is_in_d, is_in_o};
use parsep_core::partition::{partitions_of, Partition};
use parsep_core::qseries::partition_series;

/// Odd parts are pairwise distinct and every odd part exceeds every even part.
fn odd_distinct_above_even(lam: &Partition) -> bool {
    let odds: Vec<u64> = lam.parts().iter().copied().filter(|v| v % 2 == 1).collect();
    let max_even = lam.parts().iter().copied().filter(|v| v % 2 == 0).max();
    odds.windows(2).all(|w| w[0] > w[1])
        && match (odds.last(), max_even) {
            (Some(&min_odd), Some(max_even)) => min_odd > max_even,
            _ => true,
        }
}

/// Odd parts are pairwise distinct and every odd integer smaller than the
/// largest odd part appears as a part.
fn odd_distinct_no_gaps(lam: &Partition) -> bool {
    let odds: Vec<u64> = lam.parts().iter().copied().filter(|v| v % 2 == 1).collect();
    if !odds.windows(2).all(|w| w[0] > w[1]) {
        return false;
    }
    match odds.first() {
        None => true,
        Some(&largest) => (1..largest)
            .step_by(2)
            .all(|o| lam.parts().contains(&o)),
    }
}

#[test]
fn mod2_specialization_matches_direct_encodings() {
    for n in 0..=25u64 {
        for lam in partitions_of(n) {
            assert_eq!(
                is_in_d(&lam, 2, 1),
                odd_distinct_above_even(&lam),
                "separated predicate disagrees on {lam:?}"
            );
            assert_eq!(
                is_in_o(&lam, 2, 1),
                odd_distinct_no_gaps(&lam),
                "staircase predicate disagrees on {lam:?}"
            );
        }
    }
}

/// Partition counts by the classical pentagonal-number recurrence, an
/// implementation-independent oracle.
fn partition_counts_by_recurrence(limit: u64) -> Vec<i64> {
    let mut p = vec![0i64; (limit + 1) as usize];
    p[0] = 1;
    for n in 1..=limit as i64 {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[(n - g1) as usize];
            if g2 <= n {
                total += sign * p[(n - g2) as usize];
            }
            k += 1;
        }
        p[n as usize] = total;
    }
    p
}

#[test]
fn three_routes_to_partition_counts_agree() {
    let limit = 40u64;
    let recurrence = partition_counts_by_recurrence(limit);
    let series = partition_series(limit as usize).unwrap();
    assert_eq!(
        &recurrence[..11],
        &[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42],
        "recurrence anchor values"
    );
    for n in 0..=limit {
        let enumerated = partitions_of(n).count() as i64;
        assert_eq!(enumerated, recurrence[n as usize], "n={n}");
        assert_eq!(series.coeff(n as usize), recurrence[n as usize], "n={n}");
    }
}
