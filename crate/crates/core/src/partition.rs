//! Partition data model, multiset algebra, and exhaustive enumeration.
//!
//! A [`Partition`] is a finite nonincreasing sequence of positive integers.
//! Inputs may contain zeros (they arise naturally from padding and from
//! componentwise differences); the canonical form never stores them.
//! All weight arithmetic is checked and fails loudly on overflow.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A single part of a partition. Canonical parts are always `>= 1`.
pub type Part = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("negative part {0} is not allowed")]
    NegativePart(i64),
    #[error("componentwise difference underflows at position {index}: {minuend} < {subtrahend}")]
    NegativeEntry {
        index: usize,
        minuend: Part,
        subtrahend: Part,
    },
    #[error("part {part} is neither 0 nor {residue} modulo {modulus}")]
    ForeignResidue {
        part: Part,
        modulus: u64,
        residue: u64,
    },
    #[error("cannot parse {token:?} as a partition part")]
    InvalidLiteral { token: String },
}

/// A partition: nonincreasing positive parts with a cached weight.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<Part>,
    weight: u64,
}

impl Partition {
    /// The empty partition, the unique partition of 0.
    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            weight: 0,
        }
    }

    /// Builds a partition from arbitrary signed values. Zeros are dropped,
    /// the rest is sorted into canonical nonincreasing order; any negative
    /// value is rejected.
    pub fn new<I: IntoIterator<Item = i64>>(values: I) -> Result<Self, PartitionError> {
        let mut parts = Vec::new();
        for v in values {
            if v < 0 {
                return Err(PartitionError::NegativePart(v));
            }
            if v > 0 {
                parts.push(v as Part);
            }
        }
        Ok(Self::from_parts(parts))
    }

    /// Builds a partition from unsigned values, dropping zeros and sorting.
    pub fn from_parts<I: IntoIterator<Item = Part>>(values: I) -> Self {
        let mut parts: Vec<Part> = values.into_iter().filter(|&v| v > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted_parts(parts)
    }

    /// Wraps parts that are already canonical (nonincreasing, no zeros).
    pub(crate) fn from_sorted_parts(parts: Vec<Part>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().map_or(true, |&p| p >= 1));
        let weight = checked_weight(&parts);
        Partition { parts, weight }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    /// Sum of all parts.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    fn part_padded(&self, i: usize) -> Part {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Componentwise sum: align largest-to-largest, pad the shorter side with
    /// zeros, add positionwise. The result of adding two nonincreasing
    /// sequences positionwise is again nonincreasing.
    pub fn componentwise_sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let parts: Vec<Part> = (0..n)
            .map(|i| {
                self.part_padded(i)
                    .checked_add(other.part_padded(i))
                    .expect("part sum overflows u64")
            })
            .collect();
        Partition::from_sorted_parts(parts)
    }

    /// Componentwise difference with the same padding rule. Zero entries are
    /// dropped and the result is canonicalized; it is not guaranteed that the
    /// raw entrywise sequence was nonincreasing. Callers that need the raw
    /// sequence use [`Partition::diff_entries`].
    pub fn componentwise_diff(&self, other: &Partition) -> Result<Partition, PartitionError> {
        Ok(Partition::from_parts(self.diff_entries(other)?))
    }

    /// Raw aligned entries of `self - other`, zeros included, in position
    /// order. Errors if any entry would be negative (this also covers `other`
    /// being longer than `self`).
    pub(crate) fn diff_entries(&self, other: &Partition) -> Result<Vec<Part>, PartitionError> {
        let n = self.len().max(other.len());
        (0..n)
            .map(|i| {
                let (a, b) = (self.part_padded(i), other.part_padded(i));
                a.checked_sub(b).ok_or(PartitionError::NegativeEntry {
                    index: i,
                    minuend: a,
                    subtrahend: b,
                })
            })
            .collect()
    }

    /// Multiset union: multiplicities add.
    pub fn multiset_union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted_parts(parts)
    }

    /// Canonical literal form: comma-separated parts, largest first. The
    /// empty partition renders as the empty string.
    pub fn literal(&self) -> String {
        self.to_string()
    }
}

fn checked_weight(parts: &[Part]) -> u64 {
    parts
        .iter()
        .try_fold(0u64, |acc, &p| acc.checked_add(p))
        .expect("partition weight overflows u64")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({:?})", self.parts)
    }
}

/// Parses the comma-separated literal form. Whitespace around entries is
/// ignored; zeros are dropped; an empty (or all-whitespace) string is the
/// empty partition.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut values = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let v: i64 = token
                .parse()
                .map_err(|_| PartitionError::InvalidLiteral {
                    token: token.to_string(),
                })?;
            values.push(v);
        }
        Partition::new(values)
    }
}

/// A partition cut into its two residue classes modulo `modulus`: the parts
/// congruent to `residue` and the parts divisible by `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSplit {
    pub modulus: u64,
    pub residue: u64,
    /// Parts congruent to `residue` (mod `modulus`).
    pub r_part: Partition,
    /// Parts congruent to 0 (mod `modulus`).
    pub zero_part: Partition,
}

/// Splits `lam` into its `residue`-class parts and its multiples of
/// `modulus`. Any part in neither class is a [`PartitionError::ForeignResidue`].
///
/// Requires `modulus >= 2` and `1 <= residue < modulus`.
pub fn decompose_by_residue(
    lam: &Partition,
    modulus: u64,
    residue: u64,
) -> Result<ResidueSplit, PartitionError> {
    assert_residue_params(modulus, residue);
    let mut r_parts = Vec::new();
    let mut zero_parts = Vec::new();
    for &part in lam.parts() {
        match part % modulus {
            0 => zero_parts.push(part),
            m if m == residue => r_parts.push(part),
            _ => {
                return Err(PartitionError::ForeignResidue {
                    part,
                    modulus,
                    residue,
                })
            }
        }
    }
    // Subsequences of a nonincreasing sequence stay nonincreasing.
    Ok(ResidueSplit {
        modulus,
        residue,
        r_part: Partition::from_sorted_parts(r_parts),
        zero_part: Partition::from_sorted_parts(zero_parts),
    })
}

/// The staircase with `k` steps of height `modulus` ending at `residue`:
/// `(modulus*(k-1) + residue, ..., modulus + residue, residue)`.
///
/// Its weight is `modulus*k*(k-1)/2 + residue*k`.
pub fn staircase(k: u64, modulus: u64, residue: u64) -> Partition {
    assert_residue_params(modulus, residue);
    let parts: Vec<Part> = (0..k)
        .map(|i| {
            modulus
                .checked_mul(k - 1 - i)
                .and_then(|v| v.checked_add(residue))
                .expect("staircase part overflows u64")
        })
        .collect();
    Partition::from_sorted_parts(parts)
}

pub(crate) fn assert_residue_params(modulus: u64, residue: u64) {
    assert!(modulus >= 2, "modulus must be at least 2, got {modulus}");
    assert!(
        (1..modulus).contains(&residue),
        "residue must satisfy 1 <= r < p, got r={residue}, p={modulus}"
    );
}

/// Iterator over all partitions of `n` in descending-lexicographic order:
/// `(n)` first, `(1, 1, ..., 1)` last. Yields exactly `p(n)` items; `n = 0`
/// yields the empty partition once.
pub fn partitions_of(n: u64) -> Partitions {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Partitions { next: Some(first) }
}

pub struct Partitions {
    next: Option<Vec<Part>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = next_partition(&current);
        Some(Partition::from_sorted_parts(current))
    }
}

/// Descending-lexicographic successor: decrement the rightmost part greater
/// than 1, then refill the freed amount greedily with copies of the new value.
fn next_partition(current: &[Part]) -> Option<Vec<Part>> {
    let i = current.iter().rposition(|&x| x > 1)?;
    // Everything to the right of position i is a 1.
    let mut rem = current[i] + (current.len() - 1 - i) as u64;
    let v = current[i] - 1;
    let mut next = current[..i].to_vec();
    while rem >= v {
        next.push(v);
        rem -= v;
    }
    if rem > 0 {
        next.push(rem);
    }
    Some(next)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(values: &[u64]) -> Partition {
        Partition::from_parts(values.iter().copied())
    }

    #[test]
    fn new_sorts_and_computes_weight() {
        let p = Partition::new([1, 3, 2]).unwrap();
        assert_eq!(p.parts(), &[3, 2, 1]);
        assert_eq!(p.weight(), 6);
    }

    #[test]
    fn new_empty() {
        let p = Partition::new([]).unwrap();
        assert!(p.is_empty());
        assert_eq!(p.weight(), 0);
    }

    #[test]
    fn new_drops_zeros() {
        let p = Partition::new([5, 0, 5]).unwrap();
        assert_eq!(p.parts(), &[5, 5]);
        assert_eq!(p.weight(), 10);
    }

    #[test]
    fn new_rejects_negatives() {
        assert_eq!(
            Partition::new([3, -1]),
            Err(PartitionError::NegativePart(-1))
        );
    }

    #[test]
    fn componentwise_sum_with_padding() {
        let a = part(&[21, 17, 13, 9, 5, 1]);
        let b = part(&[32, 32, 16, 8, 8, 8, 8, 4, 4, 4]);
        let sum = a.componentwise_sum(&b);
        assert_eq!(sum.parts(), &[53, 49, 29, 17, 13, 9, 8, 4, 4, 4]);
        assert_eq!(sum.weight(), a.weight() + b.weight());
    }

    #[test]
    fn componentwise_sum_identity() {
        let a = part(&[7, 7, 2]);
        assert_eq!(a.componentwise_sum(&Partition::empty()), a);
        assert_eq!(Partition::empty().componentwise_sum(&a), a);
    }

    #[test]
    fn componentwise_sum_small() {
        let s = part(&[3, 1]).componentwise_sum(&part(&[4, 2]));
        assert_eq!(s.parts(), &[7, 3]);
        assert_eq!(s.weight(), 10);
    }

    #[test]
    fn componentwise_diff_examples() {
        let a = part(&[53, 49, 29, 17, 13, 9]);
        let b = part(&[21, 17, 13, 9, 5, 1]);
        let d = a.componentwise_diff(&b).unwrap();
        assert_eq!(d.parts(), &[32, 32, 16, 8, 8, 8]);
        assert_eq!(d.weight(), a.weight() - b.weight());

        assert_eq!(a.componentwise_diff(&a).unwrap(), Partition::empty());

        let d = part(&[5, 1]).componentwise_diff(&part(&[1, 1])).unwrap();
        assert_eq!(d.parts(), &[4]);
    }

    #[test]
    fn componentwise_diff_underflow() {
        let err = part(&[4, 1]).componentwise_diff(&part(&[4, 2])).unwrap_err();
        assert_eq!(
            err,
            PartitionError::NegativeEntry {
                index: 1,
                minuend: 1,
                subtrahend: 2
            }
        );
        // A longer subtrahend underflows against the zero padding.
        assert!(part(&[3]).componentwise_diff(&part(&[3, 1])).is_err());
    }

    #[test]
    fn multiset_union_examples() {
        let u = part(&[8, 4, 4, 4])
            .multiset_union(&part(&[21, 17, 13, 9, 5, 1]))
            .multiset_union(&part(&[32, 32, 16, 8, 8, 8]));
        assert_eq!(
            u.parts(),
            &[32, 32, 21, 17, 16, 13, 9, 8, 8, 8, 8, 5, 4, 4, 4, 1]
        );

        let a = part(&[6, 2]);
        assert_eq!(a.multiset_union(&Partition::empty()), a);
        assert_eq!(part(&[3, 1]).multiset_union(&part(&[3])).parts(), &[3, 3, 1]);
    }

    #[test]
    fn decompose_by_residue_example() {
        let lam = part(&[32, 32, 21, 17, 16, 13, 9, 8, 8, 8, 8, 5, 4, 4, 4, 1]);
        let split = decompose_by_residue(&lam, 4, 1).unwrap();
        assert_eq!(split.r_part.parts(), &[21, 17, 13, 9, 5, 1]);
        assert_eq!(split.zero_part.parts(), &[32, 32, 16, 8, 8, 8, 8, 4, 4, 4]);
    }

    #[test]
    fn decompose_empty() {
        let split = decompose_by_residue(&Partition::empty(), 3, 2).unwrap();
        assert!(split.r_part.is_empty());
        assert!(split.zero_part.is_empty());
    }

    #[test]
    fn decompose_foreign_residue() {
        let err = decompose_by_residue(&part(&[6]), 4, 1).unwrap_err();
        assert_eq!(
            err,
            PartitionError::ForeignResidue {
                part: 6,
                modulus: 4,
                residue: 1
            }
        );
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(6, 4, 1).parts(), &[21, 17, 13, 9, 5, 1]);
        assert_eq!(staircase(0, 4, 1), Partition::empty());
        let s = staircase(3, 2, 1);
        assert_eq!(s.parts(), &[5, 3, 1]);
        assert_eq!(s.weight(), 9);
    }

    #[test]
    fn partitions_of_zero_and_small() {
        let all: Vec<_> = partitions_of(0).collect();
        assert_eq!(all, vec![Partition::empty()]);

        let all: Vec<Vec<Part>> = partitions_of(4).map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1],
            ]
        );

        assert_eq!(partitions_of(5).count(), 7);
    }

    #[test]
    fn partitions_all_canonical_and_distinct() {
        for n in 0..=12 {
            let all: Vec<_> = partitions_of(n).collect();
            for p in &all {
                assert_eq!(p.weight(), n);
                assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            }
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
    }

    #[test]
    fn literal_roundtrip() {
        let lam: Partition = "53,49,29, 17,13 ,9,8,4,4,4".parse().unwrap();
        assert_eq!(lam.literal(), "53,49,29,17,13,9,8,4,4,4");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("  ".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("1,3,2".parse::<Partition>().unwrap().parts(), &[3, 2, 1]);
        assert!(matches!(
            "1,x".parse::<Partition>(),
            Err(PartitionError::InvalidLiteral { .. })
        ));
        assert_eq!(
            "-3".parse::<Partition>(),
            Err(PartitionError::NegativePart(-3))
        );
    }
}
