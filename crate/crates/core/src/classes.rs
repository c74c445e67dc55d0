//! Membership predicates, plain counts, and signed counts for the partition
//! families the tool verifies.
//!
//! Every count is computed by filtering the exhaustive stream from
//! [`partitions_of`]; there are no closed-form shortcuts here. Predicates
//! never error: a partition outside a class's residue universe is simply not
//! a member.

use thiserror::Error;

use crate::partition::{assert_residue_params, decompose_by_residue, partitions_of, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("residue {r} is out of range for modulus {p} (need 1 <= r < p)")]
    InvalidResidue { p: u64, r: u64 },
    #[error("residue {0} must be 1 or 3")]
    InvalidOddResidue(u64),
}

/// A parameterized identifier for one of the partition classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassSpec {
    /// Parts ≡ 0 or r (mod p); the r-residue parts are pairwise distinct and
    /// every one of them exceeds every part divisible by p.
    D { p: u64, r: u64 },
    /// Parts ≡ 0 or r (mod p); the r-residue parts are exactly the staircase
    /// r, r+p, ..., r+(k-1)p for some k >= 0, each appearing once.
    O { p: u64, r: u64 },
    /// Every even integer up to the largest even part appears (repetitions
    /// allowed) and every odd part is at least r + the largest even part;
    /// r is 1 or 3.
    A { r: u64 },
    /// Either all parts are even and distinct, or 1 appears, the odd parts
    /// are exactly 1, 3, ..., 2k-1 each at least twice, and the even parts
    /// are distinct with each >= 3 + the largest odd part.
    B,
    /// The parts not divisible by p form an arithmetic progression with
    /// common difference p whose smallest element is less than p, each
    /// appearing once.
    Ap { p: u64 },
    /// The parts not divisible by p are distinct, share one residue mod p,
    /// and each exceeds every part divisible by p.
    DistinctResidue { p: u64 },
    /// Every part is ≡ r or 2 (mod 4); r is 1 or 3.
    Mod4 { r: u64 },
}

impl ClassSpec {
    pub fn validate(&self) -> Result<(), ClassError> {
        match *self {
            ClassSpec::D { p, r } | ClassSpec::O { p, r } => {
                if p < 2 {
                    Err(ClassError::InvalidModulus(p))
                } else if r == 0 || r >= p {
                    Err(ClassError::InvalidResidue { p, r })
                } else {
                    Ok(())
                }
            }
            ClassSpec::Ap { p } | ClassSpec::DistinctResidue { p } => {
                if p < 2 {
                    Err(ClassError::InvalidModulus(p))
                } else {
                    Ok(())
                }
            }
            ClassSpec::A { r } | ClassSpec::Mod4 { r } => {
                if r == 1 || r == 3 {
                    Ok(())
                } else {
                    Err(ClassError::InvalidOddResidue(r))
                }
            }
            ClassSpec::B => Ok(()),
        }
    }

    /// Membership test for this class.
    pub fn contains(&self, lam: &Partition) -> bool {
        match *self {
            ClassSpec::D { p, r } => is_in_d(lam, p, r),
            ClassSpec::O { p, r } => is_in_o(lam, p, r),
            ClassSpec::A { r } => is_in_a(lam, r),
            ClassSpec::B => classify_b(lam) != BMembership::NotMember,
            ClassSpec::Ap { p } => is_in_ap_class(lam, p),
            ClassSpec::DistinctResidue { p } => is_in_distinct_residue_class(lam, p),
            ClassSpec::Mod4 { r } => is_mod4_class(lam, r),
        }
    }
}

/// True iff every part of `lam` is ≡ 0 or ≡ r (mod p), the r-residue parts
/// are pairwise distinct, and (when both sides are nonempty) the smallest
/// r-residue part exceeds the largest multiple of p. The empty partition and
/// all-multiples-of-p partitions qualify vacuously.
pub fn is_in_d(lam: &Partition, p: u64, r: u64) -> bool {
    assert_residue_params(p, r);
    let Ok(split) = decompose_by_residue(lam, p, r) else {
        return false;
    };
    let rp = split.r_part.parts();
    if !rp.windows(2).all(|w| w[0] > w[1]) {
        return false;
    }
    match (rp.last(), split.zero_part.parts().first()) {
        (Some(&min_r), Some(&max_zero)) => min_r > max_zero,
        _ => true,
    }
}

/// True iff every part of `lam` is ≡ 0 or ≡ r (mod p) and the multiset of
/// r-residue parts is exactly the staircase {r, r+p, ..., r+(k-1)p}, each
/// value once, for some k >= 0.
pub fn is_in_o(lam: &Partition, p: u64, r: u64) -> bool {
    assert_residue_params(p, r);
    let Ok(split) = decompose_by_residue(lam, p, r) else {
        return false;
    };
    let rp = split.r_part.parts();
    match rp.last() {
        None => true,
        // Nonincreasing with consecutive gaps exactly p and bottom value r
        // pins the multiset to the staircase with multiplicity one.
        Some(&min_r) => min_r == r && rp.windows(2).all(|w| w[0] == w[1] + p),
    }
}

/// True iff, writing 2m for the largest even part (m = 0 if there is none),
/// every even value 2, 4, ..., 2m occurs at least once and every odd part is
/// at least 2m + r. Requires r in {1, 3}.
pub fn is_in_a(lam: &Partition, r: u64) -> bool {
    assert!(r == 1 || r == 3, "r must be 1 or 3, got {r}");
    let mut distinct_evens = 0u64;
    let mut max_even = 0u64;
    let mut min_odd: Option<u64> = None;
    let mut prev_even: Option<u64> = None;
    for &part in lam.parts() {
        if part % 2 == 0 {
            if prev_even != Some(part) {
                distinct_evens += 1;
                prev_even = Some(part);
            }
            max_even = max_even.max(part);
        } else {
            min_odd = Some(part);
        }
    }
    // All evens are <= 2m, so m distinct values means 2, 4, ..., 2m are all
    // present.
    if distinct_evens != max_even / 2 {
        return false;
    }
    min_odd.map_or(true, |odd| odd >= max_even + r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BBranch {
    /// All parts even and pairwise distinct.
    EvenDistinct,
    /// Odd parts are exactly 1, 3, ..., 2k-1 with multiplicity at least two
    /// each; even parts distinct, each at least 2k + 2.
    OddChain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BMembership {
    NotMember,
    Member { branch: BBranch, even_parts: u64 },
}

/// Classifies `lam` against the two disjoint branches of the signed family.
/// The branches cannot overlap: the odd-chain branch forces the part 1.
pub fn classify_b(lam: &Partition) -> BMembership {
    let evens: Vec<u64> = lam.parts().iter().copied().filter(|p| p % 2 == 0).collect();
    let odds: Vec<u64> = lam.parts().iter().copied().filter(|p| p % 2 == 1).collect();
    if !evens.windows(2).all(|w| w[0] > w[1]) {
        return BMembership::NotMember;
    }
    let even_parts = evens.len() as u64;
    if odds.is_empty() {
        return BMembership::Member {
            branch: BBranch::EvenDistinct,
            even_parts,
        };
    }
    // Odd values must be exactly 1, 3, ..., 2k-1 (descending: consecutive
    // distinct values differ by 2 and the smallest is 1), each appearing at
    // least twice.
    let mut distinct = odds.clone();
    distinct.dedup();
    if *distinct.last().unwrap() != 1 || !distinct.windows(2).all(|w| w[0] == w[1] + 2) {
        return BMembership::NotMember;
    }
    for value in &distinct {
        if odds.iter().filter(|&&o| o == *value).count() < 2 {
            return BMembership::NotMember;
        }
    }
    let largest_odd = distinct[0];
    if let Some(&min_even) = evens.last() {
        if min_even < largest_odd + 3 {
            return BMembership::NotMember;
        }
    }
    BMembership::Member {
        branch: BBranch::OddChain,
        even_parts,
    }
}

/// True iff the multiset of parts not divisible by p is, for some k >= 0,
/// exactly {s, s+p, ..., s+(k-1)p} with 1 <= s <= p-1, each value once.
pub fn is_in_ap_class(lam: &Partition, p: u64) -> bool {
    assert!(p >= 2, "modulus must be at least 2, got {p}");
    let non_mult: Vec<u64> = lam.parts().iter().copied().filter(|v| v % p != 0).collect();
    match non_mult.last() {
        None => true,
        Some(&smallest) => {
            smallest < p && non_mult.windows(2).all(|w| w[0] == w[1] + p)
        }
    }
}

/// True iff the parts not divisible by p are pairwise distinct, all share one
/// residue mod p, and each exceeds every part divisible by p.
pub fn is_in_distinct_residue_class(lam: &Partition, p: u64) -> bool {
    assert!(p >= 2, "modulus must be at least 2, got {p}");
    let non_mult: Vec<u64> = lam.parts().iter().copied().filter(|v| v % p != 0).collect();
    let Some(&smallest) = non_mult.last() else {
        return true;
    };
    let residue = smallest % p;
    if !non_mult.iter().all(|v| v % p == residue) {
        return false;
    }
    if !non_mult.windows(2).all(|w| w[0] > w[1]) {
        return false;
    }
    let max_mult = lam.parts().iter().copied().filter(|v| v % p == 0).max();
    max_mult.map_or(true, |m| smallest > m)
}

/// True iff every part is ≡ r or ≡ 2 (mod 4). Requires r in {1, 3}.
pub fn is_mod4_class(lam: &Partition, r: u64) -> bool {
    assert!(r == 1 || r == 3, "r must be 1 or 3, got {r}");
    lam.parts().iter().all(|&v| v % 4 == r || v % 4 == 2)
}

/// Number of partitions of `n` in the class, by exhaustive enumeration.
pub fn count_class(n: u64, spec: &ClassSpec) -> u64 {
    spec.validate().expect("class parameters must be valid");
    partitions_of(n).filter(|lam| spec.contains(lam)).count() as u64
}

/// The two halves of a signed count: members with an even number of even
/// parts and members with an odd number of even parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedCount {
    pub even_count: u64,
    pub odd_count: u64,
}

impl SignedCount {
    pub fn difference(&self) -> i64 {
        let e = i64::try_from(self.even_count).expect("count exceeds i64");
        let o = i64::try_from(self.odd_count).expect("count exceeds i64");
        e - o
    }
}

/// Counts the members of the signed family among partitions of `n`, split by
/// the parity of their number of even parts.
pub fn signed_count_b(n: u64) -> SignedCount {
    let mut even_count = 0u64;
    let mut odd_count = 0u64;
    for lam in partitions_of(n) {
        if let BMembership::Member { even_parts, .. } = classify_b(&lam) {
            if even_parts % 2 == 0 {
                even_count += 1;
            } else {
                odd_count += 1;
            }
        }
    }
    SignedCount {
        even_count,
        odd_count,
    }
}
