//! The weight-preserving bijection between the staircase class O(n, p, r)
//! and the separated class D(n, p, r), plus whole-class certification.
//!
//! Forward direction: split a staircase-class partition into its r-residue
//! parts and its multiples of p, then add the two componentwise. Inverse:
//! split a separated-class partition, subtract the k-step staircase from its
//! r-residue parts, and take the union of the three pieces.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::classes::{is_in_d, is_in_o};
use crate::partition::{decompose_by_residue, staircase, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("partition \"{partition}\" is not in the {class} class for p={p}, r={r}")]
    NotInClass {
        partition: Partition,
        class: &'static str,
        p: u64,
        r: u64,
    },
}

/// Maps a staircase-class partition to its separated-class image.
pub fn forward(lam: &Partition, p: u64, r: u64) -> Result<Partition, BijectionError> {
    if !is_in_o(lam, p, r) {
        return Err(BijectionError::NotInClass {
            partition: lam.clone(),
            class: "staircase (O)",
            p,
            r,
        });
    }
    Ok(forward_unchecked(lam, p, r))
}

/// Forward map without the membership check, for sweeps whose enumerator
/// already guarantees membership.
pub fn forward_unchecked(lam: &Partition, p: u64, r: u64) -> Partition {
    let split = decompose_by_residue(lam, p, r).expect("staircase-class member splits by residue");
    split.r_part.componentwise_sum(&split.zero_part)
}

/// Maps a separated-class partition back to its staircase-class preimage.
pub fn inverse(mu: &Partition, p: u64, r: u64) -> Result<Partition, BijectionError> {
    if !is_in_d(mu, p, r) {
        return Err(BijectionError::NotInClass {
            partition: mu.clone(),
            class: "separated (D)",
            p,
            r,
        });
    }
    Ok(inverse_unchecked(mu, p, r))
}

/// Inverse map without the membership check.
///
/// Distinct r-residue parts force gaps of at least p, so the r-residue parts
/// dominate the staircase entrywise, the raw difference is nonincreasing,
/// and every difference entry is a multiple of p. These are asserted rather
/// than silently repaired: a violation means a class predicate is wrong.
pub fn inverse_unchecked(mu: &Partition, p: u64, r: u64) -> Partition {
    let split = decompose_by_residue(mu, p, r).expect("separated-class member splits by residue");
    let steps = split.r_part.len() as u64;
    let stair = staircase(steps, p, r);
    let leftover_raw = split
        .r_part
        .diff_entries(&stair)
        .expect("separated-class r-parts dominate the staircase entrywise");
    assert!(
        leftover_raw.windows(2).all(|w| w[0] >= w[1]),
        "staircase leftover must be nonincreasing before canonicalization"
    );
    assert!(
        leftover_raw.iter().all(|&v| v % p == 0),
        "staircase leftover entries must be multiples of p"
    );
    let leftover = Partition::from_parts(leftover_raw);
    split.zero_part.multiset_union(&stair).multiset_union(&leftover)
}

/// Result of certifying the bijection on the full classes of one (n, p, r).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: u64,
    pub p: u64,
    pub r: u64,
    /// Size of the staircase class of n (equals the separated class size when
    /// `image_equals_d_class` holds).
    pub class_size: u64,
    /// Inverse-after-forward is the identity on the staircase class and
    /// forward-after-inverse is the identity on the separated class.
    pub roundtrip_ok: bool,
    /// The forward image is exactly the separated class, as a set.
    pub image_equals_d_class: bool,
    /// Every mapped partition keeps its weight.
    pub weight_preserved: bool,
    /// First failing partition and the reason, if any check failed.
    pub first_failure: Option<(Partition, String)>,
}

impl BijectionReport {
    pub fn all_ok(&self) -> bool {
        self.roundtrip_ok && self.image_equals_d_class && self.weight_preserved
    }
}

/// Enumerates the full staircase and separated classes of `n` and checks the
/// roundtrips, weight preservation, and image-set equality. Failures are
/// report content, never errors.
pub fn verify_bijection(n: u64, p: u64, r: u64) -> BijectionReport {
    let mut o_members = Vec::new();
    let mut d_class = BTreeSet::new();
    for lam in crate::partition::partitions_of(n) {
        if is_in_o(&lam, p, r) {
            o_members.push(lam.clone());
        }
        if is_in_d(&lam, p, r) {
            d_class.insert(lam);
        }
    }

    let mut report = BijectionReport {
        n,
        p,
        r,
        class_size: o_members.len() as u64,
        roundtrip_ok: true,
        image_equals_d_class: true,
        weight_preserved: true,
        first_failure: None,
    };
    let fail = |flag: &mut bool, witness: &Partition, reason: String,
                first_failure: &mut Option<(Partition, String)>| {
        *flag = false;
        if first_failure.is_none() {
            *first_failure = Some((witness.clone(), reason));
        }
    };

    let mut image = BTreeSet::new();
    for lam in &o_members {
        let mu = forward_unchecked(lam, p, r);
        if mu.weight() != lam.weight() {
            fail(
                &mut report.weight_preserved,
                lam,
                format!("image weight {} differs from {}", mu.weight(), lam.weight()),
                &mut report.first_failure,
            );
        }
        if !is_in_d(&mu, p, r) {
            fail(
                &mut report.image_equals_d_class,
                lam,
                format!("image \"{mu}\" is not in the separated class"),
                &mut report.first_failure,
            );
        }
        let back = inverse_unchecked(&mu, p, r);
        if &back != lam {
            fail(
                &mut report.roundtrip_ok,
                lam,
                format!("inverse of forward gives \"{back}\""),
                &mut report.first_failure,
            );
        }
        image.insert(mu);
    }

    if image != d_class {
        let witness = image
            .symmetric_difference(&d_class)
            .next()
            .cloned()
            .unwrap_or_else(Partition::empty);
        fail(
            &mut report.image_equals_d_class,
            &witness,
            "forward image differs from the separated class".to_string(),
            &mut report.first_failure,
        );
    }

    for mu in &d_class {
        let lam = inverse_unchecked(mu, p, r);
        if !is_in_o(&lam, p, r) {
            fail(
                &mut report.image_equals_d_class,
                mu,
                format!("inverse \"{lam}\" is not in the staircase class"),
                &mut report.first_failure,
            );
        }
        if mu.weight() != lam.weight() {
            fail(
                &mut report.weight_preserved,
                mu,
                format!("inverse weight {} differs from {}", lam.weight(), mu.weight()),
                &mut report.first_failure,
            );
        }
        let round = forward_unchecked(&lam, p, r);
        if &round != mu {
            fail(
                &mut report.roundtrip_ok,
                mu,
                format!("forward of inverse gives \"{round}\""),
                &mut report.first_failure,
            );
        }
    }

    report
}
