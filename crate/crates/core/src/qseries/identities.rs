//! The q-series identities behind the counting theorems, each computable
//! from both sides, plus coefficient series obtained by raw enumeration so
//! the series engine and the combinatorial counts can cross-check each
//! other.
//!
//! Summation cutoffs: a sum term is included exactly when its minimal
//! q-order (n(n+1)/2, n(n+1), n², or 2n²) is at most the truncation order;
//! every omitted term vanishes to that order.

use crate::classes::{count_class, signed_count_b, ClassSpec};

use super::pochhammer::{poch, poch_inf};
use super::series::{Monomial, QSeries, SeriesError, SeriesResult};

/// `1/(q;q)_inf`: the generating series of unrestricted partition counts.
pub fn partition_series(order: usize) -> SeriesResult<QSeries> {
    poch_inf(Monomial::q(1), 1, order)?.inv()
}

/// Sum side of the Lebesgue-type identity with parameter `a`:
/// the sum over n >= 0 of `(a;q)_n / (q;q)_n * q^{n(n+1)/2}`.
pub fn lebesgue_lhs(a: Monomial, order: usize) -> SeriesResult<QSeries> {
    let mut acc = QSeries::zero(order);
    for n in 0u64.. {
        let triangular = (n * (n + 1) / 2) as usize;
        if triangular > order {
            break;
        }
        let term = poch(a, 1, n, order)?
            .mul(&poch(Monomial::q(1), 1, n, order)?.inv()?)?
            .shifted(triangular);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Product side of the Lebesgue-type identity: the product over n >= 1 of
/// `(1 - a*q^{2n-1})(1 + q^n)`.
pub fn lebesgue_rhs(a: Monomial, order: usize) -> SeriesResult<QSeries> {
    let odd_factors = poch_inf(a.times_q(1), 2, order)?;
    let distinct_parts = poch_inf(Monomial::new(-1, 1), 1, order)?;
    odd_factors.mul(&distinct_parts)
}

/// Outcome of checking the Slater-type identity in both its printed and its
/// corrected normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlaterReport {
    /// First exponent where the printed sum `sum q^{n^2}/(q;q)_{2n}` differs
    /// from the product side, with the two coefficients there.
    pub printed_first_mismatch: Option<(usize, i64, i64)>,
    /// Whether `(q^2;q^2)_inf * sum q^{2n^2}/(q;q)_{2n}` equals the product
    /// side to the truncation order.
    pub corrected_ok: bool,
}

/// Product side shared by both Slater forms: the product over n >= 1 of
/// `(1 + q^{8n-3})(1 + q^{8n-5})(1 - q^{8n})`.
pub fn slater_rhs(order: usize) -> SeriesResult<QSeries> {
    poch_inf(Monomial::new(-1, 5), 8, order)?
        .mul(&poch_inf(Monomial::new(-1, 3), 8, order)?)?
        .mul(&poch_inf(Monomial::q(8), 8, order)?)
}

/// Checks the printed Slater-type sum against the product and the corrected
/// sum (with its `(q^2;q^2)_inf` prefactor) against the same product.
pub fn slater_check(order: usize) -> SeriesResult<SlaterReport> {
    let rhs = slater_rhs(order)?;

    let mut printed = QSeries::zero(order);
    for n in 0u64.. {
        let square = (n * n) as usize;
        if square > order {
            break;
        }
        let term = poch(Monomial::q(1), 1, 2 * n, order)?.inv()?.shifted(square);
        printed = printed.add(&term)?;
    }
    let printed_first_mismatch = printed
        .first_difference(&rhs)
        .map(|e| (e, printed.coeff(e), rhs.coeff(e)));

    let mut corrected = QSeries::zero(order);
    for n in 0u64.. {
        let doubled_square = (2 * n * n) as usize;
        if doubled_square > order {
            break;
        }
        let term = poch(Monomial::q(1), 1, 2 * n, order)?
            .inv()?
            .shifted(doubled_square);
        corrected = corrected.add(&term)?;
    }
    let corrected_lhs = poch_inf(Monomial::q(2), 2, order)?.mul(&corrected)?;

    Ok(SlaterReport {
        printed_first_mismatch,
        corrected_ok: corrected_lhs.agrees_with(&rhs),
    })
}

/// Sum form of the even-chain generating series: the sum over n >= 0 of
/// `q^{n(n+1)} / (q^2;q^2)_n / (q^{2n+r};q^2)_inf`. Requires r in {1, 3}.
pub fn gen_a(r: u64, order: usize) -> SeriesResult<QSeries> {
    assert!(r == 1 || r == 3, "r must be 1 or 3, got {r}");
    let mut acc = QSeries::zero(order);
    for n in 0u64.. {
        let oblong = (n * (n + 1)) as usize;
        if oblong > order {
            break;
        }
        let evens = poch(Monomial::q(2), 2, n, order)?.inv()?;
        let odds = poch_inf(Monomial::q((2 * n + r) as usize), 2, order)?.inv()?;
        acc = acc.add(&evens.mul(&odds)?.shifted(oblong))?;
    }
    Ok(acc)
}

/// Product form of the same series: `1 / prod_{j>=0} (1-q^{4j+r})(1-q^{4j+2})`,
/// the generating series for partitions into parts ≡ r or 2 (mod 4).
pub fn gen_a_product(r: u64, order: usize) -> SeriesResult<QSeries> {
    assert!(r == 1 || r == 3, "r must be 1 or 3, got {r}");
    poch_inf(Monomial::q(r as usize), 4, order)?
        .mul(&poch_inf(Monomial::q(2), 4, order)?)?
        .inv()
}

/// Signed generating series of the B family: the sum over n >= 0 of
/// `q^{2n^2} / (q;q^2)_n * (q^{2n+2};q^2)_inf`, where the final product
/// weights each even part by -1.
pub fn gen_b_signed(order: usize) -> SeriesResult<QSeries> {
    let mut acc = QSeries::zero(order);
    for n in 0u64.. {
        let doubled_square = (2 * n * n) as usize;
        if doubled_square > order {
            break;
        }
        let odds = poch(Monomial::q(1), 2, n, order)?.inv()?;
        let signed_evens = poch_inf(Monomial::q((2 * n + 2) as usize), 2, order)?;
        acc = acc.add(&odds.mul(&signed_evens)?.shifted(doubled_square))?;
    }
    Ok(acc)
}

/// The theta-style series `sum over all integers m of q^{4m^2 + m}`:
/// coefficient 1 exactly at the exponents m(4m±1).
pub fn theta_4nn(order: usize) -> QSeries {
    let mut coeffs = vec![0i64; order + 1];
    for m in 0u64.. {
        let base = 4 * m * m;
        let minus = (base - m) as usize; // m(4m-1); zero when m = 0
        let plus = (base + m) as usize; // m(4m+1)
        if minus > order {
            break;
        }
        coeffs[minus] = 1;
        if plus <= order {
            coeffs[plus] = 1;
        }
    }
    QSeries::from_coeffs(coeffs)
}

/// True iff `n = m(4m+1)` or `n = m(4m-1)` for some m >= 0.
pub fn is_pentagonal4(n: u64) -> bool {
    for m in 0u64.. {
        let base = match (4u64).checked_mul(m).and_then(|v| v.checked_mul(m)) {
            Some(b) => b,
            None => return false,
        };
        if base - m > n {
            return false;
        }
        if n == base - m || n == base + m {
            return true;
        }
    }
    unreachable!()
}

/// The class's counting series obtained purely by enumeration: coefficient
/// of q^n is `count_class(n, spec)`, except for the signed B family, whose
/// coefficient is the signed difference.
pub fn class_gf_from_enumeration(spec: &ClassSpec, order: usize) -> SeriesResult<QSeries> {
    let coeffs = (0..=order as u64)
        .map(|n| match spec {
            ClassSpec::B => Ok(signed_count_b(n).difference()),
            _ => i64::try_from(count_class(n, spec)).map_err(|_| SeriesError::IntegerOverflow),
        })
        .collect::<SeriesResult<Vec<i64>>>()?;
    Ok(QSeries::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    #[test]
    fn partition_series_prefix() {
        let s = partition_series(10).unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn lebesgue_zero_parameter_counts_distinct_partitions() {
        let order = 24;
        let lhs = lebesgue_lhs(Monomial::zero(), order).unwrap();
        let rhs = lebesgue_rhs(Monomial::zero(), order).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(&lhs.coeffs()[..6], &[1, 1, 1, 2, 2, 3]);
        // Independent oracle: count partitions with pairwise distinct parts.
        for n in 0..=order as u64 {
            let distinct = partitions_of(n)
                .filter(|lam| lam.parts().windows(2).all(|w| w[0] > w[1]))
                .count() as i64;
            assert_eq!(lhs.coeff(n as usize), distinct, "n={n}");
        }
    }

    #[test]
    fn lebesgue_holds_for_monomial_instances() {
        for text in ["1", "-1", "q", "-q", "q^2", "-q^3", "q^5"] {
            let a: Monomial = text.parse().unwrap();
            let lhs = lebesgue_lhs(a, 30).unwrap();
            let rhs = lebesgue_rhs(a, 30).unwrap();
            assert_eq!(lhs, rhs, "a = {text}");
        }
    }

    #[test]
    fn slater_printed_fails_and_corrected_holds() {
        let report = slater_check(40).unwrap();
        assert_eq!(report.printed_first_mismatch, Some((1, 1, 0)));
        assert!(report.corrected_ok);
    }

    #[test]
    fn slater_rhs_low_coefficients() {
        let rhs = slater_rhs(10).unwrap();
        assert_eq!(rhs.coeff(3), 1);
        assert_eq!(rhs.coeff(8), 0);
    }

    #[test]
    fn gen_a_matches_enumeration_and_product() {
        let order = 30;
        for r in [1u64, 3] {
            let sum = gen_a(r, order).unwrap();
            let product = gen_a_product(r, order).unwrap();
            let enumerated =
                class_gf_from_enumeration(&ClassSpec::A { r }, order).unwrap();
            assert_eq!(sum, product, "r = {r}");
            assert_eq!(sum, enumerated, "r = {r}");
        }
        let sum = gen_a(1, 5).unwrap();
        assert_eq!(sum.coeffs(), &[1, 1, 2, 2, 3, 4]);
        let sum = gen_a(3, 7).unwrap();
        assert_eq!(sum.coeff(1), 0);
        assert_eq!(sum.coeff(7), 2);
    }

    #[test]
    fn gen_b_matches_theta_and_enumeration() {
        let order = 30;
        let signed = gen_b_signed(order).unwrap();
        assert_eq!(signed, theta_4nn(order));
        assert_eq!(
            signed,
            class_gf_from_enumeration(&ClassSpec::B, order).unwrap()
        );
        assert_eq!(signed.coeff(6), 0);
        assert_eq!(signed.coeff(5), 1);
    }

    #[test]
    fn theta_exponent_set() {
        let theta = theta_4nn(60);
        let ones: Vec<usize> = (0..=60).filter(|&e| theta.coeff(e) == 1).collect();
        assert_eq!(ones, vec![0, 3, 5, 14, 18, 33, 39, 60]);
        assert!(theta.coeffs().iter().all(|&c| c == 0 || c == 1));
    }

    #[test]
    fn pentagonal4_matches_direct_scan() {
        assert!(is_pentagonal4(0));
        assert!(is_pentagonal4(3));
        assert!(is_pentagonal4(5));
        for n in [1, 2, 4, 6] {
            assert!(!is_pentagonal4(n), "n={n}");
        }
        for n in [14, 18, 33, 39, 60, 68] {
            assert!(is_pentagonal4(n), "n={n}");
        }
        for n in 61..68 {
            assert!(!is_pentagonal4(n), "n={n}");
        }
        // Agreement with the theta series coefficients.
        let theta = theta_4nn(60);
        for n in 0..=60u64 {
            assert_eq!(theta.coeff(n as usize) == 1, is_pentagonal4(n));
        }
    }

    #[test]
    fn enumerated_series_examples() {
        let s = class_gf_from_enumeration(&ClassSpec::O { p: 2, r: 1 }, 5).unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 1, 1, 3, 2]);
        let s = class_gf_from_enumeration(&ClassSpec::Mod4 { r: 1 }, 3).unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 2, 2]);
        let s = class_gf_from_enumeration(&ClassSpec::Ap { p: 5 }, 0).unwrap();
        assert_eq!(s.coeff(0), 1);
    }
}
