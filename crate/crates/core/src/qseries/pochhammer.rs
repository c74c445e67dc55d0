//! Finite and infinite q-Pochhammer products with a general monomial base.
//!
//! `poch(a, step, n, T)` is the finite product over j = 0 .. n-1 of
//! `(1 - a*q^{step*j})`, and `poch_inf` is the same product over all j >= 0.
//! In the infinite case each successive factor must contribute at strictly
//! larger q-order, which holds exactly when the monomial `a` has a positive
//! exponent (or is zero).

use super::series::{Monomial, QSeries, SeriesError, SeriesResult};

/// One factor `1 - a*q^{step*j}` as a series of the given order.
fn factor(a: Monomial, step: u64, j: u64, order: usize) -> Option<QSeries> {
    let exp = a.exp.checked_add(usize::try_from(step.checked_mul(j)?).ok()?)?;
    if exp > order {
        // Beyond the truncation order the factor is 1.
        return None;
    }
    let mut f = QSeries::one(order);
    if !a.is_zero() {
        f = QSeries::monomial(Monomial::new(-a.coeff, exp), order)
            .add(&f)
            .expect("single-term addition cannot overflow");
    }
    Some(f)
}

/// Finite q-Pochhammer product: the product over j = 0 .. n-1 of
/// `(1 - a*q^{step*j})`, truncated at `order`. `n = 0` gives 1.
pub fn poch(a: Monomial, step: u64, n: u64, order: usize) -> SeriesResult<QSeries> {
    assert!(step >= 1, "step must be at least 1");
    let mut acc = QSeries::one(order);
    for j in 0..n {
        // Factor exponents grow with j; once past the order all later
        // factors are 1.
        let Some(f) = factor(a, step, j, order) else {
            break;
        };
        acc = acc.mul(&f)?;
    }
    Ok(acc)
}

/// Infinite q-Pochhammer product truncated at `order`. A nonzero monomial of
/// exponent 0 repeats a constant factor forever and has no formal limit.
pub fn poch_inf(a: Monomial, step: u64, order: usize) -> SeriesResult<QSeries> {
    assert!(step >= 1, "step must be at least 1");
    if a.exp == 0 && !a.is_zero() {
        return Err(SeriesError::DivergentProduct);
    }
    let mut acc = QSeries::one(order);
    let mut j = 0u64;
    while let Some(f) = factor(a, step, j, order) {
        acc = acc.mul(&f)?;
        j += 1;
    }
    Ok(acc)
}
