//! Truncated formal power series in q with exact integer coefficients.
//!
//! A series of order T stores the coefficients of q^0 .. q^T. Binary
//! operations on mismatched orders truncate to the smaller one. All
//! coefficient arithmetic is checked: overflow is an error, never a
//! wraparound.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("integer overflow in series arithmetic")]
    IntegerOverflow,
    #[error("cannot invert a series with constant term {0}; it must be 1 or -1")]
    NonUnitConstantTerm(i64),
    #[error("infinite product with a nonzero constant factor does not converge")]
    DivergentProduct,
    #[error("cannot parse {0:?} as a monomial (expected forms like 0, 1, -1, q, -q, q^2, 3q^4)")]
    InvalidMonomial(String),
}

pub type SeriesResult<T> = Result<T, SeriesError>;

/// A signed power of q: `coeff * q^exp`. A zero coefficient represents the
/// zero monomial regardless of its exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: i64,
    pub exp: usize,
}

impl Monomial {
    pub const fn new(coeff: i64, exp: usize) -> Self {
        Monomial { coeff, exp }
    }

    pub const fn zero() -> Self {
        Monomial { coeff: 0, exp: 0 }
    }

    /// `q^exp` with coefficient 1.
    pub const fn q(exp: usize) -> Self {
        Monomial { coeff: 1, exp }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff == 0
    }

    pub fn negated(self) -> Self {
        Monomial {
            coeff: -self.coeff,
            exp: self.exp,
        }
    }

    /// Multiplies by q^k (shifts the exponent up).
    pub fn times_q(self, k: usize) -> Self {
        Monomial {
            coeff: self.coeff,
            exp: self.exp + k,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coeff, self.exp) {
            (0, _) => write!(f, "0"),
            (c, 0) => write!(f, "{c}"),
            (1, 1) => write!(f, "q"),
            (-1, 1) => write!(f, "-q"),
            (1, e) => write!(f, "q^{e}"),
            (-1, e) => write!(f, "-q^{e}"),
            (c, 1) => write!(f, "{c}q"),
            (c, e) => write!(f, "{c}q^{e}"),
        }
    }
}

/// Accepts an optional sign, an optional integer coefficient, and an
/// optional `q` or `q^E` factor: `0`, `1`, `-1`, `q`, `-q`, `q^5`, `3q^2`.
impl FromStr for Monomial {
    type Err = SeriesError;

    fn from_str(s: &str) -> SeriesResult<Self> {
        let input = s.trim();
        let err = || SeriesError::InvalidMonomial(s.to_string());
        let (sign, rest) = match input.strip_prefix('-') {
            Some(rest) => (-1i64, rest),
            None => (1i64, input.strip_prefix('+').unwrap_or(input)),
        };
        let (num, rest) = {
            let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
            let tail = &rest[digits.len()..];
            if digits.is_empty() {
                (None, tail)
            } else {
                (Some(digits.parse::<i64>().map_err(|_| err())?), tail)
            }
        };
        let exp = match rest {
            "" => {
                if num.is_none() {
                    return Err(err());
                }
                0
            }
            "q" => 1,
            _ => match rest.strip_prefix("q^") {
                Some(e) if !e.is_empty() && e.chars().all(|c| c.is_ascii_digit()) => {
                    e.parse().map_err(|_| err())?
                }
                _ => return Err(err()),
            },
        };
        let coeff = sign * num.unwrap_or(1);
        Ok(if coeff == 0 {
            Monomial::zero()
        } else {
            Monomial { coeff, exp }
        })
    }
}

/// Exact-integer formal power series truncated at order T (inclusive).
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<i64>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![0; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = 1;
        s
    }

    /// The series with a single term `m.coeff * q^{m.exp}` (zero if the
    /// exponent lies beyond the order).
    pub fn monomial(m: Monomial, order: usize) -> Self {
        let mut s = Self::zero(order);
        if !m.is_zero() && m.exp <= order {
            s.coeffs[m.exp] = m.coeff;
        }
        s
    }

    /// Wraps raw coefficients c_0 .. c_T. The vector must be nonempty.
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least c_0");
        QSeries { coeffs }
    }

    /// Truncation order T.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of q^e; panics beyond the truncation order, where the
    /// value is unknown rather than zero.
    pub fn coeff(&self, e: usize) -> i64 {
        assert!(
            e <= self.order(),
            "coefficient {e} beyond truncation order {}",
            self.order()
        );
        self.coeffs[e]
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// A copy truncated to a smaller order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order());
        QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> SeriesResult<Self> {
        self.zip_with(other, |a, b| a.checked_add(b))
    }

    pub fn sub(&self, other: &Self) -> SeriesResult<Self> {
        self.zip_with(other, |a, b| a.checked_sub(b))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(i64, i64) -> Option<i64>) -> SeriesResult<Self> {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| op(self.coeffs[i], other.coeffs[i]).ok_or(SeriesError::IntegerOverflow))
            .collect::<SeriesResult<Vec<i64>>>()?;
        Ok(QSeries { coeffs })
    }

    pub fn mul(&self, other: &Self) -> SeriesResult<Self> {
        let order = self.order().min(other.order());
        let mut coeffs = vec![0i64; order + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b == 0 {
                    continue;
                }
                let prod = a.checked_mul(b).ok_or(SeriesError::IntegerOverflow)?;
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(prod)
                    .ok_or(SeriesError::IntegerOverflow)?;
            }
        }
        Ok(QSeries { coeffs })
    }

    /// Multiplicative inverse up to the truncation order. The constant term
    /// must be 1 or -1 for the inverse to have integer coefficients.
    pub fn inv(&self) -> SeriesResult<Self> {
        let c0 = self.coeffs[0];
        if c0 != 1 && c0 != -1 {
            return Err(SeriesError::NonUnitConstantTerm(c0));
        }
        let order = self.order();
        let mut inv = vec![0i64; order + 1];
        inv[0] = c0; // 1/c0 = c0 for units of Z
        for n in 1..=order {
            // c0 * inv[n] + sum_{k=1}^{n} a_k * inv[n-k] = 0
            let mut acc = 0i64;
            for k in 1..=n {
                let a = self.coeffs[k];
                if a == 0 {
                    continue;
                }
                let term = a
                    .checked_mul(inv[n - k])
                    .ok_or(SeriesError::IntegerOverflow)?;
                acc = acc.checked_add(term).ok_or(SeriesError::IntegerOverflow)?;
            }
            // Dividing by -c0 is multiplying by -c0.
            inv[n] = acc.checked_mul(-c0).ok_or(SeriesError::IntegerOverflow)?;
        }
        Ok(QSeries { coeffs: inv })
    }

    /// Multiplies by q^e, keeping the truncation order.
    pub fn shifted(&self, e: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![0i64; order + 1];
        for i in 0..=order {
            if i + e > order {
                break;
            }
            coeffs[i + e] = self.coeffs[i];
        }
        QSeries { coeffs }
    }

    /// First exponent (up to the smaller order) where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    /// Equality of all coefficients up to the smaller order.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

// Compact debug form: nonzero terms only, `0` for the zero series.
impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}", Monomial::new(c, e))?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.coeffs.len())
    }
}
