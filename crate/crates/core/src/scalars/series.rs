use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Power series `c_0 + c_1 z + … + c_D z^D + O(z^{D+1})` with rational
/// coefficients. The coefficient list always has length `D + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Series from an explicit prefix, padded or cut to length `degree + 1`.
    pub fn new(mut coeffs: Vec<BigRational>, degree: usize) -> Self {
        coeffs.resize(degree + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], degree: usize) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
            degree,
        )
    }

    pub fn one(degree: usize) -> Self {
        Self::from_i64(&[1], degree)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    /// Coefficients as integers, when they all are.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn truncate(&self, degree: usize) -> Self {
        Self::new(self.coeffs.clone(), degree)
    }

    /// Convolution truncated at the smaller of the two degrees.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let d = self.degree().min(other.degree());
        let mut out = vec![BigRational::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(d + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(d + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplicative inverse by the convolution recurrence.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::SeriesNotInvertible);
        }
        let inv0 = c0.recip();
        let d = self.degree();
        let mut out: Vec<BigRational> = Vec::with_capacity(d + 1);
        out.push(inv0.clone());
        for k in 1..=d {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &out[k - i];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// The substitution `z ↦ -z`.
    pub fn negate_variable(&self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{} + O(z^{})", parts.join(","), self.coeffs.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect()
    }

    #[test]
    fn geometric_series() {
        let s = TruncatedSeries::from_i64(&[1, -1], 4);
        assert_eq!(ints(&s.inverse().unwrap()), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn product() {
        let a = TruncatedSeries::from_i64(&[1, 1], 4);
        let b = TruncatedSeries::from_i64(&[1, -1], 4);
        assert_eq!(ints(&a.mul(&b)), vec![1, 0, -1, 0, 0]);
    }

    #[test]
    fn inverse_by_recurrence() {
        // c_k = c_{k-1} - c_{k-2}, c_0 = 1, c_1 = 1
        let s = TruncatedSeries::from_i64(&[1, -1, 1], 4);
        assert_eq!(ints(&s.inverse().unwrap()), vec![1, 1, 0, -1, -1]);
    }

    #[test]
    fn zero_constant_term_rejected() {
        let s = TruncatedSeries::from_i64(&[0, 1], 3);
        assert_eq!(s.inverse(), Err(Error::SeriesNotInvertible));
    }

    proptest! {
        #[test]
        fn inverse_is_unit(c0 in prop_oneof![-5i64..=-1, 1i64..=5], rest in proptest::collection::vec(-6i64..=6, 0..8), d in 0usize..10) {
            let mut coeffs = vec![c0];
            coeffs.extend(rest);
            let s = TruncatedSeries::from_i64(&coeffs, d);
            let inv = s.inverse().unwrap();
            prop_assert!(s.mul(&inv).is_one());
            prop_assert!(inv.mul(&s).is_one());
        }
    }
}
