use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(value: i64) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Numerator and denominator when both fit in `i64`.
    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.numer().to_i64()?, self.denom().to_i64()?))
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

/// Exact sum in lowest terms.
///
/// Terms are bucketed by denominator first so that a long list of run
/// exponents (few distinct periods, many runs) costs one big-integer
/// addition per distinct denominator.
pub fn rational_sum<I>(terms: I) -> Rational
where
    I: IntoIterator<Item = Rational>,
{
    let mut buckets: BTreeMap<BigInt, BigInt> = BTreeMap::new();
    for term in terms {
        let (num, den) = (term.0.numer().clone(), term.0.denom().clone());
        *buckets.entry(den).or_insert_with(BigInt::zero) += num;
    }
    let mut total = BigRational::zero();
    for (den, num) in buckets {
        total += BigRational::new(num, den);
    }
    Rational(total)
}

/// Sum of `length / period` over `(length, period)` pairs, exact.
pub(crate) fn exponent_sum<I>(pairs: I) -> Rational
where
    I: IntoIterator<Item = (u64, u64)>,
{
    let mut buckets: BTreeMap<u64, u128> = BTreeMap::new();
    for (len, period) in pairs {
        *buckets.entry(period).or_insert(0) += u128::from(len);
    }
    let mut total = BigRational::zero();
    for (period, len) in buckets {
        total += BigRational::new(BigInt::from(len), BigInt::from(period));
    }
    Rational(total)
}

impl Default for Rational {
    fn default() -> Self {
        Rational(BigRational::zero())
    }
}

impl Rational {
    pub fn one() -> Self {
        Rational(BigRational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sum_is_zero() {
        let s = rational_sum(Vec::new());
        assert_eq!(s, Rational::new(0, 1));
        assert_eq!(s.to_i64_pair(), Some((0, 1)));
    }

    #[test]
    fn sums_in_lowest_terms() {
        let s = rational_sum([Rational::new(2, 1), Rational::new(5, 2)]);
        assert_eq!(s.to_i64_pair(), Some((9, 2)));
        assert_eq!(s.to_string(), "9/2");
        let s = rational_sum([
            Rational::new(1, 6),
            Rational::new(1, 3),
            Rational::new(1, 2),
        ]);
        assert_eq!(s.to_i64_pair(), Some((1, 1)));
    }

    #[test]
    fn exponent_sum_matches_generic_sum() {
        let pairs = [(4u64, 2u64), (5, 2), (7, 3), (2, 1), (10, 5)];
        let generic = rational_sum(
            pairs
                .iter()
                .map(|&(l, p)| Rational::new(l as i64, p as i64)),
        );
        assert_eq!(exponent_sum(pairs), generic);
    }

    #[test]
    fn huge_denominators_stay_exact() {
        // lcm(1..=60) overflows u64.
        let s = rational_sum((1..=60).map(|p| Rational::new(1, p)));
        assert!(s.to_i64_pair().is_none());
        assert!(s > Rational::new(4, 1) && s < Rational::new(5, 1));
    }
}
