//! Exact integer and rational arithmetic.
//!
//! Every quantity that feeds a verdict is kept in arbitrary precision, so
//! products such as `a1 * a2 * a3` or cross-multiplied ratios never wrap.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

/// Machine-word gcd for the bounded enumeration paths.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple of two positive integers.
pub fn lcm(a: &BigUint, b: &BigUint) -> Result<BigUint> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidArgument("lcm requires positive arguments".into()));
    }
    Ok(a.lcm(b))
}

/// Folds [`lcm`] over a non-empty list of positive integers.
pub fn lcm_all<'a, I>(values: I) -> Result<BigUint>
where
    I: IntoIterator<Item = &'a BigUint>,
{
    let mut iter = values.into_iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::InvalidArgument("lcm of an empty list".into()))?;
    let mut acc = lcm(first, &BigUint::one())?;
    for v in iter {
        acc = lcm(&acc, v)?;
    }
    Ok(acc)
}

/// An exact rational number kept in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: BigInt,
    den: BigInt,
}

impl Ratio {
    /// Builds `num / den` reduced to lowest terms. Fails on a zero denominator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Self {
            num: value.into(),
            den: BigInt::one(),
        }
    }

    /// Quotient of two unsigned integers; `den` must be nonzero.
    pub fn from_unsigned(num: &BigUint, den: &BigUint) -> Result<Self> {
        Self::new(
            BigInt::from_biguint(Sign::Plus, num.clone()),
            BigInt::from_biguint(Sign::Plus, den.clone()),
        )
    }

    fn reduce(num: BigInt, den: BigInt) -> Self {
        let (num, den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        if g.is_zero() || g.is_one() {
            return Self { num, den };
        }
        Self {
            num: num / &g,
            den: den / &g,
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// Re-reduces the stored value. Always equal to `self` for values built
    /// through the public constructors.
    pub fn normalized(&self) -> Self {
        Self::reduce(self.num.clone(), self.den.clone())
    }

    pub fn mul(&self, other: &Ratio) -> Ratio {
        Self::reduce(&self.num * &other.num, &self.den * &other.den)
    }

    /// Parses the `p/q` (or bare integer) textual form.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("malformed rational `{text}`"));
        match text.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.parse().map_err(|_| bad())?;
                let q: BigInt = q.parse().map_err(|_| bad())?;
                Ratio::new(p, q)
            }
            None => Ok(Ratio::from_integer(text.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

/// Orders two rationals by cross-multiplication. Both denominators are
/// positive, so the comparison of `a*d` against `c*b` preserves order.
pub fn cmp_ratio(x: &Ratio, y: &Ratio) -> Ordering {
    (&x.num * &y.den).cmp(&(&y.num * &x.den))
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_ratio(self, other)
    }
}

/// Always `p/q`, including integers (`2/1`).
impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn r(p: i64, q: i64) -> Ratio {
        Ratio::new(p, q).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&big(0), &big(7)), big(7));
        assert_eq!(gcd(&big(4), &big(8)), big(4));
        assert_eq!(gcd(&big(51), &big(102)), big(51));
        assert_eq!(gcd(&big(0), &big(0)), big(0));
        assert_eq!(gcd(&big(9), &big(0)), big(9));
        assert_eq!(gcd_u64(4, 8), 4);
        assert_eq!(gcd_u64(0, 0), 0);
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_all(&[big(2), big(51), big(102)]).unwrap(), big(102));
        assert_eq!(lcm_all(&[big(12), big(15), big(20)]).unwrap(), big(60));
        assert_eq!(lcm(&big(1), &big(37)).unwrap(), big(37));
        assert!(lcm(&big(0), &big(3)).is_err());
        assert!(lcm_all(&[]).is_err());
    }

    #[test]
    fn lcm_gcd_product() {
        for a in 1u64..=40 {
            for b in 1u64..=40 {
                let (a, b) = (big(a), big(b));
                assert_eq!(lcm(&a, &b).unwrap() * gcd(&a, &b), &a * &b);
            }
        }
    }

    #[test]
    fn cmp_examples() {
        assert_eq!(cmp_ratio(&r(2, 1), &r(5, 3)), Ordering::Greater);
        assert_eq!(cmp_ratio(&r(4, 3), &r(4, 3)), Ordering::Equal);
        assert_eq!(cmp_ratio(&r(5, 3), &r(2, 1)), Ordering::Less);
    }

    #[test]
    fn ratio_is_reduced_with_positive_denominator() {
        let x = r(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(r(0, -5).to_string(), "0/1");
        assert!(Ratio::new(1, 0).is_err());
    }

    #[test]
    fn cmp_is_total_order_on_small_values() {
        let mut values = Vec::new();
        for p in -20i64..=20 {
            for q in 1i64..=20 {
                values.push(r(p, q));
            }
        }
        values.sort();
        values.dedup();
        let sample: Vec<&Ratio> = values.iter().step_by(7).collect();
        for x in &sample {
            for y in &sample {
                assert_eq!(cmp_ratio(x, y), cmp_ratio(y, x).reverse());
                if cmp_ratio(x, y) == Ordering::Equal {
                    assert_eq!(x, y);
                }
                for z in &sample {
                    if cmp_ratio(x, y) != Ordering::Greater && cmp_ratio(y, z) != Ordering::Greater {
                        assert_ne!(cmp_ratio(x, z), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn normalization_is_idempotent() {
        for p in -20i64..=20 {
            for q in 1i64..=20 {
                let x = r(p, q);
                assert_eq!(x.normalized(), x);
                assert_eq!(x.normalized().normalized(), x.normalized());
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(Ratio::parse("-1/30").unwrap(), r(-1, 30));
        assert_eq!(Ratio::parse("4").unwrap(), r(4, 1));
        assert_eq!(Ratio::parse("2/4").unwrap().to_string(), "1/2");
        assert!(Ratio::parse("x/2").is_err());
        assert!(Ratio::parse("1/0").is_err());
    }
}
