use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom`, reducing to lowest terms.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// Nearest double. Display only; never feed this back into a decision.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p` or `p/q`; the sign may only appear on the numerator.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        let parse_int = |t: &str, signed: bool| -> Result<BigInt> {
            let digits = if signed {
                t.strip_prefix(['-', '+']).unwrap_or(t)
            } else {
                t
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s, true)?)),
            Some((p, q)) => {
                let p = parse_int(p, true)?;
                let q = parse_int(q, false)?;
                Rational::new(p, q).map_err(|_| Error::Parse(format!("zero denominator in `{s}`")))
            }
        }
    }
}

// Operator matrices are mostly 0 and ±1; skipping the gcd work for those
// dominates the cost of composing them.
fn add_ref(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() {
        b.clone()
    } else if b.is_zero() {
        a.clone()
    } else {
        Rational(&a.0 + &b.0)
    }
}

fn sub_ref(a: &Rational, b: &Rational) -> Rational {
    if b.is_zero() {
        a.clone()
    } else if a.is_zero() {
        -b
    } else {
        Rational(&a.0 - &b.0)
    }
}

fn mul_ref(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() || b.is_zero() {
        Rational::zero()
    } else if a.is_one() {
        b.clone()
    } else if b.is_one() {
        a.clone()
    } else {
        Rational(&a.0 * &b.0)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $imp(self, rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $imp(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $imp(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(r("1/2") + r("1/3"), r("5/6"));
        assert_eq!(r("1/2") + r("-1/2"), Rational::zero());
        assert_eq!((r("1/2") + r("-1/2")).to_string(), "0");
        assert_eq!(r("1/2") + r("1/2"), Rational::one());
    }

    #[test]
    fn construction_normalizes() {
        let x = Rational::new(2, 4).unwrap();
        assert_eq!(x, r("1/2"));
        assert_eq!(x.to_string(), "1/2");
        let y = Rational::new(3, -6).unwrap();
        assert_eq!(y.to_string(), "-1/2");
        assert_eq!(y.denom(), &BigInt::from(2));
        assert_eq!(Rational::new(0, 7).unwrap().denom(), &BigInt::from(1));
        assert_eq!(r("6/4").to_string(), "3/2");
    }

    #[test]
    fn multiplication() {
        assert_eq!(r("2/3") * r("3/4"), r("1/2"));
        let x = r("-7/11");
        assert_eq!(&x * &Rational::one(), x);
        assert_eq!(&x * &Rational::zero(), Rational::zero());
    }

    #[test]
    fn division() {
        assert_eq!(r("1/2").checked_div(&r("1/4")).unwrap(), r("2"));
        let x = r("-13/5");
        assert_eq!(x.checked_div(&x).unwrap(), Rational::one());
        assert!(matches!(r("1/2").checked_div(&Rational::zero()), Err(Error::DivisionByZero)));
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(r("-3"), Rational::from(-3));
        assert_eq!(r(" 10/4 "), Rational::new(5, 2).unwrap());
        for bad in ["", "1/", "/2", "1/-2", "a", "1.5", "1/0", "--1", "1/2/3"] {
            assert!(bad.parse::<Rational>().is_err(), "accepted `{bad}`");
        }
    }

    #[test]
    fn big_values_do_not_overflow() {
        let big = r("123456789012345678901234567890/7");
        let sq = &big * &big;
        assert_eq!(sq.checked_div(&big).unwrap(), big);
    }
}
