use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ring::Coefficient;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Most coefficients in this crate are integers, so the arithmetic takes a
/// shortcut whenever both operands have denominator one and skips the gcd.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn recip(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Natural logarithm of a positive value, valid far beyond the `f64`
    /// range of the value itself.
    pub fn ln(&self) -> f64 {
        assert!(self.0.is_positive(), "ln of non-positive rational");
        ln_bigint(self.numer()) - ln_bigint(self.denom())
    }

    /// Decimal expansion truncated toward zero after `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10), digits);
        let scaled = (self.numer() * &scale) / self.denom();
        let negative = scaled.is_negative() || (scaled.is_zero() && self.0.is_negative());
        let text = scaled.abs().to_string();
        let text = if text.len() <= digits {
            format!("{}{}", "0".repeat(digits + 1 - text.len()), text)
        } else {
            text
        };
        let (int_part, frac_part) = text.split_at(text.len() - digits);
        let sign = if negative { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }
}

fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().unwrap().abs().ln();
    }
    let shift = bits - 64;
    let top = (n.abs() >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, other: &Self) -> Self {
        if self.0.is_integer() && other.0.is_integer() {
            let n = self.0.numer() + other.0.numer();
            return Rational(BigRational::new_raw(n, BigInt::one()));
        }
        Rational(&self.0 + &other.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.0.is_integer() && other.0.is_integer() {
            let n = self.0.numer() * other.0.numer();
            return Rational(BigRational::new_raw(n, BigInt::one()));
        }
        Rational(&self.0 * &other.0)
    }

    fn inverse(&self) -> Option<Self> {
        self.recip()
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.0.is_zero() || b.0.is_zero() {
            return;
        }
        if self.0.is_integer() && a.0.is_integer() && b.0.is_integer() {
            let n = self.0.numer() + a.0.numer() * b.0.numer();
            self.0 = BigRational::new_raw(n, BigInt::one());
        } else {
            self.0 = &self.0 + &a.0 * &b.0;
        }
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n)
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

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $body(self, rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Rational, b: &Rational| Coefficient::add(a, b));
forward_binop!(Sub, sub, |a: &Rational, b: &Rational| Coefficient::sub(a, b));
forward_binop!(Mul, mul, |a: &Rational, b: &Rational| Coefficient::mul(a, b));
forward_binop!(Div, div, |a: &Rational, b: &Rational| Rational(&a.0 / &b.0));

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

/// Renders as `p` or `p/q`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
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

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| err())?;
                let q: BigInt = q.trim().parse().map_err(|_| err())?;
                if q.is_zero() {
                    return Err(err());
                }
                Ok(Rational::new(p, q))
            }
            None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| err()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rational::new(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn integer_fast_path_matches_general_path() {
        let a = Rational::from(7);
        let b = Rational::new(1, 3);
        let c = Rational::from(-2);
        assert_eq!(Coefficient::add(&a, &c), Rational::from(5));
        assert_eq!(Coefficient::mul(&a, &b), Rational::new(7, 3));
        let mut acc = Rational::from(1);
        acc.add_mul_assign(&a, &c);
        assert_eq!(acc, Rational::from(-13));
        acc.add_mul_assign(&b, &b);
        assert_eq!(acc, Rational::new(-116, 9));
    }

    #[test]
    fn parse_round_trip() {
        for text in ["0", "-5", "25/36", "-1/2"] {
            let r: Rational = text.parse().unwrap();
            assert_eq!(r.to_string(), text);
        }
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Rational::new(25, 36).to_decimal(4), "0.6944");
        assert_eq!(Rational::new(-1, 8).to_decimal(3), "-0.125");
        assert_eq!(Rational::from(3).to_decimal(2), "3.00");
        assert_eq!(Rational::new(-1, 100).to_decimal(1), "-0.0");
    }

    #[test]
    fn ln_of_huge_values() {
        let big = Rational::from_integer(num_traits::pow(BigInt::from(3), 700));
        let expected = 700.0 * 3f64.ln();
        assert!((big.ln() - expected).abs() < 1e-9 * expected);
        assert!((Rational::new(1, 2).ln() + std::f64::consts::LN_2).abs() < 1e-15);
    }
}
