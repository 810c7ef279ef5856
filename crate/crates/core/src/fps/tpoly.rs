use std::fmt;

use super::rational::Rational;
use super::ring::Coefficient;

/// Dense polynomial in the marker variable `t` with exact rational
/// coefficients, index = power of `t`. Trailing zeros are always trimmed,
/// so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: Vec<Rational>,
}

impl TPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = TPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        TPoly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        TPoly::new(vec![c])
    }

    /// The marker `t` itself.
    pub fn t() -> Self {
        TPoly::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| Coefficient::add(&Coefficient::mul(&acc, t), c))
    }

    pub fn derivative(&self) -> TPoly {
        TPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| Coefficient::mul(c, &Rational::from(k as i64)))
                .collect(),
        )
    }

    pub fn derivative_at(&self, t: &Rational) -> Rational {
        self.derivative().eval(t)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Coefficient::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Coefficient for TPoly {
    fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        TPoly { coeffs: vec![Rational::one()] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = Coefficient::add(c, s);
        }
        TPoly::new(coeffs)
    }

    fn neg(&self) -> Self {
        TPoly { coeffs: self.coeffs.iter().map(Coefficient::neg).collect() }
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j].add_mul_assign(a, b);
            }
        }
        TPoly::new(coeffs)
    }

    /// Only nonzero constants are invertible in `Q[t]`.
    fn inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.recip().map(TPoly::constant),
            _ => None,
        }
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, Rational::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                self.coeffs[i + j].add_mul_assign(x, y);
            }
        }
        self.trim();
    }

    fn from_i64(n: i64) -> Self {
        TPoly::constant(Rational::from(n))
    }
}

impl From<Rational> for TPoly {
    fn from(c: Rational) -> Self {
        TPoly::constant(c)
    }
}

/// Canonical ascending form, e.g. `17+13t+6t^2`, `t^2+2` is written `2+t^2`.
impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.numer() < &num_bigint::BigInt::from(0);
            let magnitude = if negative { -c } else { c.clone() };
            if negative {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let unit = magnitude.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (_, true) => {}
                (_, false) if magnitude.is_integer() => write!(f, "{magnitude}")?,
                (_, false) => write!(f, "({magnitude})")?,
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
