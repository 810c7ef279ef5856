use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("leading coefficient of the divisor is not invertible")]
    NonInvertibleLeadingCoefficient,
    #[error("square root needs constant term 1")]
    BadConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("coefficient of z^{0} is nonzero, cannot divide by z")]
    NotDivisibleByZ(usize),
}

/// Truncated formal power series in `z`.
///
/// Coefficients `0..=order` are exact; everything above is unknown. Binary
/// operations return the smaller of the two orders.
#[derive(Clone, PartialEq, Eq)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Coefficient> Series<R> {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients remain.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Series::new(vec![c], order)
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Series::monomial(R::one(), 1, order)
    }

    pub fn monomial(c: R, power: usize, order: usize) -> Self {
        let mut coeffs = vec![R::zero(); order + 1];
        if power <= order {
            coeffs[power] = c;
        }
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Series::new(coeffs.iter().map(|&c| R::from_i64(c)).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    /// Lowest power with a nonzero coefficient, `None` if all known coefficients vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order {} to {order}", self.order());
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|n| self.coeffs[n].add(&other.coeffs[n])).collect();
        Series { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|n| self.coeffs[n].sub(&other.coeffs[n])).collect();
        Series { coeffs }
    }

    pub fn neg(&self) -> Self {
        Series { coeffs: self.coeffs.iter().map(R::neg).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Series { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                coeffs[i + j].add_mul_assign(a, b);
            }
        }
        Series { coeffs }
    }

    /// Multiplication by `z^k`; the result is known to `order + k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Exact division by `z^k`; the result is known to `order - k`.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        assert!(k <= self.order(), "shift by {k} exceeds order {}", self.order());
        if let Some(n) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisibleByZ(n));
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn inverse(&self) -> Result<Self, SeriesError> {
        Series::one(self.order()).div(self)
    }

    /// Quotient `q` with `q·other = self` up to the common order.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        let lead_inv = other.coeffs[0]
            .inverse()
            .ok_or(SeriesError::NonInvertibleLeadingCoefficient)?;
        let order = self.order().min(other.order());
        let support: Vec<(usize, R)> = (1..=order)
            .filter(|&k| !other.coeffs[k].is_zero())
            .map(|k| (k, other.coeffs[k].neg()))
            .collect();
        let mut q: Vec<R> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for (k, c) in support.iter().take_while(|(k, _)| *k <= n) {
                acc.add_mul_assign(c, &q[n - k]);
            }
            q.push(if lead_inv.is_one() { acc } else { acc.mul(&lead_inv) });
        }
        Ok(Series { coeffs: q })
    }

    /// Square root with constant term one, from the coefficient recurrence of `s² = self`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm);
        }
        let half = R::from_i64(2).inverse().expect("2 must be invertible in the coefficient ring");
        let order = self.order();
        let mut s: Vec<R> = Vec::with_capacity(order + 1);
        s.push(R::one());
        for n in 1..=order {
            // s_n = a_n/2 - sum_{0<k<n-k} s_k s_{n-k} - [n even] s_{n/2}^2 / 2
            let mut cross = R::zero();
            let mut k = 1;
            while 2 * k < n {
                cross.add_mul_assign(&s[k], &s[n - k]);
                k += 1;
            }
            let mut term = self.coeffs[n].clone();
            if n % 2 == 0 {
                term = term.sub(&s[n / 2].mul(&s[n / 2]));
            }
            s.push(term.mul(&half).sub(&cross));
        }
        Ok(Series { coeffs: s })
    }

    /// `self(inner(z))`, Horner evaluation; `inner` must vanish at zero.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroInnerConstant);
        }
        let order = self.order().min(inner.order());
        Ok(Series::eval_polynomial(&self.coeffs[..=order], &inner.truncate(order)))
    }

    /// Polynomial `Σ pₖ xᵏ` evaluated at the series `x`; no constraint on `x(0)`.
    pub fn eval_polynomial(poly: &[R], x: &Self) -> Self {
        let order = x.order();
        let mut acc = Series::zero(order);
        for c in poly.iter().rev() {
            acc = acc.mul(x);
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        acc
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Series::one(self.order());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<R: Coefficient> Add for &Series<R> {
    type Output = Series<R>;
    fn add(self, rhs: &Series<R>) -> Series<R> {
        Series::add(self, rhs)
    }
}

impl<R: Coefficient> Sub for &Series<R> {
    type Output = Series<R>;
    fn sub(self, rhs: &Series<R>) -> Series<R> {
        Series::sub(self, rhs)
    }
}

impl<R: Coefficient> Mul for &Series<R> {
    type Output = Series<R>;
    fn mul(self, rhs: &Series<R>) -> Series<R> {
        Series::mul(self, rhs)
    }
}

impl<R: Coefficient> Neg for &Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        Series::neg(self)
    }
}

impl<R: Coefficient + fmt::Display> fmt::Display for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

impl<R: fmt::Debug> fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Series")
            .field("order", &(self.coeffs.len() - 1))
            .field("coeffs", &self.coeffs)
            .finish()
    }
}
