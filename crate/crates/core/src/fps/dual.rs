use super::rational::Rational;
use super::ring::Coefficient;

/// First-order jet `value + slope·ε` with `ε² = 0`.
///
/// Running a `t`-marked computation over `Dual` with `t = 1 + ε` yields the
/// value at `t = 1` together with the `t`-derivative at `t = 1`, without
/// carrying whole polynomials in `t`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Dual {
    pub value: Rational,
    pub slope: Rational,
}

impl Dual {
    pub fn new(value: Rational, slope: Rational) -> Self {
        Dual { value, slope }
    }

    /// The marker at `t = 1`: value one, unit slope.
    pub fn marker_at_one() -> Self {
        Dual::new(Rational::one(), Rational::one())
    }
}

impl Coefficient for Dual {
    fn zero() -> Self {
        Dual::new(Rational::zero(), Rational::zero())
    }

    fn one() -> Self {
        Dual::new(Rational::one(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.slope.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        Dual::new(self.value.add(&other.value), self.slope.add(&other.slope))
    }

    fn neg(&self) -> Self {
        Dual::new(Coefficient::neg(&self.value), Coefficient::neg(&self.slope))
    }

    fn mul(&self, other: &Self) -> Self {
        let mut slope = self.value.mul(&other.slope);
        slope.add_mul_assign(&self.slope, &other.value);
        Dual::new(self.value.mul(&other.value), slope)
    }

    fn inverse(&self) -> Option<Self> {
        let inv = self.value.recip()?;
        let slope = Coefficient::neg(&self.slope.mul(&inv).mul(&inv));
        Some(Dual::new(inv, slope))
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        self.value.add_mul_assign(&a.value, &b.value);
        self.slope.add_mul_assign(&a.value, &b.slope);
        self.slope.add_mul_assign(&a.slope, &b.value);
    }

    fn from_i64(n: i64) -> Self {
        Dual::new(Rational::from(n), Rational::zero())
    }
}
