use std::fmt::Debug;

/// Minimal commutative-ring interface for power series coefficients.
///
/// `inverse` only has to succeed on the elements a series may need to divide
/// by, i.e. constants of the ring. A `None` means "not invertible here".
pub trait Coefficient: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// `self += a * b`; hot loop of every convolution.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.add(&a.mul(b));
    }

    fn from_i64(n: i64) -> Self;
}
