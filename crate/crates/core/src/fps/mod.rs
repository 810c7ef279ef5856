//! Exact truncated power series over a pluggable coefficient ring.

mod dual;
mod rational;
mod ring;
mod series;
mod tpoly;

pub use dual::Dual;
pub use rational::{ParseRationalError, Rational};
pub use ring::Coefficient;
pub use series::{Series, SeriesError};
pub use tpoly::TPoly;

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn small_series(order: usize, unit_constant: bool) -> impl Strategy<Value = Series<Rational>> {
        prop::collection::vec(-9i64..=9, order + 1).prop_map(move |mut c| {
            if unit_constant {
                c[0] = 1;
            }
            Series::from_ints(&c, order)
        })
    }

    proptest! {
        #[test]
        fn div_then_mul_round_trips(a in small_series(12, false), b in small_series(12, true)) {
            let q = a.div(&b).unwrap();
            prop_assert_eq!(&q * &b, a);
        }

        #[test]
        fn sqrt_squares_back(a in small_series(12, true)) {
            let s = a.sqrt().unwrap();
            prop_assert!(s.coeff(0).is_one());
            prop_assert_eq!(&s * &s, a);
        }

        #[test]
        fn ring_laws(a in small_series(8, false), b in small_series(8, false), c in small_series(8, false)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn compose_is_a_ring_map(f in small_series(7, false), g in small_series(7, false), h in small_series(7, false)) {
            let mut h = h.into_coeffs();
            h[0] = Rational::zero();
            let h = Series::new(h, 7);
            let fg = (&f * &g).compose(&h).unwrap();
            prop_assert_eq!(fg, &f.compose(&h).unwrap() * &g.compose(&h).unwrap());
        }
    }
}
