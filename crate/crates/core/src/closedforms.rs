//! Closed-form generating functions from the kernel method.
//!
//! The kernel roots `u₁, u₂` have a pole at `z = 0`, so everything here is
//! written in terms of `w = z·u`, which are ordinary power series:
//!
//! * unmarked: `w² − (1+z)w + z(1+z) = 0`, roots `((1+z) ± √(1−2z−3z²))/2`;
//! * marked:   `D·w² − E·w + z(1+z) = 0` with `D = 1+z²−tz²`,
//!   `E = 1+z+z²−tz²`, roots `(E ± √(E² − 4Dz(1+z)))/(2D)`.
//!
//! `w1` is the root with constant term one; `1/w1` is the closed-path series.
//! Every quantity that has several independent formulas is computed by all
//! of them and rejected with [`ClosedFormError::RouteMismatch`] if they
//! disagree.

use crate::fps::{Coefficient, Dual, Rational, Series, SeriesError, TPoly};
use crate::slices::LevelSeries;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClosedFormError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("{quantity}: routes disagree at z^{coefficient}")]
    RouteMismatch { quantity: &'static str, coefficient: usize },
}

/// `w_i = z·u_i` for the two kernel roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelRoots<R> {
    pub w1: Series<R>,
    pub w2: Series<R>,
}

fn first_difference<R: Coefficient>(a: &Series<R>, b: &Series<R>) -> Option<usize> {
    let order = a.order().min(b.order());
    (0..=order).find(|&n| a.coeff(n) != b.coeff(n))
}

fn agree<R: Coefficient>(quantity: &'static str, routes: &[&Series<R>]) -> Result<(), ClosedFormError> {
    for other in &routes[1..] {
        if let Some(coefficient) = first_difference(routes[0], other) {
            return Err(ClosedFormError::RouteMismatch { quantity, coefficient });
        }
    }
    Ok(())
}

fn poly<R: Coefficient>(coeffs: &[i64], order: usize) -> Series<R> {
    Series::from_ints(coeffs, order)
}

/// `√(1−2z−3z²)`.
pub fn radical(order: usize) -> Series<Rational> {
    poly(&[1, -2, -3], order).sqrt().expect("constant term is one")
}

/// The factor `1 + z² − t z²` of the marked kernel.
pub fn marked_d(order: usize) -> Series<TPoly> {
    Series::new(vec![TPoly::one(), TPoly::zero(), TPoly::from_ints(&[1, -1])], order)
}

/// `1 + z + z² − t z²`.
pub fn marked_e(order: usize) -> Series<TPoly> {
    Series::new(vec![TPoly::one(), TPoly::one(), TPoly::from_ints(&[1, -1])], order)
}

/// `E² − 4Dz(1+z)`, i.e. `t²z⁴+2tz³−2tz²+2tz⁴−z²−2z−2z³+1−3z⁴`.
pub fn marked_discriminant(order: usize) -> Series<TPoly> {
    marked_discriminant_in(order, &TPoly::t())
}

fn marked_d_in<R: Coefficient>(order: usize, t: &R) -> Series<R> {
    Series::new(vec![R::one(), R::zero(), R::one().sub(t)], order)
}

fn marked_e_in<R: Coefficient>(order: usize, t: &R) -> Series<R> {
    Series::new(vec![R::one(), R::one(), R::one().sub(t)], order)
}

fn marked_discriminant_in<R: Coefficient>(order: usize, t: &R) -> Series<R> {
    let d = marked_d_in(order, t);
    let e = marked_e_in(order, t);
    let z_one_plus_z: Series<R> = poly(&[0, 1, 1], order);
    &(&e * &e) - &(&d * &z_one_plus_z).scale(&R::from_i64(4))
}

pub fn kernel_roots(order: usize) -> KernelRoots<Rational> {
    let half = Rational::new(1, 2);
    let s = radical(order);
    let one_plus_z = poly(&[1, 1], order);
    KernelRoots {
        w1: (&one_plus_z + &s).scale(&half),
        w2: (&one_plus_z - &s).scale(&half),
    }
}

fn marked_roots_in<R: Coefficient>(order: usize, t: &R) -> Result<KernelRoots<R>, ClosedFormError> {
    let s = marked_discriminant_in(order, t).sqrt()?;
    let e = marked_e_in(order, t);
    let two_d = marked_d_in(order, t).scale(&R::from_i64(2));
    Ok(KernelRoots {
        w1: (&e + &s).div(&two_d)?,
        w2: (&e - &s).div(&two_d)?,
    })
}

pub fn kernel_roots_marked(order: usize) -> Result<KernelRoots<TPoly>, ClosedFormError> {
    marked_roots_in(order, &TPoly::t())
}

/// `z·M(z)`, the series inverting `z = v/(1+v+v²)`.
pub fn v_series(order: usize) -> Series<Rational> {
    let numer = &poly(&[1, -1], order + 1) - &radical(order + 1);
    numer
        .scale(&Rational::new(1, 2))
        .shift_down(1)
        .expect("numerator vanishes at zero")
}

/// Motzkin numbers, `(1 − z − √(1−2z−3z²)) / (2z²)`.
pub fn motzkin(order: usize) -> Series<Rational> {
    v_series(order + 1).shift_down(1).expect("v vanishes at zero")
}

/// `f(v)/g(v)` for polynomials `f, g` in `v`, with `v = v_series`.
fn in_v(numer: &[i64], denom: &[i64], order: usize) -> Result<Series<Rational>, ClosedFormError> {
    let v = v_series(order);
    let to_q = |c: &[i64]| c.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>();
    let f = Series::eval_polynomial(&to_q(numer), &v);
    let g = Series::eval_polynomial(&to_q(denom), &v);
    Ok(f.div(&g)?)
}

pub fn phi0_radical(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    let numer = &poly(&[1, 1], order + 1) - &radical(order + 1);
    let denom = poly(&[2, 2], order);
    Ok(numer.shift_down(1)?.div(&denom)?)
}

pub fn phi0_from_root(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    Ok(kernel_roots(order).w1.inverse()?)
}

pub fn phi0_from_v(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    in_v(&[1, 1, 1], &[1, 1], order)
}

/// Closed paths by length (Riordan numbers).
pub fn phi0(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    let radical = phi0_radical(order)?;
    agree("phi0", &[&radical, &phi0_from_root(order)?, &phi0_from_v(order)?])?;
    Ok(radical)
}

/// `[u^j] Φ(z, u)`: paths ending with a down-run at level `j`, plus the empty path.
pub fn phi_level(order: usize) -> Result<LevelSeries<Rational>, ClosedFormError> {
    let r = kernel_roots(order).w1.inverse()?;
    let mut levels = Vec::with_capacity(order + 1);
    levels.push(r.clone());
    // r_pow = 1/w1^j
    let mut r_pow = r.clone();
    for j in 1..=order {
        let next = &r_pow * &r;
        let level = (&next - &r_pow).shift_up(j).truncate(order);
        levels.push(level);
        r_pow = next;
    }
    Ok(LevelSeries::from_levels(levels))
}

/// All open paths, any end level, any final step.
pub fn open_paths(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    let phi_at_one = phi_level(order)?.sum_levels();
    let open = phi_at_one.div(&poly(&[1, -1], order))?;
    let via_v = in_v(&[1, 1, 1], &[1], order)?;
    agree("open_paths", &[&open, &motzkin(order), &via_v])?;
    Ok(open)
}

/// One first-return Stanley block, `z² / (1 − z²(1+z)²/w1²)`.
pub fn stanley_block(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    let w1 = kernel_roots(order).w1;
    let ratio = poly::<Rational>(&[0, 1, 1], order).div(&w1)?;
    let denom = &Series::one(order) - &(&ratio * &ratio);
    Ok(poly(&[0, 0, 1], order).div(&denom)?)
}

pub fn stanley_from_blocks(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    let block = stanley_block(order)?;
    Ok((&Series::one(order) - &block).inverse()?)
}

pub fn stanley_radical(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    let numer = &poly(&[3, 1], order) - &radical(order);
    Ok(numer.div(&poly(&[2, 2], order))?)
}

pub fn stanley_from_v(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    in_v(&[1, 2, 2], &[1, 2, 1], order)
}

/// Closed paths satisfying the odd-start condition on returns to the axis.
pub fn stanley_series(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    let blocks = stanley_from_blocks(order)?;
    agree("stanley_series", &[&blocks, &stanley_radical(order)?, &stanley_from_v(order)?])?;
    Ok(blocks)
}

fn phi0_marked_radical_in<R: Coefficient>(order: usize, t: &R) -> Result<Series<R>, ClosedFormError> {
    let s = marked_discriminant_in(order + 1, t).sqrt()?;
    let numer = (&marked_e_in(order + 1, t) - &s).shift_down(1)?;
    let one_plus_z: Series<R> = poly(&[1, 1], order);
    let denom = (&one_plus_z * &marked_d_in(order, t)).scale(&R::from_i64(2));
    Ok(numer.div(&denom)?)
}

fn phi0_marked_from_root_in<R: Coefficient>(order: usize, t: &R) -> Result<Series<R>, ClosedFormError> {
    let w1 = marked_roots_in(order, t)?.w1;
    Ok((&marked_d_in(order, t) * &w1).inverse()?)
}

pub fn phi0_t_radical(order: usize) -> Result<Series<TPoly>, ClosedFormError> {
    phi0_marked_radical_in(order, &TPoly::t())
}

pub fn phi0_t_from_root(order: usize) -> Result<Series<TPoly>, ClosedFormError> {
    phi0_marked_from_root_in(order, &TPoly::t())
}

/// Closed paths with `t` marking up-runs of length one.
pub fn phi0_t(order: usize) -> Result<Series<TPoly>, ClosedFormError> {
    let radical = phi0_t_radical(order)?;
    agree("phi0_t", &[&radical, &phi0_t_from_root(order)?])?;
    for (n, c) in radical.coeffs().iter().enumerate() {
        assert!(
            c.degree().is_none_or(|d| d <= n / 2),
            "t-degree of z^{n} coefficient exceeds {}",
            n / 2
        );
    }
    Ok(radical)
}

/// `v² / ((1−v)(1+v)²(1+v+v²))`.
pub fn mean_numerator_from_v(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    // (1−v)(1+v)²(1+v+v²) = 1 + 2v + v² − v³ − 2v⁴ − v⁵
    in_v(&[0, 0, 1], &[1, 2, 1, -1, -2, -1], order)
}

/// `∂ₜ phi0_t` at `t = 1`, by running the marked closed form over jets at `t = 1 + ε`.
pub fn mean_numerator_from_jet(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    let jet = phi0_marked_radical_in(order, &Dual::marker_at_one())?;
    Ok(jet.map_coeffs(|d| d.slope.clone()))
}

/// `∂ₜ phi0_t` at `t = 1`, straight from the full `t`-polynomials.
pub fn mean_numerator_from_marking(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    let one = Rational::one();
    Ok(phi0_t(order)?.map_coeffs(|p| p.derivative_at(&one)))
}

/// Total number of single up-runs over all closed paths of each length.
pub fn mean_numerator(order: usize) -> Result<Series<Rational>, ClosedFormError> {
    let via_v = mean_numerator_from_v(order)?;
    agree("mean_numerator", &[&via_v, &mean_numerator_from_jet(order)?])?;
    Ok(via_v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series<Rational>) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c.numer()).unwrap()).collect()
    }

    #[test]
    fn unmarked_roots() {
        let r = kernel_roots(12);
        assert_eq!(ints(&r.w1)[..5], [1, 0, -1, -1, -2]);
        assert_eq!(ints(&r.w2)[..5], [0, 1, 1, 1, 2]);
        assert_eq!(&r.w1 + &r.w2, poly(&[1, 1], 12));
        assert_eq!(&r.w1 * &r.w2, poly(&[0, 1, 1], 12));
        assert_eq!(ints(&r.w1.inverse().unwrap())[..6], [1, 0, 1, 1, 3, 6]);
    }

    #[test]
    fn marked_roots_specialize() {
        let one = Rational::one();
        let marked = kernel_roots_marked(10).unwrap();
        let plain = kernel_roots(10);
        assert_eq!(marked.w1.map_coeffs(|p| p.eval(&one)), plain.w1);
        assert_eq!(marked.w2.map_coeffs(|p| p.eval(&one)), plain.w2);
    }

    #[test]
    fn marked_discriminant_expansion() {
        let d = marked_discriminant(6);
        let expected = [
            TPoly::from_ints(&[1]),
            TPoly::from_ints(&[-2]),
            TPoly::from_ints(&[-1, -2]),
            TPoly::from_ints(&[-2, 2]),
            TPoly::from_ints(&[-3, 2, 1]),
            TPoly::zero(),
            TPoly::zero(),
        ];
        assert_eq!(d.coeffs(), expected);
    }

    #[test]
    fn riordan_prefix() {
        assert_eq!(ints(&phi0(7).unwrap()), vec![1, 0, 1, 1, 3, 6, 15, 36]);
    }

    #[test]
    fn stanley_prefix_all_routes() {
        let expected = vec![1, 0, 1, 0, 2, 2, 7, 14, 37, 90, 233];
        assert_eq!(ints(&stanley_series(10).unwrap()), expected);
        assert_eq!(ints(&stanley_radical(10).unwrap()), expected);
        assert_eq!(ints(&stanley_from_v(10).unwrap()), expected);
    }

    #[test]
    fn stanley_block_low_terms() {
        let b = stanley_block(8).unwrap();
        assert_eq!(ints(&b)[..4], [0, 0, 1, 0]);
    }

    #[test]
    fn motzkin_and_v() {
        let m = motzkin(8);
        assert_eq!(ints(&m), vec![1, 1, 2, 4, 9, 21, 51, 127, 323]);
        // M = 1 + zM + z²M²
        let z = Series::z(8);
        let rhs = &(&Series::one(8) + &(&z * &m)) + &(&(&z * &z) * &(&m * &m));
        assert_eq!(rhs, m);
        let v = v_series(8);
        assert!(v.coeff(0).is_zero());
        assert_eq!(ints(&v)[..5], [0, 1, 1, 2, 4]);
    }

    #[test]
    fn v_inverts_the_substitution() {
        // v/(1+v+v²) expanded as a series in v, then composed with v(z)
        let order = 20;
        let in_v = Series::<Rational>::z(order).div(&poly(&[1, 1, 1], order)).unwrap();
        assert_eq!(in_v.compose(&v_series(order)).unwrap(), Series::z(order));
    }

    #[test]
    fn phi0_by_general_composition() {
        let order = 15;
        let f = poly::<Rational>(&[1, 1, 1], order).div(&poly(&[1, 1], order)).unwrap();
        assert_eq!(f.compose(&v_series(order)).unwrap(), phi0(order).unwrap());
    }

    #[test]
    fn open_paths_are_motzkin() {
        assert_eq!(ints(&open_paths(6).unwrap()), vec![1, 1, 2, 4, 9, 21, 51]);
    }

    #[test]
    fn marked_prefix() {
        let s = phi0_t(7).unwrap();
        let expected = [
            TPoly::from_ints(&[1]),
            TPoly::zero(),
            TPoly::t(),
            TPoly::from_ints(&[1]),
            TPoly::from_ints(&[2, 0, 1]),
            TPoly::from_ints(&[3, 3]),
            TPoly::from_ints(&[7, 7, 0, 1]),
            TPoly::from_ints(&[17, 13, 6]),
        ];
        assert_eq!(s.coeffs(), expected);
        assert_eq!(s.map_coeffs(|p| p.eval(&Rational::one())), phi0(7).unwrap());
    }

    #[test]
    fn mean_numerator_routes() {
        let m = mean_numerator(12).unwrap();
        assert_eq!(*m.coeff(2), Rational::from(1));
        assert_eq!(*m.coeff(7), Rational::from(25));
        assert_eq!(mean_numerator_from_marking(12).unwrap(), m);
    }

    #[test]
    fn phi_level_zero_is_phi0() {
        let levels = phi_level(10).unwrap();
        assert_eq!(levels.level(0), &phi0(10).unwrap());
    }

    #[test]
    fn mismatch_is_reported_with_coefficient() {
        let a = poly::<Rational>(&[1, 2, 3], 4);
        let b = poly::<Rational>(&[1, 2, 4], 4);
        assert_eq!(
            agree("x", &[&a, &a, &b]),
            Err(ClosedFormError::RouteMismatch { quantity: "x", coefficient: 2 })
        );
    }
}
