//! Slice recurrence, closed forms and brute force compared beyond the unit tests.

use deutsch_paths::asymptotics::SeriesCache;
use deutsch_paths::closedforms;
use deutsch_paths::fps::{Coefficient, Rational, Series, TPoly};
use deutsch_paths::paths::{stats, Enumerator};
use deutsch_paths::slices::{self, SliceRules};
use proptest::prelude::*;

#[test]
fn slices_equal_closed_forms_levelwise() {
    let order = 30;
    assert_eq!(slices::accumulate_plain(order), closedforms::phi_level(order).unwrap());
}

#[test]
fn marked_slices_equal_marked_closed_form() {
    let order = 30;
    let marked = slices::accumulate_marked(order);
    assert_eq!(marked.level(0), &closedforms::phi0_t(order).unwrap());
}

#[test]
fn stanley_slices_equal_closed_form() {
    let order = 30;
    let s = slices::accumulate_with(order, &SliceRules::<Rational>::stanley());
    assert_eq!(s.level(0), &closedforms::stanley_series(order).unwrap());
}

#[test]
fn marked_series_at_zero_counts_paths_without_single_runs() {
    let zero = Rational::zero();
    let at_zero = closedforms::phi0_t(10).unwrap().map_coeffs(|p| p.eval(&zero));
    let e = Enumerator::default();
    for n in 0..=10 {
        let brute = e.count(n, |p, s| p.is_closed() && s.single_up_runs == 0).unwrap();
        assert_eq!(*at_zero.coeff(n), Rational::from_integer(brute), "n={n}");
    }
}

#[test]
fn stanley_first_return_blocks_match_brute_force() {
    let block = closedforms::stanley_block(12).unwrap();
    let e = Enumerator::default();
    for n in 1..=12 {
        let brute = e
            .count(n, |p, _| {
                p.is_closed() && p.returns_to_axis() == 1 && deutsch_paths::paths::stanley_ok(p).unwrap()
            })
            .unwrap();
        assert_eq!(*block.coeff(n), Rational::from_integer(brute), "n={n}");
    }
}

#[test]
fn motzkin_identity_from_the_radical() {
    let m = closedforms::motzkin(10);
    let brute: Vec<Rational> = (0..=10)
        .map(|n| Rational::from_integer(deutsch_paths::paths::count_motzkin_paths(n)))
        .collect();
    assert_eq!(m.coeffs(), brute.as_slice());
}

#[test]
fn asymptotic_inputs_match_brute_force() {
    let cache = SeriesCache::new(12).unwrap();
    let e = Enumerator::default();
    for n in 0..=12 {
        let total = e.count(n, |p, _| p.is_closed()).unwrap();
        let weighted: u64 = e
            .enumerate(n)
            .unwrap()
            .filter(|p| p.is_closed())
            .map(|p| stats(&p).single_up_runs as u64)
            .sum();
        assert_eq!(*cache.total.coeff(n), Rational::from_integer(total));
        assert_eq!(*cache.weighted.coeff(n), Rational::from_integer(weighted));
    }
}

#[test]
fn marked_degree_bound() {
    let s = closedforms::phi0_t(40).unwrap();
    for (n, c) in s.coeffs().iter().enumerate() {
        assert!(c.degree().is_none_or(|d| d <= n / 2));
    }
    // t-polynomials are never rational-valued here: every coefficient counts paths
    assert!(s.coeffs().iter().all(|c: &TPoly| c.coeffs().iter().all(Rational::is_integer)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn truncation_is_consistent(small in 1usize..20, extra in 1usize..20) {
        let big = small + extra;
        prop_assert_eq!(closedforms::phi0(big).unwrap().truncate(small), closedforms::phi0(small).unwrap());
        prop_assert_eq!(
            closedforms::stanley_series(big).unwrap().truncate(small),
            closedforms::stanley_series(small).unwrap()
        );
        prop_assert_eq!(
            slices::accumulate_plain(big).level(0).truncate(small),
            slices::accumulate_plain(small).level(0).clone()
        );
    }

    #[test]
    fn any_marker_value_specializes_consistently(num in -5i64..=5, den in 1i64..=4) {
        let t = Rational::new(num, den);
        let order = 14;
        let from_poly = slices::accumulate_marked(order).map_coeffs(|p| p.eval(&t));
        let direct = slices::accumulate(order, Some(&t));
        prop_assert_eq!(from_poly, direct);
        let closed = closedforms::phi0_t(order).unwrap().map_coeffs(|p| p.eval(&t));
        let sliced: Series<Rational> = slices::accumulate(order, Some(&t)).level(0).clone();
        prop_assert_eq!(closed, sliced);
    }
}
