//! Adding-a-new-slice recurrence.
//!
//! A path that ends with a down-run is a sequence of mountains: an up-run
//! followed by a maximal down-run. `F_k` collects the paths with `k`
//! mountains, split by final level. Appending one mountain from level `i`
//! to a peak `p > i` and then down to `j < p` contributes
//! `z^(p-i) · z(1+z)^(p-1-j)`, the second factor counting the ways to
//! break a drop of `p - j` into down-steps.
//!
//! The transfer is carried out on coefficient arrays, truncated at a fixed
//! order `N`; levels above `N` are unreachable and dropped.

use crate::fps::{Coefficient, Rational, Series, TPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SliceError {
    #[error("a down-run must drop at least one level, got {0}")]
    BadDrop(usize),
}

/// Bivariate `F(z, u)` truncated in both variables: `levels[j]` is `[u^j] F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSeries<R> {
    levels: Vec<Series<R>>,
}

impl<R: Coefficient> LevelSeries<R> {
    pub fn zero(order: usize) -> Self {
        LevelSeries { levels: vec![Series::zero(order); order + 1] }
    }

    /// Just the empty path: `1` at level 0.
    pub fn empty_path(order: usize) -> Self {
        let mut out = LevelSeries::zero(order);
        out.levels[0] = Series::one(order);
        out
    }

    pub fn from_levels(levels: Vec<Series<R>>) -> Self {
        let order = levels[0].order();
        assert_eq!(levels.len(), order + 1, "need one level per power of z");
        assert!(levels.iter().all(|s| s.order() == order), "levels must share one order");
        LevelSeries { levels }
    }

    pub fn order(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, j: usize) -> &Series<R> {
        &self.levels[j]
    }

    pub fn levels(&self) -> &[Series<R>] {
        &self.levels
    }

    /// `[z^n u^j]`.
    pub fn coeff(&self, n: usize, j: usize) -> &R {
        self.levels[j].coeff(n)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order());
        LevelSeries {
            levels: self.levels.iter().zip(&other.levels).map(|(a, b)| a + b).collect(),
        }
    }

    /// `F(z, 1)`.
    pub fn sum_levels(&self) -> Series<R> {
        self.levels.iter().fold(Series::zero(self.order()), |acc, s| &acc + s)
    }

    /// Smallest power of `z` present at any level.
    pub fn valuation(&self) -> Option<usize> {
        self.levels.iter().filter_map(Series::valuation).min()
    }

    pub fn map_coeffs<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> LevelSeries<S> {
        LevelSeries { levels: self.levels.iter().map(|s| s.map_coeffs(&f)).collect() }
    }
}

/// `z(1+z)^(drop-1)`: down-runs of total drop `drop`, weighted by their number of steps.
pub fn down_run_weights(drop: usize, order: usize) -> Result<Series<Rational>, SliceError> {
    if drop == 0 {
        return Err(SliceError::BadDrop(drop));
    }
    let one_plus_z = Series::from_ints(&[1, 1], order);
    Ok(one_plus_z.pow(drop - 1).shift_up(1).truncate(order))
}

/// Variations of the mountain transfer.
#[derive(Clone, Debug, Default)]
pub struct SliceRules<R> {
    /// Weight attached to every up-run of length exactly one.
    pub marker: Option<R>,
    /// Only allow a down-run to land on the axis when it starts at an odd level.
    pub odd_returns_only: bool,
}

impl<R: Coefficient> SliceRules<R> {
    pub fn plain() -> Self {
        SliceRules { marker: None, odd_returns_only: false }
    }

    pub fn marked(marker: R) -> Self {
        SliceRules { marker: Some(marker), odd_returns_only: false }
    }

    pub fn stanley() -> Self {
        SliceRules { marker: None, odd_returns_only: true }
    }
}

fn times_z<R: Coefficient>(s: &Series<R>) -> Series<R> {
    s.shift_up(1).truncate(s.order())
}

fn times_one_plus_z<R: Coefficient>(s: &Series<R>) -> Series<R> {
    s + &times_z(s)
}

/// Appends one mountain to every path in `f`.
pub fn next_slice<R: Coefficient>(f: &LevelSeries<R>, marker: Option<&R>) -> LevelSeries<R> {
    let rules = SliceRules { marker: marker.cloned(), odd_returns_only: false };
    next_slice_with(f, &rules)
}

pub fn next_slice_with<R: Coefficient>(f: &LevelSeries<R>, rules: &SliceRules<R>) -> LevelSeries<R> {
    let order = f.order();
    let extra = rules.marker.as_ref().map(|m| m.sub(&R::one()));

    // peaks[p] = weight of reaching peak p by an up-run from a lower start level
    let mut peaks: Vec<Series<R>> = vec![Series::zero(order); order + 1];
    let mut climb = Series::zero(order);
    for (p, peak) in peaks.iter_mut().enumerate().skip(1) {
        climb = times_z(&(&climb + f.level(p - 1)));
        *peak = match &extra {
            Some(e) => &climb + &times_z(f.level(p - 1)).scale(e),
            None => climb.clone(),
        };
    }

    // landing[j] = sum over p > j of peaks[p] (1+z)^(p-1-j), by Horner from the top
    let mut out = LevelSeries::zero(order);
    let mut landing = Series::zero(order);
    for j in (0..order).rev() {
        landing = &peaks[j + 1] + &times_one_plus_z(&landing);
        out.levels[j] = times_z(&landing);
    }

    if rules.odd_returns_only && order >= 1 {
        let mut odd = Series::zero(order);
        let top_odd = if order % 2 == 1 { order } else { order - 1 };
        for p in (1..=top_odd).rev().step_by(2) {
            odd = &peaks[p] + &times_one_plus_z(&times_one_plus_z(&odd));
        }
        out.levels[0] = times_z(&odd);
    }
    out
}

/// `F_k` together with the running sum `Σ_{i≤k} F_i`.
#[derive(Clone, Debug)]
pub struct SliceState<R> {
    pub current: LevelSeries<R>,
    pub accumulated: LevelSeries<R>,
    pub k: usize,
}

impl<R: Coefficient> SliceState<R> {
    pub fn new(order: usize) -> Self {
        let start = LevelSeries::empty_path(order);
        SliceState { current: start.clone(), accumulated: start, k: 0 }
    }

    /// True once `F_k` vanishes below the truncation order, so later slices add nothing.
    pub fn is_exhausted(&self) -> bool {
        self.current.valuation().is_none()
    }

    pub fn advance(&mut self, rules: &SliceRules<R>) {
        self.current = next_slice_with(&self.current, rules);
        self.accumulated = self.accumulated.add(&self.current);
        self.k += 1;
    }
}

/// `F_0, F_1, …` up to the last one that is nonzero below the truncation order.
pub fn slices<R: Coefficient>(order: usize, rules: SliceRules<R>) -> impl Iterator<Item = LevelSeries<R>> {
    let mut current = Some(LevelSeries::empty_path(order));
    std::iter::from_fn(move || {
        let f = current.take()?;
        let next = next_slice_with(&f, &rules);
        if next.valuation().is_some() {
            current = Some(next);
        }
        Some(f)
    })
}

/// `Φ = Σ_k F_k` truncated at `order`.
pub fn accumulate_with<R: Coefficient>(order: usize, rules: &SliceRules<R>) -> LevelSeries<R> {
    let mut state = SliceState::new(order);
    while !state.is_exhausted() {
        state.advance(rules);
    }
    state.accumulated
}

pub fn accumulate<R: Coefficient>(order: usize, marker: Option<&R>) -> LevelSeries<R> {
    let rules = SliceRules { marker: marker.cloned(), odd_returns_only: false };
    accumulate_with(order, &rules)
}

pub fn accumulate_plain(order: usize) -> LevelSeries<Rational> {
    accumulate_with(order, &SliceRules::plain())
}

/// Up-runs of length one marked by `t`.
pub fn accumulate_marked(order: usize) -> LevelSeries<TPoly> {
    accumulate_with(order, &SliceRules::marked(TPoly::t()))
}
