//! Cross-checks between the three counting routes.

use std::collections::BTreeMap;

use crate::closedforms;
use crate::fps::{Coefficient, Rational, Series, TPoly};
use crate::paths::{count_motzkin_paths, stanley_ok, Enumerator, PathError};
use crate::slices::{self, LevelSeries, SliceRules};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// `None` on success, otherwise the first mismatch.
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_length: usize,
    pub max_order: usize,
    /// Adds one to `[z²]` of the closed-form Riordan series before comparing.
    pub inject_fault: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_length: 10, max_order: 30, inject_fault: false }
    }
}

type Check = Result<(), String>;
type NamedCheck = (&'static str, fn(&Context) -> Check);

fn int(n: u64) -> Rational {
    Rational::from_integer(n)
}

fn compare<R: Coefficient + std::fmt::Display>(
    what: &str,
    left: (&str, &[R]),
    right: (&str, &[R]),
) -> Check {
    let len = left.1.len().min(right.1.len());
    for n in 0..len {
        if left.1[n] != right.1[n] {
            return Err(format!(
                "{what} z^{n}: {} {} vs {} {}",
                left.0, left.1[n], right.0, right.1[n]
            ));
        }
    }
    Ok(())
}

fn all(checks: impl IntoIterator<Item = Check>) -> Check {
    checks.into_iter().collect()
}

struct Context {
    opts: VerifyOptions,
    enumerator: Enumerator,
    plain: LevelSeries<Rational>,
    marked: LevelSeries<TPoly>,
}

impl Context {
    fn brute_series(&self, mut count: impl FnMut(usize) -> Result<u64, PathError>) -> Result<Vec<Rational>, String> {
        (0..=self.opts.max_length)
            .map(|n| count(n).map(int).map_err(|e| e.to_string()))
            .collect()
    }

    fn phi0_closed_form(&self, order: usize) -> Result<Series<Rational>, String> {
        let mut s = closedforms::phi0(order).map_err(|e| e.to_string())?;
        if self.opts.inject_fault && order >= 2 {
            let mut coeffs = s.into_coeffs();
            coeffs[2] = coeffs[2].add(&Rational::one());
            s = Series::new(coeffs, order);
        }
        Ok(s)
    }
}

fn closed_counts(cx: &Context) -> Check {
    let brute = cx.brute_series(|n| cx.enumerator.count(n, |p, _| p.is_closed()))?;
    let closed = cx.phi0_closed_form(cx.opts.max_order)?;
    all([
        compare("closed", ("brute force", &brute), ("closed form", closed.coeffs())),
        compare("closed", ("slices", cx.plain.level(0).coeffs()), ("closed form", closed.coeffs())),
    ])
}

fn level_counts(cx: &Context) -> Check {
    let closed = closedforms::phi_level(cx.opts.max_order).map_err(|e| e.to_string())?;
    let max_length = cx.opts.max_length;
    let mut brute: BTreeMap<(usize, u64), u64> = BTreeMap::new();
    for n in 0..=max_length {
        let hist = cx
            .enumerator
            .histogram(n, |_, s| s.ends_with_down || s.length == 0, |_, s| s.end_level)
            .map_err(|e| e.to_string())?;
        brute.extend(hist.into_iter().map(|(j, c)| ((n, j), c)));
    }
    for j in 0..=cx.opts.max_order {
        let label = format!("level {j}");
        compare(&label, ("slices", cx.plain.level(j).coeffs()), ("closed form", closed.level(j).coeffs()))?;
        if j <= max_length {
            let row: Vec<Rational> = (0..=max_length)
                .map(|n| int(brute.get(&(n, j as u64)).copied().unwrap_or(0)))
                .collect();
            compare(&label, ("brute force", &row), ("slices", cx.plain.level(j).coeffs()))?;
        }
    }
    Ok(())
}

fn mountain_counts(cx: &Context) -> Check {
    let order = cx.opts.max_length;
    let fs: Vec<LevelSeries<Rational>> = slices::slices(order, SliceRules::plain()).collect();
    for n in 0..=order {
        let hist = cx
            .enumerator
            .histogram(n, |_, s| s.ends_with_down || s.length == 0, |_, s| (s.mountains, s.end_level as usize))
            .map_err(|e| e.to_string())?;
        if let Some(&(k, j)) = hist.keys().find(|(k, _)| *k >= fs.len()) {
            return Err(format!("brute force found {k} mountains at length {n}, level {j}; slices stop at {}", fs.len() - 1));
        }
        for (k, f) in fs.iter().enumerate() {
            for j in 0..=order {
                let expected = int(hist.get(&(k, j)).copied().unwrap_or(0));
                if *f.coeff(n, j) != expected {
                    return Err(format!(
                        "mountains {k} level {j} z^{n}: brute force {expected} vs slices {}",
                        f.coeff(n, j)
                    ));
                }
            }
        }
    }
    Ok(())
}

fn open_counts(cx: &Context) -> Check {
    let order = cx.opts.max_order;
    let brute = cx.brute_series(|n| cx.enumerator.count(n, |_, _| true))?;
    let motzkin_paths: Vec<Rational> = (0..=cx.opts.max_length.min(order)).map(|n| int(count_motzkin_paths(n))).collect();
    let from_slices = cx
        .plain
        .sum_levels()
        .div(&Series::from_ints(&[1, -1], order))
        .map_err(|e| e.to_string())?;
    let closed = closedforms::open_paths(order).map_err(|e| e.to_string())?;
    all([
        compare("open", ("brute force", &brute), ("closed form", closed.coeffs())),
        compare("open", ("Motzkin paths", &motzkin_paths), ("closed form", closed.coeffs())),
        compare("open", ("slices", from_slices.coeffs()), ("closed form", closed.coeffs())),
    ])
}

fn stanley_counts(cx: &Context) -> Check {
    let order = cx.opts.max_order;
    let brute = cx.brute_series(|n| cx.enumerator.count(n, |p, _| p.is_closed() && stanley_ok(p).unwrap_or(false)))?;
    let from_slices = slices::accumulate_with(order, &SliceRules::<Rational>::stanley());
    let closed = closedforms::stanley_series(order).map_err(|e| e.to_string())?;
    all([
        compare("stanley", ("brute force", &brute), ("closed form", closed.coeffs())),
        compare("stanley", ("slices", from_slices.level(0).coeffs()), ("closed form", closed.coeffs())),
    ])
}

fn single_up_runs(cx: &Context) -> Check {
    let closed = closedforms::phi0_t(cx.opts.max_order).map_err(|e| e.to_string())?;
    let brute: Vec<TPoly> = (0..=cx.opts.max_length)
        .map(|n| {
            let hist = cx
                .enumerator
                .histogram(n, |p, _| p.is_closed(), |_, s| s.single_up_runs)
                .map_err(|e| e.to_string())?;
            let top = hist.keys().max().copied().unwrap_or(0);
            Ok(TPoly::new((0..=top).map(|k| int(hist.get(&k).copied().unwrap_or(0))).collect()))
        })
        .collect::<Result<_, String>>()?;
    all([
        compare("single up-runs", ("brute force", &brute), ("closed form", closed.coeffs())),
        compare("single up-runs", ("slices", cx.marked.level(0).coeffs()), ("closed form", closed.coeffs())),
    ])
}

fn marker_specialization(cx: &Context) -> Check {
    let one = Rational::one();
    let at_one = cx.marked.map_coeffs(|p| p.eval(&one));
    for j in 0..=cx.opts.max_order {
        compare(
            &format!("level {j}"),
            ("marked slices at t=1", at_one.level(j).coeffs()),
            ("plain slices", cx.plain.level(j).coeffs()),
        )?;
    }
    Ok(())
}

fn kernel_identities(cx: &Context) -> Check {
    let order = cx.opts.max_order;
    let roots = closedforms::kernel_roots(order);
    let one_plus_z = Series::from_ints(&[1, 1], order);
    let z_one_plus_z = Series::from_ints(&[0, 1, 1], order);
    compare("w1+w2", ("computed", (&roots.w1 + &roots.w2).coeffs()), ("1+z", one_plus_z.coeffs()))?;
    compare("w1*w2", ("computed", (&roots.w1 * &roots.w2).coeffs()), ("z(1+z)", z_one_plus_z.coeffs()))?;
    if !roots.w1.coeff(0).is_one() || !roots.w2.coeff(0).is_zero() {
        return Err("root labelling: need w1(0)=1, w2(0)=0".into());
    }

    let marked = closedforms::kernel_roots_marked(order).map_err(|e| e.to_string())?;
    let a = closedforms::marked_d(order).shift_up(1).truncate(order);
    let b = closedforms::marked_e(order).neg();
    let c: Series<TPoly> = Series::from_ints(&[1, 1], order);
    let z: Series<TPoly> = Series::z(order);
    for (label, w) in [("marked w1", &marked.w1), ("marked w2", &marked.w2)] {
        let lhs = &(&(&a * w) * w) + &(&(&(&b * &z) * w) + &(&(&c * &z) * &z));
        if let Some(n) = lhs.valuation() {
            return Err(format!("{label} quadratic residual at z^{n}: {}", lhs.coeff(n)));
        }
    }
    Ok(())
}

fn route_equalities(cx: &Context) -> Check {
    let order = cx.opts.max_order;
    let e = |x: closedforms::ClosedFormError| x.to_string();
    let phi0 = cx.phi0_closed_form(order)?;
    compare("phi0", ("radical", phi0.coeffs()), ("1/w1", closedforms::phi0_from_root(order).map_err(e)?.coeffs()))?;
    compare("phi0", ("radical", phi0.coeffs()), ("v-form", closedforms::phi0_from_v(order).map_err(e)?.coeffs()))?;

    let blocks = closedforms::stanley_from_blocks(order).map_err(e)?;
    compare("stanley", ("blocks", blocks.coeffs()), ("radical", closedforms::stanley_radical(order).map_err(e)?.coeffs()))?;
    compare("stanley", ("blocks", blocks.coeffs()), ("v-form", closedforms::stanley_from_v(order).map_err(e)?.coeffs()))?;

    let via_v = closedforms::mean_numerator_from_v(order).map_err(e)?;
    let via_marking = closedforms::mean_numerator_from_marking(order).map_err(e)?;
    let via_jet = closedforms::mean_numerator_from_jet(order).map_err(e)?;
    compare("mean numerator", ("v-form", via_v.coeffs()), ("d/dt of marked series", via_marking.coeffs()))?;
    compare("mean numerator", ("v-form", via_v.coeffs()), ("jet at t=1", via_jet.coeffs()))?;

    let marked = closedforms::phi0_t(order).map_err(e)?;
    let at_one = marked.map_coeffs(|p| p.eval(&Rational::one()));
    compare("phi0_t at t=1", ("marked", at_one.coeffs()), ("radical", phi0.coeffs()))?;
    Ok(())
}

/// Runs every check; callers print the outcomes.
pub fn run_checks(opts: VerifyOptions, enumerator: Enumerator) -> Result<Vec<CheckOutcome>, PathError> {
    enumerator.enumerate(opts.max_length)?;
    let cx = Context {
        opts,
        enumerator,
        plain: slices::accumulate_plain(opts.max_order),
        marked: slices::accumulate_marked(opts.max_order),
    };
    let checks: [NamedCheck; 9] = [
        ("closed-counts", closed_counts),
        ("level-counts", level_counts),
        ("mountain-counts", mountain_counts),
        ("open-counts", open_counts),
        ("stanley-counts", stanley_counts),
        ("single-up-run-histograms", single_up_runs),
        ("marker-specialization", marker_specialization),
        ("kernel-identities", kernel_identities),
        ("route-equalities", route_equalities),
    ];
    Ok(checks
        .into_iter()
        .map(|(name, check)| CheckOutcome { name, failure: check(&cx).err() })
        .collect())
}
