//! Path model and exhaustive enumeration.
//!
//! Everything here is deliberately naive: it is the ground truth the
//! generating-function code is compared against on small lengths.

use std::collections::BTreeMap;
use std::fmt;

/// Default maximum length accepted by [`Enumerator`].
pub const DEFAULT_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("step value {0} is neither +1 nor a negative integer")]
    BadStep(i64),
    #[error("path drops below the axis at step {position}")]
    BelowAxis { position: usize },
    #[error("path ends at level {end_level}, not on the axis")]
    NotClosed { end_level: u64 },
    #[error("length {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// A single step: one level up, or a drop of `j ≥ 1` levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down(u32),
}

impl Step {
    pub fn value(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down(j) => -i64::from(j),
        }
    }

    pub fn from_value(v: i64) -> Result<Self, PathError> {
        match v {
            1 => Ok(Step::Up),
            v if v <= -1 => u32::try_from(-v).map(Step::Down).map_err(|_| PathError::BadStep(v)),
            v => Err(PathError::BadStep(v)),
        }
    }

    pub fn is_up(self) -> bool {
        matches!(self, Step::Up)
    }
}

/// A Deutsch path; the level never drops below zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    pub fn new(steps: Vec<Step>) -> Result<Self, PathError> {
        let mut level: u64 = 0;
        for (position, step) in steps.iter().enumerate() {
            level = match *step {
                Step::Up => level + 1,
                Step::Down(0) => return Err(PathError::BadStep(0)),
                Step::Down(j) => level
                    .checked_sub(u64::from(j))
                    .ok_or(PathError::BelowAxis { position })?,
            };
        }
        Ok(Path { steps })
    }

    pub fn from_values(values: &[i64]) -> Result<Self, PathError> {
        let steps = values.iter().map(|&v| Step::from_value(v)).collect::<Result<_, _>>()?;
        Path::new(steps)
    }

    pub fn empty() -> Self {
        Path::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Levels after each step, starting with the initial level 0.
    pub fn levels(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut level = 0i64;
        out.push(0);
        for s in &self.steps {
            level += s.value();
            out.push(level as u64);
        }
        out
    }

    pub fn end_level(&self) -> u64 {
        self.steps.iter().map(|s| s.value()).sum::<i64>() as u64
    }

    pub fn is_closed(&self) -> bool {
        self.end_level() == 0
    }

    /// Number of times the path comes back to the axis after leaving it.
    pub fn returns_to_axis(&self) -> usize {
        self.levels().iter().skip(1).filter(|&&l| l == 0).count()
    }

    pub fn values(&self) -> Vec<i64> {
        self.steps.iter().map(|s| s.value()).collect()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:+}", s.value())?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathStats {
    pub length: usize,
    pub end_level: u64,
    /// Maximal up-runs that are followed by a down-step.
    pub mountains: usize,
    /// Maximal up-runs of length exactly one, a trailing one included.
    pub single_up_runs: usize,
    pub ends_with_down: bool,
}

pub fn stats(path: &Path) -> PathStats {
    let steps = path.steps();
    let mut mountains = 0;
    let mut single_up_runs = 0;
    let mut run = 0usize;
    for (i, step) in steps.iter().enumerate() {
        if step.is_up() {
            run += 1;
            let run_ends = steps.get(i + 1).is_none_or(|next| !next.is_up());
            if run_ends {
                if run == 1 {
                    single_up_runs += 1;
                }
                if i + 1 < steps.len() {
                    mountains += 1;
                }
                run = 0;
            }
        }
    }
    PathStats {
        length: steps.len(),
        end_level: path.end_level(),
        mountains,
        single_up_runs,
        ends_with_down: steps.last().is_some_and(|s| !s.is_up()),
    }
}

/// Every maximal down-run that lands on the axis must start from an odd level.
pub fn stanley_ok(path: &Path) -> Result<bool, PathError> {
    let end_level = path.end_level();
    if end_level != 0 {
        return Err(PathError::NotClosed { end_level });
    }
    let levels = path.levels();
    let steps = path.steps();
    let mut i = 0;
    while i < steps.len() {
        if steps[i].is_up() {
            i += 1;
            continue;
        }
        let start = levels[i];
        while i < steps.len() && !steps[i].is_up() {
            i += 1;
        }
        if levels[i] == 0 && start.is_multiple_of(2) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_dyck(path: &Path) -> bool {
    path.steps().iter().all(|s| matches!(s, Step::Up | Step::Down(1)))
}

/// Depth-first enumeration of all paths of a given length, bounded by a cap.
#[derive(Debug, Clone, Copy)]
pub struct Enumerator {
    cap: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator { cap: DEFAULT_CAP }
    }
}

impl Enumerator {
    pub fn with_cap(cap: usize) -> Self {
        Enumerator { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, n: usize) -> Result<(), PathError> {
        if n > self.cap {
            Err(PathError::CapExceeded { n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn enumerate(&self, n: usize) -> Result<PathIter, PathError> {
        self.check(n)?;
        Ok(PathIter::new(n))
    }

    pub fn count(&self, n: usize, filter: impl Fn(&Path, &PathStats) -> bool) -> Result<u64, PathError> {
        Ok(self
            .enumerate(n)?
            .filter(|p| filter(p, &stats(p)))
            .count() as u64)
    }

    /// Counts of the filtered paths grouped by `key`.
    pub fn histogram<K: Ord>(
        &self,
        n: usize,
        filter: impl Fn(&Path, &PathStats) -> bool,
        key: impl Fn(&Path, &PathStats) -> K,
    ) -> Result<BTreeMap<K, u64>, PathError> {
        let mut out = BTreeMap::new();
        for p in self.enumerate(n)? {
            let s = stats(&p);
            if filter(&p, &s) {
                *out.entry(key(&p, &s)).or_insert(0) += 1;
            }
        }
        Ok(out)
    }
}

/// Yields the paths of one length in lexicographic order of
/// `Up < Down(1) < Down(2) < …`.
#[derive(Debug)]
pub struct PathIter {
    steps: Vec<Step>,
    // levels[i] = level before step i
    levels: Vec<u64>,
    n: usize,
    started: bool,
    done: bool,
}

impl PathIter {
    fn new(n: usize) -> Self {
        PathIter {
            steps: Vec::with_capacity(n),
            levels: Vec::with_capacity(n + 1),
            n,
            started: false,
            done: false,
        }
    }

    fn fill_with_ups(&mut self) {
        let mut level = match self.steps.last() {
            None => 0,
            Some(s) => (*self.levels.last().unwrap() as i64 + s.value()) as u64,
        };
        while self.steps.len() < self.n {
            self.levels.push(level);
            self.steps.push(Step::Up);
            level += 1;
        }
    }
}

impl Iterator for PathIter {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_with_ups();
            return Some(Path { steps: self.steps.clone() });
        }
        loop {
            let Some(last) = self.steps.pop() else {
                self.done = true;
                return None;
            };
            let before = self.levels.pop().unwrap();
            let next = match last {
                Step::Up if before >= 1 => Some(Step::Down(1)),
                Step::Down(j) if u64::from(j) < before => Some(Step::Down(j + 1)),
                _ => None,
            };
            if let Some(step) = next {
                self.levels.push(before);
                self.steps.push(step);
                self.fill_with_ups();
                return Some(Path { steps: self.steps.clone() });
            }
        }
    }
}

/// Closed Motzkin paths (steps +1, 0, -1) of length `n`, counted by direct recursion.
pub fn count_motzkin_paths(n: usize) -> u64 {
    fn go(remaining: usize, level: usize) -> u64 {
        if level > remaining {
            return 0;
        }
        if remaining == 0 {
            return 1;
        }
        let mut total = go(remaining - 1, level + 1) + go(remaining - 1, level);
        if level > 0 {
            total += go(remaining - 1, level - 1);
        }
        total
    }
    go(n, 0)
}
