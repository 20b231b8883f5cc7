//! Exhaustive generators and exact counters for every path family.
//!
//! Generators walk the step tree depth first in collation order (`U(r)` by
//! ascending rise, then `D`, then `H`), so words come out lexicographically
//! sorted. A completion table prunes every branch that can no longer end on
//! the axis. Counters run a dynamic program over `(consumed width, height)`
//! plus whatever flags the family needs, and never materialize words.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;

use crate::nm::{NmStep, NmWord};
use crate::path::{count_humps, count_peaks, PathProfile, PathWord, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KaFamily {
    /// Paths that never go below the axis.
    Strict,
    /// All super paths.
    Super,
    /// Super paths whose first non-horizontal step is an up step.
    SuperPositiveUp,
    /// Super paths containing at least one up step.
    SuperWithUp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NmFamily {
    Dyck,
    Free,
    /// Free words starting with `U` and ending with `D`.
    FreeUd,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Ka { family: KaFamily, profile: PathProfile, order: u64, peaks: Option<usize> },
    Nm { family: NmFamily, n: u64, m: u64, peaks: Option<usize> },
}

impl FamilySpec {
    pub fn ka(family: KaFamily, profile: &PathProfile, order: u64) -> Self {
        FamilySpec::Ka { family, profile: profile.clone(), order, peaks: None }
    }

    pub fn nm(family: NmFamily, n: u64, m: u64) -> Self {
        FamilySpec::Nm { family, n, m, peaks: None }
    }

    /// Restricts the family to words with exactly `j` peaks.
    pub fn with_peaks(mut self, j: usize) -> Self {
        match &mut self {
            FamilySpec::Ka { peaks, .. } | FamilySpec::Nm { peaks, .. } => *peaks = Some(j),
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Word {
    Ka(PathWord),
    Nm(NmWord),
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Ka(w) => w.fmt(f),
            Word::Nm(w) => w.fmt(f),
        }
    }
}

/// `reachable(r, h)`: some step sequence of total width `r` takes height `h` to 0.
struct Completion {
    heights: (i64, i64),
    table: Vec<Vec<bool>>,
}

impl Completion {
    fn new(profile: &PathProfile, order: usize, strict: bool) -> Self {
        let n = order as i64;
        let lo = if strict { 0 } else { -n };
        let hi = n;
        let span = (hi - lo + 1) as usize;
        let alphabet = profile.alphabet();
        let mut table = vec![vec![false; span]; order + 1];
        table[0][(-lo) as usize] = true;
        for r in 1..=order {
            for idx in 0..span {
                let h = lo + idx as i64;
                table[r][idx] = alphabet.iter().any(|&s| {
                    let w = profile.width(s) as usize;
                    let next = h + s.dy();
                    w <= r && (lo..=hi).contains(&next) && table[r - w][(next - lo) as usize]
                });
            }
        }
        Completion { heights: (lo, hi), table }
    }

    fn reachable(&self, remaining: usize, h: i64) -> bool {
        let (lo, hi) = self.heights;
        (lo..=hi).contains(&h) && self.table[remaining][(h - lo) as usize]
    }
}

struct KaWalk<'a, F> {
    profile: &'a PathProfile,
    family: KaFamily,
    peaks: Option<usize>,
    alphabet: Vec<Step>,
    completion: Completion,
    buf: Vec<Step>,
    visit: F,
}

impl<F: FnMut(&[Step])> KaWalk<'_, F> {
    fn run(&mut self, remaining: usize, h: i64, peaks: usize, seen_non_h: bool, has_up: bool) {
        if remaining == 0 {
            if h == 0
                && self.peaks.is_none_or(|j| j == peaks)
                && (self.family != KaFamily::SuperWithUp || has_up)
                && (self.family != KaFamily::SuperPositiveUp || seen_non_h)
            {
                (self.visit)(&self.buf);
            }
            return;
        }
        for i in 0..self.alphabet.len() {
            let step = self.alphabet[i];
            let w = self.profile.width(step) as usize;
            if w > remaining {
                continue;
            }
            if self.family == KaFamily::SuperPositiveUp && !seen_non_h && step == Step::Down {
                continue;
            }
            let next = h + step.dy();
            if !self.completion.reachable(remaining - w, next) {
                continue;
            }
            let closes_peak = step == Step::Down && self.buf.last().is_some_and(|s| s.is_up());
            let next_peaks = peaks + usize::from(closes_peak);
            if self.peaks.is_some_and(|j| next_peaks > j) {
                continue;
            }
            self.buf.push(step);
            self.run(remaining - w, next, next_peaks, seen_non_h || step != Step::Horizontal, has_up || step.is_up());
            self.buf.pop();
        }
    }
}

/// Calls `visit` on every word of a `(k,a)`/`(S,a)` family in lexicographic order.
pub fn visit_ka(profile: &PathProfile, family: KaFamily, order: u64, peaks: Option<usize>, visit: impl FnMut(&[Step])) {
    let order = usize::try_from(order).expect("order fits in memory");
    let mut walk = KaWalk {
        profile,
        family,
        peaks,
        alphabet: profile.alphabet(),
        completion: Completion::new(profile, order, family == KaFamily::Strict),
        buf: Vec::with_capacity(order),
        visit,
    };
    walk.run(order, 0, 0, false, false);
}

/// Calls `visit` on every `(n,m)`-word of a family in lexicographic order (`U < D`).
pub fn visit_nm(family: NmFamily, n: u64, m: u64, peaks: Option<usize>, mut visit: impl FnMut(&[NmStep])) {
    fn go(
        family: NmFamily,
        (n, m): (i64, i64),
        (x, y): (i64, i64),
        peaks: Option<usize>,
        seen: usize,
        buf: &mut Vec<NmStep>,
        visit: &mut dyn FnMut(&[NmStep]),
    ) {
        if x == n && y == m {
            let ud_ok =
                family != NmFamily::FreeUd || buf.is_empty() || (buf[0] == NmStep::U && buf.last() == Some(&NmStep::D));
            if ud_ok && peaks.is_none_or(|j| j == seen) {
                visit(buf);
            }
            return;
        }
        for step in [NmStep::U, NmStep::D] {
            let (nx, ny) = match step {
                NmStep::U => (x, y + 1),
                NmStep::D => (x + 1, y),
            };
            if nx > n || ny > m {
                continue;
            }
            if family == NmFamily::Dyck && m * nx - n * ny > 0 {
                continue;
            }
            if family == NmFamily::FreeUd && buf.is_empty() && step == NmStep::D {
                continue;
            }
            let next_seen = seen + usize::from(step == NmStep::D && buf.last() == Some(&NmStep::U));
            if peaks.is_some_and(|j| next_seen > j) {
                continue;
            }
            buf.push(step);
            go(family, (n, m), (nx, ny), peaks, next_seen, buf, visit);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity((n + m) as usize);
    go(family, (n as i64, m as i64), (0, 0), peaks, 0, &mut buf, &mut visit);
}

pub fn generate_ka(profile: &PathProfile, family: KaFamily, order: u64, peaks: Option<usize>) -> Vec<PathWord> {
    let mut out = Vec::new();
    visit_ka(profile, family, order, peaks, |steps| {
        out.push(PathWord::from_trusted(profile.clone(), steps.to_vec()));
    });
    out
}

pub fn generate_nm(family: NmFamily, n: u64, m: u64, peaks: Option<usize>) -> Vec<NmWord> {
    let mut out = Vec::new();
    visit_nm(family, n, m, peaks, |steps| out.push(NmWord::new(steps.to_vec())));
    out
}

/// Every member of the family exactly once, in lexicographic order.
pub fn generate(spec: &FamilySpec) -> Vec<Word> {
    match spec {
        FamilySpec::Ka { family, profile, order, peaks } => {
            generate_ka(profile, *family, *order, *peaks).into_iter().map(Word::Ka).collect()
        }
        FamilySpec::Nm { family, n, m, peaks } => {
            generate_nm(*family, *n, *m, *peaks).into_iter().map(Word::Nm).collect()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct KaState {
    height: i64,
    prev_up: bool,
    // 0: no non-horizontal step yet, 1: first was up, 2: first was down
    first: u8,
    has_up: bool,
    peaks: usize,
}

fn count_ka(profile: &PathProfile, family: KaFamily, order: u64, peaks: Option<usize>) -> BigUint {
    let order = usize::try_from(order).expect("order fits in memory");
    let alphabet = profile.alphabet();
    let strict = family == KaFamily::Strict;
    let completion = Completion::new(profile, order, strict);
    let track_first = family == KaFamily::SuperPositiveUp;
    let track_up = family == KaFamily::SuperWithUp;

    let mut layers: Vec<HashMap<KaState, BigUint>> = vec![HashMap::new(); order + 1];
    let start = KaState { height: 0, prev_up: false, first: 0, has_up: false, peaks: 0 };
    layers[0].insert(start, BigUint::from(1u32));
    for width in 0..order {
        let layer = std::mem::take(&mut layers[width]);
        for (state, count) in layer {
            for &step in &alphabet {
                let w = profile.width(step) as usize;
                if width + w > order {
                    continue;
                }
                let height = state.height + step.dy();
                if !completion.reachable(order - width - w, height) {
                    continue;
                }
                let mut first = state.first;
                if track_first && first == 0 && step != Step::Horizontal {
                    first = if step.is_up() { 1 } else { 2 };
                    if first == 2 {
                        continue;
                    }
                }
                let mut next_peaks = state.peaks;
                if peaks.is_some() {
                    next_peaks += usize::from(state.prev_up && step == Step::Down);
                    if peaks.is_some_and(|j| next_peaks > j) {
                        continue;
                    }
                }
                let next = KaState {
                    height,
                    prev_up: peaks.is_some() && step.is_up(),
                    first,
                    has_up: track_up && (state.has_up || step.is_up()),
                    peaks: next_peaks,
                };
                *layers[width + w].entry(next).or_default() += &count;
            }
        }
    }
    layers[order]
        .iter()
        .filter(|(s, _)| {
            s.height == 0
                && (!track_first || s.first == 1)
                && (!track_up || s.has_up)
                && peaks.is_none_or(|j| s.peaks == j)
        })
        .map(|(_, c)| c)
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct NmState {
    x: i64,
    last: Option<NmStep>,
    first: Option<NmStep>,
    peaks: usize,
}

fn count_nm(family: NmFamily, n: u64, m: u64, peaks: Option<usize>) -> BigUint {
    let (n, m) = (n as i64, m as i64);
    let total = (n + m) as usize;
    let mut layer: HashMap<NmState, BigUint> = HashMap::new();
    layer.insert(NmState { x: 0, last: None, first: None, peaks: 0 }, BigUint::from(1u32));
    for t in 0..total {
        let mut next_layer: HashMap<NmState, BigUint> = HashMap::new();
        for (state, count) in layer {
            let y = t as i64 - state.x;
            for step in [NmStep::U, NmStep::D] {
                let (nx, ny) = match step {
                    NmStep::U => (state.x, y + 1),
                    NmStep::D => (state.x + 1, y),
                };
                if nx > n || ny > m {
                    continue;
                }
                if family == NmFamily::Dyck && m * nx - n * ny > 0 {
                    continue;
                }
                let next_peaks = state.peaks + usize::from(state.last == Some(NmStep::U) && step == NmStep::D);
                if peaks.is_some_and(|j| next_peaks > j) {
                    continue;
                }
                let next = NmState {
                    x: nx,
                    last: Some(step),
                    first: state.first.or(Some(step)),
                    peaks: if peaks.is_some() { next_peaks } else { 0 },
                };
                *next_layer.entry(next).or_default() += &count;
            }
        }
        layer = next_layer;
    }
    layer
        .iter()
        .filter(|(s, _)| {
            s.x == n
                && peaks.is_none_or(|j| s.peaks == j)
                && (family != NmFamily::FreeUd
                    || total == 0
                    || (s.first == Some(NmStep::U) && s.last == Some(NmStep::D)))
        })
        .map(|(_, c)| c)
        .sum()
}

/// Cardinality of a family, by dynamic programming.
pub fn count_family(spec: &FamilySpec) -> BigUint {
    match spec {
        FamilySpec::Ka { family, profile, order, peaks } => count_ka(profile, *family, *order, *peaks),
        FamilySpec::Nm { family, n, m, peaks } => count_nm(*family, *n, *m, *peaks),
    }
}

/// Sum of `#humps` over all strict paths of the given order.
pub fn total_humps(profile: &PathProfile, order: u64) -> BigUint {
    let mut total = 0u64;
    visit_ka(profile, KaFamily::Strict, order, None, |s| total += count_humps(s) as u64);
    BigUint::from(total)
}

/// Sum of `#peaks` over all strict paths of the given order.
pub fn total_peaks(profile: &PathProfile, order: u64) -> BigUint {
    let mut total = 0u64;
    visit_ka(profile, KaFamily::Strict, order, None, |s| total += count_peaks(s) as u64);
    BigUint::from(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{Classification, HorizontalWidth};

    fn ka(k: u32, a: u32) -> PathProfile {
        PathProfile::ka(k, HorizontalWidth::Finite(a)).unwrap()
    }

    fn strings(words: &[PathWord]) -> Vec<String> {
        words.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn strict_examples_in_collation_order() {
        let w = generate_ka(&ka(1, 1), KaFamily::Strict, 3, None);
        assert_eq!(strings(&w), ["UDH", "UHD", "HUD", "HHH"]);
        let w = generate_ka(&ka(2, 1), KaFamily::Strict, 4, None);
        assert_eq!(strings(&w), ["UDDH", "UDHD", "UHDD", "HUDD", "HHHH"]);
    }

    #[test]
    fn dyck_example() {
        let w: Vec<String> = generate_nm(NmFamily::Dyck, 2, 3, None).iter().map(ToString::to_string).collect();
        assert_eq!(w, ["UUUDD", "UUDUD"]);
    }

    #[test]
    fn empty_order_gives_empty_word() {
        for family in [KaFamily::Strict, KaFamily::Super] {
            let w = generate_ka(&ka(1, 1), family, 0, None);
            assert_eq!(strings(&w), [""]);
        }
        let w = generate_ka(&PathProfile::kary(1).unwrap(), KaFamily::Strict, 0, None);
        assert_eq!(strings(&w), [""]);
        assert_eq!(generate_nm(NmFamily::Dyck, 0, 0, None).len(), 1);
        assert_eq!(generate_nm(NmFamily::Free, 0, 0, None).len(), 1);
    }

    #[test]
    fn count_examples() {
        let c = |f, k, a, n| count_family(&FamilySpec::ka(f, &ka(k, a), n));
        assert_eq!(c(KaFamily::Super, 2, 1, 4), BigUint::from(13u32));
        assert_eq!(c(KaFamily::Super, 1, 1, 3), BigUint::from(7u32));
        assert_eq!(c(KaFamily::SuperPositiveUp, 1, 1, 4), BigUint::from(9u32));
        assert_eq!(c(KaFamily::Super, 1, 1, 4), BigUint::from(19u32));
    }

    #[test]
    fn hump_totals() {
        assert_eq!(total_humps(&ka(1, 1), 4), BigUint::from(9u32));
        assert_eq!(total_humps(&ka(2, 1), 4), BigUint::from(4u32));
        assert_eq!(total_peaks(&ka(2, 1), 4), BigUint::from(3u32));
        assert_eq!(total_humps(&ka(3, 2), 0), BigUint::from(0u32));
    }

    #[test]
    fn families_are_what_they_claim() {
        let p = ka(2, 2);
        for w in generate_ka(&p, KaFamily::SuperPositiveUp, 7, None) {
            assert!(w.is_super_positive_up(), "{w}");
        }
        for w in generate_ka(&p, KaFamily::SuperWithUp, 7, None) {
            assert!(w.has_up() && w.classify() != Classification::Invalid);
        }
        for w in generate_nm(NmFamily::FreeUd, 3, 4, Some(2)) {
            assert!(w.starts_up_ends_down() && w.peak_count() == 2);
        }
    }
}
