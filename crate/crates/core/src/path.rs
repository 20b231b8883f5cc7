//! Step alphabets, path words, and hump/peak extraction for `(k,a)` and
//! `(S,a)` lattice paths.
//!
//! A path is a sequence of up steps `(1, r)` with `r` drawn from the profile's
//! rise set, down steps `(1, -1)` and horizontal steps `(a, 0)`. Lattice points
//! are indexed by step boundaries: point `i` is the position after `i` steps.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Width of a horizontal step, or `Disallowed` for `a = ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HorizontalWidth {
    Finite(u32),
    Disallowed,
}

impl HorizontalWidth {
    pub fn finite(self) -> Option<u32> {
        match self {
            HorizontalWidth::Finite(a) => Some(a),
            HorizontalWidth::Disallowed => None,
        }
    }

    /// 1 when the all-horizontal path of order `n` exists, else 0.
    ///
    /// With horizontals disallowed only the empty path qualifies.
    pub fn divides(self, n: u64) -> bool {
        match self {
            HorizontalWidth::Finite(a) => n.is_multiple_of(u64::from(a)),
            HorizontalWidth::Disallowed => n == 0,
        }
    }
}

impl fmt::Display for HorizontalWidth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HorizontalWidth::Finite(a) => write!(f, "{a}"),
            HorizontalWidth::Disallowed => f.write_str("inf"),
        }
    }
}

impl FromStr for HorizontalWidth {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(HorizontalWidth::Disallowed);
        }
        match s.parse::<u32>() {
            Ok(a) if a >= 1 => Ok(HorizontalWidth::Finite(a)),
            _ => {
                Err(Error::InvalidProfile(format!("horizontal width must be a positive integer or \"inf\", got {s:?}")))
            }
        }
    }
}

/// The step alphabet of a path family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathProfile {
    rises: Arc<[u32]>,
    horizontal: HorizontalWidth,
}

impl PathProfile {
    pub fn new(rises: impl IntoIterator<Item = u32>, horizontal: HorizontalWidth) -> Result<Self> {
        let mut rises: Vec<u32> = rises.into_iter().collect();
        rises.sort_unstable();
        rises.dedup();
        if rises.is_empty() {
            return Err(Error::InvalidProfile("rise set is empty".into()));
        }
        if rises[0] == 0 {
            return Err(Error::InvalidProfile("rises must be positive".into()));
        }
        if horizontal == HorizontalWidth::Finite(0) {
            return Err(Error::InvalidProfile("horizontal width must be positive".into()));
        }
        Ok(PathProfile { rises: rises.into(), horizontal })
    }

    /// Profile of `(k,a)`-paths.
    pub fn ka(k: u32, horizontal: HorizontalWidth) -> Result<Self> {
        Self::new([k], horizontal)
    }

    /// Profile of `k`-ary paths (no horizontal steps).
    pub fn kary(k: u32) -> Result<Self> {
        Self::new([k], HorizontalWidth::Disallowed)
    }

    /// Sorted, deduplicated rise set.
    pub fn rises(&self) -> &[u32] {
        &self.rises
    }

    pub fn horizontal(&self) -> HorizontalWidth {
        self.horizontal
    }

    /// The rise `k` when the rise set is the singleton `{k}`.
    pub fn single_rise(&self) -> Option<u32> {
        match *self.rises {
            [k] => Some(k),
            _ => None,
        }
    }

    pub fn max_rise(&self) -> u32 {
        *self.rises.last().expect("rise set is nonempty")
    }

    pub fn allows(&self, step: Step) -> bool {
        match step {
            Step::Up(r) => self.rises.binary_search(&r).is_ok(),
            Step::Down => true,
            Step::Horizontal => self.horizontal != HorizontalWidth::Disallowed,
        }
    }

    /// All allowed steps in collation order: `U(r)` by ascending `r`, then `D`, then `H`.
    pub fn alphabet(&self) -> Vec<Step> {
        let mut out: Vec<Step> = self.rises.iter().map(|&r| Step::Up(r)).collect();
        out.push(Step::Down);
        if self.horizontal != HorizontalWidth::Disallowed {
            out.push(Step::Horizontal);
        }
        out
    }

    /// Horizontal extent of a step.
    pub fn width(&self, step: Step) -> u64 {
        match step {
            Step::Up(_) | Step::Down => 1,
            Step::Horizontal => self.horizontal.finite().map_or(0, u64::from),
        }
    }

    pub fn format_step(&self, step: Step, out: &mut impl fmt::Write) -> fmt::Result {
        match step {
            Step::Up(r) if self.rises.len() > 1 => write!(out, "U({r})"),
            Step::Up(_) => out.write_char('U'),
            Step::Down => out.write_char('D'),
            Step::Horizontal => out.write_char('H'),
        }
    }

    /// Renders a step slice in the text encoding of this profile.
    pub fn format_steps(&self, steps: &[Step]) -> String {
        let mut s = String::with_capacity(steps.len());
        for &step in steps {
            self.format_step(step, &mut s).expect("writing to a String cannot fail");
        }
        s
    }

    /// Parses the text encoding `step*` with `step := 'U' ('(' rise ')')? | 'D' | 'H'`.
    pub fn parse_steps(&self, text: &str) -> Result<Vec<Step>> {
        let bytes = text.as_bytes();
        let mut steps = Vec::with_capacity(bytes.len());
        let mut i = 0;
        while i < bytes.len() {
            let step = match bytes[i] {
                b'U' => {
                    if bytes.get(i + 1) == Some(&b'(') {
                        let close = text[i + 2..]
                            .find(')')
                            .ok_or_else(|| Error::Parse { position: i + 1, message: "unterminated rise".into() })?
                            + i
                            + 2;
                        let r: u32 = text[i + 2..close].parse().map_err(|_| Error::Parse {
                            position: i + 2,
                            message: format!("invalid rise {:?}", &text[i + 2..close]),
                        })?;
                        i = close;
                        Step::Up(r)
                    } else {
                        match self.single_rise() {
                            Some(k) => Step::Up(k),
                            None => {
                                return Err(Error::Parse {
                                    position: i,
                                    message: "up step needs an explicit rise for this profile".into(),
                                })
                            }
                        }
                    }
                }
                b'D' => Step::Down,
                b'H' => Step::Horizontal,
                other => {
                    return Err(Error::Parse {
                        position: i,
                        message: format!("unexpected character {:?}", other as char),
                    })
                }
            };
            if !self.allows(step) {
                return Err(Error::StepNotAllowed { step: self.format_steps(&[step]), profile: self.to_string() });
            }
            steps.push(step);
            i += 1;
        }
        Ok(steps)
    }
}

impl fmt::Display for PathProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.single_rise() {
            Some(k) => write!(f, "(k={k}, a={})", self.horizontal),
            None => {
                let rises: Vec<String> = self.rises.iter().map(u32::to_string).collect();
                write!(f, "(S={{{}}}, a={})", rises.join(","), self.horizontal)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up(u32),
    Down,
    Horizontal,
}

impl Step {
    pub fn dy(self) -> i64 {
        match self {
            Step::Up(r) => i64::from(r),
            Step::Down => -1,
            Step::Horizontal => 0,
        }
    }

    pub fn is_up(self) -> bool {
        matches!(self, Step::Up(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// An up step, `horizontal_count` horizontal steps, then a down step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hump {
    pub start_index: usize,
    pub horizontal_count: usize,
    /// Right endpoint of the up step, which is also the left endpoint of
    /// the first horizontal step when there is one.
    pub hump_point: LatticePoint,
}

impl Hump {
    pub fn is_peak(&self) -> bool {
        self.horizontal_count == 0
    }

    /// Step index of the closing down step.
    pub fn end_index(&self) -> usize {
        self.start_index + self.horizontal_count + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// Ends on the axis and never goes below it.
    Strict,
    /// Ends on the axis but dips below it somewhere.
    SuperOnly,
    /// Does not end on the axis.
    Invalid,
}

/// Heights at every step boundary, starting from 0.
pub fn heights(steps: &[Step]) -> Vec<i64> {
    let mut out = Vec::with_capacity(steps.len() + 1);
    let mut h = 0i64;
    out.push(h);
    for s in steps {
        h += s.dy();
        out.push(h);
    }
    out
}

pub fn classify_steps(steps: &[Step]) -> Classification {
    let mut h = 0i64;
    let mut dipped = false;
    for s in steps {
        h += s.dy();
        dipped |= h < 0;
    }
    match (h, dipped) {
        (0, false) => Classification::Strict,
        (0, true) => Classification::SuperOnly,
        _ => Classification::Invalid,
    }
}

/// Humps of a step sequence, left to right. Points are computed with the
/// profile's horizontal width.
pub fn find_humps(profile: &PathProfile, steps: &[Step]) -> Vec<Hump> {
    let mut humps = Vec::new();
    let (mut x, mut y) = (0i64, 0i64);
    for (i, &step) in steps.iter().enumerate() {
        if let Step::Up(r) = step {
            let point = LatticePoint::new(x + 1, y + i64::from(r));
            let run = steps[i + 1..].iter().take_while(|s| **s == Step::Horizontal).count();
            if steps.get(i + 1 + run) == Some(&Step::Down) {
                humps.push(Hump { start_index: i, horizontal_count: run, hump_point: point });
            }
        }
        x += profile.width(step) as i64;
        y += step.dy();
    }
    humps
}

pub fn count_peaks(steps: &[Step]) -> usize {
    steps.windows(2).filter(|w| w[0].is_up() && w[1] == Step::Down).count()
}

pub fn count_humps(steps: &[Step]) -> usize {
    let mut count = 0;
    let mut open = false;
    for &s in steps {
        match s {
            Step::Up(_) => open = true,
            Step::Down => {
                count += usize::from(open);
                open = false;
            }
            Step::Horizontal => {}
        }
    }
    count
}

/// An immutable step sequence over a profile's alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathWord {
    profile: PathProfile,
    steps: Vec<Step>,
}

impl PathWord {
    pub fn new(profile: PathProfile, steps: Vec<Step>) -> Result<Self> {
        if let Some(&bad) = steps.iter().find(|s| !profile.allows(**s)) {
            return Err(Error::StepNotAllowed { step: profile.format_steps(&[bad]), profile: profile.to_string() });
        }
        Ok(PathWord { profile, steps })
    }

    /// Caller guarantees every step is in the profile's alphabet.
    pub(crate) fn from_trusted(profile: PathProfile, steps: Vec<Step>) -> Self {
        debug_assert!(steps.iter().all(|s| profile.allows(*s)));
        PathWord { profile, steps }
    }

    pub fn parse(profile: PathProfile, text: &str) -> Result<Self> {
        let steps = profile.parse_steps(text)?;
        Ok(PathWord { profile, steps })
    }

    pub fn profile(&self) -> &PathProfile {
        &self.profile
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

    /// Total horizontal extent: `#U + #D + a·#H`.
    pub fn order(&self) -> u64 {
        self.steps.iter().map(|&s| self.profile.width(s)).sum()
    }

    pub fn end_height(&self) -> i64 {
        self.steps.iter().map(|s| s.dy()).sum()
    }

    pub fn heights(&self) -> Vec<i64> {
        heights(&self.steps)
    }

    /// Lattice points at every step boundary.
    pub fn points(&self) -> Vec<LatticePoint> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = LatticePoint::new(0, 0);
        out.push(p);
        for &s in &self.steps {
            p.x += self.profile.width(s) as i64;
            p.y += s.dy();
            out.push(p);
        }
        out
    }

    pub fn classify(&self) -> Classification {
        classify_steps(&self.steps)
    }

    pub fn humps(&self) -> Result<Vec<Hump>> {
        if self.classify() == Classification::Invalid {
            return Err(Error::domain(format!("{self} does not end on the x-axis")));
        }
        Ok(find_humps(&self.profile, &self.steps))
    }

    pub fn peaks(&self) -> Result<Vec<Hump>> {
        Ok(self.humps()?.into_iter().filter(Hump::is_peak).collect())
    }

    pub fn first_non_horizontal(&self) -> Option<Step> {
        self.steps.iter().copied().find(|s| *s != Step::Horizontal)
    }

    pub fn has_up(&self) -> bool {
        self.steps.iter().any(|s| s.is_up())
    }

    /// Member of the super paths whose first non-horizontal step is an up step.
    pub fn is_super_positive_up(&self) -> bool {
        self.classify() != Classification::Invalid && matches!(self.first_non_horizontal(), Some(Step::Up(_)))
    }

    /// Steps in reverse order, each step kind unchanged.
    pub fn reversed(&self) -> PathWord {
        let mut steps = self.steps.clone();
        steps.reverse();
        PathWord { profile: self.profile.clone(), steps }
    }

    pub fn with_steps(&self, steps: Vec<Step>) -> Result<PathWord> {
        PathWord::new(self.profile.clone(), steps)
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            self.profile.format_step(s, f)?;
        }
        Ok(())
    }
}

pub fn reverse_word(word: &PathWord) -> PathWord {
    word.reversed()
}
