//! Words over `U = (0,1)` and `D = (1,0)` running from `(0,0)` to `(n,m)`.
//!
//! A word is Dyck when no lattice point lies strictly below the line
//! `y = (m/n)·x`. Everything is decided on the integer excess `m·x − n·y`:
//! positive excess means strictly below the diagonal.

use std::fmt;

use crate::error::{Error, Result};
use crate::path::LatticePoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NmStep {
    U,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NmClassification {
    Dyck,
    FreeOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NmWord {
    steps: Vec<NmStep>,
}

impl NmWord {
    pub fn new(steps: Vec<NmStep>) -> Self {
        NmWord { steps }
    }

    pub fn parse(text: &str) -> Result<Self> {
        text.char_indices()
            .map(|(i, c)| match c {
                'U' => Ok(NmStep::U),
                'D' => Ok(NmStep::D),
                other => {
                    Err(Error::Parse { position: i, message: format!("unexpected character {other:?} in (n,m)-word") })
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(NmWord::new)
    }

    pub fn steps(&self) -> &[NmStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of `D` steps.
    pub fn n(&self) -> u64 {
        self.steps.iter().filter(|s| **s == NmStep::D).count() as u64
    }

    /// Number of `U` steps.
    pub fn m(&self) -> u64 {
        self.steps.iter().filter(|s| **s == NmStep::U).count() as u64
    }

    pub fn points(&self) -> Vec<LatticePoint> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = LatticePoint::new(0, 0);
        out.push(p);
        for s in &self.steps {
            match s {
                NmStep::U => p.y += 1,
                NmStep::D => p.x += 1,
            }
            out.push(p);
        }
        out
    }

    /// `m·x − n·y` at every step boundary.
    pub fn excesses(&self) -> Vec<i64> {
        let (n, m) = (self.n() as i64, self.m() as i64);
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut e = 0i64;
        out.push(e);
        for s in &self.steps {
            e += match s {
                NmStep::U => -n,
                NmStep::D => m,
            };
            out.push(e);
        }
        out
    }

    pub fn classify(&self) -> NmClassification {
        if self.excesses().iter().all(|&e| e <= 0) {
            NmClassification::Dyck
        } else {
            NmClassification::FreeOnly
        }
    }

    pub fn is_dyck(&self) -> bool {
        self.classify() == NmClassification::Dyck
    }

    /// Peak points (the point between a `U` and the `D` right after it), left to right.
    pub fn peaks(&self) -> Vec<LatticePoint> {
        let points = self.points();
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == NmStep::U && w[1] == NmStep::D)
            .map(|(i, _)| points[i + 1])
            .collect()
    }

    pub fn peak_count(&self) -> usize {
        count_nm_peaks(&self.steps)
    }

    pub fn starts_up_ends_down(&self) -> bool {
        self.steps.first() == Some(&NmStep::U) && self.steps.last() == Some(&NmStep::D)
    }

    /// Rotation starting after step `i`: `u_{i+1} … u_{n+m} u_1 … u_i`.
    pub fn rotated(&self, i: usize) -> NmWord {
        let mut steps = self.steps.clone();
        if !steps.is_empty() {
            steps.rotate_left(i % self.steps.len());
        }
        NmWord { steps }
    }
}

pub(crate) fn count_nm_peaks(steps: &[NmStep]) -> usize {
    steps.windows(2).filter(|w| w[0] == NmStep::U && w[1] == NmStep::D).count()
}

impl fmt::Display for NmWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use fmt::Write;
        for s in &self.steps {
            f.write_char(match s {
                NmStep::U => 'U',
                NmStep::D => 'D',
            })?;
        }
        Ok(())
    }
}

pub fn nm_classify(word: &NmWord) -> NmClassification {
    word.classify()
}

pub fn nm_peaks(word: &NmWord) -> Vec<LatticePoint> {
    word.peaks()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> NmWord {
        NmWord::parse(s).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(w("UUDUD").classify(), NmClassification::Dyck);
        assert_eq!(w("DUUDU").classify(), NmClassification::FreeOnly);
        assert_eq!(w("UD").classify(), NmClassification::Dyck);
        assert_eq!((w("UUDUD").n(), w("UUDUD").m()), (2, 3));
    }

    #[test]
    fn peaks_examples() {
        assert_eq!(w("UUDUD").peaks(), vec![LatticePoint::new(0, 2), LatticePoint::new(1, 3)]);
        assert_eq!(w("UUUDD").peaks(), vec![LatticePoint::new(0, 3)]);
        assert!(w("DDUU").peaks().is_empty());
    }

    #[test]
    fn rotation_follows_class_indexing() {
        let p = w("DUUDU");
        assert_eq!(p.rotated(1).to_string(), "UUDUD");
        assert_eq!(p.rotated(5), p);
    }

    #[test]
    fn parse_rejects_horizontal() {
        assert!(NmWord::parse("UHD").is_err());
    }
}
