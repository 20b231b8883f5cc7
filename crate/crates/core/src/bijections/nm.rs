//! Cyclic classes, the unique Dyck rotation, the peak bijection onto free
//! words that start with `U` and end with `D`, and the chain
//! `(n, kn+1)`-Dyck → `(n, kn)`-Dyck → `k`-ary path.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::nm::{NmStep, NmWord};
use crate::path::{PathProfile, PathWord, Step};

/// A word written as `U^{a_1} D^{b_1} … U^{a_j} D^{b_j}` with every run nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    /// Fails unless the word starts with `U` and ends with `D`.
    pub fn of(word: &NmWord) -> Result<Self> {
        if !word.is_empty() && !word.starts_up_ends_down() {
            return Err(Error::domain(format!("{word} must start with U and end with D")));
        }
        let mut blocks = Vec::new();
        let steps = word.steps();
        let mut i = 0;
        while i < steps.len() {
            let ups = steps[i..].iter().take_while(|s| **s == NmStep::U).count();
            let downs = steps[i + ups..].iter().take_while(|s| **s == NmStep::D).count();
            blocks.push((ups, downs));
            i += ups + downs;
        }
        Ok(BlockDecomposition { blocks })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Step offset where block `i` (0-based) starts.
    pub fn block_start(&self, i: usize) -> usize {
        self.blocks[..i].iter().map(|(u, d)| u + d).sum()
    }

    pub fn to_word(&self) -> NmWord {
        let mut steps = Vec::new();
        for &(u, d) in &self.blocks {
            steps.extend(std::iter::repeat_n(NmStep::U, u));
            steps.extend(std::iter::repeat_n(NmStep::D, d));
        }
        NmWord::new(steps)
    }
}

/// Distinct rotations of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicClass {
    pub word: NmWord,
    /// `(i, P_i)` where `P_i` starts after step `i`; first occurrence of each rotation.
    pub members: Vec<(usize, NmWord)>,
}

impl CyclicClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &NmWord) -> bool {
        self.members.iter().any(|(_, m)| m == w)
    }
}

pub fn cyclic_class(word: &NmWord) -> Result<CyclicClass> {
    if word.is_empty() {
        return Err(Error::domain("the cyclic class of the empty word is undefined"));
    }
    let len = word.len();
    let mut members: Vec<(usize, NmWord)> = Vec::with_capacity(len);
    for i in 1..=len {
        let r = word.rotated(i);
        if !members.iter().any(|(_, m)| *m == r) {
            members.push((i, r));
        }
    }
    Ok(CyclicClass { word: word.clone(), members })
}

fn require_coprime(word: &NmWord) -> Result<(u64, u64)> {
    let (n, m) = (word.n(), word.m());
    if n == 0 || m == 0 || n.gcd(&m) != 1 {
        return Err(Error::NotCoprime { n, m });
    }
    Ok((n, m))
}

/// Index of the unique point of maximal excess when that excess is positive.
fn deepest_point(word: &NmWord) -> Option<usize> {
    let ex = word.excesses();
    let max = *ex.iter().max().expect("excesses are never empty");
    if max <= 0 {
        return None;
    }
    let mut at = ex.iter().enumerate().filter(|(_, e)| **e == max).map(|(i, _)| i);
    let v = at.next().expect("maximum is attained");
    assert!(at.next().is_none(), "maximal excess is attained once when gcd(n, m) = 1");
    Some(v)
}

/// The unique Dyck word in the class of `word`, and the split offset used.
pub fn dyck_representative(word: &NmWord) -> Result<(NmWord, usize)> {
    require_coprime(word)?;
    Ok(match deepest_point(word) {
        Some(v) => (word.rotated(v), v),
        None => (word.clone(), 0),
    })
}

/// Rotates the blocks of a Dyck word so the block holding the chosen peak
/// (1-based) comes last.
pub fn phi_hat(word: &NmWord, peak_index: usize) -> Result<NmWord> {
    require_coprime(word)?;
    if !word.is_dyck() {
        return Err(Error::domain(format!("{word} is not a Dyck word")));
    }
    let blocks = BlockDecomposition::of(word)?;
    if peak_index == 0 || peak_index > blocks.len() {
        return Err(Error::IndexOutOfRange { index: peak_index, len: blocks.len() });
    }
    Ok(word.rotated(blocks.block_start(peak_index)))
}

/// Inverse of [`phi_hat`]: the Dyck word and the 1-based index of the marked peak.
pub fn phi_hat_inverse(word: &NmWord) -> Result<(NmWord, usize)> {
    require_coprime(word)?;
    let blocks = BlockDecomposition::of(word)?;
    let j = blocks.len();
    match deepest_point(word) {
        None => Ok((word.clone(), j)),
        Some(v) => {
            // v is a valley, i.e. the junction after block i
            let i = (1..j).find(|&i| blocks.block_start(i) == v).expect("the deepest point joins two blocks");
            // the last input block lands at position j − i of the output
            Ok((word.rotated(v), j - i))
        }
    }
}

fn kary_shape(word: &NmWord, extra: u64) -> Option<u64> {
    let (n, m) = (word.n(), word.m());
    if n == 0 || m < extra || !(m - extra).is_multiple_of(n) || (m - extra) / n == 0 {
        return None;
    }
    Some((m - extra) / n)
}

/// `(n, kn+1)`-Dyck word → `(n, kn)`-Dyck word by deleting the first up step.
pub fn strip_first_up(word: &NmWord) -> Result<NmWord> {
    kary_shape(word, 1).ok_or_else(|| Error::domain(format!("{word} is not of shape (n, kn+1) with n, k >= 1")))?;
    if !word.is_dyck() {
        return Err(Error::domain(format!("{word} is not a Dyck word")));
    }
    Ok(NmWord::new(word.steps()[1..].to_vec()))
}

/// Inverse of [`strip_first_up`].
pub fn prepend_up(word: &NmWord) -> NmWord {
    let mut steps = Vec::with_capacity(word.len() + 1);
    steps.push(NmStep::U);
    steps.extend_from_slice(word.steps());
    NmWord::new(steps)
}

/// `(n, kn)`-Dyck word → `k`-ary path of order `(k+1)n`: reverse, then swap `U` and `D`.
pub fn dyck_to_kary(word: &NmWord) -> Result<PathWord> {
    let k =
        kary_shape(word, 0).ok_or_else(|| Error::domain(format!("{word} is not of shape (n, kn) with n, k >= 1")))?;
    if !word.is_dyck() {
        return Err(Error::domain(format!("{word} is not a Dyck word")));
    }
    let k = u32::try_from(k).map_err(|_| Error::domain("k too large"))?;
    let steps = word
        .steps()
        .iter()
        .rev()
        .map(|s| match s {
            NmStep::U => Step::Down,
            NmStep::D => Step::Up(k),
        })
        .collect();
    Ok(PathWord::from_trusted(PathProfile::kary(k)?, steps))
}

/// Inverse of [`dyck_to_kary`].
pub fn kary_to_dyck(word: &PathWord) -> Result<NmWord> {
    if word.profile().single_rise().is_none() {
        return Err(Error::domain("k-ary paths have a single rise"));
    }
    word.steps()
        .iter()
        .rev()
        .map(|s| match s {
            Step::Up(_) => Ok(NmStep::D),
            Step::Down => Ok(NmStep::U),
            Step::Horizontal => Err(Error::domain("k-ary paths have no horizontal steps")),
        })
        .collect::<Result<Vec<_>>>()
        .map(NmWord::new)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::Classification;

    fn w(s: &str) -> NmWord {
        NmWord::parse(s).unwrap()
    }

    #[test]
    fn cyclic_class_examples() {
        let c = cyclic_class(&w("DUUDU")).unwrap();
        let members: Vec<String> = c.members.iter().map(|(_, m)| m.to_string()).collect();
        assert_eq!(members, ["UUDUD", "UDUDU", "DUDUU", "UDUUD", "DUUDU"]);
        assert_eq!(cyclic_class(&w("UDUD")).unwrap().len(), 2);
        assert_eq!(cyclic_class(&w("UD")).unwrap().len(), 2);
        assert!(cyclic_class(&w("")).is_err());
    }

    #[test]
    fn dyck_representative_examples() {
        let (r, off) = dyck_representative(&w("DUUDU")).unwrap();
        assert_eq!((r.to_string().as_str(), off), ("UUDUD", 1));
        let (r, off) = dyck_representative(&w("UUDUD")).unwrap();
        assert_eq!((r.to_string().as_str(), off), ("UUDUD", 0));
        assert_eq!(dyck_representative(&w("UDUD")), Err(Error::NotCoprime { n: 2, m: 2 }));
        assert!(dyck_representative(&w("UUU")).is_err());
    }

    #[test]
    fn phi_hat_examples() {
        assert_eq!(phi_hat(&w("UUDUD"), 1).unwrap().to_string(), "UDUUD");
        assert_eq!(phi_hat(&w("UUDUD"), 2).unwrap().to_string(), "UUDUD");
        assert_eq!(phi_hat(&w("UUUDD"), 1).unwrap().to_string(), "UUUDD");
        assert!(phi_hat(&w("UUDUD"), 3).is_err());
        assert!(phi_hat(&w("UUDUD"), 0).is_err());
        assert!(phi_hat(&w("UDUUD"), 1).is_err());
    }

    #[test]
    fn phi_hat_inverse_examples() {
        // excesses 0,−2,1,−1,−3,0: the deepest point (1,1) joins UD | UUD
        let (p, i) = phi_hat_inverse(&w("UDUUD")).unwrap();
        assert_eq!((p.to_string().as_str(), i), ("UUDUD", 1));
        let (p, i) = phi_hat_inverse(&w("UUUDD")).unwrap();
        assert_eq!((p.to_string().as_str(), i), ("UUUDD", 1));
        let (p, i) = phi_hat_inverse(&w("UUDUD")).unwrap();
        assert_eq!((p.to_string().as_str(), i), ("UUDUD", 2));
        assert!(phi_hat_inverse(&w("DUUDU")).is_err());
    }

    #[test]
    fn strip_examples() {
        assert_eq!(strip_first_up(&w("UUUUUDD")).unwrap().to_string(), "UUUUDD");
        assert_eq!(strip_first_up(&w("UUUUDUD")).unwrap().to_string(), "UUUDUD");
        let x = w("UUUUUDD");
        assert_eq!(prepend_up(&strip_first_up(&x).unwrap()), x);
        assert!(strip_first_up(&w("UUUUDD")).is_err());
        assert!(strip_first_up(&w("DUUUUUU")).is_err());
    }

    #[test]
    fn kary_examples() {
        let p = dyck_to_kary(&w("UUUUDD")).unwrap();
        assert_eq!(p.to_string(), "UUDDDD");
        assert_eq!(p.classify(), Classification::Strict);
        assert_eq!(p.order(), 6);
        assert_eq!(kary_to_dyck(&p).unwrap(), w("UUUUDD"));
        let p = dyck_to_kary(&w("UUDUUD")).unwrap();
        assert_eq!(p.to_string(), "UDDUDD");
        assert_eq!(p.classify(), Classification::Strict);
        assert_eq!(p.peaks().unwrap().len(), w("UUDUUD").peak_count());
        assert!(dyck_to_kary(&w("UDUD")).is_ok());
        assert!(dyck_to_kary(&w("DUUDUU")).is_err());
    }
}
