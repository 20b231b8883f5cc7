//! Bijections on `(k,a)`- and `(S,a)`-paths.
//!
//! * `psi_expand` / `psi_contract`: the 1-to-`(k+1)` correspondence between
//!   super paths whose first non-horizontal step is up and super paths that
//!   contain an up step.
//! * `phi` / `phi_inverse`: strict paths with a marked hump ↔ super paths
//!   whose first non-horizontal step is up.
//! * `hump_shrink` / `hump_grow`: remove or insert one horizontal step in the
//!   designated hump, moving between orders `n` and `n − a`.
//!
//! Anchors live on step boundaries: anchor index `i` is the point after `i`
//! steps.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::{
    classify_steps, find_humps, heights, Classification, HorizontalWidth, Hump, LatticePoint, PathWord, Step,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub index: usize,
    #[serde(flatten)]
    pub point: LatticePoint,
}

/// A half-open step range `[start, end)` of the source word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub label: &'static str,
    pub start: usize,
    pub end: usize,
    pub reversed: bool,
}

/// Anchor points and moved segments of one application of `phi` or `phi_inverse`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionTrace {
    pub o: Anchor,
    pub a: Anchor,
    pub b: Anchor,
    pub c: Anchor,
    pub n: Anchor,
    /// Segments of the source word in the order they are emitted.
    pub segments: Vec<Segment>,
}

impl BijectionTrace {
    fn new(points: &[LatticePoint], [a, b, c]: [usize; 3], segments: Vec<Segment>) -> Self {
        let anchor = |index: usize| Anchor { index, point: points[index] };
        BijectionTrace { o: anchor(0), a: anchor(a), b: anchor(b), c: anchor(c), n: anchor(points.len() - 1), segments }
    }

    /// `{"anchors": {"A", "B", "C"}, "segments": [[start, end], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "anchors": { "A": self.a, "B": self.b, "C": self.c },
            "segments": self.segments.iter().map(|s| [s.start, s.end]).collect::<Vec<_>>(),
        })
    }
}

/// `H^l U M_1 D M_2 D … D M_k D tail` for a word whose first non-horizontal
/// step is up; each `M_i` is strict and `tail` is an arbitrary super path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiDecomposition {
    pub leading_horizontals: usize,
    pub rise: u32,
    pub components: Vec<Vec<Step>>,
    pub tail: Vec<Step>,
}

impl PsiDecomposition {
    pub fn reassemble(&self) -> Vec<Step> {
        let mut out = vec![Step::Horizontal; self.leading_horizontals];
        out.push(Step::Up(self.rise));
        for m in &self.components {
            out.extend_from_slice(m);
            out.push(Step::Down);
        }
        out.extend_from_slice(&self.tail);
        out
    }

    /// The `i`-th image (1-based): `H^l D M̄_1 … D M̄_{i−1} U M_i D … D M_k D tail`.
    pub fn image(&self, i: usize) -> Vec<Step> {
        let k = self.components.len();
        assert!((1..=k + 1).contains(&i));
        let mut out = vec![Step::Horizontal; self.leading_horizontals];
        for m in &self.components[..i - 1] {
            out.push(Step::Down);
            out.extend(m.iter().rev());
        }
        out.push(Step::Up(self.rise));
        for (offset, m) in self.components[i - 1..].iter().enumerate() {
            if offset > 0 {
                out.push(Step::Down);
            }
            out.extend_from_slice(m);
        }
        if i <= k {
            out.push(Step::Down);
        }
        out.extend_from_slice(&self.tail);
        out
    }
}

fn require_super(word: &PathWord) -> Result<()> {
    if word.classify() == Classification::Invalid {
        return Err(Error::domain(format!("{word} does not end on the x-axis")));
    }
    Ok(())
}

fn require_positive_up(word: &PathWord) -> Result<()> {
    require_super(word)?;
    if !word.is_super_positive_up() {
        return Err(Error::domain(format!("first non-horizontal step of {word} is not an up step")));
    }
    Ok(())
}

fn require_single_rise(word: &PathWord) -> Result<u32> {
    word.profile().single_rise().ok_or_else(|| {
        Error::domain(format!("the (k+1) correspondence needs a single rise, profile is {}", word.profile()))
    })
}

pub fn psi_decompose(word: &PathWord) -> Result<PsiDecomposition> {
    let k = require_single_rise(word)?;
    require_positive_up(word)?;
    let steps = word.steps();
    let l = steps.iter().take_while(|s| **s == Step::Horizontal).count();
    let mut pos = l + 1;
    let mut h = i64::from(k);
    let mut components = Vec::with_capacity(k as usize);
    for _ in 0..k {
        let level = h;
        let start = pos;
        // the first step that drops below `level` is necessarily a down step
        while h >= level {
            h += steps[pos].dy();
            pos += 1;
        }
        components.push(steps[start..pos - 1].to_vec());
    }
    Ok(PsiDecomposition { leading_horizontals: l, rise: k, components, tail: steps[pos..].to_vec() })
}

/// The `k+1` super paths `P_1 = P, P_2, …, P_{k+1}` associated with `word`.
pub fn psi_expand(word: &PathWord) -> Result<Vec<PathWord>> {
    let dec = psi_decompose(word)?;
    Ok((1..=dec.components.len() + 1).map(|i| PathWord::from_trusted(word.profile().clone(), dec.image(i))).collect())
}

/// The unique `P` with `word ∈ psi_expand(P)`.
pub fn psi_contract(word: &PathWord) -> Result<PathWord> {
    let k = require_single_rise(word)?;
    require_super(word)?;
    let steps = word.steps();
    let hs = heights(steps);
    let u = (0..steps.len())
        .find(|&i| steps[i].is_up() && hs[i + 1] >= 0)
        .ok_or_else(|| Error::domain(format!("{word} contains no up step")))?;
    let l = steps.iter().take_while(|s| **s == Step::Horizontal).count();
    let depth = (-hs[u]) as usize;
    debug_assert!(depth <= k as usize);

    // Before the up step: D M̄_1 D M̄_2 … D M̄_depth with M̄_j ≤ −j, so the D
    // opening M̄_j is the last step landing on level −j (for j ≤ depth).
    let mut openers = vec![0usize; depth];
    for i in l..u {
        let level = -hs[i + 1];
        if steps[i] == Step::Down && level >= 1 && level as usize <= depth {
            openers[level as usize - 1] = i;
        }
    }
    let mut out = vec![Step::Horizontal; l];
    out.push(Step::Up(k));
    for j in 0..depth {
        let end = if j + 1 < depth { openers[j + 1] } else { u };
        out.extend(steps[openers[j] + 1..end].iter().rev());
        out.push(Step::Down);
    }
    out.extend_from_slice(&steps[u + 1..]);
    Ok(PathWord::from_trusted(word.profile().clone(), out))
}

/// Maps a strict path with a marked hump to a super path whose first
/// non-horizontal step is up.
pub fn phi(word: &PathWord, hump_index: usize) -> Result<(PathWord, BijectionTrace)> {
    if word.classify() != Classification::Strict {
        return Err(Error::domain(format!("{word} is not a strict path")));
    }
    let humps = word.humps()?;
    let hump = humps.get(hump_index).ok_or(Error::IndexOutOfRange { index: hump_index, len: humps.len() })?;
    let steps = word.steps();
    let hs = heights(steps);
    let p = hump.start_index + 1;

    // A: first up step of the down-free run that ends at p.
    let mut a = hump.start_index;
    for i in (0..hump.start_index).rev() {
        match steps[i] {
            Step::Down => break,
            Step::Up(_) => a = i,
            Step::Horizontal => {}
        }
    }
    let b = (p + 1..=steps.len())
        .find(|&i| hs[i] == hs[a])
        .expect("down steps descend by one, so the path returns to the height of A after p");
    let c = (0..=a).rev().find(|&i| hs[i] == 0).expect("O is on the axis");

    let mut out = Vec::with_capacity(steps.len());
    out.extend_from_slice(&steps[..c]);
    out.extend_from_slice(&steps[a..b]);
    out.extend(steps[c..a].iter().rev());
    out.extend(steps[b..].iter().rev());

    let trace = BijectionTrace::new(
        &word.points(),
        [a, b, c],
        vec![
            Segment { label: "OC", start: 0, end: c, reversed: false },
            Segment { label: "AB", start: a, end: b, reversed: false },
            Segment { label: "CA", start: c, end: a, reversed: true },
            Segment { label: "BN", start: b, end: steps.len(), reversed: true },
        ],
    );
    Ok((PathWord::from_trusted(word.profile().clone(), out), trace))
}

/// Anchors `A` and `B` of a super path whose first non-horizontal step is up.
fn inverse_anchors(steps: &[Step], hs: &[i64]) -> (usize, usize) {
    let b = match (0..steps.len()).find(|&i| steps[i] == Step::Down && hs[i] == 0) {
        None => steps.len(),
        Some(first_below) => {
            let mut b = first_below;
            while steps[b - 1] == Step::Horizontal {
                b -= 1;
            }
            assert_eq!(steps[b - 1], Step::Down, "B follows a down step");
            b
        }
    };
    let a = (0..b)
        .rev()
        .find(|&i| hs[i] == 0 && steps[i].is_up())
        .expect("the first non-horizontal step is an up step from the axis");
    (a, b)
}

/// Leftmost hump lying entirely inside `steps[lo..hi]`.
fn leftmost_hump_in(humps: &[Hump], lo: usize, hi: usize) -> Option<Hump> {
    humps.iter().copied().find(|h| h.start_index >= lo && h.end_index() < hi)
}

/// Inverse of [`phi`]: returns the strict path and the index of the marked hump.
pub fn phi_inverse(word: &PathWord) -> Result<(PathWord, usize, BijectionTrace)> {
    require_positive_up(word)?;
    let steps = word.steps();
    let hs = heights(steps);
    let (a, b) = inverse_anchors(steps, &hs);
    let c = (b..=steps.len()).max_by_key(|&i| (hs[i], std::cmp::Reverse(i))).expect("range contains B");

    let humps = find_humps(word.profile(), steps);
    let block_hump = leftmost_hump_in(&humps, a, b).expect("segment AB returns to the axis, so it holds a hump");

    let mut out = Vec::with_capacity(steps.len());
    out.extend_from_slice(&steps[..a]);
    out.extend(steps[b..c].iter().rev());
    out.extend_from_slice(&steps[a..b]);
    out.extend(steps[c..].iter().rev());
    let strict = PathWord::from_trusted(word.profile().clone(), out);

    let start_in_strict = a + (c - b) + (block_hump.start_index - a);
    let hump_index = strict
        .humps()?
        .iter()
        .position(|h| h.start_index == start_in_strict)
        .expect("the carried block keeps its hump");

    let trace = BijectionTrace::new(
        &word.points(),
        [a, b, c],
        vec![
            Segment { label: "OA", start: 0, end: a, reversed: false },
            Segment { label: "BC", start: b, end: c, reversed: true },
            Segment { label: "AB", start: a, end: b, reversed: false },
            Segment { label: "CN", start: c, end: steps.len(), reversed: true },
        ],
    );
    Ok((strict, hump_index, trace))
}

/// The hump that `phi_inverse` marks: leftmost hump of segment `AB`.
pub fn designated_hump(word: &PathWord) -> Result<Hump> {
    require_positive_up(word)?;
    let steps = word.steps();
    let hs = heights(steps);
    let (a, b) = inverse_anchors(steps, &hs);
    let humps = find_humps(word.profile(), steps);
    Ok(leftmost_hump_in(&humps, a, b).expect("segment AB holds a hump"))
}

fn require_finite(word: &PathWord) -> Result<()> {
    if word.profile().horizontal() == HorizontalWidth::Disallowed {
        return Err(Error::domain("horizontal steps are disallowed (a = inf)"));
    }
    Ok(())
}

/// Deletes the first horizontal step of the designated hump (order `n` → `n − a`).
pub fn hump_shrink(word: &PathWord) -> Result<PathWord> {
    require_finite(word)?;
    let hump = designated_hump(word)?;
    if hump.is_peak() {
        return Err(Error::domain(format!("designated hump of {word} is a peak")));
    }
    let mut steps = word.steps().to_vec();
    steps.remove(hump.start_index + 1);
    Ok(PathWord::from_trusted(word.profile().clone(), steps))
}

/// Inserts a horizontal step right after the up step of the designated hump
/// (order `n − a` → `n`).
pub fn hump_grow(word: &PathWord) -> Result<PathWord> {
    require_finite(word)?;
    let hump = designated_hump(word)?;
    let mut steps = word.steps().to_vec();
    steps.insert(hump.start_index + 1, Step::Horizontal);
    debug_assert_ne!(classify_steps(&steps), Classification::Invalid);
    Ok(PathWord::from_trusted(word.profile().clone(), steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::PathProfile;

    fn w(k: u32, a: u32, s: &str) -> PathWord {
        PathWord::parse(PathProfile::ka(k, HorizontalWidth::Finite(a)).unwrap(), s).unwrap()
    }

    fn strs(ws: &[PathWord]) -> Vec<String> {
        ws.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn psi_expand_examples() {
        assert_eq!(strs(&psi_expand(&w(1, 1, "UD")).unwrap()), ["UD", "DU"]);
        assert_eq!(strs(&psi_expand(&w(2, 1, "UDDH")).unwrap()), ["UDDH", "DUDH", "DDUH"]);
        assert_eq!(strs(&psi_expand(&w(1, 1, "HUD")).unwrap()), ["HUD", "HDU"]);
    }

    #[test]
    fn psi_contract_examples() {
        assert_eq!(psi_contract(&w(2, 1, "DUDH")).unwrap().to_string(), "UDDH");
        assert_eq!(psi_contract(&w(1, 1, "HDU")).unwrap().to_string(), "HUD");
        assert_eq!(psi_contract(&w(1, 1, "UD")).unwrap().to_string(), "UD");
        assert!(psi_contract(&w(1, 1, "HH")).is_err());
    }

    #[test]
    fn psi_decomposition_reassembles() {
        let p = w(2, 1, "HUUDDHDDUDD");
        let dec = psi_decompose(&p).unwrap();
        assert_eq!(dec.leading_horizontals, 1);
        assert_eq!(dec.reassemble(), p.steps());
        assert_eq!(dec.image(1), p.steps());
    }

    #[test]
    fn psi_rejects_outside_domain() {
        assert!(psi_expand(&w(1, 1, "DU")).is_err());
        let multi = PathProfile::new([1, 2], HorizontalWidth::Finite(1)).unwrap();
        let p = PathWord::parse(multi, "U(1)D").unwrap();
        assert!(psi_expand(&p).is_err());
    }

    #[test]
    fn phi_examples() {
        let (s, t) = phi(&w(1, 1, "UDUD"), 0).unwrap();
        assert_eq!(s.to_string(), "UDDU");
        assert_eq!((t.a.index, t.b.index, t.c.index), (0, 2, 0));
        assert_eq!(t.b.point, LatticePoint::new(2, 0));

        let (s, t) = phi(&w(1, 1, "UDUD"), 1).unwrap();
        assert_eq!(s.to_string(), "UDUD");
        assert_eq!((t.a.index, t.b.index, t.c.index), (2, 4, 2));

        let (s, t) = phi(&w(1, 1, "UHD"), 0).unwrap();
        assert_eq!(s.to_string(), "UHD");
        assert_eq!((t.a.index, t.b.index, t.c.index), (0, 3, 0));
    }

    #[test]
    fn phi_errors() {
        assert!(matches!(phi(&w(1, 1, "DU"), 0), Err(Error::Domain(_))));
        assert!(matches!(phi(&w(1, 1, "UD"), 1), Err(Error::IndexOutOfRange { index: 1, len: 1 })));
    }

    #[test]
    fn phi_inverse_examples() {
        let (l, h, _) = phi_inverse(&w(1, 1, "UDDU")).unwrap();
        assert_eq!((l.to_string().as_str(), h), ("UDUD", 0));
        let (l, h, _) = phi_inverse(&w(1, 1, "UHD")).unwrap();
        assert_eq!((l.to_string().as_str(), h), ("UHD", 0));
        let (l, h, _) = phi_inverse(&w(1, 1, "UD")).unwrap();
        assert_eq!((l.to_string().as_str(), h), ("UD", 0));
        assert!(phi_inverse(&w(1, 1, "DU")).is_err());
    }

    #[test]
    fn shrink_and_grow_examples() {
        assert_eq!(hump_shrink(&w(1, 1, "UHD")).unwrap().to_string(), "UD");
        let s = hump_shrink(&w(1, 1, "UHHD")).unwrap();
        assert_eq!((s.to_string().as_str(), s.order()), ("UHD", 3));
        assert!(matches!(hump_shrink(&w(1, 1, "UD")), Err(Error::Domain(_))));
        assert_eq!(hump_grow(&w(1, 1, "UD")).unwrap().to_string(), "UHD");
        assert_eq!(hump_grow(&w(1, 1, "UHD")).unwrap().to_string(), "UHHD");
        let s = w(1, 1, "UHD");
        assert_eq!(hump_grow(&hump_shrink(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn shrink_rejects_infinite_width() {
        let p = PathWord::parse(PathProfile::kary(1).unwrap(), "UD").unwrap();
        assert!(hump_shrink(&p).is_err());
        assert!(hump_grow(&p).is_err());
    }

    #[test]
    fn trace_json_shape() {
        let (_, t) = phi(&w(1, 1, "UDUD"), 0).unwrap();
        let j = t.to_json();
        assert_eq!(j["anchors"]["B"]["index"], 2);
        assert_eq!(j["anchors"]["B"]["x"], 2);
        assert_eq!(j["segments"][1], serde_json::json!([0, 2]));
    }
}
