//! Identity verification runs and count tables.
//!
//! Each identity is checked instance by instance: one [`CountReport`] per
//! parameter tuple, holding an exact left-hand side and right-hand side.
//! Bijection checks report `lhs` = number of elements whose round trip
//! succeeded and `rhs` = number of elements examined, so a pass means
//! zero failures.

mod checks;
mod range;
mod table;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::HorizontalWidth;

pub use range::{parse_u64_list, parse_width_list};
pub use table::{hump_total_rows, kary_peak_rows, rational_narayana_rows, HumpTotalRow, KaryPeakRow, NarayanaRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    Eq2,
    Eq3,
    Eq4,
    Eq5,
    Eq7,
    Eq8,
    Eq9,
    Eq10,
    Eq11,
    Eq12,
    Eq13,
    Lemma2Class,
    PhiRoundtrip,
    PhihatRoundtrip,
    PsiPartition,
    ShrinkBijection,
    Lemma4Chain,
    SaCorollary,
}

impl IdentityId {
    pub const ALL: [IdentityId; 18] = [
        IdentityId::Eq2,
        IdentityId::Eq3,
        IdentityId::Eq4,
        IdentityId::Eq5,
        IdentityId::Eq7,
        IdentityId::Eq8,
        IdentityId::Eq9,
        IdentityId::Eq10,
        IdentityId::Eq11,
        IdentityId::Eq12,
        IdentityId::Eq13,
        IdentityId::Lemma2Class,
        IdentityId::PhiRoundtrip,
        IdentityId::PhihatRoundtrip,
        IdentityId::PsiPartition,
        IdentityId::ShrinkBijection,
        IdentityId::Lemma4Chain,
        IdentityId::SaCorollary,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Eq2 => "eq2",
            IdentityId::Eq3 => "eq3",
            IdentityId::Eq4 => "eq4",
            IdentityId::Eq5 => "eq5",
            IdentityId::Eq7 => "eq7",
            IdentityId::Eq8 => "eq8",
            IdentityId::Eq9 => "eq9",
            IdentityId::Eq10 => "eq10",
            IdentityId::Eq11 => "eq11",
            IdentityId::Eq12 => "eq12",
            IdentityId::Eq13 => "eq13",
            IdentityId::Lemma2Class => "lemma2-class",
            IdentityId::PhiRoundtrip => "phi-roundtrip",
            IdentityId::PhihatRoundtrip => "phihat-roundtrip",
            IdentityId::PsiPartition => "psi-partition",
            IdentityId::ShrinkBijection => "shrink-bijection",
            IdentityId::Lemma4Chain => "lemma4-chain",
            IdentityId::SaCorollary => "sa-corollary",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::usage(format!("unknown identity {s:?}")))
    }
}

/// One parameter tuple. Unused fields stay `None` and are not reported.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Instance {
    pub k: Option<u32>,
    pub rises: Option<Vec<u32>>,
    pub a: Option<HorizontalWidth>,
    pub n: Option<u64>,
    pub m: Option<u64>,
    pub j: Option<u64>,
}

impl Instance {
    fn n(&self) -> u64 {
        self.n.expect("instance carries n")
    }

    fn m(&self) -> u64 {
        self.m.expect("instance carries m")
    }

    fn k(&self) -> u32 {
        self.k.expect("instance carries k")
    }

    fn a(&self) -> HorizontalWidth {
        self.a.expect("instance carries a")
    }

    fn j(&self) -> u64 {
        self.j.expect("instance carries j")
    }

    /// `k=1 a=inf n=4` style rendering.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(r) = &self.rises {
            let r: Vec<String> = r.iter().map(u32::to_string).collect();
            parts.push(format!("rises={}", r.join("/")));
        }
        if let Some(a) = self.a {
            parts.push(format!("a={a}"));
        }
        for (name, v) in [("n", self.n), ("m", self.m), ("j", self.j)] {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        parts.join(" ")
    }
}

impl Serialize for Instance {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        if let Some(k) = self.k {
            map.serialize_entry("k", &k)?;
        }
        if let Some(r) = &self.rises {
            map.serialize_entry("rises", r)?;
        }
        match self.a {
            Some(HorizontalWidth::Finite(a)) => map.serialize_entry("a", &a)?,
            Some(HorizontalWidth::Disallowed) => map.serialize_entry("a", "inf")?,
            None => {}
        }
        for (name, v) in [("n", self.n), ("m", self.m), ("j", self.j)] {
            if let Some(v) = v {
                map.serialize_entry(name, &v)?;
            }
        }
        map.end()
    }
}

fn serialize_decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// One verified identity instance.
#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub id: &'static str,
    pub params: Instance,
    #[serde(serialize_with = "serialize_decimal")]
    pub lhs: BigUint,
    #[serde(serialize_with = "serialize_decimal")]
    pub rhs: BigUint,
    pub pass: bool,
    pub elapsed_ms: f64,
}

impl CountReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub const CSV_HEADER: &'static str = "id,params,lhs,rhs,pass,elapsed_ms";

    pub fn to_csv_row(&self) -> String {
        format!("{},{},{},{},{},{}", self.id, self.params.describe(), self.lhs, self.rhs, self.pass, self.elapsed_ms)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn of(reports: &[CountReport]) -> Self {
        let passed = reports.iter().filter(|r| r.pass).count();
        Summary { total: reports.len(), passed, failed: reports.len() - passed }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

/// Parameter ranges for a verification run. Empty fields fall back to the
/// identity's default range.
#[derive(Debug, Clone, Default)]
pub struct Ranges {
    pub k: Option<Vec<u64>>,
    pub a: Option<Vec<HorizontalWidth>>,
    pub n: Option<Vec<u64>>,
    pub m: Option<Vec<u64>>,
    pub j: Option<Vec<u64>>,
    pub max_sum: Option<u64>,
    pub rises: Option<Vec<u32>>,
}

fn to_u32(values: &[u64], name: &str) -> Result<Vec<u32>> {
    values
        .iter()
        .map(|&v| {
            u32::try_from(v)
                .ok()
                .filter(|&v| v >= 1)
                .ok_or_else(|| Error::usage(format!("--{name} values must be positive, got {v}")))
        })
        .collect()
}

/// `(n, m)` pairs with `n, m ≥ 1`, either from `--max-sum` or from explicit `--n`/`--m` ranges.
fn nm_pairs(r: &Ranges, default_max: u64, coprime_only: bool) -> Vec<(u64, u64)> {
    use num_integer::Integer;
    let mut pairs = Vec::new();
    match (&r.n, &r.m, r.max_sum) {
        (Some(ns), Some(ms), None) => {
            for &n in ns {
                for &m in ms {
                    pairs.push((n, m));
                }
            }
        }
        _ => {
            let max = r.max_sum.unwrap_or(default_max);
            for total in 2..=max {
                for n in 1..total {
                    pairs.push((n, total - n));
                }
            }
        }
    }
    pairs.retain(|&(n, m)| n >= 1 && m >= 1 && (!coprime_only || n.gcd(&m) == 1));
    pairs
}

/// Expands ranges into the canonical, ordered list of instances for `id`.
pub fn instances(id: IdentityId, r: &Ranges) -> Result<Vec<Instance>> {
    use IdentityId::*;
    let range = |v: &Option<Vec<u64>>, lo: u64, hi: u64| v.clone().unwrap_or_else(|| (lo..=hi).collect());
    let ks = |default_hi: u64| to_u32(&range(&r.k, 1, default_hi), "k");
    let widths = |default: Vec<HorizontalWidth>| r.a.clone().unwrap_or(default);
    let finite_12 = vec![HorizontalWidth::Finite(1), HorizontalWidth::Finite(2)];

    let ka_grid = |ks: Vec<u32>, widths: Vec<HorizontalWidth>, ns: Vec<u64>| {
        let mut out = Vec::new();
        for &k in &ks {
            for &a in &widths {
                for &n in &ns {
                    out.push(Instance { k: Some(k), a: Some(a), n: Some(n), ..Default::default() });
                }
            }
        }
        out
    };

    Ok(match id {
        Eq2 => range(&r.n, 1, 12).into_iter().map(|n| Instance { n: Some(n), ..Default::default() }).collect(),
        Eq3 => range(&r.n, 0, 12).into_iter().map(|n| Instance { n: Some(n), ..Default::default() }).collect(),
        Eq4 | Eq7 => ka_grid(ks(3)?, widths(finite_12), range(&r.n, 0, 10)),
        Eq5 => ka_grid(ks(3)?, widths(finite_12), range(&r.n, 1, 10)),
        PsiPartition => ka_grid(ks(3)?, widths(finite_12), range(&r.n, 0, 8)),
        ShrinkBijection => {
            let widths = widths(finite_12);
            if widths.contains(&HorizontalWidth::Disallowed) {
                return Err(Error::usage("shrink-bijection needs a finite horizontal width"));
            }
            ka_grid(ks(3)?, widths, range(&r.n, 0, 8))
        }
        PhiRoundtrip | SaCorollary => {
            let ns = range(&r.n, 0, if id == SaCorollary { 7 } else { 8 });
            match (&r.rises, id) {
                (Some(_), _) | (None, SaCorollary) => {
                    let rises = r.rises.clone().unwrap_or_else(|| vec![1, 2]);
                    if rises.is_empty() || rises.contains(&0) {
                        return Err(Error::usage("--rises must be a nonempty set of positive integers"));
                    }
                    let mut out = Vec::new();
                    for &a in &widths(vec![HorizontalWidth::Finite(1)]) {
                        for &n in &ns {
                            out.push(Instance {
                                rises: Some(rises.clone()),
                                a: Some(a),
                                n: Some(n),
                                ..Default::default()
                            });
                        }
                    }
                    out
                }
                (None, _) => ka_grid(ks(3)?, widths(finite_12), ns),
            }
        }
        Eq8 | Lemma2Class => nm_pairs(r, if id == Eq8 { 14 } else { 12 }, true)
            .into_iter()
            .map(|(n, m)| Instance { n: Some(n), m: Some(m), ..Default::default() })
            .collect(),
        Eq9 | Eq10 | Eq11 | PhihatRoundtrip => {
            let coprime = matches!(id, Eq11 | PhihatRoundtrip);
            let lo = if id == Eq9 { 0 } else { 1 };
            let mut out = Vec::new();
            for (n, m) in nm_pairs(r, 12, coprime) {
                let js = r.j.clone().unwrap_or_else(|| (lo..=n.min(m)).collect());
                for j in js {
                    out.push(Instance { n: Some(n), m: Some(m), j: Some(j), ..Default::default() });
                }
            }
            out
        }
        Eq12 | Lemma4Chain => {
            let mut out = Vec::new();
            for k in ks(3)? {
                for n in range(&r.n, 1, 4) {
                    out.push(Instance { k: Some(k), n: Some(n), ..Default::default() });
                }
            }
            out
        }
        Eq13 => {
            let mut out = Vec::new();
            for k in ks(3)? {
                for n in range(&r.n, 1, 4) {
                    let js = r.j.clone().unwrap_or_else(|| (1..=n).collect());
                    for j in js {
                        out.push(Instance { k: Some(k), n: Some(n), j: Some(j), ..Default::default() });
                    }
                }
            }
            out
        }
    })
}

/// Size of the largest family an instance enumerates, for cap enforcement.
pub fn workload(id: IdentityId, inst: &Instance) -> Result<BigUint> {
    checks::workload(id, inst)
}

/// Evaluates one instance: `(lhs, rhs)`.
pub fn check(id: IdentityId, inst: &Instance) -> Result<(BigUint, BigUint)> {
    checks::evaluate(id, inst)
}

/// Runs every instance of `id`, fanning out across threads. Reports come
/// back in canonical instance order. With `timing` off, `elapsed_ms` is 0.
pub fn verify(id: IdentityId, ranges: &Ranges, timing: bool) -> Result<Vec<CountReport>> {
    let list = instances(id, ranges)?;
    list.into_par_iter()
        .map(|inst| {
            let start = Instant::now();
            let (lhs, rhs) = check(id, &inst)?;
            let elapsed_ms = if timing { start.elapsed().as_secs_f64() * 1e3 } else { 0.0 };
            Ok(CountReport { id: id.as_str(), pass: lhs == rhs, params: inst, lhs, rhs, elapsed_ms })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_ids_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        }
        assert!("eq6".parse::<IdentityId>().is_err());
    }

    #[test]
    fn report_json_schema() {
        let r = CountReport {
            id: "eq4",
            params: Instance { k: Some(2), a: Some(HorizontalWidth::Disallowed), n: Some(4), ..Default::default() },
            lhs: BigUint::from(12u32),
            rhs: BigUint::from(12u32),
            pass: true,
            elapsed_ms: 0.0,
        };
        assert_eq!(
            r.to_json_line(),
            r#"{"id":"eq4","params":{"k":2,"a":"inf","n":4},"lhs":"12","rhs":"12","pass":true,"elapsed_ms":0.0}"#
        );
        assert_eq!(r.to_csv_row(), "eq4,k=2 a=inf n=4,12,12,true,0");
    }

    #[test]
    fn default_instances() {
        let eq4 = instances(IdentityId::Eq4, &Ranges::default()).unwrap();
        assert_eq!(eq4.len(), 3 * 2 * 11);
        assert_eq!(eq4[0].describe(), "k=1 a=1 n=0");
        let l2 = instances(IdentityId::Lemma2Class, &Ranges { max_sum: Some(5), ..Default::default() }).unwrap();
        let pairs: Vec<_> = l2.iter().map(|i| (i.n(), i.m())).collect();
        assert_eq!(pairs, [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (1, 4), (2, 3), (3, 2), (4, 1)]);
    }

    #[test]
    fn shrink_rejects_infinite_width() {
        let r = Ranges { a: Some(vec![HorizontalWidth::Disallowed]), ..Default::default() };
        assert!(matches!(instances(IdentityId::ShrinkBijection, &r), Err(Error::Usage(_))));
    }
}
