//! Bulk value tables.

use num_bigint::BigUint;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::total_humps;
use crate::error::{Error, Result};
use crate::formulas::{d_nm_j, kary_count, kary_peaks_count};
use crate::path::{HorizontalWidth, PathProfile};

mod decimal {
    use num_bigint::BigUint;
    use serde::Serializer;

    pub fn one<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn many<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(BigUint::to_string))
    }
}

fn join(values: &[BigUint]) -> String {
    values.iter().map(BigUint::to_string).collect::<Vec<_>>().join(" ")
}

/// `d_nm_j(n, m, j)` for `j = 1..=min(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NarayanaRow {
    pub n: u64,
    pub m: u64,
    #[serde(serialize_with = "decimal::many")]
    pub values: Vec<BigUint>,
    #[serde(serialize_with = "decimal::one")]
    pub sum: BigUint,
}

impl NarayanaRow {
    pub const CSV_HEADER: &'static str = "n,m,values,sum";

    pub fn to_csv_row(&self) -> String {
        format!("{},{},{},{}", self.n, self.m, join(&self.values), self.sum)
    }
}

/// Rows for every coprime pair; non-coprime pairs come back separately.
pub fn rational_narayana_rows(ns: &[u64], ms: &[u64]) -> (Vec<NarayanaRow>, Vec<(u64, u64)>) {
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for &n in ns {
        for &m in ms {
            if n == 0 || m == 0 || n.gcd(&m) != 1 {
                skipped.push((n, m));
                continue;
            }
            let values: Vec<BigUint> = (1..=n.min(m)).map(|j| d_nm_j(n, m, j).expect("pair is coprime")).collect();
            let sum = values.iter().sum();
            rows.push(NarayanaRow { n, m, values, sum });
        }
    }
    (rows, skipped)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HumpTotalRow {
    pub k: u32,
    #[serde(serialize_with = "width")]
    pub a: HorizontalWidth,
    pub n: u64,
    #[serde(serialize_with = "decimal::one")]
    pub total: BigUint,
}

fn width<S: serde::Serializer>(a: &HorizontalWidth, s: S) -> std::result::Result<S::Ok, S::Error> {
    match a {
        HorizontalWidth::Finite(a) => s.serialize_u32(*a),
        HorizontalWidth::Disallowed => s.serialize_str("inf"),
    }
}

impl HumpTotalRow {
    pub const CSV_HEADER: &'static str = "k,a,n,total";

    pub fn to_csv_row(&self) -> String {
        format!("{},{},{},{}", self.k, self.a, self.n, self.total)
    }
}

/// `Σ #humps` over strict `(k,a)`-paths, by enumeration.
pub fn hump_total_rows(ks: &[u32], widths: &[HorizontalWidth], ns: &[u64]) -> Result<Vec<HumpTotalRow>> {
    let mut jobs = Vec::new();
    for &k in ks {
        for &a in widths {
            let profile = PathProfile::ka(k, a)?;
            for &n in ns {
                jobs.push((k, a, n, profile.clone()));
            }
        }
    }
    Ok(jobs
        .into_par_iter()
        .map(|(k, a, n, profile)| HumpTotalRow { k, a, n, total: total_humps(&profile, n) })
        .collect())
}

/// `kary_peaks_count(k, n, j)` for `j = 1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KaryPeakRow {
    pub k: u64,
    pub n: u64,
    #[serde(serialize_with = "decimal::many")]
    pub values: Vec<BigUint>,
    #[serde(serialize_with = "decimal::one")]
    pub sum: BigUint,
}

impl KaryPeakRow {
    pub const CSV_HEADER: &'static str = "k,n,values,sum";

    pub fn to_csv_row(&self) -> String {
        format!("{},{},{},{}", self.k, self.n, join(&self.values), self.sum)
    }
}

pub fn kary_peak_rows(ks: &[u64], ns: &[u64]) -> Result<Vec<KaryPeakRow>> {
    let mut rows = Vec::new();
    for &k in ks {
        if k == 0 {
            return Err(Error::usage("k must be positive"));
        }
        for &n in ns {
            let values: Vec<BigUint> = (1..=n).map(|j| kary_peaks_count(k, n, j)).collect();
            let sum: BigUint = values.iter().sum();
            debug_assert!(n == 0 || sum == kary_count(k, n));
            rows.push(KaryPeakRow { k, n, values, sum });
        }
    }
    Ok(rows)
}
