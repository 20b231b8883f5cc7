//! `lo..hi` (inclusive) and comma-separated parameter lists.

use crate::error::{Error, Result};
use crate::path::HorizontalWidth;

fn parse_u64(text: &str) -> Result<u64> {
    text.trim().parse().map_err(|_| Error::usage(format!("expected a nonnegative integer, got {text:?}")))
}

/// Parses `3`, `0..10`, `1,2,5` or a mix like `1..3,7`. Order and
/// duplicates are kept as written.
pub fn parse_u64_list(text: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for item in text.split(',') {
        match item.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (parse_u64(lo)?, parse_u64(hi)?);
                if lo > hi {
                    return Err(Error::usage(format!("empty range {item:?}")));
                }
                out.extend(lo..=hi);
            }
            None => out.push(parse_u64(item)?),
        }
    }
    Ok(out)
}

/// As [`parse_u64_list`], additionally accepting `inf`. Widths must be positive.
pub fn parse_width_list(text: &str) -> Result<Vec<HorizontalWidth>> {
    let mut out = Vec::new();
    for item in text.split(',') {
        if item.trim() == "inf" {
            out.push(HorizontalWidth::Disallowed);
            continue;
        }
        for v in parse_u64_list(item)? {
            let a = u32::try_from(v)
                .ok()
                .filter(|&a| a >= 1)
                .ok_or_else(|| Error::usage(format!("horizontal width must be positive or inf, got {v}")))?;
            out.push(HorizontalWidth::Finite(a));
        }
    }
    Ok(out)
}
