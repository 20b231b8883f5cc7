//! Exact closed forms. Every division is checked for exact divisibility.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::path::HorizontalWidth;

/// `C(n, r)`, zero outside `0 ≤ r ≤ n`.
pub fn binomial(n: i64, r: i64) -> BigUint {
    if n < 0 || r < 0 || r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..r {
        // acc = C(n, i) here, and C(n, i)·(n − i) is divisible by i + 1
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn exact_div(num: BigUint, den: u64) -> BigUint {
    let (q, rem) = num.div_rem(&BigUint::from(den));
    assert!(rem.is_zero(), "inexact division by {den}");
    q
}

fn require_coprime(n: u64, m: u64) -> Result<()> {
    if n == 0 || m == 0 || n.gcd(&m) != 1 {
        return Err(Error::NotCoprime { n, m });
    }
    Ok(())
}

/// Number of `(n,m)`-Dyck paths for coprime `n, m`: `C(n+m, n)/(n+m)`.
pub fn d_nm(n: u64, m: u64) -> Result<BigUint> {
    require_coprime(n, m)?;
    Ok(exact_div(binomial((n + m) as i64, n as i64), n + m))
}

/// Free `(n,m)`-paths with exactly `j` peaks: `C(n,j)·C(m,j)`.
pub fn f_nm_j(n: u64, m: u64, j: u64) -> BigUint {
    binomial(n as i64, j as i64) * binomial(m as i64, j as i64)
}

/// Free `(n,m)`-paths with `j` peaks that start with `U` and end with `D`.
pub fn f_ud_nm_j(n: u64, m: u64, j: u64) -> BigUint {
    binomial(n as i64 - 1, j as i64 - 1) * binomial(m as i64 - 1, j as i64 - 1)
}

/// Rational Narayana number: `(n,m)`-Dyck paths with exactly `j` peaks.
pub fn d_nm_j(n: u64, m: u64, j: u64) -> Result<BigUint> {
    require_coprime(n, m)?;
    if j == 0 {
        return Ok(BigUint::zero());
    }
    Ok(exact_div(f_ud_nm_j(n, m, j), j))
}

/// `k`-ary paths of order `(k+1)n`: `C((k+1)n, n)/(kn+1)`.
pub fn kary_count(k: u64, n: u64) -> BigUint {
    exact_div(binomial(((k + 1) * n) as i64, n as i64), k * n + 1)
}

/// `k`-ary paths of order `(k+1)n` with exactly `j` peaks.
pub fn kary_peaks_count(k: u64, n: u64, j: u64) -> BigUint {
    if j == 0 {
        return BigUint::zero();
    }
    let num = binomial(n as i64 - 1, j as i64 - 1) * binomial((k * n) as i64, j as i64 - 1);
    exact_div(num, j)
}

pub fn catalan(n: u64) -> BigUint {
    exact_div(binomial(2 * n as i64, n as i64), n + 1)
}

pub fn narayana(n: u64, j: u64) -> BigUint {
    if j == 0 {
        return BigUint::zero();
    }
    exact_div(binomial(n as i64 - 1, j as i64 - 1) * binomial(n as i64, j as i64 - 1), j)
}

/// `δ_{a|n}`; for `a = ∞` only `n = 0` counts.
pub fn delta_divides(a: HorizontalWidth, n: u64) -> u32 {
    u32::from(a.divides(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(4, 0), big(1));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(binomial(3, -1), big(0));
        assert_eq!(binomial(100, 49).to_string(), "98913082887808032681188722800");
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![big(1)];
        for n in 1..=40i64 {
            let mut next = vec![big(1); n as usize + 1];
            for r in 1..n as usize {
                next[r] = &row[r - 1] + &row[r];
            }
            row = next;
            for r in 0..=n {
                assert_eq!(binomial(n, r), row[r as usize], "C({n},{r})");
            }
        }
    }

    #[test]
    fn d_nm_examples() {
        assert_eq!(d_nm(2, 3).unwrap(), big(2));
        assert_eq!(d_nm(5, 7).unwrap(), big(66));
        assert_eq!(d_nm(1, 1).unwrap(), big(1));
        assert_eq!(d_nm(2, 4), Err(Error::NotCoprime { n: 2, m: 4 }));
        assert!(d_nm(0, 1).is_err());
    }

    #[test]
    fn free_peak_examples() {
        assert_eq!(f_nm_j(2, 3, 1), big(6));
        assert_eq!(f_nm_j(2, 3, 0), big(1));
        assert_eq!(f_nm_j(2, 3, 2), big(3));
        assert_eq!(f_ud_nm_j(2, 3, 2), big(2));
        assert_eq!(f_ud_nm_j(2, 3, 1), big(1));
        assert_eq!(f_ud_nm_j(1, 1, 1), big(1));
    }

    #[test]
    fn rational_narayana_examples() {
        assert_eq!(d_nm_j(2, 3, 1).unwrap(), big(1));
        assert_eq!(d_nm_j(2, 3, 2).unwrap(), big(1));
        let row: BigUint = (1..=5).map(|j| d_nm_j(5, 7, j).unwrap()).sum();
        assert_eq!(row, big(66));
        let row: BigUint = (1..=4).map(|j| d_nm_j(4, 5, j).unwrap()).sum();
        assert_eq!(row, big(14));
        let row: BigUint = (1..=5).map(|j| d_nm_j(5, 6, j).unwrap()).sum();
        assert_eq!(row, big(42));
        assert!(d_nm_j(2, 2, 1).is_err());
    }

    #[test]
    fn kary_examples() {
        assert_eq!(kary_count(2, 2), big(3));
        assert_eq!(kary_count(1, 3), big(5));
        assert_eq!(kary_peaks_count(2, 2, 1), big(1));
        assert_eq!(kary_peaks_count(2, 2, 2), big(2));
    }

    #[test]
    fn catalan_narayana_delta() {
        assert_eq!(narayana(4, 2), big(6));
        assert_eq!(catalan(3), big(5));
        assert_eq!(delta_divides(HorizontalWidth::Finite(2), 5), 0);
        assert_eq!(delta_divides(HorizontalWidth::Finite(2), 4), 1);
        assert_eq!(delta_divides(HorizontalWidth::Disallowed, 0), 1);
    }

    #[test]
    fn row_sums() {
        for total in 2..=16u64 {
            for n in 1..total {
                let m = total - n;
                if n.gcd(&m) != 1 {
                    continue;
                }
                let row: BigUint = (1..=n.min(m)).map(|j| d_nm_j(n, m, j).unwrap()).sum();
                assert_eq!(row, d_nm(n, m).unwrap(), "({n},{m})");
            }
        }
        for k in 1..=3 {
            for n in 1..=6 {
                let row: BigUint = (1..=n).map(|j| kary_peaks_count(k, n, j)).sum();
                assert_eq!(row, kary_count(k, n));
            }
        }
        for n in 1..=10 {
            for j in 1..=n {
                assert_eq!(kary_peaks_count(1, n, j), narayana(n, j));
            }
        }
    }
}
