use num_integer::Integer;

use super::CountSeries;
use crate::error::{Error, Result};

/// Largest `N` accepted by the generating-function counters.
pub const GF_GUARD: usize = 2000;

/// `T(a, b, r)` for `r = 0..len`: prefix sums of `⌊sb/a⌋ + 1`.
fn floor_sums(a: i128, b: i128, len: i128) -> Vec<i128> {
    let mut out = vec![0i128; len.max(1) as usize];
    for r in 1..len {
        out[r as usize] = out[r as usize - 1] + (r * b).div_euclid(a) + 1;
    }
    out
}

fn size(a: i128, b: i128, k: i128, m: i128, i: i128, j: i128, ta: i128, tb: i128) -> i128 {
    (k - 1) * (((a + 1) * (b + 1) - 2) / 2)
        + (k - 1) * (k - 2) / 2 * a * b
        + i * j
        + i * (k - 1) * a
        + j * (k - 1) * b
        + ta
        + tb
        + m
}

/// Size of the triangular partition with cutting direction `(a, b)`, `k`
/// cells on the diagonal and offsets `m`, `i`, `j`.
pub fn n_delta(a: i64, b: i64, k: i64, m: i64, i: i64, j: i64) -> Result<u64> {
    if a < 1 || b < 1 || a.gcd(&b) != 1 {
        return Err(Error::Domain(format!(
            "({a},{b}) is not a coprime pair of positive integers"
        )));
    }
    if !(0..a).contains(&j) || !(0..b).contains(&i) || m < 1 || m > k {
        return Err(Error::Domain(format!(
            "need 0 <= j < a, 0 <= i < b and 1 <= m <= k, got i={i} j={j} k={k} m={m}"
        )));
    }
    let (a, b, k, m, i, j) = (
        a as i128, b as i128, k as i128, m as i128, i as i128, j as i128,
    );
    let ta = floor_sums(a, b, j + 1)[j as usize];
    let tb = floor_sums(b, a, i + 1)[i as usize];
    u64::try_from(size(a, b, k, m, i, j, ta, tb)).map_err(|_| Error::Overflow("n_delta"))
}

/// Visits every `(a, b, k, m, i, j)` with size at most `max_n`, where the
/// allowed `m` for each `k` come from `ms`.
fn sweep(
    max_n: usize,
    ms: impl Fn(i128) -> (i128, i128),
    mut visit: impl FnMut(usize) -> Result<()>,
) -> Result<()> {
    let cap = max_n as i128;
    let base = |a: i128, b: i128| size(a, b, 2, ms(2).0, 0, 0, 0, 0);
    for a in 1.. {
        if base(a, 1) > cap {
            return Ok(());
        }
        for b in 1.. {
            if base(a, b) > cap {
                break;
            }
            if a.gcd(&b) != 1 {
                continue;
            }
            let ta = floor_sums(a, b, a);
            let tb = floor_sums(b, a, b);
            for k in 2.. {
                let (m_lo, m_hi) = ms(k);
                if size(a, b, k, m_lo, 0, 0, 0, 0) > cap {
                    break;
                }
                for m in m_lo..=m_hi {
                    if size(a, b, k, m, 0, 0, 0, 0) > cap {
                        break;
                    }
                    for i in 0..b {
                        if size(a, b, k, m, i, 0, 0, tb[i as usize]) > cap {
                            break;
                        }
                        for j in 0..a {
                            let n = size(a, b, k, m, i, j, ta[j as usize], tb[i as usize]);
                            if n > cap {
                                break;
                            }
                            visit(n as usize)?;
                        }
                    }
                }
            }
        }
    }
    unreachable!("the sweep ends once a exceeds the bound")
}

fn guard(max_n: usize) -> Result<()> {
    if max_n > GF_GUARD {
        return Err(Error::Guard(format!("N = {max_n} exceeds {GF_GUARD}")));
    }
    Ok(())
}

/// `|Δ(n)|` from the generating function over cutting directions.
pub fn count_delta_gf(max_n: usize) -> Result<CountSeries> {
    guard(max_n)?;
    let mut series = CountSeries::new("delta", vec![1; max_n + 1]);
    sweep(max_n, |k| (1, k - 1), |n| series.bump(n, 1))?;
    Ok(series)
}

/// `|Δ₂(n)|`: triangular partitions with two removable cells.
pub fn count_delta2(max_n: usize) -> Result<CountSeries> {
    guard(max_n)?;
    let mut series = CountSeries::zeros("delta2", max_n);
    sweep(max_n, |k| (k, k), |n| series.bump(n, 1))?;
    Ok(series)
}
