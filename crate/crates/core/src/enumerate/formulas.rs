use serde::Serialize;

use super::number_theory::totient_sieve;
use crate::error::{Error, Result};
use crate::words::balanced_count_formula;

fn totient_sum(l: usize, weight: impl Fn(i128) -> i128) -> Result<i128> {
    let phi = totient_sieve(l);
    (1..=l).try_fold(0i128, |acc, i| {
        weight((l - i + 1) as i128)
            .checked_mul(phi[i] as i128)
            .and_then(|t| acc.checked_add(t))
            .ok_or(Error::Overflow("totient sum"))
    })
}

fn to_u64(v: i128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow("closed form"))
}

/// Triangular partitions in the `l × l` square:
/// `1 + Σ C(l − i + 2, 2)·φ(i)`.
pub fn square_count(l: usize) -> Result<u64> {
    to_u64(1 + totient_sum(l, |r| (r + 1) * r / 2)?)
}

/// Closed forms for boxes of height `l` and width `l − 1` or `l − 2`, for
/// width exactly `l` with height at most `l`, and for width `l − 1` with
/// height exactly `l`. Fields are absent where the form does not apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RectCounts {
    pub minus1: Option<u64>,
    pub minus2: Option<u64>,
    pub width_exact: Option<u64>,
    pub narrow_tall: Option<u64>,
}

pub fn rect_counts(l: usize) -> Result<RectCounts> {
    if l < 1 {
        return Err(Error::Domain("l must be at least 1".into()));
    }
    let minus1 = if l >= 2 {
        Some(to_u64((1 + totient_sum(l, |r| r * r)?) / 2)?)
    } else {
        None
    };
    let minus2 = if l >= 3 {
        let s = totient_sum(l, |r| r * (r - 1) + 1)?;
        Some(to_u64((2 - 2 * l as i128 + s) / 2)?)
    } else {
        None
    };
    Ok(RectCounts {
        minus1,
        minus2,
        width_exact: Some(balanced_count_formula(l)? / 2),
        narrow_tall: (l >= 2).then(|| l as u64 - 1),
    })
}
