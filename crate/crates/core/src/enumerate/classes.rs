use serde::Serialize;

use super::CountSeries;
use crate::brute::partitions_of;
use crate::error::{Error, Result};
use crate::hull::is_triangular;

/// Series of partitions with one or two removable cells (`d1`, `d2`), one
/// or two addable cells (`up1`, `up2`), and two of each (`d2up2`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSeries {
    pub d1: CountSeries,
    pub d2: CountSeries,
    pub up1: CountSeries,
    pub up2: CountSeries,
    pub d2up2: CountSeries,
}

/// The same census for a single `n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub d1: u64,
    pub d2: u64,
    pub up1: u64,
    pub up2: u64,
    pub d2up2: u64,
}

impl ClassSeries {
    pub fn max_n(&self) -> usize {
        self.d1.max_n()
    }

    pub fn at(&self, n: usize) -> Option<ClassCounts> {
        Some(ClassCounts {
            d1: self.d1.get(n)?,
            d2: self.d2.get(n)?,
            up1: self.up1.get(n)?,
            up2: self.up2.get(n)?,
            d2up2: self.d2up2.get(n)?,
        })
    }
}

/// Class series up to `N` from `|Δ|` and `|Δ₂|` known up to `N + 1`, using
/// `|Δ(n)| + |Δ²(n)| = |Δ(n+1)| + |Δ₂(n+1)|`.
pub fn derive_class_series(delta: &CountSeries, delta2: &CountSeries) -> Result<ClassSeries> {
    let known = delta.values.len().min(delta2.values.len());
    if known < 2 {
        return Err(Error::Domain("series must extend one term past N".into()));
    }
    let max_n = known - 2;
    let mut columns: [Vec<u64>; 5] = Default::default();
    let empty = ClassCounts {
        up1: 1,
        ..Default::default()
    };
    let nonneg = |v: i128, what: &str, n: usize| {
        u64::try_from(v)
            .map_err(|_| Error::Domain(format!("negative {what} at n = {n}: inconsistent series")))
    };
    for n in 0..=max_n {
        let row = if n == 0 {
            empty
        } else {
            let [d, d2, d_next, d2_next] = [
                delta.values[n],
                delta2.values[n],
                delta.values[n + 1],
                delta2.values[n + 1],
            ]
            .map(i128::from);
            let up2 = d_next + d2_next - d;
            let up1 = d - up2;
            ClassCounts {
                d1: nonneg(d - d2, "d1", n)?,
                d2: nonneg(d2, "d2", n)?,
                up1: nonneg(up1, "up1", n)?,
                up2: nonneg(up2, "up2", n)?,
                d2up2: nonneg(d2 - up1, "d2up2", n)?,
            }
        };
        for (col, v) in columns
            .iter_mut()
            .zip([row.d1, row.d2, row.up1, row.up2, row.d2up2])
        {
            col.push(v);
        }
    }
    let [d1, d2, up1, up2, d2up2] = columns;
    Ok(ClassSeries {
        d1: CountSeries::new("d1", d1),
        d2: CountSeries::new("d2", d2),
        up1: CountSeries::new("up1", up1),
        up2: CountSeries::new("up2", up2),
        d2up2: CountSeries::new("d2up2", d2up2),
    })
}

/// Largest `n` accepted by [`classify_direct`].
pub const CLASSIFY_GUARD: usize = 40;

/// Direct census of the triangular partitions of `n`.
pub fn classify_direct(n: usize) -> Result<ClassCounts> {
    if n > CLASSIFY_GUARD {
        return Err(Error::Guard(format!("n = {n} exceeds {CLASSIFY_GUARD}")));
    }
    let mut counts = ClassCounts::default();
    for p in partitions_of(n as i64) {
        let report = is_triangular(&p);
        if !report.triangular {
            continue;
        }
        let (down, up) = (report.removable.len(), report.addable.len());
        match down {
            0 => {}
            1 => counts.d1 += 1,
            _ => counts.d2 += 1,
        }
        if up == 1 {
            counts.up1 += 1;
        } else {
            counts.up2 += 1;
        }
        if down == 2 && up == 2 {
            counts.d2up2 += 1;
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::super::tests::{corrected_delta, TABLE_DELTA1, TABLE_DELTA2};
    use super::super::{count_delta2, count_delta_dfs};
    use super::*;

    fn classes(max_n: usize) -> ClassSeries {
        derive_class_series(
            &count_delta_dfs(max_n + 1, 2).unwrap(),
            &count_delta2(max_n + 1).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn census_examples() {
        let three = classify_direct(3).unwrap();
        assert_eq!((three.d1, three.d2), (2, 1));
        let one = classify_direct(1).unwrap();
        assert_eq!((one.d1, one.d2, one.up2), (1, 0, 1));
        assert_eq!(classify_direct(9).unwrap().up2, 12);
        assert_eq!(
            classify_direct(0).unwrap(),
            ClassCounts {
                up1: 1,
                ..Default::default()
            }
        );
        assert!(classify_direct(41).is_err());
    }

    #[test]
    fn derived_examples() {
        let s = classes(10);
        assert_eq!(s.d1.values[10], 2);
        assert_eq!((s.d1.values[1], s.d2.values[1]), (1, 0));
        assert_eq!(s.up2.values[9], 12);
        assert_eq!(s.at(0).unwrap(), classify_direct(0).unwrap());
    }

    #[test]
    fn derived_matches_census() {
        let s = classes(30);
        for n in 0..=30 {
            assert_eq!(s.at(n).unwrap(), classify_direct(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn derived_matches_table() {
        let s = classes(50);
        assert_eq!(&s.d1.values[1..], &TABLE_DELTA1[..]);
        assert_eq!(&s.d2.values[1..], &TABLE_DELTA2[..]);
    }

    #[test]
    fn class_identities() {
        let delta = count_delta_dfs(201, 4).unwrap();
        let delta2 = count_delta2(201).unwrap();
        let s = derive_class_series(&delta, &delta2).unwrap();
        assert_eq!(s.max_n(), 200);
        for n in 1..=200 {
            let c = s.at(n).unwrap();
            let d = delta.values[n];
            assert_eq!(c.d1 + c.d2, d);
            assert_eq!(c.up1 + c.up2, d);
            assert!(c.up1 <= c.d2);
            assert_eq!(d + c.up2, delta.values[n + 1] + delta2.values[n + 1]);
        }
        assert_eq!(&delta.values[1..51], &corrected_delta()[..]);
    }

    #[test]
    fn inconsistent_input_is_rejected() {
        let delta = CountSeries::new("delta", vec![1, 1, 2, 3]);
        let bogus = CountSeries::new("delta2", vec![0, 5, 0, 1]);
        assert!(derive_class_series(&delta, &bogus).is_err());
        assert!(derive_class_series(&CountSeries::new("delta", vec![1]), &bogus).is_err());
    }
}
