//! Counting triangular partitions by size, and closed forms for those
//! fitting in squares and rectangles.

mod classes;
mod dfs;
mod formulas;
mod gf;
pub mod number_theory;
mod phi;

use serde::Serialize;

use crate::brute::partitions_of;
use crate::error::{Error, Result};
use crate::hull::is_triangular_reference;

pub use classes::{classify_direct, derive_class_series, ClassCounts, ClassSeries, CLASSIFY_GUARD};
pub use dfs::count_delta_dfs;
pub use formulas::{rect_counts, square_count, RectCounts};
pub use gf::{count_delta2, count_delta_gf, n_delta, GF_GUARD};
pub use phi::{
    fits_square_by_triangle, phi_inv, phi_map, triangle_counts, PhiQuad, TriangleCounts,
};

/// Values indexed by `n = 0..=N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountSeries {
    pub label: String,
    pub values: Vec<u64>,
}

impl CountSeries {
    pub fn new(label: impl Into<String>, values: Vec<u64>) -> Self {
        CountSeries {
            label: label.into(),
            values,
        }
    }

    pub fn zeros(label: impl Into<String>, max_n: usize) -> Self {
        Self::new(label, vec![0; max_n + 1])
    }

    pub fn max_n(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn get(&self, n: usize) -> Option<u64> {
        self.values.get(n).copied()
    }

    fn bump(&mut self, n: usize, by: u64) -> Result<()> {
        let slot = &mut self.values[n];
        *slot = slot
            .checked_add(by)
            .ok_or(Error::Overflow("series entry"))?;
        Ok(())
    }
}

/// Largest `N` accepted by [`count_delta_brute`].
pub const BRUTE_GUARD: usize = 40;

/// `|Δ(n)|` by filtering every partition of every `n ≤ max_n`.
pub fn count_delta_brute(max_n: usize) -> Result<CountSeries> {
    if max_n > BRUTE_GUARD {
        return Err(Error::Guard(format!("N = {max_n} exceeds {BRUTE_GUARD}")));
    }
    let values = (0..=max_n)
        .map(|n| {
            partitions_of(n as i64)
                .iter()
                .filter(|p| is_triangular_reference(p))
                .count() as u64
        })
        .collect();
    Ok(CountSeries::new("delta", values))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `|Δ(n)|`, `|Δ₁(n)|` and `|Δ₂(n)|` for `n = 1..=50`.
    pub(crate) const TABLE_DELTA: [u64; 50] = [
        1, 2, 3, 4, 6, 7, 8, 10, 12, 13, 16, 16, 18, 20, 23, 24, 26, 26, 30, 32, 35, 34, 38, 38,
        42, 44, 46, 47, 54, 52, 54, 52, 56, 60, 66, 67, 68, 66, 72, 72, 80, 76, 82, 84, 87, 86, 90,
        88, 96, 96,
    ];
    pub(crate) const TABLE_DELTA1: [u64; 50] = [
        1, 2, 2, 2, 4, 2, 2, 6, 4, 2, 8, 2, 4, 10, 6, 2, 10, 6, 8, 12, 6, 2, 18, 6, 8, 16, 8, 8,
        24, 2, 6, 20, 14, 12, 26, 6, 6, 24, 22, 6, 30, 6, 20, 30, 10, 8, 36, 14, 18, 32,
    ];
    pub(crate) const TABLE_DELTA2: [u64; 50] = [
        0, 0, 1, 2, 2, 5, 6, 4, 8, 11, 8, 14, 14, 10, 17, 22, 16, 20, 22, 20, 29, 32, 20, 32, 34,
        28, 38, 39, 30, 50, 48, 32, 42, 48, 40, 61, 62, 42, 50, 66, 50, 68, 62, 54, 77, 78, 54, 74,
        78, 64,
    ];

    /// The reference `|Δ(42)| = 76` disagrees with the reference
    /// `|Δ₁(42)| + |Δ₂(42)| = 74` and with brute force.
    pub(crate) const TABLE_BAD_ENTRY: (usize, u64, u64) = (42, 76, 74);

    /// `|Δ(n)|` for `n = 1..=50` with the bad entry corrected.
    pub(crate) fn corrected_delta() -> Vec<u64> {
        let mut values = TABLE_DELTA.to_vec();
        let (n, listed, actual) = TABLE_BAD_ENTRY;
        assert_eq!(values[n - 1], listed);
        values[n - 1] = actual;
        values
    }

    #[test]
    fn table_rows_are_consistent() {
        let delta = corrected_delta();
        for n in 0..50 {
            assert_eq!(TABLE_DELTA1[n] + TABLE_DELTA2[n], delta[n], "n = {}", n + 1);
        }
    }

    #[test]
    fn bad_entry_is_confirmed_by_brute_force() {
        let (n, _, actual) = TABLE_BAD_ENTRY;
        let count = partitions_of(n as i64)
            .iter()
            .filter(|p| is_triangular_reference(p))
            .count() as u64;
        assert_eq!(count, actual);
    }

    #[test]
    fn brute_examples() {
        assert_eq!(count_delta_brute(4).unwrap().values, vec![1, 1, 2, 3, 4]);
        assert_eq!(count_delta_brute(10).unwrap().values[10], 13);
        assert_eq!(count_delta_brute(1).unwrap().values, vec![1, 1]);
        assert!(count_delta_brute(41).is_err());
    }

    #[test]
    fn brute_matches_table() {
        let series = count_delta_brute(30).unwrap();
        assert_eq!(&series.values[1..], &TABLE_DELTA[..30]);
    }

    #[test]
    fn coprime_pair_sandwich() {
        let max_n = 2000;
        let delta = count_delta_dfs(max_n, 4).unwrap();
        let pp = number_theory::coprime_pair_table(2 * max_n + 1);
        for n in 1..=max_n {
            let d = delta.values[n];
            // pp(n/2) counts ab < n/2, that is ab < ⌈n/2⌉
            assert!(pp[n.div_ceil(2)] <= 3 * d, "n = {n}");
            assert!(d <= pp[2 * n + 1], "n = {n}");
        }
    }

    #[test]
    fn series_accessors() {
        let mut s = CountSeries::zeros("x", 3);
        assert_eq!(s.max_n(), 3);
        s.bump(2, 5).unwrap();
        assert_eq!(s.get(2), Some(5));
        assert_eq!(s.get(4), None);
        s.bump(1, u64::MAX).unwrap();
        assert!(s.bump(1, 1).is_err());
    }
}
