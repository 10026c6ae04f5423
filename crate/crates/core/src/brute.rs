//! Exhaustive partition generators, used as oracles.

use crate::partition::Partition;

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: i64) -> Vec<Partition> {
    fn rec(rest: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All partitions of size at most `n`, by increasing size.
pub fn partitions_up_to(n: i64) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All partitions `θ` with `inner ⊆ θ ⊆ outer`.
pub fn subdiagrams(outer: &Partition, inner: &Partition) -> Vec<Partition> {
    fn rec(
        row: usize,
        prev: i64,
        outer: &[i64],
        inner: &[i64],
        cur: &mut Vec<i64>,
        out: &mut Vec<Partition>,
    ) {
        let lo = inner.get(row).copied().unwrap_or(0);
        let hi = outer.get(row).copied().unwrap_or(0).min(prev);
        if lo == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
        }
        for len in lo.max(1)..=hi {
            cur.push(len);
            rec(row + 1, len, outer, inner, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if outer.contains(inner) {
        rec(
            0,
            i64::MAX,
            outer.parts(),
            inner.parts(),
            &mut Vec::new(),
            &mut out,
        );
    }
    out
}

/// All partitions with at most `h` parts, each at most `l`.
pub fn partitions_in_box(h: i64, l: i64) -> Vec<Partition> {
    if l <= 0 || h <= 0 {
        return vec![Partition::empty()];
    }
    let rect = Partition::from_parts_unchecked(vec![l; h as usize]);
    subdiagrams(&rect, &Partition::empty())
}
