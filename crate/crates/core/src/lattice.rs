//! The lattice `Y_Δ` of triangular partitions ordered by containment.

use std::collections::HashMap;

use num_integer::Integer;
use serde::Serialize;

use crate::brute::subdiagrams;
use crate::error::{Error, Result};
use crate::hull::{
    complement_hull, convex_hull, is_triangular, is_triangular_reference, TriangularReport,
};
use crate::partition::{Cell, Partition};

fn report(p: &Partition) -> Result<TriangularReport> {
    let r = is_triangular(p);
    if r.triangular {
        Ok(r)
    } else {
        Err(Error::NotTriangular(p.to_string()))
    }
}

/// Partitions covered by `p`, one per removable cell.
pub fn covers_down(p: &Partition) -> Result<Vec<Partition>> {
    let r = report(p)?;
    Ok(r.removable
        .iter()
        .map(|&c| p.remove_cell(c).expect("removable cell is a corner"))
        .collect())
}

/// Partitions covering `p`, one per addable cell.
pub fn covers_up(p: &Partition) -> Result<Vec<Partition>> {
    let r = report(p)?;
    Ok(r.addable
        .iter()
        .map(|&c| p.add_cell(c).expect("addable cell is an outer corner"))
        .collect())
}

/// Row lengths of the lattice points weakly left of a chain running from
/// `(X, 1)` up to `(1, Y)` with `x` non-increasing and `y` non-decreasing.
fn rows_under(chain: &[Cell]) -> Vec<i64> {
    let top = chain.last().map_or(0, |c| c.y);
    let mut rows = Vec::with_capacity(top.max(0) as usize);
    let mut i = 0;
    for y in 1..=top {
        while i + 2 < chain.len() && chain[i + 1].y < y {
            i += 1;
        }
        let (a, b) = (chain[i], chain[i + 1]);
        let dy = b.y - a.y;
        let x = if dy == 0 {
            a.x
        } else {
            let num = a.x as i128 * dy as i128 + (b.x - a.x) as i128 * (y - a.y) as i128;
            num.div_euclid(dy as i128) as i64
        };
        rows.push(x);
    }
    rows
}

/// Least upper bound: the lattice points of `Conv(p ∪ q)`.
pub fn join(p: &Partition, q: &Partition) -> Result<Partition> {
    report(p)?;
    report(q)?;
    let mut points = Vec::new();
    for r in [p, q] {
        if !r.is_empty() {
            points.extend(r.corner_cells()?);
        }
    }
    let (width, height) = (p.width().max(q.width()), p.height().max(q.height()));
    if width <= 1 || height <= 1 {
        let parts = if width == 0 {
            vec![]
        } else if width == 1 {
            vec![1; height as usize]
        } else {
            vec![width]
        };
        return Ok(Partition::from_parts_unchecked(parts));
    }
    // counter-clockwise from (1,1); the right chain runs from (X,1) to (1,Y)
    let hull = convex_hull(&points);
    let start = hull
        .iter()
        .position(|&c| c == Cell::new(width, 1))
        .expect("hull vertex");
    let end = hull
        .iter()
        .position(|&c| c == Cell::new(1, height))
        .expect("hull vertex");
    let chain = &hull[start..=end];
    Ok(Partition::from_parts_unchecked(rows_under(chain)))
}

/// Greatest lower bound: the complement of the lattice points of the
/// complement hull of `p ∩ q`.
pub fn meet(p: &Partition, q: &Partition) -> Result<Partition> {
    report(p)?;
    report(q)?;
    let rho: Vec<i64> = p
        .parts()
        .iter()
        .zip(q.parts())
        .map(|(a, b)| *a.min(b))
        .collect();
    let rho = Partition::from_parts_unchecked(rho);
    if rho.is_empty() {
        return Ok(rho);
    }
    let chain = complement_hull(&rho).vertices;
    let mut rows = Vec::new();
    let mut i = 0;
    for y in 1..=rho.height() {
        while chain[i + 1].y < y {
            i += 1;
        }
        let (a, b) = (chain[i], chain[i + 1]);
        let dy = (b.y - a.y) as i128;
        let num = a.x as i128 * dy + (b.x - a.x) as i128 * (y - a.y) as i128;
        let len = Integer::div_ceil(&num, &dy) as i64 - 1;
        if len <= 0 {
            break;
        }
        rows.push(len);
    }
    Ok(Partition::from_parts_unchecked(rows))
}

/// A value of the Möbius function of `Y_Δ`, always −1, 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MobiusValue(i8);

impl MobiusValue {
    pub fn value(self) -> i64 {
        self.0 as i64
    }
}

fn check_interval(p: &Partition, q: &Partition) -> Result<()> {
    if !q.contains(p) {
        return Err(Error::Domain(format!("{p} is not contained in {q}")));
    }
    Ok(())
}

/// Closed form: 1 on the diagonal, −1 on covers, 1 when `p` is the interior
/// of a `q` with two removable cells, otherwise 0.
pub fn mobius(p: &Partition, q: &Partition) -> Result<MobiusValue> {
    report(p)?;
    let rq = report(q)?;
    check_interval(p, q)?;
    let value = if p == q {
        1
    } else if q.size() - p.size() == 1 {
        -1
    } else if rq.removable.len() == 2 && interior(q)? == *p {
        1
    } else {
        0
    };
    Ok(MobiusValue(value))
}

/// Largest `|q| − |p|` accepted by [`mobius_reference`].
pub const MOBIUS_REFERENCE_GUARD: i64 = 20;

/// Recursive Möbius sum over the explicitly enumerated interval.
pub fn mobius_reference(p: &Partition, q: &Partition) -> Result<i64> {
    if !is_triangular_reference(p) {
        return Err(Error::NotTriangular(p.to_string()));
    }
    if !is_triangular_reference(q) {
        return Err(Error::NotTriangular(q.to_string()));
    }
    check_interval(p, q)?;
    if q.size() - p.size() > MOBIUS_REFERENCE_GUARD {
        return Err(Error::Guard(format!(
            "|q| - |p| = {} exceeds {MOBIUS_REFERENCE_GUARD}",
            q.size() - p.size()
        )));
    }
    let mut interval: Vec<Partition> = subdiagrams(q, p)
        .into_iter()
        .filter(is_triangular_reference)
        .collect();
    interval.sort_by_key(Partition::size);
    let mut mu: Vec<i64> = Vec::with_capacity(interval.len());
    for (i, theta) in interval.iter().enumerate() {
        let value = if theta == p {
            1
        } else {
            -(0..i)
                .filter(|&j| theta.contains(&interval[j]))
                .map(|j| mu[j])
                .sum::<i64>()
        };
        mu.push(value);
    }
    Ok(*mu.last().expect("interval contains q"))
}

/// Lattice points on the segment joining the removable cells, from the
/// left one `c⁻` to the right one `c⁺`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagonal {
    pub cells: Vec<Cell>,
}

pub fn diagonal(p: &Partition) -> Result<Diagonal> {
    if p.is_empty() {
        return Err(Error::Empty);
    }
    let r = report(p)?;
    let (right, left) = match r.removable[..] {
        [c] => return Ok(Diagonal { cells: vec![c] }),
        [a, b] => (a, b),
        _ => unreachable!("one or two removable cells"),
    };
    let (dx, dy) = (right.x - left.x, right.y - left.y);
    let steps = dx.gcd(&dy);
    let (sx, sy) = (dx / steps, dy / steps);
    let cells = (0..=steps)
        .map(|i| Cell::new(left.x + i * sx, left.y + i * sy))
        .collect();
    Ok(Diagonal { cells })
}

/// `p` without its diagonal.
pub fn interior(p: &Partition) -> Result<Partition> {
    if p.is_empty() {
        report(p)?;
        return Ok(Partition::empty());
    }
    let mut parts = p.parts().to_vec();
    for c in diagonal(p)?.cells {
        debug_assert_eq!(parts[(c.y - 1) as usize], c.x);
        parts[(c.y - 1) as usize] -= 1;
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Ok(Partition::from_parts_unchecked(parts))
}

/// Default cap on memo entries for [`SubpartitionCounter`].
pub const DEFAULT_MEMO_CAP: usize = 1 << 22;

/// Counts triangular subpartitions with the recurrence
/// `I(τ) = I(τ∖c⁻) + I(τ∖c⁺) − I(τ°) + 1`, memoized on part lists.
#[derive(Debug)]
pub struct SubpartitionCounter {
    cap: usize,
    memo: HashMap<Partition, u64>,
}

impl Default for SubpartitionCounter {
    fn default() -> Self {
        Self::with_cap(DEFAULT_MEMO_CAP)
    }
}

impl SubpartitionCounter {
    pub fn with_cap(cap: usize) -> Self {
        SubpartitionCounter {
            cap,
            memo: HashMap::new(),
        }
    }

    fn children(p: &Partition) -> Result<(Vec<Partition>, Option<Partition>)> {
        let below = covers_down(p)?;
        let inner = if below.len() == 2 {
            Some(interior(p)?)
        } else {
            None
        };
        Ok((below, inner))
    }

    pub fn count(&mut self, p: &Partition) -> Result<u64> {
        report(p)?;
        let mut stack = vec![p.clone()];
        while let Some(top) = stack.last() {
            if self.memo.contains_key(top) {
                stack.pop();
                continue;
            }
            if top.is_empty() {
                let top = stack.pop().expect("nonempty stack");
                self.insert(top, 1)?;
                continue;
            }
            let (below, inner) = Self::children(top)?;
            let missing: Vec<Partition> = below
                .iter()
                .chain(inner.iter())
                .filter(|c| !self.memo.contains_key(*c))
                .cloned()
                .collect();
            if !missing.is_empty() {
                stack.extend(missing);
                continue;
            }
            let overflow = Error::Overflow("count_subpartitions");
            let mut total = 1u64;
            for c in &below {
                total = total.checked_add(self.memo[c]).ok_or(overflow.clone())?;
            }
            if let Some(inner) = &inner {
                total = total.checked_sub(self.memo[inner]).ok_or(overflow)?;
            }
            let top = stack.pop().expect("nonempty stack");
            self.insert(top, total)?;
        }
        Ok(self.memo[p])
    }

    fn insert(&mut self, p: Partition, value: u64) -> Result<()> {
        if self.memo.len() >= self.cap {
            return Err(Error::MemoBudget(self.cap));
        }
        self.memo.insert(p, value);
        Ok(())
    }
}

/// Number of triangular partitions contained in `p`.
pub fn count_subpartitions(p: &Partition) -> Result<u64> {
    SubpartitionCounter::default().count(p)
}

fn binomial(n: u128, k: u128) -> Option<u128> {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Triangular Young tableaux of the two-row shape `(t1, t2)`:
/// `(t1 − 2t2 + 2)/(t1 + 2) · C(t1 + t2 + 1, t2)`.
pub fn tyt_count_two_row(t1: i64, t2: i64) -> Result<u128> {
    if t2 < 1 || t1 < t2 || t1 < 2 * t2 - 1 {
        return Err(Error::Domain(format!(
            "({t1},{t2}) is not a triangular two-row shape"
        )));
    }
    let overflow = Error::Overflow("tyt_count_two_row");
    let c = binomial((t1 + t2 + 1) as u128, t2 as u128).ok_or(overflow.clone())?;
    let num = c.checked_mul((t1 - 2 * t2 + 2) as u128).ok_or(overflow)?;
    Ok(num / (t1 + 2) as u128)
}

/// Largest shape accepted by [`tyt_count_brute`].
pub const TYT_BRUTE_GUARD: i64 = 18;

/// Saturated chains from the empty partition to `p`, walking down through
/// corners whose removal passes the reference test.
pub fn tyt_count_brute(p: &Partition) -> Result<u128> {
    if p.size() > TYT_BRUTE_GUARD {
        return Err(Error::Guard(format!(
            "|p| = {} exceeds {TYT_BRUTE_GUARD}",
            p.size()
        )));
    }
    if !is_triangular_reference(p) {
        return Err(Error::NotTriangular(p.to_string()));
    }
    fn walk(p: &Partition, memo: &mut HashMap<Partition, u128>) -> u128 {
        if p.is_empty() {
            return 1;
        }
        if let Some(&v) = memo.get(p) {
            return v;
        }
        let mut total = 0;
        for y in 1..=p.height() {
            if let Some(smaller) = p.remove_cell(Cell::new(p.part(y), y)) {
                if is_triangular_reference(&smaller) {
                    total += walk(&smaller, memo);
                }
            }
        }
        memo.insert(p.clone(), total);
        total
    }
    Ok(walk(p, &mut HashMap::new()))
}
