//! Exact lattice convex hulls and triangularity recognition.
//!
//! A partition is triangular when a straight line separates its Ferrers
//! diagram from the rest of `N²`; equivalently the convex hulls of the
//! diagram and of its complement are disjoint.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::partition::{Cell, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainSide {
    /// Upper-right boundary of `Conv(λ)`.
    Partition,
    /// Lower-left boundary of `Conv(N² ∖ λ)`.
    Complement,
}

/// Convex chain running from the bottom-right end to the top-left end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullChain {
    pub vertices: Vec<Cell>,
    pub side: ChainSide,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SlopeInterval {
    pub t_minus: Fraction,
    pub t_plus: Fraction,
}

impl SlopeInterval {
    pub fn is_open(&self) -> bool {
        self.t_minus < self.t_plus
    }
}

/// Outcome of the recognition algorithm. Cells are listed right to left.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangularReport {
    pub triangular: bool,
    pub removable: Vec<Cell>,
    pub addable: Vec<Cell>,
    /// A slope vector `(t, 1 − t)` of some cutting line.
    pub witness: Option<(Fraction, Fraction)>,
    pub interval: Option<SlopeInterval>,
}

impl TriangularReport {
    fn rejected() -> Self {
        TriangularReport {
            triangular: false,
            removable: Vec::new(),
            addable: Vec::new(),
            witness: None,
            interval: None,
        }
    }

    fn accepted(removable: Vec<Cell>, addable: Vec<Cell>, interval: SlopeInterval) -> Self {
        let t = Fraction::midpoint(interval.t_minus, interval.t_plus);
        TriangularReport {
            triangular: true,
            removable,
            addable,
            witness: Some((t, Fraction::ONE - t)),
            interval: Some(interval),
        }
    }
}

fn cross(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

fn sub(a: Cell, b: Cell) -> (i64, i64) {
    (a.x - b.x, a.y - b.y)
}

fn dot(n: (i64, i64), c: Cell) -> i128 {
    n.0 as i128 * c.x as i128 + n.1 as i128 * c.y as i128
}

fn turn(o: Cell, a: Cell, b: Cell) -> i128 {
    let (ax, ay) = ((a.x - o.x) as i128, (a.y - o.y) as i128);
    let (bx, by) = ((b.x - o.x) as i128, (b.y - o.y) as i128);
    ax * by - ay * bx
}

/// Strict convex hull of a point set, counter-clockwise, by the monotone
/// chain method.
pub fn convex_hull(points: &[Cell]) -> Vec<Cell> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<Cell> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Cell>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Whether `p` lies in the closed convex polygon `poly` (counter-clockwise,
/// as returned by [`convex_hull`]).
pub fn polygon_contains(poly: &[Cell], p: Cell) -> bool {
    match poly.len() {
        0 => false,
        1 => poly[0] == p,
        2 => {
            let (a, b) = (poly[0], poly[1]);
            turn(a, b, p) == 0
                && p.x >= a.x.min(b.x)
                && p.x <= a.x.max(b.x)
                && p.y >= a.y.min(b.y)
                && p.y <= a.y.max(b.y)
        }
        n => (0..n).all(|i| turn(poly[i], poly[(i + 1) % n], p) >= 0),
    }
}

/// Arm and leg of a cell: cells strictly to its right and strictly above.
pub fn arm_leg(p: &Partition, c: Cell) -> Result<(i64, i64)> {
    if !p.contains_cell(c) {
        return Err(Error::CellOutside(c));
    }
    Ok((p.part(c.y) - c.x, p.column_height(c.x) - c.y))
}

/// `t⁻ = max leg/(arm+leg+1)` and `t⁺ = min (leg+1)/(arm+leg+1)` over all
/// cells. Linear in the size of `p`.
pub fn slope_interval(p: &Partition) -> Result<SlopeInterval> {
    if p.is_empty() {
        return Err(Error::Empty);
    }
    let conj = p.conjugate();
    let (mut lo_n, mut lo_d) = (0i64, 1i64);
    let (mut hi_n, mut hi_d) = (1i64, 1i64);
    for (row, &len) in p.parts().iter().enumerate() {
        let y = row as i64 + 1;
        for (col, &height) in conj.parts()[..len as usize].iter().enumerate() {
            let arm = len - col as i64 - 1;
            let leg = height - y;
            let hook = arm + leg + 1;
            if leg as i128 * lo_d as i128 > lo_n as i128 * hook as i128 {
                (lo_n, lo_d) = (leg, hook);
            }
            if ((leg + 1) as i128) * (hi_d as i128) < (hi_n as i128) * (hook as i128) {
                (hi_n, hi_d) = (leg + 1, hook);
            }
        }
    }
    Ok(SlopeInterval {
        t_minus: Fraction::new(lo_n, lo_d),
        t_plus: Fraction::new(hi_n, hi_d),
    })
}

/// Reference test `t⁻ < t⁺`; the empty partition is triangular.
pub fn is_triangular_reference(p: &Partition) -> bool {
    p.is_empty() || slope_interval(p).map_or(false, |s| s.is_open())
}

/// Upper chain of `Conv(λ)` without the vertex `(1,1)`, from `(λ₁,1)` to
/// `(1,k)`. The single cell keeps `(1,1)`.
pub fn partition_hull(p: &Partition) -> Result<HullChain> {
    let corners = p.corner_cells()?;
    let mut stack: Vec<Cell> = Vec::with_capacity(corners.len());
    for &c in &corners {
        while stack.len() >= 2 {
            let (a, b) = (stack[stack.len() - 2], stack[stack.len() - 1]);
            if cross(sub(b, a), sub(c, b)) > 0 {
                break;
            }
            stack.pop();
        }
        stack.push(c);
    }
    if stack.len() > 1 {
        stack.remove(0);
    }
    Ok(HullChain {
        vertices: stack,
        side: ChainSide::Partition,
    })
}

/// Lower chain of `Conv(N² ∖ λ)` without the far corner, from `(λ₁+1,1)` to
/// `(1,k+1)`. The empty partition gives `[(1,1)]`.
pub fn complement_hull(p: &Partition) -> HullChain {
    let corners = p.complementary_corner_cells();
    let mut stack: Vec<Cell> = Vec::with_capacity(corners.len());
    for &c in &corners {
        while stack.len() >= 2 {
            let (a, b) = (stack[stack.len() - 2], stack[stack.len() - 1]);
            if cross(sub(b, a), sub(c, b)) < 0 {
                break;
            }
            stack.pop();
        }
        stack.push(c);
    }
    if stack.len() > 1 {
        stack.remove(0);
    }
    HullChain {
        vertices: stack,
        side: ChainSide::Complement,
    }
}

/// Index of the chain vertex minimizing `normal · v`, lowest index on ties.
///
/// Edge directions of either chain turn monotonically through at most a
/// quarter turn, so the signs of `normal · edge` change at most once.
pub fn extreme_index(chain: &HullChain, normal: (i64, i64)) -> usize {
    let v = &chain.vertices;
    let n = v.len();
    if n <= 1 {
        return 0;
    }
    let slope = |i: usize| dot(normal, v[i + 1]) - dot(normal, v[i]);
    let (first, last) = (slope(0), slope(n - 2));
    if first.signum() <= last.signum() {
        // Decreasing then increasing: first edge that does not descend.
        let (mut lo, mut hi) = (0, n - 1);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if slope(mid) >= 0 {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        lo
    } else if dot(normal, v[n - 1]) < dot(normal, v[0]) {
        n - 1
    } else {
        0
    }
}

pub fn extreme_vertex(chain: &HullChain, normal: (i64, i64)) -> Cell {
    chain.vertices[extreme_index(chain, normal)]
}

/// `v[i]` plus a neighbour joined to it by an edge parallel to `dir`.
fn with_parallel_neighbour(v: &[Cell], i: usize, dir: (i64, i64)) -> Vec<Cell> {
    if i + 1 < v.len() && cross(dir, sub(v[i + 1], v[i])) == 0 {
        vec![v[i], v[i + 1]]
    } else if i > 0 && cross(dir, sub(v[i], v[i - 1])) == 0 {
        vec![v[i - 1], v[i]]
    } else {
        vec![v[i]]
    }
}

enum Search {
    Found(Vec<Cell>, Vec<Cell>),
    Exhausted,
    Separated,
}

/// Binary search over the edges of `own` for a pair of consecutive vertices
/// whose line strictly misses the hull behind `other`.
fn search_pair(own: &HullChain, other: &HullChain) -> Search {
    let w = &own.vertices;
    let sign = match own.side {
        ChainSide::Partition => 1,
        ChainSide::Complement => -1,
    };
    let (mut lo, mut hi) = (0usize, w.len().saturating_sub(1));
    while hi > lo {
        let len = hi - lo + 1;
        let right = lo + len / 2 - 1;
        let left = right + 1;
        let (c2, c1) = (w[right], w[left]);
        let dir = sub(c1, c2);
        let normal = (dir.1, -dir.0);
        let probe = (sign * normal.0, sign * normal.1);
        let j = extreme_index(other, probe);
        let c = other.vertices[j];
        let gap = sign as i128 * (dot(normal, c) - dot(normal, c2));
        if gap > 0 {
            return Search::Found(
                vec![c2, c1],
                with_parallel_neighbour(&other.vertices, j, dir),
            );
        }
        if c.x < c1.x {
            lo = left;
        } else if c.x > c2.x {
            hi = right;
        } else {
            return Search::Separated;
        }
    }
    Search::Exhausted
}

/// Parameter `t` at which the normal `(t, 1−t)` is orthogonal to `d`.
fn orthogonal_t(d: (i64, i64)) -> Fraction {
    Fraction::new(d.1, d.1 - d.0)
}

/// Open interval of valid slopes computed from the two chains by sweeping
/// `t` over `[0,1]` while tracking the supporting vertex on each side.
fn interval_from_hulls(w: &HullChain, wc: &HullChain) -> SlopeInterval {
    let (v, u) = (&w.vertices, &wc.vertices);
    let mut iv = v.len() - 1;
    let mut iu = 0usize;
    let mut lo = Fraction::ZERO;
    let mut best: Option<(Fraction, Fraction)> = None;
    loop {
        let next_v = if iv > 0 {
            orthogonal_t(sub(v[iv], v[iv - 1]))
        } else {
            Fraction::ONE
        };
        let next_u = if iu + 1 < u.len() {
            orthogonal_t(sub(u[iu + 1], u[iu]))
        } else {
            Fraction::ONE
        };
        let hi = next_v.min(next_u);
        if lo < hi {
            let a = u[iu].y - v[iv].y;
            let b = (u[iu].x - v[iv].x) - a;
            let positive = match b.signum() {
                0 => (a > 0).then_some((lo, hi)),
                1 => {
                    let r = Fraction::new(-a, b);
                    (r < hi).then(|| (lo.max(r), hi))
                }
                _ => {
                    let r = Fraction::new(-a, b);
                    (r > lo).then(|| (lo, hi.min(r)))
                }
            };
            if let Some((l, r)) = positive {
                best = Some(match best {
                    None => (l, r),
                    Some((bl, br)) => (bl.min(l), br.max(r)),
                });
            }
        }
        if hi == Fraction::ONE && iv == 0 && iu + 1 >= u.len() {
            break;
        }
        if next_v == hi && iv > 0 {
            iv -= 1;
        }
        if next_u == hi && iu + 1 < u.len() {
            iu += 1;
        }
        lo = hi;
    }
    let (t_minus, t_plus) = best.unwrap_or((Fraction::ONE, Fraction::ZERO));
    SlopeInterval { t_minus, t_plus }
}

/// Recognizes triangular partitions by binary search over hull edges and
/// reports the removable and addable cells.
pub fn is_triangular(p: &Partition) -> TriangularReport {
    let unit = SlopeInterval {
        t_minus: Fraction::ZERO,
        t_plus: Fraction::ONE,
    };
    if p.is_empty() {
        return TriangularReport::accepted(Vec::new(), vec![Cell::new(1, 1)], unit);
    }
    let (width, height) = (p.width(), p.height());
    let w = partition_hull(p).expect("nonempty");
    let wc = complement_hull(p);
    if height == 1 || width == 1 {
        let removable = vec![Cell::new(width, height)];
        let addable = vec![Cell::new(width + 1, 1), Cell::new(1, height + 1)];
        return TriangularReport::accepted(removable, addable, interval_from_hulls(&w, &wc));
    }
    let (removable, addable) = match search_pair(&w, &wc) {
        Search::Found(pair, single) => (pair, single),
        Search::Separated => return TriangularReport::rejected(),
        Search::Exhausted => match search_pair(&wc, &w) {
            Search::Found(pair, single) => (single, pair),
            _ => return TriangularReport::rejected(),
        },
    };
    TriangularReport::accepted(removable, addable, interval_from_hulls(&w, &wc))
}

/// Removable cells from the extreme cells of the slope interval: `c⁻` is
/// the rightmost maximizer of `t⁻a + (1−t⁻)b`, `c⁺` the uppermost maximizer
/// of `t⁺a + (1−t⁺)b`. Listed right to left.
pub fn removable_via_extremes(p: &Partition) -> Result<Vec<Cell>> {
    let s = slope_interval(p)?;
    if !s.is_open() {
        return Err(Error::NotTriangular(p.to_string()));
    }
    let corners = p.corner_cells()?;
    let level = |t: Fraction, c: Cell| {
        let (num, den) = (t.numer() as i128, t.denom() as i128);
        num * c.x as i128 + (den - num) * c.y as i128
    };
    let pick = |t: Fraction, better: fn(Cell, Cell) -> bool| {
        let mut best = corners[0];
        for &c in &corners[1..] {
            let (lc, lb) = (level(t, c), level(t, best));
            if lc > lb || (lc == lb && better(c, best)) {
                best = c;
            }
        }
        best
    };
    let c_minus = pick(s.t_minus, |c, b| c.x > b.x);
    let c_plus = pick(s.t_plus, |c, b| c.y > b.y);
    let mut out = vec![c_minus];
    if c_plus != c_minus {
        out.push(c_plus);
    }
    out.sort_by(|a, b| b.x.cmp(&a.x));
    Ok(out)
}
