use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hull::is_triangular;
use crate::partition::Partition;

/// `(a, b)` is the rightmost removable cell and `(d, e)` the primitive
/// direction of shallowest slope from it that leaves the partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PhiQuad {
    pub a: i64,
    pub b: i64,
    pub d: i64,
    pub e: i64,
}

impl PhiQuad {
    pub fn new(a: i64, b: i64, d: i64, e: i64) -> Result<Self> {
        if a < 1 || b < 1 || d < 1 || e < 1 {
            return Err(Error::Domain(format!(
                "({a},{b},{d},{e}) has a nonpositive entry"
            )));
        }
        if d >= a {
            return Err(Error::Domain(format!("d = {d} is not below a = {a}")));
        }
        if d.gcd(&e) != 1 {
            return Err(Error::Domain(format!("gcd({d},{e}) != 1")));
        }
        Ok(PhiQuad { a, b, d, e })
    }
}

pub fn phi_map(p: &Partition) -> Result<PhiQuad> {
    if p.width() < 2 {
        return Err(Error::Domain(format!("{p} has no part above 1")));
    }
    let report = is_triangular(p);
    if !report.triangular {
        return Err(Error::NotTriangular(p.to_string()));
    }
    let c = report.removable[0];
    let (a, b) = (c.x, c.y);
    // for each run d, the lowest rise e that steps outside the diagram
    let (d, e) = (1..a)
        .map(|d| (d, p.column_height(a - d) - b + 1))
        .min_by(|&(d1, e1), &(d2, e2)| {
            (e1 as i128 * d2 as i128)
                .cmp(&(e2 as i128 * d1 as i128))
                .then(d1.cmp(&d2))
        })
        .expect("a > 1");
    PhiQuad::new(a, b, d, e)
}

/// The partition cut off by the line through `(a, b)` of slope `−e/d`,
/// tilted so that `(a, b)` is kept and the rest of the line is not.
pub fn phi_inv(q: &PhiQuad) -> Result<Partition> {
    let q = PhiQuad::new(q.a, q.b, q.d, q.e)?;
    let (d, e) = (q.d as i128, q.e as i128);
    let level = e * q.a as i128 + d * q.b as i128;
    let mut parts = Vec::new();
    for y in 1.. {
        let rest = level - d * y as i128;
        let len = if y <= q.b && rest % e == 0 {
            rest / e
        } else {
            (rest - 1).div_euclid(e)
        };
        if len <= 0 {
            break;
        }
        parts.push(len as i64);
    }
    Ok(Partition::from_parts_unchecked(parts))
}

/// Lattice points of `T^<` (`x ≥ d+1`, `y ≥ 1`, `ex + dy ≤ e + d(l+1)`)
/// and of `T^≥` (same, with `ex + dy < e(l+1) + d`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleCounts {
    pub less: u64,
    pub geq: u64,
}

fn rows_below(d: i128, e: i128, cap: i128) -> u64 {
    // points with x ≥ d+1, y ≥ 1, ex + dy ≤ cap
    let mut total = 0u64;
    let mut x = d + 1;
    loop {
        let y_max = (cap - e * x).div_euclid(d);
        if y_max < 1 {
            return total;
        }
        total += y_max as u64;
        x += 1;
    }
}

pub fn triangle_counts(d: i64, e: i64, l: i64) -> Result<TriangleCounts> {
    if d < 1 || e < 1 || l < 1 {
        return Err(Error::Domain(format!(
            "({d},{e},{l}) has a nonpositive entry"
        )));
    }
    let (d, e, l) = (d as i128, e as i128, l as i128);
    Ok(TriangleCounts {
        less: rows_below(d, e, e + d * (l + 1)),
        geq: rows_below(d, e, e * (l + 1) + d - 1),
    })
}

/// Whether `phi_inv(q)` fits in the `l × l` square, read off the triangle
/// that `(a, b)` must lie in.
pub fn fits_square_by_triangle(q: &PhiQuad, l: i64) -> bool {
    let (a, b, d, e, l) = (
        q.a as i128,
        q.b as i128,
        q.d as i128,
        q.e as i128,
        l as i128,
    );
    let lhs = e * a + d * b;
    if d < e {
        lhs <= e + d * (l + 1)
    } else {
        lhs < e * (l + 1) + d
    }
}
