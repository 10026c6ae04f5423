//! Partitions, cells, text format, conjugation and corner cells.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use crate::error::{Error, ParseError, Result};

/// Exclusive bound on parts and coordinates, so that cross products of
/// coordinate differences fit in an `i64`.
pub const COORD_LIMIT: i64 = 1 << 31;

/// Upper bound on the number of parts produced by the parser.
pub const MAX_PARTS: usize = 1 << 24;

/// A cell `(x, y)` of a Young diagram: column `x`, row `y`, both 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub const fn new(x: i64, y: i64) -> Self {
        Cell { x, y }
    }

    /// The cell reflected in the main diagonal.
    pub const fn transpose(self) -> Self {
        Cell {
            x: self.y,
            y: self.x,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.x)?;
        t.serialize_element(&self.y)?;
        t.end()
    }
}

/// An integer partition with weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> std::result::Result<Self, ParseError> {
        for (i, &p) in parts.iter().enumerate() {
            if p <= 0 {
                return Err(ParseError::ZeroPart(p.to_string()));
            }
            if p >= COORD_LIMIT {
                return Err(ParseError::OutOfRange(p.to_string()));
            }
            if i > 0 && parts[i - 1] < p {
                return Err(ParseError::NotMonotone(p.to_string()));
            }
        }
        if parts.len() as i64 >= COORD_LIMIT {
            return Err(ParseError::OutOfRange(parts.len().to_string()));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<i64>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok(), "bad parts {parts:?}");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<i64> {
        self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Number of parts `k`.
    pub fn height(&self) -> i64 {
        self.parts.len() as i64
    }

    /// Largest part, 0 for the empty partition.
    pub fn width(&self) -> i64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length of row `y` (1-indexed); 0 outside the diagram.
    pub fn part(&self, y: i64) -> i64 {
        if y < 1 {
            return 0;
        }
        self.parts.get((y - 1) as usize).copied().unwrap_or(0)
    }

    /// Height of column `x` (1-indexed), i.e. the `x`-th part of the conjugate.
    pub fn column_height(&self, x: i64) -> i64 {
        if x < 1 {
            return 0;
        }
        self.parts.partition_point(|&p| p >= x) as i64
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.x >= 1 && c.y >= 1 && c.x <= self.part(c.y)
    }

    /// All cells, row by row from the bottom.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |x| Cell::new(x, i as i64 + 1)))
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn conjugate(&self) -> Partition {
        let mut rows = self.parts.len();
        let conj = (1..=self.width())
            .map(|x| {
                while rows > 0 && self.parts[rows - 1] < x {
                    rows -= 1;
                }
                rows as i64
            })
            .collect();
        Partition { parts: conj }
    }

    /// True iff `inner` is a subdiagram of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.parts.len() <= self.parts.len()
            && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Removes cell `c`, which must be the last cell of its row and the top
    /// of its column.
    pub fn remove_cell(&self, c: Cell) -> Option<Partition> {
        if !self.contains_cell(c) || c.x != self.part(c.y) || self.part(c.y + 1) == c.x {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[(c.y - 1) as usize] -= 1;
        if parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// Adds cell `c` if the result is again a partition.
    pub fn add_cell(&self, c: Cell) -> Option<Partition> {
        let k = self.height();
        if c.y < 1 || c.y > k + 1 || c.x != self.part(c.y) + 1 {
            return None;
        }
        if c.y > 1 && self.part(c.y - 1) < c.x {
            return None;
        }
        let mut parts = self.parts.clone();
        if c.y == k + 1 {
            parts.push(1);
        } else {
            parts[(c.y - 1) as usize] += 1;
        }
        Some(Partition { parts })
    }

    /// The corner cells `C(λ)` together with `(1,1)`, `(λ₁,1)` and `(1,k)`,
    /// counter-clockwise from `(1,1)`.
    pub fn corner_cells(&self) -> Result<Vec<Cell>> {
        if self.is_empty() {
            return Err(Error::Empty);
        }
        let k = self.height();
        let mut out = vec![Cell::new(1, 1), Cell::new(self.width(), 1)];
        for (i, &p) in self.parts.iter().enumerate() {
            let y = i as i64 + 1;
            if y == k || p > self.parts[i + 1] {
                out.push(Cell::new(p, y));
            }
        }
        if k > 1 {
            out.push(Cell::new(1, k));
        }
        out.dedup();
        Ok(out)
    }

    /// The cells `C′(λ)` spanning the hull of the complement, clockwise from
    /// the far corner `(λ₁+1, k+1)`.
    pub fn complementary_corner_cells(&self) -> Vec<Cell> {
        let k = self.height();
        let w = self.width();
        let mut out = vec![Cell::new(w + 1, k + 1), Cell::new(w + 1, 1)];
        for i in 1..self.parts.len() {
            if self.parts[i - 1] > self.parts[i] {
                out.push(Cell::new(self.parts[i] + 1, i as i64 + 1));
            }
        }
        out.push(Cell::new(1, k + 1));
        out.dedup();
        out
    }

    /// The staircase `(k, k−1, …, 1)`.
    pub fn staircase(k: i64) -> Partition {
        Partition {
            parts: (1..=k.max(0)).rev().collect(),
        }
    }

    /// The largest triangular partition fitting in `h` rows and `l` columns,
    /// `τ_j = ⌊l + 1 − (l(j−1) + 1)/h⌋`.
    pub fn bounding(h: i64, l: i64) -> Result<Partition> {
        if h < 1 || l < 1 || h >= COORD_LIMIT || l >= COORD_LIMIT {
            return Err(Error::Domain(format!(
                "box {h}x{l} must have positive sides"
            )));
        }
        if h > MAX_PARTS as i64 {
            return Err(Error::Guard(format!("{h} rows exceed {MAX_PARTS}")));
        }
        let parts = (1..=h)
            .map(|j| ((l + 1) * h - l * (j - 1) - 1).div_euclid(h))
            .collect();
        Ok(Partition::from_parts_unchecked(parts))
    }
}

/// Wide and tall flags of a triangular partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WideTall {
    pub wide: bool,
    pub tall: bool,
}

/// Wide iff the parts are distinct, tall iff the conjugate's parts are.
/// Meaningful for triangular partitions, where at least one holds.
pub fn classify_wide_tall(p: &Partition) -> WideTall {
    let tall =
        p.parts.last().map_or(true, |&l| l == 1) && p.parts.windows(2).all(|w| w[0] - w[1] <= 1);
    WideTall {
        wide: p.has_distinct_parts(),
        tall,
    }
}

pub fn parse_partition(text: &str) -> std::result::Result<Partition, ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Ok(Partition::empty());
    }
    let number = |s: &str, term: &str| -> std::result::Result<i64, ParseError> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError::Syntax(term.to_string()));
        }
        match s.parse::<i64>() {
            Ok(v) if v < COORD_LIMIT => Ok(v),
            _ => Err(ParseError::OutOfRange(term.to_string())),
        }
    };
    let mut parts: Vec<i64> = Vec::new();
    for term in compact.split(',') {
        let (p, m) = match term.split_once('^') {
            Some((p, m)) => (number(p, term)?, number(m, term)?),
            None => (number(term, term)?, 1),
        };
        if p == 0 {
            return Err(ParseError::ZeroPart(term.to_string()));
        }
        if m == 0 {
            return Err(ParseError::Syntax(term.to_string()));
        }
        if parts.last().is_some_and(|&last| last < p) {
            return Err(ParseError::NotMonotone(term.to_string()));
        }
        if parts.len() + m as usize > MAX_PARTS {
            return Err(ParseError::OutOfRange(term.to_string()));
        }
        parts.extend(std::iter::repeat(p).take(m as usize));
    }
    Partition::new(parts)
}

impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse_partition(s)
    }
}

/// Comma-separated parts, using `P^M` for runs of four or more.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            let reps = if run >= 4 { 1 } else { run };
            for _ in 0..reps {
                if !first {
                    f.write_str(",")?;
                }
                first = false;
                if run >= 4 {
                    write!(f, "{p}^{run}")?;
                } else {
                    write!(f, "{p}")?;
                }
            }
            i += run;
        }
        Ok(())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}
