use num_integer::Roots;
use rayon::prelude::*;

use super::CountSeries;
use crate::error::{Error, Result};
use crate::words::BalanceState;

/// Prefix length at which subtrees are handed to workers.
const FRONTIER_DEPTH: usize = 8;

/// Per-prefix data beyond the balance state.
#[derive(Clone, Copy)]
struct Tag {
    /// `C(ℓ+1, 2) + Σ i·w_i`, the size of the triple `(0, 1, w)` less `k`.
    n_min: u64,
    has_zero: bool,
    has_one: bool,
}

impl Tag {
    const ROOT: Tag = Tag {
        n_min: 0,
        has_zero: false,
        has_one: false,
    };
}

/// Depth-first walk over one mutable [`BalanceState`].
struct Walker {
    state: BalanceState,
    counts: Vec<u64>,
    max_n: u64,
    max_len: u64,
    /// When set, prefixes of this length are collected instead of walked.
    frontier: Option<Vec<(BalanceState, Tag)>>,
}

impl Walker {
    fn new(state: BalanceState, max_n: u64, max_len: u64) -> Self {
        Walker {
            state,
            counts: vec![0; max_n as usize + 1],
            max_n,
            max_len,
            frontier: None,
        }
    }

    fn child_tag(&self, tag: Tag, bit: u8) -> Option<Tag> {
        let len = self.state.len() as u64 + 1;
        let n_min = tag.n_min + len + len * bit as u64;
        (len <= self.max_len && n_min + len + 1 <= self.max_n).then_some(Tag {
            n_min,
            has_zero: tag.has_zero || bit == 0,
            has_one: tag.has_one || bit == 1,
        })
    }

    fn visit(&mut self, tag: Tag) -> Result<()> {
        if let Some(frontier) = self.frontier.as_mut() {
            if self.state.len() == FRONTIER_DEPTH {
                frontier.push((self.state.clone(), tag));
                return Ok(());
            }
        }
        let closed_by_one = self.state.push(1);
        if closed_by_one {
            self.state.pop();
        }
        self.tally(tag, closed_by_one)?;
        if closed_by_one {
            if let Some(next) = self.child_tag(tag, 1) {
                self.state.push(1);
                self.visit(next)?;
                self.state.pop();
            }
        }
        if let Some(next) = self.child_tag(tag, 0) {
            if self.state.push(0) {
                self.visit(next)?;
                self.state.pop();
            }
        }
        Ok(())
    }

    /// Adds the sizes of every valid `(m, d, w)` up to `max_n`.
    fn tally(&mut self, tag: Tag, closed_by_one: bool) -> Result<()> {
        if !tag.has_zero {
            return Ok(());
        }
        let len = self.state.len() as u64;
        let (tri, k) = (len * (len + 1) / 2, len + 1);
        for d in 1u64.. {
            let m_max = if closed_by_one { d + 1 } else { d };
            for m in 1..=m_max {
                let size = tag.n_min + tri * (d - 1) + k * m;
                if size > self.max_n {
                    if m == 1 {
                        return Ok(());
                    }
                    break;
                }
                let weight = if !tag.has_one && m == 1 && d == 1 {
                    1
                } else {
                    2
                };
                let slot = &mut self.counts[size as usize];
                *slot = slot
                    .checked_add(weight)
                    .ok_or(Error::Overflow("count_delta_dfs"))?;
            }
        }
        Ok(())
    }
}

fn subtree(state: BalanceState, tag: Tag, max_n: u64, max_len: u64) -> Result<Vec<u64>> {
    let mut walker = Walker::new(state, max_n, max_len);
    walker.visit(tag)?;
    Ok(walker.counts)
}

fn merge(mut a: Vec<u64>, b: Vec<u64>) -> Result<Vec<u64>> {
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.checked_add(y).ok_or(Error::Overflow("count_delta_dfs"))?;
    }
    Ok(a)
}

/// `|Δ(n)|` for `n ≤ max_n` by walking the tree of balanced words.
pub fn count_delta_dfs(max_n: usize, threads: usize) -> Result<CountSeries> {
    if threads == 0 {
        return Err(Error::Domain("thread count must be positive".into()));
    }
    let n = max_n as u64;
    let max_len = (2 * n).sqrt();

    let mut walker = Walker::new(BalanceState::new(), n, max_len);
    walker.frontier = Some(Vec::new());
    walker.visit(Tag::ROOT)?;
    let frontier = walker.frontier.take().unwrap_or_default();
    let counts = walker.counts;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
    let deep = pool.install(|| {
        frontier
            .into_par_iter()
            .map(|(state, tag)| subtree(state, tag, n, max_len))
            .try_reduce(|| vec![0u64; max_n + 1], merge)
    })?;
    let mut counts = merge(counts, deep)?;

    counts[0] = 1;
    if max_n >= 1 {
        counts[1] += 1;
    }
    for c in counts.iter_mut().skip(2) {
        *c = c.checked_add(2).ok_or(Error::Overflow("count_delta_dfs"))?;
    }
    Ok(CountSeries::new("delta", counts))
}
