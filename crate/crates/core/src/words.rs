//! Balanced binary words and their bijections with wide triangular
//! partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::enumerate::number_theory::totient_sieve;
use crate::error::{Error, ParseError, Result};
use crate::fraction::Fraction;
use crate::hull::is_triangular;
use crate::partition::{classify_wide_tall, Cell, Partition, COORD_LIMIT};

/// A finite word over `{0, 1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(
                ParseError::Letter(char::from_digit(b as u32 % 36, 36).unwrap_or('?')).into(),
            );
        }
        Ok(BinaryWord(bits))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn complement(&self) -> BinaryWord {
        BinaryWord(self.0.iter().map(|b| 1 - b).collect())
    }

    pub fn reversed(&self) -> BinaryWord {
        BinaryWord(self.0.iter().rev().copied().collect())
    }

    pub fn pushed(&self, bit: u8) -> BinaryWord {
        let mut bits = self.0.clone();
        bits.push(bit);
        BinaryWord(bits)
    }
}

impl FromStr for BinaryWord {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(ParseError::Letter(other)),
            })
            .collect::<std::result::Result<Vec<u8>, _>>()
            .map(BinaryWord)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Quadratic check of the definition: equal-length factors differ in
/// their number of ones by at most one.
pub fn is_balanced_naive(w: &BinaryWord) -> bool {
    let mut prefix = vec![0i64; w.len() + 1];
    for (i, &b) in w.bits().iter().enumerate() {
        prefix[i + 1] = prefix[i] + b as i64;
    }
    (1..=w.len()).all(|h| {
        let counts = (h..=w.len()).map(|end| prefix[end] - prefix[end - h]);
        let (lo, hi) = counts.fold((i64::MAX, i64::MIN), |(lo, hi), c| (lo.min(c), hi.max(c)));
        hi - lo <= 1
    })
}

/// Parts `ℓ − i + 1` for each index `i` of a one.
fn parts_from_ones(w: &BinaryWord) -> Vec<i64> {
    let len = w.len() as i64;
    w.bits()
        .iter()
        .enumerate()
        .filter(|(_, &b)| b == 1)
        .map(|(i, _)| len - i as i64)
        .collect()
}

/// Balance check through the triangularity test on the associated
/// wide partition.
pub fn is_balanced(w: &BinaryWord) -> bool {
    match w.bits().first() {
        None => true,
        Some(&1) => is_triangular(&Partition::from_parts_unchecked(parts_from_ones(w))).triangular,
        Some(_) => is_balanced(&w.complement()),
    }
}

/// `w_i = ⌊iα + β⌋ − ⌊(i − 1)α + β⌋` for `i = 1..=len`.
pub fn mechanical_word(alpha: Fraction, beta: Fraction, len: usize) -> Result<BinaryWord> {
    for (name, v) in [("alpha", alpha), ("beta", beta)] {
        if v <= Fraction::ZERO || v >= Fraction::ONE {
            return Err(Error::Domain(format!("{name} = {v} is not in (0, 1)")));
        }
    }
    let (a, b) = (alpha.numer() as i128, alpha.denom() as i128);
    let (c, d) = (beta.numer() as i128, beta.denom() as i128);
    let level = |i: i128| (i * a * d + c * b).div_euclid(b * d);
    let bits = (1..=len as i128)
        .map(|i| (level(i) - level(i - 1)) as u8)
        .collect();
    Ok(BinaryWord(bits))
}

fn require_wide_triangular(p: &Partition) -> Result<()> {
    if !is_triangular(p).triangular {
        return Err(Error::NotTriangular(p.to_string()));
    }
    if !classify_wide_tall(p).wide {
        return Err(Error::Domain(format!("{p} is not wide")));
    }
    Ok(())
}

/// `1 0^{τ₁−τ₂−1} 1 0^{τ₂−τ₃−1} … 1 0^{τ_k−1}`.
pub fn omega(p: &Partition) -> Result<BinaryWord> {
    if p.is_empty() {
        return Err(Error::Empty);
    }
    require_wide_triangular(p)?;
    let mut bits = Vec::with_capacity(p.width() as usize);
    let parts = p.parts();
    for (i, &part) in parts.iter().enumerate() {
        let next = parts.get(i + 1).copied().unwrap_or(0);
        bits.push(1);
        bits.extend(std::iter::repeat(0).take((part - next - 1) as usize));
    }
    Ok(BinaryWord(bits))
}

pub fn omega_inv(w: &BinaryWord) -> Result<Partition> {
    if w.bits().first() != Some(&1) {
        return Err(Error::Domain(format!("word '{w}' does not start with 1")));
    }
    if !is_balanced(w) {
        return Err(Error::Domain(format!("word '{w}' is not balanced")));
    }
    Ok(Partition::from_parts_unchecked(parts_from_ones(w)))
}

/// Minimum part, minimum difference and difference word of a wide
/// triangular partition with at least two parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiTriple {
    m: i64,
    d: i64,
    w: BinaryWord,
}

impl ChiTriple {
    pub fn new(m: i64, d: i64, w: BinaryWord) -> Result<Self> {
        if m < 1 || d < 1 {
            return Err(Error::Domain(format!(
                "m = {m} and d = {d} must be positive"
            )));
        }
        if m > d + 1 {
            return Err(Error::Domain(format!("m = {m} exceeds d + 1 = {}", d + 1)));
        }
        if !w.bits().contains(&0) {
            return Err(Error::Domain(format!("word '{w}' contains no 0")));
        }
        if !is_balanced(&w) {
            return Err(Error::Domain(format!("word '{w}' is not balanced")));
        }
        if m == d + 1 && !is_balanced(&w.pushed(1)) {
            return Err(Error::Domain(format!(
                "m = d + 1 but '{w}1' is not balanced"
            )));
        }
        Ok(ChiTriple { m, d, w })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn w(&self) -> &BinaryWord {
        &self.w
    }
}

/// Splits a strictly decreasing part list into `(m, d, w)` without
/// checking that `w` is binary or lies in the valid set.
fn raw_chi(parts: &[i64]) -> (i64, i64, Vec<i64>) {
    let m = *parts.last().expect("at least two parts");
    let diffs: Vec<i64> = parts.windows(2).map(|p| p[0] - p[1]).collect();
    let d = *diffs.iter().min().expect("at least two parts");
    (m, d, diffs.into_iter().map(|x| x - d).collect())
}

pub fn chi(p: &Partition) -> Result<ChiTriple> {
    if p.height() < 2 {
        return Err(Error::Domain(format!("{p} has fewer than two parts")));
    }
    require_wide_triangular(p)?;
    let (m, d, w) = raw_chi(p.parts());
    let bits = w.into_iter().map(|x| x as u8).collect();
    ChiTriple::new(m, d, BinaryWord::new(bits)?)
}

/// `τ_i = m + Σ_{j ≥ i} (w_j + d)`.
pub fn xi(t: &ChiTriple) -> Result<Partition> {
    let mut parts = vec![t.m];
    let mut acc = t.m;
    for &b in t.w.bits().iter().rev() {
        acc = acc
            .checked_add(t.d + b as i64)
            .filter(|&v| v < COORD_LIMIT)
            .ok_or(Error::Overflow("xi"))?;
        parts.push(acc);
    }
    parts.reverse();
    Ok(Partition::from_parts_unchecked(parts))
}

/// `k·m + C(k,2)·d + Σ i·w_i` with `k = |w| + 1`.
pub fn chi_size(t: &ChiTriple) -> Result<i64> {
    let k = t.w.len() as i64 + 1;
    let weighted: i64 =
        t.w.bits()
            .iter()
            .enumerate()
            .map(|(i, &b)| (i as i64 + 1) * b as i64)
            .sum();
    k.checked_mul(t.m)
        .and_then(|a| {
            (k * (k - 1) / 2)
                .checked_mul(t.d)
                .and_then(|b| a.checked_add(b))
        })
        .and_then(|s| s.checked_add(weighted))
        .ok_or(Error::Overflow("chi_size"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Window {
    low: u32,
    mixed: bool,
}

impl Window {
    /// The record after a new factor with `count` ones, if still balanced.
    fn admit(self, count: u32) -> Option<Window> {
        if count == self.low || (self.mixed && count == self.low + 1) {
            Some(self)
        } else if self.mixed {
            None
        } else if count == self.low + 1 {
            Some(Window {
                low: self.low,
                mixed: true,
            })
        } else if count + 1 == self.low {
            Some(Window {
                low: count,
                mixed: true,
            })
        } else {
            None
        }
    }
}

/// Incremental balance data for a balanced word: for each factor length
/// the lowest one-count seen and whether the next value has also occurred.
///
/// [`push`](Self::push) and [`pop`](Self::pop) edit in place, so a depth-first
/// walk needs one state; [`extend`](Self::extend) returns a new one.
#[derive(Clone, Debug)]
pub struct BalanceState {
    word: BinaryWord,
    prefix: Vec<u32>,
    windows: Vec<Window>,
    undo: Vec<(usize, Window)>,
    marks: Vec<usize>,
}

impl PartialEq for BalanceState {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for BalanceState {}

impl Default for BalanceState {
    fn default() -> Self {
        BalanceState {
            word: BinaryWord::default(),
            prefix: vec![0],
            windows: Vec::new(),
            undo: Vec::new(),
            marks: Vec::new(),
        }
    }
}

impl BalanceState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn word(&self) -> &BinaryWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// State of the word extended by `bit`, or `None` if that word is
    /// unbalanced.
    pub fn extend(&self, bit: u8) -> Option<BalanceState> {
        let mut next = self.clone();
        next.push(bit).then_some(next)
    }

    /// Appends `bit` if the result is balanced; otherwise leaves the state
    /// unchanged and returns false.
    pub fn push(&mut self, bit: u8) -> bool {
        let len = self.len();
        let total = self.prefix[len] + bit as u32;
        let mark = self.undo.len();
        for h in 1..=len {
            let count = total - self.prefix[len + 1 - h];
            let old = self.windows[h - 1];
            match old.admit(count) {
                Some(new) if new == old => {}
                Some(new) => {
                    self.undo.push((h - 1, old));
                    self.windows[h - 1] = new;
                }
                None => {
                    self.rollback(mark);
                    return false;
                }
            }
        }
        self.marks.push(mark);
        self.prefix.push(total);
        self.windows.push(Window {
            low: total,
            mixed: false,
        });
        self.word.0.push(bit);
        true
    }

    /// Removes the last letter pushed, returning it.
    pub fn pop(&mut self) -> Option<u8> {
        let bit = self.word.0.pop()?;
        self.prefix.pop();
        self.windows.pop();
        let mark = self.marks.pop().expect("one mark per letter");
        self.rollback(mark);
        Some(bit)
    }

    fn rollback(&mut self, mark: usize) {
        while self.undo.len() > mark {
            let (i, w) = self.undo.pop().expect("above mark");
            self.windows[i] = w;
        }
    }
}

/// Removable cells of a large triangular partition through a small
/// partition with the same difference word.
pub fn removable_via_reduction(p: &Partition) -> Result<Vec<Cell>> {
    let shape = classify_wide_tall(p);
    if !shape.wide && !shape.tall {
        return Err(Error::NotTriangular(p.to_string()));
    }
    if !shape.wide {
        let mut cells: Vec<Cell> = removable_via_reduction(&p.conjugate())?
            .into_iter()
            .map(Cell::transpose)
            .collect();
        cells.reverse();
        return Ok(cells);
    }
    match p.height() {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![Cell::new(p.part(1), 1)]),
        _ => {}
    }
    let (m, d, w) = raw_chi(p.parts());
    let not_triangular = || Error::NotTriangular(p.to_string());
    if w.iter().any(|&x| x > 1) {
        return Err(not_triangular());
    }
    let word = BinaryWord(w.into_iter().map(|x| x as u8).collect());
    ChiTriple::new(m, d, word.clone()).map_err(|_| not_triangular())?;
    let small_m = if m - d == 1 { 2 } else { 1 };
    let nu = xi(&ChiTriple::new(small_m, 1, word)?)?;
    let report = is_triangular(&nu);
    debug_assert!(report.triangular);
    Ok(report
        .removable
        .into_iter()
        .map(|c| Cell::new(p.part(c.y), c.y))
        .collect())
}

/// Largest length accepted by [`balanced_enumerate`].
pub const BALANCED_ENUMERATE_GUARD: usize = 30;

/// `|B_len| = 1 + Σ_{i=1}^{len} (len − i + 1)·φ(i)`.
pub fn balanced_count_formula(len: usize) -> Result<u64> {
    let phi = totient_sieve(len);
    (1..=len).try_fold(1u64, |acc, i| {
        ((len - i + 1) as u64)
            .checked_mul(phi[i])
            .and_then(|t| acc.checked_add(t))
            .ok_or(Error::Overflow("balanced_count_formula"))
    })
}

/// All balanced words of length `len` in lexicographic order.
pub fn balanced_enumerate(len: usize) -> Result<Vec<BinaryWord>> {
    if len > BALANCED_ENUMERATE_GUARD {
        return Err(Error::Guard(format!(
            "length {len} exceeds {BALANCED_ENUMERATE_GUARD}"
        )));
    }
    let mut out = Vec::new();
    let mut stack = vec![BalanceState::new()];
    while let Some(state) = stack.pop() {
        if state.len() == len {
            out.push(state.word);
            continue;
        }
        for bit in [1, 0] {
            if let Some(next) = state.extend(bit) {
                stack.push(next);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::partitions_up_to;
    use crate::hull::is_triangular_reference;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn all_words(len: usize) -> impl Iterator<Item = BinaryWord> {
        (0u32..1 << len).map(move |mask| {
            BinaryWord(
                (0..len)
                    .map(|i| ((mask >> (len - 1 - i)) & 1) as u8)
                    .collect(),
            )
        })
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w("10110101").to_string(), "10110101");
        assert!(w("").is_empty());
        assert_eq!("102".parse::<BinaryWord>(), Err(ParseError::Letter('2')));
        assert!(BinaryWord::new(vec![0, 2]).is_err());
    }

    #[test]
    fn naive_examples() {
        assert!(is_balanced_naive(&w("10110101")));
        assert!(!is_balanced_naive(&w("0011")));
        assert!(is_balanced_naive(&w("")));
    }

    #[test]
    fn fast_examples() {
        assert!(is_balanced(&w("10110101")));
        assert!(!is_balanced(&w("1100")));
        assert!(is_balanced(&w("0")));
    }

    #[test]
    fn balance_tests_agree_exhaustively() {
        for len in 0..=16 {
            for word in all_words(len) {
                let naive = is_balanced_naive(&word);
                assert_eq!(is_balanced(&word), naive, "{word}");
                assert_eq!(is_balanced_naive(&word.complement()), naive, "{word}");
                assert_eq!(is_balanced_naive(&word.reversed()), naive, "{word}");
            }
        }
    }

    #[test]
    fn balance_tests_agree_on_random_long_words() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for i in 0..100_000 {
            let len = rng.gen_range(17..=48);
            let word = if i % 2 == 0 {
                BinaryWord((0..len).map(|_| rng.gen_range(0..2)).collect())
            } else {
                let den = rng.gen_range(2..60);
                let alpha = Fraction::new(rng.gen_range(1..den), den);
                let beta = Fraction::new(rng.gen_range(1..den), den);
                let mut bits = mechanical_word(alpha, beta, len).unwrap().0;
                let flip = rng.gen_range(0..len);
                if rng.gen_bool(0.5) {
                    bits[flip] ^= 1;
                }
                BinaryWord(bits)
            };
            assert_eq!(is_balanced(&word), is_balanced_naive(&word), "{word}");
        }
    }

    #[test]
    fn mechanical_examples() {
        let f = Fraction::new;
        assert_eq!(mechanical_word(f(2, 3), f(1, 2), 6).unwrap(), w("101101"));
        assert_eq!(mechanical_word(f(1, 2), f(1, 2), 4).unwrap(), w("1010"));
        assert!(mechanical_word(f(1, 3), f(1, 5), 0).unwrap().is_empty());
        assert!(mechanical_word(f(1, 1), f(1, 2), 3).is_err());
        assert!(mechanical_word(f(1, 2), Fraction::ZERO, 3).is_err());
    }

    #[test]
    fn mechanical_words_are_balanced() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..10_000 {
            let den_a = rng.gen_range(2..1000);
            let den_b = rng.gen_range(2..1000);
            let alpha = Fraction::new(rng.gen_range(1..den_a), den_a);
            let beta = Fraction::new(rng.gen_range(1..den_b), den_b);
            let len = rng.gen_range(0..=64);
            let word = mechanical_word(alpha, beta, len).unwrap();
            assert_eq!(word.len(), len);
            assert!(is_balanced_naive(&word), "{alpha} {beta} {word}");
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&p("8,6,5,3,1")).unwrap(), w("10110101"));
        assert_eq!(omega(&p("5")).unwrap(), w("10000"));
        assert_eq!(omega(&Partition::staircase(3)).unwrap(), w("111"));
        assert_eq!(omega_inv(&w("10110101")).unwrap(), p("8,6,5,3,1"));
        assert_eq!(omega_inv(&w("1")).unwrap(), p("1"));
        assert_eq!(omega_inv(&w("111")).unwrap(), p("3,2,1"));
        assert!(omega(&p("2,2")).is_err());
        assert!(omega(&p("1,1")).is_err());
        assert!(omega_inv(&w("0110")).is_err());
        assert!(omega_inv(&w("1100")).is_err());
    }

    #[test]
    fn omega_round_trips() {
        for q in partitions_up_to(40) {
            if q.is_empty() || !q.has_distinct_parts() || !is_triangular_reference(&q) {
                continue;
            }
            let word = omega(&q).unwrap();
            assert_eq!(word.len() as i64, q.width());
            assert_eq!(word.ones() as i64, q.height());
            assert_eq!(omega_inv(&word).unwrap(), q);
        }
        for len in 1..=16 {
            for word in all_words(len).filter(|x| x.bits()[0] == 1 && is_balanced_naive(x)) {
                assert_eq!(omega(&omega_inv(&word).unwrap()).unwrap(), word);
            }
        }
    }

    #[test]
    fn chi_examples() {
        let t = chi(&p("12,9,7,4,1")).unwrap();
        assert_eq!((t.m(), t.d(), t.w().to_string()), (1, 2, "1011".into()));
        assert_eq!(
            chi(&p("2,1")).unwrap(),
            ChiTriple::new(1, 1, w("0")).unwrap()
        );
        assert_eq!(
            chi(&p("3,1")).unwrap(),
            ChiTriple::new(1, 2, w("0")).unwrap()
        );
        assert_eq!(xi(&t).unwrap(), p("12,9,7,4,1"));
        assert_eq!(
            xi(&ChiTriple::new(1, 1, w("00")).unwrap()).unwrap(),
            p("3,2,1")
        );
        assert_eq!(
            xi(&ChiTriple::new(2, 2, w("0")).unwrap()).unwrap(),
            p("4,2")
        );
        assert_eq!(chi_size(&t).unwrap(), 33);
        assert_eq!(
            chi_size(&ChiTriple::new(1, 1, w("00")).unwrap()).unwrap(),
            6
        );
        assert_eq!(chi_size(&ChiTriple::new(2, 2, w("0")).unwrap()).unwrap(), 6);
        assert!(chi(&p("5")).is_err());
        assert!(chi(&p("3,3")).is_err());
    }

    #[test]
    fn chi_triple_validation() {
        assert!(ChiTriple::new(3, 1, w("0")).is_err());
        assert!(ChiTriple::new(1, 1, w("11")).is_err());
        assert!(ChiTriple::new(1, 1, w("0011")).is_err());
        assert!(ChiTriple::new(0, 1, w("0")).is_err());
        assert!(ChiTriple::new(2, 1, w("01")).is_ok());
        assert!(ChiTriple::new(2, 1, w("1001")).is_err());
        for len in 1..=10 {
            for word in all_words(len) {
                let valid = word.bits().contains(&0)
                    && is_balanced_naive(&word)
                    && is_balanced_naive(&word.pushed(1));
                assert_eq!(ChiTriple::new(2, 1, word.clone()).is_ok(), valid, "{word}");
            }
        }
    }

    #[test]
    fn chi_round_trips_on_partitions() {
        for q in partitions_up_to(40) {
            if q.height() < 2 || !q.has_distinct_parts() || !is_triangular_reference(&q) {
                continue;
            }
            let t = chi(&q).unwrap();
            assert_eq!(xi(&t).unwrap(), q);
            assert_eq!(chi_size(&t).unwrap(), q.size());
        }
    }

    #[test]
    fn chi_round_trips_on_triples() {
        for len in 1..=10 {
            for word in all_words(len).filter(is_balanced_naive) {
                for d in 1..=6 {
                    for m in 1..=6 {
                        let Ok(t) = ChiTriple::new(m, d, word.clone()) else {
                            continue;
                        };
                        let q = xi(&t).unwrap();
                        assert!(is_triangular(&q).triangular, "{q}");
                        assert_eq!(q.height() as usize, len + 1);
                        assert_eq!(chi(&q).unwrap(), t);
                        assert_eq!(chi_size(&t).unwrap(), q.size());
                    }
                }
            }
        }
    }

    #[test]
    fn extension_examples() {
        let s = BalanceState::new();
        let s001 = s.extend(0).unwrap().extend(0).unwrap().extend(1).unwrap();
        assert!(s001.extend(1).is_none());
        assert_eq!(s.extend(1).unwrap().word(), &w("1"));
        let s10 = s.extend(1).unwrap().extend(0).unwrap();
        assert_eq!(s10.extend(1).unwrap().word(), &w("101"));
    }

    #[test]
    fn push_and_pop_restore_state() {
        let mut state = BalanceState::new();
        for bit in [1, 1, 0] {
            assert!(state.push(bit));
        }
        let snapshot = state.clone();
        assert!(!state.push(0));
        assert_eq!(state.word().to_string(), "110");
        assert!(state.push(1));
        state.pop();
        assert_eq!(state.windows, snapshot.windows);
        assert_eq!(state.prefix, snapshot.prefix);
        for _ in 0..3 {
            state.pop();
        }
        assert_eq!(state.windows, BalanceState::new().windows);
        assert_eq!(state.pop(), None);
    }

    #[test]
    fn walk_with_push_and_pop_matches_naive() {
        fn walk(state: &mut BalanceState, depth: usize, seen: &mut usize) {
            *seen += 1;
            if depth == 0 {
                return;
            }
            for bit in [0, 1] {
                let extended = state.word().pushed(bit);
                let ok = state.push(bit);
                assert_eq!(ok, is_balanced_naive(&extended), "{extended}");
                if ok {
                    walk(state, depth - 1, seen);
                    assert_eq!(state.pop(), Some(bit));
                }
            }
        }
        let mut seen = 0;
        walk(&mut BalanceState::new(), 12, &mut seen);
        let expected: u64 = (0..=12).map(|l| balanced_count_formula(l).unwrap()).sum();
        assert_eq!(seen as u64, expected);
    }

    #[test]
    fn extension_matches_naive() {
        let mut frontier = vec![BalanceState::new()];
        for _ in 0..14 {
            let mut next = Vec::new();
            for state in &frontier {
                for bit in [0, 1] {
                    let extended = state.word().pushed(bit);
                    let got = state.extend(bit);
                    assert_eq!(got.is_some(), is_balanced_naive(&extended), "{extended}");
                    next.extend(got);
                }
            }
            frontier = next;
        }
    }

    #[test]
    fn reduction_examples() {
        let tall: Partition = "5^576,4^1037,3^1037,2^1036,1^1037".parse().unwrap();
        assert_eq!(
            removable_via_reduction(&tall).unwrap(),
            vec![Cell::new(3, 2650)]
        );
        let wide = p("4723,3686,2650,1613,576");
        assert_eq!(
            removable_via_reduction(&wide).unwrap(),
            vec![Cell::new(2650, 3)]
        );
        let nu = xi(&ChiTriple::new(1, 1, w("1011")).unwrap()).unwrap();
        assert_eq!(nu, p("8,6,5,3,1"));
        assert_eq!(is_triangular(&nu).removable, vec![Cell::new(5, 3)]);
        assert_eq!(
            removable_via_reduction(&p("2,1")).unwrap(),
            vec![Cell::new(2, 1), Cell::new(1, 2)]
        );
        assert!(removable_via_reduction(&p("8,6,3,3,1")).is_err());
        assert!(removable_via_reduction(&p("5,2,1")).is_err());
    }

    #[test]
    fn reduction_matches_hull() {
        for q in partitions_up_to(30) {
            let report = is_triangular(&q);
            if report.triangular {
                assert_eq!(
                    removable_via_reduction(&q).unwrap(),
                    report.removable,
                    "{q}"
                );
            } else {
                assert!(removable_via_reduction(&q).is_err(), "{q}");
            }
        }
    }

    #[test]
    fn reduction_on_large_triples() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let mut checked = 0;
        while checked < 1000 {
            let len = rng.gen_range(1..=12);
            let word = BinaryWord((0..len).map(|_| rng.gen_range(0..2)).collect());
            let d = rng.gen_range(1..=60_000);
            let m = rng.gen_range(1..=d + 1);
            let Ok(t) = ChiTriple::new(m, d, word) else {
                continue;
            };
            let q = xi(&t).unwrap();
            let report = is_triangular(&q);
            assert!(report.triangular);
            assert_eq!(
                removable_via_reduction(&q).unwrap(),
                report.removable,
                "{q}"
            );
            let tall = q.conjugate();
            assert_eq!(
                removable_via_reduction(&tall).unwrap(),
                is_triangular(&tall).removable
            );
            checked += 1;
        }
    }

    #[test]
    fn count_formula() {
        assert_eq!(balanced_count_formula(0).unwrap(), 1);
        assert_eq!(balanced_count_formula(1).unwrap(), 2);
        assert_eq!(balanced_count_formula(3).unwrap(), 8);
        assert_eq!(balanced_count_formula(4).unwrap(), 14);
        for len in 0..=16 {
            let brute = all_words(len).filter(is_balanced_naive).count() as u64;
            assert_eq!(balanced_count_formula(len).unwrap(), brute, "length {len}");
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(balanced_enumerate(0).unwrap(), vec![w("")]);
        assert_eq!(balanced_enumerate(1).unwrap(), vec![w("0"), w("1")]);
        let four = balanced_enumerate(4).unwrap();
        assert_eq!(four.len(), 14);
        assert!(!four.contains(&w("0011")) && !four.contains(&w("1100")));
        let naive: Vec<BinaryWord> = all_words(4).filter(is_balanced_naive).collect();
        assert_eq!(four, naive);
        for len in 0..=BALANCED_ENUMERATE_GUARD {
            let words = balanced_enumerate(len).unwrap();
            assert!(words.windows(2).all(|p| p[0] < p[1]));
            assert_eq!(words.len() as u64, balanced_count_formula(len).unwrap());
        }
        assert!(balanced_enumerate(31).is_err());
    }

    proptest! {
        #[test]
        fn random_words_agree(bits in proptest::collection::vec(0u8..2, 0..40)) {
            let word = BinaryWord(bits);
            prop_assert_eq!(is_balanced(&word), is_balanced_naive(&word));
        }
    }
}
