//! Binary words and sets of equal-length words, with the subsequence
//! machinery built on them: deletion and insertion balls, deletion distance,
//! prefix filtering and prepending, and the complement/reversal symmetries.
//!
//! # Bit order
//!
//! A [`BitWord`] of length `n` stores its symbols in the low `n` bits of a
//! `u64`. The leftmost symbol of the written string is the most significant
//! of those bits, so the integer code of `"0110"` is `0b0110 = 6`. With this
//! layout ascending integer code coincides with lexicographic order of the
//! strings for words of equal length, and every set in this crate is kept in
//! that order. All parsing and printing goes through [`BitWord::from_str`]
//! and the `Display` impl.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{domain, Error, Result};

/// Longest word representable in one machine word.
pub const MAX_LEN: usize = 63;

/// Largest member length for which a [`SequenceSet`] carries a dense bitset.
pub const DENSE_MAX_LEN: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitWord {
    // Field order matters for the derived `Ord`: shorter words sort first,
    // then by code.
    len: u8,
    bits: u64,
}

#[inline]
fn low_mask(len: usize) -> u64 {
    if len == 0 {
        0
    } else {
        u64::MAX >> (64 - len)
    }
}

impl BitWord {
    pub const fn empty() -> Self {
        BitWord { len: 0, bits: 0 }
    }

    /// Builds a word from its integer code. Fails if `len > 63` or if `code`
    /// has bits set at or above position `len`.
    pub fn from_code(code: u64, len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::LengthOverflow { len, max: MAX_LEN });
        }
        if code & !low_mask(len) != 0 {
            return Err(domain(format!(
                "code {code:#x} does not fit in {len} symbols"
            )));
        }
        Ok(BitWord {
            len: len as u8,
            bits: code,
        })
    }

    #[inline]
    pub(crate) fn from_code_unchecked(code: u64, len: usize) -> Self {
        debug_assert!(len <= MAX_LEN && code & !low_mask(len) == 0);
        BitWord {
            len: len as u8,
            bits: code,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The integer code; see the module docs for the bit order.
    #[inline]
    pub fn code(&self) -> u64 {
        self.bits
    }

    /// Symbol at position `i`, counted from the left starting at 0.
    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.len(), "index {i} out of range for length {}", self.len);
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    pub fn symbols(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn alternating(n: usize) -> Result<Self> {
        if n > MAX_LEN {
            return Err(Error::LengthOverflow { len: n, max: MAX_LEN });
        }
        // The leftmost symbol sits at bit n-1 and is a 1, so the ones are at
        // the bit positions with the same parity as n-1.
        let pattern = if n.is_multiple_of(2) {
            0xAAAA_AAAA_AAAA_AAAAu64
        } else {
            0x5555_5555_5555_5555u64
        };
        Ok(BitWord::from_code_unchecked(pattern & low_mask(n), n))
    }

    pub fn complement(&self) -> Self {
        BitWord::from_code_unchecked(!self.bits & low_mask(self.len()), self.len())
    }

    pub fn reverse(&self) -> Self {
        if self.len == 0 {
            return *self;
        }
        BitWord::from_code_unchecked(self.bits.reverse_bits() >> (64 - self.len()), self.len())
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &BitWord) -> Result<Self> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return Err(Error::LengthOverflow { len, max: MAX_LEN });
        }
        Ok(BitWord::from_code_unchecked(
            (self.bits << other.len()) | other.bits,
            len,
        ))
    }

    /// First `k` symbols.
    pub fn prefix(&self, k: usize) -> Self {
        assert!(k <= self.len());
        BitWord::from_code_unchecked(self.bits >> (self.len() - k), k)
    }

    /// Symbols from position `from` (0-based) to the end.
    pub fn suffix(&self, from: usize) -> Self {
        assert!(from <= self.len());
        let len = self.len() - from;
        BitWord::from_code_unchecked(self.bits & low_mask(len), len)
    }

    pub fn count_ones(&self) -> u32 {
        self.bits.count_ones()
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            f.write_str(if s == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord(\"{self}\")")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let len = s.len();
        if len > MAX_LEN {
            return Err(Error::LengthOverflow { len, max: MAX_LEN });
        }
        let mut code = 0u64;
        for (i, c) in s.bytes().enumerate() {
            let bit = match c {
                b'0' => 0,
                b'1' => 1,
                _ => {
                    return Err(Error::Parse {
                        text: s.to_string(),
                        reason: format!("unexpected character at position {}", i + 1),
                    })
                }
            };
            code = (code << 1) | bit;
        }
        Ok(BitWord::from_code_unchecked(code, len))
    }
}

/// All `2^len` words of length `len`, in ascending order.
pub fn all_words(len: usize) -> impl Iterator<Item = BitWord> {
    assert!(len <= MAX_LEN);
    (0..(1u64 << len)).map(move |c| BitWord::from_code_unchecked(c, len))
}

pub fn alternating(n: usize) -> Result<BitWord> {
    BitWord::alternating(n)
}

pub fn complement(x: &BitWord) -> BitWord {
    x.complement()
}

pub fn reverse(x: &BitWord) -> BitWord {
    x.reverse()
}

pub fn concat(v: &BitWord, x: &BitWord) -> Result<BitWord> {
    v.concat(x)
}

/// Greedy left-to-right test of whether `y` is a subsequence of `x`.
pub fn is_subsequence(y: &BitWord, x: &BitWord) -> bool {
    earliest_embedding_end(y, x).is_some()
}

/// Smallest `k` such that `v` is a subsequence of the first `k` symbols of
/// `x`, or `None` if `v` is not a subsequence of `x` at all.
pub fn earliest_embedding_end(v: &BitWord, x: &BitWord) -> Option<usize> {
    if v.len() > x.len() {
        return None;
    }
    let mut matched = 0;
    if matched == v.len() {
        return Some(0);
    }
    for i in 0..x.len() {
        if x.get(i) == v.get(matched) {
            matched += 1;
            if matched == v.len() {
                return Some(i + 1);
            }
        }
    }
    None
}

/// The set of all distinct length-`|x|-t` subsequences of `x`.
///
/// Each subsequence is produced exactly once by always embedding the next
/// symbol at its first occurrence after the current position; branching on
/// `0` before `1` yields the members already in ascending order.
pub fn deletion_ball(x: &BitWord, t: usize) -> Result<SequenceSet> {
    let n = x.len();
    if t > n {
        return Err(domain(format!(
            "deletion radius {t} exceeds word length {n}"
        )));
    }
    let target = n - t;
    // next[p][c]: first position >= p holding symbol c, or n.
    let mut next = vec![[n; 2]; n + 1];
    for p in (0..n).rev() {
        next[p] = next[p + 1];
        next[p][x.get(p) as usize] = p;
    }
    let mut out = Vec::new();
    fn walk(
        next: &[[usize; 2]],
        n: usize,
        pos: usize,
        remaining: usize,
        acc: u64,
        out: &mut Vec<u64>,
    ) {
        if remaining == 0 {
            out.push(acc);
            return;
        }
        for c in 0..2 {
            let j = next[pos][c];
            if j < n && n - j >= remaining {
                walk(next, n, j + 1, remaining - 1, (acc << 1) | c as u64, out);
            }
        }
    }
    walk(&next, n, 0, target, 0, &mut out);
    Ok(SequenceSet::from_sorted_codes(target, out))
}

/// All words of length `|y|+t` that contain `y` as a subsequence.
///
/// Every supersequence is generated along the unique path of its greedy
/// embedding of `y`, so there are no duplicates and the output is ascending.
pub fn insertion_ball(y: &BitWord, t: usize) -> Result<SequenceSet> {
    let n = y.len() + t;
    if n > MAX_LEN {
        return Err(Error::LengthOverflow { len: n, max: MAX_LEN });
    }
    let mut out = Vec::new();
    fn walk(y: &BitWord, n: usize, pos: usize, matched: usize, acc: u64, out: &mut Vec<u64>) {
        if pos == n {
            out.push(acc);
            return;
        }
        for c in 0..2u8 {
            let m = if matched < y.len() && y.get(matched) == c {
                matched + 1
            } else {
                matched
            };
            if n - pos > y.len() - m {
                walk(y, n, pos + 1, m, (acc << 1) | c as u64, out);
            }
        }
    }
    walk(y, n, 0, 0, 0, &mut out);
    Ok(SequenceSet::from_sorted_codes(n, out))
}

/// Length of a longest common subsequence, by the quadratic DP.
pub fn lcs_len(x: &BitWord, y: &BitWord) -> usize {
    let (n, m) = (x.len(), y.len());
    let mut prev = vec![0usize; m + 1];
    let mut cur = vec![0usize; m + 1];
    for i in 1..=n {
        for j in 1..=m {
            cur[j] = if x.get(i - 1) == y.get(j - 1) {
                prev[j - 1] + 1
            } else {
                prev[j].max(cur[j - 1])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[m]
}

/// Smallest `t` for which the `t`-deletion balls of `x` and `y` meet,
/// computed as `|x| - LCS(x, y)`.
pub fn deletion_distance(x: &BitWord, y: &BitWord) -> Result<usize> {
    if x.len() != y.len() {
        return Err(domain(format!(
            "deletion distance needs equal lengths, got {} and {}",
            x.len(),
            y.len()
        )));
    }
    Ok(x.len() - lcs_len(x, y))
}

pub fn prefix_filter(s: &SequenceSet, v: &BitWord) -> Result<SequenceSet> {
    s.prefix_filter(v)
}

pub fn prepend(v: &BitWord, s: &SequenceSet) -> Result<SequenceSet> {
    s.prepend(v)
}

pub fn intersect_all(sets: &[SequenceSet]) -> Result<SequenceSet> {
    SequenceSet::intersect_all(sets)
}

/// A duplicate-free set of equal-length words kept in ascending code order.
///
/// For member lengths up to [`DENSE_MAX_LEN`] a bitset over all `2^m` codes
/// is built on first use and cached alongside the sorted list.
#[derive(Clone)]
pub struct SequenceSet {
    member_length: usize,
    codes: Vec<u64>,
    dense: OnceLock<Vec<u64>>,
}

impl PartialEq for SequenceSet {
    fn eq(&self, other: &Self) -> bool {
        self.member_length == other.member_length && self.codes == other.codes
    }
}

impl Eq for SequenceSet {}

impl fmt::Debug for SequenceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Newline-separated words, ascending, no trailing newline.
impl fmt::Display for SequenceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

pub(crate) fn dense_words(member_length: usize) -> usize {
    (1usize << member_length).div_ceil(64)
}

impl SequenceSet {
    pub fn empty(member_length: usize) -> Self {
        Self::from_sorted_codes(member_length, Vec::new())
    }

    pub(crate) fn from_sorted_codes(member_length: usize, codes: Vec<u64>) -> Self {
        debug_assert!(codes.windows(2).all(|w| w[0] < w[1]));
        SequenceSet {
            member_length,
            codes,
            dense: OnceLock::new(),
        }
    }

    /// Collects `words` into a set, sorting and removing duplicates.
    pub fn from_words<I>(member_length: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = BitWord>,
    {
        if member_length > MAX_LEN {
            return Err(Error::LengthOverflow {
                len: member_length,
                max: MAX_LEN,
            });
        }
        let mut codes = Vec::new();
        for w in words {
            if w.len() != member_length {
                return Err(Error::MixedLengths {
                    expected: member_length,
                    found: w.len(),
                });
            }
            codes.push(w.code());
        }
        codes.sort_unstable();
        codes.dedup();
        Ok(Self::from_sorted_codes(member_length, codes))
    }

    /// Builds a set from a dense bitset over all `2^member_length` codes.
    pub fn from_dense(member_length: usize, bits: Vec<u64>) -> Result<Self> {
        if member_length > DENSE_MAX_LEN {
            return Err(domain(format!(
                "dense form supports member lengths up to {DENSE_MAX_LEN}, got {member_length}"
            )));
        }
        if bits.len() != dense_words(member_length) {
            return Err(domain("dense bitset has the wrong number of words"));
        }
        let universe = 1u64 << member_length;
        let mut codes = Vec::new();
        for (wi, &word) in bits.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let code = (wi as u64) * 64 + w.trailing_zeros() as u64;
                if code >= universe {
                    return Err(domain("dense bitset has bits beyond the universe"));
                }
                codes.push(code);
                w &= w - 1;
            }
        }
        let set = Self::from_sorted_codes(member_length, codes);
        let _ = set.dense.set(bits);
        Ok(set)
    }

    pub fn member_length(&self) -> usize {
        self.member_length
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn codes(&self) -> &[u64] {
        &self.codes
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = BitWord> + '_ {
        let m = self.member_length;
        self.codes
            .iter()
            .map(move |&c| BitWord::from_code_unchecked(c, m))
    }

    pub fn to_vec(&self) -> Vec<BitWord> {
        self.iter().collect()
    }

    pub fn contains(&self, w: &BitWord) -> bool {
        w.len() == self.member_length && self.codes.binary_search(&w.code()).is_ok()
    }

    pub fn is_subset(&self, other: &SequenceSet) -> bool {
        self.member_length == other.member_length
            && self.codes.iter().all(|c| other.codes.binary_search(c).is_ok())
    }

    /// The dense bitset form, or `None` when the member length is above
    /// [`DENSE_MAX_LEN`].
    pub fn dense(&self) -> Option<&[u64]> {
        if self.member_length > DENSE_MAX_LEN {
            return None;
        }
        Some(self.dense.get_or_init(|| {
            let mut bits = vec![0u64; dense_words(self.member_length)];
            for &c in &self.codes {
                bits[(c >> 6) as usize] |= 1 << (c & 63);
            }
            bits
        }))
    }

    /// Members whose first `|v|` symbols equal `v`. Members with a common
    /// prefix are contiguous in code order, so this is a range lookup.
    pub fn prefix_filter(&self, v: &BitWord) -> Result<SequenceSet> {
        let m = self.member_length;
        if v.len() > m {
            return Err(domain(format!(
                "prefix of length {} longer than members of length {m}",
                v.len()
            )));
        }
        let shift = m - v.len();
        let lo = v.code() << shift;
        let hi = lo | low_mask(shift);
        let start = self.codes.partition_point(|&c| c < lo);
        let end = self.codes.partition_point(|&c| c <= hi);
        Ok(Self::from_sorted_codes(m, self.codes[start..end].to_vec()))
    }

    /// `{ v x : x in self }`.
    pub fn prepend(&self, v: &BitWord) -> Result<SequenceSet> {
        let len = v.len() + self.member_length;
        if len > MAX_LEN {
            return Err(Error::LengthOverflow { len, max: MAX_LEN });
        }
        let high = v.code() << self.member_length;
        Ok(Self::from_sorted_codes(
            len,
            self.codes.iter().map(|&c| high | c).collect(),
        ))
    }

    pub fn intersect(&self, other: &SequenceSet) -> Result<SequenceSet> {
        Self::intersect_all(&[self.clone(), other.clone()])
    }

    /// Intersection of a nonempty list of sets of one member length. Uses
    /// word-wise AND over the dense form when the length permits it.
    pub fn intersect_all(sets: &[SequenceSet]) -> Result<SequenceSet> {
        let first = sets
            .first()
            .ok_or_else(|| domain("intersection of an empty list of sets"))?;
        let m = first.member_length;
        if let Some(bad) = sets.iter().find(|s| s.member_length != m) {
            return Err(Error::MixedLengths {
                expected: m,
                found: bad.member_length,
            });
        }
        if sets.len() == 1 {
            return Ok(first.clone());
        }
        if m <= DENSE_MAX_LEN {
            let mut acc = first.dense().expect("dense form available").to_vec();
            for s in &sets[1..] {
                let d = s.dense().expect("dense form available");
                for (a, b) in acc.iter_mut().zip(d) {
                    *a &= *b;
                }
            }
            return Self::from_dense(m, acc);
        }
        let mut acc = first.codes.clone();
        for s in &sets[1..] {
            acc.retain(|c| s.codes.binary_search(c).is_ok());
        }
        Ok(Self::from_sorted_codes(m, acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    fn set(len: usize, words: &[&str]) -> SequenceSet {
        SequenceSet::from_words(len, words.iter().map(|s| w(s))).unwrap()
    }

    #[test]
    fn text_round_trip_and_code_order() {
        let x = w("0110");
        assert_eq!(x.code(), 6);
        assert_eq!(x.to_string(), "0110");
        assert_eq!(w("").len(), 0);
        assert!("012".parse::<BitWord>().is_err());
        assert!("0".repeat(64).parse::<BitWord>().is_err());
        assert_eq!(w(&"1".repeat(63)).len(), 63);
        assert!(BitWord::from_code(4, 2).is_err());
    }

    #[test]
    fn alternating_words() {
        assert_eq!(alternating(4).unwrap(), w("1010"));
        assert_eq!(alternating(5).unwrap(), w("10101"));
        assert_eq!(alternating(0).unwrap(), BitWord::empty());
        assert_eq!(alternating(1).unwrap(), w("1"));
        let long = alternating(63).unwrap();
        assert!(long.symbols().enumerate().all(|(i, s)| s == (i % 2 == 0) as u8));
        assert!(alternating(64).is_err());
    }

    #[test]
    fn symmetry_maps_and_concat() {
        assert_eq!(complement(&w("10")), w("01"));
        assert_eq!(reverse(&w("110")), w("011"));
        assert_eq!(concat(&w("10"), &w("1010")).unwrap(), w("101010"));
        assert_eq!(reverse(&BitWord::empty()), BitWord::empty());
        let a = alternating(40).unwrap();
        let b = alternating(24).unwrap();
        assert!(matches!(concat(&a, &b), Err(Error::LengthOverflow { .. })));
        assert_eq!(w("10110").suffix(2), w("110"));
        assert_eq!(w("10110").prefix(2), w("10"));
    }

    #[test]
    fn subsequence_tests() {
        assert!(is_subsequence(&w("10"), &w("0110")));
        assert!(is_subsequence(&w("11"), &w("1010")));
        assert!(!is_subsequence(&w("000"), &w("1010")));
        assert!(is_subsequence(&BitWord::empty(), &w("101")));
        assert!(!is_subsequence(&w("1011"), &w("101")));
    }

    #[test]
    fn earliest_embedding() {
        assert_eq!(earliest_embedding_end(&w("1"), &w("001")), Some(3));
        assert_eq!(earliest_embedding_end(&w("1"), &w("0110")), Some(2));
        assert_eq!(earliest_embedding_end(&w("10"), &w("01")), None);
        assert_eq!(earliest_embedding_end(&BitWord::empty(), &w("01")), Some(0));
    }

    #[test]
    fn deletion_ball_examples() {
        assert_eq!(deletion_ball(&w("101"), 1).unwrap(), set(2, &["01", "10", "11"]));
        assert_eq!(
            deletion_ball(&w("1010"), 2).unwrap(),
            set(2, &["00", "01", "10", "11"])
        );
        let x = w("100110");
        let full = deletion_ball(&x, 6).unwrap();
        assert_eq!(full.to_vec(), vec![BitWord::empty()]);
        assert_eq!(deletion_ball(&x, 0).unwrap().to_vec(), vec![x]);
        assert!(deletion_ball(&x, 7).is_err());
    }

    #[test]
    fn insertion_ball_examples() {
        assert_eq!(insertion_ball(&w("0"), 1).unwrap(), set(2, &["00", "01", "10"]));
        assert_eq!(insertion_ball(&w("0110"), 0).unwrap().to_vec(), vec![w("0110")]);
        assert_eq!(
            insertion_ball(&BitWord::empty(), 2).unwrap(),
            set(2, &["00", "01", "10", "11"])
        );
        assert!(insertion_ball(&alternating(62).unwrap(), 2).is_err());
    }

    #[test]
    fn deletion_distance_examples() {
        assert_eq!(deletion_distance(&w("10"), &w("01")).unwrap(), 1);
        assert_eq!(deletion_distance(&w("1101"), &w("1101")).unwrap(), 0);
        assert_eq!(deletion_distance(&w("1010"), &w("0101")).unwrap(), 1);
        assert_eq!(deletion_distance(&w("0000"), &w("1111")).unwrap(), 4);
        assert!(deletion_distance(&w("10"), &w("101")).is_err());
    }

    #[test]
    fn prefix_filter_and_prepend() {
        let all2 = set(2, &["00", "01", "10", "11"]);
        assert_eq!(prefix_filter(&all2, &w("1")).unwrap(), set(2, &["10", "11"]));
        assert_eq!(prefix_filter(&all2, &BitWord::empty()).unwrap(), all2);
        let ball = deletion_ball(&w("0110"), 2).unwrap();
        assert_eq!(prefix_filter(&ball, &w("1")).unwrap(), set(2, &["10", "11"]));
        assert!(prefix_filter(&all2, &w("101")).is_err());

        assert_eq!(prepend(&w("1"), &set(1, &["0", "1"])).unwrap(), set(2, &["10", "11"]));
        assert_eq!(prepend(&BitWord::empty(), &all2).unwrap(), all2);
        assert_eq!(prepend(&w("01"), &set(1, &["1"])).unwrap(), set(3, &["011"]));
    }

    #[test]
    fn intersections() {
        let balls: Vec<_> = ["1010", "0110", "0101"]
            .iter()
            .map(|s| deletion_ball(&w(s), 2).unwrap())
            .collect();
        assert_eq!(
            intersect_all(&balls).unwrap(),
            set(2, &["00", "01", "10", "11"])
        );
        let s = set(3, &["001", "110"]);
        assert_eq!(intersect_all(std::slice::from_ref(&s)).unwrap(), s);
        assert!(intersect_all(&[s.clone(), SequenceSet::empty(3)]).unwrap().is_empty());
        assert!(matches!(
            intersect_all(&[s.clone(), SequenceSet::empty(2)]),
            Err(Error::MixedLengths { .. })
        ));
        assert!(intersect_all(&[]).is_err());

        // Sparse path, above the dense threshold.
        let a = SequenceSet::from_words(30, [BitWord::from_code(5, 30).unwrap(), BitWord::from_code(9, 30).unwrap()]).unwrap();
        let b = SequenceSet::from_words(30, [BitWord::from_code(9, 30).unwrap()]).unwrap();
        assert!(a.dense().is_none());
        assert_eq!(a.intersect(&b).unwrap(), b);
    }

    #[test]
    fn dense_and_sparse_agree() {
        let s = deletion_ball(&w("1101001011"), 3).unwrap();
        let back = SequenceSet::from_dense(7, s.dense().unwrap().to_vec()).unwrap();
        assert_eq!(back, s);
        assert!(SequenceSet::from_dense(2, vec![0b10000]).is_err());
    }

    #[test]
    fn from_words_normalizes() {
        let s = SequenceSet::from_words(2, [w("11"), w("00"), w("11")]).unwrap();
        assert_eq!(s.codes(), &[0, 3]);
        assert!(SequenceSet::from_words(2, [w("1")]).is_err());
        assert_eq!(s.to_string(), "00\n11");
    }
}
