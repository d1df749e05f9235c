//! The channel side: distinct reads of fixed length `n - t`, list decoding
//! by intersecting supersequence sets, and the `N_ℓ(n, t) + 1` threshold.

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitseq::{deletion_ball, insertion_ball, is_subsequence, BitWord, SequenceSet};
use crate::combinatorics::reconstruction_threshold;
use crate::error::{domain, Error, Result};
use crate::extremal::extremal_family;

/// Distinct reads, all of length `n - t` with `t >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadSet {
    n: usize,
    t: usize,
    reads: SequenceSet,
}

impl ReadSet {
    /// Validates `reads` against the transmitted length `n`. The deletion
    /// count is implied by the read length. Duplicates and mixed lengths
    /// are rejected, not repaired.
    pub fn new(n: usize, reads: Vec<BitWord>) -> Result<Self> {
        let first = reads
            .first()
            .ok_or_else(|| Error::InvalidReads("no reads given".into()))?;
        let len = first.len();
        if len >= n {
            return Err(Error::InvalidReads(format!(
                "read length {len} must be below the transmitted length {n}"
            )));
        }
        for (i, r) in reads.iter().enumerate() {
            if r.len() != len {
                return Err(Error::InvalidReads(format!(
                    "read {} has length {}, expected {len}",
                    i + 1,
                    r.len()
                )));
            }
        }
        let count = reads.len();
        let set = SequenceSet::from_words(len, reads)?;
        if set.len() != count {
            return Err(Error::InvalidReads(format!(
                "{} duplicate read(s)",
                count - set.len()
            )));
        }
        Self::from_set(n, set)
    }

    pub fn from_set(n: usize, reads: SequenceSet) -> Result<Self> {
        if reads.is_empty() {
            return Err(Error::InvalidReads("no reads given".into()));
        }
        let len = reads.member_length();
        if len >= n {
            return Err(Error::InvalidReads(format!(
                "read length {len} must be below the transmitted length {n}"
            )));
        }
        Ok(ReadSet {
            n,
            t: n - len,
            reads,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn reads(&self) -> &SequenceSet {
        &self.reads
    }

    pub fn len(&self) -> usize {
        self.reads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reads.is_empty()
    }
}

/// Parses a read file: one read per line, `#` comment lines and blank lines
/// skipped. Errors carry the 1-based line number.
pub fn parse_reads(text: &str, n: usize) -> Result<ReadSet> {
    let mut reads: Vec<BitWord> = Vec::new();
    let mut seen = std::collections::HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let read: BitWord = line.parse().map_err(|e| Error::ReadFile {
            line: line_no,
            reason: match e {
                Error::Parse { reason, .. } => reason,
                other => other.to_string(),
            },
        })?;
        if let Some(first) = reads.first() {
            if read.len() != first.len() {
                return Err(Error::ReadFile {
                    line: line_no,
                    reason: format!("read has length {}, expected {}", read.len(), first.len()),
                });
            }
        } else if read.len() >= n {
            return Err(Error::ReadFile {
                line: line_no,
                reason: format!(
                    "read length {} must be below the transmitted length {n}",
                    read.len()
                ),
            });
        }
        if let Some(prev) = seen.insert(read, line_no) {
            return Err(Error::ReadFile {
                line: line_no,
                reason: format!("duplicate of the read on line {prev}"),
            });
        }
        reads.push(read);
    }
    if reads.is_empty() {
        return Err(Error::ReadFile {
            line: 0,
            reason: "file contains no reads".into(),
        });
    }
    ReadSet::new(n, reads)
}

/// `m` distinct elements of `D_t(x)`, uniform without replacement. The
/// generator is ChaCha8 seeded from `seed`, so equal seeds give equal reads.
pub fn sample_reads(x: &BitWord, t: usize, m: usize, seed: u64) -> Result<ReadSet> {
    if t < 1 || t > x.len() {
        return Err(domain(format!("need 1 <= t <= {}, got t = {t}", x.len())));
    }
    if m < 1 {
        return Err(domain("must sample at least one read"));
    }
    let ball = deletion_ball(x, t)?;
    if m > ball.len() {
        return Err(Error::BallTooSmall {
            requested: m,
            ball_size: ball.len(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked = rand::seq::index::sample(&mut rng, ball.len(), m);
    let codes = ball.codes();
    let set = SequenceSet::from_words(
        ball.member_length(),
        picked
            .iter()
            .map(|i| BitWord::from_code(codes[i], ball.member_length()))
            .collect::<Result<Vec<_>>>()?,
    )?;
    ReadSet::from_set(x.len(), set)
}

/// Every length-`n` word having all reads as subsequences: the supersequence
/// set of the first read, filtered by the rest. Empty output means the reads
/// cannot have come from one word.
pub fn candidates(reads: &ReadSet) -> SequenceSet {
    let mut iter = reads.reads.iter();
    let first = iter.next().expect("read sets are nonempty");
    let pool = insertion_ball(&first, reads.t).expect("n is at most 63 for valid reads");
    let rest: Vec<BitWord> = iter.collect();
    let kept = pool
        .iter()
        .filter(|x| rest.iter().all(|r| is_subsequence(r, x)))
        .collect::<Vec<_>>();
    SequenceSet::from_words(reads.n, kept).expect("all candidates have length n")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub n: usize,
    pub ell: usize,
    pub t: usize,
    pub candidates: SequenceSet,
    pub read_count: usize,
    pub threshold: BigUint,
    pub guarantee_met: bool,
    pub list_within_bound: bool,
}

/// Decodes `reads` and compares the outcome with the `ℓ`-list threshold.
/// The report only records; whether a met guarantee with an oversized list
/// is a failure is left to the caller.
pub fn check_guarantee(n: usize, ell: usize, t: usize, reads: &ReadSet) -> Result<ReconstructionReport> {
    if ell < 3 {
        return Err(domain(format!("list bound needs ℓ >= 3, got {ell}")));
    }
    if reads.n != n || reads.t != t {
        return Err(Error::InvalidReads(format!(
            "reads are for n = {}, t = {}, queried n = {n}, t = {t}",
            reads.n, reads.t
        )));
    }
    let threshold = reconstruction_threshold(n as i64, ell as i64, t as i64)?;
    let cands = candidates(reads);
    let read_count = reads.len();
    let list_within_bound = cands.len() < ell;
    Ok(ReconstructionReport {
        n,
        ell,
        t,
        guarantee_met: BigUint::from(read_count) >= threshold,
        list_within_bound,
        candidates: cands,
        read_count,
        threshold,
    })
}

/// All common subsequences of the constructed family: `N_ℓ(n, t)` reads
/// that leave at least `ℓ` candidates.
pub fn worst_case_reads(n: usize, ell: usize, t: usize) -> Result<ReadSet> {
    let fam = extremal_family(n, ell)?;
    if t < 1 || t > n {
        return Err(domain(format!("need 1 <= t <= {n}, got t = {t}")));
    }
    ReadSet::from_set(n, fam.intersection(t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitseq::all_words;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    fn brute_candidates(reads: &ReadSet) -> Vec<BitWord> {
        all_words(reads.n())
            .filter(|x| reads.reads().iter().all(|r| is_subsequence(&r, x)))
            .collect()
    }

    #[test]
    fn sampling() {
        let full = sample_reads(&w("1010"), 2, 4, 99).unwrap();
        assert_eq!(full.reads().to_string(), "00\n01\n10\n11");
        let x = w("1101001110");
        let a = sample_reads(&x, 3, 10, 7).unwrap();
        let b = sample_reads(&x, 3, 10, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.reads().iter().all(|r| is_subsequence(&r, &x)));
        assert_eq!(
            sample_reads(&w("101"), 1, 5, 1),
            Err(Error::BallTooSmall {
                requested: 5,
                ball_size: 3
            })
        );
        assert!(sample_reads(&w("101"), 0, 1, 1).is_err());
    }

    #[test]
    fn candidate_examples() {
        let reads = ReadSet::new(3, vec![w("10"), w("01")]).unwrap();
        assert_eq!(candidates(&reads).to_string(), "010\n101");
        let reads = ReadSet::new(3, vec![w("00"), w("11")]).unwrap();
        assert!(candidates(&reads).is_empty());
        let x = w("0110");
        let reads = ReadSet::from_set(4, deletion_ball(&x, 2).unwrap()).unwrap();
        assert!(candidates(&reads).contains(&x));
        assert_eq!(candidates(&reads).to_vec(), brute_candidates(&reads));
    }

    #[test]
    fn read_set_validation() {
        assert!(ReadSet::new(4, vec![w("10"), w("10")]).is_err());
        assert!(ReadSet::new(4, vec![w("10"), w("101")]).is_err());
        assert!(ReadSet::new(2, vec![w("10")]).is_err());
        assert!(ReadSet::new(4, vec![]).is_err());
        let r = ReadSet::new(5, vec![w("101")]).unwrap();
        assert_eq!((r.n(), r.t(), r.len()), (5, 2, 1));
    }

    #[test]
    fn read_file_parsing() {
        let r = parse_reads("# header\n10\n\n01\n", 3).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(
            parse_reads("10\n1x\n", 3),
            Err(Error::ReadFile {
                line: 2,
                reason: "unexpected character at position 2".into()
            })
        );
        assert!(matches!(parse_reads("10\n101\n", 4), Err(Error::ReadFile { line: 2, .. })));
        assert!(matches!(parse_reads("10\n#c\n10\n", 4), Err(Error::ReadFile { line: 3, .. })));
        assert!(matches!(parse_reads("101\n", 3), Err(Error::ReadFile { line: 1, .. })));
        assert!(parse_reads("# nothing\n", 3).is_err());
        assert!(parse_reads("10\r\n01\r\n", 3).is_ok());
    }

    #[test]
    fn guarantee_on_extremal_instance() {
        let all = ReadSet::new(4, vec![w("00"), w("01"), w("10"), w("11")]).unwrap();
        let rep = check_guarantee(4, 3, 2, &all).unwrap();
        assert_eq!(rep.threshold, BigUint::from(5u32));
        assert!(!rep.guarantee_met);
        assert!(!rep.list_within_bound);
        for c in ["1010", "0110", "0101"] {
            assert!(rep.candidates.contains(&w(c)));
        }
        assert!(check_guarantee(4, 2, 2, &all).is_err());
        assert!(check_guarantee(5, 3, 2, &all).is_err());
    }

    #[test]
    fn guarantee_at_threshold_n6() {
        // Every 7-subset of every ball at n = 6, t = 2 leaves at most 2 candidates.
        let mut checked = 0;
        for x in all_words(6) {
            let ball = deletion_ball(&x, 2).unwrap();
            let codes = ball.to_vec();
            if codes.len() < 7 {
                continue;
            }
            for mask in 0u32..(1 << codes.len()) {
                if mask.count_ones() != 7 {
                    continue;
                }
                let picked: Vec<BitWord> = (0..codes.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| codes[i])
                    .collect();
                let reads = ReadSet::new(6, picked).unwrap();
                let rep = check_guarantee(6, 3, 2, &reads).unwrap();
                assert!(rep.guarantee_met);
                assert!(rep.list_within_bound, "x={x} reads={:?}", reads.reads());
                checked += 1;
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn worst_case_examples() {
        let r = worst_case_reads(4, 3, 2).unwrap();
        assert_eq!(r.len(), 4);
        let c = candidates(&r);
        for x in ["1010", "0110", "0101"] {
            assert!(c.contains(&w(x)));
        }
        let r = worst_case_reads(6, 3, 2).unwrap();
        assert_eq!(r.len(), 6);
        assert!(candidates(&r).len() >= 3);
        assert!(worst_case_reads(5, 4, 2).is_err());
    }
}
