//! Extremal families and exhaustive maximization of `|∩ D_t(x_i)|` over
//! `ℓ`-sets of distinct length-`n` words.
//!
//! The search enumerates ascending `ℓ`-subsets of integer codes and keeps the
//! running dense intersection of the chosen balls. Intersection size can
//! only shrink as centers are added, so a prefix whose running size cannot
//! beat the current best is cut. Optionally only tuples that are minimal in
//! their orbit under simultaneous complement/reversal are evaluated; both
//! maps send deletion balls to deletion balls, so the maximum is unchanged,
//! and the lexicographically least maximizer is always orbit-minimal, so the
//! reported witness is unchanged too.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bitseq::{
    alternating, all_words, deletion_ball, dense_words, intersect_all, BitWord, SequenceSet,
};
use crate::combinatorics::{binom, intersection_bound};
use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalFamily {
    pub n: usize,
    pub ell: usize,
    pub centers: Vec<BitWord>,
}

/// The family `10 a_{n-2}`, `01 a_{n-2}`, `(01)^2 a_{n-4}`, ...,
/// `(01)^{ℓ-1} a_{n-2(ℓ-1)}`, where `a_m` is the alternating word `1010…`
/// of length `m`.
pub fn extremal_family(n: usize, ell: usize) -> Result<ExtremalFamily> {
    if ell < 2 {
        return Err(domain(format!("family needs at least 2 centers, got {ell}")));
    }
    if n < 2 * (ell - 1) {
        return Err(domain(format!(
            "family of {ell} centers needs n >= {}, got n = {n}",
            2 * (ell - 1)
        )));
    }
    let one_zero: BitWord = "10".parse()?;
    let zero_one: BitWord = "01".parse()?;
    let mut centers = vec![one_zero.concat(&alternating(n - 2)?)?];
    let mut prefix = BitWord::empty();
    for j in 2..=ell {
        prefix = prefix.concat(&zero_one)?;
        centers.push(prefix.concat(&alternating(n - 2 * (j - 1))?)?);
    }
    let mut sorted = centers.clone();
    sorted.sort();
    sorted.dedup();
    debug_assert_eq!(sorted.len(), ell);
    Ok(ExtremalFamily { n, ell, centers })
}

impl ExtremalFamily {
    pub fn intersection(&self, t: usize) -> Result<SequenceSet> {
        common_subsequences(&self.centers, t)
    }
}

/// `∩ D_t(x)` over `centers`.
pub fn common_subsequences(centers: &[BitWord], t: usize) -> Result<SequenceSet> {
    let first = centers
        .first()
        .ok_or_else(|| domain("no centers given"))?;
    if let Some(bad) = centers.iter().find(|c| c.len() != first.len()) {
        return Err(Error::MixedLengths {
            expected: first.len(),
            found: bad.len(),
        });
    }
    let balls = centers
        .iter()
        .map(|c| deletion_ball(c, t))
        .collect::<Result<Vec<_>>>()?;
    intersect_all(&balls)
}

pub fn intersection_size(centers: &[BitWord], t: usize) -> Result<u64> {
    Ok(common_subsequences(centers, t)?.len() as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    BruteForceBelowFormula,
    BruteForceAboveFormula,
}

impl Verdict {
    fn compare(max_value: u64, formula: &BigUint) -> Self {
        let v = BigUint::from(max_value);
        match v.cmp(formula) {
            std::cmp::Ordering::Equal => Verdict::Match,
            std::cmp::Ordering::Less => Verdict::BruteForceBelowFormula,
            std::cmp::Ordering::Greater => Verdict::BruteForceAboveFormula,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::BruteForceBelowFormula => "brute_force_below_formula",
            Verdict::BruteForceAboveFormula => "brute_force_above_formula",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one exhaustive maximization.
///
/// `tuples_examined` counts complete tuples whose intersection was formed;
/// `tuples_pruned` counts branches cut by the bound or rejected as not
/// orbit-minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub n: usize,
    pub ell: usize,
    pub t: usize,
    pub max_value: u64,
    pub witness: Vec<BitWord>,
    pub tuples_examined: u64,
    pub tuples_pruned: u64,
    pub formula_value: BigUint,
    pub verdict: Verdict,
    /// Intersection size of the constructed family, when it exists for `n`.
    pub extremal_value: Option<u64>,
}

impl SearchReport {
    #[allow(clippy::too_many_arguments)]
    fn new(
        n: usize,
        ell: usize,
        t: usize,
        max_value: u64,
        witness: Vec<BitWord>,
        tuples_examined: u64,
        tuples_pruned: u64,
        extremal_value: Option<u64>,
    ) -> Result<Self> {
        let recheck = intersection_size(&witness, t)?;
        if recheck != max_value {
            return Err(domain(format!(
                "witness re-check gave {recheck}, search reported {max_value}"
            )));
        }
        let formula_value = intersection_bound(n as i64, ell as i64, t as i64)?;
        let verdict = Verdict::compare(max_value, &formula_value);
        Ok(SearchReport {
            n,
            ell,
            t,
            max_value,
            witness,
            tuples_examined,
            tuples_pruned,
            formula_value,
            verdict,
            extremal_value,
        })
    }

    /// Whether the closed form is expected to hold at this point; see
    /// [`is_asserted`].
    pub fn asserted(&self) -> bool {
        is_asserted(self.n, self.ell, self.t)
    }

    /// Semicolon-joined witness words.
    pub fn witness_string(&self) -> String {
        self.witness
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Self-contained text certificate: the witness centers and every common
    /// subsequence, enough to re-check the value by hand.
    pub fn certificate(&self) -> Result<String> {
        let common = common_subsequences(&self.witness, self.t)?;
        let mut out = format!(
            "# n={} l={} t={}\n# max={} formula={} verdict={}\n",
            self.n, self.ell, self.t, self.max_value, self.formula_value, self.verdict
        );
        for c in &self.witness {
            out.push_str(&format!("center {c}\n"));
        }
        for w in common.iter() {
            out.push_str(&format!("common {w}\n"));
        }
        Ok(out)
    }
}

/// Points with `t >= 1`, `t >= ℓ - 1` and `n >= t + ℓ - 1`. Anything else
/// is searched and reported but not held to the closed form.
pub fn is_asserted(n: usize, ell: usize, t: usize) -> bool {
    t >= 1 && t + 1 >= ell && n + 1 >= t + ell
}

/// Upper bound on `C(2^n, ℓ)`, the number of ascending tuples, for the
/// default configuration. Allows ℓ=3 up to n=10, ℓ=4 up to n=8 and ℓ=5 up
/// to n=7.
pub const DEFAULT_MAX_TUPLES: u128 = 300_000_000;

/// Largest `n` the search will build ball tables for.
pub const MAX_SEARCH_N: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub use_symmetry: bool,
    pub threads: usize,
    pub max_tuples: u128,
    /// Start the bound at the constructed family's value (a value some
    /// tuple really attains) instead of zero. Affects pruning only.
    pub seed_with_construction: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            use_symmetry: true,
            threads: default_threads(),
            max_tuples: DEFAULT_MAX_TUPLES,
            seed_with_construction: true,
        }
    }
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Checks the preconditions and budget of a search without running it.
pub fn check_search(n: usize, ell: usize, t: usize, max_tuples: u128) -> Result<()> {
    if ell < 2 {
        return Err(domain(format!("ℓ must be at least 2, got {ell}")));
    }
    if t < 1 {
        return Err(domain("t must be at least 1"));
    }
    if n < t + 1 {
        return Err(domain(format!("n must be at least t + 1, got n = {n}, t = {t}")));
    }
    if n > MAX_SEARCH_N {
        return Err(Error::Budget {
            what: "word length n",
            actual: n as u128,
            limit: MAX_SEARCH_N as u128,
        });
    }
    if (1usize << n) < ell {
        return Err(domain(format!("fewer than {ell} words of length {n}")));
    }
    let tuples = binom(1i64 << n, ell as i64);
    let limit = BigUint::from(max_tuples);
    if tuples > limit {
        let actual = u128::try_from(&tuples).unwrap_or(u128::MAX);
        return Err(Error::Budget {
            what: "tuple count C(2^n, ℓ)",
            actual,
            limit: max_tuples,
        });
    }
    Ok(())
}

/// Exhaustive maximum of `|∩ D_t(x_i)|` over `ℓ` distinct words of length
/// `n`, with the default budget.
pub fn brute_force_max(
    n: usize,
    ell: usize,
    t: usize,
    use_symmetry: bool,
    thread_count: usize,
) -> Result<SearchReport> {
    let cfg = SearchConfig {
        use_symmetry,
        threads: thread_count,
        ..SearchConfig::default()
    };
    brute_force_max_with(n, ell, t, &cfg)
}

struct Kernel {
    ell: usize,
    num_words: usize,
    stride: usize,
    balls: Vec<u64>,
    /// Images of each code under complement, reverse and both.
    images: Option<[Vec<u32>; 3]>,
    seed: u64,
}

#[derive(Default)]
struct WorkerResult {
    best: Option<(u64, Vec<u32>)>,
    examined: u64,
    pruned: u64,
}

fn popcount(bits: &[u64]) -> u64 {
    bits.iter().map(|w| w.count_ones() as u64).sum()
}

impl Kernel {
    fn build(n: usize, ell: usize, t: usize, use_symmetry: bool, seed: u64) -> Result<Self> {
        let num_words = 1usize << n;
        let stride = dense_words(n - t);
        let mut balls = Vec::with_capacity(num_words * stride);
        for w in all_words(n) {
            let ball = deletion_ball(&w, t)?;
            balls.extend_from_slice(ball.dense().expect("member length within dense range"));
        }
        let images = use_symmetry.then(|| {
            let comp: Vec<u32> = all_words(n).map(|w| w.complement().code() as u32).collect();
            let rev: Vec<u32> = all_words(n).map(|w| w.reverse().code() as u32).collect();
            let both: Vec<u32> = all_words(n)
                .map(|w| w.complement().reverse().code() as u32)
                .collect();
            [comp, rev, both]
        });
        Ok(Kernel {
            ell,
            num_words,
            stride,
            balls,
            images,
            seed,
        })
    }

    fn ball(&self, code: usize) -> &[u64] {
        &self.balls[code * self.stride..(code + 1) * self.stride]
    }

    /// A tuple starting at `first` can only be orbit-minimal if no image of
    /// any member falls below `first`.
    fn prefix_ok(&self, first: u32, code: u32) -> bool {
        match &self.images {
            None => true,
            Some(imgs) => imgs.iter().all(|img| img[code as usize] >= first),
        }
    }

    fn orbit_minimal(&self, tuple: &[u32], scratch: &mut Vec<u32>) -> bool {
        let Some(imgs) = &self.images else {
            return true;
        };
        for img in imgs {
            scratch.clear();
            scratch.extend(tuple.iter().map(|&c| img[c as usize]));
            scratch.sort_unstable();
            if scratch.as_slice() < tuple {
                return false;
            }
        }
        true
    }

    fn cut(&self, size: u64, res: &WorkerResult) -> bool {
        size < self.seed || res.best.as_ref().is_some_and(|(b, _)| size <= *b)
    }

    /// Searches every tuple whose smallest member is `first`, in
    /// lexicographic order, so the first tuple reaching a new best value is
    /// the least one with that value.
    fn run_first(&self, first: usize) -> WorkerResult {
        let mut res = WorkerResult::default();
        if self.num_words - first < self.ell {
            return res;
        }
        if !self.prefix_ok(first as u32, first as u32) {
            res.pruned += 1;
            return res;
        }
        let mut tuple = Vec::with_capacity(self.ell);
        tuple.push(first as u32);
        let mut stack = vec![0u64; self.ell * self.stride];
        stack[..self.stride].copy_from_slice(self.ball(first));
        let mut scratch = Vec::with_capacity(self.ell);
        self.descend(1, first + 1, &mut tuple, &mut stack, &mut scratch, &mut res);
        res
    }

    fn descend(
        &self,
        depth: usize,
        start: usize,
        tuple: &mut Vec<u32>,
        stack: &mut [u64],
        scratch: &mut Vec<u32>,
        res: &mut WorkerResult,
    ) {
        let stride = self.stride;
        let remaining_after = self.ell - depth - 1;
        let first = tuple[0];
        let parent_size = popcount(&stack[(depth - 1) * stride..depth * stride]);
        for code in start..self.num_words - remaining_after {
            if !self.prefix_ok(first, code as u32) {
                res.pruned += 1;
                continue;
            }
            let size = {
                let (done, rest) = stack.split_at_mut(depth * stride);
                let acc = &done[(depth - 1) * stride..];
                let slot = &mut rest[..stride];
                for ((s, a), b) in slot.iter_mut().zip(acc).zip(self.ball(code)) {
                    *s = a & b;
                }
                popcount(slot)
            };
            debug_assert!(size <= parent_size, "intersection grew when adding a center");
            tuple.push(code as u32);
            if remaining_after == 0 {
                res.examined += 1;
                if !self.cut(size, res) && self.orbit_minimal(tuple, scratch) {
                    res.best = Some((size, tuple.clone()));
                } else {
                    res.pruned += 1;
                }
            } else if self.cut(size, res) {
                res.pruned += 1;
            } else {
                self.descend(depth + 1, code + 1, tuple, stack, scratch, res);
            }
            tuple.pop();
        }
    }
}

/// Intersection size of the constructed family, or `None` when the family
/// is undefined for this `n`.
pub fn extremal_value(n: usize, ell: usize, t: usize) -> Result<Option<u64>> {
    if ell < 2 || n < 2 * (ell - 1) || t > n {
        return Ok(None);
    }
    let fam = extremal_family(n, ell)?;
    Ok(Some(intersection_size(&fam.centers, t)?))
}

pub fn brute_force_max_with(
    n: usize,
    ell: usize,
    t: usize,
    cfg: &SearchConfig,
) -> Result<SearchReport> {
    check_search(n, ell, t, cfg.max_tuples)?;
    let ext = extremal_value(n, ell, t)?;
    let seed = if cfg.seed_with_construction {
        ext.unwrap_or(0)
    } else {
        0
    };
    let kernel = Kernel::build(n, ell, t, cfg.use_symmetry, seed)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads.max(1))
        .build()
        .map_err(|e| domain(format!("cannot start worker threads: {e}")))?;
    let parts: Vec<WorkerResult> = pool.install(|| {
        (0..kernel.num_words)
            .into_par_iter()
            .map(|first| kernel.run_first(first))
            .collect()
    });

    // Parts are in ascending order of first element; a strict comparison
    // keeps the least witness among equal values.
    let mut best: Option<(u64, Vec<u32>)> = None;
    let (mut examined, mut pruned) = (0u64, 0u64);
    for part in parts {
        examined += part.examined;
        pruned += part.pruned;
        if let Some((v, tup)) = part.best {
            if best.as_ref().is_none_or(|(b, _)| v > *b) {
                best = Some((v, tup));
            }
        }
    }
    let (max_value, tuple) =
        best.ok_or_else(|| domain("search finished without evaluating any tuple"))?;
    let witness = tuple
        .iter()
        .map(|&c| BitWord::from_code(c as u64, n))
        .collect::<Result<Vec<_>>>()?;
    SearchReport::new(n, ell, t, max_value, witness, examined, pruned, ext)
}

/// Runs the search at every grid point with the default configuration.
pub fn verify_theorem(grid: &[(usize, usize, usize)]) -> Result<Vec<SearchReport>> {
    verify_theorem_with(grid, &SearchConfig::default())
}

/// Like [`verify_theorem`]; the whole grid is checked against the budget
/// before any search starts.
pub fn verify_theorem_with(
    grid: &[(usize, usize, usize)],
    cfg: &SearchConfig,
) -> Result<Vec<SearchReport>> {
    for &(n, ell, t) in grid {
        check_search(n, ell, t, cfg.max_tuples)?;
    }
    grid.iter()
        .map(|&(n, ell, t)| brute_force_max_with(n, ell, t, cfg))
        .collect()
}

/// Constructed-family value against the closed form, usable far beyond the
/// exhaustive budget.
pub fn lower_bound_attainment(n: usize, ell: usize, t: usize) -> Result<(u64, BigUint)> {
    let fam = extremal_family(n, ell)?;
    if t > n {
        return Err(domain(format!("t = {t} exceeds n = {n}")));
    }
    let value = intersection_size(&fam.centers, t)?;
    Ok((value, intersection_bound(n as i64, ell as i64, t as i64)?))
}
