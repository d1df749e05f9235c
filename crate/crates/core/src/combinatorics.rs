//! Exact counting functions: binomials, the maximum deletion-ball size
//! `D(n, t)` and the `ℓ`-ball intersection bound `N_ℓ(n, t)`, each in closed
//! and recursive form.
//!
//! Values are arbitrary-precision [`BigUint`]s; nothing here can overflow.
//!
//! Boundary conventions for `D` live in [`ball_size_boundary`] and nowhere
//! else: `D(n, t) = 0` for `t < 0` or `n < t`, and `D(n, t) = 1` for `t = n`
//! or `t = 0`. The closed-form sum for `N` relies on these so that
//! out-of-range terms simply vanish.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) here; C(n, i+1) = C(n, i) * (n - i) / (i + 1) exactly.
        acc *= BigUint::from((n - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

/// `Σ_{i=0}^{k} C(m, i)` in checked `u128`, `None` on overflow.
fn partial_row_sum_u128(m: i64, k: i64) -> Option<u128> {
    let mut term: u128 = 1;
    let mut sum: u128 = 1;
    for i in 0..k.min(m) {
        term = term.checked_mul((m - i) as u128)? / (i + 1) as u128;
        sum = sum.checked_add(term)?;
    }
    Some(sum)
}

fn partial_row_sum(m: i64, k: i64) -> BigUint {
    if let Some(v) = partial_row_sum_u128(m, k) {
        return BigUint::from(v);
    }
    let mut term = BigUint::one();
    let mut sum = BigUint::one();
    for i in 0..k.min(m) {
        term *= BigUint::from((m - i) as u64);
        term /= BigUint::from((i + 1) as u64);
        sum += &term;
    }
    sum
}

/// `Some(value)` if `(n, t)` is on the boundary of the `D` recursion.
pub fn ball_size_boundary(n: i64, t: i64) -> Option<BigUint> {
    if t < 0 || n < t {
        Some(BigUint::zero())
    } else if t == n || t == 0 {
        Some(BigUint::one())
    } else {
        None
    }
}

/// `D(n, t) = Σ_{i=0}^{t} C(n-t, i)`, the size of the largest `t`-deletion
/// ball of a length-`n` word (attained by the alternating word).
pub fn ball_size(n: i64, t: i64) -> BigUint {
    if let Some(v) = ball_size_boundary(n, t) {
        return v;
    }
    partial_row_sum(n - t, t)
}

/// Caches for the recursive forms. Not shared implicitly; pass one in when
/// memoization is wanted.
#[derive(Debug, Default, Clone)]
pub struct CountMemo {
    ball: HashMap<(i64, i64), BigUint>,
    bound: HashMap<(i64, i64, i64), BigUint>,
}

impl CountMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.ball.len() + self.bound.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Recomputes every cached entry by its closed form.
    pub fn is_consistent(&self) -> bool {
        self.ball.iter().all(|(&(n, t), v)| *v == ball_size(n, t))
            && self.bound.iter().all(|(&(n, l, t), v)| {
                intersection_bound(n, l, t).is_ok_and(|c| c == *v)
            })
    }
}

/// `D(n, t)` via `D(n, t) = D(n-1, t) + D(n-2, t-1)`.
pub fn ball_size_recursive(n: i64, t: i64, memo: &mut CountMemo) -> BigUint {
    if let Some(v) = ball_size_boundary(n, t) {
        return v;
    }
    if let Some(v) = memo.ball.get(&(n, t)) {
        return v.clone();
    }
    let v = ball_size_recursive(n - 1, t, memo) + ball_size_recursive(n - 2, t - 1, memo);
    memo.ball.insert((n, t), v.clone());
    v
}

fn check_ell(ell: i64) -> Result<()> {
    if ell < 2 {
        return Err(domain(format!("number of balls must be at least 2, got {ell}")));
    }
    Ok(())
}

/// `N_ℓ(n, t) = Σ_{i=1}^{ℓ-2} D(n-2i, t-i) + 2 D(n-2(ℓ-1), t-(ℓ-1))`.
///
/// For `ℓ = 2` the sum is empty and this is the two-ball value
/// `2 D(n-2, t-1)`.
pub fn intersection_bound(n: i64, ell: i64, t: i64) -> Result<BigUint> {
    check_ell(ell)?;
    let head: BigUint = (1..=ell - 2).map(|i| ball_size(n - 2 * i, t - i)).sum();
    Ok(head + ball_size(n - 2 * (ell - 1), t - (ell - 1)) * 2u32)
}

/// `N_ℓ(n, t)` via `N_ℓ(n, t) = D(n-2, t-1) + N_{ℓ-1}(n-2, t-1)` down to
/// `N_2(n, t) = 2 D(n-2, t-1)`.
pub fn intersection_bound_recursive(
    n: i64,
    ell: i64,
    t: i64,
    memo: &mut CountMemo,
) -> Result<BigUint> {
    check_ell(ell)?;
    if let Some(v) = memo.bound.get(&(n, ell, t)) {
        return Ok(v.clone());
    }
    let v = if ell == 2 {
        ball_size_recursive(n - 2, t - 1, memo) * 2u32
    } else {
        ball_size_recursive(n - 2, t - 1, memo)
            + intersection_bound_recursive(n - 2, ell - 1, t - 1, memo)?
    };
    memo.bound.insert((n, ell, t), v.clone());
    Ok(v)
}

/// The three-ball lower bound written as `3 D(n-4, t-2) + D(n-3, t-1)`.
/// Equal to `N_3(n, t)` whenever `t >= 1` and `n >= t + 2`.
pub fn three_ball_bound_expanded(n: i64, t: i64) -> BigUint {
    ball_size(n - 4, t - 2) * 3u32 + ball_size(n - 3, t - 1)
}

/// Reads required for a list of size at most `ℓ - 1`: `N_ℓ(n, t) + 1`.
pub fn reconstruction_threshold(n: i64, ell: i64, t: i64) -> Result<BigUint> {
    Ok(intersection_bound(n, ell, t)? + 1u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// Pascal's triangle, independent of the multiplicative formula.
    fn pascal(rows: usize) -> Vec<Vec<BigUint>> {
        let mut tri: Vec<Vec<BigUint>> = vec![vec![big(1)]];
        for n in 1..=rows {
            let prev = &tri[n - 1];
            let mut row = vec![big(1); n + 1];
            for k in 1..n {
                row[k] = &prev[k - 1] + &prev[k];
            }
            tri.push(row);
        }
        tri
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(3, 1), big(3));
        assert_eq!(binom(3, -1), big(0));
        assert_eq!(binom(3, 4), big(0));
        assert_eq!(binom(-2, 1), big(0));
        let tri = pascal(40);
        assert_eq!(tri[40][20], big(137_846_528_820));
        assert_eq!(binom(40, 20), big(137_846_528_820));
    }

    #[test]
    fn binom_matches_pascal() {
        let tri = pascal(200);
        for n in 0..=200i64 {
            for k in 0..=n {
                assert_eq!(binom(n, k), tri[n as usize][k as usize], "C({n},{k})");
            }
        }
    }

    #[test]
    fn ball_size_is_the_binomial_row_sum() {
        for n in 0..=200i64 {
            for t in 0..=n {
                let direct: BigUint = (0..=t).map(|i| binom(n - t, i)).sum();
                assert_eq!(ball_size(n, t), direct, "D({n},{t})");
            }
        }
        // Large enough to leave the u128 path.
        assert!(partial_row_sum_u128(300, 150).is_none());
        let direct: BigUint = (0..=150).map(|i| binom(300, i)).sum();
        assert_eq!(partial_row_sum(300, 150), direct);
    }

    #[test]
    fn ball_size_examples() {
        assert_eq!(ball_size(5, 2), big(7));
        assert_eq!(ball_size(4, 1), big(4));
        for n in 0..30 {
            assert_eq!(ball_size(n, n), big(1));
        }
        assert_eq!(ball_size(2, 3), big(0));
        assert_eq!(ball_size(5, -1), big(0));
        assert_eq!(ball_size(-3, -1), big(0));
        assert_eq!(ball_size(0, 0), big(1));
    }

    #[test]
    fn recursive_ball_size_examples() {
        let mut memo = CountMemo::new();
        assert_eq!(ball_size_recursive(5, 2, &mut memo), big(7));
        assert_eq!(ball_size_recursive(4, 1, &mut memo), big(4));
        assert_eq!(ball_size_recursive(0, 0, &mut memo), big(1));
        assert!(memo.is_consistent());
    }

    #[test]
    fn intersection_bound_examples() {
        assert_eq!(intersection_bound(4, 3, 2).unwrap(), big(4));
        assert_eq!(intersection_bound(6, 3, 2).unwrap(), big(6));
        assert_eq!(intersection_bound(5, 3, 2).unwrap(), big(5));
        for ell in 2..8 {
            for n in ell..20 {
                let expected = if ell == 2 { 2 } else { 1 };
                assert_eq!(intersection_bound(n, ell, 1).unwrap(), big(expected), "n={n} ell={ell}");
            }
        }
        assert!(intersection_bound(5, 1, 2).is_err());
        assert!(intersection_bound_recursive(5, 0, 2, &mut CountMemo::new()).is_err());
    }

    #[test]
    fn recursive_bound_examples() {
        let mut memo = CountMemo::new();
        assert_eq!(intersection_bound_recursive(6, 3, 2, &mut memo).unwrap(), big(6));
        for ell in 2..=8i64 {
            for t in (ell - 1)..12 {
                let n = t + ell - 1;
                assert_eq!(
                    intersection_bound_recursive(n, ell, t, &mut memo).unwrap(),
                    big(1 << (ell - 1)),
                    "n={n} ell={ell} t={t}"
                );
            }
        }
        for n in 0..30 {
            for t in 0..=n {
                assert_eq!(
                    intersection_bound_recursive(n, 2, t, &mut memo).unwrap(),
                    ball_size(n - 2, t - 1) * 2u32
                );
            }
        }
        assert!(memo.is_consistent());
    }

    #[test]
    fn base_case_below_ell_minus_one_is_not_a_power_of_two() {
        // ℓ = 4, t = 2, n = 5: the closed form gives D(3,1) + D(1,0) + 2 D(-1,-1).
        assert_eq!(intersection_bound(5, 4, 2).unwrap(), big(4));
        assert_eq!(ball_size(5, 2), big(7));
    }

    #[test]
    fn expanded_three_ball_form_agrees() {
        for n in 3..60 {
            for t in 1..=n - 2 {
                assert_eq!(three_ball_bound_expanded(n, t), intersection_bound(n, 3, t).unwrap());
            }
        }
    }

    #[test]
    fn threshold_is_bound_plus_one() {
        assert_eq!(reconstruction_threshold(6, 3, 2).unwrap(), big(7));
        assert_eq!(reconstruction_threshold(4, 3, 2).unwrap(), big(5));
    }
}
