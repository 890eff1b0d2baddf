//! Exact big-integer helpers shared by the counting modules.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// n! as an exact big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient with the convention that out-of-range indices give 0:
/// `binomial(n, k) = 0` when `k < 0`, `n < 0`, or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        let (q, rem) = num_integer::Integer::div_rem(&acc, &BigInt::from(i + 1));
        assert!(rem.is_zero(), "binomial division must be exact");
        acc = q;
    }
    acc
}

/// Pascal's triangle up to row `n_max`, in big integers.
pub fn binomial_table(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// Number of transpositions in the symmetric group on `d` letters, C(d, 2).
pub fn transposition_count(d: u32) -> u64 {
    let d = d as u64;
    d * d.saturating_sub(1) / 2
}
