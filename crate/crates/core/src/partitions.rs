//! Integer partitions: enumeration, conjugation, hook lengths, irreducible
//! dimensions, and content sums.
//!
//! Partitions index both the conjugacy classes and the irreducible characters
//! of the symmetric group, so everything downstream (character values, the
//! class-algebra walk, the Frobenius sum) is built on this module.

use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::factorial;

/// A partition of a nonnegative integer: weakly decreasing positive parts.
/// The empty partition is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    ///
    /// Panics if the parts are not weakly decreasing or contain a zero;
    /// callers construct partitions from trusted enumeration or parsed input
    /// they have already validated.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The partition `1^n`.
    pub fn ones(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned (sum of parts).
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Transposes the Young diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            parts.push(self.parts.iter().take_while(|&&p| p as usize > j).count() as u32);
        }
        Partition { parts }
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.n() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - 1 - j as u32;
                let leg = conj.parts[j] - 1 - i as u32;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Dimension of the irreducible representation labelled by this shape:
    /// f = n! / (product of hook lengths). The division is exact by the hook
    /// length formula; a remainder is an internal error.
    pub fn dimension(&self) -> BigInt {
        let numerator = factorial(self.n() as u64);
        let mut denominator = BigInt::one();
        for h in self.hook_lengths() {
            denominator *= h;
        }
        let (dim, rem) = numerator.div_rem(&denominator);
        assert!(rem.is_zero(), "hook length product must divide n! exactly");
        dim
    }

    /// Sum of cell contents (column index minus row index, 0-based).
    ///
    /// This equals C(n, 2) * chi(transposition class) / dimension, i.e. the
    /// scalar by which the transposition class sum acts on the irreducible.
    pub fn content_sum(&self) -> i64 {
        let mut total = 0i64;
        for (i, &row) in self.parts.iter().enumerate() {
            let row = row as i64;
            let i = i as i64;
            // Row i holds contents -i, -i+1, ..., row-1-i.
            total += row * (row - 1) / 2 - i * row;
        }
        total
    }

    /// Size of the conjugacy class of the symmetric group with this cycle
    /// type: n! / (prod parts * prod multiplicities!).
    pub fn class_size(&self) -> BigInt {
        let mut centralizer = BigInt::one();
        let mut run = 0u64;
        for (i, &p) in self.parts.iter().enumerate() {
            centralizer *= p;
            run += 1;
            if i + 1 == self.parts.len() || self.parts[i + 1] != p {
                centralizer *= factorial(run);
                run = 0;
            }
        }
        let (size, rem) = factorial(self.n() as u64).div_rem(&centralizer);
        assert!(rem.is_zero(), "centralizer order must divide n! exactly");
        size
    }

    /// Part multiplicities as (part, multiplicity) pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` in reverse-lexicographic order, so `(n)` comes
/// first and `1^n` last. The count equals the partition function p(n).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_partitions(n, n, &mut prefix, &mut out);
    out
}

fn gen_partitions(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        gen_partitions(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// The partition function p(n), via Euler's pentagonal-number recurrence.
/// Results are memoized globally, keyed by n only.
pub fn count_partitions(n: u32) -> BigInt {
    static CACHE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![BigInt::one()]));
    let mut table = cache.lock().unwrap();
    while table.len() <= n as usize {
        let m = table.len() as i64;
        let mut sum = BigInt::zero();
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign_positive = k % 2 == 1;
            let mut term = table[(m - g1) as usize].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                term += &table[(m - g2) as usize];
            }
            if sign_positive {
                sum += term;
            } else {
                sum -= term;
            }
            k += 1;
        }
        table.push(sum);
    }
    table[n as usize].clone()
}
