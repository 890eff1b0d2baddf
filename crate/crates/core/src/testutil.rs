//! Independent brute-force oracles used only by tests. These deliberately
//! avoid the code paths they are checking.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::Partition;

/// Standard Young tableaux of a given shape, counted by removing one corner
/// cell at a time. Independent of the hook length formula.
pub(crate) fn syt_count(shape: &Partition) -> BigInt {
    fn recurse(parts: Vec<u32>, memo: &mut HashMap<Vec<u32>, BigInt>) -> BigInt {
        if parts.is_empty() {
            return BigInt::one();
        }
        if let Some(v) = memo.get(&parts) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for i in 0..parts.len() {
            let is_corner = parts[i] > 0 && (i + 1 == parts.len() || parts[i + 1] < parts[i]);
            if is_corner {
                let mut smaller = parts.clone();
                smaller[i] -= 1;
                if smaller[i] == 0 {
                    smaller.remove(i);
                }
                total += recurse(smaller, memo);
            }
        }
        memo.insert(parts, total.clone());
        total
    }
    recurse(shape.parts().to_vec(), &mut HashMap::new())
}

/// Partition counts p(0..=max_n) by dynamic programming over allowed part
/// sizes. Independent of the pentagonal-number recurrence.
pub(crate) fn dp_partition_count(max_n: u32) -> Vec<BigInt> {
    let n = max_n as usize;
    let mut table = vec![BigInt::zero(); n + 1];
    table[0] = BigInt::one();
    for part in 1..=n {
        for total in part..=n {
            let add = table[total - part].clone();
            table[total] += add;
        }
    }
    table
}

/// Enumerates every tuple of `r` transpositions on `d` letters and counts
/// products by cycle type. Only usable for tiny instances.
pub(crate) fn tuple_histogram(d: u32, r: u64) -> BTreeMap<Partition, u64> {
    let mut transpositions = Vec::new();
    for a in 0..d as usize {
        for b in (a + 1)..d as usize {
            transpositions.push((a, b));
        }
    }
    let mut histogram = BTreeMap::new();
    if transpositions.is_empty() && r > 0 {
        return histogram;
    }
    let mut choice = vec![0usize; r as usize];
    loop {
        let mut product: Vec<usize> = (0..d as usize).collect();
        for &idx in &choice {
            let (a, b) = transpositions[idx];
            product.swap(a, b);
        }
        *histogram.entry(cycle_type(&product)).or_insert(0u64) += 1;
        // Odometer over transposition indices.
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return histogram;
            }
            choice[pos] += 1;
            if choice[pos] < transpositions.len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = perm[x];
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_totals_match_tuple_space() {
        let histogram = tuple_histogram(3, 3);
        let total: u64 = histogram.values().sum();
        assert_eq!(total, 27);
    }

    #[test]
    fn cycle_type_of_identity() {
        assert_eq!(cycle_type(&[0, 1, 2]), Partition::ones(3));
        assert_eq!(cycle_type(&[1, 0, 2]), Partition::new(vec![2, 1]));
        assert_eq!(cycle_type(&[1, 2, 0]), Partition::new(vec![3]));
    }
}
