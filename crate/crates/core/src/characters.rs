//! Irreducible symmetric-group character values via the Murnaghan-Nakayama
//! rule, plus the closed-form central character on the transposition class.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::Partition;

/// Character value chi^shape(class) as an exact integer.
///
/// Computed by recursive border-strip removal: strip off a border strip whose
/// size is the largest remaining class part, weight it by (-1)^height, and
/// sum over all valid strips. The recursion returns 0 when no strip fits.
/// Class parts are consumed largest-first; results are memoized on
/// (shape, number of class parts consumed).
pub fn mn_character(shape: &Partition, class_profile: &Partition) -> BigInt {
    assert_eq!(
        shape.n(),
        class_profile.n(),
        "shape and class profile must partition the same integer"
    );
    let mut memo: HashMap<(Vec<u32>, usize), BigInt> = HashMap::new();
    mn_recurse(shape.parts().to_vec(), class_profile.parts(), 0, &mut memo)
}

fn mn_recurse(
    shape: Vec<u32>,
    class_parts: &[u32],
    consumed: usize,
    memo: &mut HashMap<(Vec<u32>, usize), BigInt>,
) -> BigInt {
    if shape.is_empty() {
        debug_assert_eq!(consumed, class_parts.len());
        return BigInt::one();
    }
    if let Some(v) = memo.get(&(shape.clone(), consumed)) {
        return v.clone();
    }
    let strip = class_parts[consumed] as i64;
    let mut total = BigInt::zero();
    // First-column hook lengths encode the boundary of the diagram; removing
    // a border strip of length `strip` moves one of them down by `strip`.
    let rows = shape.len() as i64;
    let beta: Vec<i64> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + rows - 1 - i as i64)
        .collect();
    for (i, &b) in beta.iter().enumerate() {
        let target = b - strip;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let new_shape: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (rows - 1 - j as i64)) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sub = mn_recurse(new_shape, class_parts, consumed + 1, memo);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert((shape, consumed), total.clone());
    total
}

/// The scalar by which the sum of all transpositions acts on the irreducible
/// labelled by `shape`: C(d,2) * chi(2,1^{d-2}) / dimension. This equals the
/// content sum of the shape, which is how it is computed; for d < 2 the
/// transposition class is empty and the value is 0.
pub fn central_char_transposition(shape: &Partition) -> BigInt {
    BigInt::from(shape.content_sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorial, transposition_count};
    use crate::partitions::partitions_of;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// The class of a single transposition in S_d: (2, 1^{d-2}).
    fn transposition_class(d: u32) -> Partition {
        assert!(d >= 2);
        let mut parts = vec![1u32; d as usize - 1];
        parts[0] = 2;
        Partition::new(parts)
    }

    #[test]
    fn trivial_shape_has_character_one_on_every_class() {
        for d in 0..=8u32 {
            let trivial = if d == 0 {
                Partition::empty()
            } else {
                p(&[d])
            };
            for class in partitions_of(d) {
                assert_eq!(mn_character(&trivial, &class), BigInt::one());
            }
        }
    }

    #[test]
    fn standard_and_sign_values_at_a_transposition() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])), BigInt::zero());
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[2, 1])), BigInt::from(-1));
    }

    #[test]
    fn hook_shape_matches_fixed_point_oracle() {
        // chi of the standard representation (d-1, 1) at a class equals the
        // number of fixed points minus one.
        for d in 2..=8u32 {
            let shape = Partition::new(if d == 2 {
                vec![1, 1]
            } else {
                vec![d - 1, 1]
            });
            for class in partitions_of(d) {
                let fixed = class.parts().iter().filter(|&&x| x == 1).count() as i64;
                assert_eq!(
                    mn_character(&shape, &class),
                    BigInt::from(fixed - 1),
                    "class {class}"
                );
            }
        }
    }

    #[test]
    fn identity_class_gives_dimension() {
        for d in 0..=10u32 {
            let identity = Partition::ones(d);
            for shape in partitions_of(d) {
                assert_eq!(mn_character(&shape, &identity), shape.dimension());
            }
        }
    }

    #[test]
    fn column_orthogonality_at_identity() {
        for d in 0..=10u32 {
            let identity = Partition::ones(d);
            let total: BigInt = partitions_of(d)
                .iter()
                .map(|shape| {
                    let chi = mn_character(shape, &identity);
                    &chi * &chi
                })
                .sum();
            assert_eq!(total, factorial(d as u64));
        }
    }

    #[test]
    fn row_orthogonality_small_degrees() {
        for d in 1..=6u32 {
            let shapes = partitions_of(d);
            let classes = partitions_of(d);
            for a in &shapes {
                for b in &shapes {
                    let total: BigInt = classes
                        .iter()
                        .map(|c| c.class_size() * mn_character(a, c) * mn_character(b, c))
                        .sum();
                    let expected = if a == b {
                        factorial(d as u64)
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(total, expected, "shapes {a}, {b}");
                }
            }
        }
    }

    #[test]
    fn central_character_examples() {
        assert_eq!(central_char_transposition(&p(&[3])), BigInt::from(3));
        assert_eq!(central_char_transposition(&p(&[2, 1])), BigInt::zero());
        assert_eq!(central_char_transposition(&p(&[1, 1, 1])), BigInt::from(-3));
        assert_eq!(central_char_transposition(&Partition::empty()), BigInt::zero());
        assert_eq!(central_char_transposition(&p(&[1])), BigInt::zero());
    }

    #[test]
    fn central_character_agrees_with_mn_route() {
        // content_sum * dimension = C(d,2) * chi(2, 1^{d-2}) for every shape.
        for d in 2..=10u32 {
            let class = transposition_class(d);
            for shape in partitions_of(d) {
                let lhs = central_char_transposition(&shape) * shape.dimension();
                let rhs = BigInt::from(transposition_count(d)) * mn_character(&shape, &class);
                assert_eq!(lhs, rhs, "shape {shape}");
            }
        }
    }

    #[test]
    fn conjugate_twists_by_sign_character() {
        for d in 1..=10u32 {
            for shape in partitions_of(d) {
                for class in partitions_of(d) {
                    let sign = if (d as usize - class.len()) % 2 == 0 {
                        BigInt::one()
                    } else {
                        BigInt::from(-1)
                    };
                    assert_eq!(
                        mn_character(&shape.conjugate(), &class),
                        sign * mn_character(&shape, &class)
                    );
                }
            }
        }
    }

    #[test]
    fn column_orthogonality_between_classes() {
        // sum over shapes of chi(mu) * chi(nu) is the centralizer order when
        // mu = nu and zero otherwise.
        for d in 1..=6u32 {
            let classes = partitions_of(d);
            for mu in &classes {
                for nu in &classes {
                    let total: BigInt = partitions_of(d)
                        .iter()
                        .map(|shape| mn_character(shape, mu) * mn_character(shape, nu))
                        .sum();
                    let expected = if mu == nu {
                        let (z, rem) =
                            num_integer::Integer::div_rem(&factorial(d as u64), &mu.class_size());
                        assert!(num_traits::Zero::is_zero(&rem));
                        z
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(total, expected, "classes {mu}, {nu}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn character_is_bounded_by_dimension(d in 1..=8u32, seed in 0..10_000usize) {
            let shapes = partitions_of(d);
            let classes = partitions_of(d);
            let shape = &shapes[seed % shapes.len()];
            let class = &classes[(seed / shapes.len()) % classes.len()];
            let chi = mn_character(shape, class);
            let bound = shape.dimension();
            prop_assert!(-&bound <= chi && chi <= bound, "shape {shape}, class {class}");
        }
    }
}
