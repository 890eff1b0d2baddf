//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (run with `--nocapture` to see them). All equalities are exact;
//! the runtime ceilings are part of the criteria and are asserted.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use hsnum_core::arith::{factorial, transposition_count};
use hsnum_core::characters::{central_char_transposition, mn_character};
use hsnum_core::partitions::{partitions_of, Partition};
use hsnum_core::severi::EngineProvider;
use hsnum_core::{
    brute_force_count, classify, connected_count, dims, disconnected_count, hs_number,
    hurwitz_simple, is_nonempty, node_count, walk_identity_series, HurwitzQuery, Kind, Method,
    SeveriError, SeveriTriple, DEFAULT_BRUTE_CAP,
};

fn hsnum_binary(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_hsnum"))
        .env_remove("HSNUM_CAP")
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .expect("spawn hsnum")
}

fn auto_provider() -> EngineProvider {
    EngineProvider {
        method: Method::Auto,
        cap: DEFAULT_BRUTE_CAP,
    }
}

/// Reference reproduction, exact: the five Hurwitz-Severi values, the five
/// underlying Hurwitz numbers, and a clean `verify-paper` exit, within 5 s.
#[test]
fn acceptance_reference_values_and_verify_paper() {
    let started = Instant::now();
    let provider = auto_provider();
    let h_cases = [
        (1u32, 3u32, 240i64),
        (1, 2, 1),
        (0, 3, 24),
        (0, 2, 1),
        (3, 3, 19680),
    ];
    for (g, d, expected) in h_cases {
        let h = hurwitz_simple(HurwitzQuery::new(g, d), Method::Auto).unwrap();
        assert_eq!(h.value, BigInt::from(expected), "h for g={g}, d={d}");
    }
    let hs_cases = [
        (1u32, 3u32, 0u32, 40i64),
        (1, 2, 1, 1),
        (0, 3, 0, 12),
        (0, 2, 1, 1),
        (3, 3, 1, 3280),
    ];
    for (g, d, l, expected) in hs_cases {
        let hs = hs_number(SeveriTriple::new(g, d, l), &provider).unwrap();
        assert_eq!(
            hs.value,
            BigRational::from_integer(BigInt::from(expected)),
            "H({g},{d},{l})"
        );
        assert!(hs.integral);
    }
    let output = hsnum_binary(&["verify-paper"]);
    assert_eq!(output.status.code(), Some(0), "verify-paper must exit 0");
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("ACCEPTANCE reference values + verify-paper: PASS ({elapsed:?})");
}

/// The unbendable quartic projection: (3,4,0) classifies Unbendable and the
/// hs command refuses it with exit code 5.
#[test]
fn acceptance_unbendable_quartic_behaviour() {
    let triple = SeveriTriple::new(3, 4, 0);
    assert_eq!(classify(triple).kind, Kind::Unbendable);
    assert!(matches!(
        hs_number(triple, &auto_provider()),
        Err(SeveriError::UnbendableUnsupported { .. })
    ));
    let output = hsnum_binary(&["hs", "3", "4", "0"]);
    assert_eq!(output.status.code(), Some(5), "hs 3 4 0 must exit 5");
    println!("ACCEPTANCE unbendable quartic: PASS");
}

/// Engine equivalence for every d <= 4, r <= 10: brute force, character sum,
/// and the cut-and-join walk agree on disconnected counts, and brute force
/// agrees with the deletion recursion on connected counts. Budget: 2 min.
#[test]
fn acceptance_engine_equivalence() {
    let started = Instant::now();
    let mut instances = 0u32;
    for d in 1..=4u32 {
        let walk = walk_identity_series(d, 10);
        for r in 0..=10u64 {
            let frobenius = disconnected_count(d, r);
            assert_eq!(
                brute_force_count(d, r, false).unwrap(),
                frobenius,
                "disconnected d={d}, r={r}"
            );
            assert_eq!(walk[r as usize], frobenius, "walk d={d}, r={r}");
            assert_eq!(
                brute_force_count(d, r, true).unwrap(),
                connected_count(d, r),
                "connected d={d}, r={r}"
            );
            instances += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!("ACCEPTANCE engine equivalence: PASS ({instances} instances, {elapsed:?})");
}

/// Character-layer identities: sum of squared dimensions is n! up to n = 30,
/// and the content-sum route equals the Murnaghan-Nakayama route for the
/// transposition central character up to d = 15. Budget: 30 s.
#[test]
fn acceptance_character_identities() {
    let started = Instant::now();
    for n in 0..=30u32 {
        let total: BigInt = partitions_of(n)
            .iter()
            .map(|shape| {
                let dim = shape.dimension();
                &dim * &dim
            })
            .sum();
        assert_eq!(total, factorial(n as u64), "n = {n}");
    }
    for d in 2..=15u32 {
        let mut class_parts = vec![1u32; d as usize - 1];
        class_parts[0] = 2;
        let transposition_class = Partition::new(class_parts);
        for shape in partitions_of(d) {
            let content_route = central_char_transposition(&shape) * shape.dimension();
            let mn_route = BigInt::from(transposition_count(d))
                * mn_character(&shape, &transposition_class);
            assert_eq!(content_route, mn_route, "shape {shape}");
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!("ACCEPTANCE character identities: PASS ({elapsed:?})");
}

/// Structural identities over the box d <= 10, g <= 60, l <= 30:
/// classification trichotomy, nonemptiness iff nonnegative node count, the
/// dimension-chain identity, and the strongly-bendable census.
#[test]
fn acceptance_structural_identities() {
    let started = Instant::now();
    let mut census = Vec::new();
    for d in 1..=10u32 {
        for g in 0..=60u32 {
            for l in 0..=30u32 {
                let triple = SeveriTriple::new(g, d, l);
                let c = classify(triple);
                let (gi, di, li) = (g as i64, d as i64, l as i64);
                let bendable = di + li >= gi + 2;
                let semi = di + li < gi + 2 && gi + 2 <= di + 2 * li;
                let unbendable = di + 2 * li < gi + 2;
                assert_eq!(
                    [bendable, semi, unbendable].iter().filter(|&&x| x).count(),
                    1,
                    "trichotomy at {triple:?}"
                );
                assert_eq!(c.kind == Kind::Bendable, bendable);
                assert_eq!(c.kind == Kind::SemiBendable, semi);
                assert_eq!(c.kind == Kind::Unbendable, unbendable);
                assert_eq!(is_nonempty(triple), node_count(triple) >= 0, "{triple:?}");
                let dd = dims(triple);
                assert_eq!(
                    dd.orbit_space,
                    dd.target - (di - 2) * (di + 2 * li - 3) / 2,
                    "dimension chain at {triple:?}"
                );
                if l <= 10 && c.strongly_bendable {
                    census.push((g, d, l));
                }
            }
        }
    }
    let mut expected: Vec<(u32, u32, u32)> = (0..=60u32)
        .flat_map(|g| (g..=10).map(move |l| (g, 2u32, l)))
        .collect();
    expected.push((0, 3, 0));
    expected.push((1, 3, 0));
    expected.sort_unstable();
    census.sort_unstable();
    assert_eq!(census, expected, "strongly-bendable census");
    let elapsed = started.elapsed();
    println!("ACCEPTANCE structural identities: PASS ({elapsed:?})");
}

/// Scale check: the character engine computes h for d = 20, g = 10 (r = 58)
/// in under 10 s, and the character and cut-and-join engines agree exactly
/// at d = 8, g = 4.
#[test]
fn acceptance_scale_check() {
    let started = Instant::now();
    let big = hurwitz_simple(HurwitzQuery::new(10, 20), Method::Characters).unwrap();
    let elapsed = started.elapsed();
    assert!(big.value > BigInt::zero());
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");

    let q = HurwitzQuery::new(4, 8);
    let via_characters = hurwitz_simple(q, Method::Characters).unwrap();
    let via_walk = hurwitz_simple(q, Method::CutJoin).unwrap();
    assert_eq!(via_characters.value, via_walk.value);
    assert!(via_characters.value > BigInt::one());
    println!(
        "ACCEPTANCE scale check: PASS (h[g=10,d=20] has {} digits, {elapsed:?})",
        big.value.to_string().len()
    );
}
