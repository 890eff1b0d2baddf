//! Ordinary Hurwitz numbers h_{g,1^d}: the number of transitive tuples of
//! r = 2d+2g-2 transpositions in the symmetric group on d letters with
//! product identity.
//!
//! Three independent engines are provided and cross-checked:
//!
//! * `brute_force_count` enumerates tuples directly (the definitional
//!   oracle, capped),
//! * `disconnected_count` evaluates the Frobenius character sum,
//! * `cut_and_join_walk` iterates class-algebra multiplication by the
//!   transposition class sum.
//!
//! The transitive (connected-cover) count is extracted from disconnected
//! counts by a deletion recursion on the component of the first letter.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use thiserror::Error;

use crate::arith::{binomial_table, factorial, transposition_count};
use crate::partitions::{partitions_of, Partition};

/// Default ceiling on C(d,2)^r for the brute-force engine.
pub const DEFAULT_BRUTE_CAP: u64 = 100_000_000;

/// Instances at most this large are cross-checked against the brute-force
/// engine when the method is `Auto`.
const AUTO_CROSS_CHECK_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HurwitzError {
    #[error("brute-force enumeration for d={d}, r={r} needs C(d,2)^r = {size} tuples, over the cap of {cap}")]
    CapExceeded { d: u32, r: u64, size: BigInt, cap: u64 },
    #[error("engines disagree on h for g={g}, d={d}: {details}")]
    MethodDisagreement { g: u32, d: u32, details: String },
}

/// A Hurwitz-number query: genus and projection degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HurwitzQuery {
    pub genus: u32,
    pub degree: u32,
}

impl HurwitzQuery {
    pub fn new(genus: u32, degree: u32) -> Self {
        assert!(degree >= 1, "degree must be positive");
        HurwitzQuery { genus, degree }
    }

    /// Number of transpositions in a tuple: r = 2d + 2g - 2.
    pub fn transpositions(&self) -> u64 {
        2 * self.degree as u64 + 2 * self.genus as u64 - 2
    }
}

/// An exact tuple count, flagged with whether transitivity was required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleCount {
    pub value: BigInt,
    pub connected: bool,
}

/// Engine selection for `hurwitz_simple`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Cross-check brute force against the character sum on small
    /// instances, character sum alone otherwise.
    Auto,
    Brute,
    Characters,
    CutJoin,
}

/// State of the class-algebra walk: for each cycle type, the number of
/// tuples multiplying to one fixed permutation of that type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVector {
    degree: u32,
    entries: BTreeMap<Partition, BigInt>,
}

impl ClassVector {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn entries(&self) -> &BTreeMap<Partition, BigInt> {
        &self.entries
    }

    pub fn get(&self, class: &Partition) -> BigInt {
        self.entries.get(class).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The entry at the identity class 1^d.
    pub fn identity_entry(&self) -> BigInt {
        self.get(&Partition::ones(self.degree))
    }
}

// ---------------------------------------------------------------------------
// Engine 1: definitional brute force.

/// Union-find over letters with an undo log, used to track orbits of the
/// partial tuple during the backtracking search.
struct RollbackDsu {
    parent: Vec<u32>,
    size: Vec<u32>,
    components: u32,
    log: Vec<(u32, u32)>,
}

impl RollbackDsu {
    fn new(n: u32) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n as usize],
            components: n,
            log: Vec::new(),
        }
    }

    fn find(&self, mut x: u32) -> u32 {
        // No path compression: unions must be reversible.
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    /// Returns a checkpoint token for `rollback`.
    fn union(&mut self, a: u32, b: u32) -> usize {
        let token = self.log.len();
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (small, large) = if self.size[ra as usize] <= self.size[rb as usize] {
                (ra, rb)
            } else {
                (rb, ra)
            };
            self.log.push((small, large));
            self.parent[small as usize] = large;
            self.size[large as usize] += self.size[small as usize];
            self.components -= 1;
        }
        token
    }

    fn rollback(&mut self, token: usize) {
        while self.log.len() > token {
            let (small, large) = self.log.pop().unwrap();
            self.parent[small as usize] = small;
            self.size[large as usize] -= self.size[small as usize];
            self.components += 1;
        }
    }
}

struct BruteSearch {
    degree: u32,
    tuple_len: u64,
    transpositions: Vec<(u32, u32)>,
    require_transitive: bool,
    // Prefix product as a permutation (image table) and its cycle count.
    product: Vec<u32>,
    cycles: u32,
    orbits: RollbackDsu,
    found: u64,
}

impl BruteSearch {
    fn same_cycle(&self, a: u32, b: u32) -> bool {
        let mut x = self.product[a as usize];
        while x != a {
            if x == b {
                return true;
            }
            x = self.product[x as usize];
        }
        false
    }

    /// Multiply the prefix product on the right by (a b) and keep the cycle
    /// count current. Self-inverse, so it also undoes itself.
    fn apply(&mut self, a: u32, b: u32) {
        if self.same_cycle(a, b) {
            self.cycles += 1;
        } else {
            self.cycles -= 1;
        }
        self.product.swap(a as usize, b as usize);
    }

    fn dfs(&mut self, depth: u64) {
        let remaining = self.tuple_len - depth;
        let distance = (self.degree - self.cycles) as u64;
        // The product of the remaining transpositions must undo the prefix:
        // that takes at least `distance` factors and the right parity.
        if remaining < distance || (remaining - distance) % 2 != 0 {
            return;
        }
        if self.require_transitive && (self.orbits.components - 1) as u64 > remaining {
            return;
        }
        if remaining == 0 {
            debug_assert!(self.product.iter().enumerate().all(|(i, &x)| x == i as u32));
            if !self.require_transitive || self.orbits.components == 1 {
                self.found += 1;
            }
            return;
        }
        if remaining == distance {
            // Every remaining factor must shorten the product, so only
            // transpositions inside a current cycle can appear.
            for idx in 0..self.transpositions.len() {
                let (a, b) = self.transpositions[idx];
                if self.same_cycle(a, b) {
                    self.step(a, b, depth);
                }
            }
        } else {
            for idx in 0..self.transpositions.len() {
                let (a, b) = self.transpositions[idx];
                self.step(a, b, depth);
            }
        }
    }

    fn step(&mut self, a: u32, b: u32, depth: u64) {
        self.apply(a, b);
        let token = self.orbits.union(a, b);
        self.dfs(depth + 1);
        self.orbits.rollback(token);
        self.apply(a, b);
    }
}

/// Counts tuples (t_1, ..., t_r) of transpositions in the symmetric group on
/// d letters with t_1 ... t_r = identity, optionally requiring the generated
/// subgroup to act transitively on the letters (singletons count as their
/// own orbits, so d = 1, r = 0 is transitive).
///
/// Fails with `CapExceeded` when C(d,2)^r is over `cap`; use
/// `brute_force_count` for the default cap.
pub fn brute_force_count_capped(
    d: u32,
    r: u64,
    require_transitive: bool,
    cap: u64,
) -> Result<BigInt, HurwitzError> {
    assert!(d >= 1, "degree must be positive");
    let size = Pow::pow(&BigInt::from(transposition_count(d)), r);
    if size > BigInt::from(cap) {
        return Err(HurwitzError::CapExceeded { d, r, size, cap });
    }
    let mut transpositions = Vec::new();
    for a in 0..d {
        for b in (a + 1)..d {
            transpositions.push((a, b));
        }
    }
    let mut search = BruteSearch {
        degree: d,
        tuple_len: r,
        transpositions,
        require_transitive,
        product: (0..d).collect(),
        cycles: d,
        orbits: RollbackDsu::new(d),
        found: 0,
    };
    search.dfs(0);
    Ok(BigInt::from(search.found))
}

/// `brute_force_count_capped` with the default cap.
pub fn brute_force_count(d: u32, r: u64, require_transitive: bool) -> Result<BigInt, HurwitzError> {
    brute_force_count_capped(d, r, require_transitive, DEFAULT_BRUTE_CAP)
}

// ---------------------------------------------------------------------------
// Engine 2: Frobenius character sum.

/// Number of (not necessarily transitive) tuples of r transpositions with
/// product identity, as the character sum
/// sum over shapes of dimension^2 * content_sum^r / d!
/// evaluated in exact integers. d = 0 gives 1 when r = 0 and 0 otherwise.
pub fn disconnected_count(d: u32, r: u64) -> BigInt {
    let mut total = BigInt::zero();
    for shape in partitions_of(d) {
        let dim = shape.dimension();
        let central = BigInt::from(shape.content_sum());
        total += &dim * &dim * pow_with_empty_product(&central, r);
    }
    let (count, rem) = total.div_rem(&factorial(d as u64));
    assert!(
        rem.is_zero(),
        "character sum for d={d}, r={r} not divisible by d!"
    );
    debug_assert!(!count.is_negative());
    count
}

/// x^r with the convention 0^0 = 1.
fn pow_with_empty_product(x: &BigInt, r: u64) -> BigInt {
    if r == 0 {
        BigInt::one()
    } else {
        Pow::pow(x, r)
    }
}

/// Disconnected counts for every degree up to `d` and tuple length up to
/// `r`, computed from the character sum with incremental powers.
fn disconnected_table_characters(d: u32, r: u64) -> Vec<Vec<BigInt>> {
    let mut table = Vec::with_capacity(d as usize + 1);
    for k in 0..=d {
        let mut row = vec![BigInt::zero(); r as usize + 1];
        let d_fact = factorial(k as u64);
        for shape in partitions_of(k) {
            let dim = shape.dimension();
            let dim_sq = &dim * &dim;
            let central = BigInt::from(shape.content_sum());
            let mut power = BigInt::one();
            for entry in row.iter_mut() {
                *entry += &dim_sq * &power;
                power *= &central;
            }
        }
        for entry in row.iter_mut() {
            let (q, rem) = entry.div_rem(&d_fact);
            assert!(rem.is_zero(), "character sum not divisible by d!");
            *entry = q;
        }
        table.push(row);
    }
    table
}

// ---------------------------------------------------------------------------
// Engine 3: cut-and-join walk on the class algebra.

/// One multiplication of the class vector by the sum of all transpositions.
///
/// For a fixed permutation of type `target`, a transposition either cuts one
/// of its cycles of length p into cycles of lengths q and p-q (p such
/// transpositions per cycle, p/2 when q = p-q) or joins two cycles of
/// lengths x and y into one of length x+y (x*y transpositions per ordered
/// pair of cycles). Summing the counts at the resulting types yields the
/// next value at `target`.
fn walk_step(d: u32, v: &BTreeMap<Partition, BigInt>) -> BTreeMap<Partition, BigInt> {
    let mut next = BTreeMap::new();
    for target in partitions_of(d) {
        let mut total = BigInt::zero();
        let mut coefficient_mass = 0u64;
        for (coefficient, neighbour) in class_moves(&target) {
            coefficient_mass += coefficient;
            if let Some(value) = v.get(&neighbour) {
                total += BigInt::from(coefficient) * value;
            }
        }
        debug_assert_eq!(coefficient_mass, transposition_count(d));
        if !total.is_zero() {
            next.insert(target, total);
        }
    }
    next
}

/// All single-transposition moves from a fixed permutation of type `from`:
/// pairs of (number of transpositions producing it, resulting cycle type).
fn class_moves(from: &Partition) -> Vec<(u64, Partition)> {
    let mults = from.multiplicities();
    let mut moves = Vec::new();
    // Cuts: one part p becomes q and p-q.
    for &(p, m) in &mults {
        for q in 1..=p / 2 {
            let coefficient = m as u64 * if 2 * q == p { p as u64 / 2 } else { p as u64 };
            moves.push((coefficient, replace_parts(from, &[(p, 1)], &[q, p - q])));
        }
    }
    // Joins: parts x and y become x+y.
    for i in 0..mults.len() {
        let (x, mx) = mults[i];
        if mx >= 2 {
            let pairs = mx as u64 * (mx as u64 - 1) / 2;
            moves.push((pairs * x as u64 * x as u64, replace_parts(from, &[(x, 2)], &[2 * x])));
        }
        for &(y, my) in &mults[i + 1..] {
            let coefficient = mx as u64 * my as u64 * x as u64 * y as u64;
            moves.push((coefficient, replace_parts(from, &[(x, 1), (y, 1)], &[x + y])));
        }
    }
    moves
}

/// The partition obtained by removing the given (part, count) pairs and
/// inserting the new parts.
fn replace_parts(from: &Partition, remove: &[(u32, u32)], insert: &[u32]) -> Partition {
    let mut parts = Vec::with_capacity(from.len() + insert.len());
    let mut to_remove: Vec<(u32, u32)> = remove.to_vec();
    'outer: for &p in from.parts() {
        for entry in to_remove.iter_mut() {
            if entry.0 == p && entry.1 > 0 {
                entry.1 -= 1;
                continue 'outer;
            }
        }
        parts.push(p);
    }
    debug_assert!(to_remove.iter().all(|&(_, c)| c == 0));
    parts.extend_from_slice(insert);
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts)
}

/// Runs the cut-and-join walk for `r` steps starting from the vector
/// concentrated at 1^d with value 1. After r steps the entry at 1^d equals
/// `disconnected_count(d, r)`.
pub fn cut_and_join_walk(d: u32, r: u64) -> ClassVector {
    assert!(d >= 1, "degree must be positive");
    let mut entries = BTreeMap::new();
    entries.insert(Partition::ones(d), BigInt::one());
    for _ in 0..r {
        entries = walk_step(d, &entries);
    }
    ClassVector { degree: d, entries }
}

/// Identity-class entries of the walk after 0, 1, ..., r steps.
pub fn walk_identity_series(d: u32, r: u64) -> Vec<BigInt> {
    assert!(d >= 1);
    let identity = Partition::ones(d);
    let mut entries = BTreeMap::new();
    entries.insert(identity.clone(), BigInt::one());
    let mut series = Vec::with_capacity(r as usize + 1);
    series.push(BigInt::one());
    for _ in 0..r {
        entries = walk_step(d, &entries);
        series.push(entries.get(&identity).cloned().unwrap_or_else(BigInt::zero));
    }
    series
}

fn disconnected_table_cutjoin(d: u32, r: u64) -> Vec<Vec<BigInt>> {
    let mut table = Vec::with_capacity(d as usize + 1);
    // Degree 0: one empty tuple when r = 0.
    let mut zero_row = vec![BigInt::zero(); r as usize + 1];
    zero_row[0] = BigInt::one();
    table.push(zero_row);
    for k in 1..=d {
        table.push(walk_identity_series(k, r));
    }
    table
}

// ---------------------------------------------------------------------------
// Connected counts via the deletion recursion.

/// Transitive tuple counts extracted from a disconnected-count table by
/// deleting the component of the first letter:
///
/// C(d,r) = D(d,r) - sum over proper component sizes k and slot counts s of
///          binom(d-1,k-1) * binom(r,s) * C(k,s) * D(d-k,r-s).
fn connected_table(d: u32, r: u64, disconnected: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let r = r as usize;
    let binom = binomial_table((d as usize).max(r));
    let mut connected = vec![vec![BigInt::zero(); r + 1]; d as usize + 1];
    if d >= 1 {
        connected[1][0] = BigInt::one();
    }
    for dd in 2..=d as usize {
        for rr in 0..=r {
            let mut value = disconnected[dd][rr].clone();
            for k in 1..dd {
                let letters = &binom[dd - 1][k - 1];
                for s in 0..=rr {
                    let term = &connected[k][s] * &disconnected[dd - k][rr - s];
                    if !term.is_zero() {
                        value -= letters * &binom[rr][s] * term;
                    }
                }
            }
            debug_assert!(!value.is_negative());
            connected[dd][rr] = value;
        }
    }
    connected
}

/// Number of transitive tuples of r transpositions with product identity,
/// with disconnected counts supplied by the character sum.
pub fn connected_count(d: u32, r: u64) -> BigInt {
    assert!(d >= 1, "degree must be positive");
    if d == 1 {
        return if r == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let disconnected = disconnected_table_characters(d, r);
    connected_table(d, r, &disconnected)[d as usize][r as usize].clone()
}

fn connected_count_cutjoin(d: u32, r: u64) -> BigInt {
    if d == 1 {
        return if r == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let disconnected = disconnected_table_cutjoin(d, r);
    connected_table(d, r, &disconnected)[d as usize][r as usize].clone()
}

// ---------------------------------------------------------------------------
// Top-level queries.

/// The ordinary Hurwitz number h_{g,1^d} as a raw transitive tuple count.
///
/// `Auto` runs the brute-force engine as a cross-check whenever the
/// enumeration is small enough (and under `cap`), and the character engine
/// otherwise; disagreement between engines is a fatal diagnostic.
pub fn hurwitz_simple_capped(
    q: HurwitzQuery,
    method: Method,
    cap: u64,
) -> Result<TupleCount, HurwitzError> {
    let d = q.degree;
    let r = q.transpositions();
    let value = match method {
        Method::Brute => brute_force_count_capped(d, r, true, cap)?,
        Method::Characters => connected_count(d, r),
        Method::CutJoin => connected_count_cutjoin(d, r),
        Method::Auto => {
            let from_characters = connected_count(d, r);
            let budget = cap.min(AUTO_CROSS_CHECK_BUDGET);
            if let Ok(from_brute) = brute_force_count_capped(d, r, true, budget) {
                if from_brute != from_characters {
                    return Err(HurwitzError::MethodDisagreement {
                        g: q.genus,
                        d,
                        details: format!(
                            "brute force found {from_brute}, character sum found {from_characters}"
                        ),
                    });
                }
            }
            from_characters
        }
    };
    Ok(TupleCount {
        value,
        connected: true,
    })
}

/// `hurwitz_simple_capped` with the default brute-force cap.
pub fn hurwitz_simple(q: HurwitzQuery, method: Method) -> Result<TupleCount, HurwitzError> {
    hurwitz_simple_capped(q, method, DEFAULT_BRUTE_CAP)
}

/// h_{g,1^d} / d! as an exact rational: the number of covers up to
/// isomorphism. Non-integral values (for example 1/2 at g = 0, d = 2) are
/// meaningful and reported as-is.
pub fn pair_count(q: HurwitzQuery, method: Method, cap: u64) -> Result<BigRational, HurwitzError> {
    let h = hurwitz_simple_capped(q, method, cap)?;
    Ok(BigRational::new(h.value, factorial(q.degree as u64)))
}

/// Runs every engine that is feasible under `cap` and checks that they
/// agree. Returns the per-engine values (at least two: characters and
/// cut-and-join are always feasible) and the consensus count.
pub fn hurwitz_all_engines(
    q: HurwitzQuery,
    cap: u64,
) -> Result<(Vec<(&'static str, BigInt)>, TupleCount), HurwitzError> {
    let d = q.degree;
    let r = q.transpositions();
    let mut results: Vec<(&'static str, BigInt)> = Vec::new();
    if let Ok(v) = brute_force_count_capped(d, r, true, cap) {
        results.push(("brute", v));
    }
    results.push(("characters", connected_count(d, r)));
    results.push(("cutjoin", connected_count_cutjoin(d, r)));
    let reference = results[0].1.clone();
    if results.iter().any(|(_, v)| *v != reference) {
        let details = results
            .iter()
            .map(|(name, v)| format!("{name}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(HurwitzError::MethodDisagreement { g: q.genus, d, details });
    }
    Ok((
        results,
        TupleCount {
            value: reference,
            connected: true,
        },
    ))
}

/// True when the brute-force engine would accept this instance under `cap`.
pub fn brute_force_feasible(d: u32, r: u64, cap: u64) -> bool {
    Pow::pow(&BigInt::from(transposition_count(d)), r) <= BigInt::from(cap)
}
