//! Severi-triple bookkeeping (nonemptiness, dimensions, node counts,
//! bendability classification) and the Hurwitz-Severi number formulas.
//!
//! A triple (g, d, l) describes irreducible plane curves of geometric genus
//! g and degree d+l with an l-fold node at a fixed point p, projected from p
//! with degree d. The Hurwitz-Severi number counts orbits of such curves
//! with prescribed tangency and node-detecting data; in the bendable and
//! semi-bendable regimes it reduces to the ordinary Hurwitz number h_{g,1^d}.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use thiserror::Error;

use crate::arith::{binomial, factorial, transposition_count};
use crate::hurwitz::{hurwitz_simple_capped, HurwitzError, HurwitzQuery, Method, TupleCount};

/// A Severi-variety triple: genus, projection degree, node multiplicity at p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeveriTriple {
    pub g: u32,
    pub d: u32,
    pub l: u32,
}

impl SeveriTriple {
    pub fn new(g: u32, d: u32, l: u32) -> Self {
        assert!(d >= 1, "projection degree must be positive");
        SeveriTriple { g, d, l }
    }

    /// Degree of the plane curve itself.
    pub fn curve_degree(&self) -> u32 {
        self.d + self.l
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Bendable,
    SemiBendable,
    Unbendable,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Bendable => "bendable",
            Kind::SemiBendable => "semi-bendable",
            Kind::Unbendable => "unbendable",
        }
    }
}

/// Result of classifying a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub kind: Kind,
    /// Only meaningful for bendable triples: the branching morphism maps
    /// between spaces of equal dimension.
    pub strongly_bendable: bool,
    pub nonempty: bool,
}

/// The three dimensions attached to a triple: the Severi variety, its
/// quotient by the projective stabilizer of p, and the target product of
/// symmetric powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dims {
    pub variety: i64,
    pub orbit_space: i64,
    pub target: i64,
}

/// An exact Hurwitz-Severi value with provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HsValue {
    pub value: BigRational,
    pub integral: bool,
    pub classification: Classification,
    pub hurwitz_input: TupleCount,
    pub warnings: Vec<String>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeveriError {
    #[error("the Severi variety for (g={g}, d={d}, l={l}) is empty")]
    EmptyVariety { g: u32, d: u32, l: u32 },
    #[error("(g={g}, d={d}, l={l}) is unbendable: no formula is available, the case is still widely open")]
    UnbendableUnsupported { g: u32, d: u32, l: u32 },
    #[error("(g={g}, d={d}, l={l}) has a degree-1 projection, which has no simple branch points to prescribe")]
    DegenerateProjection { g: u32, d: u32, l: u32 },
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
}

fn choose2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// Whether the Severi variety is nonempty: g <= C(d+l-1, 2) - C(l, 2).
pub fn is_nonempty(t: SeveriTriple) -> bool {
    let (g, d, l) = (t.g as i64, t.d as i64, t.l as i64);
    g <= choose2(d + l - 1) - choose2(l)
}

/// Number of ordinary nodes away from p: C(d-1, 2) + l(d-1) - g.
/// Negative exactly when the variety is empty.
pub fn node_count(t: SeveriTriple) -> i64 {
    let (g, d, l) = (t.g as i64, t.d as i64, t.l as i64);
    choose2(d - 1) + l * (d - 1) - g
}

/// The dimension triple (variety, orbit space, target).
pub fn dims(t: SeveriTriple) -> Dims {
    let (g, d, l) = (t.g as i64, t.d as i64, t.l as i64);
    let variety = 3 * d + 2 * l + g - 1;
    Dims {
        variety,
        orbit_space: variety - 3,
        target: (2 * d + 2 * g - 2) + l + node_count(t),
    }
}

/// Classifies a triple by comparing the orbit-space dimension with the
/// branch-divisor degree budget:
///
/// * bendable:       d + l   >= g + 2
/// * semi-bendable:  d + l   <  g + 2 <= d + 2l
/// * unbendable:     d + 2l  <  g + 2
///
/// A nonempty bendable triple is strongly bendable when the orbit space and
/// the target have equal dimension, i.e. (d-2)(d+2l-3) = 0; degree-1
/// projections are excluded, leaving the series (g, 2, l) with g <= l plus
/// (0, 3, 0) and (1, 3, 0).
pub fn classify(t: SeveriTriple) -> Classification {
    let (g, d, l) = (t.g as i64, t.d as i64, t.l as i64);
    let kind = if d + l >= g + 2 {
        Kind::Bendable
    } else if g + 2 <= d + 2 * l {
        Kind::SemiBendable
    } else {
        Kind::Unbendable
    };
    let nonempty = is_nonempty(t);
    let strongly_bendable =
        kind == Kind::Bendable && nonempty && d >= 2 && (d - 2) * (d + 2 * l - 3) == 0;
    Classification {
        kind,
        strongly_bendable,
        nonempty,
    }
}

/// Supplies ordinary Hurwitz numbers h_{g,1^d} to the Hurwitz-Severi
/// formulas. Injected so the formulas can be tested against a fixed table.
pub trait HurwitzProvider {
    fn hurwitz(&self, g: u32, d: u32) -> Result<TupleCount, HurwitzError>;
}

/// The standard provider: a Hurwitz engine selection plus brute-force cap.
#[derive(Debug, Clone, Copy)]
pub struct EngineProvider {
    pub method: Method,
    pub cap: u64,
}

impl HurwitzProvider for EngineProvider {
    fn hurwitz(&self, g: u32, d: u32) -> Result<TupleCount, HurwitzError> {
        hurwitz_simple_capped(HurwitzQuery::new(g, d), self.method, self.cap)
    }
}

/// The Hurwitz-Severi number of a nonempty bendable or semi-bendable triple:
///
/// * bendable:       C(d,2)^(d+l-g-2) * d^l * h_{g,1^d} / d!
/// * semi-bendable:  d^(d+2l-g-2) * binom(2g-d-l-1, g-3) * h_{g,1^d} / d!
///
/// The value is an exact rational; non-integral values are reported with
/// `integral = false` rather than rounded (the cover count h/d! is itself an
/// automorphism-weighted quantity).
pub fn hs_number(t: SeveriTriple, provider: &dyn HurwitzProvider) -> Result<HsValue, SeveriError> {
    let classification = classify(t);
    if !classification.nonempty {
        return Err(SeveriError::EmptyVariety { g: t.g, d: t.d, l: t.l });
    }
    if t.d == 1 {
        return Err(SeveriError::DegenerateProjection { g: t.g, d: t.d, l: t.l });
    }
    if classification.kind == Kind::Unbendable {
        return Err(SeveriError::UnbendableUnsupported { g: t.g, d: t.d, l: t.l });
    }
    let hurwitz_input = provider.hurwitz(t.g, t.d)?;
    let (g, d, l) = (t.g as i64, t.d as i64, t.l as i64);
    let mut warnings = Vec::new();
    let numerator = match classification.kind {
        Kind::Bendable => {
            let budget = (d + l - g - 2) as u64;
            Pow::pow(&BigInt::from(transposition_count(t.d)), budget)
                * Pow::pow(&BigInt::from(d), l as u64)
                * &hurwitz_input.value
        }
        Kind::SemiBendable => {
            let budget = (d + 2 * l - g - 2) as u64;
            if g < 3 {
                warnings.push(format!(
                    "semi-bendable triple with g = {g}: the binomial factor index g-3 is \
                     negative and the value uses the binom(n, k<0) = 0 convention"
                ));
            }
            Pow::pow(&BigInt::from(d), budget)
                * binomial(2 * g - d - l - 1, g - 3)
                * &hurwitz_input.value
        }
        Kind::Unbendable => unreachable!(),
    };
    let value = BigRational::new(numerator, factorial(t.d as u64));
    let integral = value.denom().is_one();
    Ok(HsValue {
        value,
        integral,
        classification,
        hurwitz_input,
        warnings,
    })
}
