//! Built-in self-verification against the known reference values: five
//! Hurwitz/Hurwitz-Severi pairs plus the unbendable quartic projection.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::severi::{classify, hs_number, HurwitzProvider, Kind, SeveriError, SeveriTriple};

/// Outcome of one reference check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// The reference table: (g, d, l, h_{g,1^d}, H_{g,d,l}).
const REFERENCE: [(u32, u32, u32, i64, i64); 5] = [
    (1, 3, 0, 240, 40),
    (1, 2, 1, 1, 1),
    (0, 3, 0, 24, 12),
    (0, 2, 1, 1, 1),
    (3, 3, 1, 19680, 3280),
];

/// Recomputes every reference value with the given Hurwitz provider and
/// reports one pass/fail entry per check.
pub fn reference_checks(provider: &dyn HurwitzProvider) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    for (g, d, l, h_expected, hs_expected) in REFERENCE {
        let h_name = format!("h[g={g},d={d}]");
        match provider.hurwitz(g, d) {
            Ok(count) => reports.push(CheckReport {
                name: h_name,
                expected: h_expected.to_string(),
                actual: count.value.to_string(),
                pass: count.value == BigInt::from(h_expected),
            }),
            Err(err) => reports.push(CheckReport {
                name: h_name,
                expected: h_expected.to_string(),
                actual: format!("error: {err}"),
                pass: false,
            }),
        }
        let hs_name = format!("H[g={g},d={d},l={l}]");
        match hs_number(SeveriTriple::new(g, d, l), provider) {
            Ok(hs) => reports.push(CheckReport {
                name: hs_name,
                expected: hs_expected.to_string(),
                actual: hs.value.to_string(),
                pass: hs.value == BigRational::from_integer(BigInt::from(hs_expected)),
            }),
            Err(err) => reports.push(CheckReport {
                name: hs_name,
                expected: hs_expected.to_string(),
                actual: format!("error: {err}"),
                pass: false,
            }),
        }
    }
    let quartic = SeveriTriple::new(3, 4, 0);
    let kind = classify(quartic).kind;
    reports.push(CheckReport {
        name: "classify[g=3,d=4,l=0]".to_string(),
        expected: "unbendable".to_string(),
        actual: kind.as_str().to_string(),
        pass: kind == Kind::Unbendable,
    });
    let refusal = hs_number(quartic, provider);
    reports.push(CheckReport {
        name: "H[g=3,d=4,l=0] refused".to_string(),
        expected: "unbendable-unsupported".to_string(),
        actual: match &refusal {
            Ok(hs) => format!("value {}", hs.value),
            Err(SeveriError::UnbendableUnsupported { .. }) => "unbendable-unsupported".to_string(),
            Err(other) => format!("error: {other}"),
        },
        pass: matches!(refusal, Err(SeveriError::UnbendableUnsupported { .. })),
    });
    reports
}

pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::{HurwitzError, Method, TupleCount, DEFAULT_BRUTE_CAP};
    use crate::severi::EngineProvider;

    #[test]
    fn fresh_build_passes_all_checks() {
        let provider = EngineProvider {
            method: Method::Auto,
            cap: DEFAULT_BRUTE_CAP,
        };
        let reports = reference_checks(&provider);
        assert_eq!(reports.len(), 12);
        for report in &reports {
            assert!(report.pass, "{}: expected {}, got {}", report.name, report.expected, report.actual);
        }
        assert!(all_pass(&reports));
    }

    #[test]
    fn character_engine_alone_passes() {
        let provider = EngineProvider {
            method: Method::Characters,
            cap: 0,
        };
        assert!(all_pass(&reference_checks(&provider)));
    }

    #[test]
    fn wrong_table_is_reported_by_name() {
        struct WrongProvider;
        impl HurwitzProvider for WrongProvider {
            fn hurwitz(&self, g: u32, d: u32) -> Result<TupleCount, HurwitzError> {
                // Off by one on a single entry.
                let value = if (g, d) == (1, 3) { 241 } else { 1 };
                Ok(TupleCount {
                    value: BigInt::from(value),
                    connected: true,
                })
            }
        }
        let reports = reference_checks(&WrongProvider);
        assert!(!all_pass(&reports));
        let failing: Vec<_> = reports.iter().filter(|r| !r.pass).map(|r| r.name.as_str()).collect();
        assert!(failing.contains(&"h[g=1,d=3]"));
        assert!(failing.contains(&"H[g=1,d=3,l=0]"));
    }
}
