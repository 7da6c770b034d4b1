//! Sampled verification of the algebraic laws: the nine ring axioms for any
//! ring instance, and the determinant laws the `check` command runs against
//! a user matrix. Every check is exact; randomness only chooses instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::det::{adjoint, det_rec, det_with_cap, expand_col, expand_row};
use crate::error::Result;
use crate::matrix::{identity, Matrix};
use crate::perm::DEFAULT_CAP;
use crate::ring::Ring;
use crate::vector::{sample_vector, vec_add, vec_scale, zeros};

/// Result of one law over all its sampled instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub name: &'static str,
    pub outcome: LawOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawOutcome {
    Passed,
    /// First counterexample found, rendered for diagnostics.
    Failed(String),
    /// Law does not apply to this input shape; reason attached.
    Skipped(String),
}

impl LawReport {
    fn passed(name: &'static str) -> Self {
        LawReport {
            name,
            outcome: LawOutcome::Passed,
        }
    }

    fn failed(name: &'static str, detail: String) -> Self {
        LawReport {
            name,
            outcome: LawOutcome::Failed(detail),
        }
    }

    fn skipped(name: &'static str, reason: &str) -> Self {
        LawReport {
            name,
            outcome: LawOutcome::Skipped(reason.to_string()),
        }
    }

    fn of(name: &'static str, counterexample: Option<String>) -> Self {
        match counterexample {
            None => LawReport::passed(name),
            Some(detail) => LawReport::failed(name, detail),
        }
    }

    /// A skipped law is not a failure.
    pub fn is_failure(&self) -> bool {
        matches!(self.outcome, LawOutcome::Failed(_))
    }
}

impl std::fmt::Display for LawOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LawOutcome::Passed => f.write_str("pass"),
            LawOutcome::Failed(detail) => write!(f, "fail ({detail})"),
            LawOutcome::Skipped(reason) => write!(f, "skip ({reason})"),
        }
    }
}

pub fn all_passed(reports: &[LawReport]) -> bool {
    reports.iter().all(|r| !r.is_failure())
}

/// The ring instances every sampled suite runs against.
pub fn standard_rings() -> Vec<Ring> {
    vec![
        Ring::Integers,
        Ring::Rationals,
        Ring::zmod(2u32).expect("modulus is valid"),
        Ring::zmod(5u32).expect("modulus is valid"),
        Ring::zmod(6u32).expect("modulus is valid"),
        Ring::zmod(12u32).expect("modulus is valid"),
        Ring::poly_over(Ring::Integers),
        Ring::poly_over(Ring::zmod(5u32).expect("modulus is valid")),
    ]
}

/// Checks the nine commutative-ring axioms on `instances` random triples
/// (x, y, z). One report per axiom; a failure carries the first
/// counterexample.
pub fn ring_axioms(ring: &Ring, instances: usize, seed: u64) -> Vec<LawReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: [&'static str; 9] = [
        "closure",
        "add-commutativity",
        "mul-commutativity",
        "add-associativity",
        "mul-associativity",
        "zero-identity",
        "one-identity",
        "additive-inverse",
        "distributivity",
    ];
    let mut counterexamples: [Option<String>; 9] = Default::default();
    for _ in 0..instances {
        let x = ring.sample(&mut rng);
        let y = ring.sample(&mut rng);
        let z = ring.sample(&mut rng);
        let witness = || format!("x={x}, y={y}, z={z} over {ring}");

        let checks: [bool; 9] = [
            ring.contains(&ring.add(&x, &y)) && ring.contains(&ring.mul(&x, &y)),
            ring.eq(&ring.add(&x, &y), &ring.add(&y, &x)),
            ring.eq(&ring.mul(&x, &y), &ring.mul(&y, &x)),
            ring.eq(
                &ring.add(&ring.add(&x, &y), &z),
                &ring.add(&x, &ring.add(&y, &z)),
            ),
            ring.eq(
                &ring.mul(&ring.mul(&x, &y), &z),
                &ring.mul(&x, &ring.mul(&y, &z)),
            ),
            ring.eq(&ring.add(&x, &ring.zero()), &x),
            ring.eq(&ring.mul(&x, &ring.one()), &x),
            ring.is_zero(&ring.add(&x, &ring.neg(&x))),
            ring.eq(
                &ring.mul(&x, &ring.add(&y, &z)),
                &ring.add(&ring.mul(&x, &y), &ring.mul(&x, &z)),
            ),
        ];
        for (slot, ok) in counterexamples.iter_mut().zip(checks) {
            if !ok && slot.is_none() {
                *slot = Some(witness());
            }
        }
    }
    names
        .into_iter()
        .zip(counterexamples)
        .map(|(name, cex)| LawReport::of(name, cex))
        .collect()
}

/// Runs the determinant law suite against one square matrix: transpose
/// invariance, the alternating and zero-row properties, n-linearity,
/// multiplicativity, the adjoint identity, and cross-algorithm agreement.
/// Sampled companions (rows, scalars, the second factor) come from a rng
/// seeded with `seed`.
pub fn determinant_laws(a: &Matrix, samples: usize, seed: u64) -> Result<Vec<LawReport>> {
    let n = a.require_square()?;
    let ring = a.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();

    let reference = det_rec(a)?;

    reports.push(LawReport::of(
        "transpose-invariance",
        if det_rec(&a.transpose())? == reference {
            None
        } else {
            Some("det(transpose(a)) != det(a)".to_string())
        },
    ));

    if n < 2 {
        reports.push(LawReport::skipped(
            "alternating-equal-rows",
            "needs two distinct rows",
        ));
    } else {
        let mut cex = None;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let doubled = a.replace_row(j, a.row(i)?.clone())?;
                if !ring.is_zero(&det_rec(&doubled)?) {
                    cex = Some(format!("rows {i} and {j} equal, det nonzero"));
                }
            }
        }
        reports.push(LawReport::of("alternating-equal-rows", cex));
    }

    {
        let mut cex = None;
        for i in 0..n {
            let zeroed = a.replace_row(i, zeros(ring, n))?;
            if !ring.is_zero(&det_rec(&zeroed)?) {
                cex = Some(format!("zero row {i}, det nonzero"));
            }
        }
        reports.push(LawReport::of("zero-row", cex));
    }

    {
        let mut cex = None;
        for _ in 0..samples {
            let i = rng.random_range(0..n);
            let c = ring.sample(&mut rng);
            let x = sample_vector(ring, n, &mut rng);
            let y = sample_vector(ring, n, &mut rng);
            let combined = vec_add(ring, &vec_scale(ring, &c, &x), &y)?;
            let lhs = det_rec(&a.replace_row(i, combined)?)?;
            let dx = det_rec(&a.replace_row(i, x)?)?;
            let dy = det_rec(&a.replace_row(i, y)?)?;
            let rhs = ring.add(&ring.mul(&c, &dx), &dy);
            if !ring.eq(&lhs, &rhs) && cex.is_none() {
                cex = Some(format!("row {i}, scalar c={c}"));
            }
        }
        reports.push(LawReport::of("n-linearity", cex));
    }

    {
        let mut cex = None;
        for _ in 0..samples {
            let b = Matrix::sample(ring, n, n, &mut rng)?;
            let lhs = det_rec(&a.multiply(&b)?)?;
            let rhs = ring.mul(&reference, &det_rec(&b)?);
            if !ring.eq(&lhs, &rhs) && cex.is_none() {
                cex = Some("det(ab) != det(a)det(b) for a sampled b".to_string());
            }
        }
        reports.push(LawReport::of("multiplicativity", cex));
    }

    if n < 2 {
        reports.push(LawReport::skipped("adjoint-identity", "adjoint needs n >= 2"));
    } else {
        let product = a.multiply(&adjoint(a)?)?;
        let scaled = identity(ring, n)?.scale(&reference);
        reports.push(LawReport::of(
            "adjoint-identity",
            product
                .entry_diff(&scaled)
                .map(|(i, j)| format!("a*adj(a) differs from det(a)*I at ({i}, {j})")),
        ));
    }

    {
        let mut cex = None;
        if n <= DEFAULT_CAP {
            let leibniz = det_with_cap(a, DEFAULT_CAP)?;
            if leibniz != reference {
                cex = Some("permutation sum disagrees with recursion".to_string());
            }
        }
        if n >= 2 {
            for i in 0..n {
                if expand_row(a, i)? != reference && cex.is_none() {
                    cex = Some(format!("row expansion {i} disagrees"));
                }
                if expand_col(a, i)? != reference && cex.is_none() {
                    cex = Some(format!("column expansion {i} disagrees"));
                }
            }
        }
        reports.push(LawReport::of("cross-algorithm", cex));
    }

    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn axioms_hold_on_every_standard_ring() {
        for ring in standard_rings() {
            let reports = ring_axioms(&ring, 50, 3);
            assert_eq!(reports.len(), 9);
            assert!(all_passed(&reports), "{ring}: {reports:?}");
            assert!(reports.iter().all(|r| r.outcome == LawOutcome::Passed));
        }
    }

    #[test]
    fn axiom_names_are_stable() {
        let reports = ring_axioms(&Ring::Integers, 1, 3);
        let names: Vec<_> = reports.iter().map(|r| r.name).collect();
        assert_eq!(
            names,
            vec![
                "closure",
                "add-commutativity",
                "mul-commutativity",
                "add-associativity",
                "mul-associativity",
                "zero-identity",
                "one-identity",
                "additive-inverse",
                "distributivity"
            ]
        );
    }

    #[test]
    fn failure_report_carries_the_counterexample() {
        let report = LawReport::of("zero-row", Some("zero row 1, det nonzero".into()));
        assert!(report.is_failure());
        assert_eq!(
            report.outcome.to_string(),
            "fail (zero row 1, det nonzero)"
        );
        assert!(!all_passed(&[report]));
    }

    #[test]
    fn determinant_laws_pass_on_identity() {
        let ring = Ring::Rationals;
        let id = identity(&ring, 4).unwrap();
        let reports = determinant_laws(&id, 5, 11).unwrap();
        assert!(all_passed(&reports), "{reports:?}");
        let names: Vec<_> = reports.iter().map(|r| r.name).collect();
        assert_eq!(
            names,
            vec![
                "transpose-invariance",
                "alternating-equal-rows",
                "zero-row",
                "n-linearity",
                "multiplicativity",
                "adjoint-identity",
                "cross-algorithm"
            ]
        );
    }

    #[test]
    fn determinant_laws_pass_on_zero_divisor_ring() {
        use rand::SeedableRng;
        let ring = Ring::parse("zmod 6").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let a = Matrix::sample(&ring, 3, 3, &mut rng).unwrap();
        let reports = determinant_laws(&a, 5, 11).unwrap();
        assert!(all_passed(&reports), "{reports:?}");
    }

    #[test]
    fn one_by_one_skips_shape_bound_laws() {
        let a = Matrix::from_i64_rows(Ring::Integers, &[&[5]]).unwrap();
        let reports = determinant_laws(&a, 3, 11).unwrap();
        assert!(all_passed(&reports));
        let skipped: Vec<_> = reports
            .iter()
            .filter(|r| matches!(r.outcome, LawOutcome::Skipped(_)))
            .map(|r| r.name)
            .collect();
        assert_eq!(skipped, vec!["alternating-equal-rows", "adjoint-identity"]);
    }

    #[test]
    fn non_square_input_is_rejected() {
        let a = Matrix::from_i64_rows(Ring::Integers, &[&[1, 2, 3], &[4, 5, 6]]).unwrap();
        assert!(matches!(
            determinant_laws(&a, 3, 11),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn outcome_rendering() {
        assert_eq!(LawOutcome::Passed.to_string(), "pass");
        assert_eq!(
            LawOutcome::Failed("x".into()).to_string(),
            "fail (x)"
        );
        assert_eq!(LawOutcome::Skipped("n".into()).to_string(), "skip (n)");
    }
}
