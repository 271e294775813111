//! The acceptance checks, runnable from tests and from `stabletwist selftest`.
//!
//! Each check recomputes its quantities from scratch (memos aside) and
//! compares them exactly with frozen reference values.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::characters::irreducible_character;
use crate::error::Result;
use crate::mcg::{generator_series, SurfaceVariant};
use crate::partition::{enumerate_partitions, partition_count, Partition};
use crate::setpart::{bell_numbers, enumerate_set_partitions, GradedSeries};
use crate::stablecohom::{
    build_table, dim_exterior, dim_schur, dim_symmetric, tensor_power_dimension, DimensionTable, GroupFamily, Method,
};
use crate::symfunc::{nu, nu_infinity, stable_witness, MAX_PLETHYSM_DEGREE};

/// Reference dimensions of H^{|λ|}(Aut(F_n); S_λ(H)), weights 0..=6, each
/// weight in [`enumerate_partitions`] order.
pub const AUT_TABLE: [&[u64]; 7] = [
    &[1],
    &[1],
    &[2, 0],
    &[3, 1, 0],
    &[5, 2, 2, 0, 0],
    &[7, 5, 4, 0, 1, 0, 0],
    &[11, 8, 10, 2, 1, 2, 2, 0, 0, 0, 0],
];

/// Reference dimensions of H^{|λ|}(Out(F_n); S_λ(H)), same layout.
pub const OUT_TABLE: [&[u64]; 7] = [
    &[1],
    &[0],
    &[1, 0],
    &[1, 0, 0],
    &[2, 0, 1, 0, 0],
    &[2, 1, 1, 0, 0, 0, 0],
    &[4, 1, 3, 0, 0, 0, 1, 0, 0, 0, 0],
];

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

/// Outcome of a check body: `Ok(detail)` on success, `Err(detail)` on a
/// mismatch. Library errors are folded into failures.
type Outcome = std::result::Result<String, String>;

fn run(id: u8, title: &'static str, body: impl FnOnce() -> Result<Outcome>) -> CriterionReport {
    let start = Instant::now();
    let (passed, detail) = match body() {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionReport {
        id,
        title,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

fn compare_table(table: &DimensionTable, reference: &[&[u64]; 7]) -> Outcome {
    let mut mismatches = Vec::new();
    let mut count = 0;
    for (w, expected) in reference.iter().enumerate() {
        for (lambda, &want) in enumerate_partitions(w).iter().zip(expected.iter()) {
            count += 1;
            match table.get(lambda) {
                Some(got) if got == want => {}
                got => mismatches.push(format!("{lambda}: expected {want}, got {got:?}")),
            }
        }
    }
    if mismatches.is_empty() {
        Ok(format!("{count} entries match"))
    } else {
        Err(mismatches.join("; "))
    }
}

pub fn appendix_table_aut() -> CriterionReport {
    run(1, "Aut(F_n) dimension table, |λ| ≤ 6", || {
        let table = build_table(GroupFamily::AutF, 6)?;
        Ok(compare_table(&table, &AUT_TABLE))
    })
}

pub fn appendix_table_out() -> CriterionReport {
    run(2, "Out(F_n) dimension table, |λ| ≤ 6", || {
        let table = build_table(GroupFamily::OutF, 6)?;
        Ok(compare_table(&table, &OUT_TABLE))
    })
}

pub fn dual_oracle() -> CriterionReport {
    run(3, "character and plethysm methods agree, |λ| ≤ 6", || {
        let mut mismatches = Vec::new();
        let mut count = 0;
        for group in [GroupFamily::AutF, GroupFamily::OutF] {
            for w in 0..=6 {
                for lambda in enumerate_partitions(w) {
                    count += 1;
                    let c = dim_schur(group, &lambda, Method::Characters)?;
                    let p = dim_schur(group, &lambda, Method::Plethysm)?;
                    if c != p {
                        mismatches.push(format!("{group} {lambda}: {c} vs {p}"));
                    }
                }
            }
        }
        Ok(if mismatches.is_empty() {
            Ok(format!("{count} (group, λ) pairs, 0 mismatches"))
        } else {
            Err(mismatches.join("; "))
        })
    })
}

pub fn rho_consistency() -> CriterionReport {
    run(4, "Aut dimension is the ρ(λ)-sum of Out dimensions", || {
        let aut = build_table(GroupFamily::AutF, 6)?;
        let out = build_table(GroupFamily::OutF, 6)?;
        let mut mismatches = Vec::new();
        for row in &aut.rows {
            let sum: u64 = row
                .partition
                .remove_boxes_rho()
                .iter()
                .map(|mu| out.get(mu).unwrap_or(0))
                .sum();
            if sum != row.dimension {
                mismatches.push(format!("{}: Aut {} vs Σ Out {}", row.partition, row.dimension, sum));
            }
        }
        // Worked instances.
        let p = |s: &str| s.parse::<Partition>().expect("literal partition");
        let checks = [
            (aut.get(&p("[2,2]")), Some(2)),
            (
                Some(["[2,2]", "[2,1]", "[1,1]"].iter().map(|s| out.get(&p(s)).unwrap_or(99)).sum()),
                Some(2),
            ),
            (aut.get(&p("[1,1,1,1]")), Some(5)),
            (
                Some(
                    ["[1,1,1,1]", "[1,1,1]", "[1,1]", "[1]", "[]"]
                        .iter()
                        .map(|s| out.get(&p(s)).unwrap_or(99))
                        .sum(),
                ),
                Some(5),
            ),
        ];
        for (i, (got, want)) in checks.iter().enumerate() {
            if got != want {
                mismatches.push(format!("worked instance {i}: {got:?} vs {want:?}"));
            }
        }
        Ok(if mismatches.is_empty() {
            Ok(format!("{} partitions and 2 worked instances", aut.rows.len()))
        } else {
            Err(mismatches.join("; "))
        })
    })
}

pub fn trace_identities() -> CriterionReport {
    run(5, "trace identities (Bell and singleton-free counts)", || {
        const BELL: [u64; 6] = [1, 2, 5, 15, 52, 203];
        const SINGLETON_FREE: [u64; 6] = [0, 1, 1, 4, 11, 41];
        let bell = bell_numbers(6);
        let mut mismatches = Vec::new();
        for q in 1..=6 {
            let free = enumerate_set_partitions(q, true)?.len() as u64;
            if bell[q] != BELL[q - 1] || free != SINGLETON_FREE[q - 1] {
                mismatches.push(format!("q={q}: reference counts disagree with enumeration"));
            }
            for method in [Method::Characters, Method::Plethysm] {
                let aut = tensor_power_dimension(GroupFamily::AutF, q, method)?;
                let out = tensor_power_dimension(GroupFamily::OutF, q, method)?;
                if aut != BigUint::from(BELL[q - 1]) {
                    mismatches.push(format!("Aut q={q} {method:?}: {aut}"));
                }
                if out != BigUint::from(SINGLETON_FREE[q - 1]) {
                    mismatches.push(format!("Out q={q} {method:?}: {out}"));
                }
            }
        }
        Ok(if mismatches.is_empty() {
            Ok("q = 1..6, both groups, both methods".into())
        } else {
            Err(mismatches.join("; "))
        })
    })
}

pub fn exterior_and_symmetric() -> CriterionReport {
    run(6, "exterior and symmetric power dimensions, q ≤ 8", || {
        let mut mismatches = Vec::new();
        for q in 1..=8 {
            let p = partition_count(q);
            let p_prev = partition_count(q - 1);
            let aut = dim_exterior(GroupFamily::AutF, q)?;
            let out = dim_exterior(GroupFamily::OutF, q)?;
            if aut != p {
                mismatches.push(format!("Λ^{q} Aut: {aut} ≠ p({q}) = {p}"));
            }
            if out != p - p_prev {
                mismatches.push(format!("Λ^{q} Out: {out} ≠ {}", p - p_prev));
            }
            if q >= 2 {
                for group in [GroupFamily::AutF, GroupFamily::OutF] {
                    let s = dim_symmetric(group, q)?;
                    if s != 0 {
                        mismatches.push(format!("Sym^{q} {group}: {s}"));
                    }
                }
            }
        }
        Ok(if mismatches.is_empty() {
            Ok("Λ^q for q = 1..8, Sym^q for q = 2..8".into())
        } else {
            Err(mismatches.join("; "))
        })
    })
}

pub fn plethysm_stabilization() -> CriterionReport {
    run(7, "ν^{k,l} monotone and stable; vanishing of ν^∞", || {
        let mut problems = Vec::new();
        let mut points = 0;
        for w in 0..=5 {
            for mu in enumerate_partitions(w) {
                let stable = nu_infinity(&mu)?.value;
                let (wk, wl) = stable_witness(&mu);
                let defined = |k: usize, l: usize| k * l <= MAX_PLETHYSM_DEGREE && 2 * w <= k * l;
                for k in 1..=MAX_PLETHYSM_DEGREE {
                    for l in 1..=MAX_PLETHYSM_DEGREE {
                        if !defined(k, l) {
                            continue;
                        }
                        points += 1;
                        let v = nu(k, l, &mu)?;
                        if defined(k + 1, l) && v > nu(k + 1, l, &mu)? {
                            problems.push(format!("{mu}: decreases from ({k},{l}) to ({},{l})", k + 1));
                        }
                        if defined(k, l + 1) && v > nu(k, l + 1, &mu)? {
                            problems.push(format!("{mu}: decreases from ({k},{l}) to ({k},{})", l + 1));
                        }
                        if k >= wk && l >= wl && v != stable {
                            problems.push(format!("{mu}: ν^{{{k},{l}}} = {v} but ν^∞ = {stable}"));
                        }
                    }
                }
            }
        }
        for w in 1..=6 {
            for lambda in enumerate_partitions(w) {
                if 2 * lambda.first_row() > w {
                    let v = nu_infinity(&lambda.conjugate())?.value;
                    if v != 0 {
                        problems.push(format!("ν^∞({}) = {v}, expected 0", lambda.conjugate()));
                    }
                }
            }
        }
        Ok(if problems.is_empty() {
            Ok(format!("{points} grid points with kl ≤ {MAX_PLETHYSM_DEGREE}"))
        } else {
            Err(problems.join("; "))
        })
    })
}

pub fn character_theory() -> CriterionReport {
    run(8, "orthonormality, Σ dim² = q!, sign twist", || {
        let mut problems = Vec::new();
        for q in 0..=8 {
            let shapes = enumerate_partitions(q);
            let chars = shapes.iter().map(irreducible_character).collect::<Result<Vec<_>>>()?;
            let mut sum_sq = BigRational::zero();
            for (i, a) in chars.iter().enumerate() {
                sum_sq += a.dimension() * a.dimension();
                for (j, b) in chars.iter().enumerate() {
                    let ip = a.inner_product(b)?;
                    let want = if i == j { BigRational::one() } else { BigRational::zero() };
                    if ip != want {
                        problems.push(format!("⟨χ^{}, χ^{}⟩ = {ip}", shapes[i], shapes[j]));
                    }
                }
                if a.sign_twist() != irreducible_character(&shapes[i].conjugate())? {
                    problems.push(format!("sign twist of χ^{}", shapes[i]));
                }
            }
            let factorial: BigUint = (1..=q as u64).product();
            if sum_sq != BigRational::from_integer(factorial.into()) {
                problems.push(format!("q={q}: Σ dim² = {sum_sq}"));
            }
        }
        Ok(if problems.is_empty() {
            Ok("q = 0..8".into())
        } else {
            Err(problems.join("; "))
        })
    })
}

/// Counts, degree by degree, a union of progressions {a, a+2, a+4, ...}.
fn progressions(starts: &[i64], max: i64) -> Vec<(i64, u64)> {
    (0..=max)
        .filter_map(|d| {
            let c = starts.iter().filter(|&&a| a <= d && (d - a) % 2 == 0).count() as u64;
            (c > 0).then_some((d, c))
        })
        .collect()
}

pub fn mapping_class_examples() -> CriterionReport {
    run(9, "mapping class group generator degrees", || {
        let max = 20;
        let series = |v, s: &str| -> Result<GradedSeries> {
            generator_series(v, &s.parse::<Partition>()?, max)
        };
        let listing = |s: &GradedSeries| s.iter().collect::<Vec<_>>();
        let cases = [
            ("Γ_g, (1)", listing(&series(SurfaceVariant::Closed, "[1]")?), progressions(&[3], max)),
            ("Γ_g,1, (1)", listing(&series(SurfaceVariant::OneBoundary, "[1]")?), progressions(&[1], max)),
            (
                "Γ_g, (1^2)",
                listing(&series(SurfaceVariant::Closed, "[1,1]")?),
                progressions(&[0, 6, 10, 14, 18], max),
            ),
            (
                "Γ_g, (2)",
                listing(&series(SurfaceVariant::Closed, "[2]")?),
                progressions(&[8, 12, 16, 20], max),
            ),
        ];
        let mut problems = Vec::new();
        for (name, got, want) in &cases {
            if got != want {
                problems.push(format!("{name}: got {got:?}, expected {want:?}"));
            }
        }
        let head: Vec<u64> = (0..=10).step_by(2).map(|d| cases[2].1.iter().find(|x| x.0 == d).map_or(0, |x| x.1)).collect();
        if head != [1, 1, 1, 2, 2, 3] {
            problems.push(format!("Γ_g (1^2) degrees 0..10: {head:?}"));
        }
        Ok(if problems.is_empty() {
            Ok(format!("four series through degree {max}"))
        } else {
            Err(problems.join("; "))
        })
    })
}

/// Criterion 10 is a scope statement: the unstable, integral group
/// cohomology is not computed here, and criteria 1-9 stand in for it.
pub fn scope_substitute(previous: &[CriterionReport]) -> CriterionReport {
    run(10, "large-n group cohomology out of scope; substitutes 1-9", || {
        let failed: Vec<u8> = previous.iter().filter(|r| !r.passed).map(|r| r.id).collect();
        Ok(if previous.len() == 9 && failed.is_empty() {
            Ok("not computed by design; all nine substitute checks pass".into())
        } else {
            Err(format!("substitute checks failing: {failed:?}"))
        })
    })
}

/// Runs all ten checks in order.
pub fn run_all() -> Vec<CriterionReport> {
    let mut reports = vec![
        appendix_table_aut(),
        appendix_table_out(),
        dual_oracle(),
        rho_consistency(),
        trace_identities(),
        exterior_and_symmetric(),
        plethysm_stabilization(),
        character_theory(),
        mapping_class_examples(),
    ];
    let last = scope_substitute(&reports);
    reports.push(last);
    reports
}
