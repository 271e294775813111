//! Stable twisted cohomology of Aut(F_n) and Out(F_n).
//!
//! In the stable range H^q(Aut(F_n); H^{⊗q}) ⊗ sign is the permutation module
//! on set partitions of {1..q}, and for Out(F_n) on those without singleton
//! blocks. The multiplicity of S_λ(H) is therefore ⟨χ^{λ'}, perm⟩. An
//! independent route goes through plethysm: the Out dimension is ν^∞(λ') and
//! the Aut dimension is Σ_{μ ∈ ρ(λ)} ν^∞(μ'). Both are implemented and
//! [`build_table`] insists that they agree.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, RwLock};

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{to_count, ClassFunction};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, partition_count, Partition};
use crate::setpart::{perm_character, LabelAlphabet};
use crate::symfunc::{nu_infinity, MAX_STABLE_WEIGHT};

/// Largest |λ| for the character method.
pub const MAX_CHARACTER_WEIGHT: usize = 10;

/// Largest |λ| for the plethysm method and for [`build_table`].
pub const MAX_TABLE_WEIGHT: usize = MAX_STABLE_WEIGHT;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupFamily {
    AutF,
    OutF,
}

impl GroupFamily {
    fn alphabet(self) -> LabelAlphabet {
        match self {
            GroupFamily::AutF => LabelAlphabet::trivial(),
            GroupFamily::OutF => LabelAlphabet::singleton_free(),
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupFamily::AutF => "Aut(F_n)",
            GroupFamily::OutF => "Out(F_n)",
        })
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "aut" | "autf" | "aut(f_n)" => Ok(GroupFamily::AutF),
            "out" | "outf" | "out(f_n)" => Ok(GroupFamily::OutF),
            _ => Err(Error::Domain(format!("unknown group {s:?}, expected aut or out"))),
        }
    }
}

/// Coefficient systems built from H = H_1(F_n; ℚ).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientTag {
    SchurOfH(Partition),
    TensorOfH(usize),
    ExteriorOfH(usize),
    SymOfH(usize),
}

impl CoefficientTag {
    /// Polynomial degree q of the coefficient system.
    pub fn weight(&self) -> usize {
        match self {
            CoefficientTag::SchurOfH(lambda) => lambda.weight(),
            CoefficientTag::TensorOfH(q) | CoefficientTag::ExteriorOfH(q) | CoefficientTag::SymOfH(q) => *q,
        }
    }

    fn weight_symbol(&self) -> &'static str {
        match self {
            CoefficientTag::SchurOfH(_) => "|λ|",
            _ => "q",
        }
    }
}

impl fmt::Display for CoefficientTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientTag::SchurOfH(lambda) => write!(f, "S_{lambda}(H)"),
            CoefficientTag::TensorOfH(q) => write!(f, "H^⊗{q}"),
            CoefficientTag::ExteriorOfH(q) => write!(f, "Λ^{q}(H)"),
            CoefficientTag::SymOfH(q) => write!(f, "Sym^{q}(H)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    /// Cohomology vanishes off the diagonal degree i = q.
    VanishingOffDiagonal,
    /// The diagonal group H^q has the stable dimension computed here.
    DiagonalIdentified,
    /// The cohomology groups are independent of n.
    StabilityOfGroups,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Threshold {
    /// n ≥ multiplier·w + offset.
    Rank { multiplier: usize, offset: usize },
    /// 2i ≤ n − w − 3, optionally excluding i = w.
    Degree { skip_diagonal: bool },
}

/// The range of n (and cohomological degree i) in which a statement holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableRange {
    pub group: GroupFamily,
    pub coefficient: CoefficientTag,
    pub statement: Statement,
    pub threshold: Threshold,
}

impl StableRange {
    /// Whether the statement is asserted for rank n in degree `degree`.
    /// Rank thresholds ignore the degree.
    pub fn holds(&self, n: usize, degree: usize) -> bool {
        let w = self.coefficient.weight();
        match self.threshold {
            Threshold::Rank { multiplier, offset } => n >= multiplier * w + offset,
            Threshold::Degree { skip_diagonal } => !(skip_diagonal && degree == w) && 2 * degree + w + 3 <= n,
        }
    }

    /// Least n for which [`StableRange::holds`] is true in `degree`, if any.
    pub fn min_rank(&self, degree: usize) -> Option<usize> {
        let w = self.coefficient.weight();
        match self.threshold {
            Threshold::Rank { multiplier, offset } => Some(multiplier * w + offset),
            Threshold::Degree { skip_diagonal } if skip_diagonal && degree == w => None,
            Threshold::Degree { .. } => Some(2 * degree + w + 3),
        }
    }
}

impl fmt::Display for StableRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.coefficient.weight();
        let sym = self.coefficient.weight_symbol();
        match self.threshold {
            Threshold::Rank { multiplier, offset } => {
                write!(f, "n ≥ {multiplier}{sym} + {offset} (= {})", multiplier * w + offset)
            }
            Threshold::Degree { skip_diagonal } => {
                write!(f, "2i ≤ n − {sym} − 3 (= n − {})", w + 3)?;
                if skip_diagonal {
                    write!(f, ", i ≠ {w}")?;
                }
                Ok(())
            }
        }
    }
}

/// The stability threshold attached to `statement` for `coeff`.
pub fn stable_range(group: GroupFamily, coeff: &CoefficientTag, statement: Statement) -> Result<StableRange> {
    use CoefficientTag::*;
    let threshold = match (statement, coeff) {
        (_, SymOfH(q)) if *q < 2 => {
            return Err(Error::Domain("the Sym^q vanishing range needs q ≥ 2".into()));
        }
        // Sym^q(H) has vanishing cohomology in every degree of its range.
        (_, SymOfH(_)) => Threshold::Degree { skip_diagonal: false },
        (Statement::VanishingOffDiagonal, _) => Threshold::Degree { skip_diagonal: true },
        (Statement::DiagonalIdentified, _) => match group {
            GroupFamily::AutF => Threshold::Rank { multiplier: 2, offset: 3 },
            GroupFamily::OutF => Threshold::Rank { multiplier: 4, offset: 3 },
        },
        (Statement::StabilityOfGroups, _) => match group {
            GroupFamily::AutF => Threshold::Degree { skip_diagonal: false },
            GroupFamily::OutF => {
                return Err(Error::Domain(
                    "no stability range for the groups H^*(Out(F_n); -) themselves; use DiagonalIdentified".into(),
                ));
            }
        },
    };
    Ok(StableRange {
        group,
        coefficient: coeff.clone(),
        statement,
        threshold,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// ⟨χ^{λ'}, set-partition permutation character⟩.
    Characters,
    /// Sums of stable plethysm coefficients ν^∞.
    Plethysm,
}

type PermutationMemo = HashMap<(GroupFamily, usize), Arc<ClassFunction>>;

static PERMUTATION_MEMO: LazyLock<RwLock<PermutationMemo>> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// Character of the permutation module on set partitions of {1..q} (all of
/// them for Aut, singleton-free ones for Out). This is H^q ⊗ sign, not H^q.
pub fn permutation_character(group: GroupFamily, q: usize) -> Result<Arc<ClassFunction>> {
    if q > MAX_CHARACTER_WEIGHT {
        return Err(Error::limit("q", q, MAX_CHARACTER_WEIGHT));
    }
    if let Some(c) = PERMUTATION_MEMO.read().unwrap().get(&(group, q)) {
        return Ok(Arc::clone(c));
    }
    let series = perm_character(q, &group.alphabet(), 0)?;
    let values = series
        .into_iter()
        .map(|(mu, s)| (mu, BigRational::from_integer(s.get(0).into())))
        .collect();
    let character = Arc::new(ClassFunction::new(q, values)?);
    PERMUTATION_MEMO.write().unwrap().insert((group, q), Arc::clone(&character));
    Ok(character)
}

/// Σ_q-character of the stable H^q(G; H^{⊗q}): the sign twist of
/// [`permutation_character`].
pub fn tensor_character(group: GroupFamily, q: usize) -> Result<ClassFunction> {
    Ok(permutation_character(group, q)?.sign_twist())
}

/// Stable dimension of H^{|λ|}(G; S_λ(H)).
pub fn dim_schur(group: GroupFamily, lambda: &Partition, method: Method) -> Result<u64> {
    if lambda.is_empty() {
        return Ok(1);
    }
    match method {
        Method::Characters => {
            let perm = permutation_character(group, lambda.weight())?;
            let m = perm.multiplicity(&lambda.conjugate())?;
            to_count(&m, format!("multiplicity of {lambda} in H^q({group})"))
        }
        Method::Plethysm => {
            if lambda.weight() > MAX_TABLE_WEIGHT {
                return Err(Error::limit("|λ|", lambda.weight(), MAX_TABLE_WEIGHT));
            }
            match group {
                GroupFamily::OutF => Ok(nu_infinity(&lambda.conjugate())?.value),
                GroupFamily::AutF => lambda
                    .remove_boxes_rho()
                    .iter()
                    .map(|mu| Ok(nu_infinity(&mu.conjugate())?.value))
                    .sum(),
            }
        }
    }
}

/// [`dim_schur`] by both methods; fails if they differ.
pub fn dim_schur_checked(group: GroupFamily, lambda: &Partition) -> Result<u64> {
    let characters = dim_schur(group, lambda, Method::Characters)?;
    let plethysm = dim_schur(group, lambda, Method::Plethysm)?;
    if characters != plethysm {
        return Err(Error::MethodDisagreement {
            partition: lambda.clone(),
            characters,
            plethysm,
        });
    }
    Ok(characters)
}

/// Computes with every method available at this weight.
fn dim_schur_all_methods(group: GroupFamily, lambda: &Partition) -> Result<u64> {
    if lambda.weight() <= MAX_TABLE_WEIGHT {
        dim_schur_checked(group, lambda)
    } else {
        dim_schur(group, lambda, Method::Characters)
    }
}

/// Partitions of q with no part equal to 1.
fn partitions_without_ones(q: usize) -> u64 {
    match q {
        0 => 1,
        _ => partition_count(q) - partition_count(q - 1),
    }
}

/// Stable dimension of H^q(G; Λ^q H): the number of partitions of q, with no
/// part 1 for Out. Cross-checked against the Schur-functor computation.
pub fn dim_exterior(group: GroupFamily, q: usize) -> Result<u64> {
    if q == 0 {
        return Err(Error::Domain("exterior power degree must be positive".into()));
    }
    if q > MAX_CHARACTER_WEIGHT {
        return Err(Error::limit("q", q, MAX_CHARACTER_WEIGHT));
    }
    let expected = match group {
        GroupFamily::AutF => partition_count(q),
        GroupFamily::OutF => partitions_without_ones(q),
    };
    let computed = dim_schur_all_methods(group, &Partition::column(q))?;
    if computed != expected {
        return Err(Error::Inconsistency(format!(
            "dim H^{q}({group}; Λ^{q}H): partition count {expected}, Schur computation {computed}"
        )));
    }
    Ok(expected)
}

/// Stable dimension of H^q(G; Sym^q H) for q ≥ 2, computed rather than
/// assumed; anything other than 0 is reported as an inconsistency.
pub fn dim_symmetric(group: GroupFamily, q: usize) -> Result<u64> {
    if q < 2 {
        return Err(Error::Domain(format!(
            "dim_symmetric needs q ≥ 2 (q = 1 is H itself, with H^1({group}; H) of dimension {})",
            if group == GroupFamily::AutF { 1 } else { 0 }
        )));
    }
    if q > MAX_CHARACTER_WEIGHT {
        return Err(Error::limit("q", q, MAX_CHARACTER_WEIGHT));
    }
    let computed = dim_schur_all_methods(group, &Partition::row(q))?;
    if computed != 0 {
        return Err(Error::Inconsistency(format!(
            "H^{q}({group}; Sym^{q}H) should vanish, computed dimension {computed}"
        )));
    }
    Ok(computed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub partition: Partition,
    pub dimension: u64,
}

/// Stable dimensions for all partitions up to a weight, in ascending weight
/// and then [`enumerate_partitions`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionTable {
    pub group: GroupFamily,
    pub rows: Vec<TableRow>,
}

impl DimensionTable {
    pub fn get(&self, lambda: &Partition) -> Option<u64> {
        self.rows.iter().find(|r| &r.partition == lambda).map(|r| r.dimension)
    }

    /// Rows split by weight.
    pub fn by_weight(&self) -> Vec<(usize, &[TableRow])> {
        self.rows
            .chunk_by(|a, b| a.partition.weight() == b.partition.weight())
            .map(|chunk| (chunk[0].partition.weight(), chunk))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.rows).expect("table rows serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,partition,dimension\n");
        for row in &self.rows {
            out.push_str(&format!("{},\"{}\",{}\n", row.partition.weight(), row.partition, row.dimension));
        }
        out
    }

    /// One block per weight: partitions as column headers, dimensions below.
    pub fn to_text(&self) -> String {
        let mut out = format!("stable dim H^|λ|({}; S_λ(H))\n", self.group);
        for (weight, rows) in self.by_weight() {
            let headers: Vec<String> = rows.iter().map(|r| r.partition.exponent_notation()).collect();
            let widths: Vec<usize> = headers
                .iter()
                .zip(rows)
                .map(|(h, r)| h.chars().count().max(r.dimension.to_string().len()))
                .collect();
            out.push_str(&format!("\n|λ| = {weight}\n"));
            let head: Vec<String> = headers.iter().zip(&widths).map(|(h, w)| format!("{h:>w$}")).collect();
            let dims: Vec<String> = rows.iter().zip(&widths).map(|(r, w)| format!("{:>w$}", r.dimension)).collect();
            out.push_str(head.join("  ").trim_end());
            out.push('\n');
            out.push_str(dims.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// Both methods for every partition of weight ≤ `max_weight`.
pub fn build_table(group: GroupFamily, max_weight: usize) -> Result<DimensionTable> {
    if max_weight > MAX_TABLE_WEIGHT {
        return Err(Error::limit("max weight", max_weight, MAX_TABLE_WEIGHT));
    }
    let partitions: Vec<Partition> = (0..=max_weight).flat_map(enumerate_partitions).collect();
    let rows = partitions
        .into_par_iter()
        .map(|lambda| {
            let dimension = dim_schur_checked(group, &lambda)?;
            Ok(TableRow {
                partition: lambda,
                dimension,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DimensionTable { group, rows })
}

/// Σ_{λ ⊢ q} dim(S^λ)·dim_schur(G, λ), the total dimension of the stable
/// H^q(G; H^{⊗q}).
pub fn tensor_power_dimension(group: GroupFamily, q: usize, method: Method) -> Result<num_bigint::BigUint> {
    let mut total = num_bigint::BigUint::zero();
    for lambda in enumerate_partitions(q) {
        total += lambda.specht_dimension() * dim_schur(group, &lambda, method)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setpart::{bell_numbers, enumerate_set_partitions};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn tensor_character_examples() {
        let aut1 = tensor_character(GroupFamily::AutF, 1).unwrap();
        assert_eq!(aut1.dimension(), &BigRational::from_integer(1.into()));
        let aut2 = tensor_character(GroupFamily::AutF, 2).unwrap();
        assert_eq!(aut2.value(&p(&[1, 1])).unwrap(), &BigRational::from_integer(2.into()));
        assert_eq!(aut2.value(&p(&[2])).unwrap(), &BigRational::from_integer((-2).into()));
        let out2 = tensor_character(GroupFamily::OutF, 2).unwrap();
        assert_eq!(out2.value(&p(&[1, 1])).unwrap(), &BigRational::from_integer(1.into()));
        assert_eq!(out2.value(&p(&[2])).unwrap(), &BigRational::from_integer((-1).into()));
    }

    #[test]
    fn dim_examples() {
        for method in [Method::Characters, Method::Plethysm] {
            assert_eq!(dim_schur(GroupFamily::AutF, &p(&[1, 1]), method).unwrap(), 2);
            assert_eq!(dim_schur(GroupFamily::OutF, &p(&[2, 2, 1, 1]), method).unwrap(), 3);
            assert_eq!(dim_schur(GroupFamily::AutF, &p(&[3, 2]), method).unwrap(), 1);
            for g in [GroupFamily::AutF, GroupFamily::OutF] {
                assert_eq!(dim_schur(g, &Partition::empty(), method).unwrap(), 1);
            }
        }
        assert!(dim_schur(GroupFamily::AutF, &Partition::column(11), Method::Characters).is_err());
        assert!(dim_schur(GroupFamily::AutF, &Partition::column(10), Method::Plethysm).is_err());
    }

    #[test]
    fn methods_agree_and_traces_match_set_partition_counts() {
        for (q, bell) in bell_numbers(7).into_iter().enumerate() {
            for lambda in enumerate_partitions(q) {
                for g in [GroupFamily::AutF, GroupFamily::OutF] {
                    dim_schur_checked(g, &lambda).unwrap();
                }
            }
            let aut = tensor_power_dimension(GroupFamily::AutF, q, Method::Plethysm).unwrap();
            assert_eq!(aut, bell.into());
            let out = tensor_power_dimension(GroupFamily::OutF, q, Method::Plethysm).unwrap();
            let free = enumerate_set_partitions(q, true).unwrap().len() as u64;
            assert_eq!(out, free.into());
        }
    }

    #[test]
    fn aut_is_rho_sum_of_out() {
        for q in 0..=7 {
            for lambda in enumerate_partitions(q) {
                let aut = dim_schur(GroupFamily::AutF, &lambda, Method::Characters).unwrap();
                let out: u64 = lambda
                    .remove_boxes_rho()
                    .iter()
                    .map(|mu| dim_schur(GroupFamily::OutF, mu, Method::Characters).unwrap())
                    .sum();
                assert_eq!(aut, out, "{lambda}");
            }
        }
    }

    #[test]
    fn exterior_and_symmetric_powers() {
        assert_eq!(dim_exterior(GroupFamily::AutF, 6).unwrap(), 11);
        assert_eq!(dim_exterior(GroupFamily::OutF, 6).unwrap(), 4);
        assert_eq!(dim_exterior(GroupFamily::OutF, 1).unwrap(), 0);
        assert_eq!(dim_exterior(GroupFamily::AutF, 10).unwrap(), 42);
        assert!(dim_exterior(GroupFamily::AutF, 0).is_err());
        for q in 2..=10 {
            for g in [GroupFamily::AutF, GroupFamily::OutF] {
                assert_eq!(dim_symmetric(g, q).unwrap(), 0);
            }
        }
        assert!(matches!(dim_symmetric(GroupFamily::AutF, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn out_vanishing_pattern() {
        for q in 1..=8 {
            for lambda in enumerate_partitions(q) {
                let two_equal_rows = lambda.len() == 2 && lambda.part(0) == lambda.part(1);
                if 2 * lambda.first_row() > q || (2 * lambda.first_row() == q && !two_equal_rows) {
                    assert_eq!(dim_schur(GroupFamily::OutF, &lambda, Method::Characters).unwrap(), 0, "{lambda}");
                }
            }
        }
    }

    #[test]
    fn stable_ranges() {
        let aut = stable_range(GroupFamily::AutF, &CoefficientTag::TensorOfH(3), Statement::VanishingOffDiagonal).unwrap();
        assert!(aut.holds(8, 1));
        assert!(!aut.holds(7, 1));
        assert!(!aut.holds(100, 3));
        assert_eq!(aut.min_rank(3), None);
        let lam = CoefficientTag::SchurOfH(p(&[2, 1]));
        let out = stable_range(GroupFamily::OutF, &lam, Statement::DiagonalIdentified).unwrap();
        assert_eq!(out.min_rank(3), Some(15));
        assert_eq!(out.to_string(), "n ≥ 4|λ| + 3 (= 15)");
        let aut = stable_range(GroupFamily::AutF, &lam, Statement::DiagonalIdentified).unwrap();
        assert_eq!(aut.min_rank(3), Some(9));
        let sym = stable_range(GroupFamily::AutF, &CoefficientTag::SymOfH(2), Statement::VanishingOffDiagonal).unwrap();
        assert!(sym.holds(11, 3));
        assert!(!sym.holds(10, 3));
        assert!(stable_range(GroupFamily::AutF, &CoefficientTag::SymOfH(1), Statement::VanishingOffDiagonal).is_err());
        assert!(stable_range(GroupFamily::OutF, &lam, Statement::StabilityOfGroups).is_err());
    }

    #[test]
    fn table_layout_and_serialization() {
        let t = build_table(GroupFamily::AutF, 2).unwrap();
        let rows: Vec<(String, u64)> = t.rows.iter().map(|r| (r.partition.to_string(), r.dimension)).collect();
        assert_eq!(
            rows,
            vec![("[]".into(), 1), ("[1]".into(), 1), ("[1,1]".into(), 2), ("[2]".into(), 0)]
        );
        assert_eq!(
            t.to_json(),
            r#"[{"partition":"[]","dimension":1},{"partition":"[1]","dimension":1},{"partition":"[1,1]","dimension":2},{"partition":"[2]","dimension":0}]"#
        );
        assert_eq!(
            t.to_csv(),
            "weight,partition,dimension\n0,\"[]\",1\n1,\"[1]\",1\n2,\"[1,1]\",2\n2,\"[2]\",0\n"
        );
        let parsed: Vec<TableRow> = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(parsed, t.rows);
        assert!(t.to_text().contains("(1^2)  (2)\n    2    0\n"));
        assert_eq!(build_table(GroupFamily::OutF, 0).unwrap().rows.len(), 1);
        assert!(build_table(GroupFamily::OutF, 10).is_err());
    }
}
