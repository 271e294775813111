//! Generators of H^*(Γ; S_λ(H)) as a free module over the stable cohomology
//! ring of the mapping class group Γ, for a closed surface or a surface with
//! one boundary component.
//!
//! The generators are counted by labeled set partitions of {1..q}: singleton
//! blocks carry a label x_2, x_4, ... (also x_0 with a boundary), larger blocks
//! a label x_{-2}, x_0, x_2, .... A labeled partition sits in degree q plus the
//! sum of its label degrees, Σ_q permutes them, and the multiplicity for S_λ
//! is ⟨χ^{λ'}, that graded permutation character⟩.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::characters::{to_count, ClassFunction};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::setpart::{perm_character, GradedSeries, LabelAlphabet, LabelSet};

/// Largest |λ| accepted by [`generator_series`].
pub const MAX_MCG_WEIGHT: usize = 8;

/// Largest total degree accepted by [`generator_series`].
pub const MAX_MCG_DEGREE: i64 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceVariant {
    /// Γ_g.
    Closed,
    /// Γ_{g,1}.
    OneBoundary,
}

impl fmt::Display for SurfaceVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceVariant::Closed => "Γ_g",
            SurfaceVariant::OneBoundary => "Γ_{g,1}",
        })
    }
}

impl FromStr for SurfaceVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "closed" => Ok(SurfaceVariant::Closed),
            "boundary" | "one-boundary" | "oneboundary" => Ok(SurfaceVariant::OneBoundary),
            _ => Err(Error::Domain(format!("unknown surface variant {s:?}, expected closed or boundary"))),
        }
    }
}

/// Label degrees per block size.
pub fn mcg_alphabet(variant: SurfaceVariant) -> LabelAlphabet {
    let singletons = match variant {
        SurfaceVariant::Closed => LabelSet::EvenFrom(2),
        SurfaceVariant::OneBoundary => LabelSet::EvenFrom(0),
    };
    LabelAlphabet::new(vec![singletons], LabelSet::EvenFrom(-2))
}

/// Generator multiplicities of H^*(Γ; S_λ(H)) in each degree ≤ `max_degree`.
pub fn generator_series(variant: SurfaceVariant, lambda: &Partition, max_degree: i64) -> Result<GradedSeries> {
    let q = lambda.weight();
    if q > MAX_MCG_WEIGHT {
        return Err(Error::limit("q", q, MAX_MCG_WEIGHT));
    }
    if max_degree > MAX_MCG_DEGREE {
        return Err(Error::ResourceLimit {
            what: "max degree",
            value: max_degree,
            bound: MAX_MCG_DEGREE,
        });
    }
    if max_degree < 0 {
        return Err(Error::Domain(format!("max degree must be nonnegative, got {max_degree}")));
    }
    let shift = q as i64;
    let by_type = perm_character(q, &mcg_alphabet(variant), max_degree - shift)?;
    let label_degrees: BTreeSet<i64> = by_type
        .values()
        .flat_map(|s| s.coefficients().keys().copied())
        .collect();
    let conjugate = lambda.conjugate();
    let mut out = Vec::new();
    for e in label_degrees {
        let values = by_type
            .iter()
            .map(|(mu, s)| (mu.clone(), BigRational::from_integer(s.get(e).into())))
            .collect();
        let character = ClassFunction::new(q, values)?;
        let m = to_count(
            &character.multiplicity(&conjugate)?,
            format!("generators of H^*({variant}; S_{lambda}) in degree {}", e + shift),
        )?;
        if m > 0 && e + shift < 0 {
            return Err(Error::Inconsistency(format!(
                "{m} generator(s) of H^*({variant}; S_{lambda}) in negative degree {}",
                e + shift
            )));
        }
        out.push((e + shift, m));
    }
    Ok(GradedSeries::new(max_degree, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn listing(s: &GradedSeries) -> Vec<(i64, u64)> {
        s.iter().collect()
    }

    #[test]
    fn alphabets() {
        let closed = mcg_alphabet(SurfaceVariant::Closed);
        assert_eq!(closed.labels_for(1).series_up_to(6).into_iter().collect::<Vec<_>>(), vec![(2, 1), (4, 1), (6, 1)]);
        assert_eq!(closed.labels_for(3).min_degree(), Some(-2));
        let boundary = mcg_alphabet(SurfaceVariant::OneBoundary);
        assert_eq!(boundary.labels_for(1).min_degree(), Some(0));
        assert_eq!(boundary.labels_for(2).min_degree(), Some(-2));
    }

    #[test]
    fn worked_examples() {
        let closed1 = generator_series(SurfaceVariant::Closed, &p(&[1]), 10).unwrap();
        assert_eq!(listing(&closed1), vec![(3, 1), (5, 1), (7, 1), (9, 1)]);
        let boundary1 = generator_series(SurfaceVariant::OneBoundary, &p(&[1]), 10).unwrap();
        assert_eq!(listing(&boundary1), vec![(1, 1), (3, 1), (5, 1), (7, 1), (9, 1)]);
        let exterior2 = generator_series(SurfaceVariant::Closed, &p(&[1, 1]), 10).unwrap();
        assert_eq!(listing(&exterior2), vec![(0, 1), (2, 1), (4, 1), (6, 2), (8, 2), (10, 3)]);
        let sym2 = generator_series(SurfaceVariant::Closed, &p(&[2]), 16).unwrap();
        assert_eq!(listing(&sym2), vec![(8, 1), (10, 1), (12, 2), (14, 2), (16, 3)]);
    }

    // The union of arithmetic progressions {a, a+2, ...} listed as generator
    // degree sets, counted degree by degree.
    fn progressions(starts: impl IntoIterator<Item = i64>, max: i64) -> Vec<(i64, u64)> {
        let starts: Vec<i64> = starts.into_iter().collect();
        (0..=max)
            .filter_map(|d| {
                let c = starts.iter().filter(|&&a| a <= d && (d - a) % 2 == 0).count() as u64;
                (c > 0).then_some((d, c))
            })
            .collect()
    }

    #[test]
    fn listed_degree_sets_for_weight_two() {
        // {0,2,..}, {6,8,..}, {10,12,..}, {14,..}, ... and {8,..}, {12,..}, {16,..}, ...
        let exterior = progressions([0].into_iter().chain((1..=10).map(|i| 4 * i + 2)), 40);
        let sym = progressions((0..=10).map(|i| 4 * i + 8), 40);
        let e = generator_series(SurfaceVariant::Closed, &p(&[1, 1]), 40).unwrap();
        let s = generator_series(SurfaceVariant::Closed, &p(&[2]), 40).unwrap();
        assert_eq!(listing(&e), exterior);
        assert_eq!(listing(&s), sym);
    }

    #[test]
    fn parity_and_dominance() {
        let closed = generator_series(SurfaceVariant::Closed, &p(&[1]), 20).unwrap();
        let boundary = generator_series(SurfaceVariant::OneBoundary, &p(&[1]), 20).unwrap();
        assert!(closed.iter().all(|(d, _)| d % 2 == 1));
        for d in 0..=20 {
            assert!(boundary.get(d) >= closed.get(d));
        }
        let two = generator_series(SurfaceVariant::Closed, &p(&[1, 1]), 20).unwrap();
        assert!(two.iter().all(|(d, _)| d % 2 == 0));
    }

    // Brute force for q ≤ 3: list labeled set partitions explicitly, take
    // Σ_q-orbits, and count orbits whose stabilizer acts trivially (for the
    // trivial representation) or by a nontrivial-free sign (for the sign).
    #[test]
    fn extreme_shapes_match_orbit_counts() {
        use crate::setpart::enumerate_set_partitions;
        use std::collections::BTreeMap;

        fn permutations(q: usize) -> Vec<Vec<usize>> {
            if q == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for perm in permutations(q - 1) {
                for pos in 0..=perm.len() {
                    let mut p = perm.clone();
                    p.insert(pos, q - 1);
                    out.push(p);
                }
            }
            out
        }
        fn sign(perm: &[usize]) -> i64 {
            let mut inv = 0;
            for i in 0..perm.len() {
                for j in i + 1..perm.len() {
                    if perm[i] > perm[j] {
                        inv += 1;
                    }
                }
            }
            if inv % 2 == 0 { 1 } else { -1 }
        }
        type Datum = BTreeSet<(BTreeSet<usize>, i64)>;

        for variant in [SurfaceVariant::Closed, SurfaceVariant::OneBoundary] {
            let alphabet = mcg_alphabet(variant);
            for q in 1..=3usize {
                let max = 14i64;
                let cap = max - q as i64;
                let mut data: Vec<Datum> = Vec::new();
                for sp in enumerate_set_partitions(q, false).unwrap() {
                    let blocks: Vec<BTreeSet<usize>> =
                        sp.blocks().into_iter().map(|b| b.into_iter().map(|x| x - 1).collect()).collect();
                    let options: Vec<Vec<i64>> = blocks
                        .iter()
                        .map(|b| alphabet.labels_for(b.len()).series_up_to(cap + 2 * q as i64).into_keys().collect())
                        .collect();
                    let mut idx = vec![0usize; blocks.len()];
                    'outer: loop {
                        let total: i64 = idx.iter().zip(&options).map(|(&i, o)| o[i]).sum();
                        if total <= cap {
                            data.push(blocks.iter().cloned().zip(idx.iter().zip(&options).map(|(&i, o)| o[i])).collect());
                        }
                        for k in 0..idx.len() {
                            idx[k] += 1;
                            if idx[k] < options[k].len() {
                                continue 'outer;
                            }
                            idx[k] = 0;
                        }
                        break;
                    }
                }
                let perms = permutations(q);
                let act = |perm: &[usize], d: &Datum| -> Datum {
                    d.iter().map(|(b, l)| (b.iter().map(|&x| perm[x]).collect(), *l)).collect()
                };
                let mut trivial: BTreeMap<i64, u64> = BTreeMap::new();
                let mut signed: BTreeMap<i64, u64> = BTreeMap::new();
                let mut seen: BTreeSet<Datum> = BTreeSet::new();
                for d in &data {
                    if seen.contains(d) {
                        continue;
                    }
                    let orbit: BTreeSet<Datum> = perms.iter().map(|p| act(p, d)).collect();
                    seen.extend(orbit);
                    let degree = q as i64 + d.iter().map(|(_, l)| l).sum::<i64>();
                    *trivial.entry(degree).or_default() += 1;
                    let sign_ok = perms.iter().filter(|p| act(p, d) == *d).all(|p| sign(p) == 1);
                    if sign_ok {
                        *signed.entry(degree).or_default() += 1;
                    }
                }
                let column = generator_series(variant, &Partition::column(q), max).unwrap();
                let row = generator_series(variant, &Partition::row(q), max).unwrap();
                assert_eq!(column.coefficients(), &trivial, "{variant} q={q} trivial");
                assert_eq!(row.coefficients(), &signed, "{variant} q={q} sign");
            }
        }
    }

    #[test]
    fn all_small_shapes_are_well_formed() {
        for q in 0..=5 {
            for lambda in enumerate_partitions(q) {
                for variant in [SurfaceVariant::Closed, SurfaceVariant::OneBoundary] {
                    let s = generator_series(variant, &lambda, 24).unwrap();
                    assert!(s.iter().all(|(d, _)| (0..=24).contains(&d)));
                }
            }
        }
        let empty = generator_series(SurfaceVariant::Closed, &Partition::empty(), 10).unwrap();
        assert_eq!(listing(&empty), vec![(0, 1)]);
    }

    #[test]
    fn bounds() {
        assert!(generator_series(SurfaceVariant::Closed, &Partition::column(9), 10).is_err());
        assert!(generator_series(SurfaceVariant::Closed, &p(&[1]), 41).is_err());
        assert!(generator_series(SurfaceVariant::Closed, &p(&[1]), -1).is_err());
    }
}
