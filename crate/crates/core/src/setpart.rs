//! Set partitions of {1, ..., q} and graded permutation characters of Σ_q
//! acting on set partitions whose blocks carry graded labels.
//!
//! A permutation σ fixes a labeled set partition exactly when it permutes
//! the blocks and every block orbit carries a single label. The graded fixed
//! count is therefore a sum over σ-stable set partitions of a product, over
//! block orbits, of the label generating function for that orbit's block
//! size with `t` replaced by `t^m`, where `m` is the number of blocks in the
//! orbit (each of them carries the shared label).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Largest set size handled by exhaustive enumeration (Bell(12) = 4,213,597).
pub const MAX_SET_SIZE: usize = 12;

/// A set partition stored as its restricted-growth string: entry `i` is the
/// block index of element `i + 1`, blocks numbered by first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    rgs: Vec<u8>,
}

impl SetPartition {
    pub fn from_rgs(rgs: Vec<u8>) -> Result<Self> {
        let mut next = 0u8;
        for &b in &rgs {
            if b > next {
                return Err(Error::Domain(format!("{rgs:?} is not a restricted-growth string")));
            }
            if b == next {
                next += 1;
            }
        }
        Ok(SetPartition { rgs })
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    /// Size of the underlying set.
    pub fn size(&self) -> usize {
        self.rgs.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks as sorted lists of 1-based elements, in order of first element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b as usize].push(i + 1);
        }
        blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_blocks()];
        for &b in &self.rgs {
            sizes[b as usize] += 1;
        }
        sizes
    }

    pub fn has_singleton(&self) -> bool {
        self.block_sizes().contains(&1)
    }

    /// If `perm` (0-based images) maps blocks onto blocks, returns
    /// `(block size, orbit length)` for each orbit of blocks under the
    /// induced permutation.
    pub fn stable_block_orbits(&self, perm: &[usize]) -> Option<Vec<(usize, usize)>> {
        let nb = self.num_blocks();
        let mut image = vec![u8::MAX; nb];
        for (i, &b) in self.rgs.iter().enumerate() {
            let target = self.rgs[perm[i]];
            let slot = &mut image[b as usize];
            if *slot == u8::MAX {
                *slot = target;
            } else if *slot != target {
                return None;
            }
        }
        let sizes = self.block_sizes();
        let mut seen = vec![false; nb];
        let mut orbits = Vec::new();
        for start in 0..nb {
            if seen[start] {
                continue;
            }
            let mut b = start;
            let mut len = 0;
            while !seen[b] {
                seen[b] = true;
                b = image[b] as usize;
                len += 1;
            }
            orbits.push((sizes[start], len));
        }
        orbits.sort_unstable();
        Some(orbits)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, block) in self.blocks().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

fn check_size(q: usize) -> Result<()> {
    if q > MAX_SET_SIZE {
        return Err(Error::limit("q", q, MAX_SET_SIZE));
    }
    Ok(())
}

/// All set partitions of {1..q} in lexicographic restricted-growth order,
/// optionally dropping those with a singleton block. The empty set has the
/// single empty partition.
pub fn enumerate_set_partitions(q: usize, forbid_singletons: bool) -> Result<Vec<SetPartition>> {
    check_size(q)?;
    let mut out = Vec::new();
    let mut rgs = Vec::with_capacity(q);
    rgs_rec(q, 0, &mut rgs, &mut out);
    if forbid_singletons {
        out.retain(|p| !p.has_singleton());
    }
    Ok(out)
}

fn rgs_rec(q: usize, blocks: u8, rgs: &mut Vec<u8>, out: &mut Vec<SetPartition>) {
    if rgs.len() == q {
        out.push(SetPartition { rgs: rgs.clone() });
        return;
    }
    for b in 0..=blocks {
        rgs.push(b);
        rgs_rec(q, blocks.max(b + 1), rgs, out);
        rgs.pop();
    }
}

/// Graded label multiset for blocks of one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelSet {
    /// Finitely many labels: `(degree, count)` pairs.
    Finite(Vec<(i64, u64)>),
    /// One label in each degree `first, first + 2, first + 4, ...`.
    EvenFrom(i64),
}

impl LabelSet {
    pub fn finite(entries: Vec<(i64, u64)>) -> Result<Self> {
        if let Some((d, _)) = entries.iter().find(|(d, _)| d % 2 != 0) {
            return Err(Error::Domain(format!("label degree {d} is odd")));
        }
        Ok(LabelSet::Finite(entries))
    }

    pub fn even_from(first: i64) -> Result<Self> {
        if first % 2 != 0 {
            return Err(Error::Domain(format!("label degree {first} is odd")));
        }
        Ok(LabelSet::EvenFrom(first))
    }

    pub fn none() -> Self {
        LabelSet::Finite(Vec::new())
    }

    /// A single label in degree 0.
    pub fn point() -> Self {
        LabelSet::Finite(vec![(0, 1)])
    }

    pub fn min_degree(&self) -> Option<i64> {
        match self {
            LabelSet::Finite(e) => e.iter().filter(|(_, c)| *c > 0).map(|(d, _)| *d).min(),
            LabelSet::EvenFrom(first) => Some(*first),
        }
    }

    /// Generating function of the labels, truncated above `cap`.
    pub fn series_up_to(&self, cap: i64) -> Poly {
        let mut out = Poly::new();
        match self {
            LabelSet::Finite(entries) => {
                for &(d, c) in entries {
                    if d <= cap && c > 0 {
                        *out.entry(d).or_default() += c;
                    }
                }
            }
            LabelSet::EvenFrom(first) => {
                let mut d = *first;
                while d <= cap {
                    out.insert(d, 1);
                    d += 2;
                }
            }
        }
        out
    }
}

/// Assigns a [`LabelSet`] to each block size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelAlphabet {
    /// `by_size[i]` labels blocks of size `i + 1`.
    by_size: Vec<LabelSet>,
    otherwise: LabelSet,
}

impl LabelAlphabet {
    pub fn new(by_size: Vec<LabelSet>, otherwise: LabelSet) -> Self {
        LabelAlphabet { by_size, otherwise }
    }

    /// One degree-0 label for every block: plain set partitions.
    pub fn trivial() -> Self {
        Self::new(Vec::new(), LabelSet::point())
    }

    /// Like [`trivial`](Self::trivial) but with no labels for singletons, so
    /// only singleton-free set partitions survive.
    pub fn singleton_free() -> Self {
        Self::new(vec![LabelSet::none()], LabelSet::point())
    }

    pub fn labels_for(&self, block_size: usize) -> &LabelSet {
        self.by_size.get(block_size.wrapping_sub(1)).unwrap_or(&self.otherwise)
    }

    fn min_degree(&self, q: usize) -> i64 {
        (1..=q.max(1))
            .filter_map(|s| self.labels_for(s).min_degree())
            .min()
            .unwrap_or(0)
            .min(0)
    }
}

/// Sparse integer Laurent polynomial, degree → coefficient.
pub type Poly = BTreeMap<i64, u64>;

fn poly_mul(a: &Poly, b: &Poly, cap: i64) -> Poly {
    let mut out = Poly::new();
    for (&da, &ca) in a {
        for (&db, &cb) in b {
            if da + db > cap {
                break;
            }
            *out.entry(da + db).or_default() += ca * cb;
        }
    }
    out
}

/// Nonnegative multiplicities indexed by degree, truncated at `max_degree`.
/// Serializes as a JSON object `{"degree": count}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedSeries {
    max_degree: i64,
    coefficients: BTreeMap<i64, u64>,
}

impl GradedSeries {
    /// Drops zero coefficients and anything above `max_degree`.
    pub fn new(max_degree: i64, coefficients: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (d, c) in coefficients {
            if d <= max_degree && c > 0 {
                *map.entry(d).or_default() += c;
            }
        }
        GradedSeries {
            max_degree,
            coefficients: map,
        }
    }

    pub fn max_degree(&self) -> i64 {
        self.max_degree
    }

    pub fn get(&self, degree: i64) -> u64 {
        self.coefficients.get(&degree).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &BTreeMap<i64, u64> {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.coefficients.iter().map(|(&d, &c)| (d, c))
    }
}

impl Serialize for GradedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coefficients.serialize(serializer)
    }
}

/// The permutation with cycle type μ whose cycles are consecutive runs of
/// 0..q, longest cycle first.
pub fn canonical_permutation(cycle_type: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(cycle_type.weight());
    let mut start = 0;
    for &len in cycle_type.parts() {
        for i in 0..len {
            perm.push(start + (i + 1) % len);
        }
        start += len;
    }
    perm
}

/// Tally of fixed set partitions by their sorted block-orbit shapes.
fn orbit_signatures(perm: &[usize], partitions: &[SetPartition]) -> HashMap<Vec<(usize, usize)>, u64> {
    let mut tally = HashMap::new();
    for p in partitions {
        if let Some(orbits) = p.stable_block_orbits(perm) {
            *tally.entry(orbits).or_default() += 1;
        }
    }
    tally
}

fn series_from_signatures(
    tally: &HashMap<Vec<(usize, usize)>, u64>,
    alphabet: &LabelAlphabet,
    q: usize,
    max_degree: i64,
) -> GradedSeries {
    // Every label has degree at least `floor`, so no partial product that
    // can still reach `max_degree` exceeds this cap.
    let floor = alphabet.min_degree(q);
    let cap = max_degree - floor * q as i64;
    let mut label_cache: HashMap<(usize, usize), Poly> = HashMap::new();
    let mut total = Poly::new();
    for (orbits, &count) in tally {
        let mut acc = Poly::from([(0, 1)]);
        for &(size, len) in orbits {
            let factor = label_cache.entry((size, len)).or_insert_with(|| {
                let m = len as i64;
                alphabet
                    .labels_for(size)
                    .series_up_to(cap.div_euclid(m))
                    .into_iter()
                    .map(|(d, c)| (d * m, c))
                    .collect()
            });
            acc = poly_mul(&acc, factor, cap);
            if acc.is_empty() {
                break;
            }
        }
        for (d, c) in acc {
            *total.entry(d).or_default() += c * count;
        }
    }
    GradedSeries::new(max_degree, total)
}

/// Graded number of labeled set partitions of {1..q} fixed by the canonical
/// permutation of the given cycle type. Degrees are sums of label degrees.
pub fn fixed_count_series(cycle_type: &Partition, alphabet: &LabelAlphabet, max_degree: i64) -> Result<GradedSeries> {
    let q = cycle_type.weight();
    let partitions = enumerate_set_partitions(q, false)?;
    let perm = canonical_permutation(cycle_type);
    let tally = orbit_signatures(&perm, &partitions);
    Ok(series_from_signatures(&tally, alphabet, q, max_degree))
}

/// [`fixed_count_series`] for every cycle type of q: the graded permutation
/// character of the labeled set partitions.
pub fn perm_character(q: usize, alphabet: &LabelAlphabet, max_degree: i64) -> Result<BTreeMap<Partition, GradedSeries>> {
    let partitions = enumerate_set_partitions(q, false)?;
    Ok(enumerate_partitions(q)
        .into_par_iter()
        .map(|mu| {
            let tally = orbit_signatures(&canonical_permutation(&mu), &partitions);
            let series = series_from_signatures(&tally, alphabet, q, max_degree);
            (mu, series)
        })
        .collect())
}

/// Bell numbers B(0..=n) from the Bell triangle.
pub fn bell_numbers(n: usize) -> Vec<u64> {
    let mut out = vec![1u64];
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let prev = *next.last().unwrap();
            next.push(prev + x);
        }
        out.push(next[0]);
        row = next;
    }
    out.truncate(n + 1);
    out
}
