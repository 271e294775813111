//! Integer partitions and the Young-diagram operations used throughout the
//! crate: enumeration, conjugation, one-box-per-row removal and Pieri
//! horizontal-strip additions.
//!
//! Partitions are ordered lexicographically on their part sequences, so a
//! sorted list of the partitions of `q` runs from `[1,...,1]` up to `[q]`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from its parts. Trailing zeros are stripped; any
    /// other zero or an increase between consecutive parts is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                input: format!("{parts:?}"),
                reason: "parts must be positive and weakly decreasing".into(),
            });
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary parts into a partition, dropping zeros.
    pub fn from_unsorted(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(q)`.
    pub fn row(q: usize) -> Self {
        if q == 0 {
            Self::empty()
        } else {
            Partition(vec![q])
        }
    }

    /// The one-column partition `(1^q)`.
    pub fn column(q: usize) -> Self {
        Partition(vec![1; q])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// |λ|, the number of boxes.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> usize {
        self.part(0)
    }

    /// λ' with λ'_j = #{i : λ_i ≥ j}.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_row();
        let parts = (1..=cols)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Pairs `(part, multiplicity)` in decreasing order of part.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `(n, λ_1, λ_2, ...)`; fails unless `n ≥ λ_1`.
    pub fn prepend_row(&self, n: usize) -> Result<Partition> {
        if n < self.first_row() {
            return Err(Error::Domain(format!(
                "cannot prepend a row of length {n} to {self}"
            )));
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(n);
        parts.extend_from_slice(&self.0);
        Partition::new(parts)
    }

    /// ρ(λ): every partition obtained by deleting at most one box from each
    /// row of λ. Always contains λ itself.
    pub fn remove_boxes_rho(&self) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        let mut current = self.0.clone();
        rho_rec(&self.0, self.len(), &mut current, &mut out);
        out
    }

    /// All λ ⊇ μ of weight |μ| + b such that λ/μ is a horizontal strip.
    pub fn pieri_additions(&self, b: usize) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        let mut current = Vec::with_capacity(self.len() + 1);
        pieri_rec(&self.0, 0, b, &mut current, &mut out);
        out
    }

    /// Hook lengths of each box, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.weight());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks.push(row - j + conj.part(j) - i - 1);
            }
        }
        hooks
    }

    /// Dimension of the Specht module S^λ, by the hook length formula.
    pub fn specht_dimension(&self) -> BigUint {
        let mut num = BigUint::one();
        for k in 2..=self.weight() {
            num *= k;
        }
        let den: BigUint = self
            .hook_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, h| acc * h);
        num / den
    }

    /// dim S_λ(V) for dim V = d, by the hook-content formula.
    pub fn schur_functor_dimension(&self, d: usize) -> BigUint {
        if self.len() > d {
            return BigUint::default();
        }
        let mut num = BigUint::one();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                num *= d + j - i;
            }
        }
        let den: BigUint = self
            .hook_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, h| acc * h);
        num / den
    }
}

impl Partition {
    /// Exponent notation with repeated parts collapsed: `()`, `(1^2)`,
    /// `(2 1^2)`, `(3 2)`.
    pub fn exponent_notation(&self) -> String {
        let mut pieces = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let run = self.0[i..].iter().take_while(|&&p| p == part).count();
            pieces.push(if run == 1 { part.to_string() } else { format!("{part}^{run}") });
            i += run;
        }
        format!("({})", pieces.join(" "))
    }
}

fn rho_rec(orig: &[usize], row: usize, current: &mut Vec<usize>, out: &mut BTreeSet<Partition>) {
    // Rows are decided bottom-up so the row below is already final.
    if row == 0 {
        out.insert(Partition::from_unsorted_valid(current));
        return;
    }
    let r = row - 1;
    rho_rec(orig, r, current, out);
    let below = current.get(r + 1).copied().unwrap_or(0);
    if orig[r] > below {
        current[r] -= 1;
        rho_rec(orig, r, current, out);
        current[r] += 1;
    }
}

fn pieri_rec(
    mu: &[usize],
    row: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut BTreeSet<Partition>,
) {
    let base = mu.get(row).copied().unwrap_or(0);
    if row > mu.len() {
        if remaining == 0 {
            out.insert(Partition::from_unsorted_valid(current));
        }
        return;
    }
    // Row `row` may grow up to the original length of the row above.
    let cap = if row == 0 {
        base + remaining
    } else {
        mu[row - 1].min(base + remaining)
    };
    for len in base..=cap {
        current.push(len);
        pieri_rec(mu, row + 1, remaining - (len - base), current, out);
        current.pop();
    }
}

impl Partition {
    fn from_unsorted_valid(parts: &[usize]) -> Partition {
        let mut parts = parts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }
}

/// All partitions of `q`, ascending lexicographically on part sequences.
pub fn enumerate_partitions(q: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    enumerate_rec(q, 1, &mut current, &mut out);
    out.sort_unstable();
    out
}

// Builds each partition from its smallest part upward.
fn enumerate_rec(remaining: usize, min_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        let mut parts = current.clone();
        parts.reverse();
        out.push(Partition(parts));
        return;
    }
    for p in min_part..=remaining {
        current.push(p);
        enumerate_rec(remaining - p, p, current, out);
        current.pop();
    }
}

/// Number of partitions of `q`.
pub fn partition_count(q: usize) -> u64 {
    let mut ways = vec![0u64; q + 1];
    ways[0] = 1;
    for part in 1..=q {
        for n in part..=q {
            ways[n] += ways[n - part];
        }
    }
    ways[q]
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[2,2,1]`, `(2,2,1)`, `2 2 1` and the exponent shorthand
    /// `2^2 1`. The empty string, `[]` and `()` all denote the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut body = s.trim();
        if let Some(inner) = body.strip_prefix('[') {
            body = inner.strip_suffix(']').ok_or_else(|| err("unbalanced bracket"))?;
        } else if let Some(inner) = body.strip_prefix('(') {
            body = inner.strip_suffix(')').ok_or_else(|| err("unbalanced parenthesis"))?;
        }
        let mut parts = Vec::new();
        for token in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| err("bad exponent"))?),
                None => (token, 1),
            };
            let base: usize = base.parse().map_err(|_| err("parts must be nonnegative integers"))?;
            if base == 0 {
                return Err(err("parts must be positive"));
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(err("parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
