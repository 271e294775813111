//! Symmetric functions in the power-sum and Schur bases, the plethysm
//! h_k[h_l] = Sym^k ∘ Sym^l, and the stable multiplicities ν^{k,l}(μ),
//! ν^∞(μ).
//!
//! Plethysms are expanded in the power-sum basis, where substitution is
//! easy: p_m[h_l] = Σ_{β ⊢ l} p_{mβ} / z_β. The Schur coefficient of λ in
//! Σ_ρ c_ρ p_ρ is Σ_ρ c_ρ χ^λ(ρ). Those character values are produced by
//! the Murnaghan–Nakayama rule run forwards (multiplying by p_m adds border
//! strips), walking the power-sum terms in sorted order so that terms with a
//! common prefix share work. Two truncations keep this small: h_k[h_l] only
//! involves shapes with at most k rows, and a single coefficient only needs
//! shapes contained in its target.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{centralizer_order, to_count};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Largest k·l accepted by [`plethysm_h_h`] and [`nu`].
pub const MAX_PLETHYSM_DEGREE: usize = 36;

/// Largest |μ| accepted by [`nu_infinity`].
pub const MAX_STABLE_WEIGHT: usize = 9;

/// A homogeneous symmetric function in the power-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumExpansion {
    degree: usize,
    coefficients: BTreeMap<Partition, BigRational>,
}

impl PowerSumExpansion {
    pub fn new(degree: usize, coefficients: BTreeMap<Partition, BigRational>) -> Result<Self> {
        if let Some(bad) = coefficients.keys().find(|p| p.weight() != degree) {
            return Err(Error::WeightMismatch {
                expected: degree,
                actual: bad.weight(),
            });
        }
        let coefficients = coefficients.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(PowerSumExpansion { degree, coefficients })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> &BTreeMap<Partition, BigRational> {
        &self.coefficients
    }

    pub fn coefficient(&self, rho: &Partition) -> BigRational {
        self.coefficients.get(rho).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Product in the power-sum basis: p_ρ p_σ = p_{ρ ∪ σ}.
    pub fn mul(&self, other: &PowerSumExpansion) -> PowerSumExpansion {
        let terms = multiply_terms(&self.terms(), &other.terms());
        PowerSumExpansion::from_terms(self.degree + other.degree, terms)
    }

    /// Schur expansion of this function.
    pub fn to_schur(&self) -> SchurExpansion {
        SchurExpansion {
            degree: self.degree,
            coefficients: schur_coefficients(&self.terms(), self.degree, None),
        }
    }

    fn terms(&self) -> Vec<Term> {
        self.coefficients
            .iter()
            .map(|(p, c)| (p.parts().to_vec(), c.clone()))
            .collect()
    }

    fn from_terms(degree: usize, terms: Vec<Term>) -> Self {
        let coefficients = terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (Partition::from_unsorted(p), c))
            .collect();
        PowerSumExpansion { degree, coefficients }
    }
}

/// A homogeneous symmetric function in the Schur basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: usize,
    coefficients: BTreeMap<Partition, BigRational>,
}

impl SchurExpansion {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Nonzero coefficients, in ascending partition order.
    pub fn coefficients(&self) -> &BTreeMap<Partition, BigRational> {
        &self.coefficients
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.coefficients.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// All coefficients as nonnegative integers; fails on any fraction or
    /// negative value.
    pub fn to_counts(&self) -> Result<BTreeMap<Partition, u64>> {
        self.coefficients
            .iter()
            .map(|(p, c)| Ok((p.clone(), to_count(c, format!("Schur coefficient of {p}"))?)))
            .collect()
    }
}

/// ν^∞(μ) together with the evaluation point that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableMultiplicity {
    pub mu: Partition,
    pub value: u64,
    pub source: StableSource,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StableSource {
    /// ν^{k,l}(μ) at a point with k ≥ |μ|, l ≥ μ_1 and 2|μ| ≤ kl.
    Witness { k: usize, l: usize },
    /// Coefficient of s_μ in Sym^*(Sym^{≥2} V), used when the witness point
    /// exceeds [`MAX_PLETHYSM_DEGREE`].
    StableIdentity,
}

type Term = (Vec<usize>, BigRational);

fn merge_sorted_desc(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] >= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn multiply_terms(a: &[Term], b: &[Term]) -> Vec<Term> {
    let mut acc: HashMap<Vec<usize>, BigRational> = HashMap::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            let key = merge_sorted_desc(pa, pb);
            let c = ca * cb;
            acc.entry(key).and_modify(|x| *x += &c).or_insert(c);
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn inverse_z(p: &Partition) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(centralizer_order(p)))
}

/// h_k = Σ_{μ ⊢ k} p_μ / z_μ.
pub fn h_in_p(k: usize) -> PowerSumExpansion {
    let coefficients = enumerate_partitions(k)
        .into_iter()
        .map(|mu| {
            let c = inverse_z(&mu);
            (mu, c)
        })
        .collect();
    PowerSumExpansion { degree: k, coefficients }
}

fn check_plethysm_args(k: usize, l: usize) -> Result<()> {
    if l == 0 {
        return Err(Error::Domain("plethysm h_k[h_l] needs l ≥ 1".into()));
    }
    if k * l > MAX_PLETHYSM_DEGREE {
        return Err(Error::limit("k*l", k * l, MAX_PLETHYSM_DEGREE));
    }
    Ok(())
}

type Memo<T> = RwLock<HashMap<(usize, usize), Arc<T>>>;

static POWER_SUM_MEMO: LazyLock<Memo<Vec<Term>>> = LazyLock::new(|| RwLock::new(HashMap::new()));

static SCHUR_MEMO: LazyLock<Memo<SchurExpansion>> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// Power-sum terms of h_k[h_l], memoized. No degree bound here; callers
/// enforce their own.
fn plethysm_terms(k: usize, l: usize) -> Arc<Vec<Term>> {
    if let Some(t) = POWER_SUM_MEMO.read().unwrap().get(&(k, l)) {
        return Arc::clone(t);
    }
    let h_l = h_in_p(l);
    // p_m[h_l] for each part size m that occurs.
    let substituted = |m: usize| -> Vec<Term> {
        h_l.coefficients
            .iter()
            .map(|(beta, c)| (beta.parts().iter().map(|&b| b * m).collect(), c.clone()))
            .collect()
    };
    let mut factors: HashMap<usize, Vec<Term>> = HashMap::new();
    let mut total: HashMap<Vec<usize>, BigRational> = HashMap::new();
    for alpha in enumerate_partitions(k) {
        let mut acc: Vec<Term> = vec![(Vec::new(), inverse_z(&alpha))];
        for &m in alpha.parts() {
            let f = factors.entry(m).or_insert_with(|| substituted(m));
            acc = multiply_terms(&acc, f);
        }
        for (rho, c) in acc {
            total.entry(rho).and_modify(|x| *x += &c).or_insert(c);
        }
    }
    let mut terms: Vec<Term> = total.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let terms = Arc::new(terms);
    POWER_SUM_MEMO.write().unwrap().insert((k, l), Arc::clone(&terms));
    terms
}

/// h_k[h_l] in the power-sum basis.
pub fn plethysm_h_h_power_sums(k: usize, l: usize) -> Result<PowerSumExpansion> {
    check_plethysm_args(k, l)?;
    Ok(PowerSumExpansion::from_terms(k * l, plethysm_terms(k, l).to_vec()))
}

/// Schur expansion of h_k[h_l] (the character of Sym^k(Sym^l V)), memoized.
pub fn plethysm_h_h(k: usize, l: usize) -> Result<Arc<SchurExpansion>> {
    check_plethysm_args(k, l)?;
    if let Some(s) = SCHUR_MEMO.read().unwrap().get(&(k, l)) {
        return Ok(Arc::clone(s));
    }
    let expansion = Arc::new(compute_plethysm_h_h(k, l)?);
    SCHUR_MEMO.write().unwrap().insert((k, l), Arc::clone(&expansion));
    Ok(expansion)
}

/// [`plethysm_h_h`] without consulting or filling the memo.
pub fn compute_plethysm_h_h(k: usize, l: usize) -> Result<SchurExpansion> {
    check_plethysm_args(k, l)?;
    if k <= 1 || l == 1 {
        // h_0[f] = 1, h_1[f] = f and h_k[h_1] = h_k.
        return Ok(SchurExpansion {
            degree: k * l,
            coefficients: BTreeMap::from([(Partition::row(k * l), BigRational::one())]),
        });
    }
    let h = newton_plethysm(k, l, None)?;
    Ok(SchurExpansion {
        degree: k * l,
        coefficients: h
            .into_iter()
            .map(|(beta, c)| (partition_of(&beta), BigRational::from_integer(c.into())))
            .collect(),
    })
}

/// Coefficient of s_λ in h_k[h_l], without expanding the whole plethysm.
pub fn plethysm_coefficient(k: usize, l: usize, lambda: &Partition) -> Result<BigRational> {
    check_plethysm_args(k, l)?;
    if lambda.weight() != k * l {
        return Ok(BigRational::zero());
    }
    if let Some(s) = SCHUR_MEMO.read().unwrap().get(&(k, l)) {
        return Ok(s.coefficient(lambda));
    }
    if k <= 1 || l == 1 {
        return Ok(if *lambda == Partition::row(k * l) {
            BigRational::one()
        } else {
            BigRational::zero()
        });
    }
    if lambda.len() > k {
        return Ok(BigRational::zero());
    }
    let h = newton_plethysm(k, l, Some(lambda))?;
    let c = h.get(&beta_of(lambda.parts(), k)).copied().unwrap_or(0);
    Ok(BigRational::from_integer(c.into()))
}

/// h_k[h_l] via Newton's identity n·h_n[f] = Σ_{r=1}^n p_r[f]·h_{n-r}[f] with
/// p_r[h_l] = Σ_{β ⊢ l} p_{rβ} / z_β, everything held in the Schur basis on
/// at most k rows. With a target, only shapes inside it are tracked.
fn newton_plethysm(k: usize, l: usize, target: Option<&Partition>) -> Result<HashMap<Beta, i128>> {
    let rows = k.max(1);
    let overflow = || Error::Inconsistency(format!("integer overflow expanding h_{k}[h_{l}]"));
    let l_factorial: i128 = (1..=l as i128).try_fold(1i128, |a, b| a.checked_mul(b)).ok_or_else(overflow)?;
    // (β, l!/z_β), sorted so that shared prefixes are adjacent.
    let betas: Vec<(Vec<usize>, i128)> = enumerate_partitions(l)
        .into_iter()
        .map(|b| {
            let z = centralizer_order(&b).to_i128().ok_or_else(overflow)?;
            Ok((b.into_parts(), l_factorial / z))
        })
        .collect::<Result<_>>()?;
    let target_parts: Option<Vec<usize>> = target.map(|t| t.parts().to_vec());
    let keep = |beta: &[u8]| -> bool {
        let n = beta.len();
        match &target_parts {
            None => true,
            Some(t) => beta
                .iter()
                .enumerate()
                .all(|(i, &b)| b as usize - (n - 1 - i) <= t.get(i).copied().unwrap_or(0)),
        }
    };

    let mut h: Vec<HashMap<Beta, i128>> = vec![HashMap::from([(beta_of(&[], rows), 1)])];
    for n in 1..=k {
        let partials: Vec<Result<HashMap<Beta, i128>>> = (1..=n)
            .into_par_iter()
            .map(|r| {
                let mut acc: HashMap<Beta, i128> = HashMap::new();
                let mut stack: Vec<HashMap<Beta, i128>> = Vec::new();
                let mut prev: &[usize] = &[];
                for (beta, weight) in &betas {
                    let common = beta.iter().zip(prev).take_while(|(a, b)| a == b).count();
                    stack.truncate(common);
                    for &b in &beta[common..] {
                        let base = stack.last().unwrap_or(&h[n - r]);
                        let next = mul_power_sum(base, r * b, &keep);
                        stack.push(next);
                    }
                    prev = beta;
                    for (shape, &v) in stack.last().unwrap() {
                        let term = v.checked_mul(*weight).ok_or_else(overflow)?;
                        let slot = acc.entry(shape.clone()).or_insert(0);
                        *slot = slot.checked_add(term).ok_or_else(overflow)?;
                    }
                }
                Ok(acc)
            })
            .collect();
        let mut total: HashMap<Beta, i128> = HashMap::new();
        for part in partials {
            for (shape, v) in part? {
                let slot = total.entry(shape).or_insert(0);
                *slot = slot.checked_add(v).ok_or_else(overflow)?;
            }
        }
        let scale = l_factorial * n as i128;
        let mut next = HashMap::with_capacity(total.len());
        for (shape, v) in total {
            if v == 0 {
                continue;
            }
            if v % scale != 0 {
                return Err(Error::Inconsistency(format!(
                    "non-integral coefficient {v}/{scale} in h_{n}[h_{l}]"
                )));
            }
            next.insert(shape, v / scale);
        }
        h.push(next);
    }
    Ok(h.pop().unwrap())
}

/// ν^{k,l}(μ): the multiplicity of S_{(kl-|μ|, μ)}(V) in Sym^k(Sym^l V).
pub fn nu(k: usize, l: usize, mu: &Partition) -> Result<u64> {
    let w = mu.weight();
    if 2 * w > k * l {
        return Err(Error::Domain(format!(
            "ν^{{k,l}}(μ) needs 2|μ| ≤ kl, got 2·{w} > {k}·{l}"
        )));
    }
    let lambda = mu.prepend_row(k * l - w)?;
    let c = plethysm_h_h(k, l)?.coefficient(&lambda);
    to_count(&c, format!("ν^{{{k},{l}}}({mu})"))
}

/// The evaluation point for ν^∞(μ): k = max(|μ|, 1) and the least
/// l ≥ max(μ_1, 1) with kl ≥ 2|μ|.
pub fn stable_witness(mu: &Partition) -> (usize, usize) {
    let k = mu.weight().max(1);
    let mut l = mu.first_row().max(1);
    while k * l < 2 * mu.weight() {
        l += 1;
    }
    (k, l)
}

/// ν^∞(μ), the stable value of ν^{k,l}(μ) in k and l.
pub fn nu_infinity(mu: &Partition) -> Result<StableMultiplicity> {
    if mu.weight() > MAX_STABLE_WEIGHT {
        return Err(Error::limit("|μ|", mu.weight(), MAX_STABLE_WEIGHT));
    }
    let (k, l) = stable_witness(mu);
    if k * l <= MAX_PLETHYSM_DEGREE {
        Ok(StableMultiplicity {
            mu: mu.clone(),
            value: nu(k, l, mu)?,
            source: StableSource::Witness { k, l },
        })
    } else {
        Ok(StableMultiplicity {
            mu: mu.clone(),
            value: nu_infinity_from_identity(mu)?,
            source: StableSource::StableIdentity,
        })
    }
}

/// Coefficient of s_μ in Sym^*(Sym^{≥2} V) = Σ_π Π_j h_{m_j(π)}[h_j], the sum
/// running over partitions π of |μ| with no part equal to 1.
pub fn nu_infinity_from_identity(mu: &Partition) -> Result<u64> {
    let w = mu.weight();
    if w > crate::characters::MAX_CLASS_FUNCTION_DEGREE {
        return Err(Error::limit("|μ|", w, crate::characters::MAX_CLASS_FUNCTION_DEGREE));
    }
    let mut total: HashMap<Vec<usize>, BigRational> = HashMap::new();
    for pi in enumerate_partitions(w) {
        if pi.parts().contains(&1) {
            continue;
        }
        let mut acc: Vec<Term> = vec![(Vec::new(), BigRational::one())];
        for (part, mult) in pi.multiplicities() {
            acc = multiply_terms(&acc, &plethysm_terms(mult, part));
        }
        for (rho, c) in acc {
            total.entry(rho).and_modify(|x| *x += &c).or_insert(c);
        }
    }
    let mut terms: Vec<Term> = total.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let c = schur_coefficients(&terms, w.max(1), Some(mu))
        .remove(mu)
        .unwrap_or_else(BigRational::zero);
    to_count(&c, format!("ν^∞({mu})"))
}

/// Schur state: a beta-set with a fixed number of beads, stored decreasing.
type Beta = Vec<u8>;

fn beta_of(parts: &[usize], rows: usize) -> Beta {
    (0..rows).map(|i| (parts.get(i).copied().unwrap_or(0) + rows - 1 - i) as u8).collect()
}

fn partition_of(beta: &[u8]) -> Partition {
    let rows = beta.len();
    Partition::from_unsorted(beta.iter().enumerate().map(|(i, &b)| b as usize - (rows - 1 - i)))
}

/// Multiplies Σ c_ν s_ν by p_m: every way of adding a border strip of
/// length m, signed by (-1)^(height). Shapes rejected by `keep` are dropped.
fn mul_power_sum(state: &HashMap<Beta, i128>, m: usize, keep: &dyn Fn(&[u8]) -> bool) -> HashMap<Beta, i128> {
    let mut out: HashMap<Beta, i128> = HashMap::with_capacity(state.len() * 2);
    let mut next = Vec::new();
    for (beta, &c) in state {
        let n = beta.len();
        for i in 0..n {
            let target = beta[i] as usize + m;
            // Beads strictly above position beta[i] and below target sit at
            // indices j..i (decreasing order).
            let mut j = i;
            while j > 0 && (beta[j - 1] as usize) < target {
                j -= 1;
            }
            if j > 0 && beta[j - 1] as usize == target {
                continue;
            }
            next.clear();
            next.extend_from_slice(&beta[..j]);
            next.push(target as u8);
            next.extend_from_slice(&beta[j..i]);
            next.extend_from_slice(&beta[i + 1..]);
            if !keep(&next) {
                continue;
            }
            let jumped = i - j;
            let v = if jumped % 2 == 0 { c } else { -c };
            *out.entry(next.clone()).or_insert(0) += v;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Integer accumulator that spills to a big integer on overflow.
#[derive(Default)]
struct Acc {
    small: i128,
    big: BigInt,
}

impl Acc {
    fn add_product(&mut self, a: &BigInt, a_small: Option<i128>, b: i128) {
        if let Some(v) = a_small.and_then(|x| x.checked_mul(b)) {
            match self.small.checked_add(v) {
                Some(s) => self.small = s,
                None => {
                    self.big += BigInt::from(self.small) + BigInt::from(v);
                    self.small = 0;
                }
            }
        } else {
            self.big += a * BigInt::from(b);
        }
    }

    fn total(self) -> BigInt {
        self.big + BigInt::from(self.small)
    }
}

/// Σ_ρ c_ρ p_ρ in the Schur basis, restricted to shapes with at most `rows`
/// rows (exact when the function has no terms beyond that) and, when
/// `target` is given, to shapes contained in it.
fn schur_coefficients(terms: &[Term], rows: usize, target: Option<&Partition>) -> BTreeMap<Partition, BigRational> {
    let rows = rows.max(1);
    if terms.is_empty() {
        return BTreeMap::new();
    }
    let degree: usize = terms[0].0.iter().sum();
    if degree == 0 {
        return terms
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(_, c)| (Partition::empty(), c.clone()))
            .collect();
    }
    let denominator = terms.iter().fold(BigInt::one(), |d, (_, c)| d.lcm(c.denom()));
    let target_parts: Option<Vec<usize>> = target.map(|t| t.parts().to_vec());
    let keep = |beta: &[u8]| -> bool {
        let n = beta.len();
        match &target_parts {
            None => true,
            Some(t) => beta
                .iter()
                .enumerate()
                .all(|(i, &b)| b as usize - (n - 1 - i) <= t.get(i).copied().unwrap_or(0)),
        }
    };

    // Terms are sorted, so each first part forms a contiguous group.
    let mut groups: Vec<&[Term]> = Vec::new();
    let mut start = 0;
    for i in 1..=terms.len() {
        if i == terms.len() || terms[i].0.first() != terms[start].0.first() {
            groups.push(&terms[start..i]);
            start = i;
        }
    }

    let partials: Vec<HashMap<Beta, Acc>> = groups
        .par_iter()
        .map(|group| {
            let mut acc: HashMap<Beta, Acc> = HashMap::new();
            let root: HashMap<Beta, i128> = HashMap::from([(beta_of(&[], rows), 1)]);
            // stack[d] is the Schur expansion of p applied to the first d parts.
            let mut stack: Vec<HashMap<Beta, i128>> = vec![root];
            let mut prev: &[usize] = &[];
            for (rho, c) in group.iter() {
                let common = rho.iter().zip(prev).take_while(|(a, b)| a == b).count();
                stack.truncate(common + 1);
                for &m in &rho[common..] {
                    let next = mul_power_sum(stack.last().unwrap(), m, &keep);
                    stack.push(next);
                }
                prev = rho;
                let scaled = c * BigRational::from_integer(denominator.clone());
                let numer = scaled.to_integer();
                let numer_small = numer.to_i128();
                for (beta, &chi) in stack.last().unwrap() {
                    acc.entry(beta.clone()).or_default().add_product(&numer, numer_small, chi);
                }
            }
            acc
        })
        .collect();

    let mut merged: HashMap<Beta, BigInt> = HashMap::new();
    for part in partials {
        for (beta, a) in part {
            *merged.entry(beta).or_default() += a.total();
        }
    }
    merged
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(beta, v)| (partition_of(&beta), BigRational::new(v, denominator.clone())))
        .collect()
}

/// Snapshot of the memoized Schur expansions, ordered by (k, l).
pub fn memoized_plethysms() -> Vec<((usize, usize), Arc<SchurExpansion>)> {
    let memo = SCHUR_MEMO.read().unwrap();
    let mut out: Vec<_> = memo.iter().map(|(k, v)| (*k, Arc::clone(v))).collect();
    out.sort_by_key(|(k, _)| *k);
    out
}

/// Seeds the plethysm memo with a previously computed expansion.
pub fn memoize_plethysm(k: usize, l: usize, coefficients: BTreeMap<Partition, BigRational>) -> Result<()> {
    check_plethysm_args(k, l)?;
    if let Some(bad) = coefficients.keys().find(|p| p.weight() != k * l) {
        return Err(Error::WeightMismatch {
            expected: k * l,
            actual: bad.weight(),
        });
    }
    SCHUR_MEMO.write().unwrap().insert(
        (k, l),
        Arc::new(SchurExpansion {
            degree: k * l,
            coefficients,
        }),
    );
    Ok(())
}
