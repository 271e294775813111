//! Characters of the symmetric group Σ_q.
//!
//! Irreducible character values come from the Murnaghan–Nakayama rule,
//! evaluated on beta-sets: removing a border strip of length `r` from λ is
//! the same as moving one bead of the beta-set of λ down by `r` onto an
//! empty position, with sign `(-1)^(beads jumped over)`. Values are memoized
//! in a process-wide table keyed by `(λ, remaining cycle type)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Largest q for which whole class functions are built.
pub const MAX_CLASS_FUNCTION_DEGREE: usize = 12;

type MemoKey = (Vec<usize>, Vec<usize>);

static CHARACTER_MEMO: LazyLock<RwLock<HashMap<MemoKey, i128>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// z_μ = Π_i i^{m_i} m_i!, the order of the centralizer of a permutation of
/// cycle type μ.
pub fn centralizer_order(mu: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (part, mult) in mu.multiplicities() {
        for k in 1..=mult {
            z *= part * k;
        }
    }
    z
}

/// Number of permutations of cycle type μ, q!/z_μ.
pub fn class_size(mu: &Partition) -> BigUint {
    let mut fact = BigUint::one();
    for k in 2..=mu.weight() {
        fact *= k;
    }
    fact / centralizer_order(mu)
}

/// χ^λ(μ) for |λ| = |μ|.
pub fn character_value(lambda: &Partition, mu: &Partition) -> Result<i128> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            expected: lambda.weight(),
            actual: mu.weight(),
        });
    }
    Ok(murnaghan_nakayama(lambda.parts(), mu.parts()))
}

pub(crate) fn murnaghan_nakayama(lambda: &[usize], cycles: &[usize]) -> i128 {
    let Some((&first, rest)) = cycles.split_first() else {
        return i128::from(lambda.is_empty());
    };
    if rest.is_empty() {
        // A single cycle: nonzero only on hooks.
        return hook_value(lambda);
    }
    let key = (lambda.to_vec(), cycles.to_vec());
    if let Some(&v) = CHARACTER_MEMO.read().unwrap().get(&key) {
        return v;
    }
    let mut total = 0i128;
    for_each_strip_removal(lambda, first, |shape, sign| {
        total += sign * murnaghan_nakayama(shape, rest);
    });
    CHARACTER_MEMO.write().unwrap().insert(key, total);
    total
}

fn hook_value(lambda: &[usize]) -> i128 {
    match lambda {
        [] => 1,
        [_, rest @ ..] if rest.iter().all(|&p| p == 1) => {
            if rest.len() % 2 == 0 {
                1
            } else {
                -1
            }
        }
        _ => 0,
    }
}

/// Calls `f(λ \ ξ, sign)` for every border strip ξ of length `r` in λ.
pub(crate) fn for_each_strip_removal(lambda: &[usize], r: usize, mut f: impl FnMut(&[usize], i128)) {
    let n = lambda.len();
    // Beta-set in decreasing order: β_i = λ_i + (n - 1 - i).
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + (n - 1 - i)).collect();
    let mut shape = Vec::with_capacity(n);
    for i in 0..n {
        let Some(target) = beta[i].checked_sub(r) else {
            continue;
        };
        // Beads strictly between target and beta[i] sit at indices i+1..j.
        let mut j = i + 1;
        while j < n && beta[j] > target {
            j += 1;
        }
        if j < n && beta[j] == target {
            continue;
        }
        let jumped = j - i - 1;
        shape.clear();
        // New decreasing beta-set: beta without i, with target inserted at j-1.
        let mut new_beta: Vec<usize> = Vec::with_capacity(n);
        new_beta.extend_from_slice(&beta[..i]);
        new_beta.extend_from_slice(&beta[i + 1..j]);
        new_beta.push(target);
        new_beta.extend_from_slice(&beta[j..]);
        for (k, &b) in new_beta.iter().enumerate() {
            let part = b - (n - 1 - k);
            if part == 0 {
                break;
            }
            shape.push(part);
        }
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        f(&shape, sign);
    }
}

/// Number of memoized character values currently held.
pub fn memo_len() -> usize {
    CHARACTER_MEMO.read().unwrap().len()
}

/// Memoized entries whose shape has weight at most `max_weight`.
pub fn memo_entries(max_weight: usize) -> Vec<(Partition, Partition, i128)> {
    let memo = CHARACTER_MEMO.read().unwrap();
    let mut out: Vec<_> = memo
        .iter()
        .filter(|((l, _), _)| l.iter().sum::<usize>() <= max_weight)
        .map(|((l, m), &v)| (Partition::from_unsorted(l.iter().copied()), Partition::from_unsorted(m.iter().copied()), v))
        .collect();
    out.sort();
    out
}

/// Seeds the memo; values are deterministic, so overwriting is harmless.
pub fn memo_insert(lambda: &Partition, mu: &Partition, value: i128) {
    CHARACTER_MEMO
        .write()
        .unwrap()
        .insert((lambda.parts().to_vec(), mu.parts().to_vec()), value);
}

/// An exact-rational function on the conjugacy classes of Σ_q, indexed by
/// cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    q: usize,
    values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    /// Requires a value for every cycle type of `q` and nothing else.
    pub fn new(q: usize, values: BTreeMap<Partition, BigRational>) -> Result<Self> {
        let classes = enumerate_partitions(q);
        if values.len() != classes.len() || classes.iter().any(|c| !values.contains_key(c)) {
            return Err(Error::Domain(format!(
                "class function for Σ_{q} needs exactly one value per cycle type"
            )));
        }
        Ok(ClassFunction { q, values })
    }

    pub fn from_fn(q: usize, mut f: impl FnMut(&Partition) -> BigRational) -> Self {
        let values = enumerate_partitions(q)
            .into_iter()
            .map(|mu| {
                let v = f(&mu);
                (mu, v)
            })
            .collect();
        ClassFunction { q, values }
    }

    pub fn trivial(q: usize) -> Self {
        Self::from_fn(q, |_| BigRational::one())
    }

    /// The sign character, (-1)^(q - #cycles).
    pub fn sign(q: usize) -> Self {
        Self::from_fn(q, |mu| BigRational::from_integer(sign_of(mu).into()))
    }

    pub fn degree(&self) -> usize {
        self.q
    }

    pub fn value(&self, mu: &Partition) -> Option<&BigRational> {
        self.values.get(mu)
    }

    /// Value at the identity class.
    pub fn dimension(&self) -> &BigRational {
        &self.values[&Partition::column(self.q)]
    }

    pub fn values(&self) -> &BTreeMap<Partition, BigRational> {
        &self.values
    }

    /// (1/q!) Σ_μ |C_μ| f(μ) g(μ) = Σ_μ f(μ) g(μ) / z_μ.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<BigRational> {
        if self.q != other.q {
            return Err(Error::WeightMismatch {
                expected: self.q,
                actual: other.q,
            });
        }
        let mut total = BigRational::zero();
        for (mu, f) in &self.values {
            let g = &other.values[mu];
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let z = BigInt::from(centralizer_order(mu));
            total += f * g / BigRational::from_integer(z);
        }
        Ok(total)
    }

    /// Pointwise product with the sign character.
    pub fn sign_twist(&self) -> ClassFunction {
        let values = self
            .values
            .iter()
            .map(|(mu, v)| {
                let v = if sign_of(mu) < 0 { -v } else { v.clone() };
                (mu.clone(), v)
            })
            .collect();
        ClassFunction { q: self.q, values }
    }

    /// ⟨χ^λ, self⟩, the multiplicity of S^λ when `self` is a character.
    pub fn multiplicity(&self, lambda: &Partition) -> Result<BigRational> {
        irreducible_character(lambda)?.inner_product(self)
    }
}

fn sign_of(mu: &Partition) -> i32 {
    if (mu.weight() - mu.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// χ^λ as a class function on Σ_{|λ|}.
pub fn irreducible_character(lambda: &Partition) -> Result<ClassFunction> {
    let q = lambda.weight();
    if q > MAX_CLASS_FUNCTION_DEGREE {
        return Err(Error::limit("q", q, MAX_CLASS_FUNCTION_DEGREE));
    }
    Ok(ClassFunction::from_fn(q, |mu| {
        BigRational::from_integer(murnaghan_nakayama(lambda.parts(), mu.parts()).into())
    }))
}

/// Converts an exact rational known to be a nonnegative integer.
pub fn to_count(value: &BigRational, context: impl Into<String>) -> Result<u64> {
    let context = context.into();
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegral {
            context,
            value: value.to_string(),
        });
    }
    u64::try_from(value.to_integer()).map_err(|_| Error::NonIntegral {
        context,
        value: value.to_string(),
    })
}
