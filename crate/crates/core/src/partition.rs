//! Partitions as orbit representatives of symmetric monomial ideals.
//!
//! A partition here is a weakly increasing exponent vector
//! `λ_1 ≤ ··· ≤ λ_s`. A monomial ideal fixed by permutations of the variables
//! is determined by the partitions of its minimal generators, and every
//! statistic the Betti formula needs (`p`, `r`, `type`) is read off them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{minimalize, Exponent, MonomialIdeal};

/// Default cap on nodes visited by [`minimal_partitions`].
pub const DEFAULT_NODE_CAP: u64 = 10_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Fails unless `entries` is weakly increasing.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Parameter(format!(
                "{entries:?} is not weakly increasing"
            )));
        }
        Ok(Partition(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// `λ_s`, the largest part (0 for the empty partition).
    pub fn top(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    /// `|λ_{≤c}| = λ_1 + ··· + λ_c`.
    pub fn truncated_size(&self, c: usize) -> u64 {
        self.0[..c.min(self.0.len())]
            .iter()
            .map(|&x| x as u64)
            .sum()
    }

    /// Componentwise `self ≤ other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn to_exponent(&self) -> Exponent {
        Exponent::new(self.0.clone())
    }

    pub fn stats(&self) -> PartitionStats {
        let top = self.top();
        let p = self.0.iter().filter(|&&x| x + 1 < top).count();
        let r = self.0.iter().filter(|&&x| x == top).count();
        let mut type_counts = BTreeMap::new();
        for &x in &self.0 {
            *type_counts.entry(x).or_insert(0usize) += 1;
        }
        let type_factorial = type_counts.values().map(|&t| factorial(t)).product();
        PartitionStats {
            p,
            r,
            type_counts,
            type_factorial,
        }
    }

    /// `|S_s · z^λ| = s! / type(λ)!`.
    pub fn orbit_size(&self) -> BigUint {
        multinomial(&self.0)
    }

    /// All distinct rearrangements of `λ`, in lexicographic order.
    pub fn expand_orbit(&self) -> Vec<Exponent> {
        let mut cur = self.0.clone();
        let mut out = vec![Exponent::new(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Exponent::new(cur.clone()));
        }
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_exponent(), f)
    }
}

/// `p(λ)`, `r(λ)` and `type(λ)` of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    /// Number of parts strictly below `λ_s - 1`.
    pub p: usize,
    /// Number of parts equal to `λ_s`.
    pub r: usize,
    /// Multiplicity of each occurring value, zero included.
    pub type_counts: BTreeMap<u32, usize>,
    pub type_factorial: BigUint,
}

/// Sorted copy of `u`.
pub fn canonical_partition(u: &Exponent) -> Partition {
    let mut v = u.entries().to_vec();
    v.sort_unstable();
    Partition(v)
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `len! / ∏ (multiplicity of each value)!` for a sorted slice.
pub(crate) fn multinomial(sorted: &[u32]) -> BigUint {
    let mut denom = BigUint::one();
    let mut run = 0usize;
    for (k, x) in sorted.iter().enumerate() {
        run += 1;
        if k + 1 == sorted.len() || sorted[k + 1] != *x {
            denom *= factorial(run);
            run = 0;
        }
    }
    factorial(sorted.len()) / denom
}

/// Weakly increasing vectors of length `len` with entries at most `cap` and
/// sum `total`.
pub(crate) fn bounded_partitions(total: u64, len: usize, cap: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    sorted_parts(total, cap, 0, 0, &mut cur, &mut out);
    out
}

fn sorted_parts(
    left: u64,
    cap: u64,
    lo: u64,
    k: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    let len = cur.len();
    if k == len {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let slots = (len - k) as u64;
    if cap * slots < left {
        return;
    }
    for x in lo..=cap {
        // the remaining parts are at least x
        if x * slots > left {
            break;
        }
        cur[k] = x as u32;
        sorted_parts(left - x, cap, x, k + 1, cur, out);
    }
    cur[k] = 0;
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Componentwise-minimal partitions below `bound` satisfying an upward-closed
/// predicate.
///
/// Walks every partition `λ ≤ bound`; `λ` is reported when it satisfies
/// `pred` and no single-entry decrement that stays a partition does. For
/// partitions this single-step test is equivalent to minimality. The caller
/// guarantees that `pred` is upward closed and that `bound` dominates every
/// minimal element.
pub fn minimal_partitions<F>(pred: F, bound: &Partition, max_nodes: u64) -> Result<Vec<Partition>>
where
    F: Fn(&[u32]) -> bool,
{
    let s = bound.len();
    let mut out = Vec::new();
    let mut cur = vec![0u32; s];
    let mut nodes = 0u64;
    walk(
        &pred,
        bound.entries(),
        0,
        &mut cur,
        &mut nodes,
        max_nodes,
        &mut out,
    )?;
    out.sort_by(|a, b| Exponent::new(a.clone()).canonical_cmp(&Exponent::new(b.clone())));
    Ok(out.into_iter().map(Partition).collect())
}

fn walk<F: Fn(&[u32]) -> bool>(
    pred: &F,
    bound: &[u32],
    k: usize,
    cur: &mut Vec<u32>,
    nodes: &mut u64,
    max_nodes: u64,
    out: &mut Vec<Vec<u32>>,
) -> Result<()> {
    *nodes += 1;
    if *nodes > max_nodes {
        return Err(Error::Resource {
            what: "partition lattice nodes",
            cap: max_nodes,
        });
    }
    if k == cur.len() {
        if pred(cur) && is_locally_minimal(pred, cur) {
            out.push(cur.clone());
        }
        return Ok(());
    }
    let lo = if k == 0 { 0 } else { cur[k - 1] };
    for x in lo..=bound[k] {
        cur[k] = x;
        walk(pred, bound, k + 1, cur, nodes, max_nodes, out)?;
    }
    cur[k] = 0;
    Ok(())
}

fn is_locally_minimal<F: Fn(&[u32]) -> bool>(pred: &F, lambda: &mut [u32]) -> bool {
    for k in 0..lambda.len() {
        let prev = if k == 0 { 0 } else { lambda[k - 1] };
        if lambda[k] > prev {
            lambda[k] -= 1;
            let below = pred(lambda);
            lambda[k] += 1;
            if below {
                return false;
            }
        }
    }
    true
}

/// A monomial ideal fixed by all permutations of the variables, stored as
/// the antichain `Λ(I)` of partitions of its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetricIdeal {
    s: usize,
    lambdas: Vec<Partition>,
}

impl fmt::Debug for SymmetricIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymmetricIdeal(s={}, {:?})", self.s, self.lambdas)
    }
}

impl SymmetricIdeal {
    /// Symmetric ideal generated by the orbits of `lambdas`; non-minimal
    /// partitions are dropped.
    pub fn new(s: usize, lambdas: impl IntoIterator<Item = Partition>) -> Result<Self> {
        let lambdas: Vec<Partition> = lambdas.into_iter().collect();
        for l in &lambdas {
            if l.len() != s {
                return Err(Error::Dimension {
                    expected: s,
                    found: l.len(),
                });
            }
        }
        // Sorted vectors compare componentwise exactly like the orbits do.
        let reduced = minimalize(lambdas.iter().map(Partition::to_exponent), s)?;
        Ok(SymmetricIdeal {
            s,
            lambdas: reduced
                .gens()
                .iter()
                .map(|g| Partition(g.entries().to_vec()))
                .collect(),
        })
    }

    /// `Λ(I)` of a monomial ideal, after checking that `I` is symmetric.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        let mut reps: Vec<Partition> = ideal.gens().iter().map(canonical_partition).collect();
        reps.sort();
        reps.dedup();
        let orbit_total: BigUint = reps.iter().map(Partition::orbit_size).sum();
        if orbit_total != BigUint::from(ideal.len()) {
            return Err(Error::NotSymmetric);
        }
        // Every generator lies in the orbit of its own representative, so a
        // matching count means the orbits are exactly the generator set.
        SymmetricIdeal::new(ideal.s(), reps)
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn lambdas(&self) -> &[Partition] {
        &self.lambdas
    }

    pub fn is_zero(&self) -> bool {
        self.lambdas.is_empty()
    }

    /// Membership of a partition: some `μ ∈ Λ` lies below it.
    pub fn contains_partition(&self, lambda: &[u32]) -> bool {
        self.lambdas
            .iter()
            .any(|m| m.0.iter().zip(lambda).all(|(a, b)| a <= b))
    }

    pub fn contains_exponent(&self, u: &Exponent) -> Result<bool> {
        u.check_len(self.s)?;
        Ok(self.contains_partition(canonical_partition(u).entries()))
    }

    /// `J ⊆ self`.
    pub fn contains(&self, other: &SymmetricIdeal) -> bool {
        other
            .lambdas
            .iter()
            .all(|l| self.contains_partition(l.entries()))
    }

    /// Number of minimal monomial generators, `Σ_{λ∈Λ} s!/type(λ)!`.
    pub fn generator_count(&self) -> BigUint {
        self.lambdas.iter().map(Partition::orbit_size).sum()
    }

    pub fn alpha(&self) -> Result<u64> {
        self.lambdas
            .iter()
            .map(Partition::size)
            .min()
            .ok_or(Error::ZeroIdeal("alpha"))
    }

    pub fn expand(&self) -> MonomialIdeal {
        let gens = self
            .lambdas
            .iter()
            .flat_map(Partition::expand_orbit)
            .collect();
        MonomialIdeal::from_antichain(self.s, gens)
    }
}
