use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::{binomial, BettiTable, Convention};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::partition::{factorial, Partition, SymmetricIdeal};

/// `Λ(I)` of a symmetric monomial ideal.
pub fn lambda_set(ideal: &MonomialIdeal) -> Result<Vec<Partition>> {
    Ok(SymmetricIdeal::from_ideal(ideal)?.lambdas().to_vec())
}

/// Whether `z^λ z_k / z_s ∈ I` for every `λ ∈ Λ(I)` and every `k` with
/// `λ_k < λ_s`.
pub fn is_symmetric_shifted(ideal: &SymmetricIdeal) -> bool {
    let mut buf = Vec::new();
    ideal.lambdas().iter().all(|lambda| {
        let e = lambda.entries();
        let s = e.len();
        if s == 0 {
            return true;
        }
        let top = e[s - 1];
        (0..s).filter(|&k| e[k] < top).all(|k| {
            buf.clear();
            buf.extend_from_slice(e);
            buf[k] += 1;
            buf[s - 1] -= 1;
            buf.sort_unstable();
            ideal.contains_partition(&buf)
        })
    })
}

/// Betti table of a symmetric shifted ideal `I` (convention: of `I`) from
/// the partition formula
///
/// ```text
/// β_{i,i+d}(I) = Σ_{λ∈Λ, |λ|=d} Σ_{k+l=i} p!/type(λ_{≤p})! · C(s,p)
///                  · C(s-p, r+k) · C(r+k-1, k) · C(p, l)
/// ```
///
/// with `p = p(λ)` and `r = r(λ)`.
pub fn betti_closed(ideal: &SymmetricIdeal) -> Result<BettiTable> {
    if !is_symmetric_shifted(ideal) {
        return Err(Error::Precondition("ideal is not symmetric shifted".into()));
    }
    let s = ideal.s() as i64;
    let mut table = BettiTable::new(Convention::Ideal);
    for lambda in ideal.lambdas() {
        let (d, contributions) = lambda_contribution(lambda, s);
        for (i, v) in contributions.into_iter().enumerate() {
            table.add(i, d + i as u64, v);
        }
    }
    Ok(table)
}

fn lambda_contribution(lambda: &Partition, s: i64) -> (u64, Vec<BigUint>) {
    let stats = lambda.stats();
    let p = stats.p as i64;
    let r = stats.r as i64;

    let mut head: BTreeMap<u32, usize> = BTreeMap::new();
    for &x in &lambda.entries()[..stats.p] {
        *head.entry(x).or_default() += 1;
    }
    let head_type: BigUint = head.values().map(|&c| factorial(c)).product();
    let lead = factorial(stats.p) / head_type * binomial(s, p);

    let mut out = Vec::with_capacity(s as usize);
    for i in 0..s {
        let mut acc = BigUint::default();
        for k in 0..=i {
            let l = i - k;
            acc += binomial(s - p, r + k) * binomial(r + k - 1, k) * binomial(p, l);
        }
        out.push(&lead * acc);
    }
    (lambda.size(), out)
}
