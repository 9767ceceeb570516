//! Fold-product ideals `I_a(z_1^{m_1} ··· z_s^{m_s})`: the ideal generated by
//! all degree-`a` monomials `z^n` with `0 ≤ n_i ≤ m_i`.
//!
//! The uniform case `m_1 = ··· = m_s = b` is parameterised by
//! [`UniformParams`], which carries the derived quantities
//!
//! ```text
//! c0    = s - floor((a - 1) / b)
//! mu0   = a - b (s - c0)          (1 ≤ mu0 ≤ b)
//! delta = a - (b - 1) s - 1
//! ```
//!
//! so that `a = b (s - c0) + mu0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Exponent, MonomialIdeal, VarPowerIdeal, DEFAULT_GEN_CAP};
use crate::partition::{bounded_partitions, Partition, SymmetricIdeal};

/// Exponent caps `m_i` together with the degree `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multiplicities {
    a: u32,
    m: Vec<u32>,
}

impl Multiplicities {
    pub fn new(a: u32, m: Vec<u32>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::Parameter("need at least one variable".into()));
        }
        if m.contains(&0) {
            return Err(Error::Parameter("multiplicities must be positive".into()));
        }
        let total: u64 = m.iter().map(|&x| x as u64).sum();
        if a == 0 || a as u64 > total {
            return Err(Error::Parameter(format!(
                "need 1 <= a <= {total}, got a = {a}"
            )));
        }
        Ok(Multiplicities { a, m })
    }

    pub fn uniform(s: usize, a: u32, b: u32) -> Result<Self> {
        Multiplicities::new(a, vec![b; s])
    }

    pub fn s(&self) -> usize {
        self.m.len()
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn m(&self) -> &[u32] {
        &self.m
    }

    pub fn total(&self) -> u64 {
        self.m.iter().map(|&x| x as u64).sum()
    }

    /// `μ_a(S) = max(0, a - Σ_{j ∉ S} m_j)` for a set of 0-based indices.
    pub fn mu(&self, subset: &[usize]) -> u32 {
        let outside: u64 = (0..self.s())
            .filter(|j| !subset.contains(j))
            .map(|j| self.m[j] as u64)
            .sum();
        (self.a as u64).saturating_sub(outside) as u32
    }

    /// Parameters of `I^r = I_{ar}(z^{r m})`.
    pub fn power(&self, r: u32) -> Result<Multiplicities> {
        let a = self.a.checked_mul(r).ok_or(Error::Overflow)?;
        let m = self
            .m
            .iter()
            .map(|&x| x.checked_mul(r).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Multiplicities::new(a, m)
    }
}

/// `(s, a, b)` of the uniform ideal `I_a(z_1^b ··· z_s^b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniformParams {
    pub s: u32,
    pub a: u32,
    pub b: u32,
    pub c0: u32,
    pub mu0: u32,
    pub delta: i64,
}

impl UniformParams {
    pub fn new(s: u32, a: u32, b: u32) -> Result<Self> {
        if s == 0 || b == 0 {
            return Err(Error::Parameter("s and b must be positive".into()));
        }
        let sb = s as u64 * b as u64;
        if a == 0 || a as u64 > sb {
            return Err(Error::Parameter(format!(
                "need 1 <= a <= s*b = {sb}, got a = {a}"
            )));
        }
        let c0 = s - (a - 1) / b;
        let mu0 = a - b * (s - c0);
        let delta = a as i64 - (b as i64 - 1) * s as i64 - 1;
        Ok(UniformParams {
            s,
            a,
            b,
            c0,
            mu0,
            delta,
        })
    }

    /// `b ≤ a ≤ s b`.
    pub fn in_range(&self) -> bool {
        self.b <= self.a
    }

    /// `a > (b - 1) s + 1`, equivalently `delta ≥ 1`; exactly the range in
    /// which `I` is saturated.
    pub fn saturated_regime(&self) -> bool {
        self.delta >= 1
    }

    /// `b (s - n) + 1 ≤ a ≤ s b` for an ambient projective dimension
    /// `n ≤ s - 1`, i.e. `c0 ≤ n`.
    pub fn positive_dim(&self, n: u32) -> bool {
        n < self.s && self.c0 <= n
    }

    /// Whether the parameters satisfy the standing range with the monomial
    /// default `n = s - 1`.
    pub fn in_setting(&self) -> bool {
        self.positive_dim(self.s - 1)
    }

    /// `mu0 + b (c - c0)` for `c ≥ c0`.
    pub fn component_power(&self, c: u32) -> u32 {
        self.mu0 + self.b * (c - self.c0)
    }

    pub fn multiplicities(&self) -> Multiplicities {
        Multiplicities {
            a: self.a,
            m: vec![self.b; self.s as usize],
        }
    }

    pub fn a_multiple_of_b(&self) -> bool {
        self.a.is_multiple_of(self.b)
    }
}

pub fn uniform_params(s: u32, a: u32, b: u32) -> Result<UniformParams> {
    UniformParams::new(s, a, b)
}

/// All `z^n` with `0 ≤ n_i ≤ m_i` and `Σ n_i = a`; equal degrees make this
/// an antichain already.
pub fn fold_generators(mult: &Multiplicities) -> MonomialIdeal {
    let s = mult.s();
    let mut suffix = vec![0u64; s + 1];
    for i in (0..s).rev() {
        suffix[i] = suffix[i + 1] + mult.m[i] as u64;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; s];
    bounded_compositions(&mult.m, &suffix, mult.a as u64, 0, &mut cur, &mut out);
    MonomialIdeal::from_antichain(s, out)
}

fn bounded_compositions(
    caps: &[u32],
    suffix: &[u64],
    left: u64,
    k: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<Exponent>,
) {
    if k == caps.len() {
        if left == 0 {
            out.push(Exponent::new(cur.clone()));
        }
        return;
    }
    let lo = left.saturating_sub(suffix[k + 1]);
    let hi = left.min(caps[k] as u64);
    for x in lo..=hi {
        cur[k] = x as u32;
        bounded_compositions(caps, suffix, left - x, k + 1, cur, out);
    }
    cur[k] = 0;
}

/// `I^r` through the closed form `I_a(z^m)^r = I_{ar}(z^{rm})`.
pub fn fold_power(mult: &Multiplicities, r: u32) -> Result<MonomialIdeal> {
    if r == 0 {
        return Ok(MonomialIdeal::unit(mult.s()));
    }
    Ok(fold_generators(&mult.power(r)?))
}

/// `z^λ ∈ I_a(z^b)^r  ⟺  Σ_i min(λ_i, b r) ≥ a r`. Works for any exponent
/// vector, sorted or not.
pub fn uniform_member(lambda: &[u32], params: &UniformParams, r: u32) -> bool {
    let cap = params.b as u64 * r as u64;
    let sum: u64 = lambda.iter().map(|&x| (x as u64).min(cap)).sum();
    sum >= params.a as u64 * r as u64
}

/// `Λ(I^r)`: the partitions of `a r` with all parts at most `b r`.
pub fn uniform_power_lambdas(params: &UniformParams, r: u32) -> Result<SymmetricIdeal> {
    let s = params.s as usize;
    if r == 0 {
        return SymmetricIdeal::new(s, vec![Partition::new(vec![0; s])?]);
    }
    let total = params.a as u64 * r as u64;
    let cap = params.b as u64 * r as u64;
    let parts = bounded_partitions(total, s, cap)
        .into_iter()
        .map(|v| Partition::new(v).expect("weakly increasing by construction"));
    SymmetricIdeal::new(s, parts)
}

/// Visits all `c`-subsets of `0..s` in lexicographic order.
pub(crate) fn for_each_subset(
    s: usize,
    c: usize,
    mut f: impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if c > s {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..c).collect();
    loop {
        f(&idx)?;
        let mut k = c;
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            if idx[k] < s - c + k {
                idx[k] += 1;
                for j in k + 1..c {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `∩_{c=1}^{s} ∩_{|S|=c} <z_i : i ∈ S>^{μ_a(S)}`, components with `μ_a(S) = 0`
/// replaced by the unit ideal.
pub fn regular_decomposition(mult: &Multiplicities) -> Result<MonomialIdeal> {
    decomposition_upto(mult, mult.s())
}

/// The same intersection restricted to `c ≤ c_max`.
pub fn decomposition_upto(mult: &Multiplicities, c_max: usize) -> Result<MonomialIdeal> {
    let s = mult.s();
    let mut acc = MonomialIdeal::unit(s);
    for c in 1..=c_max.min(s) {
        for_each_subset(s, c, |subset| {
            let t = mult.mu(subset);
            if t == 0 {
                return Ok(());
            }
            let comp = VarPowerIdeal::new(subset, t, s)?;
            if acc.gens().iter().all(|g| comp.contains_exponent(g)) {
                return Ok(());
            }
            acc = comp.intersect_with(&acc, DEFAULT_GEN_CAP)?;
            Ok(())
        })?;
    }
    Ok(acc)
}

/// Whether `I_{a+1}(z^{m + e_i}) : z_i = I_a(z^m)` (0-based `i`).
pub fn colon_step_check(mult: &Multiplicities, i: usize) -> Result<bool> {
    let s = mult.s();
    if i >= s {
        return Err(Error::Parameter(format!(
            "index {i} out of range for s={s}"
        )));
    }
    let mut bumped = mult.m.clone();
    bumped[i] += 1;
    let lifted = fold_generators(&Multiplicities::new(mult.a + 1, bumped)?);
    let left = lifted.colon_mono(&Exponent::variable(s, i))?;
    Ok(left == fold_generators(mult))
}

/// Whether the saturation of `I_a(z^m)` equals the decomposition restricted
/// to components with `c ≤ s - 1`.
pub fn saturation_decomposition_check(mult: &Multiplicities) -> Result<bool> {
    let sat = fold_generators(mult).saturate()?;
    Ok(sat == decomposition_upto(mult, mult.s() - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::minimalize;

    fn mult(a: u32, m: &[u32]) -> Multiplicities {
        Multiplicities::new(a, m.to_vec()).unwrap()
    }

    #[test]
    fn params_examples() {
        let p = uniform_params(5, 7, 2).unwrap();
        assert_eq!((p.c0, p.mu0, p.delta), (2, 1, 1));
        let p = uniform_params(4, 3, 2).unwrap();
        assert_eq!((p.c0, p.mu0, p.delta), (3, 1, -2));
        let p = uniform_params(4, 6, 2).unwrap();
        assert_eq!((p.c0, p.mu0, p.delta), (2, 2, 1));
        assert!(uniform_params(4, 9, 2).is_err());
        assert!(uniform_params(4, 0, 2).is_err());
    }

    #[test]
    fn params_flags() {
        let p = uniform_params(5, 7, 2).unwrap();
        assert!(p.in_range() && p.saturated_regime() && p.in_setting());
        assert!(p.positive_dim(2) && !p.positive_dim(1));
        let p = uniform_params(4, 2, 2).unwrap();
        assert!(p.in_range() && !p.in_setting() && !p.saturated_regime());
        assert!(!uniform_params(4, 1, 2).unwrap().in_range());
    }

    #[test]
    fn generator_counts() {
        assert_eq!(fold_generators(&mult(3, &[2, 2, 2, 2])).len(), 16);
        let g = fold_generators(&mult(4, &[1, 1, 1, 1]));
        assert_eq!(g.gens(), &[Exponent::ones(4)]);
        assert_eq!(
            fold_generators(&mult(1, &[3, 1, 2])),
            MonomialIdeal::maximal(3)
        );
    }

    #[test]
    fn power_closed_form_matches_products() {
        let m = mult(2, &[1, 1, 1]);
        let closed = fold_power(&m, 2).unwrap();
        assert_eq!(closed, fold_generators(&mult(4, &[2, 2, 2])));
        assert_eq!(closed, fold_generators(&m).power(2).unwrap());
        assert_eq!(fold_power(&m, 0).unwrap(), MonomialIdeal::unit(3));
    }

    #[test]
    fn uniform_member_examples() {
        let p = uniform_params(5, 7, 2).unwrap();
        assert!(!uniform_member(&[1, 1, 1, 1, 1], &p, 1));
        assert!(uniform_member(&[0, 3, 3, 3, 3], &p, 1));
        assert!(uniform_member(&[2, 2, 2, 2, 2], &p, 1));
        let i = fold_generators(&p.multiplicities());
        assert!(!i.member(&Exponent::ones(5)).unwrap());
        assert!(i.member(&Exponent::new(vec![0, 3, 3, 3, 3])).unwrap());
    }

    #[test]
    fn power_lambdas_expand_to_power() {
        let p = uniform_params(4, 3, 2).unwrap();
        for r in 1..=2 {
            let lam = uniform_power_lambdas(&p, r).unwrap();
            assert_eq!(lam.expand(), fold_power(&p.multiplicities(), r).unwrap());
        }
    }

    #[test]
    fn subsets_enumerated_in_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            Ok(())
        })
        .unwrap();
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
    }

    #[test]
    fn decomposition_examples() {
        let m = mult(2, &[1, 1, 1]);
        let want = minimalize(
            [[1, 1, 0], [1, 0, 1], [0, 1, 1]].map(|v| Exponent::new(v.to_vec())),
            3,
        )
        .unwrap();
        assert_eq!(regular_decomposition(&m).unwrap(), want);
        assert_eq!(fold_generators(&m), want);

        let m = mult(5, &[2, 1, 2]);
        assert_eq!(
            regular_decomposition(&m).unwrap(),
            MonomialIdeal::principal(Exponent::new(vec![2, 1, 2]))
        );
        let m = mult(7, &[2; 5]);
        assert_eq!(regular_decomposition(&m).unwrap(), fold_generators(&m));
    }

    #[test]
    fn colon_step_examples() {
        assert!(colon_step_check(&mult(2, &[1, 1, 1]), 2).unwrap());
        assert!(colon_step_check(&mult(6, &[2, 2, 2, 2]), 0).unwrap());
        assert!(colon_step_check(&mult(1, &[1]), 0).unwrap());
        assert!(colon_step_check(&mult(1, &[1]), 1).is_err());
    }

    #[test]
    fn saturation_decomposition_examples() {
        assert!(saturation_decomposition_check(&mult(3, &[2, 2])).unwrap());
        assert_eq!(
            fold_generators(&mult(3, &[2, 2])).saturate().unwrap(),
            MonomialIdeal::principal(Exponent::ones(2))
        );
        assert!(saturation_decomposition_check(&mult(7, &[2; 5])).unwrap());
        assert!(saturation_decomposition_check(&mult(1, &[1, 1])).unwrap());
        assert_eq!(
            decomposition_upto(&mult(1, &[1, 1]), 1).unwrap(),
            MonomialIdeal::unit(2)
        );
    }

    #[test]
    fn mu_values() {
        let m = mult(7, &[2; 5]);
        assert_eq!(m.mu(&[0]), 0);
        assert_eq!(m.mu(&[0, 1]), 1);
        assert_eq!(m.mu(&[0, 1, 2]), 3);
    }
}
