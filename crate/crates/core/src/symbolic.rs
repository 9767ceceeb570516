//! Symbolic and `*`-symbolic powers of uniform fold-product ideals and the
//! invariants built on them.
//!
//! For `I = I_a(z_1^b ··· z_s^b)` in its saturated range (`δ ≥ 1`) the
//! ordinary symbolic power is cut out by prefix-sum thresholds
//!
//! ```text
//! z^λ ∈ I^{(m)}  ⟺  |λ_{≤c}| ≥ m(μ0 + b(c - c0))   for c0 ≤ c ≤ s - δ
//! ```
//!
//! on the sorted exponent `λ`, while the `*`-symbolic power (minimal primes
//! only) is the single star-configuration power `I_{c0}^{(m μ0)}`.
//! Everything here is exact: counts are big integers and constants are
//! reduced fractions.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fold::{uniform_member, uniform_power_lambdas, UniformParams};
use crate::partition::{
    bounded_partitions, minimal_partitions, Partition, SymmetricIdeal, DEFAULT_NODE_CAP,
};
use crate::resolution::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Ordinary,
    Star,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Ordinary => "ordinary",
            Flavor::Star => "star",
        })
    }
}

/// A validated request for `I^{(m)}` or `I^{(m)_*}`.
///
/// `n` is the ambient projective dimension, `s - 1` unless overridden. The
/// ordinary flavor needs `δ ≥ 1` and `δ ≥ s - n`; the star flavor needs
/// `b(s - n) + 1 ≤ a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicSpec {
    pub params: UniformParams,
    pub m: u32,
    pub flavor: Flavor,
    pub n: u32,
}

impl SymbolicSpec {
    pub fn new(params: UniformParams, m: u32, flavor: Flavor) -> Result<Self> {
        let n = params.s.saturating_sub(1);
        Self::with_ambient(params, m, flavor, n)
    }

    pub fn with_ambient(params: UniformParams, m: u32, flavor: Flavor, n: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Parameter("m must be positive".into()));
        }
        check_regime(&params, flavor, n)?;
        Ok(SymbolicSpec {
            params,
            m,
            flavor,
            n,
        })
    }
}

fn check_regime(params: &UniformParams, flavor: Flavor, n: u32) -> Result<()> {
    let UniformParams { s, a, b, delta, .. } = *params;
    if n == 0 || n >= s {
        return Err(Error::Regime(format!(
            "ambient dimension needs 1 <= n <= s-1, got n={n}, s={s}"
        )));
    }
    match flavor {
        Flavor::Ordinary => {
            if delta < 1 {
                return Err(Error::Regime(format!(
                    "ordinary symbolic powers need a > (b-1)s+1 (delta >= 1); got delta={delta}"
                )));
            }
            if delta < (s - n) as i64 {
                return Err(Error::Regime(format!(
                    "ordinary symbolic powers need delta >= s-n = {}; got delta={delta}",
                    s - n
                )));
            }
        }
        Flavor::Star => {
            if !params.positive_dim(n) {
                return Err(Error::Regime(format!(
                    "star symbolic powers need b(s-n)+1 <= a; got a={a}, b={b}, s={s}, n={n}"
                )));
            }
        }
    }
    Ok(())
}

/// An exact reduced fraction, rendered `p/q` even when `q = 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalValue(pub BigRational);

impl RationalValue {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        RationalValue(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        RationalValue(BigRational::from_integer(n.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for RationalValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `I_c^{(m)} = ∩_{|S| = c} <z_i : i ∈ S>^m`: its minimal partitions put a
/// partition `μ` of `m` into the first `c` slots and repeat `μ_c` after.
pub fn star_config_symbolic(s: usize, c: usize, m: u32) -> Result<SymmetricIdeal> {
    if c == 0 || c > s {
        return Err(Error::Parameter(format!(
            "need 1 <= c <= s, got c={c}, s={s}"
        )));
    }
    let lambdas = bounded_partitions(m as u64, c, m as u64)
        .into_iter()
        .map(|mut mu| {
            let top = *mu.last().unwrap_or(&0);
            mu.resize(s, top);
            Partition::new(mu)
        })
        .collect::<Result<Vec<_>>>()?;
    SymmetricIdeal::new(s, lambdas)
}

/// The threshold `m(μ0 + b(c - c0))` for each `c` in `c0..=s-δ`.
pub fn ordinary_thresholds(params: &UniformParams, m: u32) -> Vec<(usize, u64)> {
    let hi = (params.s as i64 - params.delta).max(0) as u32;
    (params.c0..=hi)
        .map(|c| (c as usize, m as u64 * params.component_power(c) as u64))
        .collect()
}

/// Whether a sorted exponent meets every ordinary threshold.
pub fn ordinary_member(lambda: &[u32], thresholds: &[(usize, u64)]) -> bool {
    let mut prefix = 0u64;
    let mut k = 0usize;
    for &(c, t) in thresholds {
        while k < c {
            prefix += lambda[k] as u64;
            k += 1;
        }
        if prefix < t {
            return false;
        }
    }
    true
}

/// `Λ(I^{(m)})` for the ordinary flavor. Minimal elements have every part
/// at most `m b`, which bounds the search.
pub fn uniform_symbolic_power(spec: &SymbolicSpec) -> Result<SymmetricIdeal> {
    if spec.flavor != Flavor::Ordinary {
        return Err(Error::Parameter(
            "uniform_symbolic_power takes the ordinary flavor".into(),
        ));
    }
    let params = &spec.params;
    let thresholds = ordinary_thresholds(params, spec.m);
    let cap = spec.m.checked_mul(params.b).ok_or(Error::Overflow)?;
    let bound = Partition::new(vec![cap; params.s as usize])?;
    let lambdas = minimal_partitions(
        |l| ordinary_member(l, &thresholds),
        &bound,
        DEFAULT_NODE_CAP,
    )?;
    SymmetricIdeal::new(params.s as usize, lambdas)
}

/// `I^{(m)_*} = I_{c0}^{(m μ0)}`.
pub fn star_symbolic_power(spec: &SymbolicSpec) -> Result<SymmetricIdeal> {
    if spec.flavor != Flavor::Star {
        return Err(Error::Parameter(
            "star_symbolic_power takes the star flavor".into(),
        ));
    }
    let p = &spec.params;
    let t = spec.m.checked_mul(p.mu0).ok_or(Error::Overflow)?;
    star_config_symbolic(p.s as usize, p.c0 as usize, t)
}

/// The symbolic power of the requested flavor.
pub fn symbolic_power(spec: &SymbolicSpec) -> Result<SymmetricIdeal> {
    match spec.flavor {
        Flavor::Ordinary => uniform_symbolic_power(spec),
        Flavor::Star => star_symbolic_power(spec),
    }
}

/// Least generator degree.
pub fn alpha(ideal: &SymmetricIdeal) -> Result<u64> {
    ideal.alpha()
}

fn ceil_div(x: u64, y: u64) -> u64 {
    x.div_ceil(y)
}

/// `α` of the symbolic power without enumerating it.
///
/// Ordinary: `m T + ceil(m T / (s - δ)) δ` with `T = μ0 + b(s - δ - c0)`.
/// Star: `t + (s - c0) ceil(t / c0)` with `t = m μ0`.
pub fn alpha_closed(spec: &SymbolicSpec) -> u64 {
    let p = &spec.params;
    let m = spec.m as u64;
    match spec.flavor {
        Flavor::Ordinary => {
            let top = (p.s as i64 - p.delta) as u64;
            let t = m * ordinary_t1(p);
            t + ceil_div(t, top) * p.delta as u64
        }
        Flavor::Star => {
            let t = m * p.mu0 as u64;
            t + (p.s - p.c0) as u64 * ceil_div(t, p.c0 as u64)
        }
    }
}

fn ordinary_t1(p: &UniformParams) -> u64 {
    p.mu0 as u64 + p.b as u64 * ((p.s as i64 - p.delta) as u64 - p.c0 as u64)
}

/// Waldschmidt constant `lim α(I^{(m)})/m`.
///
/// Ordinary: `(μ0 + b(s - δ - c0)) s / (s - δ)`. Star: `μ0 s / c0`.
pub fn waldschmidt(params: &UniformParams, flavor: Flavor) -> Result<RationalValue> {
    check_regime(params, flavor, params.s.saturating_sub(1))?;
    Ok(match flavor {
        Flavor::Ordinary => {
            let top = params.s as i64 - params.delta;
            RationalValue::new(ordinary_t1(params) * params.s as u64, top)
        }
        Flavor::Star => RationalValue::new(params.mu0 * params.s, params.c0),
    })
}

/// The sequence `α(I^{(m)})/m` for `m ≤ m_max` measured against the closed
/// Waldschmidt constant.
#[derive(Clone, Debug, Serialize)]
pub struct WaldschmidtCheck {
    pub closed: RationalValue,
    pub ratios: Vec<(u32, RationalValue)>,
    /// Every ratio is at least the constant.
    pub bounded_below: bool,
    /// Every gap is at most `s / m`.
    pub gap_within_bound: bool,
    /// `α` from enumeration matches the closed form at every `m`.
    pub alpha_closed_agrees: bool,
}

impl WaldschmidtCheck {
    pub fn passed(&self) -> bool {
        self.bounded_below && self.gap_within_bound && self.alpha_closed_agrees
    }
}

pub fn waldschmidt_check(
    params: &UniformParams,
    flavor: Flavor,
    m_max: u32,
) -> Result<WaldschmidtCheck> {
    let closed = waldschmidt(params, flavor)?;
    let mut ratios = Vec::new();
    let mut bounded_below = true;
    let mut gap_within_bound = true;
    let mut alpha_closed_agrees = true;
    for m in 1..=m_max {
        let spec = SymbolicSpec::new(*params, m, flavor)?;
        let a = alpha(&symbolic_power(&spec)?)?;
        alpha_closed_agrees &= a == alpha_closed(&spec);
        let ratio = RationalValue::new(a, m);
        let gap = &ratio.0 - &closed.0;
        bounded_below &= gap >= BigRational::zero();
        gap_within_bound &= gap <= BigRational::new(params.s.into(), m.into());
        ratios.push((m, ratio));
    }
    Ok(WaldschmidtCheck {
        closed,
        ratios,
        bounded_below,
        gap_within_bound,
        alpha_closed_agrees,
    })
}

/// `I^{(m)} ⊆ I^r` (or the star analogue), tested generator by generator
/// with `Σ min(λ_i, b r) ≥ a r`.
pub fn containment(spec: &SymbolicSpec, r: u32) -> Result<bool> {
    if r == 0 {
        return Err(Error::Parameter("r must be positive".into()));
    }
    let sym = symbolic_power(spec)?;
    Ok(contained_in_power(&sym, &spec.params, r))
}

fn contained_in_power(sym: &SymmetricIdeal, params: &UniformParams, r: u32) -> bool {
    sym.lambdas()
        .iter()
        .all(|l| uniform_member(l.entries(), params, r))
}

/// Closed resurgence.
///
/// Ordinary: `a(s - δ) / (s(μ0 + b(s - δ - c0)))`. Star: `a c0 / (μ0 s)`.
pub fn resurgence_closed(params: &UniformParams, flavor: Flavor) -> Result<RationalValue> {
    check_regime(params, flavor, params.s.saturating_sub(1))?;
    let (a, s) = (params.a as u64, params.s as u64);
    Ok(match flavor {
        Flavor::Ordinary => {
            let top = (params.s as i64 - params.delta) as u64;
            RationalValue::new(a * top, s * ordinary_t1(params))
        }
        Flavor::Star => RationalValue::new(a * params.c0 as u64, params.mu0 as u64 * s),
    })
}

/// A non-containment `I^{(m)} ⊄ I^r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub m: u32,
    pub r: u32,
    pub ratio: RationalValue,
}

/// Every non-containment with `m ≤ m_max`, `r ≤ r_max`.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub closed: RationalValue,
    pub m_max: u32,
    pub r_max: u32,
    pub max_ratio: Option<RationalValue>,
    pub witnesses: Vec<Witness>,
}

impl SearchReport {
    /// No witness reaches the closed value.
    pub fn sound(&self) -> bool {
        self.witnesses.iter().all(|w| w.ratio < self.closed)
    }

    /// Some witness lies within `gap` of the closed value.
    pub fn approaches(&self, gap: &BigRational) -> bool {
        self.max_ratio
            .as_ref()
            .is_some_and(|r| r.0 >= &self.closed.0 - gap)
    }
}

pub fn resurgence_search(
    params: &UniformParams,
    flavor: Flavor,
    m_max: u32,
    r_max: u32,
) -> Result<SearchReport> {
    if m_max == 0 || r_max == 0 {
        return Err(Error::Parameter("search bounds must be at least 1".into()));
    }
    let closed = resurgence_closed(params, flavor)?;
    let per_m: Vec<Vec<Witness>> = (1..=m_max)
        .into_par_iter()
        .map(|m| -> Result<Vec<Witness>> {
            let sym = symbolic_power(&SymbolicSpec::new(*params, m, flavor)?)?;
            Ok((1..=r_max)
                .filter(|&r| !contained_in_power(&sym, params, r))
                .map(|r| Witness {
                    m,
                    r,
                    ratio: RationalValue::new(m, r),
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let witnesses: Vec<Witness> = per_m.into_iter().flatten().collect();
    let max_ratio = witnesses.iter().map(|w| w.ratio.clone()).max();
    Ok(SearchReport {
        closed,
        m_max,
        r_max,
        max_ratio,
        witnesses,
    })
}

/// Number of solutions of `b_1 x_1 + ··· + b_h x_h = target` in positive
/// integers.
pub fn diophantine_count(coeffs: &[u64], target: u64) -> BigUint {
    let base: u64 = coeffs.iter().sum();
    if coeffs.is_empty() || base > target {
        return BigUint::zero();
    }
    let rest = (target - base) as usize;
    let mut ways = vec![BigUint::zero(); rest + 1];
    ways[0] = BigUint::one();
    for &c in coeffs {
        let c = c as usize;
        for v in c..=rest {
            let prev = ways[v - c].clone();
            ways[v] += prev;
        }
    }
    ways.swap_remove(rest)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefectMode {
    Formula,
    Oracle,
}

/// `sdefect(I, m)` (ordinary) or `sdefect_*(I, m)` (star): the number of
/// minimal generators of the symbolic power that are not in `I^m`.
pub fn sdefect(spec: &SymbolicSpec, mode: DefectMode) -> Result<BigUint> {
    match mode {
        DefectMode::Oracle => Ok(sdefect_oracle(spec)?.0),
        DefectMode::Formula => match spec.flavor {
            Flavor::Ordinary => sdefect_formula_ordinary(spec),
            Flavor::Star => Ok(sdefect_formula_star(spec)),
        },
    }
}

/// Count and partitions of the generators of the symbolic power outside
/// `I^m`.
pub fn sdefect_oracle(spec: &SymbolicSpec) -> Result<(BigUint, Vec<Partition>)> {
    let sym = symbolic_power(spec)?;
    let survivors: Vec<Partition> = sym
        .lambdas()
        .iter()
        .filter(|l| !uniform_member(l.entries(), &spec.params, spec.m))
        .cloned()
        .collect();
    let count = survivors.iter().map(Partition::orbit_size).sum();
    Ok((count, survivors))
}

/// Partitions with `|λ_{≤s-δ}| = m(μ0 + b(s - δ - c0))`, the tail
/// `λ_{s-δ} = ··· = λ_s < m b`, and `λ ∈ I^{(m)}`.
pub fn ordinary_defect_partitions(spec: &SymbolicSpec) -> Result<Vec<Partition>> {
    if spec.flavor != Flavor::Ordinary {
        return Err(Error::Parameter(
            "ordinary defect partitions need the ordinary flavor".into(),
        ));
    }
    let p = &spec.params;
    let s = p.s as usize;
    let head = (p.s as i64 - p.delta) as usize;
    let total = spec.m as u64 * ordinary_t1(p);
    let below = (spec.m as u64 * p.b as u64).saturating_sub(1);
    let thresholds = ordinary_thresholds(p, spec.m);
    let mut out: Vec<Partition> = bounded_partitions(total, head, below)
        .into_iter()
        .map(|mut v| {
            let top = *v.last().unwrap_or(&0);
            v.resize(s, top);
            v
        })
        .filter(|v| ordinary_member(v, &thresholds))
        .map(Partition::new)
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.to_exponent().canonical_cmp(&b.to_exponent()));
    Ok(out)
}

fn sdefect_formula_ordinary(spec: &SymbolicSpec) -> Result<BigUint> {
    Ok(ordinary_defect_partitions(spec)?
        .iter()
        .map(Partition::orbit_size)
        .sum())
}

/// `Σ_{∅ ≠ B ⊆ [c0]} |S_B| C(s, c0 - b_h) ∏_{t=2}^{h} C(s - c0 + b_t, b_t - b_{t-1})`,
/// less `C(s, c0 - 1)` when `b` divides `a`. `S_B` is the set of positive
/// solutions of `Σ b_t x_t = m μ0`.
fn sdefect_formula_star(spec: &SymbolicSpec) -> BigUint {
    let p = &spec.params;
    let (s, c0) = (p.s as i64, p.c0 as i64);
    let target = spec.m as u64 * p.mu0 as u64;
    let mut total = BigUint::zero();
    for mask in 1u64..(1u64 << c0) {
        let b: Vec<u64> = (0..c0 as u64)
            .filter(|t| mask >> t & 1 == 1)
            .map(|t| t + 1)
            .collect();
        let count = diophantine_count(&b, target);
        if count.is_zero() {
            continue;
        }
        let bh = *b.last().unwrap() as i64;
        let mut term = count * binomial(s, c0 - bh);
        for w in b.windows(2) {
            let (lo, hi) = (w[0] as i64, w[1] as i64);
            term *= binomial(s - c0 + hi, hi - lo);
        }
        total += term;
    }
    if p.a_multiple_of_b() {
        total -= binomial(s, c0 - 1);
    }
    total
}

/// Whether `I^m ⊄ 𝔪 I^{(m)_*}`.
pub fn power_vs_star_check(params: &UniformParams, m: u32) -> Result<bool> {
    let star = star_symbolic_power(&SymbolicSpec::new(*params, m, Flavor::Star)?)?;
    let shifted = times_maximal(&star)?;
    let power = uniform_power_lambdas(params, m)?;
    Ok(!shifted.contains(&power))
}

/// `𝔪 J` for a symmetric `J`.
pub fn times_maximal(ideal: &SymmetricIdeal) -> Result<SymmetricIdeal> {
    let s = ideal.s();
    let mut lambdas = Vec::new();
    for l in ideal.lambdas() {
        for k in 0..s {
            let mut v = l.entries().to_vec();
            v[k] = v[k].checked_add(1).ok_or(Error::Overflow)?;
            v.sort_unstable();
            lambdas.push(Partition::new(v)?);
        }
    }
    SymmetricIdeal::new(s, lambdas)
}
