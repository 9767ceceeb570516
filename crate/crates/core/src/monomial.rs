//! Monomial ideals in `s` variables, represented by their minimal generators.
//!
//! A monomial `z^u` is stored as its exponent vector. Every ideal keeps its
//! generators as a divisibility antichain in canonical order (total degree
//! ascending, then lexicographically descending), so two ideals are equal
//! exactly when their generator lists are equal.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of intermediate generators produced by
/// products and intersections.
pub const DEFAULT_GEN_CAP: u64 = 1_000_000;

/// Exponent vector of a monomial `z_1^{u_1} ··· z_s^{u_s}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    /// The exponent of the monomial `1`.
    pub fn zeros(s: usize) -> Self {
        Exponent(vec![0; s])
    }

    /// The exponent of the variable `z_i` (0-based).
    pub fn variable(s: usize, i: usize) -> Self {
        let mut e = vec![0; s];
        e[i] = 1;
        Exponent(e)
    }

    /// The all-ones vector, i.e. `z_1 ··· z_s`.
    pub fn ones(s: usize) -> Self {
        Exponent(vec![1; s])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// Componentwise `self <= other`, i.e. `z^self` divides `z^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    /// `self - min(self, other)`, the exponent of `z^self / gcd(z^self, z^other)`.
    pub fn quotient_by_gcd(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a - a.min(b))
                .collect(),
        )
    }

    /// Monomial product with overflow checks.
    pub fn checked_mul(&self, other: &Exponent) -> Result<Exponent> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Exponent)
    }

    /// Canonical generator order: degree ascending, then lexicographically
    /// descending.
    pub fn canonical_cmp(&self, other: &Exponent) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }

    pub(crate) fn check_len(&self, s: usize) -> Result<()> {
        if self.0.len() == s {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: s,
                found: self.0.len(),
            })
        }
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    s: usize,
    gens: Vec<Exponent>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(s={}, {:?})", self.s, self.gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", Monomial(g))?;
        }
        write!(f, ">")
    }
}

/// Renders an exponent as `z1^2*z3`.
pub struct Monomial<'a>(pub &'a Exponent);

impl fmt::Display for Monomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.entries().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "z{}", i + 1)?;
            } else {
                write!(f, "z{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Reduces `gens` to its divisibility antichain in canonical order.
pub fn minimalize(gens: impl IntoIterator<Item = Exponent>, s: usize) -> Result<MonomialIdeal> {
    let mut all: Vec<Exponent> = gens.into_iter().collect();
    for g in &all {
        g.check_len(s)?;
    }
    all.sort_by(|a, b| a.canonical_cmp(b));
    all.dedup();
    Ok(MonomialIdeal {
        s,
        gens: antichain_of_sorted(all),
    })
}

// Input sorted by degree; a divisor always precedes its proper multiples.
fn antichain_of_sorted(sorted: Vec<Exponent>) -> Vec<Exponent> {
    let mut kept: Vec<Exponent> = Vec::with_capacity(sorted.len());
    for g in sorted {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn zero(s: usize) -> Self {
        MonomialIdeal {
            s,
            gens: Vec::new(),
        }
    }

    pub fn unit(s: usize) -> Self {
        MonomialIdeal {
            s,
            gens: vec![Exponent::zeros(s)],
        }
    }

    /// The homogeneous maximal ideal `<z_1, ..., z_s>`.
    pub fn maximal(s: usize) -> Self {
        MonomialIdeal {
            s,
            gens: (0..s).rev().map(|i| Exponent::variable(s, i)).collect(),
        }
        .recanonicalized()
    }

    pub fn principal(u: Exponent) -> Self {
        MonomialIdeal {
            s: u.len(),
            gens: vec![u],
        }
    }

    fn recanonicalized(mut self) -> Self {
        self.gens.sort_by(|a, b| a.canonical_cmp(b));
        self
    }

    /// Builds an ideal from generators already known to form an antichain.
    /// Only the canonical order is applied.
    pub(crate) fn from_antichain(s: usize, gens: Vec<Exponent>) -> Self {
        MonomialIdeal { s, gens }.recanonicalized()
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    fn check_same(&self, other: &MonomialIdeal) -> Result<()> {
        if self.s == other.s {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.s,
                found: other.s,
            })
        }
    }

    /// Least degree of a generator.
    pub fn alpha(&self) -> Result<u64> {
        self.gens
            .iter()
            .map(Exponent::degree)
            .min()
            .ok_or(Error::ZeroIdeal("alpha"))
    }

    pub fn member(&self, u: &Exponent) -> Result<bool> {
        u.check_len(self.s)?;
        Ok(self.gens.iter().any(|g| g.divides(u)))
    }

    /// True iff `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same(other)?;
        Ok(other
            .gens
            .iter()
            .all(|u| self.gens.iter().any(|g| g.divides(u))))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.intersect_capped(other, DEFAULT_GEN_CAP)
    }

    /// Intersection by pairwise lcm followed by minimalization. Generators
    /// already lying in the other ideal are taken as they are; their lcms with
    /// anything would be redundant.
    pub fn intersect_capped(&self, other: &MonomialIdeal, cap: u64) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let (in_other, out_other): (Vec<&Exponent>, Vec<&Exponent>) = self
            .gens
            .iter()
            .partition(|g| other.gens.iter().any(|h| h.divides(g)));
        let (in_self, out_self): (Vec<&Exponent>, Vec<&Exponent>) = other
            .gens
            .iter()
            .partition(|h| self.gens.iter().any(|g| g.divides(h)));
        let pairs = out_other.len() as u64 * out_self.len() as u64;
        if pairs > cap {
            return Err(Error::Resource {
                what: "intersection candidates",
                cap,
            });
        }
        let mut cand: Vec<Exponent> =
            Vec::with_capacity(in_other.len() + in_self.len() + pairs as usize);
        cand.extend(in_other.into_iter().cloned());
        cand.extend(in_self.into_iter().cloned());
        for g in &out_other {
            for h in &out_self {
                cand.push(g.lcm(h));
            }
        }
        minimalize(cand, self.s)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.product_capped(other, DEFAULT_GEN_CAP)
    }

    pub fn product_capped(&self, other: &MonomialIdeal, cap: u64) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let pairs = self.gens.len() as u64 * other.gens.len() as u64;
        if pairs > cap {
            return Err(Error::Resource {
                what: "product candidates",
                cap,
            });
        }
        let mut cand = Vec::with_capacity(pairs as usize);
        for g in &self.gens {
            for h in &other.gens {
                cand.push(g.checked_mul(h)?);
            }
        }
        minimalize(cand, self.s)
    }

    /// `I^r` by repeated generic products. `I^0` is the unit ideal.
    ///
    /// For fold-product ideals use [`crate::fold::fold_power`], which
    /// takes the closed form; this path serves as its oracle.
    pub fn power(&self, r: u32) -> Result<MonomialIdeal> {
        self.power_capped(r, DEFAULT_GEN_CAP)
    }

    pub fn power_capped(&self, r: u32, cap: u64) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.s);
        for _ in 0..r {
            acc = acc.product_capped(self, cap)?;
        }
        Ok(acc)
    }

    /// `I : z^u`.
    pub fn colon_mono(&self, u: &Exponent) -> Result<MonomialIdeal> {
        u.check_len(self.s)?;
        minimalize(self.gens.iter().map(|g| g.quotient_by_gcd(u)), self.s)
    }

    /// `I : J` as the intersection of `I : u` over generators `u` of `J`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let mut iter = other.gens.iter();
        let first = iter
            .next()
            .ok_or(Error::ZeroIdeal("colon by the zero ideal"))?;
        let mut acc = self.colon_mono(first)?;
        for u in iter {
            acc = acc.intersect(&self.colon_mono(u)?)?;
        }
        Ok(acc)
    }

    /// `I : z_i^∞`: drop the `i`-th coordinate of every generator.
    pub fn colon_variable_infinity(&self, i: usize) -> Result<MonomialIdeal> {
        if i >= self.s {
            return Err(Error::Parameter(format!(
                "variable index {i} out of range for s={}",
                self.s
            )));
        }
        minimalize(
            self.gens.iter().map(|g| {
                let mut e = g.clone().into_entries();
                e[i] = 0;
                Exponent(e)
            }),
            self.s,
        )
    }

    /// Saturation `I : m^∞` with respect to the maximal ideal, computed as
    /// the intersection of `I : z_i^∞` over all variables.
    pub fn saturate(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut acc = self.colon_variable_infinity(0)?;
        for i in 1..self.s {
            acc = acc.intersect(&self.colon_variable_infinity(i)?)?;
        }
        Ok(acc)
    }

    pub fn is_saturated(&self) -> Result<bool> {
        Ok(self.saturate()? == *self)
    }
}

/// The ideal `<z_i : i ∈ S>^t`, kept symbolically so membership is a single
/// sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarPowerIdeal {
    s: usize,
    support: Vec<usize>,
    t: u32,
}

impl VarPowerIdeal {
    /// `support` holds 0-based variable indices.
    pub fn new(support: &[usize], t: u32, s: usize) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::Parameter("empty variable set".into()));
        }
        if t == 0 {
            return Err(Error::Parameter("power must be positive".into()));
        }
        let mut support = support.to_vec();
        support.sort_unstable();
        support.dedup();
        if let Some(&i) = support.iter().find(|&&i| i >= s) {
            return Err(Error::Parameter(format!(
                "variable index {i} out of range for s={s}"
            )));
        }
        Ok(VarPowerIdeal { s, support, t })
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn power(&self) -> u32 {
        self.t
    }

    /// `u ∈ <z_i : i ∈ S>^t  ⟺  Σ_{i∈S} u_i ≥ t`.
    pub fn contains_exponent(&self, u: &Exponent) -> bool {
        self.support_degree(u) >= self.t as u64
    }

    fn support_degree(&self, u: &Exponent) -> u64 {
        self.support.iter().map(|&i| u.entries()[i] as u64).sum()
    }

    /// All monomials of degree `t` in the support variables.
    pub fn ideal(&self) -> MonomialIdeal {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.s];
        compositions(&self.support, self.t, 0, &mut cur, &mut out);
        MonomialIdeal::from_antichain(self.s, out)
    }

    /// `I ∩ <z_S>^t`. A generator `g` with support degree `d < t` is replaced
    /// by `g·w` for every monomial `w` of degree `t - d` in the support
    /// variables; these are exactly the minimal lcms of `g` with the
    /// generators of the power.
    pub fn intersect_with(&self, ideal: &MonomialIdeal, cap: u64) -> Result<MonomialIdeal> {
        if ideal.s() != self.s {
            return Err(Error::Dimension {
                expected: self.s,
                found: ideal.s(),
            });
        }
        let mut cand = Vec::new();
        for g in ideal.gens() {
            let d = self.support_degree(g);
            if d >= self.t as u64 {
                cand.push(g.clone());
                continue;
            }
            let mut cur = g.entries().to_vec();
            let mut lifts = Vec::new();
            add_compositions(
                &self.support,
                (self.t as u64 - d) as u32,
                0,
                &mut cur,
                &mut lifts,
            );
            cand.extend(lifts);
            if cand.len() as u64 > cap {
                return Err(Error::Resource {
                    what: "intersection candidates",
                    cap,
                });
            }
        }
        minimalize(cand, self.s)
    }
}

fn compositions(
    support: &[usize],
    left: u32,
    k: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<Exponent>,
) {
    if k + 1 == support.len() {
        cur[support[k]] = left;
        out.push(Exponent(cur.clone()));
        cur[support[k]] = 0;
        return;
    }
    for x in (0..=left).rev() {
        cur[support[k]] = x;
        compositions(support, left - x, k + 1, cur, out);
    }
    cur[support[k]] = 0;
}

fn add_compositions(
    support: &[usize],
    left: u32,
    k: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<Exponent>,
) {
    let i = support[k];
    let base = cur[i];
    if k + 1 == support.len() {
        cur[i] = base + left;
        out.push(Exponent(cur.clone()));
        cur[i] = base;
        return;
    }
    for x in 0..=left {
        cur[i] = base + x;
        add_compositions(support, left - x, k + 1, cur, out);
    }
    cur[i] = base;
}

/// Generators of `<z_i : i ∈ S>^t` as a plain ideal.
pub fn var_power_ideal(support: &[usize], t: u32, s: usize) -> Result<MonomialIdeal> {
    Ok(VarPowerIdeal::new(support, t, s)?.ideal())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> Exponent {
        Exponent::new(v.to_vec())
    }

    fn ideal(s: usize, gens: &[&[u32]]) -> MonomialIdeal {
        minimalize(gens.iter().map(|g| e(g)), s).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(2, &[&[1, 0], &[1, 1]]).gens(), &[e(&[1, 0])]);
        assert!(minimalize(Vec::new(), 3).unwrap().is_zero());
        let i = ideal(2, &[&[1, 2], &[2, 1]]);
        assert_eq!(i.gens(), &[e(&[2, 1]), e(&[1, 2])]);
    }

    #[test]
    fn minimalize_rejects_mixed_lengths() {
        let err = minimalize(vec![e(&[1, 0]), e(&[1, 0, 0])], 2).unwrap_err();
        assert!(matches!(
            err,
            Error::Dimension {
                expected: 2,
                found: 3
            }
        ));
    }

    #[test]
    fn membership() {
        let i = ideal(2, &[&[1, 1]]);
        assert!(i.member(&e(&[2, 1])).unwrap());
        assert!(!i.member(&e(&[2, 0])).unwrap());
        assert!(i.member(&e(&[1, 1, 1])).is_err());
    }

    #[test]
    fn containment() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 1]]);
        assert!(i.contains(&i).unwrap());
        assert!(i.contains(&MonomialIdeal::zero(3)).unwrap());
        assert!(!MonomialIdeal::zero(3).contains(&i).unwrap());
        assert!(MonomialIdeal::unit(3).contains(&i).unwrap());
    }

    #[test]
    fn intersections() {
        let z1 = ideal(2, &[&[1, 0]]);
        let z2 = ideal(2, &[&[0, 1]]);
        assert_eq!(z1.intersect(&z2).unwrap(), ideal(2, &[&[1, 1]]));
        assert_eq!(z1.intersect(&MonomialIdeal::unit(2)).unwrap(), z1);

        let a = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
        let c = ideal(3, &[&[0, 1, 0], &[0, 0, 1]]);
        let got = a.intersect(&b).unwrap().intersect(&c).unwrap();
        assert_eq!(got, ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]));
    }

    #[test]
    fn intersection_cap_is_enforced() {
        let a = var_power_ideal(&[0, 1], 3, 4).unwrap();
        let b = var_power_ideal(&[2, 3], 3, 4).unwrap();
        let err = a.intersect_capped(&b, 3).unwrap_err();
        assert!(matches!(err, Error::Resource { .. }));
    }

    #[test]
    fn powers() {
        let z1 = ideal(1, &[&[1]]);
        assert_eq!(z1.power(3).unwrap(), ideal(1, &[&[3]]));
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(i.power(1).unwrap(), i);
        assert_eq!(i.power(0).unwrap(), MonomialIdeal::unit(3));
    }

    #[test]
    fn colons() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.colon_mono(&e(&[0, 1])).unwrap(), ideal(2, &[&[1, 0]]));
        assert_eq!(i.colon_mono(&e(&[0, 0])).unwrap(), i);
        // I_3(z1^2 z2^2 z3) : z3 = I_2(z1^2 z2^2)
        let i3 = ideal(
            3,
            &[&[2, 1, 0], &[1, 2, 0], &[2, 0, 1], &[1, 1, 1], &[0, 2, 1]],
        );
        let i2 = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]);
        assert_eq!(i3.colon_mono(&e(&[0, 0, 1])).unwrap(), i2);
    }

    #[test]
    fn colon_by_ideals() {
        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(i.colon_ideal(&MonomialIdeal::unit(2)).unwrap(), i);
        assert_eq!(i.colon_ideal(&MonomialIdeal::maximal(2)).unwrap(), i);
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(
            j.colon_ideal(&ideal(2, &[&[0, 1]])).unwrap(),
            ideal(2, &[&[1, 0]])
        );
        assert!(matches!(
            i.colon_ideal(&MonomialIdeal::zero(2)),
            Err(Error::ZeroIdeal(_))
        ));
    }

    #[test]
    fn saturation_examples() {
        let i = ideal(2, &[&[1, 2], &[2, 1]]);
        assert_eq!(i.saturate().unwrap(), ideal(2, &[&[1, 1]]));
        let z1 = ideal(2, &[&[1, 0]]);
        assert_eq!(z1.saturate().unwrap(), z1);
        assert_eq!(
            MonomialIdeal::maximal(3).saturate().unwrap(),
            MonomialIdeal::unit(3)
        );
        assert!(MonomialIdeal::zero(2).saturate().unwrap().is_zero());
    }

    #[test]
    fn var_power_examples() {
        assert_eq!(
            var_power_ideal(&[0, 1], 1, 3).unwrap(),
            ideal(3, &[&[1, 0, 0], &[0, 1, 0]])
        );
        assert_eq!(var_power_ideal(&[0], 3, 2).unwrap(), ideal(2, &[&[3, 0]]));
        let v = VarPowerIdeal::new(&[0, 1], 3, 5).unwrap();
        assert!(v.contains_exponent(&e(&[0, 3, 3, 3, 3])));
        assert!(v.ideal().member(&e(&[0, 3, 3, 3, 3])).unwrap());
        assert!(VarPowerIdeal::new(&[], 1, 3).is_err());
        assert!(VarPowerIdeal::new(&[3], 1, 3).is_err());
    }

    #[test]
    fn var_power_intersection_matches_generic() {
        let base = ideal(3, &[&[2, 0, 0], &[0, 1, 1], &[1, 1, 0]]);
        let v = VarPowerIdeal::new(&[1, 2], 3, 3).unwrap();
        assert_eq!(
            v.intersect_with(&base, DEFAULT_GEN_CAP).unwrap(),
            base.intersect(&v.ideal()).unwrap()
        );
    }

    #[test]
    fn display_forms() {
        let i = ideal(3, &[&[2, 0, 1], &[0, 1, 0]]);
        assert_eq!(i.to_string(), "<z2, z1^2*z3>");
        assert_eq!(MonomialIdeal::unit(2).to_string(), "<1>");
    }
}
