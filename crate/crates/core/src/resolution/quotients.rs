use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use super::{binomial, BettiTable, Convention};
use crate::error::{Error, Result};
use crate::monomial::{Exponent, MonomialIdeal};

/// A generator order together with the sizes `r_k` of the successive colon
/// ideals `<g_1, …, g_{k-1}> : g_k`.
///
/// `verified` holds only when every colon is generated by variables; then
/// `r_k` is the number of those variables. On failure `failed_at` is the
/// first offending position and `r` is truncated there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientOrder {
    pub gens: Vec<Exponent>,
    pub r: Vec<usize>,
    pub verified: bool,
    pub failed_at: Option<usize>,
}

/// Checks the given order for linear quotients.
///
/// The colon `<g_1, …, g_{k-1}> : g_k` is generated by the monomials
/// `g_j / gcd(g_j, g_k)`. It is generated by variables exactly when each of
/// those monomials is divisible by one of the degree-one ones, so no
/// minimalization is needed.
pub fn quotient_order(gens: Vec<Exponent>) -> QuotientOrder {
    let s = gens.first().map_or(0, Exponent::len);
    let mut r = Vec::with_capacity(gens.len());
    let mut linear = vec![false; s];
    let mut quotients: Vec<Vec<u32>> = Vec::new();
    for k in 0..gens.len() {
        linear.iter_mut().for_each(|x| *x = false);
        quotients.clear();
        let gk = gens[k].entries();
        for g in &gens[..k] {
            let q: Vec<u32> = g
                .entries()
                .iter()
                .zip(gk)
                .map(|(&x, &y)| x.saturating_sub(y))
                .collect();
            let mut support = q.iter().enumerate().filter(|(_, &e)| e > 0);
            let first = support.next();
            match (first, support.next()) {
                (Some((v, &1)), None) => linear[v] = true,
                _ => quotients.push(q),
            }
        }
        let ok = quotients
            .iter()
            .all(|q| q.iter().zip(&linear).any(|(&e, &l)| e > 0 && l));
        if !ok {
            return QuotientOrder {
                gens,
                r,
                verified: false,
                failed_at: Some(k),
            };
        }
        r.push(linear.iter().filter(|&&l| l).count());
    }
    QuotientOrder {
        gens,
        r,
        verified: true,
        failed_at: None,
    }
}

impl QuotientOrder {
    /// `β_{i, deg g_k + i - 1}(R/I) = Σ_k C(r_k, i - 1)` for `i ≥ 1`, plus
    /// `β_{0,0} = 1`.
    pub fn betti(&self) -> Result<BettiTable> {
        if !self.verified {
            return Err(Error::NoLinearQuotients {
                index: self.failed_at.unwrap_or(0),
            });
        }
        let mut table = BettiTable::new(Convention::Quotient);
        table.add(0, 0, 1u32.into());
        for (g, &rk) in self.gens.iter().zip(&self.r) {
            let deg = g.degree();
            for t in 0..=rk {
                table.add(t + 1, deg + t as u64, binomial(rk as i64, t as i64));
            }
        }
        Ok(table)
    }
}

/// Default order: degree ascending, then by sorted exponent (the orbit
/// representative) lexicographically descending, then by exponent
/// lexicographically descending. Within a degree this lists orbits with
/// larger smallest parts first.
pub fn standard_order(ideal: &MonomialIdeal) -> Vec<Exponent> {
    let mut gens = ideal.gens().to_vec();
    gens.sort_by_cached_key(|g| {
        let mut rep = g.entries().to_vec();
        rep.sort_unstable();
        (g.degree(), Reverse(rep), Reverse(g.entries().to_vec()))
    });
    gens
}

/// The resolution read off a verified linear-quotients order, using
/// [`standard_order`]. An unverified order yields
/// [`Error::NoLinearQuotients`], never a table.
pub fn linear_quotients_resolution(ideal: &MonomialIdeal) -> Result<(QuotientOrder, BettiTable)> {
    let order = quotient_order(standard_order(ideal));
    let table = order.betti()?;
    Ok((order, table))
}

/// Searches all degree-nondecreasing generator orders for linear quotients.
/// Only runs when `s · |gens| ≤ 12`.
pub fn search_linear_quotients_order(ideal: &MonomialIdeal) -> Result<Option<QuotientOrder>> {
    const LIMIT: usize = 12;
    if ideal.s() * ideal.len() > LIMIT {
        return Err(Error::Resource {
            what: "exhaustive order search (s * gens)",
            cap: LIMIT as u64,
        });
    }
    let gens = ideal.gens().to_vec();
    let mut used = vec![false; gens.len()];
    let mut chosen = Vec::with_capacity(gens.len());
    Ok(extend_order(&gens, &mut used, &mut chosen))
}

fn extend_order(
    gens: &[Exponent],
    used: &mut [bool],
    chosen: &mut Vec<Exponent>,
) -> Option<QuotientOrder> {
    if chosen.len() == gens.len() {
        let order = quotient_order(chosen.clone());
        return order.verified.then_some(order);
    }
    let last_deg = chosen.last().map_or(0, Exponent::degree);
    for k in 0..gens.len() {
        if used[k] || gens[k].degree() < last_deg {
            continue;
        }
        chosen.push(gens[k].clone());
        // prune as soon as the prefix fails
        if quotient_order(chosen.clone()).verified {
            used[k] = true;
            if let Some(found) = extend_order(gens, used, chosen) {
                return Some(found);
            }
            used[k] = false;
        }
        chosen.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fold::{fold_generators, Multiplicities};
    use crate::monomial::minimalize;

    fn ideal(s: usize, gens: &[&[u32]]) -> MonomialIdeal {
        minimalize(gens.iter().map(|g| Exponent::new(g.to_vec())), s).unwrap()
    }

    #[test]
    fn squarefree_quadrics_in_three_variables() {
        let i = fold_generators(&Multiplicities::new(2, vec![1, 1, 1]).unwrap());
        let (order, table) = linear_quotients_resolution(&i).unwrap();
        assert!(order.verified);
        assert_eq!(order.r, vec![0, 1, 1]);
        assert_eq!(table.total(1), 3u32.into());
        assert_eq!(table.total(2), 2u32.into());
        assert_eq!(table.projdim(), Some(2));
    }

    #[test]
    fn principal_ideal() {
        let i = ideal(3, &[&[1, 2, 0]]);
        let (order, table) = linear_quotients_resolution(&i).unwrap();
        assert_eq!(order.r, vec![0]);
        assert_eq!(table.len(), 2);
        assert_eq!(table.get(1, 3), 1u32.into());
    }

    #[test]
    fn worked_table_by_quotients() {
        let i = fold_generators(&Multiplicities::uniform(4, 3, 2).unwrap());
        let (order, table) = linear_quotients_resolution(&i).unwrap();
        assert!(order.verified);
        let want = [
            (0usize, 0u64, 1u32),
            (1, 3, 16),
            (2, 4, 33),
            (3, 5, 24),
            (4, 6, 6),
        ];
        let got: Vec<(usize, u64, u32)> = table
            .entries()
            .map(|(i, j, v)| (i, j, v.try_into().unwrap()))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn failure_is_reported_not_tabulated() {
        // <z1 z2, z3 z4> has a non-linear colon in every order
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let order = quotient_order(i.gens().to_vec());
        assert!(!order.verified);
        assert_eq!(order.failed_at, Some(1));
        assert_eq!(
            linear_quotients_resolution(&i).unwrap_err(),
            Error::NoLinearQuotients { index: 1 }
        );
        assert_eq!(search_linear_quotients_order(&i).unwrap(), None);
    }

    #[test]
    fn search_rescues_a_bad_default_order() {
        let i = ideal(3, &[&[1, 0, 1], &[0, 2, 0], &[0, 1, 1]]);
        let lexicographic = quotient_order(i.gens().to_vec());
        assert!(!lexicographic.verified);
        let found = search_linear_quotients_order(&i)
            .unwrap()
            .expect("has linear quotients");
        assert!(found.verified);
        let t = found.betti().unwrap();
        assert_eq!(t.total(1), 3u32.into());
        assert_eq!(t.total(2), 2u32.into());
    }

    #[test]
    fn standard_order_handles_mixed_degrees() {
        let params = crate::fold::uniform_params(5, 7, 2).unwrap();
        let spec = crate::symbolic::SymbolicSpec::new(params, 2, crate::symbolic::Flavor::Ordinary)
            .unwrap();
        let i = crate::symbolic::uniform_symbolic_power(&spec)
            .unwrap()
            .expand();
        assert!(!quotient_order(i.gens().to_vec()).verified);
        let (order, _) = linear_quotients_resolution(&i).unwrap();
        assert!(order.verified);
    }

    #[test]
    fn search_respects_its_limit() {
        let i = fold_generators(&Multiplicities::uniform(4, 3, 2).unwrap());
        assert!(matches!(
            search_linear_quotients_order(&i),
            Err(Error::Resource { .. })
        ));
    }
}
