use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{BettiTable, Convention};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::partition::{multinomial, SymmetricIdeal};

/// Largest differential matrix (rows times columns) the oracle will reduce.
pub const DEFAULT_MATRIX_CAP: u64 = 40_000;
/// Largest number of multidegrees the oracle will visit.
pub const DEFAULT_MULTIDEGREE_CAP: u64 = 10_000_000;

/// `β_{i,j}(R/I)` for `i ≤ max_i` from the homology of the Koszul complex
/// `K(z_1, …, z_s; R/I)`, one multidegree at a time.
///
/// In multidegree `α` the chain group `K_i` has basis `e_F ⊗ z^{α-F}` over
/// the `i`-subsets `F ⊆ supp(α)` with `z^{α-F} ∉ I`. Only `α ≤ lcm(I)` can
/// carry homology. Ranks are computed exactly by fraction-free elimination.
/// For ideals fixed by permuting the variables only sorted `α` are visited,
/// each weighted by the size of its orbit.
pub fn betti_koszul_oracle(ideal: &MonomialIdeal, max_i: usize) -> Result<BettiTable> {
    betti_koszul_oracle_capped(ideal, max_i, DEFAULT_MATRIX_CAP, DEFAULT_MULTIDEGREE_CAP)
}

pub fn betti_koszul_oracle_capped(
    ideal: &MonomialIdeal,
    max_i: usize,
    matrix_cap: u64,
    multidegree_cap: u64,
) -> Result<BettiTable> {
    let s = ideal.s();
    let mut table = BettiTable::new(Convention::Quotient);
    if ideal.is_zero() {
        table.add(0, 0, BigUint::one());
        return Ok(table);
    }
    let mut top = vec![0u32; s];
    for g in ideal.gens() {
        for (t, &x) in top.iter_mut().zip(g.entries()) {
            *t = (*t).max(x);
        }
    }

    let symmetric = SymmetricIdeal::from_ideal(ideal).ok();
    let member = |v: &[u32]| -> bool {
        match &symmetric {
            Some(sym) => {
                let mut w = v.to_vec();
                w.sort_unstable();
                sym.contains_partition(&w)
            }
            None => ideal
                .gens()
                .iter()
                .any(|g| g.entries().iter().zip(v).all(|(a, b)| a <= b)),
        }
    };

    let mut visited = 0u64;
    let mut alpha = vec![0u32; s];
    let ctx = Strand {
        member: &member,
        max_i: max_i.min(s),
        matrix_cap,
    };
    let mut visit = |alpha: &[u32], weight: BigUint| -> Result<()> {
        visited += 1;
        if visited > multidegree_cap {
            return Err(Error::Resource {
                what: "Koszul multidegrees",
                cap: multidegree_cap,
            });
        }
        let degree: u64 = alpha.iter().map(|&x| x as u64).sum();
        // Off I (and away from 0) the strand is a full Koszul complex, so exact.
        if degree > 0 && !member(alpha) {
            return Ok(());
        }
        for (i, h) in ctx.homology(alpha)?.into_iter().enumerate() {
            if h > 0 {
                table.add(i, degree, &weight * BigUint::from(h));
            }
        }
        Ok(())
    };

    if symmetric.is_some() {
        let bound = top.iter().copied().max().unwrap_or(0);
        sorted_box(&mut alpha, 0, 0, bound, &mut |a| visit(a, multinomial(a)))?;
    } else {
        full_box(&mut alpha, 0, &top, &mut |a| visit(a, BigUint::one()))?;
    }
    Ok(table)
}

fn sorted_box(
    cur: &mut Vec<u32>,
    k: usize,
    lo: u32,
    hi: u32,
    f: &mut dyn FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    if k == cur.len() {
        return f(cur);
    }
    for x in lo..=hi {
        cur[k] = x;
        sorted_box(cur, k + 1, x, hi, f)?;
    }
    cur[k] = 0;
    Ok(())
}

fn full_box(
    cur: &mut Vec<u32>,
    k: usize,
    top: &[u32],
    f: &mut dyn FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    if k == cur.len() {
        return f(cur);
    }
    for x in 0..=top[k] {
        cur[k] = x;
        full_box(cur, k + 1, top, f)?;
    }
    cur[k] = 0;
    Ok(())
}

struct Strand<'a> {
    member: &'a dyn Fn(&[u32]) -> bool,
    max_i: usize,
    matrix_cap: u64,
}

impl Strand<'_> {
    /// `dim H_i` at multidegree `alpha` for `i = 0..=max_i`.
    fn homology(&self, alpha: &[u32]) -> Result<Vec<u64>> {
        let support: Vec<usize> = (0..alpha.len()).filter(|&j| alpha[j] > 0).collect();
        let t = support.len();
        // basis[i]: subsets (as bitmasks over `support`) of size i with z^{α-F} ∉ I
        let mut basis: Vec<Vec<u32>> = vec![Vec::new(); t + 1];
        let mut shifted = alpha.to_vec();
        for mask in 0u32..(1u32 << t) {
            shifted.copy_from_slice(alpha);
            for (bit, &j) in support.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    shifted[j] -= 1;
                }
            }
            if !(self.member)(&shifted) {
                basis[mask.count_ones() as usize].push(mask);
            }
        }

        let top = self.max_i.min(t);
        // rank[i] = rank of d_i : K_i -> K_{i-1}
        let mut rank = vec![0u64; t + 2];
        for i in 1..=(top + 1).min(t) {
            rank[i] = self.differential_rank(&basis[i], &basis[i - 1])?;
        }
        Ok((0..=self.max_i)
            .map(|i| {
                if i > t {
                    0
                } else {
                    basis[i].len() as u64 - rank[i] - rank[i + 1]
                }
            })
            .collect())
    }

    fn differential_rank(&self, cols: &[u32], rows: &[u32]) -> Result<u64> {
        if cols.is_empty() || rows.is_empty() {
            return Ok(0);
        }
        let size = cols.len() as u64 * rows.len() as u64;
        if size > self.matrix_cap {
            return Err(Error::Resource {
                what: "Koszul matrix entries",
                cap: self.matrix_cap,
            });
        }
        let mut m = vec![vec![0i128; cols.len()]; rows.len()];
        for (c, &f) in cols.iter().enumerate() {
            let mut sign = 1i128;
            for bit in 0..32 {
                if f >> bit & 1 == 0 {
                    continue;
                }
                let face = f & !(1 << bit);
                if let Ok(r) = rows.binary_search(&face) {
                    m[r][c] = sign;
                }
                sign = -sign;
            }
        }
        Ok(match rank_i128(m.clone()) {
            Some(r) => r,
            None => rank_bigint(m),
        })
    }
}

/// Bareiss elimination; `None` on overflow.
fn rank_i128(mut m: Vec<Vec<i128>>) -> Option<u64> {
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = m[rank][c]
                    .checked_mul(m[r][k])?
                    .checked_sub(m[r][c].checked_mul(m[rank][k])?)?;
                m[r][k] = v / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank as u64)
}

fn rank_bigint(m: Vec<Vec<i128>>) -> u64 {
    let mut m: Vec<Vec<BigInt>> = m
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = &m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k];
                m[r][k] = v / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fold::{fold_generators, Multiplicities};
    use crate::monomial::{minimalize, Exponent};

    fn entries(t: &BettiTable) -> Vec<(usize, u64, u64)> {
        t.entries()
            .map(|(i, j, v)| (i, j, v.try_into().unwrap()))
            .collect()
    }

    #[test]
    fn maximal_ideal_in_two_variables() {
        let t = betti_koszul_oracle(&MonomialIdeal::maximal(2), 2).unwrap();
        assert_eq!(entries(&t), vec![(0, 0, 1), (1, 1, 2), (2, 2, 1)]);
    }

    #[test]
    fn squarefree_quadrics_match_quotients() {
        let i = fold_generators(&Multiplicities::new(2, vec![1, 1, 1]).unwrap());
        let t = betti_koszul_oracle(&i, 3).unwrap();
        let (_, lq) = super::super::linear_quotients_resolution(&i).unwrap();
        assert_eq!(t, lq);
        assert_eq!(entries(&t), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
    }

    #[test]
    fn worked_table_by_homology() {
        let i = fold_generators(&Multiplicities::uniform(4, 3, 2).unwrap());
        let t = betti_koszul_oracle(&i, 4).unwrap();
        assert_eq!(
            entries(&t),
            vec![(0, 0, 1), (1, 3, 16), (2, 4, 33), (3, 5, 24), (4, 6, 6)]
        );
    }

    #[test]
    fn asymmetric_ideal_uses_the_full_box() {
        // <z1^2, z1 z2> = z1 <z1, z2>
        let i = minimalize(
            vec![Exponent::new(vec![2, 0]), Exponent::new(vec![1, 1])],
            2,
        )
        .unwrap();
        let t = betti_koszul_oracle(&i, 2).unwrap();
        assert_eq!(entries(&t), vec![(0, 0, 1), (1, 2, 2), (2, 3, 1)]);
    }

    #[test]
    fn non_linear_resolution() {
        // complete intersection <z1^2, z2^3>
        let i = minimalize(
            vec![Exponent::new(vec![2, 0]), Exponent::new(vec![0, 3])],
            2,
        )
        .unwrap();
        let t = betti_koszul_oracle(&i, 2).unwrap();
        assert_eq!(
            entries(&t),
            vec![(0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 5, 1)]
        );
    }

    #[test]
    fn max_i_truncates() {
        let t = betti_koszul_oracle(&MonomialIdeal::maximal(3), 1).unwrap();
        assert_eq!(entries(&t), vec![(0, 0, 1), (1, 1, 3)]);
    }

    #[test]
    fn caps_are_enforced() {
        let i = fold_generators(&Multiplicities::uniform(4, 3, 2).unwrap());
        assert!(matches!(
            betti_koszul_oracle_capped(&i, 4, 1, DEFAULT_MULTIDEGREE_CAP),
            Err(Error::Resource { .. })
        ));
        assert!(matches!(
            betti_koszul_oracle_capped(&i, 4, DEFAULT_MATRIX_CAP, 3),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn bareiss_agrees_with_bigint() {
        let m = vec![vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]];
        assert_eq!(rank_i128(m.clone()), Some(2));
        assert_eq!(rank_bigint(m), 2);
    }

    #[test]
    fn zero_ideal() {
        let t = betti_koszul_oracle(&MonomialIdeal::zero(3), 3).unwrap();
        assert_eq!(entries(&t), vec![(0, 0, 1)]);
    }
}
