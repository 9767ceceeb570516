use super::BettiTable;
use crate::error::{Error, Result};
use crate::fold::UniformParams;

/// `(projdim(T/I^{(m)}), reg(T/I^{(m)})) = (s - δ, m(μ0 + b(s - c0)) - 1)` for
/// the uniform ideal in its saturated range.
pub fn homological_invariants(params: &UniformParams, m: u32) -> Result<(u64, u64)> {
    if !params.saturated_regime() {
        return Err(Error::Regime(format!(
            "need a > (b-1)s+1, got s={}, a={}, b={}",
            params.s, params.a, params.b
        )));
    }
    if m == 0 {
        return Err(Error::Parameter("m must be positive".into()));
    }
    let projdim = params.s as u64 - params.delta as u64;
    let top = m as u64 * (params.mu0 as u64 + params.b as u64 * (params.s - params.c0) as u64);
    Ok((projdim, top - 1))
}

/// `d(a + p - 1) - p`, the regularity of the degree-`d` specialization.
pub fn scaled_regularity(a: u64, p: u64, d: u64) -> i64 {
    (d * (a + p - 1)) as i64 - p as i64
}

/// A table reindexed by `j ↦ d j`. When `d > 1` the entries are upper bounds
/// for the specialized ideal rather than its exact Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledTable {
    pub table: BettiTable,
    pub d: u64,
    pub upper_bounds: bool,
}

/// Rescales the internal degrees of an equigenerated table by `d`.
pub fn koszul_scale_report(table: &BettiTable, d: u64, a: u64) -> Result<ScaledTable> {
    if d == 0 {
        return Err(Error::Parameter("d must be positive".into()));
    }
    let ideal = table.to_ideal();
    if ideal.entries().any(|(i, j, _)| i == 0 && j != a) {
        return Err(Error::Precondition(format!(
            "table is not generated in the single degree {a}"
        )));
    }
    let mut out = BettiTable::new(table.convention());
    for (i, j, v) in table.entries() {
        out.add(i, d * j, v.clone());
    }
    Ok(ScaledTable {
        table: out,
        d,
        upper_bounds: d > 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fold::uniform_params;
    use crate::resolution::Convention;
    use num_bigint::BigUint;

    fn worked() -> BettiTable {
        let mut t = BettiTable::new(Convention::Ideal);
        for (i, v) in [16u32, 33, 24, 6].into_iter().enumerate() {
            t.add(i, 3 + i as u64, BigUint::from(v));
        }
        t
    }

    #[test]
    fn closed_invariants() {
        let p = uniform_params(5, 7, 2).unwrap();
        assert_eq!(homological_invariants(&p, 1).unwrap(), (4, 6));
        assert_eq!(homological_invariants(&p, 2).unwrap(), (4, 13));
        let p = uniform_params(4, 8, 2).unwrap();
        assert_eq!(homological_invariants(&p, 1).unwrap().0, 1);
        let p = uniform_params(4, 3, 2).unwrap();
        assert!(matches!(
            homological_invariants(&p, 1),
            Err(Error::Regime(_))
        ));
    }

    #[test]
    fn scaling() {
        let t = worked();
        assert_eq!(koszul_scale_report(&t, 1, 3).unwrap().table, t);
        let r = koszul_scale_report(&t, 2, 3).unwrap();
        assert!(r.upper_bounds);
        for i in 0..4usize {
            assert_eq!(r.table.get(i, 2 * (3 + i as u64)), t.get(i, 3 + i as u64));
        }
        assert!(koszul_scale_report(&t, 2, 4).is_err());
        assert_eq!(
            koszul_scale_report(&t.to_quotient(), 2, 3)
                .unwrap()
                .table
                .get(0, 0),
            1u32.into()
        );
    }

    #[test]
    fn scaled_regularity_value() {
        assert_eq!(scaled_regularity(3, 3, 2), 7);
        assert_eq!(scaled_regularity(3, 3, 1), 2);
    }
}
