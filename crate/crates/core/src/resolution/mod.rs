//! Graded Betti tables of monomial ideals.
//!
//! Three independent routes produce the same numbers for symmetric shifted
//! ideals:
//!
//! * [`betti_closed`] evaluates the closed partition formula,
//! * [`linear_quotients_resolution`] builds the resolution from a verified
//!   linear-quotients order,
//! * [`betti_koszul_oracle`] computes Koszul homology strand by strand with
//!   exact integer elimination.

mod closed;
mod invariants;
mod koszul;
mod quotients;
mod table;

pub use closed::{betti_closed, is_symmetric_shifted, lambda_set};
pub use invariants::{homological_invariants, koszul_scale_report, scaled_regularity, ScaledTable};
pub use koszul::{
    betti_koszul_oracle, betti_koszul_oracle_capped, DEFAULT_MATRIX_CAP, DEFAULT_MULTIDEGREE_CAP,
};
pub use quotients::{
    linear_quotients_resolution, quotient_order, search_linear_quotients_order, standard_order,
    QuotientOrder,
};
pub use table::{BettiRow, BettiTable, Convention};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc *= BigUint::from((n - t) as u64);
        acc /= BigUint::from((t + 1) as u64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::binomial;
    use num_bigint::BigUint;

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(4, 0), BigUint::from(1u32));
        assert_eq!(binomial(4, 5), BigUint::from(0u32));
        assert_eq!(binomial(4, -1), BigUint::from(0u32));
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
    }
}
