//! Formula-versus-oracle checks on a single parameter tuple. The sweep, the
//! `verify` harness and the acceptance suite all run these.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fold::{
    colon_step_check, fold_generators, regular_decomposition, saturation_decomposition_check,
    Multiplicities, UniformParams,
};
use crate::partition::SymmetricIdeal;
use crate::resolution::{
    betti_closed, betti_koszul_oracle, homological_invariants, is_symmetric_shifted,
    linear_quotients_resolution,
};
use crate::symbolic::{
    power_vs_star_check, resurgence_search, sdefect, symbolic_power, waldschmidt_check, DefectMode,
    Flavor, SymbolicSpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    Decomposition,
    Colon,
    Saturation,
    Homological,
    Resurgence,
    Sdefect,
    PowerVsStar,
    Shifted,
    Waldschmidt,
}

impl CheckName {
    pub const ALL: [CheckName; 9] = [
        CheckName::Decomposition,
        CheckName::Colon,
        CheckName::Saturation,
        CheckName::Homological,
        CheckName::Resurgence,
        CheckName::Sdefect,
        CheckName::PowerVsStar,
        CheckName::Shifted,
        CheckName::Waldschmidt,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Decomposition => "decomposition",
            CheckName::Colon => "colon",
            CheckName::Saturation => "saturation",
            CheckName::Homological => "homological",
            CheckName::Resurgence => "resurgence",
            CheckName::Sdefect => "sdefect",
            CheckName::PowerVsStar => "power-vs-star",
            CheckName::Shifted => "shifted",
            CheckName::Waldschmidt => "waldschmidt",
        }
    }

    /// Whether the check depends on the symbolic flavor.
    pub fn flavored(self) -> bool {
        matches!(
            self,
            CheckName::Resurgence
                | CheckName::Sdefect
                | CheckName::Shifted
                | CheckName::Waldschmidt
        )
    }

    /// Whether the check runs once per `m`.
    pub fn per_m(self) -> bool {
        matches!(
            self,
            CheckName::Homological
                | CheckName::Sdefect
                | CheckName::PowerVsStar
                | CheckName::Shifted
        )
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    OutOfRegime,
    ResourceLimit,
}

/// The status of one check together with the values it compared.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Outcome {
    pub status: Status,
    pub payload: Value,
}

impl Outcome {
    fn verdict(ok: bool, payload: Value) -> Self {
        Outcome {
            status: if ok { Status::Pass } else { Status::Fail },
            payload,
        }
    }

    /// Maps an error to its record status: regime and resource errors are
    /// not failures.
    pub fn from_error(err: &Error) -> Self {
        let status = match err {
            Error::Regime(_) => Status::OutOfRegime,
            Error::Resource { .. } => Status::ResourceLimit,
            _ => Status::Fail,
        };
        Outcome {
            status,
            payload: json!({ "error": err.to_string() }),
        }
    }
}

/// Knobs for the checks that search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLimits {
    pub m_max: u32,
    pub r_max: u32,
}

impl Default for CheckLimits {
    fn default() -> Self {
        CheckLimits {
            m_max: 12,
            r_max: 12,
        }
    }
}

/// Runs `check` on `(s, a, b)`, with `m` and `flavor` where they apply.
/// Errors become records rather than propagating.
pub fn run_check(
    check: CheckName,
    params: &UniformParams,
    m: u32,
    flavor: Flavor,
    limits: &CheckLimits,
) -> Outcome {
    let result = match check {
        CheckName::Decomposition => decomposition(&params.multiplicities()),
        CheckName::Colon => colon(&params.multiplicities()),
        CheckName::Saturation => saturation(params),
        CheckName::Homological => homological(params, m),
        CheckName::Resurgence => resurgence(params, flavor, limits),
        CheckName::Sdefect => defect(params, m, flavor),
        CheckName::PowerVsStar => power_vs_star(params, m),
        CheckName::Shifted => shifted(params, m, flavor),
        CheckName::Waldschmidt => waldschmidt_sequence(params, flavor, limits),
    };
    result.unwrap_or_else(|e| Outcome::from_error(&e))
}

/// The decomposition over variable subsets reproduces the generators.
pub fn decomposition(mult: &Multiplicities) -> Result<Outcome> {
    let ok = regular_decomposition(mult)? == fold_generators(mult);
    Ok(Outcome::verdict(ok, json!({ "equal": ok })))
}

/// The colon identity holds at every index.
pub fn colon(mult: &Multiplicities) -> Result<Outcome> {
    let mut failed = Vec::new();
    for i in 0..mult.s() {
        if !colon_step_check(mult, i)? {
            failed.push(i + 1);
        }
    }
    Ok(Outcome::verdict(
        failed.is_empty(),
        json!({ "failed_indices": failed }),
    ))
}

/// `I` is saturated exactly when `δ ≥ 1`, and its saturation is the
/// decomposition without the top component.
pub fn saturation(params: &UniformParams) -> Result<Outcome> {
    let mult = params.multiplicities();
    let saturated = fold_generators(&mult).is_saturated()?;
    let decomposition = saturation_decomposition_check(&mult)?;
    let ok = saturated == params.saturated_regime() && decomposition;
    Ok(Outcome::verdict(
        ok,
        json!({
            "saturated": saturated,
            "expected_saturated": params.saturated_regime(),
            "matches_decomposition": decomposition,
        }),
    ))
}

/// Projective dimension and regularity of `T/I^{(m)}` read off the closed
/// Betti table agree with `s - δ` and `m(μ0 + b(s - c0)) - 1`.
pub fn homological(params: &UniformParams, m: u32) -> Result<Outcome> {
    let (projdim, reg) = homological_invariants(params, m)?;
    let sym = symbolic_power(&SymbolicSpec::new(*params, m, Flavor::Ordinary)?)?;
    let table = betti_closed(&sym)?.to_quotient();
    let got_pd = table.projdim().map(|x| x as u64);
    let got_reg = table.regularity();
    let ok = got_pd == Some(projdim) && got_reg == Some(reg as i64);
    Ok(Outcome::verdict(
        ok,
        json!({
            "projdim": projdim,
            "reg": reg,
            "projdim_from_table": got_pd,
            "reg_from_table": got_reg,
        }),
    ))
}

/// The search finds no non-containment at or above the closed resurgence,
/// and some non-containment within `1/2` of it.
pub fn resurgence(params: &UniformParams, flavor: Flavor, limits: &CheckLimits) -> Result<Outcome> {
    let report = resurgence_search(params, flavor, limits.m_max, limits.r_max)?;
    let half = BigRational::new(1.into(), 2.into());
    let sound = report.sound();
    let approaches = report.approaches(&half);
    Ok(Outcome::verdict(
        sound && approaches,
        json!({
            "closed": report.closed,
            "max_ratio": report.max_ratio,
            "witnesses": report.witnesses.len(),
            "sound": sound,
            "approaches": approaches,
        }),
    ))
}

/// The symbolic defect formula agrees with the generator count.
pub fn defect(params: &UniformParams, m: u32, flavor: Flavor) -> Result<Outcome> {
    let spec = SymbolicSpec::new(*params, m, flavor)?;
    let formula = sdefect(&spec, DefectMode::Formula)?;
    let oracle = sdefect(&spec, DefectMode::Oracle)?;
    Ok(Outcome::verdict(
        formula == oracle,
        json!({ "formula": formula.to_string(), "oracle": oracle.to_string() }),
    ))
}

/// `I^m ⊄ 𝔪 I^{(m)_*}` exactly when `b` divides `a`.
pub fn power_vs_star(params: &UniformParams, m: u32) -> Result<Outcome> {
    let got = power_vs_star_check(params, m)?;
    let want = params.a_multiple_of_b();
    Ok(Outcome::verdict(
        got == want,
        json!({ "not_contained": got, "b_divides_a": want }),
    ))
}

/// The symbolic power is symmetric shifted and the three Betti routes agree.
pub fn shifted(params: &UniformParams, m: u32, flavor: Flavor) -> Result<Outcome> {
    let sym = symbolic_power(&SymbolicSpec::new(*params, m, flavor)?)?;
    oracle_triangle(&sym)
}

/// Closed formula, linear quotients and Koszul homology on one symmetric
/// ideal.
pub fn oracle_triangle(sym: &SymmetricIdeal) -> Result<Outcome> {
    let is_shifted = is_symmetric_shifted(sym);
    if !is_shifted {
        return Ok(Outcome::verdict(false, json!({ "shifted": false })));
    }
    let closed = betti_closed(sym)?.to_quotient();
    let ideal = sym.expand();
    let (order, quotients) = linear_quotients_resolution(&ideal)?;
    let koszul = betti_koszul_oracle(&ideal, sym.s())?;
    let ok = closed == quotients && closed == koszul;
    Ok(Outcome::verdict(
        ok,
        json!({
            "shifted": true,
            "linear_quotients": order.verified,
            "closed_eq_quotients": closed == quotients,
            "closed_eq_koszul": closed == koszul,
            "table": closed.to_rows(),
        }),
    ))
}

/// `α(I^{(m)})/m` stays above the closed constant, within `s/m` of it, and
/// matches the closed `α`.
pub fn waldschmidt_sequence(
    params: &UniformParams,
    flavor: Flavor,
    limits: &CheckLimits,
) -> Result<Outcome> {
    let check = waldschmidt_check(params, flavor, limits.m_max)?;
    Ok(Outcome::verdict(
        check.passed(),
        serde_json::to_value(&check).unwrap_or(Value::Null),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fold::uniform_params;

    #[test]
    fn names_round_trip() {
        for c in CheckName::ALL {
            assert_eq!(c.as_str().parse::<CheckName>().unwrap(), c);
            assert_eq!(serde_json::to_value(c).unwrap(), json!(c.as_str()));
        }
        assert!("nope".parse::<CheckName>().is_err());
    }

    #[test]
    fn worked_tuple_passes_everything() {
        let p = uniform_params(5, 7, 2).unwrap();
        let limits = CheckLimits::default();
        for check in CheckName::ALL {
            for flavor in [Flavor::Ordinary, Flavor::Star] {
                let out = run_check(check, &p, 2, flavor, &limits);
                assert_eq!(
                    out.status,
                    Status::Pass,
                    "{check} {flavor}: {}",
                    out.payload
                );
            }
        }
    }

    #[test]
    fn regime_errors_are_not_failures() {
        let p = uniform_params(4, 3, 2).unwrap();
        let out = run_check(
            CheckName::Homological,
            &p,
            1,
            Flavor::Ordinary,
            &CheckLimits::default(),
        );
        assert_eq!(out.status, Status::OutOfRegime);
        let out = run_check(
            CheckName::Saturation,
            &p,
            1,
            Flavor::Ordinary,
            &CheckLimits::default(),
        );
        assert_eq!(out.status, Status::Pass);
    }
}
