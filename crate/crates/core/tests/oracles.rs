//! Closed formulas against independent brute-force computations on full
//! grids.

use foldprod::checks::{oracle_triangle, Status};
use foldprod::fold::{fold_generators, uniform_params, UniformParams};
use foldprod::monomial::{MonomialIdeal, VarPowerIdeal, DEFAULT_GEN_CAP};
use foldprod::partition::SymmetricIdeal;
use foldprod::resolution::{betti_koszul_oracle, linear_quotients_resolution};
use foldprod::symbolic::{
    ordinary_thresholds, sdefect, symbolic_power, DefectMode, Flavor, SymbolicSpec,
};

fn grid(s_max: u32, b_max: u32) -> Vec<UniformParams> {
    let mut out = Vec::new();
    for s in 2..=s_max {
        for b in 1..=b_max {
            for a in b..=s * b {
                out.push(uniform_params(s, a, b).unwrap());
            }
        }
    }
    out
}

fn subsets(s: usize, c: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << s) {
        if mask.count_ones() as usize == c {
            out.push((0..s).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

/// `∩_c ∩_{|S| = c} ⟨z_S⟩^{t_c}` over the ordinary thresholds.
fn explicit_intersection(p: &UniformParams, m: u32) -> MonomialIdeal {
    let s = p.s as usize;
    let mut acc = MonomialIdeal::unit(s);
    for (c, t) in ordinary_thresholds(p, m) {
        for support in subsets(s, c) {
            let v = VarPowerIdeal::new(&support, t as u32, s).unwrap();
            acc = v.intersect_with(&acc, DEFAULT_GEN_CAP).unwrap();
        }
    }
    acc
}

#[test]
fn threshold_rule_matches_explicit_intersection() {
    for p in grid(5, 2) {
        for m in 1..=3 {
            let Ok(spec) = SymbolicSpec::new(p, m, Flavor::Ordinary) else {
                continue;
            };
            let sym = symbolic_power(&spec).unwrap();
            assert_eq!(sym.expand(), explicit_intersection(&p, m), "{p:?} m={m}");
        }
    }
}

#[test]
fn ordinary_defect_formula_matches_oracle() {
    for p in grid(6, 3) {
        for m in 1..=3 {
            let Ok(spec) = SymbolicSpec::new(p, m, Flavor::Ordinary) else {
                continue;
            };
            assert_eq!(
                sdefect(&spec, DefectMode::Formula).unwrap(),
                sdefect(&spec, DefectMode::Oracle).unwrap(),
                "{p:?} m={m}"
            );
        }
    }
}

#[test]
fn star_defect_formula_matches_oracle() {
    for p in grid(6, 3) {
        for m in 1..=3 {
            let Ok(spec) = SymbolicSpec::new(p, m, Flavor::Star) else {
                continue;
            };
            assert_eq!(
                sdefect(&spec, DefectMode::Formula).unwrap(),
                sdefect(&spec, DefectMode::Oracle).unwrap(),
                "{p:?} m={m}"
            );
        }
    }
}

#[test]
fn triangle_on_plain_fold_products() {
    for p in grid(4, 3) {
        let ideal = fold_generators(&p.multiplicities());
        let sym = SymmetricIdeal::from_ideal(&ideal).unwrap();
        let out = oracle_triangle(&sym).unwrap();
        assert_eq!(out.status, Status::Pass, "{p:?}: {}", out.payload);
    }
}

#[test]
fn quotients_match_koszul_on_non_uniform_products() {
    for m in [
        vec![1, 2],
        vec![1, 2, 3],
        vec![3, 1, 2],
        vec![2, 2, 1, 1],
        vec![1, 3, 1, 2],
    ] {
        let total: u32 = m.iter().sum();
        for a in 1..=total {
            let mult = foldprod::fold::Multiplicities::new(a, m.clone()).unwrap();
            let ideal = fold_generators(&mult);
            let (order, table) = linear_quotients_resolution(&ideal).unwrap();
            assert!(order.verified);
            assert_eq!(
                table,
                betti_koszul_oracle(&ideal, ideal.s()).unwrap(),
                "a={a} m={m:?}"
            );
        }
    }
}

#[test]
fn star_powers_of_larger_tuples_resolve() {
    for (s, a, b, m) in [(6, 7, 2, 2), (6, 5, 2, 3), (7, 4, 1, 3), (5, 10, 3, 2)] {
        let spec = SymbolicSpec::new(uniform_params(s, a, b).unwrap(), m, Flavor::Star).unwrap();
        let sym = symbolic_power(&spec).unwrap();
        let out = oracle_triangle(&sym).unwrap();
        assert_eq!(out.status, Status::Pass, "({s},{a},{b}) m={m}");
    }
}
