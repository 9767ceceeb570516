//! Ordinary and star symbolic powers side by side, and the containment of
//! `I^m` in `𝔪 I^(m)_*` that fails exactly when `b` divides `a`.

use foldprod::fold::uniform_params;
use foldprod::symbolic::{power_vs_star_check, symbolic_power, Flavor, SymbolicSpec};

fn main() -> foldprod::Result<()> {
    let params = uniform_params(4, 6, 2)?;
    for flavor in [Flavor::Ordinary, Flavor::Star] {
        let sym = symbolic_power(&SymbolicSpec::new(params, 2, flavor)?)?;
        println!(
            "{flavor} I^(2): {} generators, alpha {}",
            sym.generator_count(),
            sym.alpha()?
        );
        for l in sym.lambdas() {
            println!("  {:?}", l.entries());
        }
    }
    for (s, a, b) in [(4, 6, 2), (4, 7, 2), (3, 6, 3), (3, 5, 3)] {
        let p = uniform_params(s, a, b)?;
        println!(
            "({s},{a},{b}): I^m not in m*I^(m)_* = {}, b | a = {}",
            power_vs_star_check(&p, 1)?,
            p.a_multiple_of_b()
        );
    }
    Ok(())
}
