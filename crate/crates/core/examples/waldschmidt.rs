//! `α(I^(m))/m` converging to the Waldschmidt constant.

use foldprod::fold::uniform_params;
use foldprod::symbolic::{waldschmidt_check, Flavor};

fn main() -> foldprod::Result<()> {
    let params = uniform_params(5, 7, 2)?;
    for flavor in [Flavor::Ordinary, Flavor::Star] {
        let check = waldschmidt_check(&params, flavor, 10)?;
        println!("{flavor}: constant {}", check.closed);
        for (m, ratio) in &check.ratios {
            println!("  m={m:>2}  {ratio}");
        }
        println!("  passed: {}", check.passed());
    }
    Ok(())
}
