//! Symbolic defect of `I_7(z_1^2 ··· z_5^2)` at `m = 2`, by formula and by
//! listing the generators of `I^(2)` that are missing from `I^2`.

use foldprod::fold::uniform_params;
use foldprod::symbolic::{sdefect, sdefect_oracle, DefectMode, Flavor, SymbolicSpec};

fn main() -> foldprod::Result<()> {
    let params = uniform_params(5, 7, 2)?;
    for flavor in [Flavor::Ordinary, Flavor::Star] {
        for m in 1..=3 {
            let spec = SymbolicSpec::new(params, m, flavor)?;
            let formula = sdefect(&spec, DefectMode::Formula)?;
            let (oracle, survivors) = sdefect_oracle(&spec)?;
            println!("{flavor:>8} m={m}: formula {formula:>4}  oracle {oracle:>4}");
            if m == 2 && flavor == Flavor::Ordinary {
                for l in survivors {
                    println!("           {:?} x{}", l.entries(), l.orbit_size());
                }
            }
        }
    }
    Ok(())
}
