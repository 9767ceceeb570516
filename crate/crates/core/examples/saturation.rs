//! Which uniform fold products are saturated, against the predicted
//! threshold `a > (b - 1)s + 1`.

use foldprod::fold::{fold_generators, uniform_params};

fn main() -> foldprod::Result<()> {
    let (s, b) = (4, 3);
    println!(" a  saturated  predicted  alpha(sat)");
    for a in b..=s * b {
        let p = uniform_params(s, a, b)?;
        let ideal = fold_generators(&p.multiplicities());
        let sat = ideal.saturate()?;
        println!(
            "{a:>2}  {:>9}  {:>9}  {:>10}",
            sat == ideal,
            p.saturated_regime(),
            sat.alpha()?
        );
    }
    Ok(())
}
