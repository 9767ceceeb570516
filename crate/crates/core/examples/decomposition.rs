//! A fold product as an intersection of variable-power ideals, including a
//! non-uniform example.

use foldprod::fold::{colon_step_check, fold_generators, regular_decomposition, Multiplicities};

fn main() -> foldprod::Result<()> {
    for (a, m) in [
        (3, vec![2, 2, 2]),
        (4, vec![1, 2, 3]),
        (2, vec![1, 1, 1, 1]),
    ] {
        let mult = Multiplicities::new(a, m.clone())?;
        let ideal = fold_generators(&mult);
        let same = regular_decomposition(&mult)? == ideal;
        let colons: Vec<bool> = (0..mult.s())
            .map(|i| colon_step_check(&mult, i))
            .collect::<foldprod::Result<_>>()?;
        println!("a={a} m={m:?}");
        println!("  I = {ideal}");
        println!("  decomposition reproduces I: {same}");
        println!("  colon identity per index:   {colons:?}");
    }
    Ok(())
}
